#include "endgraph/degree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "endgraph/ends.hpp"
#include "endgraph/error.hpp"

namespace endgraph {

Estimate operator+(Estimate a, Estimate b) { return {a.value + b.value, a.capped || b.capped}; }

std::vector<std::string> smaller_ends(const Presentation& p, const std::string& end) {
  std::set<std::string> done;
  std::vector<std::string> order;
  std::set<std::string> active;
  std::function<void(const std::string&)> visit = [&](const std::string& name) {
    if (!active.insert(name).second) {
      throw PresentationError("smaller_ends of '" + name + "' form a cycle");
    }
    for (const auto& s : p.end(name).smaller_ends) {
      if (!done.contains(s)) visit(s);
      if (active.contains(s)) throw PresentationError("smaller_ends of '" + s + "' form a cycle");
    }
    active.erase(name);
    done.insert(name);
    order.push_back(name);
  };
  visit(end);
  order.pop_back();  // the end itself
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<std::string> omega_minus(const Presentation& p, const LevelledDigraph& g,
                                     const std::string& end, std::size_t t) {
  std::vector<std::string> result;
  for (const auto& name : smaller_ends(p, end)) {
    if (in_degree_estimate(g, p.end(name), t) >= 1) result.push_back(name);
  }
  return result;
}

namespace {

/// eta <= mu in the declared order.
bool below(const Presentation& p, const std::string& eta, const std::string& mu) {
  if (eta == mu) return true;
  const auto s = smaller_ends(p, mu);
  return std::binary_search(s.begin(), s.end(), eta);
}

/// B in an order compatible with <=, ties by name, `end` last.
std::vector<std::string> order_b(const Presentation& p, std::vector<std::string> B,
                                 const std::string& end) {
  std::erase(B, end);
  std::sort(B.begin(), B.end());
  std::vector<std::string> ordered;
  while (!B.empty()) {
    for (auto it = B.begin(); it != B.end(); ++it) {
      bool minimal = true;
      for (const auto& other : B) {
        if (other != *it && below(p, other, *it)) minimal = false;
      }
      if (minimal) {
        ordered.push_back(*it);
        B.erase(it);
        break;
      }
    }
  }
  ordered.push_back(end);
  return ordered;
}

}  // namespace

std::optional<std::string> check_plan(const Presentation& p, const std::string& end,
                                      const std::vector<std::string>& omega_minus_names,
                                      const PartitionPlan& plan) {
  if (plan.B.empty() || std::find(plan.B.begin(), plan.B.end(), end) == plan.B.end()) {
    return "the end must lie in B";
  }
  std::vector<std::string> all(plan.A);
  all.insert(all.end(), plan.B.begin(), plan.B.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return "A and B overlap";
  std::vector<std::string> expected(omega_minus_names);
  expected.push_back(end);
  std::sort(expected.begin(), expected.end());
  if (all != expected) return "A and B do not cover the smaller ends and the end";
  for (std::size_t i = 0; i < plan.B.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (plan.B[i] != plan.B[j] && below(p, plan.B[i], plan.B[j])) {
        return "B lists " + plan.B[j] + " before the smaller end " + plan.B[i];
      }
    }
  }
  return std::nullopt;
}

SeparatorCertificate end_separator(const Presentation& p, const LevelledDigraph& g,
                                   const std::vector<std::string>& A,
                                   const std::vector<std::string>& B,
                                   const VertexSet& extra_targets) {
  std::vector<Vertex> tails;
  for (const auto& name : B) {
    for (Vertex v : canonical_ray(g, p.end(name))) {
      if (2 * g.level(v) >= g.depth()) tails.push_back(v);
    }
  }
  std::vector<Vertex> a_rays;
  for (const auto& name : A) {
    const auto r = canonical_ray(g, p.end(name));
    a_rays.insert(a_rays.end(), r.begin(), r.end());
  }
  std::vector<Vertex> targets(a_rays);
  targets.insert(targets.end(), extra_targets.begin(), extra_targets.end());
  std::vector<Vertex> protect(tails);
  protect.insert(protect.end(), a_rays.begin(), a_rays.end());
  // Closest to the targets: the source-closest cut of the reversed digraph.
  auto cert = min_vertex_separator(reverse(g), targets, tails, protect);
  std::swap(cert.sources, cert.targets);
  return cert;
}

DeltaMinus delta_minus(const Presentation& p, const LevelledDigraph& g, const std::string& end,
                       std::size_t t) {
  const auto& omega = p.end(end);
  const auto minus = omega_minus(p, g, end, t);
  if (minus.size() > 15) {
    throw PreconditionError("too many smaller ends (" + std::to_string(minus.size()) + ") to enumerate");
  }
  const auto dominators = certified_dominators(g, omega, t);
  std::map<std::string, Estimate> degree;
  auto in_degree = [&](const std::string& name) {
    auto it = degree.find(name);
    if (it != degree.end()) return it->second;
    const auto v = in_degree_estimate(g, p.end(name), t);
    return degree[name] = Estimate{v, v >= t};
  };

  std::optional<DeltaMinus> best;
  for (std::uint32_t mask = 0; mask < (1u << minus.size()); ++mask) {
    PartitionPlan plan;
    std::vector<std::string> B;
    for (std::size_t i = 0; i < minus.size(); ++i) {
      if (mask & (1u << i)) plan.A.push_back(minus[i]);
      else B.push_back(minus[i]);
    }
    plan.B = order_b(p, B, end);
    try {
      plan.S = end_separator(p, g, plan.A, plan.B, dominators).separator;
    } catch (const InfeasibleError&) {
      continue;
    }
    DeltaMinus cand;
    cand.value = Estimate{plan.S.size(), false};
    for (const auto& name : plan.B) {
      cand.b_degrees.push_back(in_degree(name));
      cand.value = cand.value + cand.b_degrees.back();
    }
    cand.plan = std::move(plan);
    if (!best) {
      best = std::move(cand);
      continue;
    }
    const auto& cur = *best;
    const bool better =
        cand.value.value < cur.value.value ||
        (cand.value.value == cur.value.value &&
         std::tuple(cand.plan.B.size(), cand.plan.B, cand.plan.S) <
             std::tuple(cur.plan.B.size(), cur.plan.B, cur.plan.S));
    if (better) best = std::move(cand);
  }
  if (!best) throw InfeasibleError("no partition admits a separator at depth " + std::to_string(g.depth()));
  return *best;
}

ExhaustingSequence partition_sequence(const Presentation& p, const LevelledDigraph& g,
                                      const PartitionPlan& plan, std::size_t t) {
  std::vector<ExhaustingSequence> per_end;
  std::vector<Vertex> s(plan.S.begin(), plan.S.end());
  for (const auto& name : plan.B) {
    const auto& eta = p.end(name);
    const auto d = in_degree_estimate(g, eta, t);
    auto graded = graded_sequence(g, eta, s, d);
    if (graded.contradiction_flow) {
      throw InfeasibleError("graded sequence for '" + name + "' found " +
                            std::to_string(*graded.contradiction_flow) + " > " + std::to_string(d) +
                            " disjoint witnesses");
    }
    if (graded.sequence.sets.empty()) {
      throw InfeasibleError("graded sequence for '" + name + "' is empty");
    }
    const auto& first = graded.sequence.sets.front();
    s.insert(s.end(), first.begin(), first.end());
    per_end.push_back(std::move(graded.sequence));
  }
  return sequence_from_partition(plan.S, per_end);
}

namespace {

ExhaustingSequence level_cuts(const LevelledDigraph& g, const Path& ray) {
  ExhaustingSequence seq;
  if (ray.empty()) return seq;
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_hub(v)) hubs.push_back(v);
  }
  const Level width = std::max<Level>(g.span(), 1);
  for (Level l = g.level(ray.front()); l + width - 1 <= g.depth(); ++l) {
    std::vector<Vertex> vs(hubs);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!g.is_hub(v) && g.level(v) >= l && g.level(v) < l + width) vs.push_back(v);
    }
    seq.sets.push_back(make_set(std::move(vs)));
  }
  return seq;
}

/// Level slices of the given rays, `width` levels at a time, plus `base`.
ExhaustingSequence cross_sections(const LevelledDigraph& g, const std::vector<Path>& rays,
                                  const VertexSet& base) {
  ExhaustingSequence seq;
  std::vector<Vertex> all;
  for (const auto& r : rays) all.insert(all.end(), r.begin(), r.end());
  if (all.empty()) return seq;
  Level low = g.depth();
  for (Vertex v : all) low = std::min(low, g.level(v));
  const Level width = std::max<Level>(g.span(), 1);
  for (Level l = low; l + width - 1 <= g.depth(); ++l) {
    std::vector<Vertex> vs(base.begin(), base.end());
    for (Vertex v : all) {
      if (g.level(v) >= l && g.level(v) < l + width) vs.push_back(v);
    }
    seq.sets.push_back(make_set(std::move(vs)));
  }
  return seq;
}

ExhaustingSequence with_base(ExhaustingSequence seq, const VertexSet& base) {
  for (auto& s : seq.sets) {
    std::vector<Vertex> v(s.begin(), s.end());
    v.insert(v.end(), base.begin(), base.end());
    s = make_set(std::move(v));
  }
  return seq;
}

}  // namespace

DegreeReport combined_in_degree(const Presentation& p, const LevelledDigraph& g,
                                const std::string& end, std::size_t t) {
  const auto& omega = p.end(end);
  DegreeReport r;
  r.end = end;
  r.depth = g.depth();
  r.threshold = t;
  const auto d = in_degree_estimate(g, omega, t);
  r.d_minus = {d, d >= t};
  if (omega.canonical_antiray) {
    const auto out = out_degree_estimate(g, omega, t);
    r.d_plus = Estimate{out, out >= t};
  }
  r.dominators = certified_dominators(g, omega, t);
  const auto minus = omega_minus(p, g, end, t);

  try {
    const auto cert = end_separator(p, g, minus, {end}, r.dominators);
    r.delta_separator = cert.separator;
    r.delta_cap = r.d_minus + Estimate{cert.separator.size(), false};
  } catch (const InfeasibleError&) {
    r.notes.push_back("no finite separator of the smaller ends and dominators at this depth");
  }

  const auto dm = delta_minus(p, g, end, t);
  r.delta_small = dm.value;
  r.plan = dm.plan;

  const auto ray = canonical_ray(g, omega);
  auto consider = [&](std::string name, ExhaustingSequence seq) {
    if (seq.sets.empty()) return;
    SchemaResult s{std::move(name), std::move(seq), {}};
    s.verdict = verify_exhausting(g, omega, s.sequence);
    if (s.verdict.pass) {
      const auto size = s.sequence.liminf_size();
      if (!r.K_upper || size < r.K_upper->value) {
        r.K_upper = Estimate{size, false};
        r.K_schema = s.name;
      }
    }
    r.schemas.push_back(std::move(s));
  };
  std::vector<Path> rays{ray};
  for (const auto& name : minus) rays.push_back(canonical_ray(g, p.end(name)));
  consider("ray cross-sections", cross_sections(g, rays, r.dominators));
  if (r.delta_cap && !r.d_minus.capped) {
    try {
      auto graded = graded_sequence(g, omega, r.delta_separator, d);
      if (!graded.contradiction_flow) {
        consider("graded sequence + separator", with_base(std::move(graded.sequence), r.delta_separator));
      }
    } catch (const PreconditionError&) {
      r.notes.push_back("fewer than d- disjoint witnesses avoid the separator");
    }
  }
  if (!r.delta_small.capped) {
    try {
      consider("partition sequence", partition_sequence(p, g, dm.plan, t));
    } catch (const Error& e) {
      r.notes.push_back(std::string("partition sequence unavailable: ") + e.what());
    }
  }
  consider("level cuts", level_cuts(g, ray));

  r.notes.push_back("end membership approximated by mutual reachability with the canonical ray in the top two frontier bands");
  r.notes.push_back("in-degree counted from the seed band to the consistent frontier in g minus hubs");
  r.notes.push_back("separators use canonical-ray tails at levels >= depth/2");
  r.notes.push_back("K is an upper bound over verified schemas, liminf taken over the second half of each sequence");
  if (r.d_minus.capped || r.delta_small.capped) {
    r.notes.push_back("values marked >= stopped at the threshold");
  }
  return r;
}

}  // namespace endgraph
