// One PASS/FAIL line per acceptance criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "endgraph/counterexample_checks.hpp"
#include "endgraph/degree.hpp"
#include "endgraph/ends.hpp"
#include "endgraph/error.hpp"
#include "endgraph/exhausting.hpp"
#include "endgraph/families.hpp"
#include "endgraph/flow.hpp"
#include "endgraph/io.hpp"
#include "endgraph/presentation.hpp"
#include "endgraph/proof_steps.hpp"
#include "oracles.hpp"

using namespace endgraph;

namespace {

// first failure wins; later checks still run so timing stays honest
struct Outcome {
  std::string failure;
  void require(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

std::vector<std::vector<std::string>> rows(Level n, std::initializer_list<const char*> prefixes) {
  std::vector<std::vector<std::string>> sets;
  for (Level i = 0; i <= n; ++i) {
    std::vector<std::string> s;
    for (const char* pre : prefixes) s.push_back(pre + std::to_string(i));
    sets.push_back(std::move(s));
  }
  return sets;
}

void example52_values(Outcome& o) {
  const auto p = example52();
  const auto& omega = p.end("omega");
  for (Level depth : {12, 16, 20}) {
    const std::string at = " at depth " + std::to_string(depth);
    const auto g = truncate(p, depth);
    const auto rep = combined_in_degree(p, g, "omega", 5);
    o.require(rep.d_minus == Estimate{1, false}, "d- = " + rep.d_minus.str() + at);
    o.require(rep.dominators.empty(), "dominating set not empty" + at);
    const auto c0 = g.at("c0");
    const auto fan_size = fan(g, c0, canonical_ray(g, omega), 5).size();
    o.require(fan_size == 2, "c0 fan is " + std::to_string(fan_size) + at);
    o.require(!dominates(g, c0, omega, 5), "c0 certified as dominator" + at);
    o.require(rep.delta_cap && *rep.delta_cap == Estimate{2, false}, "Delta- is not 2" + at);
    o.require(rep.delta_separator == VertexSet{c0}, "separator is not {c0}" + at);
    o.require(rep.delta_small == Estimate{2, false}, "delta- = " + rep.delta_small.str() + at);
    o.require(rep.K_upper && *rep.K_upper == Estimate{2, false}, "K_upper is not 2" + at);

    const auto pairs = sequence_from_tags(g, rows(depth, {"b", "a"}));
    const auto pv = verify_exhausting(g, omega, pairs);
    o.require(pv.pass && pairs.liminf_size() == 2, "pair sequence rejected" + at + ": " + pv.reason);
    const auto winner = std::find_if(rep.schemas.begin(), rep.schemas.end(),
                                     [&](const SchemaResult& s) { return s.name == rep.K_schema; });
    o.require(winner != rep.schemas.end() && winner->sequence.sets.size() >= pairs.sets.size() &&
                  std::equal(pairs.sets.begin(), pairs.sets.end(), winner->sequence.sets.begin()),
              "K_upper schema is not the pair sequence" + at);

    const auto singles = sequence_from_tags(g, rows(depth, {"b"}));
    const auto sv = verify_exhausting(g, omega, singles);
    o.require(!sv.pass && sv.witness.has_value(), "singles sequence accepted" + at);
    if (sv.witness) {
      const auto& w = *sv.witness;
      o.require(!check_ray_witness(g, w) && is_end_consistent(g, omega, w), "singles witness is not a ray of omega");
      o.require(std::find(w.path.begin(), w.path.end(), c0) != w.path.end(), "singles witness avoids c0");
      if (sv.index) {
        const auto& next = singles.sets[*sv.index + 1];
        o.require(std::none_of(w.path.begin(), w.path.end(),
                               [&](Vertex v) { return std::binary_search(next.begin(), next.end(), v); }),
                  "singles witness meets the next set");
      }
    }
  }
}

void curated_families(Outcome& o) {
  std::vector<std::pair<std::string, Presentation>> families{{"example52", example52()}};
  for (std::size_t k = 1; k <= 4; ++k) families.emplace_back("krays k=" + std::to_string(k), krays(k));
  for (std::size_t k = 1; k <= 2; ++k)
    for (std::size_t m = 1; m <= 2; ++m)
      families.emplace_back("krays+mdom k=" + std::to_string(k) + " m=" + std::to_string(m), krays(k, m));
  for (const auto& [name, p] : families) {
    const auto g = truncate(p, 20);
    const auto rep = combined_in_degree(p, g, "omega", 5);
    const bool equal = rep.delta_cap && rep.K_upper && !rep.delta_small.capped && rep.delta_small == *rep.delta_cap &&
                       rep.delta_small == *rep.K_upper;
    o.require(equal, name + ": delta- " + rep.delta_small.str() + ", Delta- " +
                         (rep.delta_cap ? rep.delta_cap->str() : "none") + ", K " +
                         (rep.K_upper ? rep.K_upper->str() : "none"));
  }
}

void menger_oracle(Outcome& o) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> size(1, 9);
  std::uniform_real_distribution<double> density(0.15, 0.45);
  for (int instance = 0; instance < 200; ++instance) {
    const std::string at = " on instance " + std::to_string(instance);
    const auto n = size(rng);
    const auto g = oracle::random_digraph(rng, n, density(rng));
    const auto A = oracle::random_subset(rng, n, std::min<std::size_t>(3, n));
    const auto B = oracle::random_subset(rng, n, std::min<std::size_t>(3, n));
    for (auto mode : {Disjointness::vertex, Disjointness::internal, Disjointness::edge}) {
      const auto ps = max_disjoint_dipaths(g, A, B, mode);
      o.require(ps.size() == oracle::max_paths(g, A, B, mode), to_string(mode) + " count differs" + at);
      o.require(!check_path_system(g, ps, A, B), to_string(mode) + " system invalid" + at);
    }
    const auto sep = min_vertex_separator(g, A, B, {});
    o.require(static_cast<int>(sep.separator.size()) == oracle::min_separator(g, A, B, {}),
              "separator size differs" + at);
    o.require(!check_separator(g, sep), "separator does not separate" + at);
    o.require(sep.separator.size() == max_flow_value(g, A, B, Disjointness::vertex), "vertex duality fails" + at);

    std::vector<Vertex> terminals(A);
    terminals.insert(terminals.end(), B.begin(), B.end());
    const int protected_size = oracle::min_separator(g, A, B, terminals);
    if (protected_size < 0) {
      bool threw = false;
      try {
        (void)min_vertex_separator(g, A, B, terminals);
      } catch (const InfeasibleError&) {
        threw = true;
      }
      o.require(threw, "protected separator should be infeasible" + at);
    } else {
      const auto ps = min_vertex_separator(g, A, B, terminals);
      o.require(static_cast<int>(ps.separator.size()) == protected_size, "protected separator differs" + at);
      o.require(ps.separator.size() == max_flow_value(g, A, B, Disjointness::internal), "internal duality fails" + at);
    }
    bool disjoint_ends = true;
    for (Vertex a : A) disjoint_ends = disjoint_ends && !std::binary_search(B.begin(), B.end(), a);
    if (disjoint_ends) {
      const auto es = min_edge_separator(g, A, B);
      o.require(!check_edge_separator(g, es), "edge separator does not separate" + at);
      o.require(es.edges.size() == max_flow_value(g, A, B, Disjointness::edge), "edge duality fails" + at);
    }
  }
}

void counterexample_suite(Outcome& o) {
  const auto rep = verify_counterexample(20);
  for (const auto& c : rep.checks) o.require(c.pass, c.name + ": " + c.detail);
  o.require(rep.checks.size() == 4, "expected four sub-checks");

  // diagonal counts from the defining formula, independent of the checker
  const auto g20 = truncate(counterexample(), 20);
  for (Level i = 2; triangle(i) + i <= 20; ++i) {
    std::size_t count = 0;
    for (Level kp = 1; kp <= i; ++kp) {
      const auto u = g20.find(cx_tag(1, triangle(i) + kp));
      const auto v = g20.find(cx_tag(i, triangle(i - 1) + kp));
      if (u && v && g20.has_edge(*u, *v)) ++count;
    }
    o.require(count == i, "row " + std::to_string(i) + " receives " + std::to_string(count) + " diagonals");
  }

  const auto p = counterexample();
  const auto& omega = p.end("omega");
  std::size_t last_in = 0, last_out = 0;
  for (Level depth = 10; depth <= 36; ++depth) {
    const auto g = truncate(p, depth);
    const auto in = in_degree_estimate(g, omega, 5);
    const auto out = out_degree_estimate(g, omega, 5);
    o.require(in >= last_in && out >= last_out, "degree estimates drop at depth " + std::to_string(depth));
    last_in = in;
    last_out = out;
  }
  o.require(last_in >= 5, "in-degree estimate at 36 is " + std::to_string(last_in));
  o.require(last_out >= 3, "out-degree estimate at 36 is " + std::to_string(last_out));
}

void proof_steps(Outcome& o) {
  {
    const auto p = halfgrid();
    const auto g = truncate(p, 40);
    const auto R = canonical_ray(g, p.end("omega"));
    RayFamilyState s;
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto fresh = fresh_rays(g, R, s, n);
      o.require(fresh.size() == n, "only " + std::to_string(fresh.size()) + " fresh rays for step " + std::to_string(n));
      if (fresh.size() != n) return;
      auto next = extend_ray_family(g, s, fresh, R);
      o.require(next.size() == n, "step " + std::to_string(n) + " has the wrong size");
      if (auto e = check_ray_family(g, next, R)) o.require(false, "step " + std::to_string(n) + ": " + *e);
      if (n > 1) {
        if (auto e = check_extension(s, next)) o.require(false, "step " + std::to_string(n) + ": " + *e);
      }
      s = std::move(next);
    }
  }
  {
    const auto p = ladder(6);
    const auto g = truncate(p, 40);
    const auto [rays, anti] = disjoint_ray_antiray_witnesses(g, p.end("omega"), 3);
    const auto ps = double_rays(g, rays, anti);
    o.require(ps.size() == 3, "ladder gave " + std::to_string(ps.size()) + " double rays");
    if (auto e = check_double_rays(g, ps, rays, anti)) o.require(false, "double rays: " + *e);
  }
}

void edge_analogue(Outcome& o) {
  const auto rep = verify_edge_counterexample(20);
  for (const auto& c : rep.checks) o.require(c.pass, c.name + ": " + c.detail);

  std::mt19937 rng(977);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int instance = 0; instance < 100; ++instance) {
    const auto n = size(rng);
    const auto g = oracle::random_digraph(rng, n, 0.35);
    const auto A = oracle::random_subset(rng, n, std::min<std::size_t>(3, n));
    const auto B = oracle::random_subset(rng, n, std::min<std::size_t>(3, n));
    const auto s = edge_split(g);
    std::vector<Vertex> As, Bs;
    for (Vertex a : A) As.push_back(s.at(split_in(g.tag(a))));
    for (Vertex b : B) Bs.push_back(s.at(split_out(g.tag(b))));
    const auto direct = oracle::max_paths(g, A, B, Disjointness::vertex);
    const auto split = max_flow_value(s, As, Bs, Disjointness::edge);
    o.require(split == direct, "instance " + std::to_string(instance) + ": split edge count " + std::to_string(split) +
                                   " vs vertex count " + std::to_string(direct));
  }
}

// span belongs to the truncation depth, so it is left out
bool same_structure(const LevelledDigraph& a, const LevelledDigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edges() != b.edges()) return false;
  for (Vertex v = 0; v < a.vertex_count(); ++v)
    if (!(a.info(v).id == b.info(v).id) || a.level(v) != b.level(v) || a.is_hub(v) != b.is_hub(v)) return false;
  return true;
}

void infrastructure(Outcome& o) {
  const std::vector<std::pair<std::string, Presentation>> families{
      {"counterexample", counterexample()}, {"example52", example52()}, {"halfgrid", halfgrid()},
      {"ladder", ladder(6)}, {"krays+mdom", krays(2, 1)}};
  for (const auto& [name, p] : families) {
    const auto top = truncate(p, 25);
    for (Level d = 0; d <= 25; ++d) {
      const auto g = truncate(p, d);
      const std::string at = name + " depth " + std::to_string(d);
      o.require(same_structure(restrict_to_depth(top, d), g), "truncation incoherent for " + at);
      o.require(import_json(export_json(g)) == g, "JSON round trip fails for " + at);
      o.require(reverse(reverse(g)) == g, "reverse is not an involution for " + at);
    }
    const auto tags = sequence_tags(top, sequence_from_tags(top, {{top.tag(0)}}));
    o.require(import_sequence(export_sequence(tags)) == tags, "sequence round trip fails for " + name);
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "example52 values", 5, example52_values},
      {2, "curated families delta- = Delta- = K", 30, curated_families},
      {3, "Menger oracle on 200 random digraphs", 60, menger_oracle},
      {4, "counterexample structure and degree growth", 60, counterexample_suite},
      {5, "ray family growth and double rays", 30, proof_steps},
      {6, "edge analogue", 30, edge_analogue},
      {7, "truncation, round trips, reverse", 60, infrastructure},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char limit[64];
    std::snprintf(limit, sizeof limit, "%.2f s exceeds %.0f s", secs, c.limit_s);
    o.require(secs < c.limit_s, limit);
    const bool pass = o.failure.empty();
    all = all && pass;
    std::printf("criterion %d %s: %s (%.2f s)%s%s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs,
                pass ? "" : " - ", o.failure.c_str());
  }
  return all ? 0 : 1;
}
