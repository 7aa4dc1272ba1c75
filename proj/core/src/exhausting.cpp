#include "endgraph/exhausting.hpp"

#include <algorithm>
#include <set>

#include "endgraph/error.hpp"

namespace endgraph {

std::size_t ExhaustingSequence::liminf_size() const {
  if (sets.empty()) return 0;
  std::size_t best = sets.back().size();
  for (std::size_t i = sets.size() / 2; i < sets.size(); ++i) best = std::min(best, sets[i].size());
  return best;
}

ExhaustingSequence sequence_from_tags(const LevelledDigraph& g,
                                      const std::vector<std::vector<std::string>>& sets) {
  ExhaustingSequence seq;
  for (const auto& tags : sets) {
    auto s = g.tags_to_set(tags);
    if (s.empty()) break;
    seq.sets.push_back(std::move(s));
  }
  return seq;
}

std::vector<std::vector<std::string>> sequence_tags(const LevelledDigraph& g,
                                                    const ExhaustingSequence& seq) {
  std::vector<std::vector<std::string>> result;
  for (const auto& s : seq.sets) result.push_back(g.path_tags(s));
  return result;
}

namespace {

Level max_level(const LevelledDigraph& g, const VertexSet& s) {
  Level m = 0;
  for (Vertex v : s) m = std::max(m, g.level(v));
  return m;
}

std::vector<bool> with_hubs(const LevelledDigraph& g, std::vector<bool> mask) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) mask[v] = mask[v] || g.is_hub(v);
  return mask;
}

/// A witness that meets `from` and then reaches `goal` in g - blocked,
/// prefixed, when possible, by a walk from the canonical ray's start.
std::optional<Path> escape(const LevelledDigraph& g, std::span<const Vertex> from,
                           std::span<const Vertex> goal, const std::vector<bool>& blocked,
                           std::span<const Vertex> ray) {
  auto tail = shortest_dipath(g, from, goal, &blocked);
  if (!tail) return std::nullopt;
  if (ray.empty()) return tail;
  const std::vector<Vertex> start{ray.front()};
  const std::vector<Vertex> meet{tail->front()};
  auto head = shortest_dipath(g, start, meet, &blocked);
  if (!head || head->size() < 2) return tail;
  // Re-route the tail around the head so the concatenation stays simple.
  auto avoid = blocked;
  for (std::size_t i = 0; i + 1 < head->size(); ++i) avoid[(*head)[i]] = true;
  auto rerouted = shortest_dipath(g, meet, goal, &avoid);
  if (!rerouted) return tail;
  head->insert(head->end(), rerouted->begin() + 1, rerouted->end());
  return head;
}

}  // namespace

ExhaustingVerdict verify_exhausting(const LevelledDigraph& g, const EndDescriptor& end,
                                    const ExhaustingSequence& seq,
                                    const VerifyExhaustingOptions& options) {
  ExhaustingVerdict verdict;
  const auto ray = canonical_ray(g, end);
  const auto goal = consistent_frontier(g, ray);
  const Level floor = g.frontier_floor();
  const std::vector<bool> none(g.vertex_count(), false);

  for (std::size_t i = 0; i + 1 < seq.sets.size(); ++i) {
    const auto& cur = seq.sets[i];
    const auto& next = seq.sets[i + 1];
    if (max_level(g, next) >= floor) break;
    ++verdict.checked_steps;
    const auto blocked = with_hubs(g, to_mask(g, next));
    std::vector<Vertex> from;
    std::set_difference(cur.begin(), cur.end(), next.begin(), next.end(), std::back_inserter(from));
    if (auto path = escape(g, from, goal, blocked, ray)) {
      verdict.pass = false;
      verdict.index = i;
      verdict.witness = RayWitness{std::move(*path), RayKind::ray};
      verdict.reason = "a ray meets U_" + std::to_string(i) + " and misses U_" + std::to_string(i + 1);
      return verdict;
    }
  }

  if (options.check_coverage && !seq.sets.empty() && max_level(g, seq.sets.back()) >= floor) {
    std::vector<bool> covered(g.vertex_count(), false);
    for (const auto& s : seq.sets) {
      for (Vertex v : s) covered[v] = true;
    }
    const auto blocked = with_hubs(g, covered);
    std::vector<Vertex> starts;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!blocked[v] && g.level(v) < floor) starts.push_back(v);
    }
    if (auto path = shortest_dipath(g, starts, goal, &blocked)) {
      verdict.pass = false;
      verdict.witness = RayWitness{std::move(*path), RayKind::ray};
      verdict.reason = "a ray avoids every U_i";
      return verdict;
    }
  }
  verdict.reason = verdict.checked_steps == 0 ? "no step lies inside the window" : "ok";
  return verdict;
}

ExhaustingSequence diagonal_exhausting_sequence(const LevelledDigraph& g,
                                                const std::vector<Path>& rays) {
  if (rays.empty()) throw PreconditionError("diagonal sequence needs at least one ray");
  PathSystem ps{rays, Disjointness::vertex, {}};
  if (auto err = check_path_system(g, ps)) throw PreconditionError("rays are not disjoint: " + *err);
  std::size_t longest = 0;
  for (const auto& r : rays) longest = std::max(longest, r.size());
  ExhaustingSequence seq;
  // V_i (1-based) holds x^j_k with j + k <= i - 1; stop once every vertex is in.
  for (std::size_t i = 1; i <= longest + rays.size() - 1; ++i) {
    std::vector<Vertex> vs;
    for (std::size_t j = 0; j < rays.size() && j <= i - 1; ++j) {
      for (std::size_t k = 0; j + k <= i - 1 && k < rays[j].size(); ++k) vs.push_back(rays[j][k]);
    }
    seq.sets.push_back(make_set(std::move(vs)));
  }
  return seq;
}

GradedSequence graded_sequence(const LevelledDigraph& g, const EndDescriptor& end,
                               std::span<const Vertex> S, std::size_t d) {
  GradedSequence result;
  const auto ray = canonical_ray(g, end);
  const auto blocked = with_hubs(g, to_mask(g, S));
  std::vector<Vertex> sources;
  for (Vertex v : seed_band(g, ray)) {
    if (!blocked[v]) sources.push_back(v);
  }
  const auto targets = consistent_frontier(g, ray);
  auto rays = max_disjoint_dipaths(g, sources, targets, Disjointness::vertex,
                                   {.limit = d + 1, .blocked = &blocked});
  if (rays.size() > d) {
    result.contradiction_flow = max_flow_value(g, sources, targets, Disjointness::vertex,
                                               {.blocked = &blocked});
    return result;
  }
  if (rays.size() < d) {
    throw PreconditionError("only " + std::to_string(rays.size()) +
                            " disjoint witnesses avoid S, need " + std::to_string(d));
  }
  result.rays = rays;
  if (d == 0) return result;

  std::vector<Vertex> first;
  for (const auto& p : rays.paths) first.push_back(p.front());
  VertexSet cur = make_set(std::move(first));
  std::set<VertexSet> seen;
  while (seen.insert(cur).second) {
    result.sequence.sets.push_back(cur);
    const Level top = max_level(g, cur);
    std::vector<Vertex> ahead;
    for (const auto& p : rays.paths) {
      for (Vertex v : p) {
        if (g.level(v) > top) ahead.push_back(v);
      }
    }
    if (ahead.empty()) break;
    auto cert = min_vertex_separator(g, cur, ahead, cur, &blocked);
    if (cert.separator.size() > d) {
      result.contradiction_flow = cert.separator.size();
      result.sequence.sets.clear();
      return result;
    }
    cur = std::move(cert.separator);
  }
  return result;
}

VertexSet stable_core(const ExhaustingSequence& seq, std::size_t window) {
  window = std::min(window, seq.sets.size());
  if (window == 0) return {};
  VertexSet core = seq.sets[window / 2 < window ? window / 2 : 0];
  for (std::size_t i = window / 2; i < window; ++i) {
    VertexSet keep;
    std::set_intersection(core.begin(), core.end(), seq.sets[i].begin(), seq.sets[i].end(),
                          std::back_inserter(keep));
    core = std::move(keep);
  }
  return core;
}

ExhaustingSequence sequence_from_partition(std::span<const Vertex> S,
                                           const std::vector<ExhaustingSequence>& per_end) {
  if (per_end.empty()) throw PreconditionError("partition needs at least one end in B");
  for (const auto& s : per_end) {
    if (s.sets.empty()) throw PreconditionError("graded sequence of an end in B is empty");
  }
  std::vector<Vertex> base(S.begin(), S.end());
  for (std::size_t j = 0; j + 1 < per_end.size(); ++j) {
    base.insert(base.end(), per_end[j].sets.front().begin(), per_end[j].sets.front().end());
  }
  ExhaustingSequence seq;
  for (const auto& u : per_end.back().sets) {
    std::vector<Vertex> v(base);
    v.insert(v.end(), u.begin(), u.end());
    seq.sets.push_back(make_set(std::move(v)));
  }
  return seq;
}

}  // namespace endgraph
