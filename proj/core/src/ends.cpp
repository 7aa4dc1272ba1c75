#include "endgraph/ends.hpp"

#include <algorithm>

#include "endgraph/error.hpp"

namespace endgraph {

std::optional<std::string> check_ray_witness(const LevelledDigraph& g, const RayWitness& w) {
  if (!is_dipath(g, w.path)) return "witness is not a simple dipath";
  const Level floor = g.frontier_floor();
  if (w.kind == RayKind::ray && g.level(w.path.back()) < floor) {
    return "ray witness stops below the frontier at '" + g.tag(w.path.back()) + "'";
  }
  if (w.kind == RayKind::antiray && g.level(w.path.front()) < floor) {
    return "anti-ray witness starts below the frontier at '" + g.tag(w.path.front()) + "'";
  }
  return std::nullopt;
}

std::vector<RayWitness> ray_witnesses(const LevelledDigraph& g, std::span<const Vertex> start,
                                      std::size_t limit) {
  std::vector<RayWitness> result;
  const Level floor = g.frontier_floor();
  std::vector<bool> on_path(g.vertex_count(), false);
  for (Vertex s : start) {
    if (result.size() >= limit) break;
    Path path{s};
    std::vector<std::size_t> next{0};
    on_path[s] = true;
    while (!path.empty() && result.size() < limit) {
      const Vertex x = path.back();
      if (g.level(x) >= floor) {
        result.push_back({path, RayKind::ray});
        on_path[x] = false;
        path.pop_back();
        next.pop_back();
        continue;
      }
      const auto out = g.out(x);
      auto& pos = next.back();
      while (pos < out.size() && on_path[out[pos]]) ++pos;
      if (pos == out.size()) {
        on_path[x] = false;
        path.pop_back();
        next.pop_back();
        continue;
      }
      const Vertex y = out[pos++];
      on_path[y] = true;
      path.push_back(y);
      next.push_back(0);
    }
    for (Vertex v : path) on_path[v] = false;
  }
  return result;
}

std::vector<RayWitness> antiray_witnesses(const LevelledDigraph& g, std::span<const Vertex> end,
                                          std::size_t limit) {
  auto result = ray_witnesses(reverse(g), end, limit);
  for (auto& w : result) {
    std::reverse(w.path.begin(), w.path.end());
    w.kind = RayKind::antiray;
  }
  return result;
}

namespace {

Path tags_in(const LevelledDigraph& g, const std::vector<std::string>& tags) {
  Path p;
  for (const auto& t : tags) {
    if (auto v = g.find(t)) p.push_back(*v);
  }
  return p;
}

std::vector<bool> hub_mask(const LevelledDigraph& g) {
  std::vector<bool> mask(g.vertex_count(), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) mask[v] = g.is_hub(v);
  return mask;
}

}  // namespace

Path canonical_ray(const LevelledDigraph& g, const EndDescriptor& end) {
  if (!end.canonical_ray) return {};
  return tags_in(g, end.canonical_ray(g.depth()));
}

Path canonical_antiray(const LevelledDigraph& g, const EndDescriptor& end) {
  if (!end.canonical_antiray) return {};
  return tags_in(g, end.canonical_antiray(g.depth()));
}

EndDescriptor reverse_end(const EndDescriptor& end) {
  EndDescriptor r = end;
  auto flipped = [](const std::function<std::vector<std::string>(Level)>& f) {
    std::function<std::vector<std::string>(Level)> out;
    if (f) {
      out = [f](Level d) {
        auto p = f(d);
        std::reverse(p.begin(), p.end());
        return p;
      };
    }
    return out;
  };
  r.canonical_ray = flipped(end.canonical_antiray);
  r.canonical_antiray = flipped(end.canonical_ray);
  return r;
}

VertexSet consistent_frontier(const LevelledDigraph& g, std::span<const Vertex> ray_vertices) {
  const Level span = g.span();
  const Level window_floor = g.depth() + 1 > 2 * span ? g.depth() + 1 - 2 * span : 0;
  std::vector<bool> outside(g.vertex_count(), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    outside[v] = g.level(v) < window_floor || g.is_hub(v);
  }
  const auto from_ray = reachable_from(g, ray_vertices, &outside);
  const auto to_ray = reaching(g, ray_vertices, &outside);
  VertexSet result;
  for (Vertex f : g.frontier()) {
    if (!outside[f] && from_ray[f] && to_ray[f]) result.push_back(f);
  }
  return result;
}

VertexSet consistent_frontier(const LevelledDigraph& g, const EndDescriptor& end) {
  return consistent_frontier(g, canonical_ray(g, end));
}

bool is_end_consistent(const LevelledDigraph& g, const EndDescriptor& end, const RayWitness& w) {
  if (w.path.empty()) return false;
  const auto cf = consistent_frontier(g, end);
  const Vertex last = w.kind == RayKind::ray ? w.path.back() : w.path.front();
  if (w.kind == RayKind::antiray) {
    const auto rg = reverse(g);
    const auto rcf = consistent_frontier(rg, canonical_ray(rg, reverse_end(end)));
    return std::binary_search(rcf.begin(), rcf.end(), last);
  }
  return std::binary_search(cf.begin(), cf.end(), last);
}

std::vector<Vertex> seed_band(const LevelledDigraph& g, std::span<const Vertex> ray) {
  if (ray.empty()) return {};
  const Level l0 = g.level(ray.front());
  const Level half = g.depth() > l0 ? (g.depth() - l0) / 2 : 0;
  const Level top = l0 + std::max(g.span() > 0 ? g.span() - 1 : 0, half);
  std::vector<Vertex> band;
  std::vector<bool> taken(g.vertex_count(), false);
  for (Vertex v : ray) {
    if (g.level(v) >= l0 && g.level(v) <= top && !g.is_hub(v) && !taken[v]) {
      band.push_back(v);
      taken[v] = true;
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.level(v) >= l0 && g.level(v) <= top && !g.is_hub(v) && !taken[v]) band.push_back(v);
  }
  return band;
}

std::size_t equivalence_degree(const LevelledDigraph& g, std::span<const Vertex> P,
                               std::span<const Vertex> Q, std::size_t t) {
  const auto forward = max_flow_value(g, P, Q, Disjointness::vertex, {.limit = t});
  if (forward == 0) return 0;
  const auto backward = max_flow_value(g, Q, P, Disjointness::vertex, {.limit = t});
  return std::min(forward, backward);
}

namespace {

PathSystem ray_degree(const LevelledDigraph& g, const Path& ray, std::size_t t) {
  PathSystem ps;
  if (ray.empty()) return ps;
  const auto sources = seed_band(g, ray);
  const auto targets = consistent_frontier(g, ray);
  const auto hubs = hub_mask(g);
  return max_disjoint_dipaths(g, sources, targets, Disjointness::vertex,
                              {.limit = t, .blocked = &hubs});
}

}  // namespace

PathSystem in_degree_witnesses(const LevelledDigraph& g, const EndDescriptor& end, std::size_t t) {
  return ray_degree(g, canonical_ray(g, end), t);
}

std::size_t in_degree_estimate(const LevelledDigraph& g, const EndDescriptor& end, std::size_t t) {
  return in_degree_witnesses(g, end, t).size();
}

PathSystem out_degree_witnesses(const LevelledDigraph& g, const EndDescriptor& end, std::size_t t) {
  const auto rg = reverse(g);
  auto ps = ray_degree(rg, canonical_ray(rg, reverse_end(end)), t);
  for (auto& p : ps.paths) std::reverse(p.begin(), p.end());
  return ps;
}

std::size_t out_degree_estimate(const LevelledDigraph& g, const EndDescriptor& end, std::size_t t) {
  return out_degree_witnesses(g, end, t).size();
}

bool dominates(const LevelledDigraph& g, Vertex v, const EndDescriptor& end, std::size_t t) {
  auto ray = canonical_ray(g, end);
  std::erase(ray, v);
  if (ray.empty()) return false;
  if (fan(g, v, ray, t).size() < t) return false;
  return reachable_from(g, ray)[v];
}

VertexSet certified_dominators(const LevelledDigraph& g, const EndDescriptor& end, std::size_t t) {
  std::vector<Vertex> result;
  for (const auto& tag : end.dominating_candidates) {
    auto v = g.find(tag);
    if (v && dominates(g, *v, end, t)) result.push_back(*v);
  }
  return make_set(std::move(result));
}

// ---------------------------------------------------------------------------

std::optional<std::string> check_star_comb(const LevelledDigraph& g, const StarCombWitness& w,
                                           std::span<const Vertex> U) {
  const auto in_u = to_mask(g, U);
  for (const auto& b : w.branches.paths) {
    if (!is_dipath(g, b)) return "branch is not a simple dipath";
    if (!in_u[b.back()]) return "branch ends outside U at '" + g.tag(b.back()) + "'";
  }
  if (w.variant == StarCombWitness::Variant::star) {
    PathSystem ps = w.branches;
    ps.mode = Disjointness::internal;
    ps.terminals = {w.centre};
    for (const auto& b : ps.paths) {
      if (b.front() != w.centre) return "star branch does not start at the centre";
    }
    if (auto err = check_path_system(g, ps)) return "star: " + *err;
    for (const auto& b : ps.paths) {
      if (b.size() < 2) return "star branch is trivial";
    }
    return std::nullopt;
  }
  if (!is_dipath(g, w.spine)) return "spine is not a simple dipath";
  if (g.level(w.spine.back()) < g.frontier_floor()) return "spine does not reach the frontier";
  PathSystem ps = w.branches;
  ps.mode = Disjointness::vertex;
  if (auto err = check_path_system(g, ps)) return "comb: " + *err;
  const auto on_spine = to_mask(g, w.spine);
  std::vector<Vertex> starts;
  for (const auto& b : ps.paths) {
    if (!on_spine[b.front()]) return "tooth does not start on the spine";
    for (std::size_t i = 1; i < b.size(); ++i) {
      if (on_spine[b[i]]) return "tooth re-enters the spine at '" + g.tag(b[i]) + "'";
    }
    starts.push_back(b.front());
  }
  const auto distinct = make_set(starts);
  if (distinct.size() != starts.size()) return "two teeth start at the same spine vertex";
  return std::nullopt;
}

StarCombWitness star_comb(const LevelledDigraph& g, Vertex x, std::span<const Vertex> U,
                          std::size_t t) {
  const auto in_u = to_mask(g, U);
  const std::size_t n = g.vertex_count();
  constexpr Vertex none = 0xffffffffu;

  // Depth-first out-arborescence in adjacency order.
  std::vector<Vertex> parent(n, none);
  std::vector<std::vector<Vertex>> children(n);
  std::vector<Vertex> preorder;
  std::vector<bool> seen(n, false);
  {
    std::vector<std::pair<Vertex, std::size_t>> stack{{x, 0}};
    seen[x] = true;
    preorder.push_back(x);
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      const auto out = g.out(v);
      while (pos < out.size() && seen[out[pos]]) ++pos;
      if (pos == out.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = out[pos++];
      const Vertex from = v;
      seen[w] = true;
      parent[w] = from;
      children[from].push_back(w);
      preorder.push_back(w);
      stack.emplace_back(w, 0);
    }
  }

  // U-vertices per subtree; pruning drops subtrees without any.
  std::vector<std::size_t> weight(n, 0);
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    weight[*it] += in_u[*it] ? 1 : 0;
    if (parent[*it] != none) weight[parent[*it]] += weight[*it];
  }
  if (weight[x] < t) {
    throw InsufficientInputError("only " + std::to_string(weight[x]) + " vertices of U are reachable from '" +
                                 g.tag(x) + "', need " + std::to_string(t));
  }

  // Branch from v through child c to the first U-vertex below it.
  auto branch = [&](Vertex v, Vertex c) {
    Path p{v, c};
    Vertex cur = c;
    while (!in_u[cur]) {
      for (Vertex d : children[cur]) {
        if (weight[d] > 0) {
          cur = d;
          break;
        }
      }
      p.push_back(cur);
    }
    return p;
  };

  StarCombWitness w;
  for (Vertex v : preorder) {
    std::vector<Vertex> useful;
    for (Vertex c : children[v]) {
      if (weight[c] > 0) useful.push_back(c);
    }
    if (useful.size() >= t) {
      w.variant = StarCombWitness::Variant::star;
      w.centre = v;
      w.branches.mode = Disjointness::internal;
      w.branches.terminals = {v};
      for (std::size_t i = 0; i < t; ++i) {
        w.branches.paths.push_back(branch(v, useful[i]));
        w.leaves.push_back(w.branches.paths.back().back());
      }
      w.leaves = make_set(std::move(w.leaves));
      return w;
    }
  }

  // Comb: heavy path through the pruned tree, then down to the frontier.
  w.variant = StarCombWitness::Variant::comb;
  w.branches.mode = Disjointness::vertex;
  Path spine{x};
  for (;;) {
    const Vertex v = spine.back();
    Vertex best = none;
    for (Vertex c : children[v]) {
      if (weight[c] > 0 && (best == none || weight[c] > weight[best])) best = c;
    }
    if (best == none) break;
    spine.push_back(best);
  }
  const Level floor = g.frontier_floor();
  if (g.level(spine.back()) < floor) {
    // Continue inside the full arborescence towards a frontier vertex.
    std::vector<Vertex> todo{spine.back()};
    Vertex hit = none;
    while (!todo.empty() && hit == none) {
      const Vertex v = todo.front();
      todo.erase(todo.begin());
      if (g.level(v) >= floor) {
        hit = v;
        break;
      }
      for (Vertex c : children[v]) todo.push_back(c);
    }
    if (hit == none) {
      throw InsufficientInputError("no star of size " + std::to_string(t) +
                                   " and no spine from '" + g.tag(x) + "' reaches the frontier");
    }
    Path tail;
    for (Vertex v = hit; v != spine.back(); v = parent[v]) tail.push_back(v);
    spine.insert(spine.end(), tail.rbegin(), tail.rend());
  }
  const auto on_spine = to_mask(g, spine);
  for (Vertex s : spine) {
    if (w.branches.size() >= t) break;
    if (in_u[s]) {
      w.branches.paths.push_back({s});
      continue;
    }
    for (Vertex c : children[s]) {
      if (!on_spine[c] && weight[c] > 0) {
        w.branches.paths.push_back(branch(s, c));
        break;
      }
    }
  }
  for (const auto& b : w.branches.paths) w.leaves.push_back(b.back());
  w.leaves = make_set(std::move(w.leaves));
  w.spine = std::move(spine);
  return w;
}

}  // namespace endgraph
