#include "endgraph/proof_steps.hpp"

#include <algorithm>

#include "endgraph/error.hpp"

namespace endgraph {

Path RayFamilyState::prefix(std::size_t i) const {
  return Path(rays[i].begin(), rays[i].begin() + static_cast<std::ptrdiff_t>(checkpoints[i]) + 1);
}

namespace {

void mark(std::vector<bool>& mask, const Path& p) {
  for (Vertex v : p) mask[v] = true;
}

std::ptrdiff_t position(const Path& p, Vertex v) {
  auto it = std::find(p.begin(), p.end(), v);
  return it == p.end() ? -1 : it - p.begin();
}

/// Connectors reference -> ray[from..] and ray[from..] -> reference avoiding
/// `used`; marks them used and returns the last ray position they touch.
std::size_t connect(const LevelledDigraph& g, const Path& ray, std::size_t from,
                    const Path& reference, std::vector<bool>& used, std::vector<Path>& out) {
  std::vector<Vertex> segment(ray.begin() + static_cast<std::ptrdiff_t>(from), ray.end());
  std::vector<Vertex> ref;
  for (Vertex v : reference) {
    if (!used[v]) ref.push_back(v);
  }
  auto to = shortest_dipath(g, ref, segment, &used);
  auto back = shortest_dipath(g, segment, ref, &used);
  if (!to || !back) {
    throw InfeasibleError("no connector between the reference ray and a ray of the family avoids earlier connectors");
  }
  std::size_t last = from;
  for (const Path* p : {&*to, &*back}) {
    for (Vertex v : *p) {
      const auto pos = position(ray, v);
      if (pos >= 0) last = std::max(last, static_cast<std::size_t>(pos));
    }
  }
  mark(used, *to);
  mark(used, *back);
  out.push_back(std::move(*to));
  out.push_back(std::move(*back));
  return last;
}

/// Adds generation n+1 of connectors and places the checkpoints after them.
void add_connectors(const LevelledDigraph& g, RayFamilyState& s, const std::vector<std::size_t>& from,
                    const Path& reference) {
  std::vector<bool> used(g.vertex_count(), false);
  for (const auto& gen : s.connectors) {
    for (const auto& p : gen) mark(used, p);
  }
  std::vector<Path> gen;
  s.checkpoints.assign(s.rays.size(), 0);
  for (std::size_t i = 0; i < s.rays.size(); ++i) {
    const auto last = connect(g, s.rays[i], from[i], reference, used, gen);
    if (last + 1 >= s.rays[i].size()) {
      throw InfeasibleError("ray " + std::to_string(i) + " has no room for a checkpoint after its connectors");
    }
    s.checkpoints[i] = last + 1;
  }
  s.connectors.push_back(std::move(gen));
}

}  // namespace

RayFamilyState extend_ray_family(const LevelledDigraph& g, const RayFamilyState& state,
                                 const std::vector<Path>& fresh, const Path& reference_ray) {
  const std::size_t n = state.size();
  if (fresh.size() < n + 1) {
    throw PreconditionError("need " + std::to_string(n + 1) + " fresh dipaths, got " + std::to_string(fresh.size()));
  }
  std::vector<Path> Q(fresh.begin(), fresh.begin() + static_cast<std::ptrdiff_t>(n + 1));
  if (auto err = check_path_system(g, PathSystem{Q, Disjointness::vertex, {}})) {
    throw PreconditionError("fresh dipaths: " + *err);
  }
  for (const auto& q : Q) {
    if (auto err = check_ray_witness(g, {q, RayKind::ray})) throw PreconditionError("fresh dipath: " + *err);
  }
  std::vector<bool> X(g.vertex_count(), false);
  for (std::size_t i = 0; i < n; ++i) mark(X, state.prefix(i));
  for (const auto& q : Q) {
    for (Vertex v : q) {
      if (X[v]) throw PreconditionError("fresh dipath meets the prefix vertex " + g.tag(v));
    }
  }

  RayFamilyState next = state;
  if (n == 0) {
    next.rays = {Q[0]};
    add_connectors(g, next, {0}, reference_ray);
    return next;
  }

  std::vector<Vertex> sources;
  for (std::size_t i = 0; i < n; ++i) sources.push_back(state.rays[i][state.checkpoints[i]]);

  // y_l sits at the same relative position on every Q_l; push it outwards
  // until Menger finds n dipaths.
  std::optional<SeparatorCertificate> last_cut;
  for (std::size_t step = 0; step < 4; ++step) {
    std::vector<std::size_t> ypos;
    std::vector<Vertex> Y;
    auto blocked = X;
    for (Vertex x : sources) blocked[x] = false;
    for (const auto& q : Q) {
      const std::size_t pos = std::min(q.size() - 1, q.size() * (2 + step) / 6);
      ypos.push_back(pos);
      Y.push_back(q[pos]);
      for (std::size_t k = pos + 1; k < q.size(); ++k) blocked[q[k]] = true;
    }
    auto ps = max_disjoint_dipaths(g, sources, Y, Disjointness::vertex, {.limit = n, .blocked = &blocked});
    if (ps.size() < n) {
      last_cut = min_vertex_separator(g, sources, Y, {}, &blocked);
      continue;
    }
    std::vector<bool> y_used(Q.size(), false);
    std::vector<bool> on_p(g.vertex_count(), false);
    std::vector<std::size_t> from(n + 1, 0);
    for (const auto& p : ps.paths) {
      const auto i = static_cast<std::size_t>(std::find(sources.begin(), sources.end(), p.front()) - sources.begin());
      const auto l = static_cast<std::size_t>(std::find(Y.begin(), Y.end(), p.back()) - Y.begin());
      y_used[l] = true;
      mark(on_p, p);
      Path r = state.prefix(i);
      r.insert(r.end(), p.begin() + 1, p.end());
      r.insert(r.end(), Q[l].begin() + static_cast<std::ptrdiff_t>(ypos[l]) + 1, Q[l].end());
      next.rays[i] = std::move(r);
      from[i] = state.checkpoints[i] + 1;
    }
    const auto spare = static_cast<std::size_t>(std::find(y_used.begin(), y_used.end(), false) - y_used.begin());
    const auto& q = Q[spare];
    std::size_t start = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (on_p[q[k]]) start = k + 1;
    }
    if (start >= q.size()) throw InfeasibleError("the spare fresh dipath has no tail avoiding the new rays");
    next.rays.emplace_back(q.begin() + static_cast<std::ptrdiff_t>(start), q.end());
    add_connectors(g, next, from, reference_ray);
    return next;
  }
  throw InfeasibleError("fewer than " + std::to_string(n) + " disjoint dipaths from the checkpoints to the fresh rays",
                        last_cut);
}

std::vector<Path> fresh_rays(const LevelledDigraph& g, const Path& reference_ray,
                             const RayFamilyState& state, std::size_t count) {
  std::vector<bool> X(g.vertex_count(), false);
  for (std::size_t i = 0; i < state.size(); ++i) mark(X, state.prefix(i));
  const auto targets = consistent_frontier(g, reference_ray);
  std::vector<Vertex> sources;
  // grow the source band until enough witnesses come out
  for (Level l = 0; l <= g.depth(); ++l) {
    sources.clear();
    for (Level m = 0; m <= l; ++m) {
      for (Vertex v : g.vertices_at(m)) {
        if (!X[v] && !g.is_hub(v)) sources.push_back(v);
      }
    }
    auto ps = max_disjoint_dipaths(g, sources, targets, Disjointness::vertex, {.limit = count, .blocked = &X});
    if (ps.size() == count || l == g.depth()) return ps.paths;
  }
  return {};
}

std::optional<std::string> check_ray_family(const LevelledDigraph& g, const RayFamilyState& state,
                                            const Path& reference_ray) {
  if (state.checkpoints.size() != state.rays.size()) return "one checkpoint per ray expected";
  if (auto err = check_path_system(g, PathSystem{state.rays, Disjointness::vertex, {}})) {
    return "rays: " + *err;
  }
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (auto err = check_ray_witness(g, {state.rays[i], RayKind::ray})) return "ray " + std::to_string(i) + ": " + *err;
    if (state.checkpoints[i] >= state.rays[i].size()) return "checkpoint beyond ray " + std::to_string(i);
  }
  std::vector<bool> earlier(g.vertex_count(), false);
  const auto ref = to_mask(g, reference_ray);
  for (std::size_t k = 0; k < state.connectors.size(); ++k) {
    const auto& gen = state.connectors[k];
    std::vector<bool> now(g.vertex_count(), false);
    for (const auto& p : gen) {
      if (p.empty() || !is_dipath(g, p)) return "connector of generation " + std::to_string(k + 1) + " is not a dipath";
      for (Vertex v : p) {
        if (earlier[v]) return "generation " + std::to_string(k + 1) + " meets an earlier connector at " + g.tag(v);
        now[v] = true;
      }
    }
    for (std::size_t j = 0; j < gen.size(); ++j) {
      const auto& p = gen[j];
      const Vertex ends_on_ref = j % 2 == 0 ? p.front() : p.back();
      if (!ref[ends_on_ref]) return "connector of generation " + std::to_string(k + 1) + " misses the reference ray";
    }
    for (std::size_t i = 0; i < earlier.size(); ++i) earlier[i] = earlier[i] || now[i];
  }
  if (!state.connectors.empty()) {
    const auto& gen = state.connectors.back();
    if (gen.size() != 2 * state.size()) return "the last generation needs two connectors per ray";
    for (std::size_t i = 0; i < state.size(); ++i) {
      const auto& ray = state.rays[i];
      const Vertex a = gen[2 * i].back();
      const Vertex b = gen[2 * i + 1].front();
      const auto pa = position(ray, a);
      const auto pb = position(ray, b);
      if (pa < 0 || pb < 0) return "connectors of ray " + std::to_string(i) + " do not touch it";
      for (const auto& p : {gen[2 * i], gen[2 * i + 1]}) {
        for (Vertex v : p) {
          const auto pos = position(ray, v);
          if (pos >= static_cast<std::ptrdiff_t>(state.checkpoints[i])) {
            return "checkpoint of ray " + std::to_string(i) + " does not lie after its connectors";
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_extension(const RayFamilyState& before, const RayFamilyState& after) {
  if (after.size() != before.size() + 1) return "the family must grow by exactly one ray";
  if (after.connectors.size() != before.connectors.size() + 1) return "exactly one connector generation must be added";
  for (std::size_t i = 0; i < before.size(); ++i) {
    const auto old = before.prefix(i);
    const auto now = after.prefix(i);
    if (now.size() <= old.size() || !std::equal(old.begin(), old.end(), now.begin())) {
      return "prefix of ray " + std::to_string(i) + " is not a proper starting subpath of its extension";
    }
  }
  return std::nullopt;
}

std::pair<std::vector<Path>, std::vector<Path>> disjoint_ray_antiray_witnesses(const LevelledDigraph& g,
                                                                               const EndDescriptor& end,
                                                                               std::size_t n) {
  auto rays = in_degree_witnesses(g, end, n);
  if (rays.size() < n) {
    throw InfeasibleError("only " + std::to_string(rays.size()) + " disjoint ray witnesses");
  }
  const auto rg = reverse(g);
  const auto back = canonical_ray(rg, reverse_end(end));
  std::vector<bool> blocked(g.vertex_count(), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) blocked[v] = g.is_hub(v);
  for (const auto& r : rays.paths) mark(blocked, r);
  std::vector<Vertex> sources;
  for (Vertex v : seed_band(rg, back)) {
    if (!blocked[v]) sources.push_back(v);
  }
  const auto targets = consistent_frontier(rg, back);
  auto anti = max_disjoint_dipaths(rg, sources, targets, Disjointness::vertex, {.limit = n, .blocked = &blocked});
  if (anti.size() < n) {
    throw InfeasibleError("only " + std::to_string(anti.size()) + " anti-ray witnesses avoid the rays",
                          min_vertex_separator(rg, sources, targets, {}, &blocked));
  }
  for (auto& p : anti.paths) std::reverse(p.begin(), p.end());
  return {std::move(rays.paths), std::move(anti.paths)};
}

PathSystem double_rays(const LevelledDigraph& g, const std::vector<Path>& rays,
                       const std::vector<Path>& antirays) {
  const std::size_t n = rays.size();
  if (antirays.size() != n || n == 0) throw PreconditionError("need n >= 1 rays and as many anti-rays");
  std::vector<Path> all(rays);
  all.insert(all.end(), antirays.begin(), antirays.end());
  if (auto err = check_path_system(g, PathSystem{all, Disjointness::vertex, {}})) {
    throw PreconditionError("rays and anti-rays: " + *err);
  }
  for (const auto& r : rays) {
    if (auto err = check_ray_witness(g, {r, RayKind::ray})) throw PreconditionError(*err);
  }
  for (const auto& q : antirays) {
    if (auto err = check_ray_witness(g, {q, RayKind::antiray})) throw PreconditionError(*err);
  }

  // P: n disjoint Q_i - R_j dipaths for every pair, built greedily low down.
  std::vector<bool> used(g.vertex_count(), false);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Vertex> from;
        for (auto it = antirays[i].rbegin(); it != antirays[i].rend(); ++it) {
          if (!used[*it]) from.push_back(*it);
        }
        std::vector<Vertex> to;
        for (Vertex v : rays[j]) {
          if (!used[v]) to.push_back(v);
        }
        auto p = shortest_dipath(g, from, to, &used);
        if (!p) {
          throw InfeasibleError("no further anti-ray " + std::to_string(i) + " to ray " + std::to_string(j) +
                                    " connector disjoint from the earlier ones",
                                min_vertex_separator(g, from, to, {}, &used));
        }
        mark(used, *p);
      }
    }
  }

  // x_i: last anti-ray vertex before any connector; y_j: first ray vertex after.
  std::vector<bool> in_h = used;
  std::vector<Vertex> X;
  std::vector<Vertex> Y;
  for (const auto& q : antirays) {
    std::size_t first = q.size();
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (used[q[k]]) {
        first = k;
        break;
      }
    }
    if (first == 0) throw InfeasibleError("an anti-ray tail carries a connector at the frontier");
    X.push_back(q[first - 1]);
    for (std::size_t k = first - 1; k < q.size(); ++k) in_h[q[k]] = true;
  }
  for (const auto& r : rays) {
    std::size_t last = 0;
    bool any = false;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (used[r[k]]) {
        last = k;
        any = true;
      }
    }
    if (!any || last + 1 >= r.size()) throw InfeasibleError("a ray tail carries a connector at the frontier");
    Y.push_back(r[last + 1]);
    for (std::size_t k = 0; k <= last + 1; ++k) in_h[r[k]] = true;
  }
  std::vector<bool> outside(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) outside[v] = !in_h[v];
  auto linkage = max_disjoint_dipaths(g, X, Y, Disjointness::vertex, {.limit = n, .blocked = &outside});
  if (linkage.size() < n) {
    throw InfeasibleError("fewer than n disjoint X-Y dipaths in H", min_vertex_separator(g, X, Y, {}, &outside));
  }

  PathSystem result;
  result.mode = Disjointness::vertex;
  for (const auto& p : linkage.paths) {
    const auto i = static_cast<std::size_t>(std::find(X.begin(), X.end(), p.front()) - X.begin());
    const auto j = static_cast<std::size_t>(std::find(Y.begin(), Y.end(), p.back()) - Y.begin());
    const auto& q = antirays[i];
    Path d(q.begin(), q.begin() + position(q, p.front()));
    d.insert(d.end(), p.begin(), p.end());
    const auto& r = rays[j];
    d.insert(d.end(), r.begin() + position(r, p.back()) + 1, r.end());
    result.paths.push_back(std::move(d));
  }
  return result;
}

std::optional<std::string> check_double_rays(const LevelledDigraph& g, const PathSystem& ps,
                                             const std::vector<Path>& rays,
                                             const std::vector<Path>& antirays) {
  if (auto err = check_path_system(g, PathSystem{ps.paths, Disjointness::vertex, {}})) return *err;
  for (const auto& d : ps.paths) {
    bool head = false;
    for (const auto& q : antirays) {
      head = head || (!d.empty() && !q.empty() && d.front() == q.front());
    }
    bool tail = false;
    for (const auto& r : rays) {
      tail = tail || (!d.empty() && !r.empty() && d.back() == r.back());
    }
    if (!head) return "a double ray does not start on an anti-ray's frontier end";
    if (!tail) return "a double ray does not end on a ray's frontier end";
  }
  if (ps.paths.size() != rays.size()) return "expected one double ray per ray";
  return std::nullopt;
}

}  // namespace endgraph
