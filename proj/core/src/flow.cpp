#include "endgraph/flow.hpp"

#include <algorithm>
#include <deque>

#include "flow_network.hpp"

namespace endgraph {

using detail::FlowNetwork;

std::string to_string(Disjointness mode) {
  switch (mode) {
    case Disjointness::vertex: return "vertex";
    case Disjointness::internal: return "internal";
    case Disjointness::edge: return "edge";
  }
  return "?";
}

Disjointness parse_disjointness(std::string_view name) {
  if (name == "vertex") return Disjointness::vertex;
  if (name == "internal") return Disjointness::internal;
  if (name == "edge") return Disjointness::edge;
  throw PreconditionError("unknown disjointness mode '" + std::string(name) + "'");
}

namespace {

std::vector<Vertex> ordered_unique(std::span<const Vertex> vs, const std::vector<bool>* blocked) {
  std::vector<Vertex> result;
  std::vector<Vertex> sorted;
  for (Vertex v : vs) {
    if (blocked && (*blocked)[v]) continue;
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it != sorted.end() && *it == v) continue;
    sorted.insert(it, v);
    result.push_back(v);
  }
  return result;
}

/// g with every vertex v split into in(v) = 2v -> out(v) = 2v + 1, plus a
/// super source and sink. Edges u -> w are kept only when u is not a target
/// and w is not a source, so every flow path is an A-B dipath.
struct SplitNetwork {
  FlowNetwork net;
  Vertex n;
  std::uint32_t source;
  std::uint32_t sink;
  std::vector<std::uint32_t> node_arc;  // in(v) -> out(v), or none
  static constexpr std::uint32_t none = 0xffffffffu;

  SplitNetwork(const LevelledDigraph& g, const std::vector<Vertex>& A, const std::vector<Vertex>& B,
               const std::vector<FlowNetwork::Cap>& node_cap, FlowNetwork::Cap edge_cap,
               const std::vector<bool>* blocked)
      : net(2 * g.vertex_count() + 2),
        n(static_cast<Vertex>(g.vertex_count())),
        source(2 * n),
        sink(2 * n + 1),
        node_arc(n, none) {
    const auto is_a = to_mask(g, A);
    const auto is_b = to_mask(g, B);
    const FlowNetwork::Cap inf = static_cast<FlowNetwork::Cap>(2 * g.vertex_count() + g.edge_count() + 2);
    for (Vertex a : A) net.add_arc(source, 2 * a, inf);
    for (Vertex v = 0; v < n; ++v) {
      if (blocked && (*blocked)[v]) continue;
      node_arc[v] = net.add_arc(2 * v, 2 * v + 1, node_cap[v] < 0 ? inf : node_cap[v]);
      if (is_b[v]) continue;
      for (Vertex w : g.out(v)) {
        if (is_a[w] || (blocked && (*blocked)[w])) continue;
        net.add_arc(2 * v + 1, 2 * w, edge_cap < 0 ? inf : edge_cap);
      }
    }
    for (Vertex b : B) net.add_arc(2 * b + 1, sink, inf);
  }

  /// Splits the current flow into source-sink walks, following arcs in
  /// insertion order, and drops closed subwalks.
  std::vector<Path> decompose(std::size_t value) const {
    std::vector<FlowNetwork::Cap> flow(net.arc_count());
    for (std::uint32_t a = 0; a < net.arc_count(); ++a) flow[a] = net.arc(a).flow;
    std::vector<Path> paths;
    for (std::size_t k = 0; k < value; ++k) {
      Path walk;
      std::uint32_t x = source;
      while (x != sink) {
        std::uint32_t next = none;
        for (auto a : net.out_arcs(x)) {
          if ((a & 1u) == 0 && flow[a] > 0) {
            next = a;
            break;
          }
        }
        if (next == none) break;  // unreachable with a valid flow
        --flow[next];
        x = net.arc(next).to;
        if (x != sink && x % 2 == 0) {
          const Vertex v = x / 2;
          auto it = std::find(walk.begin(), walk.end(), v);
          if (it != walk.end()) walk.erase(it + 1, walk.end());
          else walk.push_back(v);
        }
      }
      paths.push_back(std::move(walk));
    }
    return paths;
  }
};

std::vector<FlowNetwork::Cap> node_caps(const LevelledDigraph& g, const std::vector<Vertex>& A,
                                        const std::vector<Vertex>& B, Disjointness mode) {
  std::vector<FlowNetwork::Cap> cap(g.vertex_count(), 1);
  if (mode == Disjointness::vertex) return cap;
  if (mode == Disjointness::edge) {
    std::fill(cap.begin(), cap.end(), -1);
  } else {
    for (Vertex a : A) cap[a] = -1;
    for (Vertex b : B) cap[b] = -1;
  }
  // A vertex in both sides only carries its trivial path, once.
  const auto is_a = to_mask(g, A);
  for (Vertex b : B) {
    if (is_a[b]) cap[b] = 1;
  }
  return cap;
}

}  // namespace

PathSystem max_disjoint_dipaths(const LevelledDigraph& g, std::span<const Vertex> A,
                                std::span<const Vertex> B, Disjointness mode,
                                const FlowOptions& options) {
  const auto a = ordered_unique(A, options.blocked);
  const auto b = ordered_unique(B, options.blocked);
  SplitNetwork sn(g, a, b, node_caps(g, a, b, mode), mode == Disjointness::vertex ? -1 : 1,
                  options.blocked);
  const auto value = sn.net.augment(sn.source, sn.sink, options.limit);
  PathSystem ps;
  ps.mode = mode;
  ps.paths = sn.decompose(value);
  if (mode == Disjointness::internal) {
    std::vector<Vertex> t(a);
    t.insert(t.end(), b.begin(), b.end());
    ps.terminals = make_set(std::move(t));
  }
  return ps;
}

PathSystem max_edge_disjoint_dipaths(const LevelledDigraph& g, std::span<const Vertex> A,
                                     std::span<const Vertex> B, const FlowOptions& options) {
  return max_disjoint_dipaths(g, A, B, Disjointness::edge, options);
}

std::size_t max_flow_value(const LevelledDigraph& g, std::span<const Vertex> A,
                           std::span<const Vertex> B, Disjointness mode,
                           const FlowOptions& options) {
  const auto a = ordered_unique(A, options.blocked);
  const auto b = ordered_unique(B, options.blocked);
  SplitNetwork sn(g, a, b, node_caps(g, a, b, mode), mode == Disjointness::vertex ? -1 : 1,
                  options.blocked);
  return sn.net.augment(sn.source, sn.sink, options.limit);
}

SeparatorCertificate min_vertex_separator(const LevelledDigraph& g, std::span<const Vertex> A,
                                          std::span<const Vertex> B,
                                          std::span<const Vertex> protected_vertices,
                                          const std::vector<bool>* blocked) {
  const auto a = ordered_unique(A, blocked);
  const auto b = ordered_unique(B, blocked);
  std::vector<FlowNetwork::Cap> cap(g.vertex_count(), 1);
  for (Vertex p : protected_vertices) cap[p] = -1;
  SplitNetwork sn(g, a, b, cap, -1, blocked);
  const std::size_t n = g.vertex_count();
  const auto value = sn.net.augment(sn.source, sn.sink, n + 1);
  SeparatorCertificate cert;
  cert.sources = make_set(a);
  cert.targets = make_set(b);
  if (value > n) {
    throw InfeasibleError("no separator between the given sets avoids the protected vertices");
  }
  const auto reach = sn.net.residual_reachable(sn.source);
  for (Vertex v = 0; v < n; ++v) {
    if (sn.node_arc[v] != SplitNetwork::none && reach[2 * v] && !reach[2 * v + 1]) {
      cert.separator.push_back(v);
    }
  }
  cert.flow_value = value;
  return cert;
}

EdgeSeparatorCertificate min_edge_separator(const LevelledDigraph& g, std::span<const Vertex> A,
                                            std::span<const Vertex> B) {
  const auto a = ordered_unique(A, nullptr);
  const auto b = ordered_unique(B, nullptr);
  const auto is_a = to_mask(g, a);
  for (Vertex v : b) {
    if (is_a[v]) throw InfeasibleError("sources and targets intersect; no edge separator exists");
  }
  SplitNetwork sn(g, a, b, node_caps(g, a, b, Disjointness::edge), 1, nullptr);
  EdgeSeparatorCertificate cert;
  cert.sources = make_set(a);
  cert.targets = make_set(b);
  cert.flow_value = sn.net.augment(sn.source, sn.sink, unlimited);
  const auto reach = sn.net.residual_reachable(sn.source);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!reach[2 * u + 1]) continue;
    for (auto arc : sn.net.out_arcs(2 * u + 1)) {
      if (arc & 1u) continue;
      const auto to = sn.net.arc(arc).to;
      if (to == sn.sink || reach[to]) continue;
      cert.edges.emplace_back(u, to / 2);
    }
  }
  return cert;
}

PathSystem fan(const LevelledDigraph& g, Vertex v, std::span<const Vertex> target, std::size_t t,
               const std::vector<bool>* blocked) {
  if (std::find(target.begin(), target.end(), v) != target.end()) {
    throw PreconditionError("fan centre '" + g.tag(v) + "' lies in the target set");
  }
  const std::vector<Vertex> a{v};
  const auto b = ordered_unique(target, blocked);
  std::vector<FlowNetwork::Cap> cap(g.vertex_count(), 1);
  cap[v] = -1;
  SplitNetwork sn(g, a, b, cap, 1, blocked);
  const auto value = sn.net.augment(sn.source, sn.sink, t);
  PathSystem ps;
  ps.mode = Disjointness::internal;
  ps.terminals = {v};
  ps.paths = sn.decompose(value);
  return ps;
}

namespace {

template <typename Next>
std::vector<bool> search(const LevelledDigraph& g, std::span<const Vertex> from,
                         const std::vector<bool>* blocked, Next next) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> todo;
  for (Vertex v : from) {
    if ((blocked && (*blocked)[v]) || seen[v]) continue;
    seen[v] = true;
    todo.push_back(v);
  }
  while (!todo.empty()) {
    const Vertex x = todo.back();
    todo.pop_back();
    for (Vertex y : next(x)) {
      if (seen[y] || (blocked && (*blocked)[y])) continue;
      seen[y] = true;
      todo.push_back(y);
    }
  }
  return seen;
}

}  // namespace

std::vector<bool> reachable_from(const LevelledDigraph& g, std::span<const Vertex> from,
                                 const std::vector<bool>* blocked) {
  return search(g, from, blocked, [&](Vertex x) { return g.out(x); });
}

std::vector<bool> reaching(const LevelledDigraph& g, std::span<const Vertex> to,
                           const std::vector<bool>* blocked) {
  return search(g, to, blocked, [&](Vertex x) { return g.in(x); });
}

std::optional<Path> shortest_dipath(const LevelledDigraph& g, std::span<const Vertex> from,
                                    std::span<const Vertex> to, const std::vector<bool>* blocked) {
  const auto goal = to_mask(g, to);
  constexpr Vertex unset = 0xffffffffu;
  std::vector<Vertex> parent(g.vertex_count(), unset);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue;
  for (Vertex v : from) {
    if ((blocked && (*blocked)[v]) || seen[v]) continue;
    seen[v] = true;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (goal[x]) {
      Path p{x};
      for (Vertex y = parent[x]; y != unset; y = parent[y]) p.push_back(y);
      std::reverse(p.begin(), p.end());
      return p;
    }
    for (Vertex y : g.out(x)) {
      if (seen[y] || (blocked && (*blocked)[y])) continue;
      seen[y] = true;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

bool is_dipath(const LevelledDigraph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  for (Vertex v : path) {
    if (v >= g.vertex_count()) return false;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) return false;
  }
  auto sorted = make_set({path.begin(), path.end()});
  return sorted.size() == path.size();
}

std::optional<std::string> check_path_system(const LevelledDigraph& g, const PathSystem& ps,
                                             std::span<const Vertex> A, std::span<const Vertex> B) {
  const auto in_a = to_mask(g, A);
  const auto in_b = to_mask(g, B);
  const auto terminal = to_mask(g, ps.terminals);
  std::vector<int> owner(g.vertex_count(), -1);
  std::vector<std::pair<Vertex, Vertex>> used_edges;
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    const auto& p = ps.paths[i];
    if (!is_dipath(g, p)) return "path " + std::to_string(i) + " is not a simple dipath";
    if (!A.empty() && !in_a[p.front()]) return "path " + std::to_string(i) + " does not start in A";
    if (!B.empty() && !in_b[p.back()]) return "path " + std::to_string(i) + " does not end in B";
    if (ps.mode == Disjointness::edge) {
      for (std::size_t k = 0; k + 1 < p.size(); ++k) used_edges.emplace_back(p[k], p[k + 1]);
      continue;
    }
    for (Vertex v : p) {
      if (ps.mode == Disjointness::internal && terminal[v]) continue;
      if (owner[v] != -1) {
        return "paths " + std::to_string(owner[v]) + " and " + std::to_string(i) + " share '" +
               g.tag(v) + "'";
      }
      owner[v] = static_cast<int>(i);
    }
  }
  std::sort(used_edges.begin(), used_edges.end());
  auto dup = std::adjacent_find(used_edges.begin(), used_edges.end());
  if (dup != used_edges.end()) {
    return "two paths share edge " + g.tag(dup->first) + "->" + g.tag(dup->second);
  }
  return std::nullopt;
}

std::optional<std::string> check_separator(const LevelledDigraph& g,
                                           const SeparatorCertificate& cert,
                                           const std::vector<bool>* blocked) {
  auto gone = to_mask(g, cert.separator);
  if (blocked) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) gone[v] = gone[v] || (*blocked)[v];
  }
  const auto reach = reachable_from(g, cert.sources, &gone);
  for (Vertex b : cert.targets) {
    if (reach[b]) return "target '" + g.tag(b) + "' still reachable";
  }
  if (cert.separator.size() != cert.flow_value) return "separator size differs from flow value";
  return std::nullopt;
}

std::optional<std::string> check_edge_separator(const LevelledDigraph& g,
                                                const EdgeSeparatorCertificate& cert) {
  // Reachability with the cut edges removed.
  std::vector<bool> seen(g.vertex_count(), false);
  auto cut = cert.edges;
  std::sort(cut.begin(), cut.end());
  std::vector<Vertex> todo(cert.sources.begin(), cert.sources.end());
  for (Vertex v : todo) seen[v] = true;
  while (!todo.empty()) {
    const Vertex x = todo.back();
    todo.pop_back();
    for (Vertex y : g.out(x)) {
      if (seen[y] || std::binary_search(cut.begin(), cut.end(), std::pair{x, y})) continue;
      seen[y] = true;
      todo.push_back(y);
    }
  }
  for (Vertex b : cert.targets) {
    if (seen[b]) return "target '" + g.tag(b) + "' still reachable";
  }
  if (cut.size() != cert.flow_value) return "separator size differs from flow value";
  return std::nullopt;
}

}  // namespace endgraph
