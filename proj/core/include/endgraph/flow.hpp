#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "endgraph/digraph.hpp"
#include "endgraph/error.hpp"

namespace endgraph {

enum class Disjointness { vertex, internal, edge };

std::string to_string(Disjointness mode);
/// Accepts "vertex", "internal", "edge"; throws PreconditionError otherwise.
Disjointness parse_disjointness(std::string_view name);

/// Dipaths of one host digraph, pairwise disjoint per `mode`. In internal
/// mode the paths may share vertices of `terminals` only.
struct PathSystem {
  std::vector<Path> paths;
  Disjointness mode = Disjointness::vertex;
  VertexSet terminals;

  std::size_t size() const { return paths.size(); }
};

/// Removing `separator` from the host leaves no sources-targets dipath.
struct SeparatorCertificate {
  VertexSet separator;
  VertexSet sources;
  VertexSet targets;
  std::size_t flow_value = 0;
};

struct EdgeSeparatorCertificate {
  std::vector<std::pair<Vertex, Vertex>> edges;
  VertexSet sources;
  VertexSet targets;
  std::size_t flow_value = 0;
};

/// A requested separator or connector system does not exist. Carries the
/// separator that certifies it when there is one.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what, std::optional<SeparatorCertificate> cert = {})
      : Error(what), certificate_(std::move(cert)) {}
  const std::optional<SeparatorCertificate>& certificate() const { return certificate_; }

 private:
  std::optional<SeparatorCertificate> certificate_;
};

inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

/// Restrictions shared by the flow routines. `blocked` (indexed by vertex)
/// removes vertices from the host; `limit` stops after that many paths.
struct FlowOptions {
  std::size_t limit = unlimited;
  const std::vector<bool>* blocked = nullptr;
};

/// Maximum system of A-B dipaths, disjoint per mode.
///
/// An A-B dipath meets A only in its first vertex and B only in its last, so
/// a vertex of A and B gives the trivial one-vertex path. Internal mode treats
/// A and B as terminals. Augmenting paths are searched depth-first in
/// adjacency order with sources tried in the order given, so the result is
/// deterministic and, when the first source starts a usable dipath, the first
/// path found is the depth-first one from it.
PathSystem max_disjoint_dipaths(const LevelledDigraph& g, std::span<const Vertex> A,
                                std::span<const Vertex> B, Disjointness mode,
                                const FlowOptions& options = {});

PathSystem max_edge_disjoint_dipaths(const LevelledDigraph& g, std::span<const Vertex> A,
                                     std::span<const Vertex> B, const FlowOptions& options = {});

/// Number of disjoint paths only; same as max_disjoint_dipaths(...).size().
std::size_t max_flow_value(const LevelledDigraph& g, std::span<const Vertex> A,
                           std::span<const Vertex> B, Disjointness mode,
                           const FlowOptions& options = {});

/// Smallest vertex set S avoiding `protected_vertices` such that g - S has no
/// A-B dipath. S may contain vertices of A and B that are not protected. Among
/// minimum separators the one closest to A is returned.
/// Throws InfeasibleError when every separator needs a protected vertex.
SeparatorCertificate min_vertex_separator(const LevelledDigraph& g, std::span<const Vertex> A,
                                          std::span<const Vertex> B,
                                          std::span<const Vertex> protected_vertices,
                                          const std::vector<bool>* blocked = nullptr);

/// Smallest edge set whose removal leaves no A-B dipath (closest to A).
/// Throws InfeasibleError when A and B intersect.
EdgeSeparatorCertificate min_edge_separator(const LevelledDigraph& g, std::span<const Vertex> A,
                                            std::span<const Vertex> B);

/// Maximum v-target dipaths pairwise meeting only in v, capped at t.
/// Throws PreconditionError when v is in target.
PathSystem fan(const LevelledDigraph& g, Vertex v, std::span<const Vertex> target, std::size_t t,
               const std::vector<bool>* blocked = nullptr);

/// Vertices reachable from `from` in g minus `blocked`.
std::vector<bool> reachable_from(const LevelledDigraph& g, std::span<const Vertex> from,
                                 const std::vector<bool>* blocked = nullptr);
/// Vertices that reach `to` in g minus `blocked`.
std::vector<bool> reaching(const LevelledDigraph& g, std::span<const Vertex> to,
                           const std::vector<bool>* blocked = nullptr);

/// Shortest dipath (BFS, adjacency order) from any vertex of `from` to any of
/// `to` in g minus `blocked`.
std::optional<Path> shortest_dipath(const LevelledDigraph& g, std::span<const Vertex> from,
                                    std::span<const Vertex> to,
                                    const std::vector<bool>* blocked = nullptr);

bool is_dipath(const LevelledDigraph& g, std::span<const Vertex> path);

/// Empty when the system is valid: every path a simple dipath, starting in
/// A and ending in B when those are given, and pairwise disjoint per mode.
std::optional<std::string> check_path_system(const LevelledDigraph& g, const PathSystem& ps,
                                             std::span<const Vertex> A = {},
                                             std::span<const Vertex> B = {});

/// Empty when removing the separator destroys every sources-targets dipath.
std::optional<std::string> check_separator(const LevelledDigraph& g,
                                           const SeparatorCertificate& cert,
                                           const std::vector<bool>* blocked = nullptr);

std::optional<std::string> check_edge_separator(const LevelledDigraph& g,
                                                const EdgeSeparatorCertificate& cert);

}  // namespace endgraph
