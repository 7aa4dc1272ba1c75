#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace endgraph {

using Level = std::size_t;

/// Dense index of a vertex inside one LevelledDigraph.
using Vertex = std::uint32_t;

using Path = std::vector<Vertex>;
using VertexSet = std::vector<Vertex>;  // sorted, unique

/// Label of a vertex as produced by a presentation. Equality is by tag only;
/// `coord` is a 2D layout hint used by the DOT exporter.
struct VertexId {
  std::string tag;
  std::vector<int> coord;

  friend bool operator==(const VertexId& a, const VertexId& b) {
    return a.tag == b.tag;
  }
};

struct VertexInfo {
  VertexId id;
  Level level = 0;
  bool hub = false;
};

/// Finite truncation of a presented infinite digraph.
///
/// Vertices are stored in presentation order (by level, then emission order
/// inside a level) and out-edges in generator emission order. Every search in
/// the library iterates adjacency lists in this order, which is what makes
/// witnesses reproducible. Values are immutable once built; use
/// DigraphBuilder to make one.
class LevelledDigraph {
 public:
  LevelledDigraph() = default;

  const std::string& name() const { return name_; }
  Level depth() const { return depth_; }
  Level span() const { return span_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexInfo& info(Vertex v) const { return vertices_[v]; }
  const std::string& tag(Vertex v) const { return vertices_[v].id.tag; }
  Level level(Vertex v) const { return vertices_[v].level; }
  bool is_hub(Vertex v) const { return vertices_[v].hub; }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }

  std::optional<Vertex> find(std::string_view tag) const;
  /// Like find() but throws PreconditionError for unknown tags.
  Vertex at(std::string_view tag) const;
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges in (source order, adjacency order).
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Vertices with level(v) >= depth - span + 1: the band every continuation
  /// beyond the truncation has to leave through.
  VertexSet frontier() const;
  /// Lowest level of the frontier band (depth + 1 when the band is empty).
  Level frontier_floor() const;

  std::vector<Vertex> vertices_at(Level l) const;
  VertexSet tags_to_set(std::span<const std::string> tags) const;
  Path tags_to_path(std::span<const std::string> tags) const;
  std::vector<std::string> path_tags(std::span<const Vertex> path) const;

  friend bool operator==(const LevelledDigraph& a, const LevelledDigraph& b);

 private:
  friend class DigraphBuilder;
  friend LevelledDigraph reverse(const LevelledDigraph& g);

  std::string name_;
  Level depth_ = 0;
  Level span_ = 0;
  std::vector<VertexInfo> vertices_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::unordered_map<std::string, Vertex> index_;
  std::size_t edge_count_ = 0;
};

/// Accumulates vertices and edges and validates the LevelledDigraph
/// invariants in build().
class DigraphBuilder {
 public:
  DigraphBuilder(std::string name, Level depth, Level span);

  /// Throws ValidationError on duplicate tags or level > depth.
  Vertex add_vertex(VertexId id, Level level, bool hub = false);
  /// Throws ValidationError on unknown endpoints, self-loops, parallel edges
  /// and non-hub edges longer than the span.
  void add_edge(std::string_view from, std::string_view to);
  void add_edge(Vertex from, Vertex to);

  bool contains(std::string_view tag) const;

  LevelledDigraph build() &&;

 private:
  LevelledDigraph g_;
};

/// Same vertices and levels, every edge u->v replaced by v->u. Adjacency
/// order of the result follows the source order of the original edges.
LevelledDigraph reverse(const LevelledDigraph& g);

/// Induced subdigraph on levels <= depth; used to check truncation
/// coherence.
LevelledDigraph restrict_to_depth(const LevelledDigraph& g, Level depth);

/// Copy of g without the given vertices (indices are renumbered; use tags to
/// map back).
LevelledDigraph remove_vertices(const LevelledDigraph& g, std::span<const Vertex> removed);

VertexSet make_set(std::vector<Vertex> vs);
std::vector<bool> to_mask(const LevelledDigraph& g, std::span<const Vertex> vs);

}  // namespace endgraph
