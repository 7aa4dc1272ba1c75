#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "endgraph/digraph.hpp"

namespace endgraph {

/// Vertex as emitted by a presentation generator.
struct VertexSpec {
  VertexId id;
  Level level = 0;
  bool hub = false;
};

/// Out-edge target as emitted by a presentation generator. The target level
/// is part of the emission so that edges leaving the truncation can be
/// dropped without generating the target level.
struct EdgeTarget {
  std::string tag;
  Level level = 0;
};

/// A declared end of a presented digraph.
///
/// `canonical_ray(depth)` returns the prefix of the canonical ray that lies
/// inside the truncation at `depth`, in path order; `canonical_antiray(depth)`
/// returns the part of the canonical anti-ray inside that truncation, in path
/// order (from the top of the window down to its end vertex). Either may be
/// empty when the end has no ray (resp. anti-ray).
struct EndDescriptor {
  std::string name;
  std::function<std::vector<std::string>(Level depth)> canonical_ray;
  std::function<std::vector<std::string>(Level depth)> canonical_antiray;
  std::vector<std::string> dominating_candidates;
  std::vector<std::string> smaller_ends;
};

/// Level-indexed generator of an infinite digraph.
struct Presentation {
  std::string name;
  /// Vertices at level l, finitely many.
  std::function<std::vector<VertexSpec>(Level l)> vertices_at;
  /// Out-edges of v whose target level is at most `max_level`, in emission
  /// order.
  std::function<std::vector<EdgeTarget>(const VertexSpec& v, Level max_level)> edges_from;
  /// Largest level difference of a non-hub edge inside the truncation at
  /// `depth`. Constant for most families.
  std::function<Level(Level depth)> span_at;
  std::vector<EndDescriptor> ends;

  const EndDescriptor& end(std::string_view name) const;  // throws UnknownEndError
};

/// Vertices of levels 0..depth and every edge between them, in generator
/// order. Throws PresentationError when the generator emits an invalid edge
/// (beyond span, self-loop, parallel, dangling target).
LevelledDigraph truncate(const Presentation& p, Level depth);

}  // namespace endgraph
