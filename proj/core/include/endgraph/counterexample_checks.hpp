#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endgraph/digraph.hpp"
#include "endgraph/families.hpp"

namespace endgraph {

struct SubCheck {
  std::string name;
  bool pass = true;
  std::string detail;
  /// Offending path or vertex list when the check fails.
  std::vector<std::string> witness;
};

struct CheckReport {
  std::string subject;
  Level depth = 0;
  std::vector<SubCheck> checks;

  bool pass() const;
  const SubCheck* find(const std::string& name) const;
};

struct VerifyCounterexampleOptions {
  CounterexampleOptions family;
  /// Keep diagonal edges in the backward-walk check; that check then
  /// reports cycles instead of passing.
  bool retain_diagonals = false;
};

/// Role of an edge of the counterexample truncation, read off the tags.
enum class CxEdge { ray, down, diagonal, other };
CxEdge classify_cx_edge(const LevelledDigraph& g, Vertex u, Vertex v);

/// Weaving ray prefix: starts at x^row_level, climbs `extra` steps, drops by
/// down edges to R_1, climbs R_1 to the next diagonal leading to an unused
/// part of a row, takes it, climbs until `extra` levels above where it left
/// R_1, and so on until the window ends. Tags in path order.
std::vector<std::string> weaving_ray(Level row, Level level, Level extra, Level depth);

/// Built-in eventually-periodic families at `depth`: straight rays R_1..R_4,
/// weaving rays, and the colour-pattern anti-rays (k' = 1, 2, ...).
std::vector<std::vector<std::string>> builtin_ray_family(Level depth);
std::vector<std::vector<std::string>> builtin_antiray_family(Level depth, bool diagonal_row_one = false);

/// Cyclic order of neighbours at each vertex from the planar layout: rays
/// radial at decreasing angles, down edges as arcs, diagonals leaving R_1 on
/// the left and entering their row from the clockwise side.
std::vector<std::vector<Vertex>> counterexample_rotation(const LevelledDigraph& g);

struct FaceCount {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t components = 0;
};

/// Faces traced from a rotation system (undirected, each edge once).
FaceCount trace_faces(const LevelledDigraph& g, const std::vector<std::vector<Vertex>>& rotation);

/// Sub-checks (a)-(d) on the truncation of the counterexample at `depth`.
/// Throws PreconditionError for depth < 10.
CheckReport verify_counterexample(Level depth, const VerifyCounterexampleOptions& options = {});

/// The edge analogue on edge_split(counterexample()).
CheckReport verify_edge_counterexample(Level depth, const VerifyCounterexampleOptions& options = {});

}  // namespace endgraph
