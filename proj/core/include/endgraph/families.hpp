#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endgraph/presentation.hpp"

namespace endgraph {

/// Triangular number 1 + 2 + ... + n.
constexpr Level triangle(Level n) { return n * (n + 1) / 2; }

/// Index of the first vertex of row i of the "every ray meets every
/// anti-ray" digraph: (1 + ... + (i-1)) + 1.
constexpr Level row_origin(Level i) { return triangle(i - 1) + 1; }

struct CounterexampleOptions {
  /// Emit diagonal edges for i = 1 too (x^1_2 -> x^1_1). Off by default:
  /// that edge would run backwards inside R_1.
  bool diagonal_row_one = false;
  /// Test hook: reverse the down edge x^{i+1}_k -> x^i_k at (i, k).
  std::optional<std::pair<Level, Level>> flipped_down_edge;
};

/// Tag of x^i_k, e.g. "x2_4".
std::string cx_tag(Level row, Level index);

/// Rays R_i = x^i_{i'} x^i_{i'+1} ... (i' = row_origin(i)), down edges
/// x^{i+1}_k -> x^i_k and diagonal edges x^1_k -> x^i_{i''}. Level of x^i_k
/// is k. Declares one end "omega" with canonical ray R_1 and canonical
/// anti-ray the k'=1 colour-pattern anti-ray.
Presentation counterexample(const CounterexampleOptions& options = {});

/// The colour-pattern anti-ray with parameter k' >= 1, restricted to the
/// truncation at `depth`, in path order (top of the window first, end vertex
/// last). Round r enters row r at x^r_{T(r-1)+k'} through the diagonal from
/// x^1_{T(r)+k'} and descends to x^1_{T(r-1)+k'} by down edges.
std::vector<std::string> colour_antiray(Level kprime, Level depth, bool diagonal_row_one = false);

/// Target of the diagonal edge leaving x^1_k, if any: returns (row, index).
std::optional<std::pair<Level, Level>> diagonal_target(Level k, bool diagonal_row_one = false);

/// Three rows a (R^-), b (R), c (R^<-) indexed by column, b-c vertical edges
/// up at even columns and down at odd ones. Ends "omega" (b-row) and "eta" (a-row).
Presentation example52();

/// u -> u-, u+ with u- -> u+ and u+ -> v- for every edge u -> v.
Presentation edge_split(const Presentation& p);
/// Same construction on a finite digraph: v becomes v- -> v+, u -> w becomes
/// u+ -> w-. Levels, depth and span are kept.
LevelledDigraph edge_split(const LevelledDigraph& g);
std::string split_in(const std::string& tag);   // u-
std::string split_out(const std::string& tag);  // u+

/// Directed half-grid: rows r >= 0 starting at column r, horizontal edges to
/// the right, vertical edges in both directions. One end of unbounded
/// in-degree.
Presentation halfgrid();

/// `rails` parallel rails; even rails point away from the origin, odd rails
/// towards it; adjacent rails joined by rungs in both directions.
Presentation ladder(std::size_t rails = 6);

/// k parallel rays joined cyclically by rungs inside every level, plus m hub
/// vertices each joined to and from every ray vertex.
Presentation krays(std::size_t k, std::size_t m = 0);

Presentation single_ray();
Presentation single_antiray();
/// Spine s_0 s_1 ... with one tooth t_l hanging off every s_l.
Presentation out_comb();

/// Family lookup used by the CLI and JSON configs. Names: counterexample,
/// example52, halfgrid, ladder (w), krays (k), krays+mdom (k, m), ray,
/// antiray, outcomb, and "split:<name>" for the edge split of any of them.
/// Throws PreconditionError for unknown names or bad parameters.
Presentation family_by_name(const std::string& name,
                            const std::map<std::string, std::string>& params = {});
std::vector<std::string> family_names();

}  // namespace endgraph
