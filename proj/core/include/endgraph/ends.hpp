#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "endgraph/digraph.hpp"
#include "endgraph/flow.hpp"
#include "endgraph/presentation.hpp"

namespace endgraph {

enum class RayKind { ray, antiray };

/// Finite stand-in for a ray (ends in the frontier) or an anti-ray (starts
/// in the frontier).
struct RayWitness {
  Path path;
  RayKind kind = RayKind::ray;
};

std::optional<std::string> check_ray_witness(const LevelledDigraph& g, const RayWitness& w);

/// Depth-first enumeration (adjacency order) of dipaths from `start` that
/// end at their first frontier vertex, at most `limit` of them.
std::vector<RayWitness> ray_witnesses(const LevelledDigraph& g, std::span<const Vertex> start,
                                      std::size_t limit);
/// Same on the reversed digraph: dipaths leaving the frontier and ending at
/// their first vertex of `end`.
std::vector<RayWitness> antiray_witnesses(const LevelledDigraph& g, std::span<const Vertex> end,
                                          std::size_t limit);

/// The part of the end's canonical ray (anti-ray) inside g, in path order.
/// Vertices missing from g are skipped.
Path canonical_ray(const LevelledDigraph& g, const EndDescriptor& end);
Path canonical_antiray(const LevelledDigraph& g, const EndDescriptor& end);

/// The end seen in the reversed digraph: its anti-ray, reversed, becomes the
/// canonical ray and vice versa.
EndDescriptor reverse_end(const EndDescriptor& end);

/// Frontier vertices that reach and are reached from `ray_vertices` inside
/// the top two frontier bands (levels >= depth - 2 span + 1), hubs excluded.
VertexSet consistent_frontier(const LevelledDigraph& g, std::span<const Vertex> ray_vertices);
VertexSet consistent_frontier(const LevelledDigraph& g, const EndDescriptor& end);

bool is_end_consistent(const LevelledDigraph& g, const EndDescriptor& end, const RayWitness& w);

/// Levels [l0, l0 + max(span - 1, (depth - l0) / 2)], l0 the level of the
/// ray's first vertex. Ray vertices come first, then the rest of the band in
/// vertex order. Hubs are left out.
std::vector<Vertex> seed_band(const LevelledDigraph& g, std::span<const Vertex> ray);

/// min(disjoint P->Q dipaths, disjoint Q->P dipaths), each capped at t.
std::size_t equivalence_degree(const LevelledDigraph& g, std::span<const Vertex> P,
                               std::span<const Vertex> Q, std::size_t t);

/// Disjoint dipaths from the seed band of the end's canonical ray to its
/// consistent frontier in g minus hubs, capped at t.
PathSystem in_degree_witnesses(const LevelledDigraph& g, const EndDescriptor& end, std::size_t t);
std::size_t in_degree_estimate(const LevelledDigraph& g, const EndDescriptor& end, std::size_t t);

/// in_degree on reverse(g) for reverse_end(end). Witness paths are reported
/// in g's orientation (anti-rays).
PathSystem out_degree_witnesses(const LevelledDigraph& g, const EndDescriptor& end, std::size_t t);
std::size_t out_degree_estimate(const LevelledDigraph& g, const EndDescriptor& end, std::size_t t);

/// fan(v, canonical ray) >= t and some canonical-ray vertex reaches v. A
/// true answer certifies domination at this depth and threshold; false is
/// advisory.
bool dominates(const LevelledDigraph& g, Vertex v, const EndDescriptor& end, std::size_t t);

/// Dominating candidates of the end that pass `dominates`.
VertexSet certified_dominators(const LevelledDigraph& g, const EndDescriptor& end, std::size_t t);

struct StarCombWitness {
  enum class Variant { star, comb };
  Variant variant = Variant::star;
  Vertex centre = 0;    // star only
  Path spine;           // comb only
  PathSystem branches;  // star: centre-U paths; comb: spine-U teeth
  VertexSet leaves;     // last vertex of every branch
};

std::optional<std::string> check_star_comb(const LevelledDigraph& g, const StarCombWitness& w,
                                           std::span<const Vertex> U);

/// Star-comb dichotomy on a depth-first out-arborescence from x. Returns a
/// star with t branches when some arborescence vertex has t children whose
/// subtrees meet U; otherwise a comb whose spine reaches the frontier.
/// Throws InsufficientInputError when fewer than t vertices of U are
/// reachable from x, or when neither witness exists in the window.
StarCombWitness star_comb(const LevelledDigraph& g, Vertex x, std::span<const Vertex> U,
                          std::size_t t);

}  // namespace endgraph
