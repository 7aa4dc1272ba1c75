#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endgraph/digraph.hpp"
#include "endgraph/ends.hpp"
#include "endgraph/flow.hpp"

namespace endgraph {

/// n disjoint ray witnesses R_i, checkpoints x_i on them, and the connector
/// generations P^1..P^n between the reference ray and the rays.
struct RayFamilyState {
  std::vector<Path> rays;
  std::vector<std::size_t> checkpoints;  // index of x_i on rays[i]
  /// generation k holds, per ray i it served, a dipath reference -> ray and
  /// one ray -> reference, stored as [to_0, from_0, to_1, from_1, ...]
  std::vector<std::vector<Path>> connectors;

  std::size_t size() const { return rays.size(); }
  Path prefix(std::size_t i) const;  // R_i x_i
};

/// One inductive step: n rays become n + 1. `fresh` holds n + 1 disjoint
/// witnesses avoiding every prefix R_i x_i (PreconditionError otherwise);
/// with an empty state only fresh[0] is used. Throws InfeasibleError when
/// Menger or a connector fails inside the window.
RayFamilyState extend_ray_family(const LevelledDigraph& g, const RayFamilyState& state,
                                 const std::vector<Path>& fresh, const Path& reference_ray);

/// count disjoint end-consistent witnesses in g minus the state's prefixes,
/// starting as low as possible. Fewer come back when the window is too
/// shallow.
std::vector<Path> fresh_rays(const LevelledDigraph& g, const Path& reference_ray,
                             const RayFamilyState& state, std::size_t count);

/// Empty when the state is consistent on its own: disjoint witnesses,
/// checkpoints after every connector vertex on the ray, connector
/// generations pairwise disjoint.
std::optional<std::string> check_ray_family(const LevelledDigraph& g, const RayFamilyState& state,
                                            const Path& reference_ray);

/// Empty when `after` extends `before`: one more ray, and every old prefix a
/// proper starting subpath of the new one.
std::optional<std::string> check_extension(const RayFamilyState& before, const RayFamilyState& after);

/// n disjoint in-degree witnesses of the end and n anti-ray witnesses of it
/// in g minus those rays. Throws InfeasibleError, with the separator that
/// blocks the anti-rays, when fewer exist.
std::pair<std::vector<Path>, std::vector<Path>> disjoint_ray_antiray_witnesses(const LevelledDigraph& g,
                                                                               const EndDescriptor& end,
                                                                               std::size_t n);

/// n disjoint double-ray prefixes, each anti-ray tail + connector + ray tail.
/// Anti-ray witnesses run from the frontier down to their start. Throws
/// PreconditionError when the 2n witnesses are not pairwise disjoint valid
/// witnesses, InfeasibleError (with certificate when there is one) when the
/// connector system is not realisable in the window.
PathSystem double_rays(const LevelledDigraph& g, const std::vector<Path>& rays,
                       const std::vector<Path>& antirays);

/// Empty when every path of `ps` is a dipath, they are pairwise disjoint, and
/// each starts with a tail of some anti-ray and ends with a tail of some ray.
std::optional<std::string> check_double_rays(const LevelledDigraph& g, const PathSystem& ps,
                                             const std::vector<Path>& rays,
                                             const std::vector<Path>& antirays);

}  // namespace endgraph
