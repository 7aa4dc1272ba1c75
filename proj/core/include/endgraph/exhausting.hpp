#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "endgraph/digraph.hpp"
#include "endgraph/ends.hpp"
#include "endgraph/flow.hpp"
#include "endgraph/presentation.hpp"

namespace endgraph {

/// U_1, U_2, ... stored 0-based: sets[0] is U_1.
struct ExhaustingSequence {
  std::vector<VertexSet> sets;

  /// Finite stand-in for liminf |U_i|: the minimum size over the second
  /// half of the list. Zero for an empty list.
  std::size_t liminf_size() const;
};

/// Tags to sets; unknown tags are dropped and the list ends at the first set
/// that becomes empty (it lies beyond the truncation).
ExhaustingSequence sequence_from_tags(const LevelledDigraph& g,
                                      const std::vector<std::vector<std::string>>& sets);
std::vector<std::vector<std::string>> sequence_tags(const LevelledDigraph& g,
                                                    const ExhaustingSequence& seq);

struct ExhaustingVerdict {
  bool pass = true;
  /// 0-based index i of the violated step (U_i met, U_{i+1} missed), or
  /// none for a coverage failure.
  std::optional<std::size_t> index;
  std::optional<RayWitness> witness;
  std::string reason;
  std::size_t checked_steps = 0;
};

struct VerifyExhaustingOptions {
  /// Also demand that every end-consistent ray meets some U_i. Off for
  /// sequences that only claim progress (the diagonal sequence).
  bool check_coverage = true;
};

/// Decides, by reachability on g, whether an end-consistent ray witness can
/// meet U_i and avoid U_{i+1}. Step i is checked only while U_{i+1} lies
/// strictly below the frontier band; beyond that the truncation cannot tell.
/// Coverage is checked when the last set reaches the frontier band: no
/// end-consistent witness starting below the band may avoid every U_i.
/// FAIL always comes with a witness.
ExhaustingVerdict verify_exhausting(const LevelledDigraph& g, const EndDescriptor& end,
                                    const ExhaustingSequence& seq,
                                    const VerifyExhaustingOptions& options = {});

/// V_i = { x^j_k : j + k <= i - 1 }, rays 0-based as x^j_0 x^j_1 ... Throws
/// PreconditionError on an empty or non-disjoint family.
ExhaustingSequence diagonal_exhausting_sequence(const LevelledDigraph& g,
                                                const std::vector<Path>& rays);

struct GradedSequence {
  ExhaustingSequence sequence;
  /// The d disjoint end-consistent witnesses the sets march along.
  PathSystem rays;
  /// Set when g - S carries more than d disjoint witnesses; the sequence is
  /// then empty.
  std::optional<std::size_t> contradiction_flow;
};

/// Sets of size d in g - S: U_1 is the start of d disjoint end-consistent
/// witnesses, U_{i+1} the minimum separator closest to U_i between U_i and
/// the witnesses' vertices above U_i. Throws PreconditionError when fewer
/// than d witnesses exist.
GradedSequence graded_sequence(const LevelledDigraph& g, const EndDescriptor& end,
                               std::span<const Vertex> S, std::size_t d);

/// Vertices lying in every U_i for i in the top half of the first `window`
/// sets.
VertexSet stable_core(const ExhaustingSequence& seq, std::size_t window);

/// The V_i of the partition construction: with graded sequences U^1..U^m for
/// the ends of B (in B's order),
///   V_1 = S + U_1^1 + ... + U_1^m,  V_i = S + U_1^1 + ... + U_1^{m-1} + U_i^m.
ExhaustingSequence sequence_from_partition(std::span<const Vertex> S,
                                           const std::vector<ExhaustingSequence>& per_end);

}  // namespace endgraph
