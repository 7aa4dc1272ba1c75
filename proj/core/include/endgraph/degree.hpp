#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "endgraph/digraph.hpp"
#include "endgraph/exhausting.hpp"
#include "endgraph/flow.hpp"
#include "endgraph/presentation.hpp"

namespace endgraph {

/// A value certified at a threshold; `capped` means the computation stopped
/// at the threshold, so the true value is at least `value`.
struct Estimate {
  std::size_t value = 0;
  bool capped = false;

  std::string str() const { return (capped ? ">=" : "") + std::to_string(value); }
  friend bool operator==(const Estimate&, const Estimate&) = default;
};

Estimate operator+(Estimate a, Estimate b);

/// (A, B, S) with A + B = declared smaller ends of positive in-degree plus
/// the end itself, end in B, B ordered so that smaller ends come first.
struct PartitionPlan {
  std::vector<std::string> A;
  std::vector<std::string> B;
  VertexSet S;
};

/// Transitive closure of the end's smaller_ends. Throws UnknownEndError for
/// dangling names and PresentationError when the relation has a cycle.
std::vector<std::string> smaller_ends(const Presentation& p, const std::string& end);

/// Declared smaller ends with in-degree estimate >= 1 on g.
std::vector<std::string> omega_minus(const Presentation& p, const LevelledDigraph& g,
                                     const std::string& end, std::size_t t);

/// Empty when the plan satisfies the partition invariants for `end`.
std::optional<std::string> check_plan(const Presentation& p, const std::string& end,
                                      const std::vector<std::string>& omega_minus_names,
                                      const PartitionPlan& plan);

/// Minimum vertex set separating the A-ends and `extra_targets` from the
/// B-ends: every dipath from a B canonical-ray tail (levels >= depth / 2) to
/// an A canonical-ray vertex or an extra target meets it. Tails and A rays
/// are protected; the cut closest to the targets is returned. Throws
/// InfeasibleError when no such set exists in the window.
SeparatorCertificate end_separator(const Presentation& p, const LevelledDigraph& g,
                                   const std::vector<std::string>& A,
                                   const std::vector<std::string>& B,
                                   const VertexSet& extra_targets);

struct DeltaMinus {
  Estimate value;
  PartitionPlan plan;
  std::vector<Estimate> b_degrees;  // in-degree of each end of plan.B
};

/// min over partitions (A, B) of |S| + sum of in-degrees over B. Ties go to
/// the plan with the smallest (|B|, B, S). Throws PreconditionError with
/// more than 15 smaller ends.
DeltaMinus delta_minus(const Presentation& p, const LevelledDigraph& g, const std::string& end,
                       std::size_t t);

struct SchemaResult {
  std::string name;
  ExhaustingSequence sequence;
  ExhaustingVerdict verdict;
};

struct DegreeReport {
  std::string end;
  Level depth = 0;
  std::size_t threshold = 0;
  Estimate d_minus;
  std::optional<Estimate> d_plus;
  std::optional<Estimate> delta_cap;
  Estimate delta_small;
  std::optional<Estimate> K_upper;
  std::string K_schema;
  VertexSet delta_separator;
  VertexSet dominators;
  PartitionPlan plan;
  std::vector<SchemaResult> schemas;
  std::vector<std::string> notes;
};

/// The partition-derived sequence for a plan: graded
/// sequences for the ends of B with S_j = S + U_1^1 + ... + U_1^{j-1}.
ExhaustingSequence partition_sequence(const Presentation& p, const LevelledDigraph& g,
                                      const PartitionPlan& plan, std::size_t t);

DegreeReport combined_in_degree(const Presentation& p, const LevelledDigraph& g,
                                const std::string& end, std::size_t t);

}  // namespace endgraph
