#pragma once

#include <cstdint>
#include <vector>

namespace endgraph::detail {

/// Integer-capacity flow network with unit augmentations. Arcs out of a node
/// are scanned in insertion order, which fixes the augmenting paths.
class FlowNetwork {
 public:
  using Cap = std::int64_t;

  struct Arc {
    std::uint32_t to;
    Cap cap;
    Cap flow;
  };

  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  std::size_t node_count() const { return adj_.size(); }

  /// Returns the index of the forward arc; its residual twin is index ^ 1.
  std::uint32_t add_arc(std::uint32_t from, std::uint32_t to, Cap cap);

  /// Pushes unit augmenting paths from s to t until none is left or `limit`
  /// units have been pushed. Returns the number pushed by this call.
  std::size_t augment(std::uint32_t s, std::uint32_t t, std::size_t limit);

  /// Nodes reachable from s in the residual network.
  std::vector<bool> residual_reachable(std::uint32_t s) const;

  const Arc& arc(std::uint32_t i) const { return arcs_[i]; }
  std::uint32_t arc_from(std::uint32_t i) const { return arcs_[i ^ 1].to; }
  const std::vector<std::uint32_t>& out_arcs(std::uint32_t node) const { return adj_[node]; }
  std::size_t arc_count() const { return arcs_.size(); }

 private:
  bool augment_once(std::uint32_t s, std::uint32_t t);

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
};

}  // namespace endgraph::detail
