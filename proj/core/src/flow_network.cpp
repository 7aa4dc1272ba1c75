#include "flow_network.hpp"

namespace endgraph::detail {

std::uint32_t FlowNetwork::add_arc(std::uint32_t from, std::uint32_t to, Cap cap) {
  const auto index = static_cast<std::uint32_t>(arcs_.size());
  arcs_.push_back({to, cap, 0});
  arcs_.push_back({from, 0, 0});
  adj_[from].push_back(index);
  adj_[to].push_back(index + 1);
  return index;
}

std::size_t FlowNetwork::augment(std::uint32_t s, std::uint32_t t, std::size_t limit) {
  std::size_t pushed = 0;
  while (pushed < limit && augment_once(s, t)) ++pushed;
  return pushed;
}

bool FlowNetwork::augment_once(std::uint32_t s, std::uint32_t t) {
  if (seen_.size() != adj_.size()) {
    seen_.assign(adj_.size(), 0);
    stamp_ = 0;
  }
  ++stamp_;
  // Iterative DFS; each frame is (node, next position in its arc list).
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  std::vector<std::uint32_t> via;  // arc used to enter stack[k + 1]
  stack.emplace_back(s, 0);
  seen_[s] = stamp_;
  while (!stack.empty()) {
    auto& [node, pos] = stack.back();
    if (node == t) {
      for (auto a : via) {
        arcs_[a].flow += 1;
        arcs_[a ^ 1].flow -= 1;
      }
      return true;
    }
    const auto& out = adj_[node];
    bool advanced = false;
    while (pos < out.size()) {
      const auto a = out[pos++];
      const auto& arc = arcs_[a];
      if (arc.cap - arc.flow > 0 && seen_[arc.to] != stamp_) {
        seen_[arc.to] = stamp_;
        via.push_back(a);
        stack.emplace_back(arc.to, 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      stack.pop_back();
      if (!via.empty()) via.pop_back();
    }
  }
  return false;
}

std::vector<bool> FlowNetwork::residual_reachable(std::uint32_t s) const {
  std::vector<bool> seen(adj_.size(), false);
  std::vector<std::uint32_t> todo{s};
  seen[s] = true;
  while (!todo.empty()) {
    const auto x = todo.back();
    todo.pop_back();
    for (auto a : adj_[x]) {
      const auto& arc = arcs_[a];
      if (arc.cap - arc.flow > 0 && !seen[arc.to]) {
        seen[arc.to] = true;
        todo.push_back(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace endgraph::detail
