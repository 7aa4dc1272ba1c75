#include "endgraph/digraph.hpp"

#include <algorithm>

#include "endgraph/error.hpp"

namespace endgraph {

std::optional<Vertex> LevelledDigraph::find(std::string_view tag) const {
  auto it = index_.find(std::string(tag));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex LevelledDigraph::at(std::string_view tag) const {
  auto v = find(tag);
  if (!v) throw PreconditionError("vertex '" + std::string(tag) + "' not in digraph " + name_);
  return *v;
}

bool LevelledDigraph::has_edge(Vertex u, Vertex v) const {
  const auto& o = out_[u];
  return std::find(o.begin(), o.end(), v) != o.end();
}

std::vector<std::pair<Vertex, Vertex>> LevelledDigraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < vertices_.size(); ++u) {
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  }
  return result;
}

Level LevelledDigraph::frontier_floor() const {
  if (span_ == 0) return depth_ + 1;
  return depth_ + 1 > span_ ? depth_ + 1 - span_ : 0;
}

VertexSet LevelledDigraph::frontier() const {
  VertexSet result;
  const Level floor = frontier_floor();
  for (Vertex v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].level >= floor) result.push_back(v);
  }
  return result;
}

std::vector<Vertex> LevelledDigraph::vertices_at(Level l) const {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].level == l) result.push_back(v);
  }
  return result;
}

VertexSet LevelledDigraph::tags_to_set(std::span<const std::string> tags) const {
  std::vector<Vertex> vs;
  for (const auto& t : tags) {
    if (auto v = find(t)) vs.push_back(*v);
  }
  return make_set(std::move(vs));
}

Path LevelledDigraph::tags_to_path(std::span<const std::string> tags) const {
  Path p;
  p.reserve(tags.size());
  for (const auto& t : tags) p.push_back(at(t));
  return p;
}

std::vector<std::string> LevelledDigraph::path_tags(std::span<const Vertex> path) const {
  std::vector<std::string> result;
  result.reserve(path.size());
  for (Vertex v : path) result.push_back(tag(v));
  return result;
}

bool operator==(const LevelledDigraph& a, const LevelledDigraph& b) {
  if (a.name_ != b.name_ || a.depth_ != b.depth_ || a.span_ != b.span_) return false;
  if (a.vertices_.size() != b.vertices_.size()) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    const auto& x = a.vertices_[i];
    const auto& y = b.vertices_[i];
    if (x.id.tag != y.id.tag || x.id.coord != y.id.coord || x.level != y.level ||
        x.hub != y.hub) {
      return false;
    }
  }
  return a.out_ == b.out_;
}

DigraphBuilder::DigraphBuilder(std::string name, Level depth, Level span) {
  g_.name_ = std::move(name);
  g_.depth_ = depth;
  g_.span_ = span;
}

Vertex DigraphBuilder::add_vertex(VertexId id, Level level, bool hub) {
  if (level > g_.depth_) {
    throw ValidationError("vertex '" + id.tag + "' has level " + std::to_string(level) +
                          " beyond depth " + std::to_string(g_.depth_));
  }
  if (g_.index_.contains(id.tag)) {
    throw ValidationError("duplicate vertex '" + id.tag + "'");
  }
  const auto v = static_cast<Vertex>(g_.vertices_.size());
  g_.index_.emplace(id.tag, v);
  g_.vertices_.push_back(VertexInfo{std::move(id), level, hub});
  g_.out_.emplace_back();
  g_.in_.emplace_back();
  return v;
}

bool DigraphBuilder::contains(std::string_view tag) const {
  return g_.index_.contains(std::string(tag));
}

void DigraphBuilder::add_edge(std::string_view from, std::string_view to) {
  auto u = g_.find(from);
  auto v = g_.find(to);
  if (!u || !v) {
    throw ValidationError("edge " + std::string(from) + "->" + std::string(to) +
                          " has an undeclared endpoint");
  }
  add_edge(*u, *v);
}

void DigraphBuilder::add_edge(Vertex u, Vertex v) {
  const auto& tu = g_.tag(u);
  const auto& tv = g_.tag(v);
  if (u == v) throw ValidationError("self-loop at '" + tu + "'");
  if (g_.has_edge(u, v)) throw ValidationError("parallel edge " + tu + "->" + tv);
  if (!g_.is_hub(u) && !g_.is_hub(v)) {
    const Level lu = g_.level(u);
    const Level lv = g_.level(v);
    const Level diff = lu > lv ? lu - lv : lv - lu;
    if (diff > g_.span_) {
      throw ValidationError("edge " + tu + "->" + tv + " spans " + std::to_string(diff) +
                            " levels, more than span " + std::to_string(g_.span_));
    }
  }
  g_.out_[u].push_back(v);
  g_.in_[v].push_back(u);
  ++g_.edge_count_;
}

LevelledDigraph DigraphBuilder::build() && { return std::move(g_); }

LevelledDigraph reverse(const LevelledDigraph& g) {
  // swapping the lists keeps adjacency order, so reverse(reverse(g)) == g
  LevelledDigraph r = g;
  std::swap(r.out_, r.in_);
  return r;
}

LevelledDigraph restrict_to_depth(const LevelledDigraph& g, Level depth) {
  DigraphBuilder b(g.name(), std::min(depth, g.depth()), g.span());
  std::vector<std::optional<Vertex>> map(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.level(v) <= depth) map[v] = b.add_vertex(g.info(v).id, g.level(v), g.is_hub(v));
  }
  for (auto [u, v] : g.edges()) {
    if (map[u] && map[v]) b.add_edge(*map[u], *map[v]);
  }
  return std::move(b).build();
}

LevelledDigraph remove_vertices(const LevelledDigraph& g, std::span<const Vertex> removed) {
  const auto gone = to_mask(g, removed);
  DigraphBuilder b(g.name(), g.depth(), g.span());
  std::vector<std::optional<Vertex>> map(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) map[v] = b.add_vertex(g.info(v).id, g.level(v), g.is_hub(v));
  }
  for (auto [u, v] : g.edges()) {
    if (map[u] && map[v]) b.add_edge(*map[u], *map[v]);
  }
  return std::move(b).build();
}

VertexSet make_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<bool> to_mask(const LevelledDigraph& g, std::span<const Vertex> vs) {
  std::vector<bool> mask(g.vertex_count(), false);
  for (Vertex v : vs) mask[v] = true;
  return mask;
}

}  // namespace endgraph
