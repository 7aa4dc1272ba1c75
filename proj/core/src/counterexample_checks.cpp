#include "endgraph/counterexample_checks.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <map>
#include <set>

#include "endgraph/error.hpp"
#include "endgraph/flow.hpp"

namespace endgraph {

bool CheckReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.pass; });
}

const SubCheck* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

/// (row, index) of "x<row>_<index>".
std::optional<std::pair<Level, Level>> parse_cx(const std::string& tag) {
  if (tag.size() < 4 || tag[0] != 'x') return std::nullopt;
  Level i = 0;
  Level k = 0;
  const char* last = tag.data() + tag.size();
  auto r = std::from_chars(tag.data() + 1, last, i);
  if (r.ec != std::errc() || r.ptr == last || *r.ptr != '_') return std::nullopt;
  r = std::from_chars(r.ptr + 1, last, k);
  if (r.ec != std::errc() || r.ptr != last) return std::nullopt;
  return std::pair{i, k};
}

std::pair<Level, Level> cx(const LevelledDigraph& g, Vertex v) {
  auto p = parse_cx(g.tag(v));
  if (!p) throw PreconditionError("'" + g.tag(v) + "' is not a vertex of the counterexample");
  return *p;
}

bool is_diagonal(std::pair<Level, Level> a, std::pair<Level, Level> b, bool row_one) {
  if (a.first != 1) return false;
  auto t = diagonal_target(a.second, row_one);
  return t && *t == b;
}

CxEdge classify(std::pair<Level, Level> a, std::pair<Level, Level> b, bool row_one) {
  if (is_diagonal(a, b, row_one)) return CxEdge::diagonal;
  if (a.first == b.first && b.second == a.second + 1) return CxEdge::ray;
  if (a.first == b.first + 1 && a.second == b.second) return CxEdge::down;
  return CxEdge::other;
}

bool row_one_diagonals(const LevelledDigraph& g) {
  // x^1_2 -> x^1_1 only exists with diagonals on row 1.
  auto a = g.find(cx_tag(1, 2));
  auto b = g.find(cx_tag(1, 1));
  return a && b && g.has_edge(*a, *b);
}

std::vector<std::string> to_tags(const LevelledDigraph& g, std::span<const Vertex> p) { return g.path_tags(p); }

// (a) ------------------------------------------------------------------------

struct ReverseWalks {
  bool acyclic = true;
  std::vector<std::string> cycle;
  std::map<std::string, std::size_t> longest;  // by tag
  std::vector<std::string> bad_ends;
};

ReverseWalks reverse_walks(const LevelledDigraph& g, bool retain_diagonals) {
  const bool row_one = row_one_diagonals(g);
  ReverseWalks r;
  const auto n = g.vertex_count();
  std::vector<std::vector<Vertex>> pred(n);
  for (auto [u, v] : g.edges()) {
    if (!retain_diagonals && classify(cx(g, u), cx(g, v), row_one) == CxEdge::diagonal) continue;
    pred[v].push_back(u);
  }
  // longest walk along predecessors, iterative DFS with colours
  std::vector<int> colour(n, 0);
  std::vector<std::size_t> len(n, 0);
  std::vector<Vertex> parent(n, n);
  for (Vertex s = 0; s < n && r.acyclic; ++s) {
    if (colour[s]) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
    colour[s] = 1;
    while (!stack.empty() && r.acyclic) {
      auto& [v, i] = stack.back();
      if (i < pred[v].size()) {
        const Vertex w = pred[v][i++];
        if (colour[w] == 1) {
          r.acyclic = false;
          for (Vertex x = v; x != w && x != n; x = parent[x]) r.cycle.push_back(g.tag(x));
          r.cycle.push_back(g.tag(w));
          std::reverse(r.cycle.begin(), r.cycle.end());
        } else if (colour[w] == 0) {
          colour[w] = 1;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
        continue;
      }
      for (Vertex w : pred[v]) len[v] = std::max(len[v], len[w] + 1);
      colour[v] = 2;
      stack.pop_back();
    }
  }
  if (!r.acyclic) return r;
  for (Vertex v = 0; v < n; ++v) {
    r.longest[g.tag(v)] = len[v];
    if (pred[v].empty()) {
      const auto [i, k] = cx(g, v);
      if (i != 1 && k != row_origin(i)) r.bad_ends.push_back(g.tag(v));
    }
  }
  return r;
}

SubCheck check_backward_walks(Level depth, const VerifyCounterexampleOptions& options) {
  SubCheck c{"backward walks", true, "", {}};
  const auto g = truncate(counterexample(options.family), depth);
  const auto far = truncate(counterexample(options.family), depth + 10);
  const auto here = reverse_walks(g, options.retain_diagonals);
  if (!here.acyclic) {
    c.pass = false;
    c.detail = "reversed digraph has a cycle, so reverse walks are unbounded";
    c.witness = here.cycle;
    return c;
  }
  if (!here.bad_ends.empty()) {
    c.pass = false;
    c.detail = "a maximal reverse walk ends off R_1 at a vertex that is not a ray origin";
    c.witness = here.bad_ends;
    return c;
  }
  const auto there = reverse_walks(far, options.retain_diagonals);
  if (!there.acyclic) {
    c.pass = false;
    c.detail = "reversed digraph has a cycle at depth " + std::to_string(depth + 10);
    c.witness = there.cycle;
    return c;
  }
  std::size_t compared = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (2 * g.level(v) > depth) continue;
    ++compared;
    const auto& tag = g.tag(v);
    if (here.longest.at(tag) != there.longest.at(tag)) {
      c.pass = false;
      c.detail = "longest reverse walk from " + tag + " changes between depth " + std::to_string(depth) + " and " +
                 std::to_string(depth + 10);
      c.witness = {tag};
      return c;
    }
  }
  c.detail = "acyclic; longest reverse walks stable on " + std::to_string(compared) + " vertices";
  return c;
}

// (b) ------------------------------------------------------------------------

SubCheck check_diagonal_counts(const LevelledDigraph& g, bool row_one) {
  SubCheck c{"diagonal counts", true, "", {}};
  std::map<Level, std::size_t> into;
  for (auto [u, v] : g.edges()) {
    const auto a = cx(g, u);
    const auto b = cx(g, v);
    switch (classify(a, b, row_one)) {
      case CxEdge::diagonal:
        ++into[b.first];
        break;
      case CxEdge::other:
        c.pass = false;
        c.detail = "edge " + g.tag(u) + " -> " + g.tag(v) + " is neither a ray, down nor diagonal edge";
        c.witness = {g.tag(u), g.tag(v)};
        return c;
      default:
        break;
    }
  }
  std::size_t rows = 0;
  for (Level i = row_one ? 1 : 2; triangle(i) + i <= g.depth(); ++i) {
    std::size_t expected = 0;
    for (Level k = 1; k <= g.depth(); ++k) {
      auto t = diagonal_target(k, row_one);
      if (t && t->first == i) ++expected;
    }
    if (into[i] != i || expected != i) {
      c.pass = false;
      c.detail = "row " + std::to_string(i) + " receives " + std::to_string(into[i]) + " diagonal edges, expected " +
                 std::to_string(i);
      c.witness = {cx_tag(i, row_origin(i))};
      return c;
    }
    ++rows;
  }
  c.detail = "rows 2.." + std::to_string(rows + 1) + " receive exactly i diagonal edges";
  return c;
}

// (c) ------------------------------------------------------------------------

SubCheck check_faces(const LevelledDigraph& g) {
  SubCheck c{"euler faces", true, "", {}};
  std::vector<std::vector<Vertex>> rotation;
  try {
    rotation = counterexample_rotation(g);
  } catch (const ValidationError& e) {
    c.pass = false;
    c.detail = e.what();
    return c;
  }
  const auto f = trace_faces(g, rotation);
  const auto lhs = static_cast<long long>(f.vertices) - static_cast<long long>(f.edges) + static_cast<long long>(f.faces);
  c.detail = "V=" + std::to_string(f.vertices) + " E=" + std::to_string(f.edges) + " F=" + std::to_string(f.faces) +
             " C=" + std::to_string(f.components);
  if (lhs != 2 * static_cast<long long>(f.components)) {
    c.pass = false;
    c.detail += ": V - E + F != 2C, the rotation system is not plane";
  }
  return c;
}

// (d) ------------------------------------------------------------------------

SubCheck check_intersections(const LevelledDigraph& g, Level depth, bool row_one) {
  SubCheck c{"ray/anti-ray intersections", true, "", {}};
  auto load = [&](const std::vector<std::string>& tags, std::optional<Path>& out) {
    Path p;
    for (const auto& t : tags) {
      auto v = g.find(t);
      if (!v) return false;
      p.push_back(*v);
    }
    out = std::move(p);
    return is_dipath(g, *out);
  };
  std::vector<Path> rays;
  std::vector<Path> anti;
  for (const auto& tags : builtin_ray_family(depth)) {
    std::optional<Path> p;
    if (!load(tags, p)) {
      c.pass = false;
      c.detail = "built-in ray is not a dipath of the truncation";
      c.witness = tags;
      return c;
    }
    rays.push_back(std::move(*p));
  }
  for (const auto& tags : builtin_antiray_family(depth, row_one)) {
    std::optional<Path> p;
    if (!load(tags, p)) {
      c.pass = false;
      c.detail = "built-in anti-ray is not a dipath of the truncation";
      c.witness = tags;
      return c;
    }
    anti.push_back(std::move(*p));
  }
  for (const auto& r : rays) {
    const auto mask = to_mask(g, r);
    for (const auto& a : anti) {
      if (std::none_of(a.begin(), a.end(), [&](Vertex v) { return mask[v]; })) {
        c.pass = false;
        c.detail = "a ray and an anti-ray are disjoint inside the window";
        c.witness = to_tags(g, r);
        c.witness.push_back("|");
        const auto at = to_tags(g, a);
        c.witness.insert(c.witness.end(), at.begin(), at.end());
        return c;
      }
    }
  }
  c.detail = std::to_string(rays.size()) + " rays x " + std::to_string(anti.size()) + " anti-rays all intersect";
  return c;
}

}  // namespace

CxEdge classify_cx_edge(const LevelledDigraph& g, Vertex u, Vertex v) {
  return classify(cx(g, u), cx(g, v), row_one_diagonals(g));
}

std::vector<std::string> weaving_ray(Level row, Level level, Level extra, Level depth) {
  std::vector<std::string> path;
  if (row == 0 || level < row_origin(row) || level > depth || extra == 0) return path;
  std::map<Level, Level> top;  // highest level used on each row
  auto visit = [&](Level i, Level k) {
    path.push_back(cx_tag(i, k));
    top[i] = std::max(top[i], k);
  };
  auto climb_and_drop = [&](Level i, Level from, Level to) {
    // climb row i from `from` to `to`, then drop to R_1; false at the window edge
    for (Level k = from; k <= to; ++k) {
      if (k > depth) return false;
      visit(i, k);
    }
    for (Level j = i - 1; j >= 1; --j) visit(j, to);
    return true;
  };
  if (!climb_and_drop(row, level, level + extra)) return path;
  Level k = level + extra;
  while (true) {
    ++k;
    if (k > depth) break;
    visit(1, k);
    auto t = diagonal_target(k);
    if (!t || (top.contains(t->first) && top[t->first] >= t->second)) continue;
    const Level to = std::max(t->second + 1, k + extra);
    if (!climb_and_drop(t->first, t->second, to)) break;
    k = to;
  }
  return path;
}

std::vector<std::vector<std::string>> builtin_ray_family(Level depth) {
  std::vector<std::vector<std::string>> family;
  for (Level i = 1; i <= 4 && row_origin(i) <= depth; ++i) {
    std::vector<std::string> r;
    for (Level k = row_origin(i); k <= depth; ++k) r.push_back(cx_tag(i, k));
    family.push_back(std::move(r));
  }
  for (Level extra = 1; extra <= 3; ++extra) {
    for (Level row = 1; row <= 3; ++row) {
      for (Level off = 0; off <= 2; ++off) {
        auto w = weaving_ray(row, row_origin(row) + off, extra, depth);
        if (w.size() > 1 && std::find(family.begin(), family.end(), w) == family.end()) family.push_back(std::move(w));
      }
    }
  }
  return family;
}

std::vector<std::vector<std::string>> builtin_antiray_family(Level depth, bool diagonal_row_one) {
  std::vector<std::vector<std::string>> family;
  for (Level kprime = 1;; ++kprime) {
    auto a = colour_antiray(kprime, depth, diagonal_row_one);
    if (a.empty()) break;
    family.push_back(std::move(a));
  }
  return family;
}

std::vector<std::vector<Vertex>> counterexample_rotation(const LevelledDigraph& g) {
  const bool row_one = row_one_diagonals(g);
  std::vector<std::vector<Vertex>> rotation(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto a = cx(g, u);
    // ccw slots: 0 outwards along the ray, 1 towards R_1 (or the diagonal
    // leaving R_1), 2 inwards along the ray, 3 away from R_1 (or a diagonal
    // coming in)
    std::array<std::optional<Vertex>, 4> slot;
    auto put = [&](int s, Vertex w) {
      if (slot[s] && *slot[s] != w) {
        throw ValidationError("rotation slot clash at " + g.tag(u) + " between " + g.tag(*slot[s]) + " and " + g.tag(w));
      }
      slot[s] = w;
    };
    std::vector<Vertex> nbrs(g.out(u).begin(), g.out(u).end());
    nbrs.insert(nbrs.end(), g.in(u).begin(), g.in(u).end());
    for (Vertex w : nbrs) {
      const auto b = cx(g, w);
      if (is_diagonal(a, b, row_one)) put(1, w);
      else if (is_diagonal(b, a, row_one)) put(3, w);
      else if (a.first == b.first && b.second == a.second + 1) put(0, w);
      else if (a.first == b.first && b.second + 1 == a.second) put(2, w);
      else if (b.first + 1 == a.first && a.second == b.second) put(1, w);
      else if (b.first == a.first + 1 && a.second == b.second) put(3, w);
      else throw ValidationError("edge " + g.tag(u) + " - " + g.tag(w) + " has no place in the layout");
    }
    for (const auto& s : slot) {
      if (s) rotation[u].push_back(*s);
    }
  }
  return rotation;
}

FaceCount trace_faces(const LevelledDigraph& g, const std::vector<std::vector<Vertex>>& rotation) {
  FaceCount f;
  const auto n = g.vertex_count();
  f.vertices = n;
  // darts (u, index into rotation[u])
  std::vector<std::size_t> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + rotation[v].size();
  f.edges = offset[n] / 2;
  auto index_of = [&](Vertex v, Vertex u) {
    const auto& r = rotation[v];
    auto it = std::find(r.begin(), r.end(), u);
    if (it == r.end()) throw ValidationError("rotation is not symmetric at " + g.tag(v));
    return static_cast<std::size_t>(it - r.begin());
  };
  std::vector<bool> seen(offset[n], false);
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < rotation[u].size(); ++i) {
      if (seen[offset[u] + i]) continue;
      ++f.faces;
      Vertex a = u;
      std::size_t j = i;
      while (!seen[offset[a] + j]) {
        seen[offset[a] + j] = true;
        const Vertex b = rotation[a][j];
        const auto back = index_of(b, a);
        j = (back + 1) % rotation[b].size();
        a = b;
      }
    }
  }
  // components; an isolated vertex is its own face
  std::vector<bool> done(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (done[s]) continue;
    ++f.components;
    if (rotation[s].empty()) ++f.faces;
    std::vector<Vertex> stack{s};
    done[s] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : rotation[v]) {
        if (!done[w]) {
          done[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return f;
}

CheckReport verify_counterexample(Level depth, const VerifyCounterexampleOptions& options) {
  if (depth < 10) throw PreconditionError("verify_counterexample needs depth >= 10");
  CheckReport report;
  report.subject = "counterexample";
  report.depth = depth;
  const auto g = truncate(counterexample(options.family), depth);
  const bool row_one = options.family.diagonal_row_one;
  report.checks.push_back(check_backward_walks(depth, options));
  report.checks.push_back(check_diagonal_counts(g, row_one));
  report.checks.push_back(check_faces(g));
  report.checks.push_back(check_intersections(g, depth, row_one));
  return report;
}

CheckReport verify_edge_counterexample(Level depth, const VerifyCounterexampleOptions& options) {
  if (depth < 10) throw PreconditionError("verify_edge_counterexample needs depth >= 10");
  CheckReport report;
  report.subject = "edge counterexample";
  report.depth = depth;
  const auto base = truncate(counterexample(options.family), depth);
  const auto split = truncate(edge_split(counterexample(options.family)), depth);

  SubCheck unique{"unique neighbour", true, "", {}};
  for (Vertex v = 0; v < split.vertex_count(); ++v) {
    if (split.out(v).size() != 1 && split.in(v).size() != 1) {
      unique.pass = false;
      unique.detail = split.tag(v) + " has neither a unique out- nor a unique in-neighbour";
      unique.witness = {split.tag(v)};
      break;
    }
  }
  if (unique.pass) unique.detail = "every split vertex has out-degree 1 or in-degree 1";
  report.checks.push_back(unique);

  SubCheck counts{"split counts", true, "", {}};
  counts.detail = "|V'|=" + std::to_string(split.vertex_count()) + " |E'|=" + std::to_string(split.edge_count()) +
                  " from |V|=" + std::to_string(base.vertex_count()) + " |E|=" + std::to_string(base.edge_count());
  counts.pass = split.vertex_count() == 2 * base.vertex_count() &&
                split.edge_count() == base.edge_count() + base.vertex_count();
  report.checks.push_back(counts);

  SubCheck shared{"shared edges", true, "", {}};
  auto lift = [&](const std::vector<std::string>& tags) {
    Path p;
    for (const auto& t : tags) {
      for (const auto& s : {split_in(t), split_out(t)}) {
        auto v = split.find(s);
        if (!v) return Path{};
        p.push_back(*v);
      }
    }
    return is_dipath(split, p) ? p : Path{};
  };
  auto edge_set = [](const Path& p) {
    std::set<std::pair<Vertex, Vertex>> e;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) e.emplace(p[i], p[i + 1]);
    return e;
  };
  std::size_t pairs = 0;
  const auto rays = builtin_ray_family(depth);
  const auto anti = builtin_antiray_family(depth, options.family.diagonal_row_one);
  for (const auto& r : rays) {
    const auto lr = lift(r);
    const auto er = edge_set(lr);
    for (const auto& a : anti) {
      const auto la = lift(a);
      bool common = false;
      for (std::size_t i = 0; !la.empty() && i + 1 < la.size() && !common; ++i) common = er.contains({la[i], la[i + 1]});
      if (!common) {
        shared.pass = false;
        shared.detail = lr.empty() || la.empty() ? "a built-in witness does not lift to a dipath of the split"
                                                  : "a lifted ray and anti-ray share no edge";
        shared.witness = r;
        shared.witness.push_back("|");
        shared.witness.insert(shared.witness.end(), a.begin(), a.end());
        break;
      }
      ++pairs;
    }
    if (!shared.pass) break;
  }
  if (shared.pass) shared.detail = std::to_string(pairs) + " lifted pairs share an edge";
  report.checks.push_back(shared);

  auto vertex_report = verify_counterexample(depth, options);
  SubCheck projected{"base intersections", true, "", {}};
  const auto* d = vertex_report.find("ray/anti-ray intersections");
  projected.pass = d && d->pass;
  projected.detail = d ? d->detail : "missing";
  if (d) projected.witness = d->witness;
  report.checks.push_back(projected);
  return report;
}

}  // namespace endgraph
