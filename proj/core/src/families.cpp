#include "endgraph/families.hpp"

#include <charconv>
#include <memory>

#include "endgraph/error.hpp"

namespace endgraph {
namespace {

std::string indexed(char prefix, std::size_t a, std::size_t b) {
  return std::string(1, prefix) + std::to_string(a) + "_" + std::to_string(b);
}

/// Parses "<prefix><a>_<b>".
std::pair<std::size_t, std::size_t> parse_indexed(const std::string& tag) {
  std::size_t a = 0;
  std::size_t b = 0;
  const char* first = tag.data() + 1;
  const char* last = tag.data() + tag.size();
  auto r = std::from_chars(first, last, a);
  if (r.ec != std::errc() || r.ptr == last || *r.ptr != '_') {
    throw PresentationError("malformed tag '" + tag + "'");
  }
  r = std::from_chars(r.ptr + 1, last, b);
  if (r.ec != std::errc()) throw PresentationError("malformed tag '" + tag + "'");
  return {a, b};
}

std::function<Level(Level)> constant_span(Level s) {
  return [s](Level) { return s; };
}

std::vector<std::string> straight_ray(char prefix, std::size_t row, Level from, Level depth) {
  std::vector<std::string> result;
  for (Level l = from; l <= depth; ++l) result.push_back(indexed(prefix, row, l));
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// Every ray meets every anti-ray.

std::string cx_tag(Level row, Level index) { return indexed('x', row, index); }

std::optional<std::pair<Level, Level>> diagonal_target(Level k, bool diagonal_row_one) {
  // x^1_k with k = T(i) + k', 1 <= k' <= i, points to x^i_{T(i-1) + k'}.
  for (Level i = diagonal_row_one ? 1 : 2; triangle(i) + 1 <= k; ++i) {
    if (k <= triangle(i) + i) {
      const Level kprime = k - triangle(i);
      return std::pair{i, triangle(i - 1) + kprime};
    }
  }
  return std::nullopt;
}

std::vector<std::string> colour_antiray(Level kprime, Level depth, bool diagonal_row_one) {
  std::vector<std::string> result;
  if (kprime == 0) return result;
  const Level lowest_round = std::max<Level>(kprime, diagonal_row_one ? 1 : 2);
  // Highest round r whose level T(r-1) + k' fits in the window.
  Level top = 0;
  for (Level r = lowest_round; triangle(r - 1) + kprime <= depth; ++r) top = r;
  if (top == 0) return result;
  for (Level r = top; r >= lowest_round; --r) {
    const Level l = triangle(r - 1) + kprime;
    for (Level row = r; row >= 1; --row) result.push_back(cx_tag(row, l));
  }
  return result;
}

Presentation counterexample(const CounterexampleOptions& options) {
  Presentation p;
  p.name = "counterexample";
  p.vertices_at = [](Level k) {
    std::vector<VertexSpec> result;
    for (Level i = 1; row_origin(i) <= k; ++i) {
      result.push_back(VertexSpec{VertexId{cx_tag(i, k), {static_cast<int>(i), static_cast<int>(k)}}, k});
    }
    return result;
  };
  p.edges_from = [options](const VertexSpec& v, Level) {
    const auto [i, k] = parse_indexed(v.id.tag);
    std::vector<EdgeTarget> result;
    result.push_back({cx_tag(i, k + 1), k + 1});
    const auto flipped = options.flipped_down_edge;
    if (i >= 2) {
      // x^i_k -> x^{i-1}_k unless this very edge was flipped.
      if (!(flipped && flipped->first == i - 1 && flipped->second == k)) {
        result.push_back({cx_tag(i - 1, k), k});
      }
    }
    if (flipped && flipped->first == i && flipped->second == k && k >= row_origin(i + 1)) {
      result.push_back({cx_tag(i + 1, k), k});
    }
    if (i == 1) {
      if (auto t = diagonal_target(k, options.diagonal_row_one)) {
        result.push_back({cx_tag(t->first, t->second), t->second});
      }
    }
    return result;
  };
  const bool row_one = options.diagonal_row_one;
  p.span_at = [row_one](Level depth) {
    Level span = 1;
    for (Level i = row_one ? 1 : 2; triangle(i) + 1 <= depth; ++i) span = std::max(span, i);
    return span;
  };
  EndDescriptor omega;
  omega.name = "omega";
  omega.canonical_ray = [](Level depth) { return straight_ray('x', 1, 1, depth); };
  omega.canonical_antiray = [row_one](Level depth) { return colour_antiray(1, depth, row_one); };
  p.ends.push_back(std::move(omega));
  return p;
}

// ---------------------------------------------------------------------------
// Three rows: a (R^-), b (R), c (R^<-).

Presentation example52() {
  Presentation p;
  p.name = "example52";
  p.vertices_at = [](Level j) {
    const int col = static_cast<int>(j);
    return std::vector<VertexSpec>{
        {VertexId{"a" + std::to_string(j), {col, 2}}, j},
        {VertexId{"b" + std::to_string(j), {col, 1}}, j},
        {VertexId{"c" + std::to_string(j), {col, 0}}, j},
    };
  };
  p.edges_from = [](const VertexSpec& v, Level) {
    const char row = v.id.tag[0];
    const Level j = std::stoul(v.id.tag.substr(1));
    auto at = [](char r, Level col) { return EdgeTarget{std::string(1, r) + std::to_string(col), col}; };
    std::vector<EdgeTarget> result;
    switch (row) {
      case 'a':
        result.push_back(at('a', j + 1));
        result.push_back(at('b', j));
        break;
      case 'b':
        result.push_back(at('b', j + 1));
        if (j % 2 == 1) result.push_back(at('c', j));
        break;
      case 'c':
        if (j >= 1) result.push_back(at('c', j - 1));
        if (j % 2 == 0) result.push_back(at('b', j));
        if (j == 0) result.push_back(at('a', 0));
        break;
      default:
        throw PresentationError("malformed tag '" + v.id.tag + "'");
    }
    return result;
  };
  p.span_at = constant_span(1);
  auto row = [](char r) {
    return [r](Level depth) {
      std::vector<std::string> result;
      for (Level j = 0; j <= depth; ++j) result.push_back(std::string(1, r) + std::to_string(j));
      return result;
    };
  };
  EndDescriptor omega;
  omega.name = "omega";
  omega.canonical_ray = row('b');
  omega.canonical_antiray = [](Level depth) {
    std::vector<std::string> result;
    for (Level j = depth + 1; j-- > 0;) result.push_back("c" + std::to_string(j));
    return result;
  };
  omega.smaller_ends = {"eta"};
  EndDescriptor eta;
  eta.name = "eta";
  eta.canonical_ray = row('a');
  p.ends.push_back(std::move(omega));
  p.ends.push_back(std::move(eta));
  return p;
}

// ---------------------------------------------------------------------------

std::string split_in(const std::string& tag) { return tag + "-"; }
std::string split_out(const std::string& tag) { return tag + "+"; }

LevelledDigraph edge_split(const LevelledDigraph& g) {
  DigraphBuilder b("split:" + g.name(), g.depth(), g.span());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& info = g.info(v);
    auto in_coord = info.id.coord;
    auto out_coord = info.id.coord;
    in_coord.push_back(0);
    out_coord.push_back(1);
    b.add_vertex({split_in(info.id.tag), in_coord}, info.level, info.hub);
    b.add_vertex({split_out(info.id.tag), out_coord}, info.level, info.hub);
  }
  // vertex v maps to 2v (in) and 2v + 1 (out)
  for (Vertex v = 0; v < g.vertex_count(); ++v) b.add_edge(2 * v, 2 * v + 1);
  for (auto [u, w] : g.edges()) b.add_edge(2 * u + 1, 2 * w);
  return std::move(b).build();
}

Presentation edge_split(const Presentation& base) {
  auto shared = std::make_shared<Presentation>(base);
  Presentation p;
  p.name = "split:" + base.name;
  p.vertices_at = [shared](Level l) {
    std::vector<VertexSpec> result;
    for (const auto& v : shared->vertices_at(l)) {
      auto in_coord = v.id.coord;
      auto out_coord = v.id.coord;
      in_coord.push_back(0);
      out_coord.push_back(1);
      result.push_back({VertexId{split_in(v.id.tag), in_coord}, l, v.hub});
      result.push_back({VertexId{split_out(v.id.tag), out_coord}, l, v.hub});
    }
    return result;
  };
  p.edges_from = [shared](const VertexSpec& v, Level max_level) {
    const auto& tag = v.id.tag;
    const std::string base_tag = tag.substr(0, tag.size() - 1);
    std::vector<EdgeTarget> result;
    if (tag.back() == '-') {
      result.push_back({split_out(base_tag), v.level});
      return result;
    }
    auto coord = v.id.coord;
    if (!coord.empty()) coord.pop_back();
    const VertexSpec base_spec{VertexId{base_tag, coord}, v.level, v.hub};
    for (const auto& t : shared->edges_from(base_spec, max_level)) {
      result.push_back({split_in(t.tag), t.level});
    }
    return result;
  };
  p.span_at = base.span_at;
  auto expand = [](std::vector<std::string> path) {
    std::vector<std::string> result;
    result.reserve(2 * path.size());
    for (const auto& t : path) {
      result.push_back(split_in(t));
      result.push_back(split_out(t));
    }
    return result;
  };
  for (const auto& e : base.ends) {
    EndDescriptor image = e;
    if (e.canonical_ray) {
      image.canonical_ray = [f = e.canonical_ray, expand](Level d) { return expand(f(d)); };
    }
    if (e.canonical_antiray) {
      image.canonical_antiray = [f = e.canonical_antiray, expand](Level d) { return expand(f(d)); };
    }
    // A dominating vertex u acts through both copies; u+ carries the fan.
    image.dominating_candidates.clear();
    for (const auto& t : e.dominating_candidates) image.dominating_candidates.push_back(split_out(t));
    p.ends.push_back(std::move(image));
  }
  return p;
}

// ---------------------------------------------------------------------------

Presentation halfgrid() {
  Presentation p;
  p.name = "halfgrid";
  p.vertices_at = [](Level c) {
    std::vector<VertexSpec> result;
    for (Level r = 0; r <= c; ++r) {
      result.push_back({VertexId{indexed('h', r, c), {static_cast<int>(c), static_cast<int>(r)}}, c});
    }
    return result;
  };
  p.edges_from = [](const VertexSpec& v, Level) {
    const auto [r, c] = parse_indexed(v.id.tag);
    std::vector<EdgeTarget> result;
    result.push_back({indexed('h', r, c + 1), c + 1});
    if (r + 1 <= c) result.push_back({indexed('h', r + 1, c), c});
    if (r >= 1) result.push_back({indexed('h', r - 1, c), c});
    return result;
  };
  p.span_at = constant_span(1);
  EndDescriptor omega;
  omega.name = "omega";
  omega.canonical_ray = [](Level depth) { return straight_ray('h', 0, 0, depth); };
  p.ends.push_back(std::move(omega));
  return p;
}

Presentation ladder(std::size_t rails) {
  if (rails == 0) throw PreconditionError("ladder needs at least one rail");
  Presentation p;
  p.name = "ladder";
  p.vertices_at = [rails](Level l) {
    std::vector<VertexSpec> result;
    for (std::size_t j = 0; j < rails; ++j) {
      result.push_back({VertexId{indexed('l', j, l), {static_cast<int>(l), static_cast<int>(j)}}, l});
    }
    return result;
  };
  p.edges_from = [rails](const VertexSpec& v, Level) {
    const auto [j, l] = parse_indexed(v.id.tag);
    std::vector<EdgeTarget> result;
    if (j % 2 == 0) {
      result.push_back({indexed('l', j, l + 1), l + 1});
    } else if (l >= 1) {
      result.push_back({indexed('l', j, l - 1), l - 1});
    }
    if (j + 1 < rails) result.push_back({indexed('l', j + 1, l), l});
    if (j >= 1) result.push_back({indexed('l', j - 1, l), l});
    return result;
  };
  p.span_at = constant_span(1);
  EndDescriptor omega;
  omega.name = "omega";
  omega.canonical_ray = [](Level depth) { return straight_ray('l', 0, 0, depth); };
  if (rails >= 2) {
    omega.canonical_antiray = [](Level depth) {
      auto r = straight_ray('l', 1, 0, depth);
      return std::vector<std::string>(r.rbegin(), r.rend());
    };
  }
  p.ends.push_back(std::move(omega));
  return p;
}

Presentation krays(std::size_t k, std::size_t m) {
  if (k == 0) throw PreconditionError("krays needs k >= 1");
  Presentation p;
  p.name = m == 0 ? "krays" : "krays+mdom";
  auto hub = [](std::size_t h) { return "p" + std::to_string(h); };
  p.vertices_at = [k, m, hub](Level l) {
    std::vector<VertexSpec> result;
    for (std::size_t j = 0; j < k; ++j) {
      result.push_back({VertexId{indexed('r', j, l), {static_cast<int>(l), static_cast<int>(j)}}, l});
    }
    if (l == 0) {
      for (std::size_t h = 0; h < m; ++h) {
        result.push_back({VertexId{hub(h), {-1, static_cast<int>(k + h)}}, 0, true});
      }
    }
    return result;
  };
  p.edges_from = [k, m, hub](const VertexSpec& v, Level max_level) {
    std::vector<EdgeTarget> result;
    if (v.hub) {
      for (Level l = 0; l <= max_level; ++l) {
        for (std::size_t j = 0; j < k; ++j) result.push_back({indexed('r', j, l), l});
      }
      return result;
    }
    const auto [j, l] = parse_indexed(v.id.tag);
    result.push_back({indexed('r', j, l + 1), l + 1});
    if (k >= 2) result.push_back({indexed('r', (j + 1) % k, l), l});
    for (std::size_t h = 0; h < m; ++h) result.push_back({hub(h), 0});
    return result;
  };
  p.span_at = constant_span(1);
  EndDescriptor omega;
  omega.name = "omega";
  omega.canonical_ray = [](Level depth) { return straight_ray('r', 0, 0, depth); };
  for (std::size_t h = 0; h < m; ++h) omega.dominating_candidates.push_back(hub(h));
  p.ends.push_back(std::move(omega));
  return p;
}

Presentation single_ray() {
  Presentation p;
  p.name = "ray";
  p.vertices_at = [](Level l) {
    return std::vector<VertexSpec>{{VertexId{"r" + std::to_string(l), {static_cast<int>(l), 0}}, l}};
  };
  p.edges_from = [](const VertexSpec& v, Level) {
    return std::vector<EdgeTarget>{{"r" + std::to_string(v.level + 1), v.level + 1}};
  };
  p.span_at = constant_span(1);
  EndDescriptor omega;
  omega.name = "omega";
  omega.canonical_ray = [](Level depth) {
    std::vector<std::string> r;
    for (Level l = 0; l <= depth; ++l) r.push_back("r" + std::to_string(l));
    return r;
  };
  p.ends.push_back(std::move(omega));
  return p;
}

Presentation single_antiray() {
  Presentation p;
  p.name = "antiray";
  p.vertices_at = [](Level l) {
    return std::vector<VertexSpec>{{VertexId{"q" + std::to_string(l), {static_cast<int>(l), 0}}, l}};
  };
  p.edges_from = [](const VertexSpec& v, Level) {
    std::vector<EdgeTarget> result;
    if (v.level >= 1) result.push_back({"q" + std::to_string(v.level - 1), v.level - 1});
    return result;
  };
  p.span_at = constant_span(1);
  EndDescriptor omega;
  omega.name = "omega";
  omega.canonical_antiray = [](Level depth) {
    std::vector<std::string> r;
    for (Level l = depth + 1; l-- > 0;) r.push_back("q" + std::to_string(l));
    return r;
  };
  p.ends.push_back(std::move(omega));
  return p;
}

Presentation out_comb() {
  Presentation p;
  p.name = "outcomb";
  p.vertices_at = [](Level l) {
    const int c = static_cast<int>(l);
    return std::vector<VertexSpec>{{VertexId{"s" + std::to_string(l), {c, 1}}, l},
                                   {VertexId{"t" + std::to_string(l), {c, 0}}, l}};
  };
  p.edges_from = [](const VertexSpec& v, Level) {
    std::vector<EdgeTarget> result;
    if (v.id.tag[0] == 's') {
      result.push_back({"s" + std::to_string(v.level + 1), v.level + 1});
      result.push_back({"t" + std::to_string(v.level), v.level});
    }
    return result;
  };
  p.span_at = constant_span(1);
  EndDescriptor omega;
  omega.name = "omega";
  omega.canonical_ray = [](Level depth) {
    std::vector<std::string> r;
    for (Level l = 0; l <= depth; ++l) r.push_back("s" + std::to_string(l));
    return r;
  };
  p.ends.push_back(std::move(omega));
  return p;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t param(const std::map<std::string, std::string>& params, const std::string& key,
                  std::size_t fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  std::size_t value = 0;
  const auto& s = it->second;
  auto r = std::from_chars(s.data(), s.data() + s.size(), value);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    throw PreconditionError("parameter " + key + "=" + s + " is not a natural number");
  }
  return value;
}

}  // namespace

Presentation family_by_name(const std::string& name, const std::map<std::string, std::string>& params) {
  if (name.starts_with("split:")) return edge_split(family_by_name(name.substr(6), params));
  if (name == "counterexample") {
    CounterexampleOptions opts;
    opts.diagonal_row_one = param(params, "diag1", 0) != 0;
    return counterexample(opts);
  }
  if (name == "example52") return example52();
  if (name == "halfgrid") return halfgrid();
  if (name == "ladder") return ladder(param(params, "w", 6));
  if (name == "krays") return krays(param(params, "k", 2), param(params, "m", 0));
  if (name == "krays+mdom") return krays(param(params, "k", 2), param(params, "m", 1));
  if (name == "ray") return single_ray();
  if (name == "antiray") return single_antiray();
  if (name == "outcomb") return out_comb();
  throw PreconditionError("unknown family '" + name + "'");
}

std::vector<std::string> family_names() {
  return {"counterexample", "example52", "halfgrid", "ladder", "krays",
          "krays+mdom",     "ray",       "antiray",  "outcomb"};
}

}  // namespace endgraph
