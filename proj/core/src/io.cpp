#include "endgraph/io.hpp"

#include <sstream>

#include <json.hpp>

#include "endgraph/error.hpp"

namespace endgraph {

using nlohmann::json;

std::string export_json(const LevelledDigraph& g) {
  json doc;
  doc["name"] = g.name();
  doc["depth"] = g.depth();
  doc["span"] = g.span();
  json vertices = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    json entry{{"id", g.tag(v)}, {"level", g.level(v)}};
    if (!g.info(v).id.coord.empty()) entry["coord"] = g.info(v).id.coord;
    if (g.is_hub(v)) entry["hub"] = true;
    vertices.push_back(std::move(entry));
  }
  doc["vertices"] = std::move(vertices);
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({g.tag(u), g.tag(v)}));
  doc["edges"] = std::move(edges);
  return doc.dump(1) + "\n";
}

namespace {

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t natural(const json& value, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

LevelledDigraph import_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("not JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be an object");
  const auto& name = field(doc, "name");
  if (!name.is_string()) throw ParseError("name must be a string");
  const auto depth = natural(field(doc, "depth"), "depth");
  const auto span = natural(field(doc, "span"), "span");
  const auto& vertices = field(doc, "vertices");
  const auto& edges = field(doc, "edges");
  if (!vertices.is_array()) throw ParseError("vertices must be an array");
  if (!edges.is_array()) throw ParseError("edges must be an array");

  DigraphBuilder b(name.get<std::string>(), depth, span);
  for (const auto& v : vertices) {
    if (!v.is_object()) throw ParseError("vertex entries must be objects");
    const auto& id = field(v, "id");
    if (!id.is_string()) throw ParseError("vertex id must be a string");
    VertexId vid{id.get<std::string>(), {}};
    if (auto c = v.find("coord"); c != v.end()) {
      if (!c->is_array()) throw ParseError("coord must be an integer array");
      for (const auto& x : *c) {
        if (!x.is_number_integer()) throw ParseError("coord must be an integer array");
        vid.coord.push_back(x.get<int>());
      }
    }
    bool hub = false;
    if (auto h = v.find("hub"); h != v.end()) {
      if (!h->is_boolean()) throw ParseError("hub must be a boolean");
      hub = h->get<bool>();
    }
    b.add_vertex(std::move(vid), natural(field(v, "level"), "level"), hub);
  }
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw ParseError("edges must be [\"id\", \"id\"] pairs");
    }
    b.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return std::move(b).build();
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const LevelledDigraph& g) {
  std::ostringstream os;
  os << "digraph " << quoted(g.name()) << " {\n";
  os << "  // depth " << g.depth() << ", span " << g.span() << "\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& info = g.info(v);
    os << "  " << quoted(info.id.tag) << " [label=" << quoted(info.id.tag);
    if (info.id.coord.size() >= 2) {
      os << ", pos=\"" << info.id.coord[0] << "," << info.id.coord[1] << "!\"";
    }
    if (info.hub) os << ", shape=box";
    os << "];\n";
  }
  for (auto [u, v] : g.edges()) {
    os << "  " << quoted(g.tag(u)) << " -> " << quoted(g.tag(v)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<std::vector<std::string>> import_sequence(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("not JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("sequence must be an array of arrays");
  std::vector<std::vector<std::string>> result;
  for (const auto& set : doc) {
    if (!set.is_array()) throw ParseError("sequence must be an array of arrays");
    auto& out = result.emplace_back();
    for (const auto& id : set) {
      if (!id.is_string()) throw ParseError("sequence entries must be vertex-id strings");
      out.push_back(id.get<std::string>());
    }
  }
  return result;
}

std::string export_sequence(const std::vector<std::vector<std::string>>& sets) {
  return json(sets).dump() + "\n";
}

}  // namespace endgraph
