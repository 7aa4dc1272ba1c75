#include "endgraph/presentation.hpp"

#include "endgraph/error.hpp"

namespace endgraph {

const EndDescriptor& Presentation::end(std::string_view end_name) const {
  for (const auto& e : ends) {
    if (e.name == end_name) return e;
  }
  throw UnknownEndError(std::string(end_name));
}

LevelledDigraph truncate(const Presentation& p, Level depth) {
  const Level span = p.span_at(depth);
  DigraphBuilder builder(p.name, depth, span);
  std::vector<VertexSpec> specs;
  try {
    for (Level l = 0; l <= depth; ++l) {
      for (auto& spec : p.vertices_at(l)) {
        if (spec.level != l) {
          throw PresentationError("vertex '" + spec.id.tag + "' emitted at level " +
                                  std::to_string(l) + " but declares level " +
                                  std::to_string(spec.level));
        }
        builder.add_vertex(spec.id, spec.level, spec.hub);
        specs.push_back(std::move(spec));
      }
    }
    for (const auto& spec : specs) {
      for (const auto& target : p.edges_from(spec, depth)) {
        if (target.level > depth) continue;
        if (!builder.contains(target.tag)) {
          throw PresentationError("edge " + spec.id.tag + "->" + target.tag +
                                  " targets a vertex the generator never emitted");
        }
        builder.add_edge(spec.id.tag, target.tag);
      }
    }
  } catch (const ValidationError& e) {
    throw PresentationError(p.name + ": " + e.what());
  }
  return std::move(builder).build();
}

}  // namespace endgraph
