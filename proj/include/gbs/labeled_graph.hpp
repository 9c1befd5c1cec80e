#pragma once

#include <gbs/integer.hpp>
#include <gbs/words.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace gbs {

// One edge of a labeled graph.  `from`/`label_from` belong to the end e(1),
// `to`/`label_to` to the end e(-1); both labels are nonzero.
struct LabeledEdge {
  std::string id;
  std::string from;
  std::string to;
  Int label_from;
  Int label_to;
  bool is_loop() const { return from == to; }
};

// A finite connected undirected multigraph with directed, integer-labeled
// edges; defines a GBS group with one infinite cyclic group per vertex.
struct LabeledGraph {
  std::vector<std::string> vertices;
  std::vector<LabeledEdge> edges;

  bool has_vertex(std::string_view v) const;
  const LabeledEdge* find_edge(std::string_view id) const;

  // Throws parse_error when empty, disconnected, inconsistently labeled, or
  // referencing unknown vertices.
  void validate() const;
};

// JSON format:
// {"vertices":["x","y"],
//  "edges":[{"id":"e1","from":"x","to":"y","label_from":2,"label_to":3}]}
LabeledGraph graph_from_json(std::string_view text);
std::string graph_to_json(const LabeledGraph& graph, bool pretty = false);

}  // namespace gbs
