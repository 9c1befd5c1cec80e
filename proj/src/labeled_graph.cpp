#include <gbs/labeled_graph.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace gbs {

using nlohmann::json;

bool LabeledGraph::has_vertex(std::string_view v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

const LabeledEdge* LabeledGraph::find_edge(std::string_view id) const {
  for (const LabeledEdge& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

void LabeledGraph::validate() const {
  if (vertices.empty()) throw parse_error("graph: no vertices");
  std::set<std::string> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size())
    throw parse_error("graph: duplicate vertex id");
  std::set<std::string> edge_ids;
  for (const LabeledEdge& e : edges) {
    if (!edge_ids.insert(e.id).second)
      throw parse_error("graph: duplicate edge id '" + e.id + "'");
    if (!seen.count(e.from) || !seen.count(e.to))
      throw parse_error("graph: edge '" + e.id + "' references unknown vertex");
    if (e.label_from == 0 || e.label_to == 0)
      throw parse_error("graph: edge '" + e.id + "' has a zero label");
  }
  // connectivity
  std::map<std::string, std::vector<std::string>> adjacent;
  for (const LabeledEdge& e : edges) {
    adjacent[e.from].push_back(e.to);
    adjacent[e.to].push_back(e.from);
  }
  std::set<std::string> reached{vertices.front()};
  std::vector<std::string> frontier{vertices.front()};
  while (!frontier.empty()) {
    std::string v = frontier.back();
    frontier.pop_back();
    for (const std::string& w : adjacent[v])
      if (reached.insert(w).second) frontier.push_back(w);
  }
  if (reached.size() != vertices.size())
    throw parse_error("graph: not connected");
}

namespace {

Int label_from_json(const json& j, const char* key) {
  if (!j.contains(key)) throw parse_error(std::string("graph: missing ") + key);
  const json& v = j.at(key);
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) return Int(v.get<std::string>());
  throw parse_error(std::string("graph: ") + key + " must be an integer");
}

json label_to_json(const Int& label) {
  static const Int kMax = Int(1) << 62;
  if (abs(label) < kMax)
    return json(label.convert_to<long long>());
  return json(label.str());
}

}  // namespace

LabeledGraph graph_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("graph: invalid JSON: ") + e.what());
  }
  LabeledGraph graph;
  try {
    if (!j.contains("vertices") || !j.at("vertices").is_array())
      throw parse_error("graph: missing vertices array");
    for (const json& v : j.at("vertices"))
      graph.vertices.push_back(v.get<std::string>());
    if (j.contains("edges")) {
      for (const json& e : j.at("edges")) {
        LabeledEdge edge;
        edge.id = e.at("id").get<std::string>();
        edge.from = e.at("from").get<std::string>();
        edge.to = e.at("to").get<std::string>();
        edge.label_from = label_from_json(e, "label_from");
        edge.label_to = label_from_json(e, "label_to");
        graph.edges.push_back(std::move(edge));
      }
    }
  } catch (const json::exception& e) {
    throw parse_error(std::string("graph: bad structure: ") + e.what());
  }
  graph.validate();
  return graph;
}

std::string graph_to_json(const LabeledGraph& graph, bool pretty) {
  json j;
  j["vertices"] = graph.vertices;
  j["edges"] = json::array();
  for (const LabeledEdge& e : graph.edges) {
    json je;
    je["id"] = e.id;
    je["from"] = e.from;
    je["to"] = e.to;
    je["label_from"] = label_to_json(e.label_from);
    je["label_to"] = label_to_json(e.label_to);
    j["edges"].push_back(std::move(je));
  }
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace gbs
