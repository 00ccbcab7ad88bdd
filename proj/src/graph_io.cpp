#include "gcsh/graph_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gcsh/reporting.hpp"

namespace gcsh {

using nlohmann::json;

GraphFile parse_graph_file(const std::string& text) {
  const json doc = json::parse(text);

  std::vector<std::string> ids;
  std::vector<double> mu;
  for (const json& v : doc.at("vertices")) {
    ids.push_back(v.at("id").get<std::string>());
    mu.push_back(v.at("mu").get<double>());
  }

  std::vector<EdgeSpec> edges;
  if (doc.contains("edges")) {
    for (const json& e : doc.at("edges")) {
      edges.push_back({e.at("a").get<std::string>(), e.at("b").get<std::string>(),
                       e.at("w").get<double>()});
    }
  }

  Graph graph = Graph::build(ids, edges, mu);
  std::map<std::string, VertexFunction> functions;
  if (doc.contains("functions")) {
    for (const auto& [name, table] : doc.at("functions").items()) {
      VertexFunction f = VertexFunction::Zero(graph.size());
      for (const auto& [vertex, value] : table.items()) {
        f[graph.index_of(vertex)] = value.get<double>();
      }
      functions.emplace(name, std::move(f));
    }
  }
  return GraphFile{std::move(graph), std::move(functions)};
}

GraphFile load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open graph file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_file(buffer.str());
}

std::string serialize_graph_file(const GraphFile& file) {
  const Graph& g = file.graph;
  std::ostringstream os;
  os << "{\"vertices\":[";
  for (int i = 0; i < g.size(); ++i) {
    if (i) os << ",";
    os << "{\"id\":" << json_quote(g.vertex_ids()[i])
       << ",\"mu\":" << format_number(g.measure(i)) << "}";
  }
  os << "],\"edges\":[";
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    if (k) os << ",";
    os << "{\"a\":" << json_quote(g.vertex_ids()[e.a])
       << ",\"b\":" << json_quote(g.vertex_ids()[e.b])
       << ",\"w\":" << format_number(e.w) << "}";
  }
  os << "],\"functions\":{";
  bool first_fn = true;
  for (const auto& [name, f] : file.functions) {
    if (!first_fn) os << ",";
    first_fn = false;
    os << json_quote(name) << ":{";
    for (int i = 0; i < g.size(); ++i) {
      if (i) os << ",";
      os << json_quote(g.vertex_ids()[i]) << ":" << format_number(f[i]);
    }
    os << "}";
  }
  os << "}}";
  return os.str();
}

}  // namespace gcsh
