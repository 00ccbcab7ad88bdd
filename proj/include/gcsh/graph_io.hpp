#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "gcsh/graph.hpp"

namespace gcsh {

// On-disk graph document: the geometry plus named vertex functions.
struct GraphFile {
  Graph graph;
  std::map<std::string, VertexFunction> functions;
};

// Schema: {"vertices":[{"id":str,"mu":num}],"edges":[{"a":str,"b":str,"w":num}],
//          "functions":{name:{vertexId:num}}}. Each undirected edge is listed
// once. Semantic violations surface with the build_graph error taxonomy;
// malformed JSON propagates as a parse exception.
GraphFile parse_graph_file(const std::string& text);
GraphFile load_graph_file(const std::string& path);

// Inverse of parse_graph_file up to Graph identity (17 significant digits).
std::string serialize_graph_file(const GraphFile& file);

}  // namespace gcsh
