#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tadpole/graph.hpp"

namespace tadpole {

// Text format, one record per line:
//   v <n>            header, exactly once (conventionally first)
//   e <u> <v> <p/q>  undirected edge with weight p/q
//   # ...            comment (also allowed after a record)
// Failures throw ParseError naming the offending line.

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::filesystem::path& path);

}  // namespace tadpole
