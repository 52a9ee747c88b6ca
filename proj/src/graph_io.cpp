#include "tadpole/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "tadpole/error.hpp"

namespace tadpole {

namespace {

VertexId parse_vertex(const std::string& token, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(ErrorKind::MalformedLine, line, "bad vertex id '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    throw ParseError(ErrorKind::MalformedLine, line, "vertex id out of range '" + token + "'");
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared;
  std::size_t header_line = 0;
  std::set<VertexId> ids;
  std::set<std::pair<VertexId, VertexId>> seen_edges;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string tag;
    if (!(fields >> tag)) continue;

    if (tag == "v") {
      std::string count, extra;
      if (declared) throw ParseError(ErrorKind::MalformedLine, line_no, "second 'v' header");
      if (!(fields >> count) || (fields >> extra)) {
        throw ParseError(ErrorKind::MalformedLine, line_no, "expected 'v <n>'");
      }
      declared = static_cast<std::size_t>(parse_vertex(count, line_no));
      header_line = line_no;
    } else if (tag == "e") {
      std::string su, sv, sw, extra;
      if (!(fields >> su >> sv >> sw) || (fields >> extra)) {
        throw ParseError(ErrorKind::MalformedLine, line_no, "expected 'e <u> <v> <p>/<q>'");
      }
      const auto u = parse_vertex(su, line_no);
      const auto v = parse_vertex(sv, line_no);
      Rational w;
      try {
        w = parse_rational(sw);
      } catch (const Error& err) {
        throw ParseError(ErrorKind::MalformedLine, line_no, err.what());
      }
      if (u == v) throw ParseError(ErrorKind::SelfLoop, line_no, "self-loop at " + su);
      if (w <= 0) throw ParseError(ErrorKind::NonPositiveWeight, line_no, "weight " + sw);
      if (!seen_edges.insert({std::min(u, v), std::max(u, v)}).second) {
        throw ParseError(ErrorKind::DuplicateEdge, line_no, "edge " + su + "-" + sv + " listed twice");
      }
      ids.insert(u);
      ids.insert(v);
      edges.push_back({u, v, w});
    } else {
      throw ParseError(ErrorKind::MalformedLine, line_no, "unknown record '" + tag + "'");
    }
  }

  if (!declared) throw ParseError(ErrorKind::MalformedLine, line_no, "missing 'v <n>' header");
  if (ids.size() != *declared) {
    throw ParseError(ErrorKind::MalformedLine, header_line,
                     "header declares " + std::to_string(*declared) + " vertices, edges use " +
                         std::to_string(ids.size()));
  }
  try {
    return Graph(std::vector<VertexId>(ids.begin(), ids.end()), std::move(edges));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::Disconnected) throw ParseError(ErrorKind::Disconnected, line_no, err.what());
    throw ParseError(err.kind(), header_line, err.what());
  }
}

std::string serialize_graph(const Graph& g) {
  std::string out = "v " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_rational(e.weight) + "\n";
  }
  return out;
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace tadpole
