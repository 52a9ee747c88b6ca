#include <doctest.h>

#include "tadpole/error.hpp"
#include "tadpole/graph.hpp"
#include "tadpole/graph_io.hpp"
#include "tadpole/rational.hpp"

using namespace tadpole;

namespace {

std::vector<Weight> ws(std::initializer_list<long> xs) {
  std::vector<Weight> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(format_rational(parse_rational("4/2")) == "2/1");
  CHECK(format_decimal(make_rational(2, 3)) == "0.666667");
  CHECK(format_decimal(make_rational(-1, 8), 2) == "-0.13");
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::MalformedLine);
  CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::MalformedLine);
  CHECK(kind_of([] { parse_rational("1/-2"); }) == ErrorKind::MalformedLine);
}

TEST_CASE("make_tadpole builds T_{3,1}") {
  const Graph g = make_tadpole(3, 1, ws({1, 1, 1, 1}));
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges().size() == 4);
  CHECK(g.weight(0, 3) == Rational(1));
  CHECK(g.weight(1, 2) == Rational(1));
  CHECK_FALSE(g.weight(1, 3));

  const Graph heavy = make_tadpole(3, 1, ws({1, 1, 10, 1}));
  CHECK(heavy.weight(2, 0) == Rational(10));

  std::vector<Weight> zero(6, Weight(1));
  zero[2] = 0;
  CHECK(kind_of([&] { make_tadpole(4, 2, zero); }) == ErrorKind::NonPositiveWeight);
  CHECK(kind_of([] { make_tadpole(2, 1, ws({1, 1, 1})); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("make_cycle") {
  CHECK(make_cycle(3, ws({1, 1, 1})).total_weight() == Rational(3));
  const Graph c = make_cycle(4, ws({1, 2, 3, 4}));
  CHECK(c.weight(3, 0) == Rational(4));
  CHECK(is_cycle(c));
  CHECK(kind_of([] { make_cycle(2, ws({1, 1})); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("graph constructor rejects malformed input") {
  CHECK(kind_of([] { Graph({0, 1}, {{0, 0, 1}}); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([] { Graph({0, 1}, {{0, 1, 1}, {1, 0, 2}}); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { Graph({0, 1, 2, 3}, {{0, 1, 1}, {2, 3, 1}}); }) == ErrorKind::Disconnected);
  CHECK(kind_of([] { Graph({0, 1}, {{0, 1, -1}}); }) == ErrorKind::NonPositiveWeight);
}

TEST_CASE("decompose_tadpole") {
  const auto d = decompose_tadpole(make_tadpole(3, 1, ws({1, 1, 1, 1})));
  CHECK(d.junction == 0);
  CHECK(d.stem_end == 3);
  CHECK(d.i == 3);
  CHECK(d.j == 1);
  CHECK(d.cycle_weight() == Rational(3));
  CHECK(d.stem_weight() == Rational(1));
  CHECK(d.on_stem(3));
  CHECK_FALSE(d.on_stem(0));

  const auto big = decompose_tadpole(make_tadpole(6, 4, std::vector<Weight>(10, Weight(2))));
  CHECK(big.cycle_vertices.size() == 6);
  CHECK(big.stem_vertices == std::vector<VertexId>{6, 7, 8, 9});
  CHECK(big.cycle_edges.front().u == 0);

  CHECK(kind_of([] { decompose_tadpole(make_cycle(4, ws({1, 1, 1, 1}))); }) == ErrorKind::NotATadpole);
  const Graph path({0, 1, 2, 3}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  CHECK(kind_of([&] { decompose_tadpole(path); }) == ErrorKind::NotATadpole);
  CHECK_FALSE(is_tadpole(path));
  CHECK_FALSE(is_cycle(path));
}

TEST_CASE("graph text format") {
  const Graph g = parse_graph("v 4\ne 0 1 1/1\ne 1 2 1/1\ne 2 0 1/1\ne 0 3 1/1");
  CHECK(g == make_tadpole(3, 1, ws({1, 1, 1, 1})));

  const Graph w = make_tadpole(4, 2, {make_rational(3, 7), 1, 5, make_rational(9, 2), 2, 1});
  CHECK(parse_graph(serialize_graph(w)) == w);

  CHECK(parse_graph("# comment\nv 3\ne 0 1 1\ne 1 2 2 # trailing\n\ne 2 0 3\n").total_weight() == Rational(6));

  auto line_of = [](const char* text) -> std::pair<ErrorKind, std::size_t> {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return {e.kind(), e.line()};
    }
    return {ErrorKind::Io, 0};
  };
  CHECK(line_of("e 0 1 0/1").first == ErrorKind::NonPositiveWeight);
  CHECK(line_of("v 2\ne 0 1 0/1") == std::pair{ErrorKind::NonPositiveWeight, std::size_t{2}});
  CHECK(line_of("v 2\ne 0 0 1") == std::pair{ErrorKind::SelfLoop, std::size_t{2}});
  CHECK(line_of("v 2\ne 0 1 1\ne 1 0 1") == std::pair{ErrorKind::DuplicateEdge, std::size_t{3}});
  CHECK(line_of("v 2\ne 0 one 1").first == ErrorKind::MalformedLine);
  CHECK(line_of("v 4\ne 0 1 1\ne 2 3 1").first == ErrorKind::Disconnected);
  CHECK(line_of("v 3\ne 0 1 1\ne 1 2 1\nv 3").first == ErrorKind::MalformedLine);
  CHECK(kind_of([] { read_graph_file("/nonexistent/graph.txt"); }) == ErrorKind::Io);
}
