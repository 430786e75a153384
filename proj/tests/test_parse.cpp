#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "wlpa/errors.hpp"
#include "wlpa/parse.hpp"

using namespace wlpa;
using namespace wlpa::testing;

namespace {

std::string message_of(const std::string& text) {
  try {
    parse_graph_string(text);
  } catch (const input_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parses the two-sink weighted graph") {
  WeightedGraph g = parse_graph_string(
      "vertex u\nvertex v\nvertex x\nedge e : v -> u weight 2\nedge f : v -> x\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(*g.find_edge("e")).weight == 2);
  CHECK(g.edge(*g.find_edge("f")).weight == 1);
  CHECK(g.vertex_name(g.edge(*g.find_edge("e")).range) == "u");
}

TEST_CASE("diagnostics carry line numbers") {
  CHECK(message_of("edge e : v -> u\n") == "unknown vertex 'v' (line 1)");
  CHECK(message_of("vertex v\nvertex u\nedge e : v -> u weight 0\n") ==
        "edge 'e' has weight 0; weights must be >= 1 (line 3)");
  CHECK(message_of("vertex v\nvertex v\n") != "");
  CHECK(message_of("vertx v\n") == "unknown directive 'vertx' (line 1)");
  CHECK(message_of("vertex v\nedge e v -> v\n") != "");
  CHECK(message_of("") == "empty vertex set");
}

TEST_CASE("comments, blank lines and glued arrows") {
  WeightedGraph g = parse_graph_string(
      "# leading comment\n\nvertex v # trailing comment\nedge e:v->v weight 3\n");
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge(0).weight == 3);
}

TEST_CASE("round-trips every bundled fixture") {
  for (const auto& name : all_fixtures()) {
    WeightedGraph g = load_fixture(name);
    WeightedGraph h = parse_graph_string(render_graph(g));
    REQUIRE(h.vertex_count() == g.vertex_count());
    REQUIRE(h.edge_count() == g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      CHECK(h.vertex_name(v) == g.vertex_name(v));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      CHECK(h.edge(e).name == g.edge(e).name);
      CHECK(h.edge(e).source == g.edge(e).source);
      CHECK(h.edge(e).range == g.edge(e).range);
      CHECK(h.edge(e).weight == g.edge(e).weight);
    }
  }
}

TEST_CASE("letter rendering") {
  WeightedGraph g = load_fixture("ex4_0.wg");
  NodAutomaton aut(g);
  CHECK(render_letter(aut, aut.letter_id(0, 2, false)) == "e.2");
  CHECK(render_letter(aut, aut.letter_id(0, 2, true)) == "e.2*");
  CHECK(render_word(aut, word(aut, {"e.2*", "f.1", "f.1*", "e.2"})) ==
        "e.2* f.1 f.1* e.2");
}
