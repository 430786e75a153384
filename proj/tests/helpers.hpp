#pragma once

#include <random>
#include <string>
#include <vector>

#include "wlpa/nod.hpp"
#include "wlpa/parse.hpp"

namespace wlpa::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

inline WeightedGraph load_fixture(const std::string& name) {
  return parse_graph_file(fixture_path(name));
}

inline const std::vector<std::string>& all_fixtures() {
  static const std::vector<std::string> names = {
      "ex4_0.wg",        "ex4_exp.wg",      "exqu.wg",         "triangle.wg",
      "rose_n1_k0.wg",   "rose_n1_k1.wg",   "rose_n2_k0.wg",   "rose_n2_k1.wg",
      "isolated.wg",     "ladder_n1.wg",    "ladder_n2.wg",    "ladder_n3.wg",
      "ladder_ext_n1.wg", "ladder_ext_n2.wg", "ladder_ext_n3.wg", "ex5_00.wg"};
  return names;
}

/// Fixtures whose letter digraph is small enough for the bounded brute-force
/// connector search (implies/selfconnected cross-checks).
inline const std::vector<std::string>& oracle_fixtures() {
  static const std::vector<std::string> names = {
      "ex4_0.wg",      "exqu.wg",        "triangle.wg",     "rose_n1_k0.wg",
      "rose_n1_k1.wg", "rose_n2_k0.wg",  "isolated.wg",     "ladder_n1.wg",
      "ladder_n2.wg",  "ladder_n3.wg",   "ladder_ext_n1.wg", "ladder_ext_n2.wg",
      "ladder_ext_n3.wg", "ex5_00.wg"};
  return names;
}

/// Builds the letter word for names like "e.2" / "e.2*".
inline LetterWord word(const NodAutomaton& aut, const std::vector<std::string>& names) {
  LetterWord w;
  for (std::string s : names) {
    bool ghost = !s.empty() && s.back() == '*';
    if (ghost) s.pop_back();
    auto dot = s.rfind('.');
    int index = dot == std::string::npos ? 1 : std::stoi(s.substr(dot + 1));
    std::string ename = dot == std::string::npos ? s : s.substr(0, dot);
    auto e = aut.graph().find_edge(ename);
    if (!e) throw std::runtime_error("no edge " + ename);
    w.push_back(aut.letter_id(*e, index, ghost));
  }
  return w;
}

/// Random directed (multi)graph with the given bounds; uniform endpoints.
inline WeightedGraph random_graph(std::mt19937& rng, int max_vertices, int max_edges,
                                  int max_weight) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int n = nv(rng);
  RawGraph raw;
  for (int i = 0; i < n; ++i) raw.vertices.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<int> ne(0, max_edges);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> wt(1, max_weight);
  int m = ne(rng);
  for (int i = 0; i < m; ++i)
    raw.edges.push_back(RawEdge{"e" + std::to_string(i), raw.vertices[pick(rng)],
                                raw.vertices[pick(rng)], wt(rng)});
  return WeightedGraph::validate(raw);
}

}  // namespace wlpa::testing
