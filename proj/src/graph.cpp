#include "wlpa/graph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "wlpa/errors.hpp"

namespace wlpa {

WeightedGraph WeightedGraph::validate(const RawGraph& raw) {
  if (raw.vertices.empty()) throw input_error("empty vertex set");

  WeightedGraph g;
  std::unordered_map<std::string, VertexId> vindex;
  for (const auto& name : raw.vertices) {
    if (!vindex.emplace(name, static_cast<VertexId>(g.vertex_names_.size())).second)
      throw input_error("duplicate vertex name '" + name + "'");
    g.vertex_names_.push_back(name);
  }

  std::unordered_set<std::string> enames;
  g.out_.resize(g.vertex_names_.size());
  g.in_.resize(g.vertex_names_.size());
  for (const auto& re : raw.edges) {
    if (!enames.insert(re.name).second)
      throw input_error("duplicate edge name '" + re.name + "'");
    auto s = vindex.find(re.source);
    if (s == vindex.end()) throw input_error("unknown vertex '" + re.source + "'");
    auto r = vindex.find(re.range);
    if (r == vindex.end()) throw input_error("unknown vertex '" + re.range + "'");
    if (re.weight < 1)
      throw input_error("edge '" + re.name + "' has weight " + std::to_string(re.weight) +
                        "; weights must be >= 1");
    EdgeId id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back(WEdge{re.name, s->second, r->second, static_cast<int>(re.weight)});
    g.out_[s->second].push_back(id);
    g.in_[r->second].push_back(id);
  }
  return g;
}

std::optional<VertexId> WeightedGraph::find_vertex(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertex_names_[i] == name) return i;
  return std::nullopt;
}

std::optional<EdgeId> WeightedGraph::find_edge(const std::string& name) const {
  for (int i = 0; i < edge_count(); ++i)
    if (edges_[i].name == name) return i;
  return std::nullopt;
}

std::vector<VertexId> sinks(const WeightedGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.out_edges(v).empty()) out.push_back(v);
  return out;
}

std::vector<VertexId> regular_vertices(const WeightedGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!g.out_edges(v).empty()) out.push_back(v);
  return out;
}

int vertex_weight(const WeightedGraph& g, VertexId v) {
  if (g.out_edges(v).empty())
    throw input_error("vertex '" + g.vertex_name(v) + "' is a sink; w(v) is undefined");
  int w = 0;
  for (EdgeId e : g.out_edges(v)) w = std::max(w, g.edge(e).weight);
  return w;
}

std::vector<Letter> letters(const WeightedGraph& g) {
  std::vector<Letter> out;
  for (int ghost = 0; ghost < 2; ++ghost) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const WEdge& we = g.edge(e);
      for (int i = 1; i <= we.weight; ++i) {
        if (ghost)
          out.push_back(Letter{e, i, true, we.range, we.source});
        else
          out.push_back(Letter{e, i, false, we.source, we.range});
      }
    }
  }
  return out;
}

std::vector<VertexId> tree(const WeightedGraph& g, const std::vector<VertexId>& roots) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack;
  for (VertexId v : roots) {
    if (!seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(v)) {
      VertexId r = g.edge(e).range;
      if (!seen[r]) {
        seen[r] = 1;
        stack.push_back(r);
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

bool is_hereditary(const WeightedGraph& g, const std::vector<VertexId>& h) {
  return tree(g, h) == [&] {
    auto s = h;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }();
}

WeightedGraph hereditary_subgraph(const WeightedGraph& g, const std::vector<VertexId>& h) {
  if (!is_hereditary(g, h)) throw input_error("vertex set is not hereditary");
  std::vector<char> in_h(g.vertex_count(), 0);
  for (VertexId v : h) in_h[v] = 1;
  RawGraph raw;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (in_h[v]) raw.vertices.push_back(g.vertex_name(v));
  for (const WEdge& e : g.edges())
    if (in_h[e.source])
      raw.edges.push_back(
          RawEdge{e.name, g.vertex_name(e.source), g.vertex_name(e.range), e.weight});
  return WeightedGraph::validate(raw);
}

std::vector<VertexId> rwf(const WeightedGraph& g) {
  std::vector<VertexId> roots;
  for (EdgeId e : weighted_edges(g)) roots.push_back(g.edge(e).range);
  if (roots.empty()) return {};
  return tree(g, roots);
}

bool is_acyclic(const WeightedGraph& g) {
  // Iterative three-color DFS over the vertex adjacency.
  std::vector<int> color(g.vertex_count(), 0);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (color[start] != 0) continue;
    std::vector<std::pair<VertexId, size_t>> stack{{start, 0}};
    color[start] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < g.out_edges(v).size()) {
        VertexId r = g.edge(g.out_edges(v)[i++]).range;
        if (color[r] == 1) return false;
        if (color[r] == 0) {
          color[r] = 1;
          stack.emplace_back(r, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

bool is_unweighted(const WeightedGraph& g) {
  for (const WEdge& e : g.edges())
    if (e.weight > 1) return false;
  return true;
}

std::vector<EdgeId> weighted_edges(const WeightedGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).weight > 1) out.push_back(e);
  return out;
}

bool is_d_path(const WeightedGraph& g, const Word& w) {
  if (w.trivial()) return w.vertex >= 0 && w.vertex < g.vertex_count();
  for (size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (w.letters[i].range != w.letters[i + 1].source) return false;
  return true;
}

}  // namespace wlpa
