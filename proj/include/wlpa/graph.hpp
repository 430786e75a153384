#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wlpa {

using VertexId = int;
using EdgeId = int;

struct RawEdge {
  std::string name;
  std::string source;
  std::string range;
  long long weight = 1;
};

struct RawGraph {
  std::vector<std::string> vertices;
  std::vector<RawEdge> edges;
};

struct WEdge {
  std::string name;
  VertexId source = -1;
  VertexId range = -1;
  int weight = 1;
};

/// Immutable finite weighted directed graph. Vertices and edges carry dense
/// indices assigned in declaration order; every set-valued query reports its
/// result in index order, so all downstream computations are deterministic.
class WeightedGraph {
 public:
  static WeightedGraph validate(const RawGraph& raw);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const WEdge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<WEdge>& edges() const { return edges_; }
  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[v]; }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_[v]; }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<WEdge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// One symbol of the double graph: a real letter e_i or a ghost letter e_i*.
/// A ghost letter swaps the endpoints of its edge.
struct Letter {
  EdgeId edge = -1;
  int index = 1;  // 1-based, <= weight(edge)
  bool ghost = false;
  VertexId source = -1;
  VertexId range = -1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word over the double-graph alphabet. Trivial words carry their vertex so
/// that length-0 paths have a well-defined source and range.
struct Word {
  std::vector<Letter> letters;
  VertexId vertex = -1;

  bool trivial() const { return letters.empty(); }
  static Word at_vertex(VertexId v) { return Word{{}, v}; }
};

std::vector<VertexId> sinks(const WeightedGraph& g);
std::vector<VertexId> regular_vertices(const WeightedGraph& g);

/// Max weight over the out-edges of a regular vertex.
int vertex_weight(const WeightedGraph& g, VertexId v);

/// All 2 * sum(w(e)) letters of the double graph, in deterministic order:
/// real letters in (edge, index) order, then ghost letters in the same order.
std::vector<Letter> letters(const WeightedGraph& g);

/// Vertices reachable from any root (roots included).
std::vector<VertexId> tree(const WeightedGraph& g, const std::vector<VertexId>& roots);

bool is_hereditary(const WeightedGraph& g, const std::vector<VertexId>& h);

/// Subgraph on a hereditary vertex set: vertices h, edges sourced in h.
WeightedGraph hereditary_subgraph(const WeightedGraph& g, const std::vector<VertexId>& h);

/// Range weight forest: tree of the ranges of all edges of weight > 1.
std::vector<VertexId> rwf(const WeightedGraph& g);

bool is_acyclic(const WeightedGraph& g);
bool is_unweighted(const WeightedGraph& g);
std::vector<EdgeId> weighted_edges(const WeightedGraph& g);

bool is_d_path(const WeightedGraph& g, const Word& w);

}  // namespace wlpa
