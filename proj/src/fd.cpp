#include "wlpa/fd.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wlpa/errors.hpp"
#include "wlpa/quasicycle.hpp"

namespace wlpa {

bool is_aquasicyclic(const WeightedGraph& g) {
  return enumerate_quasicycles(NodAutomaton(g)).empty();
}

namespace {

bool in_line(const WeightedGraph& g, EdgeId e, EdgeId f) {
  if (e == f) return true;
  auto te = tree(g, {g.edge(e).range});
  if (std::binary_search(te.begin(), te.end(), g.edge(f).source)) return true;
  auto tf = tree(g, {g.edge(f).range});
  return std::binary_search(tf.begin(), tf.end(), g.edge(e).source);
}

std::string fresh_name(std::set<std::string>& taken, const std::string& base) {
  if (taken.insert(base).second) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (taken.insert(candidate).second) return candidate;
  }
}

}  // namespace

AuditReport structural_audit(const WeightedGraph& g) {
  if (!is_aquasicyclic(g)) throw input_error("structural_audit: graph is not aquasicyclic");
  AuditReport rep;

  rep.acyclic = is_acyclic(g);
  if (!rep.acyclic) throw internal_error("audit: aquasicyclic graph has a cyclic path");

  rep.single_weighted_emitter = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int heavy = 0;
    for (EdgeId e : g.out_edges(v))
      if (g.edge(e).weight > 1) ++heavy;
    if (heavy > 1) {
      rep.single_weighted_emitter = false;
      throw internal_error("audit: vertex '" + g.vertex_name(v) +
                           "' emits more than one weighted edge");
    }
  }

  rep.rwf_single_emitter = true;
  for (VertexId v : rwf(g))
    if (g.out_edges(v).size() > 1) {
      rep.rwf_single_emitter = false;
      throw internal_error("audit: RWF vertex '" + g.vertex_name(v) +
                           "' emits more than one edge");
    }

  rep.disjoint_weighted_trees = true;
  auto heavy = weighted_edges(g);
  for (size_t i = 0; i < heavy.size(); ++i)
    for (size_t j = i + 1; j < heavy.size(); ++j) {
      EdgeId e = heavy[i], f = heavy[j];
      if (in_line(g, e, f)) continue;
      auto te = tree(g, {g.edge(e).range});
      auto tf = tree(g, {g.edge(f).range});
      std::vector<VertexId> common;
      std::set_intersection(te.begin(), te.end(), tf.begin(), tf.end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        rep.disjoint_weighted_trees = false;
        throw internal_error("audit: range trees of '" + g.edge(e).name + "' and '" +
                             g.edge(f).name + "' intersect");
      }
    }
  return rep;
}

EdgeType classify_edge(const WeightedGraph& g, EdgeId e) {
  if (g.edge(e).weight <= 1) throw input_error("classify_edge: edge is not weighted");
  return g.out_edges(g.edge(e).source).size() == 1 ? EdgeType::TypeA : EdgeType::TypeB;
}

std::vector<VertexId> normalization_zset(const WeightedGraph& g) {
  std::vector<char> in_z(g.vertex_count(), 0);
  for (VertexId v : rwf(g)) in_z[v] = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.out_edges(v).size() == 1 && g.edge(g.out_edges(v)[0]).weight > 1) in_z[v] = 1;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (in_z[v]) out.push_back(v);
  return out;
}

WeightedGraph lemma52_transform(const WeightedGraph& g) {
  if (!is_aquasicyclic(g)) throw input_error("lemma52_transform: graph is not aquasicyclic");
  std::vector<char> in_z(g.vertex_count(), 0);
  for (VertexId v : normalization_zset(g)) in_z[v] = 1;

  RawGraph raw;
  raw.vertices = g.vertex_names();
  std::set<std::string> taken;
  for (const WEdge& e : g.edges())
    if (!in_z[e.source]) taken.insert(e.name);
  for (const WEdge& e : g.edges()) {
    if (!in_z[e.source]) {
      raw.edges.push_back(
          RawEdge{e.name, g.vertex_name(e.source), g.vertex_name(e.range), e.weight});
    } else if (e.weight == 1) {
      raw.edges.push_back(RawEdge{fresh_name(taken, e.name), g.vertex_name(e.range),
                                  g.vertex_name(e.source), 1});
    } else {
      for (int i = 1; i <= e.weight; ++i)
        raw.edges.push_back(RawEdge{fresh_name(taken, e.name + "_" + std::to_string(i)),
                                    g.vertex_name(e.range), g.vertex_name(e.source), 1});
    }
  }
  WeightedGraph out = WeightedGraph::validate(raw);

  if (weighted_edges(out).size() > weighted_edges(g).size())
    throw internal_error("lemma52: weighted edge count increased");
  for (EdgeId e : weighted_edges(out)) {
    if (classify_edge(out, e) != EdgeType::TypeB)
      throw internal_error("lemma52: weighted edge '" + out.edge(e).name + "' is of type A");
    if (!out.out_edges(out.edge(e).range).empty())
      throw internal_error("lemma52: range of weighted edge '" + out.edge(e).name +
                           "' is not a sink");
  }
  if (!is_aquasicyclic(out)) throw internal_error("lemma52: output is not aquasicyclic");
  return out;
}

VertexId pick_pivot(const WeightedGraph& g) {
  auto heavy = weighted_edges(g);
  if (heavy.empty()) throw internal_error("pick_pivot: no weighted edges");
  std::vector<char> emits(g.vertex_count(), 0);
  for (EdgeId e : heavy) emits[g.edge(e).source] = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!emits[v]) continue;
    bool sole = true;
    for (VertexId t : tree(g, {v}))
      if (t != v && emits[t]) sole = false;
    if (sole) return v;
  }
  throw internal_error("pick_pivot: no admissible pivot; weighted emitters form a cycle");
}

UnweightedReplacement lemma53_unweight(const WeightedGraph& g, VertexId pivot) {
  EdgeId heavy = -1;
  std::vector<EdgeId> light;
  for (EdgeId e : g.out_edges(pivot)) {
    if (g.edge(e).weight > 1) {
      if (heavy != -1) throw internal_error("lemma53: pivot emits two weighted edges");
      heavy = e;
    } else {
      light.push_back(e);
    }
  }
  if (heavy == -1) throw internal_error("lemma53: pivot emits no weighted edge");
  if (light.empty()) throw internal_error("lemma53: weighted edge at pivot is of type A");
  const int k = g.edge(heavy).weight;
  const VertexId u = g.edge(heavy).range;
  if (u == pivot || !g.out_edges(u).empty())
    throw internal_error("lemma53: range of the weighted edge is not a separate sink");

  // Parallel-edge groups by target, targets in index order.
  std::vector<VertexId> targets;
  for (EdgeId e : light) targets.push_back(g.edge(e).range);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  const int m = static_cast<int>(targets.size());
  std::vector<std::vector<EdgeId>> groups(m);
  for (EdgeId e : light)
    groups[std::lower_bound(targets.begin(), targets.end(), g.edge(e).range) -
           targets.begin()]
        .push_back(e);

  auto tx = tree(g, targets);
  if (std::binary_search(tx.begin(), tx.end(), u) ||
      std::binary_search(tx.begin(), tx.end(), pivot))
    throw internal_error("lemma53: pivot or weighted range reachable from the light targets");
  for (VertexId y : tx)
    for (EdgeId e : g.out_edges(y))
      if (g.edge(e).weight > 1)
        throw internal_error("lemma53: weighted edge inside the target tree");

  std::set<std::string> taken_v(g.vertex_names().begin(), g.vertex_names().end());
  std::set<std::string> taken_e;
  for (const WEdge& e : g.edges()) taken_e.insert(e.name);

  const std::string uname = g.vertex_name(u);
  const std::string vname = g.vertex_name(pivot);
  const std::string ename = g.edge(heavy).name;

  std::vector<std::string> u_chain(k);  // u_1 .. u_k
  for (int i = 1; i <= k; ++i) u_chain[i - 1] = fresh_name(taken_v, uname + "_" + std::to_string(i));
  std::vector<std::vector<std::string>> u_grid(m);  // u_{i,1..(k-1)n_i}
  std::vector<std::vector<std::string>> v_grid(m);  // v_{i,2..n_i}
  for (int i = 0; i < m; ++i) {
    int ni = static_cast<int>(groups[i].size());
    for (int j = 1; j <= (k - 1) * ni; ++j)
      u_grid[i].push_back(
          fresh_name(taken_v, uname + "_" + std::to_string(i + 1) + "_" + std::to_string(j)));
    for (int j = 2; j <= ni; ++j)
      v_grid[i].push_back(
          fresh_name(taken_v, vname + "_" + std::to_string(i + 1) + "_" + std::to_string(j)));
  }

  RawGraph raw;
  for (const std::string& s : u_chain) raw.vertices.push_back(s);
  for (int i = 0; i < m; ++i)
    for (const std::string& s : u_grid[i]) raw.vertices.push_back(s);
  raw.vertices.push_back(vname);
  for (int i = 0; i < m; ++i)
    for (const std::string& s : v_grid[i]) raw.vertices.push_back(s);
  for (VertexId x : targets) raw.vertices.push_back(g.vertex_name(x));
  std::vector<VertexId> rest;  // T(X) \ X
  for (VertexId y : tx)
    if (!std::binary_search(targets.begin(), targets.end(), y)) rest.push_back(y);
  for (VertexId y : rest) raw.vertices.push_back(g.vertex_name(y));

  // alpha chain v -> u_1 -> ... -> u_k, named after the weighted edge.
  raw.edges.push_back(RawEdge{fresh_name(taken_e, ename + "_1"), vname, u_chain[0], 1});
  for (int i = 2; i <= k; ++i)
    raw.edges.push_back(RawEdge{fresh_name(taken_e, ename + "_" + std::to_string(i)),
                                u_chain[i - 2], u_chain[i - 1], 1});
  // beta chains v -> v_{i,2} -> ... -> v_{i,n_i} -> x_i, reusing the parallel
  // edges' names.
  for (int i = 0; i < m; ++i) {
    int ni = static_cast<int>(groups[i].size());
    const std::string xname = g.vertex_name(targets[i]);
    for (int j = 1; j <= ni; ++j) {
      std::string from = (j == 1) ? vname : v_grid[i][j - 2];
      std::string to = (j == ni) ? xname : v_grid[i][j - 1];
      raw.edges.push_back(RawEdge{g.edge(groups[i][j - 1]).name, from, to, 1});
    }
  }
  // gamma chains x_i -> u_{i,1} -> ... -> u_{i,(k-1)n_i}.
  for (int i = 0; i < m; ++i) {
    int ni = static_cast<int>(groups[i].size());
    const std::string xname = g.vertex_name(targets[i]);
    for (int j = 1; j <= (k - 1) * ni; ++j) {
      std::string from = (j == 1) ? xname : u_grid[i][j - 2];
      raw.edges.push_back(RawEdge{fresh_name(taken_e, ename + "_" + g.vertex_name(targets[i]) +
                                                          "_" + std::to_string(j)),
                                  from, u_grid[i][j - 1], 1});
    }
  }
  // Edges inside T(X): kept, except those sourced at an x_i, which move to the
  // end of its gamma chain.
  for (const WEdge& e : g.edges()) {
    auto ti = std::lower_bound(targets.begin(), targets.end(), e.source);
    if (ti != targets.end() && *ti == e.source) {
      int i = static_cast<int>(ti - targets.begin());
      raw.edges.push_back(RawEdge{e.name, u_grid[i].back(), g.vertex_name(e.range), 1});
    } else if (std::binary_search(tx.begin(), tx.end(), e.source)) {
      raw.edges.push_back(RawEdge{e.name, g.vertex_name(e.source), g.vertex_name(e.range), 1});
    }
  }

  UnweightedReplacement rep;
  rep.graph = WeightedGraph::validate(raw);
  auto& img = rep.images.images;
  img[u] = u_chain;
  for (int i = 0; i < m; ++i)
    for (const std::string& s : u_grid[i]) img[u].push_back(s);
  img[pivot] = {vname};
  for (int i = 0; i < m; ++i)
    for (const std::string& s : v_grid[i]) img[pivot].push_back(s);
  for (VertexId x : targets) img[x] = {g.vertex_name(x)};
  for (VertexId y : rest) img[y] = {g.vertex_name(y)};
  return rep;
}

WeightedGraph replacement_splice(const WeightedGraph& g, const std::vector<VertexId>& h,
                                 const WeightedGraph& replacement,
                                 const VertexImageMap& images) {
  if (!is_hereditary(g, h)) throw input_error("replacement_splice: H is not hereditary");
  std::vector<char> in_h(g.vertex_count(), 0);
  for (VertexId v : h) in_h[v] = 1;
  for (VertexId v : h)
    if (!images.images.contains(v))
      throw input_error("replacement_splice: no image for vertex '" + g.vertex_name(v) + "'");
  if (images.images.size() != h.size())
    throw input_error("replacement_splice: image map does not match H");
  for (const auto& [v, names] : images.images) {
    if (names.empty()) throw input_error("replacement_splice: empty image list");
    for (const std::string& name : names)
      if (!replacement.find_vertex(name))
        throw input_error("replacement_splice: image vertex '" + name +
                          "' missing from replacement");
  }

  RawGraph raw;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!in_h[v]) raw.vertices.push_back(g.vertex_name(v));
  for (const std::string& name : replacement.vertex_names()) raw.vertices.push_back(name);

  std::set<std::string> taken;
  for (const WEdge& e : g.edges())
    if (!in_h[e.source] && !in_h[e.range]) taken.insert(e.name);
  for (const WEdge& e : replacement.edges()) taken.insert(e.name);

  for (const WEdge& e : g.edges()) {
    if (in_h[e.source]) continue;  // represented inside the replacement
    if (!in_h[e.range]) {
      raw.edges.push_back(
          RawEdge{e.name, g.vertex_name(e.source), g.vertex_name(e.range), e.weight});
      continue;
    }
    const auto& imgs = images.images.at(e.range);
    for (size_t j = 0; j < imgs.size(); ++j) {
      std::string name =
          imgs.size() == 1 ? fresh_name(taken, e.name)
                           : fresh_name(taken, e.name + "_" + std::to_string(j + 1));
      raw.edges.push_back(RawEdge{name, g.vertex_name(e.source), imgs[j], e.weight});
    }
  }
  for (const WEdge& e : replacement.edges())
    raw.edges.push_back(RawEdge{e.name, replacement.vertex_name(e.source),
                                replacement.vertex_name(e.range), e.weight});
  return WeightedGraph::validate(raw);
}

std::vector<WeightedGraph> unweight_trace(const WeightedGraph& g) {
  if (!is_aquasicyclic(g)) throw input_error("unweight: graph is not aquasicyclic");
  std::vector<WeightedGraph> trace{g};
  WeightedGraph cur = g;
  size_t rounds = 0;
  const size_t max_rounds = weighted_edges(g).size() + 1;
  while (true) {
    size_t heavy_before = weighted_edges(cur).size();
    cur = lemma52_transform(cur);
    trace.push_back(cur);
    if (is_unweighted(cur)) break;
    VertexId pivot = pick_pivot(cur);
    UnweightedReplacement rep = lemma53_unweight(cur, pivot);
    cur = replacement_splice(cur, tree(cur, {pivot}), rep.graph, rep.images);
    trace.push_back(cur);
    if (weighted_edges(cur).size() >= heavy_before)
      throw internal_error("unweight: weighted edge count did not decrease");
    if (++rounds > max_rounds) throw internal_error("unweight: round bound exceeded");
  }
  if (!is_unweighted(cur) || !is_acyclic(cur) || !is_aquasicyclic(cur))
    throw internal_error("unweight: final graph fails the unweighted/acyclic check");
  return trace;
}

WeightedGraph unweight_fully(const WeightedGraph& g) { return unweight_trace(g).back(); }

Decomposition acyclic_decomposition(const WeightedGraph& g) {
  if (!is_unweighted(g)) throw input_error("acyclic_decomposition: graph is weighted");
  if (!is_acyclic(g)) throw input_error("acyclic_decomposition: graph has a cycle");

  // Paths ending at v: the trivial one plus every path extended by an in-edge.
  // Process in topological order of the vertex DAG.
  const int n = g.vertex_count();
  std::vector<int> indeg(n, 0);
  for (const WEdge& e : g.edges()) ++indeg[e.range];
  std::vector<VertexId> order;
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (size_t i = 0; i < order.size(); ++i)
    for (EdgeId e : g.out_edges(order[i]))
      if (--indeg[g.edge(e).range] == 0) order.push_back(g.edge(e).range);

  std::vector<BigInt> paths_to(n, 0);
  for (VertexId v : order) {
    paths_to[v] = 1;
    for (EdgeId e : g.in_edges(v)) paths_to[v] += paths_to[g.edge(e).source];
  }

  Decomposition dec;
  dec.dimension = 0;
  for (VertexId v : sinks(g)) {
    long long nv = paths_to[v].convert_to<long long>();
    dec.sizes.push_back(nv);
    dec.dimension += paths_to[v] * paths_to[v];
  }
  std::sort(dec.sizes.begin(), dec.sizes.end());
  return dec;
}

Decomposition decompose(const WeightedGraph& g) {
  return acyclic_decomposition(unweight_fully(g));
}

BigInt dimension_oracle(const WeightedGraph& g) {
  NodAutomaton aut(g);
  const int cap = aut.letter_count();
  BigInt total = g.vertex_count();
  std::function<void(int, int)> walk = [&](int x, int len) {
    if (len > cap)
      throw internal_error("dimension_oracle: nod-path longer than the letter count");
    ++total;
    for (int y : aut.successors(x)) walk(y, len + 1);
  };
  for (int x = 0; x < aut.letter_count(); ++x) walk(x, 1);
  return total;
}

}  // namespace wlpa
