#include "wlpa/gk.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wlpa/errors.hpp"

namespace wlpa {

std::optional<VertexId> quick_exponential_check(const WeightedGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int heavy = 0;
    for (EdgeId e : g.out_edges(v))
      if (g.edge(e).weight >= 2) ++heavy;
    if (heavy >= 2) return v;
  }
  return std::nullopt;
}

ChainResult max_chain(const NodAutomaton& aut, const std::vector<LetterWord>& qcs) {
  const int m = static_cast<int>(qcs.size());
  if (m == 0) return {};

  std::map<LetterWord, int> class_id;
  std::vector<int> cls(m);
  for (int i = 0; i < m; ++i) {
    LetterWord c = canonical_rotation(qcs[i]);
    auto [it, inserted] = class_id.try_emplace(c, static_cast<int>(class_id.size()));
    cls[i] = it->second;
  }
  if (class_id.size() > 64) throw internal_error("max_chain: more than 64 rotation classes");

  std::vector<std::vector<char>> imp(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (cls[i] != cls[j]) imp[i][j] = implies(aut, qcs[i], qcs[j]);

  ChainResult best;
  std::vector<int> cur;
  std::function<void(int, uint64_t)> go = [&](int i, uint64_t used) {
    cur.push_back(i);
    if (static_cast<int>(cur.size()) > best.length) {
      best.length = static_cast<int>(cur.size());
      best.chain.clear();
      for (int k : cur) best.chain.push_back(qcs[k]);
    }
    for (int j = 0; j < m; ++j)
      if (imp[i][j] && !(used & (1ull << cls[j]))) go(j, used | (1ull << cls[j]));
    cur.pop_back();
  };
  for (int i = 0; i < m; ++i) go(i, 1ull << cls[i]);
  return best;
}

GkResult gk_dimension(const NodAutomaton& aut) {
  const WeightedGraph& g = aut.graph();
  if (auto v = quick_exponential_check(g)) {
    // Witness per the two-heavy-edges construction: with f a heavy edge at v
    // other than e^v, f_2 (loop) or f_2 f_2* is a selfconnected quasi-cycle.
    EdgeId f = -1;
    for (EdgeId e : g.out_edges(*v))
      if (g.edge(e).weight >= 2 && e != aut.base().edge_at[*v]) {
        f = e;
        break;
      }
    if (f == -1) throw internal_error("gk_dimension: missing second heavy edge");
    LetterWord w{aut.letter_id(f, 2, false)};
    if (g.edge(f).range != *v) w.push_back(aut.letter_id(f, 2, true));
    if (!is_quasicycle(aut, w) || !is_selfconnected(aut, w))
      throw internal_error("gk_dimension: constructed witness is not selfconnected");
    return GkResult{Growth::exponential, 0, w, {}};
  }

  auto qcs = enumerate_quasicycles(aut);
  // Witness choice for reporting: prefer earlier edges, real letters before
  // ghosts and, within a structured edge, its top-index letter (the indices of
  // e^v play a symmetric role, so the maximal one represents the edge).
  auto key = [&](int x) {
    const Letter& l = aut.letter(x);
    return std::tuple(l.edge, l.ghost, g.edge(l.edge).weight - l.index);
  };
  auto word_less = [&](const LetterWord& a, const LetterWord& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [&](int x, int y) { return key(x) < key(y); });
  };
  const LetterWord* witness = nullptr;
  for (const LetterWord& p : qcs)
    if (is_selfconnected(aut, p) && (!witness || word_less(p, *witness))) witness = &p;
  if (witness) return GkResult{Growth::exponential, 0, *witness, {}};

  ChainResult cr = max_chain(aut, qcs);
  return GkResult{Growth::polynomial, cr.length, std::nullopt, std::move(cr.chain)};
}

GkResult gk_dimension(const WeightedGraph& g) { return gk_dimension(NodAutomaton(g)); }

namespace {

struct SccInfo {
  std::vector<int> comp;  // per vertex
  int count = 0;
};

SccInfo strongly_connected_components(const WeightedGraph& g) {
  const int n = g.vertex_count();
  SccInfo info;
  info.comp.assign(n, -1);
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  std::function<void(int)> dfs1 = [&](int v) {
    seen[v] = 1;
    for (EdgeId e : g.out_edges(v))
      if (!seen[g.edge(e).range]) dfs1(g.edge(e).range);
    order.push_back(v);
  };
  for (int v = 0; v < n; ++v)
    if (!seen[v]) dfs1(v);
  std::function<void(int, int)> dfs2 = [&](int v, int c) {
    info.comp[v] = c;
    for (EdgeId e : g.in_edges(v))
      if (info.comp[g.edge(e).source] == -1) dfs2(g.edge(e).source, c);
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (info.comp[*it] == -1) dfs2(*it, info.count++);
  return info;
}

// Letter ids for an unweighted graph follow directly from the letter order:
// the real letter e_1 has id e, its ghost has id edge_count + e.
LetterWord real_word(const std::vector<EdgeId>& edges) {
  LetterWord w;
  for (EdgeId e : edges) w.push_back(e);
  return w;
}

LetterWord ghost_star(const WeightedGraph& g, const LetterWord& real) {
  LetterWord w;
  for (auto it = real.rbegin(); it != real.rend(); ++it) w.push_back(g.edge_count() + *it);
  return w;
}

}  // namespace

GkResult unweighted_gk(const WeightedGraph& g) {
  if (!is_unweighted(g)) throw input_error("unweighted_gk: graph has an edge of weight > 1");
  const int n = g.vertex_count();
  SccInfo scc = strongly_connected_components(g);

  std::vector<std::vector<VertexId>> members(scc.count);
  for (int v = 0; v < n; ++v) members[scc.comp[v]].push_back(v);

  std::vector<std::vector<EdgeId>> internal(scc.count);  // edges within one component
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (scc.comp[g.edge(e).source] == scc.comp[g.edge(e).range])
      internal[scc.comp[g.edge(e).source]].push_back(e);

  // A component carries a cycle iff it has an internal edge; polynomial growth
  // requires every such component to be a single cycle (internal out-degree 1
  // everywhere), otherwise two distinct cycles meet at a vertex.
  std::vector<char> is_cycle(scc.count, 0);
  for (int c = 0; c < scc.count; ++c) {
    if (internal[c].empty()) continue;
    is_cycle[c] = 1;
    for (VertexId v : members[c]) {
      int deg = 0;
      for (EdgeId e : g.out_edges(v))
        if (scc.comp[g.edge(e).range] == c) ++deg;
      if (deg != 1) {
        // Exponential; follow internal edges from v until the walk closes.
        std::vector<EdgeId> cyc;
        std::vector<char> onwalk(n, 0);
        VertexId cur = v;
        while (!onwalk[cur]) {
          onwalk[cur] = 1;
          EdgeId step = -1;
          for (EdgeId e : g.out_edges(cur))
            if (scc.comp[g.edge(e).range] == c) {
              step = e;
              break;
            }
          cyc.push_back(step);
          cur = g.edge(step).range;
        }
        // Trim the tail before the walk first revisits `cur`.
        size_t start = 0;
        while (g.edge(cyc[start]).source != cur) ++start;
        std::vector<EdgeId> loop(cyc.begin() + start, cyc.end());
        return GkResult{Growth::exponential, 0, real_word(loop), {}};
      }
    }
  }

  // Per-cycle exit: some vertex on the cycle emits an edge besides its cycle edge.
  std::vector<char> has_exit(scc.count, 0);
  for (int c = 0; c < scc.count; ++c)
    if (is_cycle[c])
      for (VertexId v : members[c])
        if (g.out_edges(v).size() > 1) has_exit[c] = 1;

  // Component reachability (components are few; closure by DFS).
  std::vector<std::vector<char>> reach(scc.count, std::vector<char>(scc.count, 0));
  for (int c = 0; c < scc.count; ++c) {
    std::vector<int> stack{c};
    reach[c][c] = 1;
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      for (VertexId v : members[d])
        for (EdgeId e : g.out_edges(v)) {
          int t = scc.comp[g.edge(e).range];
          if (!reach[c][t]) {
            reach[c][t] = 1;
            stack.push_back(t);
          }
        }
    }
  }

  // Longest chains over the DAG of cycle components.
  std::vector<int> d1_from(scc.count, -1), d2_from(scc.count, -1);
  std::vector<int> d1_next(scc.count, -1), d2_next(scc.count, -1);
  std::function<int(int)> f1 = [&](int c) -> int {
    if (d1_from[c] >= 0) return d1_from[c];
    int best = 1;
    for (int d = 0; d < scc.count; ++d)
      if (d != c && is_cycle[d] && reach[c][d] && 1 + f1(d) > best) {
        best = 1 + f1(d);
        d1_next[c] = d;
      }
    return d1_from[c] = best;
  };
  std::function<int(int)> f2 = [&](int c) -> int {
    if (d2_from[c] >= 0) return d2_from[c];
    int best = has_exit[c] ? 1 : 0;
    for (int d = 0; d < scc.count; ++d)
      if (d != c && is_cycle[d] && reach[c][d] && f2(d) > 0 && 1 + f2(d) > best) {
        best = 1 + f2(d);
        d2_next[c] = d;
      }
    return d2_from[c] = best;
  };

  int d1 = 0, d2 = 0, c1 = -1, c2 = -1;
  for (int c = 0; c < scc.count; ++c) {
    if (!is_cycle[c]) continue;
    if (f1(c) > d1) {
      d1 = f1(c);
      c1 = c;
    }
    if (f2(c) > d2) {
      d2 = f2(c);
      c2 = c;
    }
  }

  GkResult res;
  res.growth = Growth::polynomial;
  if (d1 == 0) return res;  // no cycles at all
  res.dimension = std::max(2 * d1 - 1, 2 * d2);

  // Witness chain p_1, ..., p_k, p_k*, ..., p_1* (dropping p_k* in the
  // exitless case), following the realizing component sequence.
  auto cycle_word = [&](int c) {
    VertexId v = members[c].front();
    std::vector<EdgeId> loop;
    VertexId cur = v;
    do {
      EdgeId step = -1;
      for (EdgeId e : g.out_edges(cur))
        if (scc.comp[g.edge(e).range] == c) step = e;
      loop.push_back(step);
      cur = g.edge(step).range;
    } while (cur != v);
    return real_word(loop);
  };
  std::vector<LetterWord> fwd;
  if (2 * d2 >= 2 * d1 - 1) {
    for (int c = c2; c != -1; c = d2_next[c]) fwd.push_back(cycle_word(c));
    res.chain = fwd;
    for (auto it = fwd.rbegin(); it != fwd.rend(); ++it)
      res.chain.push_back(ghost_star(g, *it));
  } else {
    for (int c = c1; c != -1; c = d1_next[c]) fwd.push_back(cycle_word(c));
    res.chain = fwd;
    for (auto it = fwd.rbegin() + 1; it != fwd.rend(); ++it)
      res.chain.push_back(ghost_star(g, *it));
  }
  return res;
}

}  // namespace wlpa
