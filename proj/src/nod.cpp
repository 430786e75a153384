#include "wlpa/nod.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wlpa/errors.hpp"

namespace wlpa {

BasePointChoice choose_base(const WeightedGraph& g) {
  BasePointChoice choice;
  choice.edge_at.assign(g.vertex_count(), -1);
  for (VertexId v : regular_vertices(g)) {
    int wv = vertex_weight(g, v);
    for (EdgeId e : g.out_edges(v)) {
      if (g.edge(e).weight == wv) {
        choice.edge_at[v] = e;
        break;  // out_edges is in edge-index order
      }
    }
  }
  return choice;
}

std::vector<BasePointChoice> all_base_choices(const WeightedGraph& g) {
  std::vector<VertexId> regs = regular_vertices(g);
  std::vector<std::vector<EdgeId>> options;
  for (VertexId v : regs) {
    int wv = vertex_weight(g, v);
    std::vector<EdgeId> opts;
    for (EdgeId e : g.out_edges(v))
      if (g.edge(e).weight == wv) opts.push_back(e);
    options.push_back(std::move(opts));
  }
  std::vector<BasePointChoice> out;
  BasePointChoice cur;
  cur.edge_at.assign(g.vertex_count(), -1);
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == regs.size()) {
      out.push_back(cur);
      return;
    }
    for (EdgeId e : options[i]) {
      cur.edge_at[regs[i]] = e;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

NodAutomaton::NodAutomaton(const WeightedGraph& g) : NodAutomaton(g, choose_base(g)) {}

NodAutomaton::NodAutomaton(const WeightedGraph& g, const BasePointChoice& choice)
    : g_(g), choice_(choice) {
  if (static_cast<int>(choice_.edge_at.size()) != g_.vertex_count())
    throw input_error("base choice does not cover the vertex set");
  for (VertexId v = 0; v < g_.vertex_count(); ++v) {
    EdgeId e = choice_.edge_at[v];
    if (g_.out_edges(v).empty()) {
      if (e != -1) throw input_error("base choice assigns an edge to a sink");
      continue;
    }
    if (e < 0 || e >= g_.edge_count() || g_.edge(e).source != v)
      throw input_error("base choice at '" + g_.vertex_name(v) +
                        "' is not an out-edge of that vertex");
    if (g_.edge(e).weight != vertex_weight(g_, v))
      throw input_error("base choice at '" + g_.vertex_name(v) +
                        "' does not have maximal weight");
  }

  letters_ = wlpa::letters(g_);
  real_offset_.assign(g_.edge_count(), -1);
  ghost_offset_.assign(g_.edge_count(), -1);
  for (int id = 0; id < letter_count(); ++id) {
    const Letter& l = letters_[id];
    if (l.index == 1) (l.ghost ? ghost_offset_ : real_offset_)[l.edge] = id;
  }

  const int n = letter_count();
  // Forbidden words: e^v_i (e^v_j)* and e*_1 f_1 at each regular vertex.
  for (VertexId v : regular_vertices(g_)) {
    EdgeId ev = choice_.edge_at[v];
    int wv = g_.edge(ev).weight;
    for (int i = 1; i <= wv; ++i)
      for (int j = 1; j <= wv; ++j)
        forbidden_.emplace_back(letter_id(ev, i, false), letter_id(ev, j, true));
    for (EdgeId e : g_.out_edges(v))
      for (EdgeId f : g_.out_edges(v))
        forbidden_.emplace_back(letter_id(e, 1, true), letter_id(f, 1, false));
  }
  std::sort(forbidden_.begin(), forbidden_.end());
  forbidden_.erase(std::unique(forbidden_.begin(), forbidden_.end()), forbidden_.end());

  allowed_.assign(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (letters_[x].range == letters_[y].source) allowed_[x * n + y] = 1;
  for (auto [x, y] : forbidden_) allowed_[x * n + y] = 0;

  succ_.resize(n);
  pred_.resize(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (allowed_[x * n + y]) {
        succ_[x].push_back(y);
        pred_[y].push_back(x);
      }

  reach_ = allowed_;
  for (int x = 0; x < n; ++x) reach_[x * n + x] = 1;
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (reach_[x * n + k])
        for (int y = 0; y < n; ++y)
          if (reach_[k * n + y]) reach_[x * n + y] = 1;
}

int NodAutomaton::letter_id(EdgeId e, int index, bool ghost) const {
  if (e < 0 || e >= g_.edge_count() || index < 1 || index > g_.edge(e).weight)
    throw input_error("no such letter");
  return (ghost ? ghost_offset_ : real_offset_)[e] + (index - 1);
}

int NodAutomaton::flipped(int x) const {
  const Letter& l = letters_[x];
  return letter_id(l.edge, l.index, !l.ghost);
}

bool is_d_path(const NodAutomaton& aut, const LetterWord& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (aut.letter(w[i]).range != aut.letter(w[i + 1]).source) return false;
  return true;
}

bool is_nod_path(const NodAutomaton& aut, const LetterWord& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (!aut.allowed(w[i], w[i + 1])) return false;
  return true;
}

std::vector<int> nod_successors(const NodAutomaton& aut, int x) { return aut.successors(x); }

NodPathsByLength enumerate_nod_paths(const NodAutomaton& aut, int max_len) {
  if (max_len < 0) throw input_error("max_len must be >= 0");
  NodPathsByLength res;
  for (VertexId v = 0; v < aut.graph().vertex_count(); ++v) res.trivial.push_back(v);
  res.by_length.resize(max_len + 1);
  if (max_len == 0) return res;
  LetterWord cur;
  std::function<void(int)> go = [&](int x) {
    cur.push_back(x);
    res.by_length[cur.size()].push_back(cur);
    if (static_cast<int>(cur.size()) < max_len)
      for (int y : aut.successors(x)) go(y);
    cur.pop_back();
  };
  for (int x = 0; x < aut.letter_count(); ++x) go(x);
  return res;
}

std::vector<BigInt> count_by_length(const NodAutomaton& aut, int n) {
  if (n < 0) throw input_error("n must be >= 0");
  const int L = aut.letter_count();
  std::vector<BigInt> counts(n + 1);
  counts[0] = aut.graph().vertex_count();
  std::vector<BigInt> ending(L, 1);  // #words of the current length ending at x
  for (int k = 1; k <= n; ++k) {
    counts[k] = std::accumulate(ending.begin(), ending.end(), BigInt(0));
    if (k == n) break;
    std::vector<BigInt> next(L, 0);
    for (int y = 0; y < L; ++y)
      for (int x : aut.predecessors(y)) next[y] += ending[x];
    ending = std::move(next);
  }
  return counts;
}

std::vector<BigInt> cumulative_dim(const NodAutomaton& aut, int n) {
  auto counts = count_by_length(aut, n);
  for (size_t k = 1; k < counts.size(); ++k) counts[k] += counts[k - 1];
  return counts;
}

}  // namespace wlpa
