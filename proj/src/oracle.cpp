#include "wlpa/oracle.hpp"

#include <vector>

namespace wlpa {
namespace oracle {

bool is_nod_path_naive(const NodAutomaton& aut, const LetterWord& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (aut.letter(w[i]).range != aut.letter(w[i + 1]).source) return false;
  // Scan every contiguous subword against the forbidden list.
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j <= w.size(); ++j) {
      if (j - i != 2) continue;  // all forbidden words have length 2
      for (const auto& [a, b] : aut.forbidden_pairs())
        if (w[i] == a && w[i + 1] == b) return false;
    }
  return true;
}

namespace {

LetterWord concat(const LetterWord& a, const LetterWord& b) {
  LetterWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// Bounded search for a connector o with |o| >= 1, p not a prefix of o, and
// p o q a nod-path. States are (current letter, length so far, whether o is
// still tracking the prefix p); revisited states are skipped, which only
// avoids re-walking identical continuations.
bool connector_exists(const NodAutomaton& aut, const LetterWord& p, const LetterWord& q) {
  const int bound = 2 * aut.letter_count();
  const int n = static_cast<int>(p.size());
  const int L = aut.letter_count();
  // visited[(x * (bound+1) + len) * 2 + matching]
  std::vector<char> visited(static_cast<size_t>(L) * (bound + 1) * 2, 0);
  struct State {
    int x;
    int len;
    bool matching;  // o[0..len) == p[0..len), only possible while len < |p|
  };
  std::vector<State> stack;
  auto push = [&](int x, int len, bool matching) {
    size_t key = (static_cast<size_t>(x) * (bound + 1) + len) * 2 + (matching ? 1 : 0);
    if (visited[key]) return;
    visited[key] = 1;
    stack.push_back(State{x, len, matching});
  };
  for (int x = 0; x < L; ++x)
    if (aut.allowed(p.back(), x)) push(x, 1, n > 0 && x == p[0]);
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    bool full_prefix = s.matching && s.len >= n;
    if (!full_prefix && aut.allowed(s.x, q.front())) return true;
    if (s.len == bound || full_prefix) continue;  // extending a p-prefixed o keeps the prefix
    for (int y : aut.successors(s.x))
      push(y, s.len + 1, s.matching && s.len < n && y == p[s.len]);
  }
  return false;
}

}  // namespace

bool implies_bruteforce(const NodAutomaton& aut, const LetterWord& p, const LetterWord& q) {
  if (is_nod_path_naive(aut, concat(p, q))) return true;
  return connector_exists(aut, p, q);
}

bool selfconnected_bruteforce(const NodAutomaton& aut, const LetterWord& p) {
  return connector_exists(aut, p, p);
}

bool is_quasicycle_naive(const NodAutomaton& aut, const LetterWord& w) {
  if (w.empty()) return false;
  if (!is_nod_path_naive(aut, w) || !is_nod_path_naive(aut, concat(w, w))) return false;
  const size_t n = w.size();
  LetterWord w2 = concat(w, w);
  for (size_t s = 0; s < w2.size(); ++s)
    for (size_t len = 1; len < n && s + len <= w2.size(); ++len) {
      LetterWord seg(w2.begin() + s, w2.begin() + s + len);
      if (is_nod_path_naive(aut, seg) && is_nod_path_naive(aut, concat(seg, seg)))
        return false;
    }
  return true;
}

}  // namespace oracle
}  // namespace wlpa
