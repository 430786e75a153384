#include "wlpa/quasicycle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "wlpa/errors.hpp"

namespace wlpa {

bool is_nod2(const NodAutomaton& aut, const LetterWord& w) {
  if (w.empty()) return false;
  return is_nod_path(aut, w) && aut.allowed(w.back(), w.front());
}

bool is_quasicycle(const NodAutomaton& aut, const LetterWord& w) {
  if (!is_nod2(aut, w)) return false;
  const int n = static_cast<int>(w.size());
  // Every subword of w^2 is a nod-path, so a subword of length < n is a
  // nod^2-path exactly when its last letter may be followed by its first.
  for (int s = 0; s < 2 * n; ++s)
    for (int len = 1; len < n && s + len <= 2 * n; ++len)
      if (aut.allowed(w[(s + len - 1) % n], w[s % n])) return false;
  return true;
}

std::vector<LetterWord> enumerate_quasicycles(const NodAutomaton& aut) {
  const int L = aut.letter_count();
  std::vector<LetterWord> canon_found;
  LetterWord path;
  std::vector<char> onpath(L, 0);

  // DFS for simple cycles in the letter digraph, rooted at their least letter.
  // A quasi-cycle admits no chord (only cyclically consecutive letters may
  // follow one another), so any partial path acquiring a chord is pruned;
  // candidates are still confirmed by the literal minimality filter.
  std::function<void()> extend = [&]() {
    int last = path.back();
    int s = path.front();
    if (aut.allowed(last, s) && is_quasicycle(aut, path)) canon_found.push_back(path);
    for (int y : aut.successors(last)) {
      if (y <= s || onpath[y]) continue;
      bool chord = false;
      for (size_t i = 0; i + 1 < path.size() && !chord; ++i)
        if (aut.allowed(path[i], y)) chord = true;
      for (size_t j = 1; j < path.size() && !chord; ++j)
        if (aut.allowed(y, path[j])) chord = true;
      if (chord) continue;
      onpath[y] = 1;
      path.push_back(y);
      extend();
      path.pop_back();
      onpath[y] = 0;
    }
  };
  for (int s = 0; s < L; ++s) {
    path = {s};
    onpath[s] = 1;
    extend();
    onpath[s] = 0;
  }

  std::vector<LetterWord> all;
  for (const LetterWord& w : canon_found) {
    for (size_t r = 0; r < w.size(); ++r) {
      LetterWord rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      all.push_back(std::move(rot));
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

LetterWord canonical_rotation(const LetterWord& w) {
  LetterWord best = w;
  LetterWord rot = w;
  for (size_t r = 1; r < w.size(); ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

LetterWord star(const NodAutomaton& aut, const LetterWord& w) {
  LetterWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(aut.flipped(*it));
  return out;
}

QcClass rotations(const NodAutomaton& aut, const LetterWord& w) {
  QcClass cls;
  cls.canonical = canonical_rotation(w);
  LetterWord rot = w;
  for (size_t r = 0; r < w.size(); ++r) {
    cls.members.push_back(rot);
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  std::sort(cls.members.begin(), cls.members.end());
  cls.members.erase(std::unique(cls.members.begin(), cls.members.end()), cls.members.end());
  cls.selfconnected = is_selfconnected(aut, w);
  return cls;
}

std::vector<QcClass> quasicycle_classes(const NodAutomaton& aut) {
  std::map<LetterWord, QcClass> by_canon;
  for (const LetterWord& w : enumerate_quasicycles(aut)) {
    LetterWord c = canonical_rotation(w);
    auto [it, inserted] = by_canon.try_emplace(c);
    if (inserted) it->second.canonical = c;
    it->second.members.push_back(w);
    if (is_selfconnected(aut, w)) it->second.selfconnected = true;
  }
  std::vector<QcClass> out;
  for (auto& [c, cls] : by_canon) out.push_back(std::move(cls));
  return out;
}

bool implies(const NodAutomaton& aut, const LetterWord& p, const LetterWord& q) {
  if (p.empty() || q.empty()) throw input_error("implies: empty word");
  if (aut.allowed(p.back(), q.front())) return true;
  // Any connector carrying p as a prefix strips to a shorter one, so it
  // suffices to find a walk in the letter digraph between the junctions.
  for (int a : aut.successors(p.back()))
    for (int b : aut.predecessors(q.front()))
      if (aut.reachable(a, b)) return true;
  return false;
}

bool is_selfconnected(const NodAutomaton& aut, const LetterWord& p) {
  if (p.empty()) throw input_error("is_selfconnected: empty word");
  const int n = static_cast<int>(p.size());
  const int L = aut.letter_count();

  // Search for a connector o with pop a nod-path and p not a prefix of o.
  // States track how far o agrees with p; once o has matched all of p it is
  // disqualified forever, and any divergence frees it.
  std::vector<char> div_seen(L, 0);
  std::vector<char> match_seen(n + 1, 0);
  struct State {
    int letter;
    int match;  // -1 = diverged, else o == p[0..match)
  };
  std::deque<State> queue;

  auto push = [&](int letter, int match) {
    if (match < 0) {
      if (div_seen[letter]) return;
      div_seen[letter] = 1;
    } else {
      if (match_seen[match]) return;
      match_seen[match] = 1;
    }
    queue.push_back(State{letter, match});
  };

  for (int a : aut.successors(p.back())) {
    if (a == p.front()) {
      if (n > 1) push(a, 1);  // n == 1: o starts with p, disqualified
    } else {
      push(a, -1);
    }
  }

  while (!queue.empty()) {
    auto [x, m] = queue.front();
    queue.pop_front();
    if (aut.allowed(x, p.front())) return true;
    if (m < 0) {
      for (int y : aut.successors(x)) push(y, -1);
    } else {
      for (int y : aut.successors(x)) {
        if (y == p[m]) {
          if (m + 1 < n) push(y, m + 1);
          // else o == p: every extension keeps p as a prefix
        } else {
          push(y, -1);
        }
      }
    }
  }
  return false;
}

}  // namespace wlpa
