#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "wlpa/graph.hpp"

namespace wlpa {

using BigInt = boost::multiprecision::cpp_int;

/// A word over the letters of a NodAutomaton, stored as letter ids.
using LetterWord = std::vector<int>;

/// The fixed maximal-weight edge e^v at each regular vertex (-1 at sinks).
struct BasePointChoice {
  std::vector<EdgeId> edge_at;
};

/// Deterministic choice: maximal weight, ties broken by smallest edge index.
BasePointChoice choose_base(const WeightedGraph& g);

/// Every valid choice (cartesian product over regular vertices of the
/// maximal-weight out-edges), in lexicographic order.
std::vector<BasePointChoice> all_base_choices(const WeightedGraph& g);

/// The letter digraph whose walks are exactly the nod-paths of length >= 1.
/// allowed(x, y) holds iff range(x) = source(y) and the two-letter word xy is
/// not forbidden; all forbidden words have length 2, so nod-ness is local.
class NodAutomaton {
 public:
  explicit NodAutomaton(const WeightedGraph& g);
  NodAutomaton(const WeightedGraph& g, const BasePointChoice& choice);

  const WeightedGraph& graph() const { return g_; }
  const BasePointChoice& base() const { return choice_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int letter_count() const { return static_cast<int>(letters_.size()); }
  const Letter& letter(int x) const { return letters_[x]; }

  /// Dense id of the letter (edge, index, ghost); index must be <= weight.
  int letter_id(EdgeId e, int index, bool ghost) const;

  /// e_i <-> e_i*.
  int flipped(int x) const;

  bool allowed(int x, int y) const { return allowed_[x * letters_.size() + y] != 0; }
  const std::vector<int>& successors(int x) const { return succ_[x]; }
  const std::vector<int>& predecessors(int x) const { return pred_[x]; }

  /// Reflexive-transitive closure of the allowed relation.
  bool reachable(int x, int y) const { return reach_[x * letters_.size() + y] != 0; }

  const std::vector<std::pair<int, int>>& forbidden_pairs() const { return forbidden_; }

 private:
  WeightedGraph g_;
  BasePointChoice choice_;
  std::vector<Letter> letters_;
  std::vector<int> real_offset_;   // per edge: id of e_1
  std::vector<int> ghost_offset_;  // per edge: id of e_1*
  std::vector<char> allowed_;
  std::vector<char> reach_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
  std::vector<std::pair<int, int>> forbidden_;
};

bool is_d_path(const NodAutomaton& aut, const LetterWord& w);

/// True iff w is a d-path with no forbidden factor; the empty word (a trivial
/// word at a vertex) is a nod-path.
bool is_nod_path(const NodAutomaton& aut, const LetterWord& w);

std::vector<int> nod_successors(const NodAutomaton& aut, int x);

struct NodPathsByLength {
  std::vector<VertexId> trivial;                  // length-0 nod-paths
  std::vector<std::vector<LetterWord>> by_length;  // [k] = length-k words; [0] unused
};

/// All nod-paths of length <= max_len, grouped by length, deterministic order.
NodPathsByLength enumerate_nod_paths(const NodAutomaton& aut, int max_len);

/// c_0..c_n where c_0 = |E^0| and c_k = number of length-k nod-paths, computed
/// exactly by iterating the allowed-relation adjacency operator.
std::vector<BigInt> count_by_length(const NodAutomaton& aut, int n);

/// d_V(0..n): cumulative sums of count_by_length.
std::vector<BigInt> cumulative_dim(const NodAutomaton& aut, int n);

}  // namespace wlpa
