#pragma once

#include <vector>

#include "wlpa/nod.hpp"

namespace wlpa {

/// Nonempty nod-path p with p^2 also a nod-path.
bool is_nod2(const NodAutomaton& aut, const LetterWord& w);

/// Nod^2-path none of whose p^2-subwords shorter than p is a nod^2-path.
bool is_quasicycle(const NodAutomaton& aut, const LetterWord& w);

/// All quasi-cycle words (every rotation appears), sorted lexicographically.
std::vector<LetterWord> enumerate_quasicycles(const NodAutomaton& aut);

/// Lexicographically least rotation under the letter order.
LetterWord canonical_rotation(const LetterWord& w);

/// p* : reverse the word and flip every letter's ghost flag.
LetterWord star(const NodAutomaton& aut, const LetterWord& w);

struct QcClass {
  LetterWord canonical;
  std::vector<LetterWord> members;  // all |w| rotations, sorted
  bool selfconnected = false;
};

QcClass rotations(const NodAutomaton& aut, const LetterWord& w);

/// Rotation classes of all quasi-cycles, ordered by canonical representative.
std::vector<QcClass> quasicycle_classes(const NodAutomaton& aut);

/// The relation p ==> q: pq is a nod-path, or some nod-path o exists with
/// |o| >= 1, p not a prefix of o, and poq a nod-path.
bool implies(const NodAutomaton& aut, const LetterWord& p, const LetterWord& q);

/// p ==>nod p: a connector o exists with |o| >= 1, p not a prefix of o, and
/// pop a nod-path.
bool is_selfconnected(const NodAutomaton& aut, const LetterWord& p);

}  // namespace wlpa
