#pragma once

#include "wlpa/nod.hpp"

namespace wlpa {
namespace oracle {

/// Literal definition of p ==> q: search every nonempty nod-path connector o
/// with |o| <= 2 * letter_count, p not a prefix of o, poq a nod-path; also
/// accepts pq being a nod-path directly.
bool implies_bruteforce(const NodAutomaton& aut, const LetterWord& p, const LetterWord& q);

/// Literal selfconnectedness: a connector o as above with pop a nod-path.
bool selfconnected_bruteforce(const NodAutomaton& aut, const LetterWord& p);

/// Nod-ness by checking every subword against the forbidden list, ignoring
/// the pair-scan shortcut.
bool is_nod_path_naive(const NodAutomaton& aut, const LetterWord& w);

/// Quasi-cycle test straight from the definition: nod^2 plus the exhaustive
/// short-subword scan over p^2.
bool is_quasicycle_naive(const NodAutomaton& aut, const LetterWord& w);

}  // namespace oracle
}  // namespace wlpa
