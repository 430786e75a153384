#pragma once

#include <optional>
#include <vector>

#include "wlpa/quasicycle.hpp"

namespace wlpa {

enum class Growth { polynomial, exponential };

struct GkResult {
  Growth growth = Growth::polynomial;
  int dimension = 0;                    // meaningful iff polynomial
  std::optional<LetterWord> witness;    // a selfconnected quasi-cycle iff exponential
  std::vector<LetterWord> chain;        // a maximal chain iff polynomial and dim >= 1
};

/// A vertex emitting two distinct edges of weight >= 2, if any; such a vertex
/// forces exponential growth.
std::optional<VertexId> quick_exponential_check(const WeightedGraph& g);

struct ChainResult {
  int length = 0;
  std::vector<LetterWord> chain;
};

/// Maximal length of a chain p_1 ==> ... ==> p_k of quasi-cycle words with
/// pairwise distinct rotation classes. qcs must be the full quasi-cycle set.
ChainResult max_chain(const NodAutomaton& aut, const std::vector<LetterWord>& qcs);

/// Growth type and Gelfand-Kirillov dimension of L_K(E, w).
GkResult gk_dimension(const NodAutomaton& aut);
GkResult gk_dimension(const WeightedGraph& g);

/// Fast path for unweighted graphs, via chains of vertex-disjoint cycles:
/// exponential iff two distinct cycles share a vertex, else max(2d1-1, 2d2).
GkResult unweighted_gk(const WeightedGraph& g);

}  // namespace wlpa
