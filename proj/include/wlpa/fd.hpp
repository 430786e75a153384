#pragma once

#include <map>
#include <string>
#include <vector>

#include "wlpa/nod.hpp"

namespace wlpa {

/// No quasi-cycle exists; equivalent to L_K(E, w) being finite-dimensional.
bool is_aquasicyclic(const WeightedGraph& g);

struct AuditReport {
  bool acyclic = false;
  bool single_weighted_emitter = false;
  bool rwf_single_emitter = false;
  bool disjoint_weighted_trees = false;
};

/// Checks the structural consequences of aquasicyclicity; a violation is an
/// internal-consistency failure and throws.
AuditReport structural_audit(const WeightedGraph& g);

enum class EdgeType { TypeA, TypeB };

/// TypeA iff the weighted edge is the only out-edge of its source.
EdgeType classify_edge(const WeightedGraph& g, EdgeId e);

/// The normalization vertex set Z = RWF union {v : s^-1(v) is one weighted edge}.
std::vector<VertexId> normalization_zset(const WeightedGraph& g);

/// Reverses and weight-splits every edge sourced in Z; afterwards all weighted
/// edges are TypeB with sink ranges, without increasing their number.
WeightedGraph lemma52_transform(const WeightedGraph& g);

/// A weighted-emitting vertex whose tree contains no other weighted emitter.
VertexId pick_pivot(const WeightedGraph& g);

/// Old vertex -> ordered list of distinct replacement-vertex names.
struct VertexImageMap {
  std::map<VertexId, std::vector<std::string>> images;
};

struct UnweightedReplacement {
  WeightedGraph graph;  // the unweighted local replacement E'
  VertexImageMap images;
};

/// Unweights the tree of the pivot: splits the single weighted edge into the
/// alpha / beta / gamma chain construction and records the vertex images.
UnweightedReplacement lemma53_unweight(const WeightedGraph& g, VertexId pivot);

/// Splices a replacement graph for the hereditary set H back into g: edges
/// into H fan out over the vertex images, edges inside H are represented by
/// the replacement.
WeightedGraph replacement_splice(const WeightedGraph& g, const std::vector<VertexId>& h,
                                 const WeightedGraph& replacement,
                                 const VertexImageMap& images);

/// Repeats normalize / unweight / splice until no weighted edge remains.
WeightedGraph unweight_fully(const WeightedGraph& g);

/// Same, returning every intermediate graph (input first, final graph last).
std::vector<WeightedGraph> unweight_trace(const WeightedGraph& g);

struct Decomposition {
  std::vector<long long> sizes;  // ascending matrix sizes n_i
  BigInt dimension;              // sum of n_i^2
};

/// Matrix sizes of an unweighted acyclic graph: one per sink, counting the
/// paths (length >= 0) that end at it.
Decomposition acyclic_decomposition(const WeightedGraph& g);

/// Full pipeline: aquasicyclicity check, unweighting, decomposition.
Decomposition decompose(const WeightedGraph& g);

/// Total nod-path count by explicit enumeration, capped at |letters|; the
/// independent dimension check for the pipeline.
BigInt dimension_oracle(const WeightedGraph& g);

}  // namespace wlpa
