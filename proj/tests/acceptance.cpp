// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "wlpa/fd.hpp"
#include "wlpa/gk.hpp"
#include "wlpa/oracle.hpp"
#include "wlpa/parse.hpp"
#include "wlpa/quasicycle.hpp"

using namespace wlpa;
using namespace wlpa::testing;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

bool poly_dim(const std::string& fixture, int expected, std::string& detail) {
  GkResult r = gk_dimension(load_fixture(fixture));
  if (r.growth != Growth::polynomial) {
    detail = fixture + ": expected polynomial";
    return false;
  }
  if (r.dimension != expected) {
    detail = fixture + ": dimension " + std::to_string(r.dimension) + " != " +
             std::to_string(expected);
    return false;
  }
  return true;
}

bool exp_growth(const std::string& fixture, std::string& detail) {
  WeightedGraph g = load_fixture(fixture);
  NodAutomaton aut(g);
  GkResult r = gk_dimension(aut);
  if (r.growth != Growth::exponential || !r.witness ||
      !is_quasicycle(aut, *r.witness) || !is_selfconnected(aut, *r.witness)) {
    detail = fixture + ": expected exponential with a selfconnected witness";
    return false;
  }
  return true;
}

void criterion1() {
  std::string detail;
  bool ok = poly_dim("ex4_0.wg", 0, detail) && exp_growth("ex4_exp.wg", detail) &&
            poly_dim("rose_n1_k0.wg", 1, detail) && exp_growth("rose_n1_k1.wg", detail) &&
            exp_growth("rose_n2_k0.wg", detail) && exp_growth("rose_n2_k1.wg", detail) &&
            poly_dim("ladder_n1.wg", 1, detail) && poly_dim("ladder_n2.wg", 3, detail) &&
            poly_dim("ladder_n3.wg", 5, detail) && poly_dim("ladder_ext_n1.wg", 2, detail) &&
            poly_dim("ladder_ext_n2.wg", 4, detail) &&
            poly_dim("ladder_ext_n3.wg", 6, detail) && poly_dim("triangle.wg", 2, detail) &&
            exp_growth("exqu.wg", detail);
  report(1, "GK dimension golden values", ok, detail);
}

void criterion2() {
  std::string detail;
  bool ok = true;

  WeightedGraph t = load_fixture("triangle.wg");
  NodAutomaton ta(t);
  auto classes = quasicycle_classes(ta);
  std::set<LetterWord> reps;
  for (const auto& c : classes) {
    reps.insert(c.canonical);
    if (c.selfconnected) {
      ok = false;
      detail = "triangle census has a selfconnected class";
    }
  }
  std::set<LetterWord> expected = {
      canonical_rotation(word(ta, {"e.2", "f.1", "g.1*"})),
      canonical_rotation(word(ta, {"g.1", "f.1*", "e.2*"}))};
  if (reps != expected) {
    ok = false;
    detail = "triangle census mismatch";
  }

  WeightedGraph q = load_fixture("exqu.wg");
  NodAutomaton qa(q);
  LetterWord p = word(qa, {"e.2", "f.1", "g.1*", "e.2*"});
  LetterWord r = word(qa, {"e.2", "f.1", "g.1*", "e.1*"});
  if (!is_quasicycle(qa, p) || !is_quasicycle(qa, r) || !is_selfconnected(qa, p) ||
      !is_selfconnected(qa, r)) {
    ok = false;
    detail = "expected selfconnected quasi-cycles missing in the parallel-edge graph";
  }
  report(2, "quasi-cycle census", ok, detail);
}

void criterion3() {
  std::string detail;
  bool ok = true;

  Decomposition d1 = decompose(load_fixture("ex4_0.wg"));
  if (d1.sizes != std::vector<long long>{3, 3} ||
      dimension_oracle(load_fixture("ex4_0.wg")) != 18 || d1.dimension != 18) {
    ok = false;
    detail = "two-sink example decomposition mismatch";
  }

  Decomposition d2 = decompose(load_fixture("ex5_00.wg"));
  if (d2.sizes != std::vector<long long>{5, 12} ||
      dimension_oracle(load_fixture("ex5_00.wg")) != 169 || d2.dimension != 169) {
    ok = false;
    detail = "seven-vertex example decomposition mismatch";
  }

  // Intermediate graphs, exact vertex/edge counts.
  WeightedGraph t = lemma52_transform(load_fixture("ex5_00.wg"));
  if (t.vertex_count() != 7 || t.edge_count() != 8 || weighted_edges(t).size() != 1) {
    ok = false;
    detail = "normalized graph shape mismatch";
  }
  UnweightedReplacement rep = lemma53_unweight(t, pick_pivot(t));
  if (rep.graph.vertex_count() != 8 || rep.graph.edge_count() != 7 ||
      !is_unweighted(rep.graph)) {
    ok = false;
    detail = "local replacement shape mismatch";
  }
  WeightedGraph spliced =
      replacement_splice(t, tree(t, {pick_pivot(t)}), rep.graph, rep.images);
  if (spliced.vertex_count() != 11 || spliced.edge_count() != 14 ||
      !is_unweighted(spliced)) {
    ok = false;
    detail = "replacement graph shape mismatch";
  }
  WeightedGraph bounded = load_fixture("ex4_0.wg");
  UnweightedReplacement small = lemma53_unweight(bounded, pick_pivot(bounded));
  if (small.graph.vertex_count() != 5 || small.graph.edge_count() != 4) {
    ok = false;
    detail = "small replacement shape mismatch";
  }
  report(3, "decomposition golden values and intermediates", ok, detail);
}

void criterion4() {
  std::string detail;
  bool ok = true;
  long long checked = 0;
  auto compare = [&](const WeightedGraph& g) {
    GkResult slow = gk_dimension(g);
    GkResult fast = unweighted_gk(g);
    ++checked;
    if (slow.growth != fast.growth ||
        (slow.growth == Growth::polynomial && slow.dimension != fast.dimension)) {
      ok = false;
      detail = "disagreement on:\n" + render_graph(g);
    }
  };

  // Exhaustive: every unweighted graph with <= 3 vertices and <= 4 edges
  // (edge multisets over ordered endpoint pairs).
  for (int n = 1; n <= 3 && ok; ++n) {
    int pairs = n * n;
    // Choose a multiset of at most 4 endpoint pairs, non-decreasing to avoid
    // permuted duplicates of the same multigraph.
    std::function<void(int, std::vector<int>&)> go = [&](int min_pair,
                                                         std::vector<int>& chosen) {
      RawGraph raw;
      for (int i = 0; i < n; ++i) raw.vertices.push_back("v" + std::to_string(i));
      for (size_t i = 0; i < chosen.size(); ++i)
        raw.edges.push_back(RawEdge{"e" + std::to_string(i),
                                    "v" + std::to_string(chosen[i] / n),
                                    "v" + std::to_string(chosen[i] % n), 1});
      compare(WeightedGraph::validate(raw));
      if (chosen.size() == 4 || !ok) return;
      for (int p = min_pair; p < pairs; ++p) {
        chosen.push_back(p);
        go(p, chosen);
        chosen.pop_back();
      }
    };
    std::vector<int> chosen;
    go(0, chosen);
  }

  std::mt19937 rng(101);
  for (int round = 0; round < 200 && ok; ++round) compare(random_graph(rng, 5, 7, 1));
  report(4, "unweighted fast path equivalence (" + std::to_string(checked) + " graphs)",
         ok, detail);
}

void criterion5() {
  std::string detail;
  bool ok = true;
  for (const auto& name : oracle_fixtures()) {
    NodAutomaton aut(load_fixture(name));
    auto qcs = enumerate_quasicycles(aut);
    for (const auto& p : qcs) {
      if (is_selfconnected(aut, p) != oracle::selfconnected_bruteforce(aut, p)) {
        ok = false;
        detail = name + ": selfconnected disagreement on " + render_word(aut, p);
      }
      for (const auto& q : qcs)
        if (implies(aut, p, q) != oracle::implies_bruteforce(aut, p, q)) {
          ok = false;
          detail = name + ": implies disagreement on " + render_word(aut, p) + " => " +
                   render_word(aut, q);
        }
    }
  }
  report(5, "derived reductions match brute force", ok, detail);
}

void criterion6() {
  std::string detail;
  bool ok = true;
  for (const auto& name : all_fixtures()) {
    WeightedGraph g = load_fixture(name);
    GkResult base = gk_dimension(g);
    for (const auto& choice : all_base_choices(g)) {
      GkResult r = gk_dimension(NodAutomaton(g, choice));
      if (r.growth != base.growth ||
          (base.growth == Growth::polynomial && r.dimension != base.dimension)) {
        ok = false;
        detail = name + ": base choices disagree";
      }
    }
  }
  report(6, "base-choice invariance", ok, detail);
}

void criterion7() {
  std::string detail;
  bool ok = true;

  NodAutomaton tri(load_fixture("triangle.wg"));
  auto dims = cumulative_dim(tri, 512);
  long double ratio =
      dims[512].convert_to<long double>() / dims[256].convert_to<long double>();
  if (!(ratio >= 3.4L && ratio <= 4.6L)) {
    ok = false;
    detail = "quadratic doubling ratio " + std::to_string(static_cast<double>(ratio));
  }

  NodAutomaton q(load_fixture("exqu.wg"));
  auto qd = cumulative_dim(q, 101);
  for (int n = 50; n <= 100; ++n) {
    long double r = qd[n + 1].convert_to<long double>() / qd[n].convert_to<long double>();
    if (r < 1.2L) {
      ok = false;
      detail = "exponential ratio dipped to " + std::to_string(static_cast<double>(r)) +
               " at n=" + std::to_string(n);
    }
  }

  NodAutomaton b(load_fixture("ex4_0.wg"));
  auto bd = cumulative_dim(b, 64);
  for (int n = 4; n <= 64; ++n)
    if (bd[n] != 18) {
      ok = false;
      detail = "bounded example d_V not constant at n=" + std::to_string(n);
    }
  report(7, "growth-count consistency", ok, detail);
}

void criterion8() {
  std::string detail;
  bool ok = true;

  for (const auto& name : {"ex4_0.wg", "ex5_00.wg", "isolated.wg"}) {
    WeightedGraph g = load_fixture(name);
    BigInt dim = dimension_oracle(g);
    for (const auto& step : unweight_trace(g))
      if (dimension_oracle(step) != dim) {
        ok = false;
        detail = std::string(name) + ": dimension changed across a pipeline step";
      }
  }

  std::mt19937 rng(211);
  for (int round = 0; round < 100 && ok; ++round) {
    WeightedGraph g = [&] {
      for (;;) {
        WeightedGraph cand = random_graph(rng, 5, 6, 3);
        if (is_aquasicyclic(cand)) return cand;
      }
    }();
    BigInt dim = dimension_oracle(g);
    auto trace = unweight_trace(g);
    for (const auto& step : trace)
      if (dimension_oracle(step) != dim) {
        ok = false;
        detail = "pipeline step changed the dimension on:\n" + render_graph(g);
      }
    Decomposition dec = acyclic_decomposition(trace.back());
    BigInt sum = 0;
    for (long long n : dec.sizes) sum += BigInt(n) * n;
    if (sum != dim) {
      ok = false;
      detail = "size squares do not sum to the nod-path count on:\n" + render_graph(g);
    }
  }
  report(8, "pipeline conservation", ok, detail);
}

void criterion9() {
  std::string detail;
  bool ok = true;
  auto audit = [&](const WeightedGraph& g, const std::string& label) {
    try {
      if (is_aquasicyclic(g)) structural_audit(g);
    } catch (const std::exception& e) {
      ok = false;
      detail = label + ": " + e.what();
    }
  };
  for (const auto& name : all_fixtures()) audit(load_fixture(name), name);
  std::mt19937 rng(307);
  for (int round = 0; round < 200; ++round)
    audit(random_graph(rng, 5, 6, 3), "random sample");
  report(9, "structural audit", ok, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
