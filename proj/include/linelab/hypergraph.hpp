#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "linelab/graph.hpp"
#include "linelab/lines.hpp"
#include "linelab/metric_space.hpp"

namespace linelab {

// 3-uniform hypergraph: unordered 3-subsets of 0..n-1, kept sorted.
struct Hypergraph3 {
  int n = 0;
  std::vector<std::array<int, 3>> triples;  // each sorted ascending; list sorted

  static Hypergraph3 make(int n, std::vector<std::array<int, 3>> ts);
  bool has(int a, int b, int c) const;  // any order
  bool operator==(const Hypergraph3&) const = default;
};

// Forget the order of every triple of a ternary relation.
Hypergraph3 triples_of(const TernaryRelation& r);

// Hyperedges = triangles of g.
Hypergraph3 from_graph_triangles(const Graph& g);

// Sub-hypergraph induced by a vertex set, relabeled by the sorted order of keep.
Hypergraph3 induce(const Hypergraph3& h, const std::vector<int>& keep);

// {x,y} plus every z with {x,y,z} a hyperedge.  Throws on x == y.
uint64_t hyperline_mask(const Hypergraph3& h, int x, int y);

LineFamily line_family(const Hypergraph3& h);

// Induced-hyperedge counts over all 4-subsets, and the three class predicates:
// a: no 4-subset induces exactly 2 hyperedges; b: none induces 1 or 3;
// c: none induces 4.  All vacuously true below n = 4.
struct FourProfile {
  std::array<long long, 5> counts{0, 0, 0, 0, 0};
  bool class_a = true;
  bool class_b = true;
  bool class_c = true;
};

FourProfile four_profile(const Hypergraph3& h);

// --- recognition oracles (desk scale, exact) -----------------------------------

enum class RecStatus { accepted, refused, cap_exceeded };

struct GraphicResult {
  RecStatus status = RecStatus::refused;
  Graph g;  // certificate: triples of its shortest-path betweenness equal h
  std::string reason;
  bool ok() const { return status == RecStatus::accepted; }
};

// Does h arise from a connected graph as the unordered betweenness triples of
// its shortest-path metric?  Exhaustive search over labeled graphs with local
// 3-set pruning; first certificate in a fixed deterministic order.
GraphicResult is_graphic(const Hypergraph3& h, int cap = 8);

struct MetricHypergraphResult {
  RecStatus status = RecStatus::refused;
  MetricSpace certificate;
  std::string reason;
  bool ok() const { return status == RecStatus::accepted; }
};

// Does h arise from a metric space?  Branches over the choice of middle point
// per hyperedge (reduced to one representative per automorphism orbit), prunes
// contradictory orientations, and decides each branch by exact rational
// feasibility.  First feasible branch in a fixed order wins.
MetricHypergraphResult is_metric(const Hypergraph3& h, int cap_n = 8, int cap_t = 12);

struct PseudometricResult {
  RecStatus status = RecStatus::refused;
  TernaryRelation certificate;
  std::string reason;
  bool ok() const { return status == RecStatus::accepted; }
};

// Does h arise from a ternary relation satisfying the basic betweenness axioms
// (distinctness, symmetry, middle uniqueness, transitivity)?  Searches middle
// assignments with closure propagation.
PseudometricResult is_pseudometric(const Hypergraph3& h, int cap_t = 20);

// --- line maps ------------------------------------------------------------------

// f: every unordered pair of 0..n-1 to a vertex set containing the pair.
struct LineMap {
  int n = 0;
  std::vector<uint64_t> sets;  // indexed by pair rank
  static int pair_rank(int n, int u, int v);  // u < v
  uint64_t at(int u, int v) const;
};

struct LineMapResult {
  bool ok = false;
  Hypergraph3 h;       // the unique hypergraph with these lines
  std::string reason;  // on refusal
  std::array<int, 3> witness{-1, -1, -1};
};

// Accepts iff for all pairwise distinct u,v,w:
// w in f(uv) <=> v in f(uw) <=> u in f(vw); then hyperedges are the triples
// {u,v,w} with w in f(uv), and the hyperline map of the result equals f.
LineMapResult recognize_line_map(const LineMap& f);

// The hyperline map of h (for roundtrips).
LineMap line_map_of(const Hypergraph3& h);

// All vertex permutations preserving the triple set (n! sweep; n <= 10).
std::vector<std::array<int, 11>> hypergraph_automorphisms(const Hypergraph3& h);

}  // namespace linelab
