#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "linelab/hypergraph.hpp"
#include "linelab/metric_space.hpp"

namespace linelab {

// Partition of all pairs of 0..n-1 into labeled classes.
struct EdgePartition {
  int n = 0;
  std::vector<std::vector<std::pair<int, int>>> classes;  // pairs (u<v), sorted

  static EdgePartition make(int n, std::vector<std::vector<std::pair<int, int>>> classes);
  // Text lines "i: u-v u-v ..." with 1-indexed class labels and vertices.
  static EdgePartition parse_text(const std::string& text);
};

// Group the pairs of m by equal line member sets; classes ordered by their
// lexicographically smallest pair.
EdgePartition line_equivalence(const MetricSpace& m);

enum class EquivVerdict { accept, reject, dont_know };

struct EquivResult {
  EquivVerdict verdict = EquivVerdict::dont_know;
  std::vector<uint64_t> closure;  // final grown sets, one per class
  Hypergraph3 h;                  // filled on hypergraph-level accept
};

// Grow L_i from the endpoints of class i to the least fixed point of
//   uv ∈ C_i, w ∉ L_i, vw ∈ C_j, u ∈ L_j  ⇒  add w to L_i
// (monotone, so the fixed point is order-independent).  Graph level: reject
// iff two distinct classes both reach the full vertex set; never accepts.
// Hypergraph level: accept iff the grown sets are pairwise distinct,
// returning the hypergraph of all {u,v,w} with uv ∈ C_i, w ∈ L_i; otherwise
// reject or don't-know as at graph level.
EquivResult equiv_graph(const EdgePartition& p);
EquivResult equiv_hypergraph(const EdgePartition& p);

// Fixed report format (1-indexed): verdict line; "T = ..." when accepting;
// one "Li = {...}" line per class.
std::string render_equiv(const EquivResult& r, const EdgePartition& p, bool hypergraph_level);

}  // namespace linelab
