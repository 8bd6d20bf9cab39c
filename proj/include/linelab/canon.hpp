#pragma once

#include <cstdint>

#include "linelab/graph.hpp"

namespace linelab {

struct CanonResult {
  std::uint64_t code = 0;          // upper-triangle bits of the canonical relabeling
  bool has_nontrivial_aut = false;
};

// Canonical form via individualization-refinement with automorphism pruning.
// Limited to n <= 11 so the code fits in 64 bits. Two graphs are isomorphic
// iff their codes agree. has_nontrivial_aut is exact: it is set iff the graph
// has a nontrivial automorphism.
CanonResult canon_code(const Graph& g);

bool graphs_isomorphic(const Graph& a, const Graph& b);

// The canonical code of the graph itself (identity labeling), for hashing
// labeled graphs; bit t corresponds to pair t in row-major (i,j) i<j order.
std::uint64_t upper_triangle_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

}  // namespace linelab
