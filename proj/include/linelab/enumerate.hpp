#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <vector>

#include "linelab/graph.hpp"

namespace linelab {

// Isomorph-free generation of connected graphs by vertex extension: a child
// parent+v is kept iff deleting the canonically chosen vertex of the child
// recovers the parent, and children of one parent are deduplicated by
// canonical code.  Levels are built bottom-up from the one-vertex graph.

// All canonical codes at level n, sorted ascending (one per isomorphism
// class of connected graphs).  Throws when n exceeds the cap.
std::vector<std::uint64_t> connected_codes(int n, int cap = 8);

// Visit the kept children (parent extended by one vertex), one per class.
void visit_children(const Graph& parent, const std::function<void(const Graph&)>& fn);

// Visit one representative per isomorphism class of connected graphs on n
// vertices, in a fixed deterministic order.
void enumerate_connected(int n, const std::function<void(const Graph&)>& fn, int cap = 8);

// Parse one graph6 record per line, reporting failures with line numbers;
// yields every parsed graph (connected or not) along with its line number.
void for_each_graph6_line(std::istream& in,
                          const std::function<void(long long line_no, const Graph&)>& fn);

}  // namespace linelab
