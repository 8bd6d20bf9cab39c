#pragma once

#include <cstdint>

#include "linelab/graph.hpp"
#include "linelab/lines.hpp"

namespace linelab {

// Per-graph line statistics, computed two ways: a fast integer path (all-pairs
// BFS distances, then bitmask lines) used by the bulk scans, and a reference
// path through the exact-arithmetic metric/line modules used to validate it
// and as the benchmark baseline.
struct KernelStats {
  LineStats stats;
  int diameter = 0;
  bool dominant = false;  // no line strictly contains another (when requested)
};

KernelStats graph_kernel_stats(const Graph& g, bool with_dominant = false);
KernelStats graph_kernel_stats_reference(const Graph& g, bool with_dominant = false);

}  // namespace linelab
