#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "linelab/graph.hpp"
#include "linelab/hypergraph.hpp"
#include "linelab/lines.hpp"
#include "linelab/metric_space.hpp"

namespace linelab {

struct ScanChecks {
  bool dbe = true;        // lambda >= n or a universal line
  bool mighty = true;     // lambda + mu >= n; adjusted form when diameter <= 2
  bool min_lines = true;  // minimum lambda among graphs with no universal line
  bool dominant = false;  // count families where no line contains another
};

inline constexpr int kMinimizerCap = 1000;

struct ScanReport {
  int n = 0;
  long long instances_scanned = 0;
  std::vector<std::string> dbe_violations;              // graph6 records (expected empty)
  std::vector<std::string> mighty_violations;           // lambda + mu < n
  std::vector<std::string> mighty_adjusted_violations;  // diameter <= 2, n >= 3 form
  int min_lambda_no_universal = -1;                     // -1: every graph had a universal line
  std::vector<std::string> minimizers;                  // sorted graph6, capped at kMinimizerCap
  long long minimizer_count = 0;                        // total minimizers incl. past the cap
  long long dominant_count = 0;
  double runtime_seconds = 0;
};

// Internal isomorph-free enumeration of connected graphs on n vertices,
// sharded over blocks of the (n-1)-vertex parents; OpenMP within a block with
// a sequential in-order merge, so the report is identical for any job count
// and any block size.  A checkpoint file, when named, records the merged
// partial after each block and lets an interrupted scan resume without
// double-counting (the block size must match the checkpoint's).  max_blocks
// >= 0 stops after that many new blocks and reports the completed prefix;
// it exists to exercise interruption and resume.
ScanReport scan_internal(int n, const ScanChecks& checks, int jobs = 0,
                         const std::string& checkpoint_path = "", int cap = 8,
                         int block_size = 1024, long long max_blocks = -1);

// One graph6 record per line; disconnected records are skipped, all records
// must share one vertex count.  Parse failures name the line number.
ScanReport scan_stream(std::istream& in, const ScanChecks& checks, int jobs = 0);

// Single-threaded scan through the exact-arithmetic reference path.
ScanReport scan_reference(int n, const ScanChecks& checks, int cap = 8);

bool scan_found_violations(const ScanReport& r);

// --- complete multipartite minimum ----------------------------------------------

struct MultipartiteF {
  long long value = 0;
  std::vector<std::vector<int>> optima;  // part-size lists, ascending, lex-sorted
};

// Minimum of C(k,2) + sum C(n_i,2) over partitions of n into k >= 3 parts with
// no part of size 2 (those are the multipartite graphs with no universal
// line), with every optimal partition.  Throws for n < 3.
MultipartiteF multipartite_f(int n);

struct MinimaRow {
  int n = 0;
  int min_lambda_no_universal = -1;
  std::vector<std::string> minimizers;
  long long minimizer_count = 0;
  long long f_value = -1;
  bool all_minimizers_multipartite = true;
  std::vector<std::string> exceptions;  // minimizers that are not complete multipartite
};

// Join a scan report with multipartite_f and flag non-multipartite minimizers
// (judged over the stored, capped list).
MinimaRow minima_row(const ScanReport& rep);

// --- line-family realizability ----------------------------------------------------

enum class SearchLevel { graph, metric, betweenness, hypergraph };

struct FamilySearchResult {
  RecStatus status = RecStatus::refused;
  SearchLevel level = SearchLevel::graph;
  std::string reason;
  Graph g;             // graph-level certificate
  Hypergraph3 h;       // hypergraph-level certificate
  MetricSpace ms;      // metric-level certificate
  TernaryRelation r;   // betweenness-level certificate
};

// Does any instance at the level have exactly this set of lines (as member
// sets)?  Brute force in a fixed order; first certificate wins.  Caps: 7
// vertices at graph level, 6 elsewhere.
FamilySearchResult line_family_search(int n, const std::vector<uint64_t>& target,
                                      SearchLevel level);

}  // namespace linelab
