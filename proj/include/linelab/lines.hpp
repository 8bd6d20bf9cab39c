#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linelab/metric_space.hpp"

namespace linelab {

// One distinct line: member vertex set (bitmask) plus every generating pair.
struct Line {
  uint64_t members = 0;
  std::vector<std::pair<int, int>> generators;  // pairs (u < v), sorted
};

// All C(n,2) lines of a space, deduplicated by member set.
struct LineFamily {
  int n = 0;
  std::vector<Line> lines;  // sorted by member mask

  int lambda() const { return static_cast<int>(lines.size()); }
  int mu() const;  // number of pairs generating a universal line
  bool universal_present() const;
  uint64_t universe() const { return vertex_mask_bits(n); }
  static uint64_t vertex_mask_bits(int n) {
    return n >= 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  }
};

// Line of the pair {x,y}: {x,y} plus every z such that one of x,y,z lies
// between the other two.
uint64_t line_mask(const MetricSpace& m, int x, int y);
uint64_t line_mask(const TernaryRelation& r, int x, int y);

// Smallest superset of the line closed under taking lines of its own pairs.
uint64_t closure_line_mask(const MetricSpace& m, int x, int y);

enum class FamilyMode { lines, closure_lines };
LineFamily line_family(const MetricSpace& m, FamilyMode mode = FamilyMode::lines);
LineFamily line_family(const TernaryRelation& r);

// Assemble a family from per-pair member masks (deduplicates, sorts).
LineFamily family_from_pair_masks(int n,
                                  const std::vector<std::pair<std::pair<int, int>, uint64_t>>& per_pair);

// Summary statistics and the checked inequalities.
struct LineStats {
  int n = 0;
  int lambda = 0;
  int mu = 0;
  bool universal = false;
  bool dbe() const { return lambda >= n || universal; }           // >= n lines or universal
  bool mighty_sum() const { return lambda + mu >= n; }            // lambda + mu >= n
  bool mighty_sum_adjusted() const {                              // lambda + max(mu-1,0) >= n
    return lambda + (mu > 1 ? mu - 1 : 0) >= n;
  }
};

LineStats line_stats(const LineFamily& f);

// I(a,b): points strictly between a and b.  O(a,b): points z such that a lies
// between z and b, or b lies between a and z.  L(ab) = {a,b} + I + O.
std::pair<uint64_t, uint64_t> interval_and_exterior(const MetricSpace& m, int a, int b);

// Ordered 4-tuple of distinct points with d(a,b)=d(c,d), d(b,c)=d(d,a), and
// d(a,c)=d(b,d)=d(a,b)+d(b,c).
bool is_parallelogram(const MetricSpace& m, int a, int b, int c, int d);

// Why two distinct pairs generate the same line in a graph metric: the
// endpoints can be labeled a,b / c,d (possibly b=c) so that one of
//   chain:              b between a,c; c between b,d; b and c between a,d
//                       (for b=c this degenerates to: b between a,d)
//   empty_interval:     (a,b,c,d) is a parallelogram and I(a,b)=I(c,d)={}
//   empty_exterior:     (a,c,b,d) is a parallelogram and O(a,b)=O(c,d)={}
// holds.  Requires a graph metric; classification of equal-line pairs in
// arbitrary spaces is not established.
struct EqualLineCase {
  enum class Kind { chain, empty_interval, empty_exterior } kind;
  std::array<int, 4> label;  // (a,b,c,d)
};

std::optional<EqualLineCase> classify_equal_line_pair(const MetricSpace& m,
                                                      std::pair<int, int> e,
                                                      std::pair<int, int> f);

// No line of the space strictly contains another line.
bool is_geometric_dominant(const MetricSpace& m);

}  // namespace linelab
