#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "linelab/graph.hpp"
#include "linelab/rational.hpp"

namespace linelab {

// Finite metric space with exact rational distances, row-major matrix.
struct MetricSpace {
  int n = 0;
  std::vector<Rat> d;

  MetricSpace() = default;
  explicit MetricSpace(int n_) : n(n_), d(static_cast<size_t>(n_) * n_, Rat(0)) {}
  const Rat& at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
  Rat& at(int i, int j) { return d[static_cast<size_t>(i) * n + j]; }
  bool operator==(const MetricSpace&) const = default;
};

struct MetricViolation {
  std::string axiom;  // "shape" | "symmetry" | "zero-diagonal" | "positivity" | "triangle"
  std::vector<int> witness;
};

// nullopt iff m is a genuine metric space (n >= 2 and all axioms hold; a
// wrong-shape matrix reports axiom "shape").
std::optional<MetricViolation> metric_check(const MetricSpace& m);

// Shortest-path distances; throws when g is disconnected or empty.
MetricSpace metric_from_graph(const Graph& g);

// Ternary betweenness relation over points 0..n-1. Entries of every triple are
// pairwise distinct (checked at construction); triples are kept sorted.
struct TernaryRelation {
  int n = 0;
  std::vector<std::array<int, 3>> triples;
  std::vector<bool> cube;  // n^3 membership bits

  static TernaryRelation make(int n, std::vector<std::array<int, 3>> ts);
  bool has(int u, int v, int w) const {
    return cube[(static_cast<size_t>(u) * n + v) * n + w];
  }
  bool operator==(const TernaryRelation& o) const {
    return n == o.n && triples == o.triples;
  }
};

// (u,v,w) with pairwise distinct entries and d(u,v) + d(v,w) = d(u,w).
TernaryRelation betweenness_of(const MetricSpace& m);

// Betweenness axioms m0..m6 with a witness tuple for each failure:
//   m0 pairwise-distinct entries          m1 (u,v,w) -> (w,v,u)
//   m2 (u,v,w) -> not (u,w,v)             m3 (u,v,w),(u,w,x) -> (u,v,x),(v,w,x)
//   m4 (u,v,w),(v,w,x) -> (u,v,x),(u,w,x)
//   m5 (u,v,w),(u,v,x), w != x -> (u,w,x),(v,w,x) or (u,x,w),(v,x,w)
//   m6 (u,v,x),(u,w,x), v != w -> (u,v,w),(v,w,x) or (u,w,v),(w,v,x)
// Every metric betweenness satisfies m0..m3.
struct AxiomReport {
  std::array<bool, 7> holds{true, true, true, true, true, true, true};
  std::array<std::vector<int>, 7> witness;
  bool m0_to_m3() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
  bool all() const;
};

AxiomReport check_axioms(const TernaryRelation& r);

// --- embeddings ---------------------------------------------------------------

// l1 metric of rational plane points; throws on duplicate points.
MetricSpace l1_plane_metric(const std::vector<std::pair<Rat, Rat>>& pts);
// all x-coordinates distinct and all y-coordinates distinct
bool l1_plane_nondegenerate(const std::vector<std::pair<Rat, Rat>>& pts);

// Rows of the distance matrix: an exact isometric embedding into l_infinity
// of dimension n.
std::vector<std::vector<Rat>> linf_embedding(const MetricSpace& m);

// Integer vectors with entries in [0,k] mapped to 0/1 vectors (x -> x ones,
// k-x zeros per coordinate); preserves l1 distances exactly.
std::vector<std::vector<int>> unary_embedding(const std::vector<std::vector<int>>& pts, int k);

// (x,y) -> (x+y, x-y): the l_infinity distance of images equals the l1
// distance of the originals, exactly.
std::pair<Rat, Rat> rotate_l1_to_linf(const std::pair<Rat, Rat>& p);

// --- recognition --------------------------------------------------------------

struct GraphMetricResult {
  bool ok = false;
  Graph g;             // certificate when ok
  std::string reason;  // refusal reason otherwise
  std::vector<int> witness;
};

// Is m the shortest-path metric of a graph? Candidate: edges at distance 1.
GraphMetricResult recognize_graph_metric(const MetricSpace& m);

struct GraphBetweennessResult {
  bool ok = false;
  Graph g;
  std::string reason;
  std::vector<int> witness;
};

// Is r the betweenness of a graph metric? Candidate: u,w adjacent iff nothing
// lies between them.
GraphBetweennessResult recognize_graph_betweenness(const TernaryRelation& r);

struct MetricBetweennessResult {
  enum class Status { accepted, refused, cap_exceeded } status = Status::refused;
  MetricSpace certificate;  // when accepted
  std::string reason;
  std::vector<int> witness;
};

// Is r the betweenness of some metric space? Decided by exact rational linear
// programming: tight triangles for members, unit slack for non-members (any
// positive margin rescales to 1). The certificate reproduces r exactly.
MetricBetweennessResult recognize_metric_betweenness(const TernaryRelation& r, int cap = 12);

}  // namespace linelab
