#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linelab {

inline constexpr int kMaxVertices = 64;

// Undirected simple graph on at most 64 vertices, one bitmask row per vertex.
struct Graph {
  int n = 0;
  std::vector<std::uint64_t> adj;  // adj[v] has bit u set iff uv is an edge

  Graph() = default;
  explicit Graph(int n_);

  bool edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int degree(int v) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // sorted (u,v), u < v
  std::uint64_t vertex_mask() const;               // all n bits set

  bool operator==(const Graph&) const = default;
};

// --- structure queries -------------------------------------------------------

bool is_connected(const Graph& g);
// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_dist(const Graph& g, int src);
// All-pairs BFS distances packed row-major into out (n*n bytes); requires a
// connected graph and returns the diameter.
int bfs_all_pairs(const Graph& g, std::uint8_t* out);

struct ClassReport {
  bool connected = false;
  bool bipartite = false;
  bool chordal = false;
  bool bisplit = false;
  bool hhd_free = false;                     // no induced house, hole, or domino
  std::optional<int> diameter;               // absent when disconnected
  std::vector<std::pair<int, int>> bridges;  // sorted (u,v), u < v
};

ClassReport classify(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_chordal(const Graph& g);
bool is_bisplit(const Graph& g);  // stable X,Y,Z with complete bipartite (Y,Z)
bool is_hhd_free(const Graph& g);
std::vector<std::pair<int, int>> bridge_edges(const Graph& g);
bool is_complete_multipartite(const Graph& g);

// Twin tests: adjacent twins share closed neighborhoods, nonadjacent twins
// share open neighborhoods.
bool adjacent_twins(const Graph& g, int x, int y);
bool nonadjacent_twins(const Graph& g, int x, int y);

// --- generators --------------------------------------------------------------
// Vertex numbering is part of the contract of each generator.

Graph path_graph(int n);      // 0-1-...-(n-1), n >= 1
Graph cycle_graph(int n);     // 0-1-...-(n-1)-0, n >= 3
Graph complete_graph(int n);  // n >= 1
Graph star_graph(int n);      // hub 0, leaves 1..n-1, n >= 2
Graph wheel_graph(int n);     // hub 0 joined to the cycle 1..n-1, n >= 4
// Parts of the given sizes, vertices numbered part by part; every part size
// >= 1.
Graph complete_multipartite_graph(const std::vector<int>& parts);
Graph petersen_graph();             // outer cycle 0..4, inner star 5..9, spokes i—i+5
Graph petersen_complement();        // complement of the Petersen graph
// Chordless cycles of the given lengths (each >= 3) sharing exactly the hub
// vertex 0 and otherwise disjoint.
Graph cycle_bouquet(const std::vector<int>& lengths);
// 12-vertex HHD-free example: a 4-cycle v1 v2 v3 v4 where v1 and v2 are each
// replaced by a triangle {a,c,e} carrying a pendant path a-b-c-d-e.
Graph hhd_free_example();
// 6-cycle 0..5 plus vertex 6 adjacent to the antipodal rim vertices 1 and 4.
Graph hexagon_apex();

// --- transforms ---------------------------------------------------------------

// Replaces vertex v by a copy of h: result keeps g's other vertices first (in
// order, indices compacted), then h's vertices; every h-vertex inherits v's old
// neighbors, and h's internal edges are kept.
Graph substitute(const Graph& g, int v, const Graph& h);
Graph split_into_adjacent_twins(const Graph& g, int v);     // substitute K_2
Graph split_into_nonadjacent_twins(const Graph& g, int v);  // substitute 2K_1
// Glues g2 onto g by identifying vertex w of g2 with vertex v of g; g's
// vertices keep their ids, g2's others follow in order.
Graph glue_at_vertex(const Graph& g, int v, const Graph& g2, int w);
Graph complement(const Graph& g);

}  // namespace linelab
