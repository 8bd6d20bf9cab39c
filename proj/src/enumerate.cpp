#include "linelab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "linelab/canon.hpp"
#include "linelab/graph6.hpp"

namespace linelab {

namespace {

uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Label-independent vertex invariant: degree, sorted neighbor degrees, then
// breadth-first level sizes.  Only the induced order matters; hash collisions
// merely force the exact code tiebreak below.
uint64_t vertex_invariant(const Graph& g, int u) {
  uint64_t h = static_cast<uint64_t>(g.degree(u));
  int nd[kMaxVertices];
  int k = 0;
  uint64_t nb = g.adj[u];
  while (nb) {
    int v = std::countr_zero(nb);
    nb &= nb - 1;
    nd[k++] = g.degree(v);
  }
  std::sort(nd, nd + k);
  for (int i = 0; i < k; ++i) h = mix(h, static_cast<uint64_t>(nd[i]));
  uint64_t seen = uint64_t(1) << u, frontier = seen;
  while (frontier) {
    h = mix(h, static_cast<uint64_t>(std::popcount(frontier)));
    uint64_t next = 0;
    uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.adj[v];
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return h;
}

struct CutFinder {
  const Graph& g;
  int disc[kMaxVertices];
  int low[kMaxVertices];
  int timer = 0;
  uint64_t cut = 0;

  explicit CutFinder(const Graph& gg) : g(gg) {
    for (int i = 0; i < g.n; ++i) disc[i] = -1;
  }

  void dfs(int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    uint64_t nb = g.adj[u];
    while (nb) {
      int v = std::countr_zero(nb);
      nb &= nb - 1;
      if (disc[v] < 0) {
        ++children;
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (parent >= 0 && low[v] >= disc[u]) cut |= uint64_t(1) << u;
      } else if (v != parent) {
        low[u] = std::min(low[u], disc[v]);
      }
    }
    if (parent < 0 && children > 1) cut |= uint64_t(1) << u;
  }
};

// Vertices whose removal keeps the (connected) graph connected.
uint64_t non_cut_vertices(const Graph& g) {
  CutFinder cf(g);
  cf.dfs(0, -1);
  return ~cf.cut & g.vertex_mask();
}

Graph delete_vertex(const Graph& g, int u) {
  Graph d(g.n - 1);
  uint64_t lowmask = (uint64_t(1) << u) - 1;
  for (int i = 0; i < g.n; ++i) {
    if (i == u) continue;
    uint64_t row = g.adj[i];
    uint64_t packed = (row & lowmask) | ((row >> (u + 1)) << u);
    d.adj[i < u ? i : i - 1] = packed;
  }
  return d;
}

// Canonical-deletion acceptance: the new vertex must attain the minimum of
// (invariant, canonical code of the deletion) over all deletable vertices.
// The code of deleting the new vertex is the parent's code, so only tied
// vertices ever pay for a canonical labeling.
bool accept_child(const Graph& h, uint64_t parent_code) {
  int v = h.n - 1;
  uint64_t deletable = non_cut_vertices(h) & ~(uint64_t(1) << v);
  int dv = h.degree(v);
  uint64_t tied = 0;
  uint64_t rest = deletable;
  while (rest) {
    int u = std::countr_zero(rest);
    rest &= rest - 1;
    int du = h.degree(u);
    if (du < dv) return false;
    if (du == dv) tied |= uint64_t(1) << u;
  }
  if (!tied) return true;
  uint64_t iv = vertex_invariant(h, v);
  uint64_t tied2 = 0;
  while (tied) {
    int u = std::countr_zero(tied);
    tied &= tied - 1;
    uint64_t iu = vertex_invariant(h, u);
    if (iu < iv) return false;
    if (iu == iv) tied2 |= uint64_t(1) << u;
  }
  while (tied2) {
    int u = std::countr_zero(tied2);
    tied2 &= tied2 - 1;
    if (canon_code(delete_vertex(h, u)).code < parent_code) return false;
  }
  return true;
}

void visit_children_impl(const Graph& parent,
                         const std::function<void(const Graph&, uint64_t)>& fn) {
  int k = parent.n;
  if (k + 1 > 11) throw std::invalid_argument("enumerate: children would exceed 11 vertices");
  uint64_t parent_code = canon_code(parent).code;
  Graph h(k + 1);
  std::unordered_set<uint64_t> seen;
  for (uint64_t s = 1; s < (uint64_t(1) << k); ++s) {
    for (int i = 0; i < k; ++i)
      h.adj[i] = parent.adj[i] | (((s >> i) & 1) ? (uint64_t(1) << k) : 0);
    h.adj[k] = s;
    if (!accept_child(h, parent_code)) continue;
    uint64_t code = canon_code(h).code;
    if (!seen.insert(code).second) continue;  // same class reached via another subset
    fn(h, code);
  }
}

}  // namespace

void visit_children(const Graph& parent, const std::function<void(const Graph&)>& fn) {
  visit_children_impl(parent, [&](const Graph& g, uint64_t) { fn(g); });
}

std::vector<uint64_t> connected_codes(int n, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate: need at least one vertex");
  if (n > cap) throw std::invalid_argument("enumerate: vertex count exceeds the cap");
  if (n > 11) throw std::invalid_argument("enumerate: internal generation tops out at 11 vertices");
  std::vector<uint64_t> level{0};
  for (int k = 2; k <= n; ++k) {
    std::vector<uint64_t> next;
    for (uint64_t code : level) {
      Graph p = graph_from_code(k - 1, code);
      visit_children_impl(p, [&](const Graph&, uint64_t c) { next.push_back(c); });
    }
    std::sort(next.begin(), next.end());
    if (std::adjacent_find(next.begin(), next.end()) != next.end())
      throw std::logic_error("enumerate: duplicate class across parents");
    level = std::move(next);
  }
  return level;
}

void enumerate_connected(int n, const std::function<void(const Graph&)>& fn, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate: need at least one vertex");
  if (n > cap) throw std::invalid_argument("enumerate: vertex count exceeds the cap");
  if (n == 1) {
    fn(Graph(1));
    return;
  }
  auto parents = connected_codes(n - 1, std::max(cap, n - 1));
  for (uint64_t code : parents) {
    Graph p = graph_from_code(n - 1, code);
    visit_children(p, fn);
  }
}

void for_each_graph6_line(std::istream& in,
                          const std::function<void(long long, const Graph&)>& fn) {
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = graph6_parse(line);
    } catch (const Graph6Error& e) {
      throw std::runtime_error("graph6 line " + std::to_string(line_no) + ": " + e.what());
    }
    fn(line_no, g);
  }
}

}  // namespace linelab
