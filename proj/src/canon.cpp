#include "linelab/canon.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace linelab {

namespace {

constexpr int kCanonMax = 11;

struct Searcher {
  int n = 0;
  std::uint64_t adj[kCanonMax];
  std::uint64_t best_code = 0;
  bool best_set = false;
  std::int8_t best_lab[kCanonMax];
  bool nontrivial = false;
  // discovered automorphisms (generating set is not required; pruning only)
  static constexpr int kMaxAuts = 64;
  std::int8_t auts[kMaxAuts][kCanonMax];
  int naut = 0;
  std::int8_t path[kCanonMax];
  int depth = 0;

  std::uint64_t encode(const std::int8_t* lab) const {
    std::uint64_t code = 0;
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++)
        code = (code << 1) | ((adj[lab[i]] >> lab[j]) & 1u);
    return code;
  }

  // equitable refinement: split cells by neighbor counts against every cell
  // until stable; subcells are ordered by ascending count (label-independent)
  void refine(std::int8_t* lab, std::int8_t* ptn) const {
    bool changed = true;
    int cnt[kCanonMax];
    while (changed) {
      changed = false;
      for (int cs = 0; cs < n && !changed; cs++) {
        if (cs > 0 && ptn[cs - 1] == 1) continue;  // not a cell start
        int ce = cs;
        while (ptn[ce] == 1) ce++;
        std::uint64_t splitter = 0;
        for (int k = cs; k <= ce; k++) splitter |= 1ull << lab[k];
        for (int ds = 0; ds < n && !changed; ds++) {
          if (ds > 0 && ptn[ds - 1] == 1) continue;
          int de = ds;
          while (ptn[de] == 1) de++;
          if (de == ds) continue;
          bool differ = false;
          for (int k = ds; k <= de; k++) {
            cnt[k] = std::popcount(adj[lab[k]] & splitter);
            if (cnt[k] != cnt[ds]) differ = true;
          }
          if (!differ) continue;
          // stable sort the cell by count, then cut between distinct counts
          for (int a = ds + 1; a <= de; a++) {
            int cv = cnt[a];
            std::int8_t lv = lab[a];
            int b = a - 1;
            while (b >= ds && cnt[b] > cv) {
              cnt[b + 1] = cnt[b];
              lab[b + 1] = lab[b];
              b--;
            }
            cnt[b + 1] = cv;
            lab[b + 1] = lv;
          }
          for (int k = ds; k < de; k++)
            if (cnt[k] != cnt[k + 1]) ptn[k] = 0;
          changed = true;
        }
      }
    }
  }

  void record_aut(const std::int8_t* lab) {
    std::int8_t sigma[kCanonMax];
    bool ident = true;
    for (int k = 0; k < n; k++) {
      sigma[lab[k]] = best_lab[k];
      if (lab[k] != best_lab[k]) ident = false;
    }
    if (ident) return;
    nontrivial = true;
    if (naut < kMaxAuts) {
      std::copy(sigma, sigma + n, auts[naut]);
      naut++;
    }
  }

  void dfs(std::int8_t* lab, std::int8_t* ptn) {
    refine(lab, ptn);
    int cell = -1;
    for (int i = 0; i < n; i++) {
      if (ptn[i] == 1) {
        cell = i;
        break;
      }
    }
    if (cell < 0) {  // discrete
      std::uint64_t code = encode(lab);
      if (!best_set || code > best_code) {
        best_code = code;
        best_set = true;
        std::copy(lab, lab + n, best_lab);
      } else if (code == best_code) {
        record_aut(lab);
      }
      return;
    }
    int ce = cell;
    while (ptn[ce] == 1) ce++;
    std::int8_t verts[kCanonMax];
    int nv = ce - cell + 1;
    std::copy(lab + cell, lab + ce + 1, verts);
    std::int8_t tried[kCanonMax];
    int ntried = 0;
    std::int8_t child_lab[kCanonMax], child_ptn[kCanonMax];
    for (int t = 0; t < nv; t++) {
      int v = verts[t];
      if (ntried > 0 && pruned(v, tried, ntried)) continue;
      // individualize v at the front of the cell
      std::copy(lab, lab + n, child_lab);
      std::copy(ptn, ptn + n, child_ptn);
      int at = cell;
      while (child_lab[at] != v) at++;
      std::rotate(child_lab + cell, child_lab + at, child_lab + at + 1);
      child_ptn[cell] = 0;
      path[depth] = static_cast<std::int8_t>(v);
      depth++;
      dfs(child_lab, child_ptn);
      depth--;
      tried[ntried++] = static_cast<std::int8_t>(v);
    }
  }

  // orbit pruning: skip v when an automorphism group generated by discovered
  // path-fixing automorphisms maps a tried sibling to v
  bool pruned(int v, const std::int8_t* tried, int ntried) const {
    std::int8_t uf[kCanonMax];
    for (int i = 0; i < n; i++) uf[i] = static_cast<std::int8_t>(i);
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (int a = 0; a < naut; a++) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; d++)
        if (auts[a][path[d]] != path[d]) fixes = false;
      if (!fixes) continue;
      for (int x = 0; x < n; x++) {
        int rx = find(x), ry = find(auts[a][x]);
        if (rx != ry) uf[rx] = static_cast<std::int8_t>(ry);
      }
    }
    int rv = find(v);
    for (int i = 0; i < ntried; i++)
      if (find(tried[i]) == rv) return true;
    return false;
  }
};

}  // namespace

CanonResult canon_code(const Graph& g) {
  if (g.n > kCanonMax) throw std::runtime_error("canonical form limited to n <= 11");
  if (g.n <= 1) return {0, false};
  Searcher s;
  s.n = g.n;
  for (int i = 0; i < g.n; i++) s.adj[i] = g.adj[i];
  std::int8_t lab[kCanonMax], ptn[kCanonMax];
  for (int i = 0; i < g.n; i++) {
    lab[i] = static_cast<std::int8_t>(i);
    ptn[i] = 1;
  }
  ptn[g.n - 1] = 0;
  s.dfs(lab, ptn);
  return {s.best_code, s.nontrivial};
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return canon_code(a).code == canon_code(b).code;
}

std::uint64_t upper_triangle_code(const Graph& g) {
  std::uint64_t code = 0;
  for (int i = 0; i < g.n; i++)
    for (int j = i + 1; j < g.n; j++) code = (code << 1) | (g.edge(i, j) ? 1 : 0);
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int total = n * (n - 1) / 2;
  int bit = total - 1;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++, bit--)
      if ((code >> bit) & 1u) g.add_edge(i, j);
  return g;
}

}  // namespace linelab
