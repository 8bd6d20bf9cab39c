#include "linelab/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "linelab/lp.hpp"

namespace linelab {

namespace {

std::array<int, 3> sorted3(int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

int triple_index(const Hypergraph3& h, const std::array<int, 3>& t) {
  auto it = std::lower_bound(h.triples.begin(), h.triples.end(), t);
  if (it != h.triples.end() && *it == t) return static_cast<int>(it - h.triples.begin());
  return -1;
}

std::array<int, 2> ends_of(const std::array<int, 3>& t, int mid) {
  std::array<int, 2> e{-1, -1};
  int k = 0;
  for (int v : t)
    if (v != mid) e[k++] = v;
  return e;
}

}  // namespace

Hypergraph3 Hypergraph3::make(int n, std::vector<std::array<int, 3>> ts) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("hypergraph: vertex count out of range");
  for (auto& t : ts) {
    std::sort(t.begin(), t.end());
    if (t[0] < 0 || t[2] >= n) throw std::invalid_argument("hypergraph: vertex out of range");
    if (t[0] == t[1] || t[1] == t[2])
      throw std::invalid_argument("hypergraph: triple with a repeated vertex");
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  Hypergraph3 h;
  h.n = n;
  h.triples = std::move(ts);
  return h;
}

bool Hypergraph3::has(int a, int b, int c) const {
  if (a == b || b == c || a == c) return false;
  return triple_index(*this, sorted3(a, b, c)) >= 0;
}

Hypergraph3 triples_of(const TernaryRelation& r) {
  std::vector<std::array<int, 3>> ts;
  ts.reserve(r.triples.size());
  for (const auto& t : r.triples) ts.push_back(sorted3(t[0], t[1], t[2]));
  return Hypergraph3::make(r.n, std::move(ts));
}

Hypergraph3 from_graph_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> ts;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b) {
      if (!g.edge(a, b)) continue;
      for (int c = b + 1; c < g.n; ++c)
        if (g.edge(a, c) && g.edge(b, c)) ts.push_back({a, b, c});
    }
  return Hypergraph3::make(g.n, std::move(ts));
}

Hypergraph3 induce(const Hypergraph3& h, const std::vector<int>& keep) {
  std::vector<int> s = keep;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("induce: repeated vertex");
  if (!s.empty() && (s.front() < 0 || s.back() >= h.n))
    throw std::invalid_argument("induce: vertex out of range");
  std::vector<int> newlab(h.n, -1);
  for (size_t i = 0; i < s.size(); ++i) newlab[s[i]] = static_cast<int>(i);
  std::vector<std::array<int, 3>> ts;
  for (const auto& t : h.triples) {
    if (newlab[t[0]] < 0 || newlab[t[1]] < 0 || newlab[t[2]] < 0) continue;
    ts.push_back({newlab[t[0]], newlab[t[1]], newlab[t[2]]});
  }
  return Hypergraph3::make(static_cast<int>(s.size()), std::move(ts));
}

uint64_t hyperline_mask(const Hypergraph3& h, int x, int y) {
  if (x == y) throw std::invalid_argument("hyperline: endpoints must differ");
  if (x < 0 || y < 0 || x >= h.n || y >= h.n)
    throw std::invalid_argument("hyperline: vertex out of range");
  uint64_t m = (uint64_t(1) << x) | (uint64_t(1) << y);
  for (const auto& t : h.triples) {
    int hit = 0, third = -1;
    for (int v : t) {
      if (v == x || v == y)
        ++hit;
      else
        third = v;
    }
    if (hit == 2) m |= uint64_t(1) << third;
  }
  return m;
}

LineFamily line_family(const Hypergraph3& h) {
  std::vector<std::pair<std::pair<int, int>, uint64_t>> per_pair;
  per_pair.reserve(static_cast<size_t>(h.n) * (h.n - 1) / 2);
  for (int x = 0; x < h.n; ++x)
    for (int y = x + 1; y < h.n; ++y)
      per_pair.push_back({{x, y}, hyperline_mask(h, x, y)});
  return family_from_pair_masks(h.n, per_pair);
}

FourProfile four_profile(const Hypergraph3& h) {
  FourProfile p;
  for (int a = 0; a < h.n; ++a)
    for (int b = a + 1; b < h.n; ++b)
      for (int c = b + 1; c < h.n; ++c)
        for (int d = c + 1; d < h.n; ++d) {
          int cnt = h.has(a, b, c) + h.has(a, b, d) + h.has(a, c, d) + h.has(b, c, d);
          ++p.counts[cnt];
        }
  p.class_a = p.counts[2] == 0;
  p.class_b = p.counts[1] == 0 && p.counts[3] == 0;
  p.class_c = p.counts[4] == 0;
  return p;
}

// --- is_graphic ------------------------------------------------------------------

namespace {

// Depth-first search over edge decisions in colex pair order.  Once the pair
// (i,j) is decided, every 3-set {a,i,j} with a < i is fully decided, so two
// local facts of shortest-path metrics prune early: an induced 2-edge path
// forces a betweenness triple, an induced triangle forbids one.
struct GraphicSearch {
  const Hypergraph3& h;
  int n;
  Graph g;
  std::vector<std::pair<int, int>> pairs;

  explicit GraphicSearch(const Hypergraph3& hg) : h(hg), n(hg.n), g(hg.n) {
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs.push_back({i, j});
  }

  bool local_ok(int i, int j) const {
    for (int a = 0; a < i; ++a) {
      int cnt = g.edge(a, i) + g.edge(a, j) + g.edge(i, j);
      bool mem = h.has(a, i, j);
      if (cnt == 2 && !mem) return false;
      if (cnt == 3 && mem) return false;
    }
    return true;
  }

  bool leaf_matches() {
    if (n >= 2 && !is_connected(g)) return false;
    if (n < 3) return h.triples.empty();
    std::vector<uint8_t> dist(static_cast<size_t>(n) * n);
    bfs_all_pairs(g, dist.data());
    auto d = [&](int a, int b) { return dist[static_cast<size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          bool mem = d(a, b) + d(b, c) == d(a, c) || d(b, a) + d(a, c) == d(b, c) ||
                     d(a, c) + d(c, b) == d(a, b);
          if (mem != h.has(a, b, c)) return false;
        }
    return true;
  }

  bool dfs(size_t p) {
    if (p == pairs.size()) return leaf_matches();
    auto [i, j] = pairs[p];
    g.add_edge(i, j);
    if (local_ok(i, j) && dfs(p + 1)) return true;
    g.remove_edge(i, j);
    return local_ok(i, j) && dfs(p + 1);
  }
};

}  // namespace

GraphicResult is_graphic(const Hypergraph3& h, int cap) {
  GraphicResult res;
  if (h.n > cap) {
    res.status = RecStatus::cap_exceeded;
    res.reason = "vertex count exceeds the configured cap";
    return res;
  }
  if (h.n == 0) {
    res.reason = "no vertices";
    return res;
  }
  GraphicSearch s(h);
  if (s.dfs(0)) {
    res.status = RecStatus::accepted;
    res.g = s.g;
    return res;
  }
  res.status = RecStatus::refused;
  res.reason = "no connected graph has exactly these betweenness triples";
  return res;
}

// --- middle assignments (shared by is_metric / is_pseudometric) ------------------

namespace {

// Partial choice of one middle vertex per hyperedge, closed under the
// transitivity rule: oriented triples (u,v,w) and (u,w,x) force (u,v,x) and
// (v,w,x).  A forced 3-set outside the hypergraph, or a forced middle clashing
// with an earlier choice, kills the branch.
struct MiddleState {
  const Hypergraph3& h;
  std::vector<int> mid;    // per hyperedge: middle vertex, -1 unassigned
  std::vector<int> trail;  // assignment order, for undo

  explicit MiddleState(const Hypergraph3& hg) : h(hg), mid(hg.triples.size(), -1) {}

  bool require(int a, int b, int c, int v, std::vector<int>& queue) {
    int idx = triple_index(h, sorted3(a, b, c));
    if (idx < 0) return false;
    if (mid[idx] == v) return true;
    if (mid[idx] != -1) return false;
    mid[idx] = v;
    trail.push_back(idx);
    queue.push_back(idx);
    return true;
  }

  // e plays (u,v,w), f plays (u,w,x): f's middle must be an end of e and the
  // other end of e an end of f.
  bool pair_rule(int e, int f, std::vector<int>& queue) {
    int v = mid[e], w = mid[f];
    auto ee = ends_of(h.triples[e], v);
    auto fe = ends_of(h.triples[f], w);
    for (int side = 0; side < 2; ++side) {
      if (ee[side] != w) continue;
      int u = ee[1 - side];
      int x;
      if (fe[0] == u)
        x = fe[1];
      else if (fe[1] == u)
        x = fe[0];
      else
        continue;
      if (!require(u, v, x, v, queue)) return false;
      if (!require(v, w, x, w, queue)) return false;
    }
    return true;
  }

  bool assign(int e, int v) {
    mid[e] = v;
    trail.push_back(e);
    std::vector<int> queue{e};
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      for (int f = 0; f < static_cast<int>(mid.size()); ++f) {
        if (f == cur || mid[f] < 0) continue;
        if (!pair_rule(cur, f, queue)) return false;
        if (!pair_rule(f, cur, queue)) return false;
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      mid[trail.back()] = -1;
      trail.pop_back();
    }
  }

  int first_unassigned() const {
    for (int i = 0; i < static_cast<int>(mid.size()); ++i)
      if (mid[i] < 0) return i;
    return -1;
  }
};

bool dfs_first_assignment(MiddleState& st, std::vector<int>& out) {
  int e = st.first_unassigned();
  if (e < 0) {
    out = st.mid;
    return true;
  }
  for (int k = 0; k < 3; ++k) {
    size_t mark = st.trail.size();
    if (st.assign(e, st.h.triples[e][k]) && dfs_first_assignment(st, out)) return true;
    st.undo(mark);
  }
  return false;
}

void collect_assignments(MiddleState& st, std::vector<int8_t>& flat) {
  int e = st.first_unassigned();
  if (e < 0) {
    for (int v : st.mid) flat.push_back(static_cast<int8_t>(v));
    return;
  }
  for (int k = 0; k < 3; ++k) {
    size_t mark = st.trail.size();
    if (st.assign(e, st.h.triples[e][k])) collect_assignments(st, flat);
    st.undo(mark);
  }
}

// Exact feasibility of one middle assignment: tight triangle for each chosen
// middle, unit slack for every orientation of every non-hyperedge 3-set, unit
// lower bound on every distance (any strictly feasible metric rescales to this).
std::optional<MetricSpace> realize_assignment(const Hypergraph3& h, const int8_t* mid) {
  int n = h.n;
  int np = n * (n - 1) / 2;
  auto pidx = [n](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  auto row3 = [&](int a, int m, int b) {
    std::vector<Rat> r(np, Rat(0));
    r[pidx(a, m)] += 1;
    r[pidx(m, b)] += 1;
    r[pidx(a, b)] -= 1;
    return r;
  };
  LinearSystem sys;
  sys.nvars = np;
  for (size_t e = 0; e < h.triples.size(); ++e) {
    auto en = ends_of(h.triples[e], mid[e]);
    sys.add_eq(row3(en[0], mid[e], en[1]), Rat(0));
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (h.has(a, b, c)) continue;
        sys.add_ge(row3(b, a, c), Rat(1));
        sys.add_ge(row3(a, b, c), Rat(1));
        sys.add_ge(row3(a, c, b), Rat(1));
      }
  for (int p = 0; p < np; ++p) {
    std::vector<Rat> r(np, Rat(0));
    r[p] = 1;
    sys.add_ge(std::move(r), Rat(1));
  }
  auto x = lp_feasible_point(sys);
  if (!x) return std::nullopt;
  MetricSpace ms;
  ms.n = n;
  ms.d.assign(static_cast<size_t>(n) * n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ms.d[static_cast<size_t>(i) * n + j] = (*x)[pidx(i, j)];
      ms.d[static_cast<size_t>(j) * n + i] = (*x)[pidx(i, j)];
    }
  return ms;
}

}  // namespace

std::vector<std::array<int, 11>> hypergraph_automorphisms(const Hypergraph3& h) {
  if (h.n > 10) throw std::invalid_argument("hypergraph_automorphisms: more than 10 vertices");
  std::vector<std::array<int, 11>> out;
  std::vector<int> p(h.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& t : h.triples) {
      if (triple_index(h, sorted3(p[t[0]], p[t[1]], p[t[2]])) < 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::array<int, 11> a{};
      std::copy(p.begin(), p.end(), a.begin());
      out.push_back(a);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

MetricHypergraphResult is_metric(const Hypergraph3& h, int cap_n, int cap_t) {
  MetricHypergraphResult res;
  if (h.n > cap_n || static_cast<int>(h.triples.size()) > cap_t) {
    res.status = RecStatus::cap_exceeded;
    res.reason = "instance exceeds the configured caps";
    return res;
  }
  if (h.n < 2) {
    res.reason = "fewer than two vertices";
    return res;
  }
  int m = static_cast<int>(h.triples.size());
  std::vector<int8_t> flat;
  {
    MiddleState st(h);
    collect_assignments(st, flat);
  }
  size_t count = m > 0 ? flat.size() / m : 1;  // m == 0: the single empty assignment

  // One representative per automorphism orbit (a prefix of the group still
  // yields sound, merely coarser, reduction if the product gets large).
  auto auts = hypergraph_automorphisms(h);
  std::vector<std::vector<int>> emap;
  for (const auto& a : auts) {
    std::vector<int> em(m);
    bool identity = true;
    for (int v = 0; v < h.n; ++v) identity &= a[v] == v;
    if (identity) continue;
    for (int e = 0; e < m; ++e) {
      const auto& t = h.triples[e];
      em[e] = triple_index(h, sorted3(a[t[0]], a[t[1]], a[t[2]]));
    }
    emap.push_back(std::move(em));
  }
  std::vector<std::array<int, 11>> vmaps;
  for (const auto& a : auts) {
    bool identity = true;
    for (int v = 0; v < h.n; ++v) identity &= a[v] == v;
    if (!identity) vmaps.push_back(a);
  }
  if (m > 0 && !vmaps.empty()) {
    size_t budget = 200000000 / std::max<size_t>(1, count * static_cast<size_t>(m));
    if (vmaps.size() > budget) {
      vmaps.resize(std::max<size_t>(1, budget));
      emap.resize(vmaps.size());
    }
  }

  std::vector<int8_t> img(std::max(m, 1));
  auto is_rep = [&](const int8_t* a) {
    for (size_t s = 0; s < vmaps.size(); ++s) {
      for (int e = 0; e < m; ++e) img[emap[s][e]] = static_cast<int8_t>(vmaps[s][a[e]]);
      if (std::lexicographical_compare(img.begin(), img.begin() + m, a, a + m)) return false;
    }
    return true;
  };

  for (size_t i = 0; i < count; ++i) {
    const int8_t* a = m > 0 ? flat.data() + i * m : nullptr;
    if (m > 0 && !is_rep(a)) continue;
    auto ms = realize_assignment(h, a);
    if (!ms) continue;
    if (metric_check(*ms)) throw std::logic_error("is_metric: certificate fails the metric axioms");
    if (!(triples_of(betweenness_of(*ms)) == h))
      throw std::logic_error("is_metric: certificate betweenness mismatch");
    res.status = RecStatus::accepted;
    res.certificate = *ms;
    return res;
  }
  res.status = RecStatus::refused;
  res.reason = "no choice of middles admits realizing distances";
  return res;
}

PseudometricResult is_pseudometric(const Hypergraph3& h, int cap_t) {
  PseudometricResult res;
  if (static_cast<int>(h.triples.size()) > cap_t) {
    res.status = RecStatus::cap_exceeded;
    res.reason = "hyperedge count exceeds the configured cap";
    return res;
  }
  MiddleState st(h);
  std::vector<int> mids;
  if (!dfs_first_assignment(st, mids)) {
    res.status = RecStatus::refused;
    res.reason = "no choice of middles satisfies the betweenness axioms";
    return res;
  }
  std::vector<std::array<int, 3>> ts;
  for (size_t e = 0; e < h.triples.size(); ++e) {
    auto en = ends_of(h.triples[e], mids[e]);
    ts.push_back({en[0], mids[e], en[1]});
    ts.push_back({en[1], mids[e], en[0]});
  }
  TernaryRelation cert = TernaryRelation::make(h.n, std::move(ts));
  if (!check_axioms(cert).m0_to_m3())
    throw std::logic_error("is_pseudometric: certificate fails the axioms");
  if (!(triples_of(cert) == h)) throw std::logic_error("is_pseudometric: certificate triple mismatch");
  res.status = RecStatus::accepted;
  res.certificate = std::move(cert);
  return res;
}

// --- line maps --------------------------------------------------------------------

int LineMap::pair_rank(int n, int u, int v) { return u * n - u * (u + 1) / 2 + (v - u - 1); }

uint64_t LineMap::at(int u, int v) const {
  if (u > v) std::swap(u, v);
  return sets[pair_rank(n, u, v)];
}

LineMap line_map_of(const Hypergraph3& h) {
  LineMap f;
  f.n = h.n;
  f.sets.resize(static_cast<size_t>(h.n) * (h.n - 1) / 2);
  for (int u = 0; u < h.n; ++u)
    for (int v = u + 1; v < h.n; ++v) f.sets[LineMap::pair_rank(h.n, u, v)] = hyperline_mask(h, u, v);
  return f;
}

LineMapResult recognize_line_map(const LineMap& f) {
  if (f.n < 2 || f.n > kMaxVertices)
    throw std::invalid_argument("line map: vertex count out of range");
  if (f.sets.size() != static_cast<size_t>(f.n) * (f.n - 1) / 2)
    throw std::invalid_argument("line map: not defined on every pair");
  uint64_t universe = LineFamily::vertex_mask_bits(f.n);
  for (int u = 0; u < f.n; ++u)
    for (int v = u + 1; v < f.n; ++v) {
      uint64_t s = f.at(u, v);
      if (s & ~universe) throw std::invalid_argument("line map: member out of range");
      if ((s & ((uint64_t(1) << u) | (uint64_t(1) << v))) !=
          ((uint64_t(1) << u) | (uint64_t(1) << v)))
        throw std::invalid_argument("line map: a set omits one of its own endpoints");
    }
  LineMapResult res;
  for (int u = 0; u < f.n; ++u)
    for (int v = u + 1; v < f.n; ++v)
      for (int w = v + 1; w < f.n; ++w) {
        bool b1 = (f.at(u, v) >> w) & 1;
        bool b2 = (f.at(u, w) >> v) & 1;
        bool b3 = (f.at(v, w) >> u) & 1;
        if (b1 != b2 || b2 != b3) {
          res.ok = false;
          res.reason = "membership disagrees across the three pairs of a triple";
          res.witness = {u, v, w};
          return res;
        }
      }
  std::vector<std::array<int, 3>> ts;
  for (int u = 0; u < f.n; ++u)
    for (int v = u + 1; v < f.n; ++v)
      for (int w = v + 1; w < f.n; ++w)
        if ((f.at(u, v) >> w) & 1) ts.push_back({u, v, w});
  res.h = Hypergraph3::make(f.n, std::move(ts));
  res.ok = true;
  if (line_map_of(res.h).sets != f.sets)
    throw std::logic_error("recognize_line_map: reconstruction mismatch");
  return res;
}

}  // namespace linelab
