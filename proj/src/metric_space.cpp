#include "linelab/metric_space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "linelab/lp.hpp"

namespace linelab {

std::optional<MetricViolation> metric_check(const MetricSpace& m) {
  // spaces have at least two points by convention
  if (m.n < 2 || m.d.size() != static_cast<size_t>(m.n) * m.n)
    return MetricViolation{"shape", {}};
  for (int i = 0; i < m.n; i++)
    if (sgn(m.at(i, i)) != 0) return MetricViolation{"zero-diagonal", {i}};
  for (int i = 0; i < m.n; i++)
    for (int j = i + 1; j < m.n; j++) {
      if (m.at(i, j) != m.at(j, i)) return MetricViolation{"symmetry", {i, j}};
      if (sgn(m.at(i, j)) <= 0) return MetricViolation{"positivity", {i, j}};
    }
  for (int i = 0; i < m.n; i++)
    for (int j = 0; j < m.n; j++)
      for (int k = 0; k < m.n; k++)
        if (m.at(i, k) > m.at(i, j) + m.at(j, k))
          return MetricViolation{"triangle", {i, j, k}};
  return std::nullopt;
}

MetricSpace metric_from_graph(const Graph& g) {
  if (g.n < 2) throw std::invalid_argument("metric_from_graph: need at least two vertices");
  std::vector<uint8_t> dist(static_cast<size_t>(g.n) * g.n);
  bfs_all_pairs(g, dist.data());
  MetricSpace m(g.n);
  for (int i = 0; i < g.n; i++)
    for (int j = 0; j < g.n; j++) m.at(i, j) = Rat(static_cast<int>(dist[static_cast<size_t>(i) * g.n + j]));
  return m;
}

TernaryRelation TernaryRelation::make(int n, std::vector<std::array<int, 3>> ts) {
  if (n < 0) throw std::invalid_argument("ternary relation: negative point count");
  for (const auto& t : ts) {
    for (int x : t)
      if (x < 0 || x >= n) throw std::invalid_argument("ternary relation: point out of range");
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw std::invalid_argument("ternary relation: triple entries must be pairwise distinct");
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  TernaryRelation r;
  r.n = n;
  r.triples = std::move(ts);
  r.cube.assign(static_cast<size_t>(n) * n * n, false);
  for (const auto& t : r.triples)
    r.cube[(static_cast<size_t>(t[0]) * n + t[1]) * n + t[2]] = true;
  return r;
}

TernaryRelation betweenness_of(const MetricSpace& m) {
  std::vector<std::array<int, 3>> ts;
  for (int u = 0; u < m.n; u++)
    for (int v = 0; v < m.n; v++) {
      if (v == u) continue;
      for (int w = 0; w < m.n; w++) {
        if (w == u || w == v) continue;
        if (m.at(u, v) + m.at(v, w) == m.at(u, w)) ts.push_back({u, v, w});
      }
    }
  return TernaryRelation::make(m.n, std::move(ts));
}

bool AxiomReport::all() const {
  for (bool h : holds)
    if (!h) return false;
  return true;
}

AxiomReport check_axioms(const TernaryRelation& r) {
  AxiomReport rep;
  auto fail = [&](int ax, std::vector<int> w) {
    if (rep.holds[ax]) {
      rep.holds[ax] = false;
      rep.witness[ax] = std::move(w);
    }
  };
  const int n = r.n;
  for (const auto& t : r.triples) {
    auto [u, v, w] = t;
    if (u == v || v == w || u == w) fail(0, {u, v, w});
    if (!r.has(w, v, u)) fail(1, {u, v, w});
    if (r.has(u, w, v)) fail(2, {u, v, w});
    for (int x = 0; x < n; x++) {
      if (r.has(u, w, x) && !(r.has(u, v, x) && r.has(v, w, x))) fail(3, {u, v, w, x});
      if (r.has(v, w, x) && !(r.has(u, v, x) && r.has(u, w, x))) fail(4, {u, v, w, x});
    }
  }
  // m5: premises share the head pair (u,v); w < x avoids double checks since
  // the disjunction is symmetric under swapping w and x.
  for (const auto& t : r.triples) {
    auto [u, v, w] = t;
    for (int x = w + 1; x < n; x++) {
      if (r.has(u, v, x)) {
        bool first = r.has(u, w, x) && r.has(v, w, x);
        bool second = r.has(u, x, w) && r.has(v, x, w);
        if (!first && !second) fail(5, {u, v, w, x});
      }
    }
  }
  // m6: premises (u,v,x) and (u,w,x) share the outer pair; v < w likewise.
  for (int u = 0; u < n; u++)
    for (int x = 0; x < n; x++) {
      if (x == u) continue;
      for (int v = 0; v < n; v++) {
        if (v == u || v == x || !r.has(u, v, x)) continue;
        for (int w = v + 1; w < n; w++) {
          if (w == u || w == x || !r.has(u, w, x)) continue;
          bool first = r.has(u, v, w) && r.has(v, w, x);
          bool second = r.has(u, w, v) && r.has(w, v, x);
          if (!first && !second) fail(6, {u, v, x, w});
        }
      }
    }
  return rep;
}

// --- embeddings ---------------------------------------------------------------

MetricSpace l1_plane_metric(const std::vector<std::pair<Rat, Rat>>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 2) throw std::invalid_argument("l1_plane_metric: need at least two points");
  MetricSpace m(n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      if (i == j) continue;
      Rat dx = pts[i].first - pts[j].first;
      Rat dy = pts[i].second - pts[j].second;
      m.at(i, j) = abs(dx) + abs(dy);
      if (i < j && sgn(m.at(i, j)) == 0)
        throw std::invalid_argument("l1_plane_metric: duplicate points");
    }
  return m;
}

bool l1_plane_nondegenerate(const std::vector<std::pair<Rat, Rat>>& pts) {
  std::set<Rat> xs, ys;
  for (const auto& p : pts) {
    xs.insert(p.first);
    ys.insert(p.second);
  }
  return xs.size() == pts.size() && ys.size() == pts.size();
}

std::vector<std::vector<Rat>> linf_embedding(const MetricSpace& m) {
  std::vector<std::vector<Rat>> rows(m.n, std::vector<Rat>(m.n));
  for (int i = 0; i < m.n; i++)
    for (int j = 0; j < m.n; j++) rows[i][j] = m.at(i, j);
  return rows;
}

std::vector<std::vector<int>> unary_embedding(const std::vector<std::vector<int>>& pts, int k) {
  if (k < 0) throw std::invalid_argument("unary_embedding: negative bound");
  std::vector<std::vector<int>> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    std::vector<int> row;
    row.reserve(p.size() * static_cast<size_t>(k));
    for (int x : p) {
      if (x < 0 || x > k) throw std::invalid_argument("unary_embedding: coordinate out of [0,k]");
      for (int t = 0; t < k; t++) row.push_back(t < x ? 1 : 0);
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::pair<Rat, Rat> rotate_l1_to_linf(const std::pair<Rat, Rat>& p) {
  return {p.first + p.second, p.first - p.second};
}

// --- recognition --------------------------------------------------------------

GraphMetricResult recognize_graph_metric(const MetricSpace& m) {
  GraphMetricResult res;
  if (auto bad = metric_check(m)) {
    res.reason = "not a metric space: " + bad->axiom;
    res.witness = bad->witness;
    return res;
  }
  Graph g(m.n);
  for (int i = 0; i < m.n; i++)
    for (int j = i + 1; j < m.n; j++)
      if (m.at(i, j) == Rat(1)) g.add_edge(i, j);
  if (m.n > 1 && !is_connected(g)) {
    res.reason = "unit-distance graph is disconnected";
    return res;
  }
  MetricSpace back = metric_from_graph(g);
  for (int i = 0; i < m.n; i++)
    for (int j = i + 1; j < m.n; j++)
      if (back.at(i, j) != m.at(i, j)) {
        res.reason = "shortest-path distance of the unit-distance graph disagrees: d(" +
                     std::to_string(i) + "," + std::to_string(j) + ") = " + rat_str(m.at(i, j)) +
                     " but the graph gives " + rat_str(back.at(i, j));
        res.witness = {i, j};
        return res;
      }
  res.ok = true;
  res.g = g;
  return res;
}

GraphBetweennessResult recognize_graph_betweenness(const TernaryRelation& r) {
  GraphBetweennessResult res;
  const int n = r.n;
  if (n < 2) {
    res.reason = "fewer than two points";
    return res;
  }
  Graph g(n);
  for (int u = 0; u < n; u++)
    for (int w = u + 1; w < n; w++) {
      bool middle = false;
      for (int v = 0; v < n && !middle; v++)
        if (v != u && v != w && r.has(u, v, w)) middle = true;
      if (!middle) g.add_edge(u, w);
    }
  if (!is_connected(g)) {
    res.reason = "candidate graph (pairs with nothing between) is disconnected";
    return res;
  }
  TernaryRelation back = betweenness_of(metric_from_graph(g));
  if (!(back == r)) {
    // report the first differing triple
    std::vector<int> w;
    for (const auto& t : r.triples)
      if (!back.has(t[0], t[1], t[2])) {
        w = {t[0], t[1], t[2]};
        break;
      }
    if (w.empty())
      for (const auto& t : back.triples)
        if (!r.has(t[0], t[1], t[2])) {
          w = {t[0], t[1], t[2]};
          break;
        }
    res.reason = "betweenness of the candidate graph disagrees on a triple";
    res.witness = w;
    return res;
  }
  res.ok = true;
  res.g = g;
  return res;
}

MetricBetweennessResult recognize_metric_betweenness(const TernaryRelation& r, int cap) {
  MetricBetweennessResult res;
  if (r.n < 2) {
    res.status = MetricBetweennessResult::Status::refused;
    res.reason = "fewer than two points";
    return res;
  }
  if (r.n > cap) {
    res.status = MetricBetweennessResult::Status::cap_exceeded;
    res.reason = "point count " + std::to_string(r.n) + " exceeds cap " + std::to_string(cap);
    return res;
  }
  AxiomReport ax = check_axioms(r);
  for (int a = 0; a <= 3; a++)
    if (!ax.holds[a]) {
      res.status = MetricBetweennessResult::Status::refused;
      res.reason = "axiom m" + std::to_string(a) + " fails";
      res.witness = ax.witness[a];
      return res;
    }

  const int n = r.n;
  auto pidx = [n](int i, int j) {  // i < j
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  LinearSystem sys;
  sys.nvars = n * (n - 1) / 2;
  auto triangle_row = [&](int u, int v, int w) {
    // d(u,v) + d(v,w) - d(u,w)
    std::vector<Rat> row(sys.nvars, Rat(0));
    row[pidx(std::min(u, v), std::max(u, v))] += 1;
    row[pidx(std::min(v, w), std::max(v, w))] += 1;
    row[pidx(std::min(u, w), std::max(u, w))] -= 1;
    return row;
  };
  for (int u = 0; u < n; u++)
    for (int w = u + 1; w < n; w++)
      for (int v = 0; v < n; v++) {
        if (v == u || v == w) continue;
        if (r.has(u, v, w))
          sys.add_eq(triangle_row(u, v, w), Rat(0));
        else
          sys.add_ge(triangle_row(u, v, w), Rat(1));
      }
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      std::vector<Rat> row(sys.nvars, Rat(0));
      row[pidx(i, j)] = 1;
      sys.add_ge(std::move(row), Rat(1));
    }

  auto sol = lp_feasible_point(sys);
  if (!sol) {
    res.status = MetricBetweennessResult::Status::refused;
    res.reason = "no metric space has this betweenness";
    return res;
  }
  MetricSpace cert(n);
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) cert.at(i, j) = cert.at(j, i) = (*sol)[pidx(i, j)];
  if (metric_check(cert) || !(betweenness_of(cert) == r))
    throw std::logic_error("metric betweenness certificate failed re-verification");
  res.status = MetricBetweennessResult::Status::accepted;
  res.certificate = std::move(cert);
  return res;
}

}  // namespace linelab
