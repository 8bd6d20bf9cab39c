#include "linelab/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "linelab/canon.hpp"
#include "linelab/enumerate.hpp"
#include "linelab/graph6.hpp"
#include "linelab/kernel.hpp"

namespace linelab {

namespace {

using nlohmann::json;

struct Partial {
  long long scanned = 0;
  std::vector<std::string> dbe_v, mighty_v, adj_v;
  int min_lambda = -1;
  std::vector<std::string> mins;
  long long min_count = 0;
  long long dominant = 0;
};

void compact_minimizers(std::vector<std::string>& mins) {
  if (mins.size() <= 2 * static_cast<size_t>(kMinimizerCap)) return;
  std::sort(mins.begin(), mins.end());
  mins.resize(kMinimizerCap);
}

void process_graph(const Graph& g, const ScanChecks& checks, bool reference, Partial& p) {
  ++p.scanned;
  // The line-count inequalities are statements about spaces with at least two
  // points; the one-vertex graph has no pairs and nothing to check.
  if (g.n < 2) return;
  KernelStats ks =
      reference ? graph_kernel_stats_reference(g, checks.dominant) : graph_kernel_stats(g, checks.dominant);
  const LineStats& st = ks.stats;
  if (checks.dbe && !st.dbe()) p.dbe_v.push_back(graph6_write(g));
  if (checks.mighty) {
    if (!st.mighty_sum()) p.mighty_v.push_back(graph6_write(g));
    if (ks.diameter <= 2 && g.n >= 3 && !st.mighty_sum_adjusted())
      p.adj_v.push_back(graph6_write(g));
  }
  if (checks.min_lines && !st.universal) {
    if (p.min_lambda < 0 || st.lambda < p.min_lambda) {
      p.min_lambda = st.lambda;
      p.mins.clear();
      p.min_count = 0;
    }
    if (st.lambda == p.min_lambda) {
      ++p.min_count;
      p.mins.push_back(graph6_write(g));
      compact_minimizers(p.mins);
    }
  }
  if (checks.dominant && ks.dominant) ++p.dominant;
}

void merge_partial(Partial& acc, Partial&& p) {
  acc.scanned += p.scanned;
  auto append = [](std::vector<std::string>& a, std::vector<std::string>& b) {
    a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  };
  append(acc.dbe_v, p.dbe_v);
  append(acc.mighty_v, p.mighty_v);
  append(acc.adj_v, p.adj_v);
  acc.dominant += p.dominant;
  if (p.min_lambda >= 0) {
    if (acc.min_lambda < 0 || p.min_lambda < acc.min_lambda) {
      acc.min_lambda = p.min_lambda;
      acc.mins = std::move(p.mins);
      acc.min_count = p.min_count;
    } else if (p.min_lambda == acc.min_lambda) {
      append(acc.mins, p.mins);
      acc.min_count += p.min_count;
      compact_minimizers(acc.mins);
    }
  }
}

ScanReport finalize(int n, Partial&& acc, double seconds) {
  ScanReport r;
  r.n = n;
  r.instances_scanned = acc.scanned;
  r.dbe_violations = std::move(acc.dbe_v);
  r.mighty_violations = std::move(acc.mighty_v);
  r.mighty_adjusted_violations = std::move(acc.adj_v);
  r.min_lambda_no_universal = acc.min_lambda;
  std::sort(acc.mins.begin(), acc.mins.end());
  if (acc.mins.size() > static_cast<size_t>(kMinimizerCap)) acc.mins.resize(kMinimizerCap);
  r.minimizers = std::move(acc.mins);
  r.minimizer_count = acc.min_count;
  r.dominant_count = acc.dominant;
  r.runtime_seconds = seconds;
  return r;
}

json partial_to_json(const Partial& p) {
  return json{{"scanned", p.scanned}, {"dbe", p.dbe_v},        {"mighty", p.mighty_v},
              {"adjusted", p.adj_v},  {"min_lambda", p.min_lambda}, {"mins", p.mins},
              {"min_count", p.min_count}, {"dominant", p.dominant}};
}

Partial partial_from_json(const json& j) {
  Partial p;
  p.scanned = j.at("scanned").get<long long>();
  p.dbe_v = j.at("dbe").get<std::vector<std::string>>();
  p.mighty_v = j.at("mighty").get<std::vector<std::string>>();
  p.adj_v = j.at("adjusted").get<std::vector<std::string>>();
  p.min_lambda = j.at("min_lambda").get<int>();
  p.mins = j.at("mins").get<std::vector<std::string>>();
  p.min_count = j.at("min_count").get<long long>();
  p.dominant = j.at("dominant").get<long long>();
  return p;
}

void write_checkpoint(const std::string& path, const json& j) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << j.dump();
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move checkpoint into place at " + path);
}

int effective_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

}  // namespace

bool scan_found_violations(const ScanReport& r) {
  return !r.dbe_violations.empty() || !r.mighty_violations.empty() ||
         !r.mighty_adjusted_violations.empty();
}

ScanReport scan_internal(int n, const ScanChecks& checks, int jobs, const std::string& checkpoint_path,
                         int cap, int block_size, long long max_blocks) {
  auto t0 = std::chrono::steady_clock::now();
  if (n < 1) throw std::invalid_argument("scan: need at least one vertex");
  if (n > cap) throw std::invalid_argument("scan: vertex count exceeds the cap");
  if (block_size < 1) throw std::invalid_argument("scan: block size must be positive");
  Partial acc;
  if (n == 1) {
    process_graph(Graph(1), checks, false, acc);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return finalize(n, std::move(acc), secs);
  }
  std::vector<uint64_t> parents = connected_codes(n - 1, std::max(cap - 1, n - 1));
  long long nblocks = (static_cast<long long>(parents.size()) + block_size - 1) / block_size;
  long long next_block = 0;
  std::array<bool, 4> checkbits{checks.dbe, checks.mighty, checks.min_lines, checks.dominant};

  if (!checkpoint_path.empty()) {
    std::ifstream in(checkpoint_path);
    if (in) {
      json j;
      try {
        in >> j;
      } catch (...) {
        throw std::runtime_error("checkpoint " + checkpoint_path + " is not valid JSON");
      }
      if (j.value("kind", "") != "scan" || j.value("n", -1) != n ||
          j.value("block_size", -1) != block_size ||
          j.value("checks", std::array<bool, 4>{}) != checkbits)
        throw std::runtime_error("checkpoint " + checkpoint_path + " does not match this scan");
      next_block = j.at("next_block").get<long long>();
      acc = partial_from_json(j.at("partial"));
    }
  }

  int t = effective_jobs(jobs);
  long long done = 0;
  for (long long b = next_block; b < nblocks; ++b) {
    if (max_blocks >= 0 && done >= max_blocks) break;
    ++done;
    size_t lo = static_cast<size_t>(b) * block_size;
    size_t hi = std::min(parents.size(), lo + block_size);
    std::vector<Partial> slots(hi - lo);
#pragma omp parallel for schedule(dynamic) num_threads(t)
    for (long long i = 0; i < static_cast<long long>(hi - lo); ++i) {
      Graph p = graph_from_code(n - 1, parents[lo + i]);
      visit_children(p, [&](const Graph& c) { process_graph(c, checks, false, slots[i]); });
    }
    for (auto& s : slots) merge_partial(acc, std::move(s));
    if (!checkpoint_path.empty()) {
      json j{{"kind", "scan"}, {"n", n},          {"block_size", block_size},
             {"checks", checkbits}, {"blocks", nblocks}, {"next_block", b + 1},
             {"partial", partial_to_json(acc)}};
      write_checkpoint(checkpoint_path, j);
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finalize(n, std::move(acc), secs);
}

ScanReport scan_stream(std::istream& in, const ScanChecks& checks, int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  constexpr size_t kChunk = 16384;
  Partial acc;
  int expect_n = -1;
  int t = effective_jobs(jobs);
  std::vector<std::pair<long long, std::string>> lines;
  lines.reserve(kChunk);

  auto flush = [&]() {
    if (lines.empty()) return;
    std::vector<Partial> slots(lines.size());
    std::vector<std::string> errs(lines.size());
    std::vector<int> seen_n(lines.size(), -1);
#pragma omp parallel for schedule(dynamic) num_threads(t)
    for (long long i = 0; i < static_cast<long long>(lines.size()); ++i) {
      try {
        Graph g = graph6_parse(lines[i].second);
        seen_n[i] = g.n;
        if (is_connected(g)) process_graph(g, checks, false, slots[i]);
      } catch (const std::exception& e) {
        errs[i] = "graph6 line " + std::to_string(lines[i].first) + ": " + e.what();
      }
    }
    for (size_t i = 0; i < lines.size(); ++i) {
      if (!errs[i].empty()) throw std::runtime_error(errs[i]);
      if (seen_n[i] >= 0) {
        if (expect_n < 0) expect_n = seen_n[i];
        if (seen_n[i] != expect_n)
          throw std::runtime_error("graph6 line " + std::to_string(lines[i].first) +
                                   ": vertex count " + std::to_string(seen_n[i]) +
                                   " differs from the scan's " + std::to_string(expect_n));
      }
      merge_partial(acc, std::move(slots[i]));
    }
    lines.clear();
  };

  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back({line_no, line});
    if (lines.size() >= kChunk) flush();
  }
  flush();
  if (expect_n < 0) throw std::runtime_error("graph6 stream: no records");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finalize(expect_n, std::move(acc), secs);
}

ScanReport scan_reference(int n, const ScanChecks& checks, int cap) {
  auto t0 = std::chrono::steady_clock::now();
  Partial acc;
  enumerate_connected(n, [&](const Graph& g) { process_graph(g, checks, true, acc); }, cap);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finalize(n, std::move(acc), secs);
}

// --- complete multipartite minimum ----------------------------------------------

MultipartiteF multipartite_f(int n) {
  if (n < 3) throw std::invalid_argument("multipartite_f: need n >= 3");
  const long long kInf = LLONG_MAX / 4;
  auto c2 = [](long long p) { return p * (p - 1) / 2; };
  // dp[k][r]: least sum of C(p,2) over k part sizes from {1,3,4,...} summing to r
  std::vector<std::vector<long long>> dp(n + 1, std::vector<long long>(n + 1, kInf));
  dp[0][0] = 0;
  for (int k = 1; k <= n; ++k)
    for (int r = 0; r <= n; ++r)
      for (int p = 1; p <= r; ++p) {
        if (p == 2) continue;
        if (dp[k - 1][r - p] == kInf) continue;
        dp[k][r] = std::min(dp[k][r], dp[k - 1][r - p] + c2(p));
      }
  MultipartiteF out;
  long long best = kInf;
  for (int k = 3; k <= n; ++k)
    if (dp[k][n] < kInf) best = std::min(best, c2(k) + dp[k][n]);
  out.value = best;

  // all optimal partitions: nonincreasing parts, pruned by the unconstrained dp
  std::vector<int> cur;
  std::vector<std::vector<int>> optima;
  auto dfs = [&](auto&& self, int k_left, int r_left, int maxpart, long long cost,
                 long long target) -> void {
    if (k_left == 0) {
      if (r_left == 0 && cost == target) {
        std::vector<int> parts(cur.rbegin(), cur.rend());
        optima.push_back(parts);
      }
      return;
    }
    for (int p = std::min(maxpart, r_left - (k_left - 1)); p >= 1; --p) {
      if (p == 2) continue;
      if (static_cast<long long>(p) * (k_left - 1) < r_left - p) continue;  // rest can't reach
      long long ncost = cost + c2(p);
      if (ncost > target) continue;
      if (dp[k_left - 1][r_left - p] == kInf) continue;
      if (ncost + dp[k_left - 1][r_left - p] > target) continue;
      cur.push_back(p);
      self(self, k_left - 1, r_left - p, p, ncost, target);
      cur.pop_back();
    }
  };
  for (int k = 3; k <= n; ++k) {
    if (dp[k][n] == kInf || c2(k) + dp[k][n] != best) continue;
    dfs(dfs, k, n, n, c2(k), best);
  }
  std::sort(optima.begin(), optima.end());
  optima.erase(std::unique(optima.begin(), optima.end()), optima.end());
  out.optima = std::move(optima);
  return out;
}

MinimaRow minima_row(const ScanReport& rep) {
  MinimaRow row;
  row.n = rep.n;
  row.min_lambda_no_universal = rep.min_lambda_no_universal;
  row.minimizers = rep.minimizers;
  row.minimizer_count = rep.minimizer_count;
  if (rep.n >= 3) row.f_value = multipartite_f(rep.n).value;
  for (const auto& g6 : rep.minimizers) {
    Graph g = graph6_parse(g6);
    if (!is_complete_multipartite(g)) row.exceptions.push_back(g6);
  }
  row.all_minimizers_multipartite = row.exceptions.empty();
  return row;
}

// --- line-family realizability ----------------------------------------------------

namespace {

// Distinct sorted member masks of a graph's lines, for exact-set comparison.
std::vector<uint64_t> graph_line_masks(const Graph& g, std::vector<uint8_t>& dist) {
  int n = g.n;
  bfs_all_pairs(g, dist.data());
  auto d = [&](int a, int b) { return dist[static_cast<size_t>(a) * n + b]; };
  std::vector<uint64_t> masks;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      uint64_t m = (uint64_t(1) << x) | (uint64_t(1) << y);
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        int xz = d(x, z), zy = d(z, y), xy = d(x, y);
        if (xz + zy == xy || xy + zy == xz || xz + xy == zy) m |= uint64_t(1) << z;
      }
      masks.push_back(m);
    }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

}  // namespace

FamilySearchResult line_family_search(int n, const std::vector<uint64_t>& target,
                                      SearchLevel level) {
  FamilySearchResult res;
  res.level = level;
  int cap = level == SearchLevel::graph ? 7 : 6;
  if (n < 2) {
    res.status = RecStatus::refused;
    res.reason = "fewer than two vertices";
    return res;
  }
  if (n > cap) {
    res.status = RecStatus::cap_exceeded;
    res.reason = "vertex count exceeds the level's cap";
    return res;
  }
  uint64_t universe = LineFamily::vertex_mask_bits(n);
  std::vector<uint64_t> tset = target;
  for (uint64_t m : tset)
    if (m & ~universe) throw std::invalid_argument("line-family search: member out of range");
  std::sort(tset.begin(), tset.end());
  tset.erase(std::unique(tset.begin(), tset.end()), tset.end());

  // Every pair must lie inside some target line (its own line contains it).
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      uint64_t pairbits = (uint64_t(1) << u) | (uint64_t(1) << v);
      bool covered = false;
      for (uint64_t m : tset) covered |= (m & pairbits) == pairbits;
      if (!covered) {
        res.status = RecStatus::refused;
        res.reason = "the pair {" + std::to_string(u) + "," + std::to_string(v) +
                     "} lies in no candidate line";
        return res;
      }
    }

  if (level == SearchLevel::graph) {
    int np = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::vector<uint8_t> dist(static_cast<size_t>(n) * n);
    for (uint64_t em = 0; em < (uint64_t(1) << np); ++em) {
      Graph g(n);
      for (int p = 0; p < np; ++p)
        if ((em >> p) & 1) g.add_edge(pairs[p].first, pairs[p].second);
      if (!is_connected(g)) continue;
      if (graph_line_masks(g, dist) == tset) {
        res.status = RecStatus::accepted;
        res.g = g;
        return res;
      }
    }
    res.status = RecStatus::refused;
    res.reason = "no connected graph on these vertices has exactly this line set";
    return res;
  }

  // Hypergraph-shaped levels: iterate triple sets; compare hyperline masks.
  std::vector<std::array<int, 3>> all_triples;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) all_triples.push_back({a, b, c});
  int nt = static_cast<int>(all_triples.size());
  int npairs = n * (n - 1) / 2;
  // per pair: (triple index, third vertex)
  std::vector<std::vector<std::pair<int, int>>> pair_triples(npairs);
  auto prank = [n](int u, int v) { return u * n - u * (u + 1) / 2 + (v - u - 1); };
  for (int ti = 0; ti < nt; ++ti) {
    auto [a, b, c] = all_triples[ti];
    pair_triples[prank(a, b)].push_back({ti, c});
    pair_triples[prank(a, c)].push_back({ti, b});
    pair_triples[prank(b, c)].push_back({ti, a});
  }
  bool saw_cap = false;
  std::vector<uint64_t> masks;
  for (uint64_t tm = 0; tm < (uint64_t(1) << nt); ++tm) {
    masks.clear();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        uint64_t m = (uint64_t(1) << u) | (uint64_t(1) << v);
        for (auto [ti, w] : pair_triples[prank(u, v)])
          if ((tm >> ti) & 1) m |= uint64_t(1) << w;
        masks.push_back(m);
      }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    if (masks != tset) continue;
    std::vector<std::array<int, 3>> ts;
    for (int ti = 0; ti < nt; ++ti)
      if ((tm >> ti) & 1) ts.push_back(all_triples[ti]);
    Hypergraph3 h = Hypergraph3::make(n, std::move(ts));
    if (level == SearchLevel::hypergraph) {
      res.status = RecStatus::accepted;
      res.h = h;
      return res;
    }
    if (level == SearchLevel::betweenness) {
      auto pr = is_pseudometric(h);
      if (pr.status == RecStatus::accepted) {
        res.status = RecStatus::accepted;
        res.h = h;
        res.r = pr.certificate;
        return res;
      }
      if (pr.status == RecStatus::cap_exceeded) saw_cap = true;
      continue;
    }
    // metric level
    auto pr = is_pseudometric(h);
    if (pr.status == RecStatus::refused) continue;
    if (pr.status == RecStatus::cap_exceeded) {
      saw_cap = true;
      continue;
    }
    auto mr = is_metric(h);
    if (mr.status == RecStatus::accepted) {
      res.status = RecStatus::accepted;
      res.h = h;
      res.ms = mr.certificate;
      return res;
    }
    if (mr.status == RecStatus::cap_exceeded) saw_cap = true;
  }
  if (saw_cap) {
    res.status = RecStatus::cap_exceeded;
    res.reason = "a matching candidate exceeded a recognition cap";
  } else {
    res.status = RecStatus::refused;
    res.reason = "no instance at this level has exactly this line set";
  }
  return res;
}

}  // namespace linelab
