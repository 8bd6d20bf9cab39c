#include "linelab/equiv.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "linelab/lines.hpp"

namespace linelab {

EdgePartition EdgePartition::make(int n, std::vector<std::vector<std::pair<int, int>>> classes) {
  if (n < 2 || n > kMaxVertices)
    throw std::invalid_argument("edge partition: vertex count out of range");
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  size_t covered = 0;
  for (auto& cls : classes) {
    if (cls.empty()) throw std::invalid_argument("edge partition: empty class");
    for (auto& [u, v] : cls) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n || u == v)
        throw std::invalid_argument("edge partition: bad pair endpoints");
      if (seen[u][v]) throw std::invalid_argument("edge partition: pair listed twice");
      seen[u][v] = true;
      ++covered;
    }
    std::sort(cls.begin(), cls.end());
  }
  if (covered != static_cast<size_t>(n) * (n - 1) / 2)
    throw std::invalid_argument("edge partition: classes do not cover every pair");
  EdgePartition p;
  p.n = n;
  p.classes = std::move(classes);
  return p;
}

EdgePartition EdgePartition::parse_text(const std::string& text) {
  std::vector<std::vector<std::pair<int, int>>> classes;
  std::istringstream in(text);
  std::string line;
  int maxv = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string label;
    if (!(ls >> label) || label.back() != ':')
      throw std::invalid_argument("partition line " + std::to_string(lineno) +
                                  ": expected \"i:\" label");
    int idx;
    try {
      idx = std::stoi(label.substr(0, label.size() - 1));
    } catch (...) {
      throw std::invalid_argument("partition line " + std::to_string(lineno) +
                                  ": non-numeric class label");
    }
    if (idx != static_cast<int>(classes.size()) + 1)
      throw std::invalid_argument("partition line " + std::to_string(lineno) +
                                  ": class labels must run 1,2,...");
    std::vector<std::pair<int, int>> cls;
    std::string tok;
    while (ls >> tok) {
      auto dash = tok.find('-');
      if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
        throw std::invalid_argument("partition line " + std::to_string(lineno) +
                                    ": expected pair \"u-v\", got \"" + tok + "\"");
      int u, v;
      try {
        u = std::stoi(tok.substr(0, dash));
        v = std::stoi(tok.substr(dash + 1));
      } catch (...) {
        throw std::invalid_argument("partition line " + std::to_string(lineno) +
                                    ": non-numeric vertex in \"" + tok + "\"");
      }
      if (u < 1 || v < 1)
        throw std::invalid_argument("partition line " + std::to_string(lineno) +
                                    ": vertices are 1-indexed");
      maxv = std::max({maxv, u, v});
      cls.push_back({u - 1, v - 1});
    }
    if (cls.empty())
      throw std::invalid_argument("partition line " + std::to_string(lineno) + ": empty class");
    classes.push_back(std::move(cls));
  }
  if (classes.empty()) throw std::invalid_argument("partition: no classes");
  return make(maxv, std::move(classes));
}

EdgePartition line_equivalence(const MetricSpace& m) {
  std::map<uint64_t, int> cls_of_mask;
  std::vector<std::vector<std::pair<int, int>>> classes;
  for (int u = 0; u < m.n; ++u)
    for (int v = u + 1; v < m.n; ++v) {
      uint64_t mask = line_mask(m, u, v);
      auto [it, fresh] = cls_of_mask.insert({mask, static_cast<int>(classes.size())});
      if (fresh) classes.push_back({});
      classes[it->second].push_back({u, v});
    }
  return EdgePartition::make(m.n, std::move(classes));
}

namespace {

// Least fixed point of the growth rule, swept in lexicographic (i,u,v,w)
// order until stable.
std::vector<uint64_t> grow_sets(const EdgePartition& p) {
  int n = p.n;
  int m = static_cast<int>(p.classes.size());
  std::vector<int> cls(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < m; ++i)
    for (auto [u, v] : p.classes[i]) {
      cls[static_cast<size_t>(u) * n + v] = i;
      cls[static_cast<size_t>(v) * n + u] = i;
    }
  std::vector<uint64_t> L(m, 0);
  for (int i = 0; i < m; ++i)
    for (auto [u, v] : p.classes[i]) L[i] |= (uint64_t(1) << u) | (uint64_t(1) << v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < m; ++i)
      for (auto [a, b] : p.classes[i])
        for (int ori = 0; ori < 2; ++ori) {
          int u = ori ? b : a, v = ori ? a : b;
          for (int w = 0; w < n; ++w) {
            if (w == u || w == v || ((L[i] >> w) & 1)) continue;
            int j = cls[static_cast<size_t>(v) * n + w];
            if ((L[j] >> u) & 1) {
              L[i] |= uint64_t(1) << w;
              changed = true;
            }
          }
        }
  }
  return L;
}

bool two_full(const std::vector<uint64_t>& L, uint64_t full) {
  int cnt = 0;
  for (uint64_t s : L) cnt += s == full;
  return cnt >= 2;
}

}  // namespace

EquivResult equiv_graph(const EdgePartition& p) {
  EquivResult r;
  r.closure = grow_sets(p);
  uint64_t full = LineFamily::vertex_mask_bits(p.n);
  r.verdict = two_full(r.closure, full) ? EquivVerdict::reject : EquivVerdict::dont_know;
  return r;
}

EquivResult equiv_hypergraph(const EdgePartition& p) {
  EquivResult r;
  r.closure = grow_sets(p);
  std::vector<uint64_t> sorted = r.closure;
  std::sort(sorted.begin(), sorted.end());
  bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (distinct) {
    r.verdict = EquivVerdict::accept;
    std::vector<std::array<int, 3>> ts;
    for (size_t i = 0; i < p.classes.size(); ++i)
      for (auto [u, v] : p.classes[i])
        for (int w = 0; w < p.n; ++w)
          if (w != u && w != v && ((r.closure[i] >> w) & 1)) ts.push_back({u, v, w});
    r.h = Hypergraph3::make(p.n, std::move(ts));
    return r;
  }
  uint64_t full = LineFamily::vertex_mask_bits(p.n);
  r.verdict = two_full(r.closure, full) ? EquivVerdict::reject : EquivVerdict::dont_know;
  return r;
}

std::string render_equiv(const EquivResult& r, const EdgePartition& p, bool hypergraph_level) {
  std::ostringstream out;
  switch (r.verdict) {
    case EquivVerdict::accept:
      out << "ACCEPT\n";
      break;
    case EquivVerdict::reject:
      out << "REJECT: Does not arise from any " << (hypergraph_level ? "hypergraph" : "graph")
          << "\n";
      break;
    case EquivVerdict::dont_know:
      out << "DON'T KNOW\n";
      break;
  }
  if (r.verdict == EquivVerdict::accept && hypergraph_level) {
    out << "T = {";
    for (size_t t = 0; t < r.h.triples.size(); ++t) {
      const auto& tr = r.h.triples[t];
      out << (t ? "," : "") << "{" << tr[0] + 1 << "," << tr[1] + 1 << "," << tr[2] + 1 << "}";
    }
    out << "}\n";
  }
  for (size_t i = 0; i < r.closure.size(); ++i) {
    out << "L" << i + 1 << " = {";
    bool first = true;
    for (int v = 0; v < p.n; ++v)
      if ((r.closure[i] >> v) & 1) {
        out << (first ? "" : ",") << v + 1;
        first = false;
      }
    out << "}\n";
  }
  return out.str();
}

}  // namespace linelab
