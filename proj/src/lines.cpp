#include "linelab/lines.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace linelab {

namespace {

bool between(const MetricSpace& m, int u, int v, int w) {
  if (u == v || v == w || u == w) return false;
  return m.at(u, v) + m.at(v, w) == m.at(u, w);
}

}  // namespace

LineFamily family_from_pair_masks(int n,
                                  const std::vector<std::pair<std::pair<int, int>, uint64_t>>& per_pair) {
  std::map<uint64_t, std::vector<std::pair<int, int>>> by_members;
  for (const auto& [pr, mask] : per_pair) by_members[mask].push_back(pr);
  LineFamily fam;
  fam.n = n;
  for (auto& [mask, gens] : by_members) {
    std::sort(gens.begin(), gens.end());
    fam.lines.push_back(Line{mask, std::move(gens)});
  }
  return fam;
}

int LineFamily::mu() const {
  const uint64_t all = universe();
  int count = 0;
  for (const auto& l : lines)
    if (l.members == all) count += static_cast<int>(l.generators.size());
  return count;
}

bool LineFamily::universal_present() const {
  const uint64_t all = universe();
  for (const auto& l : lines)
    if (l.members == all) return true;
  return false;
}

uint64_t line_mask(const MetricSpace& m, int x, int y) {
  if (x == y) throw std::invalid_argument("line: endpoints must differ");
  uint64_t mask = (uint64_t(1) << x) | (uint64_t(1) << y);
  for (int z = 0; z < m.n; z++) {
    if (z == x || z == y) continue;
    if (between(m, x, z, y) || between(m, z, x, y) || between(m, x, y, z))
      mask |= uint64_t(1) << z;
  }
  return mask;
}

uint64_t line_mask(const TernaryRelation& r, int x, int y) {
  if (x == y) throw std::invalid_argument("line: endpoints must differ");
  uint64_t mask = (uint64_t(1) << x) | (uint64_t(1) << y);
  for (int z = 0; z < r.n; z++) {
    if (z == x || z == y) continue;
    if (r.has(x, z, y) || r.has(z, x, y) || r.has(x, y, z)) mask |= uint64_t(1) << z;
  }
  return mask;
}

uint64_t closure_line_mask(const MetricSpace& m, int x, int y) {
  uint64_t cur = line_mask(m, x, y);
  for (;;) {
    uint64_t next = cur;
    for (int u = 0; u < m.n; u++) {
      if (!(cur >> u & 1)) continue;
      for (int v = u + 1; v < m.n; v++) {
        if (!(cur >> v & 1)) continue;
        next |= line_mask(m, u, v);
      }
    }
    if (next == cur) return cur;
    cur = next;
  }
}

LineFamily line_family(const MetricSpace& m, FamilyMode mode) {
  if (auto bad = metric_check(m)) throw std::invalid_argument("line_family: not a metric space: " + bad->axiom);
  std::vector<std::pair<std::pair<int, int>, uint64_t>> per_pair;
  per_pair.reserve(static_cast<size_t>(m.n) * (m.n - 1) / 2);
  for (int x = 0; x < m.n; x++)
    for (int y = x + 1; y < m.n; y++)
      per_pair.push_back({{x, y}, mode == FamilyMode::lines ? line_mask(m, x, y)
                                                            : closure_line_mask(m, x, y)});
  return family_from_pair_masks(m.n, per_pair);
}

LineFamily line_family(const TernaryRelation& r) {
  std::vector<std::pair<std::pair<int, int>, uint64_t>> per_pair;
  per_pair.reserve(static_cast<size_t>(r.n) * (r.n - 1) / 2);
  for (int x = 0; x < r.n; x++)
    for (int y = x + 1; y < r.n; y++) per_pair.push_back({{x, y}, line_mask(r, x, y)});
  return family_from_pair_masks(r.n, per_pair);
}

LineStats line_stats(const LineFamily& f) {
  LineStats s;
  s.n = f.n;
  s.lambda = f.lambda();
  s.mu = f.mu();
  s.universal = f.universal_present();
  return s;
}

std::pair<uint64_t, uint64_t> interval_and_exterior(const MetricSpace& m, int a, int b) {
  if (a == b) throw std::invalid_argument("interval_and_exterior: endpoints must differ");
  uint64_t in = 0, out = 0;
  for (int z = 0; z < m.n; z++) {
    if (z == a || z == b) continue;
    if (between(m, a, z, b)) in |= uint64_t(1) << z;
    if (between(m, z, a, b) || between(m, a, b, z)) out |= uint64_t(1) << z;
  }
  return {in, out};
}

bool is_parallelogram(const MetricSpace& m, int a, int b, int c, int d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d)
    throw std::invalid_argument("is_parallelogram: vertices must be distinct");
  return m.at(a, b) == m.at(c, d) && m.at(b, c) == m.at(d, a) &&
         m.at(a, c) == m.at(b, d) && m.at(a, c) == m.at(a, b) + m.at(b, c);
}

std::optional<EqualLineCase> classify_equal_line_pair(const MetricSpace& m,
                                                      std::pair<int, int> e,
                                                      std::pair<int, int> f) {
  auto norm = [](std::pair<int, int> p) {
    if (p.first > p.second) std::swap(p.first, p.second);
    return p;
  };
  e = norm(e);
  f = norm(f);
  if (e == f) throw std::invalid_argument("classify_equal_line_pair: pairs must differ");
  if (e.first == e.second || f.first == f.second)
    throw std::invalid_argument("classify_equal_line_pair: pair endpoints must differ");
  if (!recognize_graph_metric(m).ok)
    throw std::invalid_argument("classify_equal_line_pair: requires a graph metric");
  if (line_mask(m, e.first, e.second) != line_mask(m, f.first, f.second)) return std::nullopt;

  auto try_labeling = [&](int a, int b, int c, int d) -> std::optional<EqualLineCase> {
    // the lemma's labelings coincide at most in b = c
    if (a == c || a == d || b == d) return std::nullopt;
    if (b == c) {
      if (between(m, a, b, d))
        return EqualLineCase{EqualLineCase::Kind::chain, {a, b, c, d}};
      return std::nullopt;
    }
    if (between(m, a, b, c) && between(m, b, c, d) && between(m, a, b, d) && between(m, a, c, d))
      return EqualLineCase{EqualLineCase::Kind::chain, {a, b, c, d}};
    if (is_parallelogram(m, a, b, c, d)) {
      auto [iab, oab] = interval_and_exterior(m, a, b);
      auto [icd, ocd] = interval_and_exterior(m, c, d);
      (void)oab;
      (void)ocd;
      if (iab == 0 && icd == 0)
        return EqualLineCase{EqualLineCase::Kind::empty_interval, {a, b, c, d}};
    }
    if (is_parallelogram(m, a, c, b, d)) {
      auto [iab, oab] = interval_and_exterior(m, a, b);
      auto [icd, ocd] = interval_and_exterior(m, c, d);
      (void)iab;
      (void)icd;
      if (oab == 0 && ocd == 0)
        return EqualLineCase{EqualLineCase::Kind::empty_exterior, {a, b, c, d}};
    }
    return std::nullopt;
  };

  const std::array<std::pair<int, int>, 2> pairs = {e, f};
  for (int swap_ef = 0; swap_ef < 2; swap_ef++) {
    auto [p, q] = swap_ef ? std::pair{pairs[1], pairs[0]} : std::pair{pairs[0], pairs[1]};
    for (auto [a, b] : {std::pair{p.first, p.second}, std::pair{p.second, p.first}})
      for (auto [c, d] : {std::pair{q.first, q.second}, std::pair{q.second, q.first}})
        if (auto res = try_labeling(a, b, c, d)) return res;
  }
  return std::nullopt;
}

bool is_geometric_dominant(const MetricSpace& m) {
  LineFamily fam = line_family(m);
  for (size_t i = 0; i < fam.lines.size(); i++)
    for (size_t j = 0; j < fam.lines.size(); j++) {
      if (i == j) continue;
      uint64_t a = fam.lines[i].members, b = fam.lines[j].members;
      if ((a & b) == a && a != b) return false;  // line i strictly inside line j
    }
  return true;
}

}  // namespace linelab
