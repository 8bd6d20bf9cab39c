#include "linelab/kernel.hpp"

#include <algorithm>
#include <vector>

#include "linelab/metric_space.hpp"

namespace linelab {

namespace {

bool masks_dominant(const std::vector<uint64_t>& uniq) {
  for (size_t i = 0; i < uniq.size(); ++i)
    for (size_t j = 0; j < uniq.size(); ++j) {
      if (i == j) continue;
      if ((uniq[i] & uniq[j]) == uniq[i] && uniq[i] != uniq[j]) return false;
    }
  return true;
}

}  // namespace

KernelStats graph_kernel_stats(const Graph& g, bool with_dominant) {
  KernelStats out;
  int n = g.n;
  std::vector<uint8_t> dist(static_cast<size_t>(n) * n);
  out.diameter = bfs_all_pairs(g, dist.data());
  auto d = [&](int a, int b) { return dist[static_cast<size_t>(a) * n + b]; };
  uint64_t full = LineFamily::vertex_mask_bits(n);
  std::vector<uint64_t> masks;
  masks.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  int mu = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      uint64_t m = (uint64_t(1) << x) | (uint64_t(1) << y);
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        int xz = d(x, z), zy = d(z, y), xy = d(x, y);
        if (xz + zy == xy || xy + zy == xz || xz + xy == zy) m |= uint64_t(1) << z;
      }
      if (m == full) ++mu;
      masks.push_back(m);
    }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  out.stats.n = n;
  out.stats.lambda = static_cast<int>(masks.size());
  out.stats.mu = mu;
  out.stats.universal = !masks.empty() && masks.back() == full;
  if (with_dominant) out.dominant = masks_dominant(masks);
  return out;
}

KernelStats graph_kernel_stats_reference(const Graph& g, bool with_dominant) {
  KernelStats out;
  MetricSpace m = metric_from_graph(g);
  LineFamily fam = line_family(m);
  out.stats = line_stats(fam);
  Rat diam(0);
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) diam = std::max(diam, m.at(i, j));
  out.diameter = static_cast<int>(diam.get_num().get_si());
  if (with_dominant) out.dominant = is_geometric_dominant(m);
  return out;
}

}  // namespace linelab
