#include "linelab/graph6.hpp"

namespace linelab {

// graph6 packs the upper triangle column by column — (0,1), (0,2), (1,2),
// (0,3), ... — six bits per printable byte, value = byte - 63.

Graph graph6_parse(const std::string& line) {
  std::string_view s(line);
  std::size_t base = 0;
  const std::string header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) {
    s.remove_prefix(header.size());
    base = header.size();
  }
  if (s.empty()) throw Graph6Error("empty graph6 record", base);
  auto byte_at = [&](std::size_t i) -> int {
    char c = s[i];
    if (c < 63 || c > 126) throw Graph6Error("byte out of graph6 range", base + i);
    return c - 63;
  };
  std::size_t pos = 0;
  long n;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~') throw Graph6Error("graph too large", base);
    if (s.size() < 4) throw Graph6Error("truncated vertex count", base + s.size());
    n = (long(byte_at(1)) << 12) | (long(byte_at(2)) << 6) | long(byte_at(3));
    pos = 4;
  } else {
    n = byte_at(0);
    pos = 1;
  }
  if (n > kMaxVertices) throw Graph6Error("more than 64 vertices", base);
  Graph g(static_cast<int>(n));
  long nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (s.size() != pos + nbytes)
    throw Graph6Error(s.size() < pos + nbytes ? "truncated edge bits" : "trailing bytes",
                      base + std::min(s.size(), pos + nbytes));
  long bit = 0;
  for (std::size_t k = 0; k < nbytes; k++) {
    int v = byte_at(pos + k);
    for (int b = 5; b >= 0; b--, bit++) {
      int on = (v >> b) & 1;
      if (bit >= nbits) {
        if (on) throw Graph6Error("nonzero padding bits", base + pos + k);
        continue;
      }
      if (on) {
        // invert bit index -> (i, j) with the column-major upper triangle order
        long t = bit;
        int j = 1;
        while (t >= j) t -= j, j++;
        g.add_edge(static_cast<int>(t), j);
      }
    }
  }
  return g;
}

std::string graph6_write(const Graph& g) {
  std::string out;
  if (g.n < 63) {
    out.push_back(static_cast<char>(g.n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((g.n & 63) + 63));
  }
  int acc = 0, nb = 0;
  for (int j = 1; j < g.n; j++) {
    for (int i = 0; i < j; i++) {
      acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nb = 0;
      }
    }
  }
  if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
  return out;
}

}  // namespace linelab
