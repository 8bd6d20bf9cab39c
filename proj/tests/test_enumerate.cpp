#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>
#include <vector>

#include "linelab/canon.hpp"
#include "linelab/enumerate.hpp"
#include "linelab/graph.hpp"
#include "linelab/graph6.hpp"

using namespace linelab;

namespace {

// connected graphs per vertex count
const long long kConnectedCounts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};

}  // namespace

TEST_CASE("class counts match the classical sequence") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(static_cast<long long>(connected_codes(n).size()) == kConnectedCounts[n]);
    long long seen = 0;
    enumerate_connected(n, [&](const Graph& g) {
      ++seen;
      CHECK(g.n == n);
      CHECK(is_connected(g));
    });
    CHECK(seen == kConnectedCounts[n]);
  }
}

TEST_CASE("representatives are pairwise non-isomorphic") {
  for (int n = 3; n <= 7; ++n) {
    std::set<std::uint64_t> codes;
    enumerate_connected(n, [&](const Graph& g) { codes.insert(canon_code(g).code); });
    CHECK(static_cast<long long>(codes.size()) == kConnectedCounts[n]);
  }
}

TEST_CASE("agrees with brute force over labeled graphs") {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::uint64_t> brute;
    long long limit = 1LL << (n * (n - 1) / 2);
    for (long long code = 0; code < limit; ++code) {
      Graph g = graph_from_code(n, static_cast<std::uint64_t>(code));
      if (is_connected(g)) brute.insert(canon_code(g).code);
    }
    std::set<std::uint64_t> generated;
    enumerate_connected(n, [&](const Graph& g) { generated.insert(canon_code(g).code); });
    CHECK(brute == generated);
  }
}

TEST_CASE("children partition the next level") {
  for (int n = 5; n <= 8; ++n) {
    long long total = 0;
    std::set<std::uint64_t> child_codes;
    enumerate_connected(n - 1, [&](const Graph& parent) {
      visit_children(parent, [&](const Graph& child) {
        ++total;
        CHECK(child.n == n);
        CHECK(is_connected(child));
        child_codes.insert(canon_code(child).code);
      });
    });
    // every class appears exactly once across all parents
    CHECK(total == kConnectedCounts[n]);
    CHECK(static_cast<long long>(child_codes.size()) == kConnectedCounts[n]);
  }
}

TEST_CASE("enumeration order is deterministic") {
  std::vector<std::string> first, second;
  enumerate_connected(6, [&](const Graph& g) { first.push_back(graph6_write(g)); });
  enumerate_connected(6, [&](const Graph& g) { second.push_back(graph6_write(g)); });
  CHECK(first == second);
}

TEST_CASE("level cap is enforced but adjustable") {
  CHECK_THROWS(connected_codes(9));
  CHECK_THROWS(enumerate_connected(9, [](const Graph&) {}));
  CHECK(connected_codes(3, 3).size() == 2);
}

TEST_CASE("graph6 line reader") {
  std::istringstream in("C~\nDUW\n\n@\n");
  std::vector<long long> lines;
  std::vector<int> sizes;
  for_each_graph6_line(in, [&](long long line_no, const Graph& g) {
    lines.push_back(line_no);
    sizes.push_back(g.n);
  });
  // the blank line is skipped, records keep their own numbers
  CHECK(lines == std::vector<long long>{1, 2, 4});
  CHECK(sizes == std::vector<int>{4, 5, 1});

  // disconnected records are still yielded
  Graph disco(2);
  std::istringstream in2(graph6_write(disco) + "\n");
  int count = 0;
  for_each_graph6_line(in2, [&](long long, const Graph& g) {
    ++count;
    CHECK_FALSE(is_connected(g));
  });
  CHECK(count == 1);

  // the error names the offending line
  std::istringstream bad("C~\n*nonsense*\n");
  try {
    for_each_graph6_line(bad, [](long long, const Graph&) {});
    FAIL("expected a parse error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
