#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "linelab/enumerate.hpp"
#include "linelab/equiv.hpp"
#include "linelab/graph.hpp"
#include "linelab/hypergraph.hpp"
#include "linelab/lines.hpp"
#include "linelab/metric_space.hpp"

using namespace linelab;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

// the paper-facing text forms of the worked examples (1-indexed)
const char* kReject = "1: 1-2 2-3 3-4\n2: 1-3 2-4 1-4\n";
const char* kAcceptable = "1: 1-4\n2: 2-4\n3: 3-4\n4: 1-2 2-3 1-3\n";
const char* kFiveDontKnow =
    "1: 1-5\n2: 2-5\n3: 3-5\n4: 4-5\n5: 1-2 2-3 3-4\n6: 1-3 2-4 1-4\n";

// independent fixed-point reference: apply single growth steps in a random
// order until none applies
std::vector<uint64_t> reference_closure(const EdgePartition& p, unsigned seed) {
  std::mt19937 rng(seed);
  const int n = p.n;
  const int k = static_cast<int>(p.classes.size());
  std::vector<std::vector<int>> class_of(n, std::vector<int>(n, -1));
  for (int i = 0; i < k; ++i)
    for (auto [u, v] : p.classes[i]) class_of[u][v] = class_of[v][u] = i;
  std::vector<uint64_t> L(k, 0);
  for (int i = 0; i < k; ++i)
    for (auto [u, v] : p.classes[i]) L[i] |= (uint64_t(1) << u) | (uint64_t(1) << v);
  for (;;) {
    std::vector<std::pair<int, int>> moves;  // (class i, vertex w)
    for (int i = 0; i < k; ++i)
      for (auto [u, v] : p.classes[i])
        for (int swap = 0; swap < 2; ++swap) {
          int a = swap ? v : u, b = swap ? u : v;
          // pair ab in C_i: add w when bw lies in a class whose set holds a
          for (int w = 0; w < n; ++w) {
            if (w == a || w == b || ((L[i] >> w) & 1)) continue;
            int j = class_of[b][w];
            if (j >= 0 && ((L[j] >> a) & 1)) moves.emplace_back(i, w);
          }
        }
    if (moves.empty()) return L;
    auto [i, w] = moves[std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng)];
    L[i] |= uint64_t(1) << w;
  }
}

}  // namespace

TEST_CASE("partition construction is strict") {
  CHECK_THROWS(EdgePartition::make(1, {}));
  // missing pair
  CHECK_THROWS(EdgePartition::make(3, {{{0, 1}, {0, 2}}}));
  // duplicate pair across classes
  CHECK_THROWS(EdgePartition::make(3, {{{0, 1}, {0, 2}}, {{1, 2}, {1, 0}}}));
  // loop pair and out-of-range endpoint
  CHECK_THROWS(EdgePartition::make(3, {{{0, 0}, {0, 1}, {0, 2}, {1, 2}}}));
  CHECK_THROWS(EdgePartition::make(3, {{{0, 1}, {0, 2}, {1, 3}}}));
  // empty class
  CHECK_THROWS(EdgePartition::make(3, {{{0, 1}, {0, 2}, {1, 2}}, {}}));

  EdgePartition p = EdgePartition::make(3, {{{2, 1}, {0, 2}, {0, 1}}});
  CHECK(p.classes[0] == Pairs{{0, 1}, {0, 2}, {1, 2}});  // normalized and sorted
}

TEST_CASE("text form parses 1-indexed labels") {
  EdgePartition p = EdgePartition::parse_text(kReject);
  CHECK(p.n == 4);
  REQUIRE(p.classes.size() == 2);
  CHECK(p.classes[0] == Pairs{{0, 1}, {1, 2}, {2, 3}});
  CHECK(p.classes[1] == Pairs{{0, 2}, {0, 3}, {1, 3}});

  // blank lines are fine
  EdgePartition q = EdgePartition::parse_text("\n1: 1-2 2-3 1-3\n\n");
  CHECK(q.n == 3);
}

TEST_CASE("text errors name the line") {
  auto message_of = [](const std::string& text) {
    try {
      EdgePartition::parse_text(text);
      return std::string();
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
  };
  CHECK(message_of("1: 1-2\nbogus\n").find("line 2") != std::string::npos);
  CHECK(message_of("1: 1-2\n3: 1-3\n").find("line 2") != std::string::npos);
  CHECK(message_of("1: 1-x\n").find("line 1") != std::string::npos);
  CHECK(message_of("").size() > 0);  // empty input is an error too
}

TEST_CASE("line equivalence fibers") {
  EdgePartition c5 = line_equivalence(metric_from_graph(cycle_graph(5)));
  CHECK(c5.classes.size() == 10);

  EdgePartition k3 = line_equivalence(metric_from_graph(complete_graph(3)));
  CHECK(k3.classes.size() == 3);

  EdgePartition p3 = line_equivalence(metric_from_graph(path_graph(3)));
  REQUIRE(p3.classes.size() == 1);
  CHECK(p3.classes[0].size() == 3);

  // classes are ordered by their smallest pair
  for (size_t i = 1; i < c5.classes.size(); ++i)
    CHECK(c5.classes[i - 1][0] < c5.classes[i][0]);
}

TEST_CASE("the worked examples, verdicts and rendered bytes") {
  EdgePartition reject = EdgePartition::parse_text(kReject);
  EquivResult g1 = equiv_graph(reject);
  CHECK(g1.verdict == EquivVerdict::reject);
  REQUIRE(g1.closure.size() == 2);
  CHECK(g1.closure[0] == 0b1111u);
  CHECK(g1.closure[1] == 0b1111u);
  CHECK(render_equiv(g1, reject, false) ==
        "REJECT: Does not arise from any graph\n"
        "L1 = {1,2,3,4}\n"
        "L2 = {1,2,3,4}\n");

  EdgePartition ok = EdgePartition::parse_text(kAcceptable);
  EquivResult g2 = equiv_graph(ok);
  CHECK(g2.verdict == EquivVerdict::dont_know);
  CHECK(render_equiv(g2, ok, false) ==
        "DON'T KNOW\n"
        "L1 = {1,4}\n"
        "L2 = {2,4}\n"
        "L3 = {3,4}\n"
        "L4 = {1,2,3}\n");

  EquivResult h1 = equiv_hypergraph(ok);
  CHECK(h1.verdict == EquivVerdict::accept);
  CHECK(h1.h == Hypergraph3::make(4, {{0, 1, 2}}));
  CHECK(render_equiv(h1, ok, true) ==
        "ACCEPT\n"
        "T = {{1,2,3}}\n"
        "L1 = {1,4}\n"
        "L2 = {2,4}\n"
        "L3 = {3,4}\n"
        "L4 = {1,2,3}\n");

  EdgePartition five = EdgePartition::parse_text(kFiveDontKnow);
  EquivResult h2 = equiv_hypergraph(five);
  CHECK(h2.verdict == EquivVerdict::dont_know);
  CHECK(h2.closure[4] == h2.closure[5]);
  CHECK(render_equiv(h2, five, true) ==
        "DON'T KNOW\n"
        "L1 = {1,5}\n"
        "L2 = {2,5}\n"
        "L3 = {3,5}\n"
        "L4 = {4,5}\n"
        "L5 = {1,2,3,4}\n"
        "L6 = {1,2,3,4}\n");

  // the graph level rejects the five-point example's sibling only when two
  // classes fill up; here it must also answer don't-know
  CHECK(equiv_graph(five).verdict == EquivVerdict::dont_know);

  // hypergraph-level reject message
  EquivResult hr = equiv_hypergraph(reject);
  CHECK(hr.verdict == EquivVerdict::reject);
  CHECK(render_equiv(hr, reject, true).rfind("REJECT: Does not arise from any hypergraph\n", 0) == 0);
}

TEST_CASE("fixed point is order-independent") {
  std::vector<EdgePartition> inputs = {
      EdgePartition::parse_text(kReject),
      EdgePartition::parse_text(kAcceptable),
      EdgePartition::parse_text(kFiveDontKnow),
      line_equivalence(metric_from_graph(cycle_graph(5))),
      line_equivalence(metric_from_graph(star_graph(5))),
      line_equivalence(metric_from_graph(wheel_graph(5))),
  };
  for (const EdgePartition& p : inputs) {
    std::vector<uint64_t> oracle = equiv_graph(p).closure;
    for (unsigned seed = 1; seed <= 10; ++seed)
      CHECK(reference_closure(p, seed) == oracle);
  }
}

TEST_CASE("realizable partitions are never rejected, accepts are consistent") {
  for (int n = 3; n <= 6; ++n)
    enumerate_connected(n, [&](const Graph& g) {
      MetricSpace m = metric_from_graph(g);
      EdgePartition p = line_equivalence(m);
      EquivResult gres = equiv_graph(p);
      CHECK(gres.verdict != EquivVerdict::reject);
      // invariant: the grown set stays inside the true line of each class
      for (size_t i = 0; i < p.classes.size(); ++i) {
        uint64_t true_line = line_mask(m, p.classes[i][0].first, p.classes[i][0].second);
        CHECK((gres.closure[i] & ~true_line) == 0);
      }
      EquivResult hres = equiv_hypergraph(p);
      CHECK(hres.verdict != EquivVerdict::reject);
      if (hres.verdict == EquivVerdict::accept) {
        for (size_t i = 0; i < p.classes.size(); ++i)
          for (auto [u, v] : p.classes[i]) CHECK(hyperline_mask(hres.h, u, v) == hres.closure[i]);
      }
    });
}

TEST_CASE("acceptance requires pairwise distinct grown sets") {
  // all pairs of K3 in one class: the single set cannot collide, so H accepts
  EdgePartition one = EdgePartition::make(3, {{{0, 1}, {0, 2}, {1, 2}}});
  EquivResult r = equiv_hypergraph(one);
  CHECK(r.verdict == EquivVerdict::accept);
  CHECK(r.h == Hypergraph3::make(3, {{0, 1, 2}}));

  // the first worked example grows two identical full sets: reject, not accept
  CHECK(equiv_hypergraph(EdgePartition::parse_text(kReject)).verdict == EquivVerdict::reject);
}
