#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "linelab/canon.hpp"
#include "linelab/graph.hpp"

using namespace linelab;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool brute_has_nontrivial_aut(const Graph& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> id = perm;
  while (std::next_permutation(perm.begin(), perm.end()))
    if (relabel(g, perm) == g) return true;
  return false;
}

Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("code is invariant under relabeling") {
  std::mt19937 rng(42);
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 40; ++t) {
      Graph g = random_graph(n, rng);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canon_code(g).code == canon_code(relabel(g, perm)).code);
    }
  }
}

TEST_CASE("codes separate all four-vertex isomorphism classes") {
  // group all 64 labeled graphs on 4 vertices by brute-force isomorphism and
  // compare with the partition induced by canon codes
  std::vector<Graph> all;
  for (int code = 0; code < 64; ++code) all.push_back(graph_from_code(4, code));
  std::map<std::uint64_t, std::set<int>> by_code;
  for (int i = 0; i < 64; ++i) by_code[canon_code(all[i]).code].insert(i);
  CHECK(by_code.size() == 11);  // the 11 graphs on four vertices
  for (auto& [code, members] : by_code)
    for (int i : members)
      for (int j : members) CHECK(brute_isomorphic(all[i], all[j]));
  // distinct codes mean non-isomorphic (spot-check across classes)
  std::vector<int> reps;
  for (auto& [code, members] : by_code) reps.push_back(*members.begin());
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      CHECK_FALSE(brute_isomorphic(all[reps[i]], all[reps[j]]));
}

TEST_CASE("graphs_isomorphic agrees with brute force") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 6; ++n)
    for (int t = 0; t < 60; ++t) {
      Graph a = random_graph(n, rng);
      Graph b = random_graph(n, rng);
      CHECK(graphs_isomorphic(a, b) == brute_isomorphic(a, b));
    }
  // relabelings are always isomorphic
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  for (int t = 0; t < 40; ++t) {
    Graph a = random_graph(6, rng);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(graphs_isomorphic(a, relabel(a, perm)));
  }
}

TEST_CASE("automorphism flag is exact") {
  std::mt19937 rng(99);
  for (int n = 2; n <= 5; ++n) {
    long long limit = 1LL << (n * (n - 1) / 2);
    for (long long code = 0; code < limit; ++code) {
      Graph g = graph_from_code(n, static_cast<std::uint64_t>(code));
      CHECK(canon_code(g).has_nontrivial_aut == brute_has_nontrivial_aut(g));
    }
  }
  // a rigid graph: the 6-vertex tree with arms of lengths 1, 2, 3
  Graph rigid(7);
  rigid.add_edge(0, 1);
  rigid.add_edge(0, 2);
  rigid.add_edge(2, 3);
  rigid.add_edge(0, 4);
  rigid.add_edge(4, 5);
  rigid.add_edge(5, 6);
  CHECK_FALSE(canon_code(rigid).has_nontrivial_aut);
  CHECK(canon_code(petersen_graph()).has_nontrivial_aut);
}

TEST_CASE("labeled code roundtrip") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 10; ++n)
    for (int t = 0; t < 30; ++t) {
      Graph g = random_graph(n, rng);
      CHECK(graph_from_code(n, upper_triangle_code(g)) == g);
    }
}

TEST_CASE("named graphs with known symmetry") {
  CHECK(canon_code(cycle_graph(5)).has_nontrivial_aut);
  CHECK(canon_code(complete_graph(4)).has_nontrivial_aut);
  CHECK(graphs_isomorphic(complement(petersen_graph()), petersen_complement()));
  CHECK_FALSE(graphs_isomorphic(path_graph(4), star_graph(4)));
  CHECK(graphs_isomorphic(complete_multipartite_graph({2, 2}), cycle_graph(4)));
}
