#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "wcx/graph.hpp"

using namespace wcx;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::vector<std::pair<int, int>> es;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng) < p) es.emplace_back(a, b);
  return make_graph(n, std::move(es));
}

}  // namespace

TEST_CASE("make_graph validates input") {
  CHECK_THROWS_AS(make_graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  Graph g = make_graph(3, {{2, 0}, {0, 1}});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(1, 2));
}

TEST_CASE("mk16 structure") {
  Graph g = builtin_graph("mk16");
  CHECK(g.n == 16);
  CHECK(g.edges.size() == 24);
  for (int v = 0; v < 16; ++v) CHECK(g.degree(v) == 3);
  // corner edges used by the bundled complexes
  CHECK(g.has_edge(0, 5));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(14, 3));
}

TEST_CASE("k33 structure") {
  Graph g = builtin_graph("k33");
  CHECK(g.n == 6);
  CHECK(g.edges.size() == 9);
  CHECK(!g.has_edge(0, 1));
  CHECK(g.has_edge(0, 3));
}

TEST_CASE("gq22 structure") {
  Graph g = builtin_graph("gq22");
  CHECK(g.n == 30);
  CHECK(g.edges.size() == 45);
  for (int v = 0; v < 30; ++v) CHECK(g.degree(v) == 3);
  // bipartite: points 0..14 never touch each other, lines 15..29 likewise
  for (auto [a, b] : g.edges) CHECK((a < 15) != (b < 15));
}

TEST_CASE("cycle graphs") {
  Graph g = builtin_graph("cycle:5");
  CHECK(g.n == 5);
  CHECK(g.edges.size() == 5);
  CHECK_THROWS_AS(builtin_graph("cycle:2"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_graph("cycle:x"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_graph("petersen"), std::invalid_argument);
}

TEST_CASE("girth of the builtin graphs") {
  CHECK(girth(builtin_graph("mk16")) == 6);
  CHECK(girth(builtin_graph("k33")) == 4);
  CHECK(girth(builtin_graph("gq22")) == 8);
  CHECK(girth(builtin_graph("cycle:7")) == 7);
  CHECK(girth(builtin_graph("cycle:3")) == 3);
}

TEST_CASE("girth matches the edge-removal oracle") {
  // every graph on 4 vertices
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> all = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 6; ++i)
      if (mask & (1 << i)) es.push_back(all[i]);
    Graph g = make_graph(4, es);
    CHECK(girth(g) == oracle::graph_girth(g));
  }
  std::mt19937 rng(20260819);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 5 + trial % 8;  // 5..12
    Graph g = random_graph(rng, n, 0.1 + 0.07 * (trial % 10));
    INFO("trial " << trial << " n=" << n);
    CHECK(girth(g) == oracle::graph_girth(g));
  }
  for (const char* name : {"mk16", "k33", "gq22"}) {
    Graph g = builtin_graph(name);
    CHECK(girth(g) == oracle::graph_girth(g));
  }
}

TEST_CASE("forests have no girth") {
  CHECK(!girth(make_graph(4, {{0, 1}, {1, 2}, {2, 3}})));
  CHECK(!girth(make_graph(3, {})));
}

TEST_CASE("automorphism group sizes of the builtin graphs") {
  CHECK(automorphisms(builtin_graph("mk16")).size() == 96);
  CHECK(automorphisms(builtin_graph("k33")).size() == 72);
  CHECK(automorphisms(builtin_graph("gq22")).size() == 1440);
  CHECK(automorphisms(builtin_graph("cycle:7")).size() == 14);
}

TEST_CASE("automorphism count matches the permutation-scan oracle") {
  std::mt19937 rng(987);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + trial % 5;  // 3..7
    Graph g = random_graph(rng, n, 0.15 + 0.1 * (trial % 7));
    INFO("trial " << trial << " n=" << n);
    CHECK(automorphisms(g).size() == oracle::automorphism_count(g));
  }
  CHECK(automorphisms(builtin_graph("k33")).size() ==
        oracle::automorphism_count(builtin_graph("k33")));
}

TEST_CASE("automorphism list is a lexicographically sorted group") {
  for (const char* name : {"k33", "mk16"}) {
    Graph g = builtin_graph(name);
    auto group = automorphisms(g);
    CHECK(group.front() == identity_permutation(g.n));
    CHECK(std::is_sorted(group.begin(), group.end()));
    // closed under composition and inverse
    std::set<Permutation> members(group.begin(), group.end());
    for (const auto& p : group) CHECK(members.count(inverse(p)) == 1);
    for (std::size_t i = 0; i < group.size(); i += 7)
      for (std::size_t j = 0; j < group.size(); j += 11)
        CHECK(members.count(compose(group[i], group[j])) == 1);
    // every element preserves edges
    for (std::size_t i = 0; i < group.size(); i += 5)
      for (auto [a, b] : g.edges) CHECK(g.has_edge(group[i][a], group[i][b]));
  }
}

TEST_CASE("automorphism capacity bound") {
  Graph empty8 = make_graph(8, {});  // 8! = 40320 automorphisms
  CHECK_THROWS_AS(automorphisms(empty8, 1000), capacity_error);
  CHECK(automorphisms(empty8, 40320).size() == 40320);
}

TEST_CASE("graph isomorphism") {
  Graph mk = builtin_graph("mk16");
  auto self = graphs_isomorphic(mk, mk);
  REQUIRE(self.has_value());
  CHECK(!graphs_isomorphic(mk, builtin_graph("k33")));

  // same degree sequence, different structure
  Graph hexagon = builtin_graph("cycle:6");
  Graph two_triangles =
      make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!graphs_isomorphic(hexagon, two_triangles));

  // relabeled gq22 is recovered
  Graph gq = builtin_graph("gq22");
  std::mt19937 rng(5);
  Permutation relabel = identity_permutation(30);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : gq.edges) es.emplace_back(relabel[a], relabel[b]);
  Graph shuffled = make_graph(30, es);
  auto w = graphs_isomorphic(gq, shuffled);
  REQUIRE(w.has_value());
  for (auto [a, b] : gq.edges) CHECK(shuffled.has_edge((*w)[a], (*w)[b]));
}
