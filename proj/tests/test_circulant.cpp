#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gcdlcm/circulant.hpp"
#include "gcdlcm/errors.hpp"
#include "oracles.hpp"

using namespace gcdlcm;

TEST_CASE("gcd criterion examples") {
  CHECK_FALSE(is_connected_gcd({4, NatSet{2}}));
  CHECK(is_connected_gcd({5, NatSet{1}}));
  CHECK(is_connected_gcd({6, NatSet{2, 3}}));
  CHECK(is_connected_bfs({6, NatSet{2, 3}}));
}

TEST_CASE("BFS examples") {
  CHECK_FALSE(is_connected_bfs({4, NatSet{2}}));
  CHECK(is_connected_bfs({1, NatSet{}}));
  CHECK_FALSE(is_connected_bfs({6, NatSet{4}}));
  CHECK_THROWS_AS(is_connected_bfs({100, NatSet{1}}, 50), RefusalError);
  CHECK_THROWS_AS(is_connected_gcd({0, NatSet{1}}), DomainError);
}

TEST_CASE("links that are multiples of m or larger than m") {
  CHECK_FALSE(is_connected_bfs({5, NatSet{5, 10}}));
  CHECK_FALSE(is_connected_gcd({5, NatSet{5, 10}}));
  CHECK(is_connected_bfs({5, NatSet{7}}));
  CHECK(is_connected_gcd({5, NatSet{7}}));
}

TEST_CASE("prune_links examples") {
  CHECK(prune_links({6, NatSet{2, 3, 4}}, Method::Exact) == NatSet{2, 3});
  CHECK(prune_links({4, NatSet{1, 2}}, Method::Exact) == NatSet{1});
  CHECK_THROWS_AS(prune_links({4, NatSet{2}}, Method::Exact), InfeasibleError);
  CHECK(prune_links({1, NatSet{3}}, Method::Exact).empty());
}

TEST_CASE("criterion matches explicit-graph search exhaustively for small m") {
  for (std::uint64_t m = 1; m <= 24; ++m) {
    for (std::uint64_t a = 1; a < m; ++a) {
      for (std::uint64_t b = a; b < m; ++b) {
        const CirculantGraph g{m, NatSet{Nat(a), Nat(b)}};
        const bool truth = oracle::connected_explicit(m, {a, b});
        CHECK(is_connected_gcd(g) == truth);
        CHECK(is_connected_bfs(g) == truth);
      }
    }
  }
}

TEST_CASE("pruning is minimal and the result stays connected") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    const std::uint64_t m = 2 + rng() % 300;
    std::vector<Nat> links;
    for (std::size_t i = 0, n = 1 + rng() % 10; i < n; ++i) links.emplace_back(1 + rng() % (2 * m));
    const CirculantGraph g{m, NatSet(links)};
    if (!is_connected_gcd(g)) {
      CHECK_THROWS_AS(prune_links(g, Method::Exact), InfeasibleError);
      continue;
    }
    const auto exact = prune_links(g, Method::Exact);
    CHECK(is_connected_bfs({m, exact}));
    const auto ref = oracle::exhaustive_subset(g.links.elements(), {Nat(m)}, oracle::Kind::Gcd);
    CHECK(exact == NatSet(ref));
    const auto greedy = prune_links(g, Method::Greedy);
    CHECK(is_connected_bfs({m, greedy}));
  }
}
