#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gcdlcm/errors.hpp"
#include "gcdlcm/setcover.hpp"
#include "oracles.hpp"

using namespace gcdlcm;

namespace {

using Idx = std::vector<std::size_t>;

CoverInstance random_cover(std::mt19937_64& rng, std::size_t max_universe, std::size_t max_sets) {
  CoverInstance inst;
  inst.universe_size = rng() % (max_universe + 1);
  const std::size_t n = rng() % (max_sets + 1);
  const unsigned density = 1 + static_cast<unsigned>(rng() % 4);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> s;
    for (std::size_t e = 0; e < inst.universe_size; ++e) {
      if (rng() % 5 < density) s.push_back(e);
    }
    inst.sets.push_back(std::move(s));
  }
  return inst;
}

}  // namespace

TEST_CASE("greedy: ties go to the lowest index") {
  const CoverInstance inst{3, {{0, 1}, {1, 2}, {2}}};
  const auto sol = greedy_cover(inst);
  CHECK(sol.chosen == Idx{0, 1});
  CHECK_FALSE(sol.is_optimal);
}

TEST_CASE("greedy: empty universe") {
  const auto sol = greedy_cover(CoverInstance{0, {}});
  CHECK(sol.chosen.empty());
  CHECK(sol.is_optimal);
}

TEST_CASE("greedy: infeasible instance names the missing element") {
  try {
    greedy_cover(CoverInstance{2, {{0}}});
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(e.element() == std::optional<std::size_t>{1});
  }
}

TEST_CASE("exact cover examples") {
  const auto a = exact_cover(CoverInstance{3, {{0, 1}, {1, 2}, {2}}});
  CHECK(a.chosen == Idx{0, 1});
  CHECK(a.is_optimal);
  CHECK(exact_cover(CoverInstance{0, {{}}}).chosen.empty());
  CHECK(exact_cover(CoverInstance{3, {{0, 1, 2}, {0}, {1}, {2}}}).chosen == Idx{0});
  CHECK_THROWS_AS(exact_cover(CoverInstance{2, {{0}}}), InfeasibleError);
}

TEST_CASE("exact cover picks the lexicographically smallest minimum") {
  // Minimum covers: {1,2} and {0,3}; {0,3} is smaller.
  const CoverInstance inst{4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
  CHECK(exact_cover(inst).chosen == Idx{0, 3});
  CHECK(oracle::exhaustive_cover(inst) == Idx{0, 3});
}

TEST_CASE("decide_cover") {
  const CoverInstance inst{3, {{0, 1}, {1, 2}, {2}}};
  CHECK_FALSE(decide_cover(inst, 1));
  CHECK(decide_cover(inst, 2));
  CHECK(decide_cover(CoverInstance{0, {}}, 0));
  CHECK_FALSE(decide_cover(CoverInstance{2, {{0}}}, 5));
}

TEST_CASE("normalize rejects out-of-range elements") {
  CoverInstance inst{2, {{1, 0, 1}}};
  inst.normalize();
  CHECK(inst.sets[0] == Idx{0, 1});
  CoverInstance bad{2, {{2}}};
  CHECK_THROWS_AS(bad.normalize(), DomainError);
  CHECK_THROWS_AS(greedy_cover(bad), DomainError);
}

TEST_CASE("random instances: exact matches exhaustive, greedy within ln|X|+1") {
  std::mt19937_64 rng(77);
  int feasible = 0;
  for (int t = 0; t < 600; ++t) {
    const auto inst = random_cover(rng, 10, 12);
    const auto truth = oracle::exhaustive_cover(inst);
    if (!truth) {
      CHECK_THROWS_AS(exact_cover(inst), InfeasibleError);
      CHECK_THROWS_AS(greedy_cover(inst), InfeasibleError);
      continue;
    }
    ++feasible;
    const auto exact = exact_cover(inst);
    CHECK(exact.chosen == *truth);
    CHECK(covers(inst, exact.chosen));

    const auto greedy = greedy_cover(inst);
    CHECK(covers(inst, greedy.chosen));
    const double x = static_cast<double>(std::max<std::size_t>(inst.universe_size, 1));
    CHECK(static_cast<double>(greedy.size()) <=
          (std::log(x) + 1.0) * static_cast<double>(exact.size()) + 1e-9);
    CHECK(greedy_cover(inst) == greedy);
    CHECK(exact_cover(inst) == exact);
  }
  CHECK(feasible > 200);
}

TEST_CASE("up to 20 sets: exact size equals exhaustive minimum") {
  std::mt19937_64 rng(78);
  for (int t = 0; t < 40; ++t) {
    CoverInstance inst = random_cover(rng, 14, 20);
    if (inst.sets.size() < 15) continue;
    const auto truth = oracle::exhaustive_cover(inst);
    if (!truth) continue;
    CHECK(exact_cover(inst).chosen == *truth);
  }
}
