#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gcdlcm/errors.hpp"
#include "gcdlcm/solver.hpp"
#include "oracles.hpp"

using namespace gcdlcm;

namespace {

oracle::Kind kind_of(Mode m) { return m == Mode::MinGcd ? oracle::Kind::Gcd : oracle::Kind::Lcm; }

std::vector<Nat> reference(const ProblemInstance& inst) {
  return oracle::exhaustive_subset(inst.a.elements(), inst.b.elements(), kind_of(inst.mode));
}

ProblemInstance random_instance(std::mt19937_64& rng, Mode mode, unsigned long max_value) {
  std::vector<Nat> a, b;
  const std::vector<unsigned long> primes{2, 3, 5, 7, 11, 13};
  const bool structured = rng() % 2;
  auto draw = [&] {
    if (!structured) return Nat(2 + rng() % (max_value - 1));
    Nat x = 1;
    for (auto p : primes) {
      for (unsigned k = rng() % 3; k > 0 && x * p <= max_value; --k) x *= p;
    }
    return x;
  };
  for (std::size_t i = 0, n = 1 + rng() % 12; i < n; ++i) a.push_back(draw());
  for (std::size_t i = 0, n = rng() % 4; i < n; ++i) b.push_back(draw());
  return ProblemInstance{NatSet(a), NatSet(b), mode};
}

}  // namespace

TEST_CASE("solve examples") {
  const auto s1 = solve({NatSet{6, 10, 15}, {}, Mode::MinGcd}, Method::Exact);
  CHECK(s1.s == NatSet{6, 10, 15});
  CHECK(s1.achieved == 1);
  CHECK(s1.target == 1);
  CHECK(s1.optimal);

  const auto s2 = solve({NatSet{4, 6}, NatSet{2}, Mode::MinGcd}, Method::Exact);
  CHECK(s2.s.empty());
  CHECK(s2.achieved == 2);

  const auto s3 = solve({NatSet{4, 6, 9}, {}, Mode::MaxLcm}, Method::Exact);
  CHECK(s3.s == NatSet{4, 9});
  CHECK(s3.achieved == 36);

  CHECK(solve({NatSet{30, 42, 70, 105}, {}, Mode::MinGcd}, Method::Exact).s.size() == 4);
}

TEST_CASE("solve stats carry the cover dimensions") {
  const auto s = solve({NatSet{6, 10, 15}, {}, Mode::MinGcd}, Method::Greedy);
  CHECK(s.stats.universe_size == 3);
  CHECK(s.stats.set_count == 3);
  CHECK(s.method == Method::Greedy);
}

TEST_CASE("solve errors") {
  CHECK_THROWS_AS(solve({NatSet{}, NatSet{}, Mode::MinGcd}, Method::Exact), DomainError);
  CHECK_THROWS_AS(solve({NatSet{0, 2}, NatSet{}, Mode::MinGcd}, Method::Exact), DomainError);
  CHECK_THROWS_AS(solve({NatSet{2}, NatSet{0}, Mode::MaxLcm}, Method::Exact), DomainError);
}

TEST_CASE("edge instances") {
  // Only B: S = ∅.
  CHECK(solve({NatSet{}, NatSet{12}, Mode::MinGcd}, Method::Exact).s.empty());
  // A = {1}: gcd needs the element, lcm does not.
  CHECK(solve({NatSet{1}, NatSet{}, Mode::MinGcd}, Method::Exact).s == NatSet{1});
  CHECK(solve({NatSet{1}, NatSet{}, Mode::MaxLcm}, Method::Exact).s.empty());
  // B-elimination collapses everything to 1.
  CHECK(solve({NatSet{3, 5, 9}, NatSet{4}, Mode::MinGcd}, Method::Exact).s == NatSet{3});
  CHECK(solve({NatSet{3, 5, 9}, NatSet{4}, Mode::MinGcd}, Method::Greedy).s == NatSet{3});
}

TEST_CASE("decide examples") {
  CHECK_FALSE(decide({NatSet{6, 10, 15}, {}, Mode::MinGcd}, 2));
  CHECK(decide({NatSet{4, 9, 6}, {}, Mode::MinGcd}, 2));
  CHECK(solve({NatSet{4, 9, 6}, {}, Mode::MinGcd}, Method::Exact).s == NatSet{4, 9});
  CHECK(decide({NatSet{4}, NatSet{8}, Mode::MaxLcm}, 0));
}

TEST_CASE("brute_force examples") {
  CHECK(brute_force({NatSet{2, 4}, {}, Mode::MaxLcm}).s == NatSet{4});
  CHECK(brute_force({NatSet{5}, {}, Mode::MinGcd}).s == NatSet{5});
  CHECK(brute_force({NatSet{6, 10, 15}, {}, Mode::MinGcd}).s.size() == 3);

  std::vector<Nat> many;
  for (unsigned long i = 2; i < 30; ++i) many.emplace_back(i);
  CHECK_THROWS_AS(brute_force({NatSet(many), {}, Mode::MinGcd}), RefusalError);
  CHECK_THROWS_AS(brute_force({NatSet{2, 3, 4}, {}, Mode::MinGcd}, 2), RefusalError);
}

TEST_CASE("exact solve equals both oracles, greedy is feasible and bounded") {
  std::mt19937_64 rng(123);
  for (int t = 0; t < 500; ++t) {
    const Mode mode = t % 2 ? Mode::MaxLcm : Mode::MinGcd;
    const auto inst = random_instance(rng, mode, t % 3 == 0 ? 1000000 : 10000);
    const auto exact = solve(inst, Method::Exact);
    const auto brute = brute_force(inst);
    const auto ref = reference(inst);
    CHECK(exact.s.size() == ref.size());
    CHECK(exact.s == NatSet(ref));
    CHECK(brute.s == NatSet(ref));
    CHECK(exact.achieved == exact.target);

    const auto greedy = solve(inst, Method::Greedy);
    CHECK(greedy.achieved == greedy.target);
    for (const auto& x : greedy.s) CHECK(inst.a.contains(x));
    const double x = static_cast<double>(std::max<std::size_t>(greedy.stats.universe_size, 1));
    CHECK(static_cast<double>(greedy.s.size()) <=
          (std::log(x) + 1.0) * static_cast<double>(exact.s.size()) + 1e-9);
  }
}

TEST_CASE("B-elimination consistency and monotonicity") {
  std::mt19937_64 rng(321);
  for (int t = 0; t < 300; ++t) {
    auto inst = random_instance(rng, Mode::MinGcd, 10000);
    if (inst.b.empty()) inst = ProblemInstance{inst.a, NatSet{Nat(2 + rng() % 500)}, Mode::MinGcd};
    const auto full = solve(inst, Method::Exact);
    const auto elim = eliminate_b(inst.a, inst.b);
    const auto reduced = solve({elim.reduced, {}, Mode::MinGcd}, Method::Exact);
    if (!full.s.empty()) CHECK(full.s.size() == reduced.s.size());

    // Adding an element that keeps gcd(A ∪ B) never increases the optimum.
    std::vector<Nat> bigger = inst.a.elements();
    bigger.emplace_back(full.target * (1 + rng() % 50));
    const auto grown = solve({NatSet(bigger), inst.b, Mode::MinGcd}, Method::Exact);
    CHECK(grown.target == full.target);
    CHECK(grown.s.size() <= full.s.size());
  }
}

TEST_CASE("determinism") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto inst = random_instance(rng, t % 2 ? Mode::MaxLcm : Mode::MinGcd, 10000);
    for (auto method : {Method::Exact, Method::Greedy}) {
      CHECK(solve(inst, method).s == solve(inst, method).s);
    }
  }
}
