#include "gcdlcm/generate.hpp"

#include <limits>
#include <vector>

#include "gcdlcm/errors.hpp"

namespace gcdlcm {

std::uint64_t SplitMix64::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t range = span + 1;
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + x % range;
}

ProblemInstance generate_instance(std::uint64_t seed, std::size_t count,
                                  std::uint64_t max_value, Mode mode,
                                  std::size_t b_count) {
  if (count < 1) throw DomainError("generator needs count >= 1");
  if (max_value < 2) throw DomainError("generator needs max_value >= 2");
  SplitMix64 rng(seed);
  auto draw = [&](std::size_t n) {
    std::vector<Nat> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.emplace_back(static_cast<unsigned long>(rng.uniform(2, max_value)));
    }
    return NatSet(std::move(out));
  };
  ProblemInstance inst;
  inst.a = draw(count);
  inst.b = draw(b_count);
  inst.mode = mode;
  return inst;
}

}  // namespace gcdlcm
