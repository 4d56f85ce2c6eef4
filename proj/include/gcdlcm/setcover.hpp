#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gcdlcm {

/// Minimum Cover instance over the dense universe {0, ..., universe_size-1}.
struct CoverInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> sets;  // each sorted, duplicate-free

  /// Sorts and deduplicates each set; throws DomainError on an index
  /// outside the universe.
  void normalize();

  friend bool operator==(const CoverInstance&, const CoverInstance&) = default;
};

struct CoverSolution {
  std::vector<std::size_t> chosen;  // ascending set indices
  bool is_optimal = false;

  std::size_t size() const noexcept { return chosen.size(); }

  friend bool operator==(const CoverSolution&, const CoverSolution&) = default;
};

/// True when the union of the chosen sets is the whole universe.
bool covers(const CoverInstance& inst, std::span<const std::size_t> chosen);

/// Johnson's greedy: repeatedly take the set covering the most uncovered
/// elements, lowest index on ties. At most H(|X|) times the optimum.
/// Throws InfeasibleError naming an uncoverable element.
CoverSolution greedy_cover(const CoverInstance& inst);

/// Minimum-cardinality cover by branch and bound. Among all minimum covers
/// the lexicographically smallest ascending index list is returned.
/// Throws InfeasibleError naming an uncoverable element.
CoverSolution exact_cover(const CoverInstance& inst);

/// Is there a cover of size <= k? Infeasible instances answer false.
bool decide_cover(const CoverInstance& inst, std::size_t k);

}  // namespace gcdlcm
