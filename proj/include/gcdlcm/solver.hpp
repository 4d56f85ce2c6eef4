#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "gcdlcm/numeric.hpp"
#include "gcdlcm/reductions.hpp"

namespace gcdlcm {

enum class Mode { MinGcd, MaxLcm };
enum class Method { Exact, Greedy };

/// Find a smallest S ⊆ a with gcd(S ∪ b) = gcd(a ∪ b) (MinGcd) or
/// lcm(S ∪ b) = lcm(a ∪ b) (MaxLcm).
struct ProblemInstance {
  NatSet a;
  NatSet b;
  Mode mode = Mode::MinGcd;

  /// Throws DomainError unless all elements are positive and a ∪ b ≠ ∅.
  void validate() const;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

struct SolveStats {
  std::size_t universe_size = 0;
  std::size_t set_count = 0;
  std::chrono::duration<double, std::milli> elapsed{0};
};

struct SubsetSolution {
  NatSet s;
  Nat achieved;
  Nat target;
  Method method = Method::Exact;
  bool optimal = false;
  SolveStats stats;
};

/// gcd(S ∪ B) or lcm(S ∪ B) according to mode.
Nat mode_value(Mode mode, std::span<const Nat> s, const NatSet& b);

/// The cover instance a ProblemInstance reduces to, plus the map from cover
/// sets back to elements of A.
///
/// MinGcd: B is eliminated first and the cover is built over the coprime
/// basis of A_B. MaxLcm: the basis is built over A ∪ B and every basis
/// element whose maximal exponent is reached by some b ∈ B is dropped from
/// the universe. In both cases cover sets are ordered by their
/// representative in A, so the lexicographically first minimum cover maps
/// to the lexicographically first minimum S.
struct Pipeline {
  Nat target;
  /// B alone reaches the target, so S = ∅.
  bool trivial = false;
  CoverReduction reduction;
  /// representatives[i] ∈ A is what cover set i maps back to.
  std::vector<Nat> representatives;
  std::optional<BEliminationMap> elimination;
};

Pipeline build_pipeline(const ProblemInstance& inst);

SubsetSolution solve(const ProblemInstance& inst, Method method);

/// Is there S with |S| <= k? Decided with the exact method.
bool decide(const ProblemInstance& inst, std::size_t k);

/// Enumerates subsets of A by size, then lexicographically, and returns the
/// first that reaches the target. Refuses (RefusalError) when |A| > cap.
SubsetSolution brute_force(const ProblemInstance& inst, std::size_t cap = 20);

}  // namespace gcdlcm
