#pragma once

#include <cstddef>
#include <vector>

#include "gcdlcm/numeric.hpp"

namespace gcdlcm {

/// A coprime (gcd-free) basis of a set of positive integers.
///
/// Invariants:
///  - every basis element is >= 2 and the elements are pairwise coprime;
///  - source[i] == prod_j basis[j]^exponents[i][j] exactly;
///  - every basis element divides at least one source element.
///
/// Bases are not unique; this one is deterministic for a given source.
struct CoprimeBasis {
  NatSet source;
  std::vector<Nat> basis;  // ascending
  /// exponents[i][j] is the multiplicity of basis[j] in source[i].
  std::vector<std::vector<unsigned>> exponents;

  unsigned exponent(std::size_t source_index, std::size_t basis_index) const {
    return exponents[source_index][basis_index];
  }
};

/// Pairwise refinement to a fixed point: while two entries share a factor
/// h > 1, replace them by p/h, q/h and h. Zero elements are a DomainError.
CoprimeBasis compute_basis(const NatSet& a);

enum class ExponentStat { Max, Min };

/// Per-basis-element max (d) or min (g) of the exponent column over the
/// source. DomainError on an empty source.
std::vector<unsigned> exponent_profile(const CoprimeBasis& cb, ExponentStat stat);

/// prod_j basis[j]^exponents[j]
Nat evaluate(const std::vector<Nat>& basis, const std::vector<unsigned>& exponents);

}  // namespace gcdlcm
