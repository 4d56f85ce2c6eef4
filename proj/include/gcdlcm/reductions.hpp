#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gcdlcm/coprime_basis.hpp"
#include "gcdlcm/numeric.hpp"
#include "gcdlcm/setcover.hpp"

namespace gcdlcm {

/// A_B = { gcd({a} ∪ B) : a ∈ A } together with a section back into A.
struct BEliminationMap {
  NatSet reduced;
  /// section[i] is the smallest a ∈ A with gcd({a} ∪ B) == reduced[i].
  std::vector<Nat> section;

  /// σ(v); throws DomainError if v is not in `reduced`.
  const Nat& representative(const Nat& v) const;
};

/// Replaces every a by gcd({a} ∪ B), so that gcd(S ∪ B) = gcd(S_B) for all
/// S ⊆ A. `a` must be nonempty and positive.
BEliminationMap eliminate_b(const NatSet& a, const NatSet& b);

/// Minimum Cover instance derived from a coprime basis. Universe index j
/// stands for the basis element universe_labels[j]; set i is C_x for the
/// element x = set_owners[i].
struct CoverReduction {
  CoverInstance cover;
  std::vector<Nat> universe_labels;
  std::vector<Nat> set_owners;
};

/// Builds the cover over basis elements not marked in `precovered`, with
/// C_x = { p : e(x,p) == profile(p) }. Sets are emitted in the order of
/// `owner_order` (indices into cb.source); an owner whose C_x repeats an
/// earlier one is dropped, so sets are pairwise distinct.
CoverReduction cover_from_basis(const CoprimeBasis& cb, ExponentStat stat,
                                std::span<const std::size_t> owner_order,
                                const std::vector<bool>& precovered = {});

/// MaxLcm → MinCover over the coprime basis of `a` with d(p) = max exponent.
CoverReduction lcm_to_cover(const NatSet& a);

/// MinGcd → MinCover over the coprime basis of `a` with g(p) = min exponent.
CoverReduction gcd_to_cover(const NatSet& a);

/// Integers produced from a cover instance by a reverse reduction.
struct NatFamily {
  NatSet values;
  /// owners[i]: the (first) cover set that produced values[i].
  std::vector<std::size_t> owners;
  /// lcm (resp. gcd) the subset must reach: prod of all primes (resp. 1).
  Nat target;
};

/// MinCover → MaxLcm: a_i = prod_{j ∈ C_i} p_j over the first |X| primes.
/// Throws InfeasibleError when the sets do not cover X.
NatFamily cover_to_lcm(const CoverInstance& inst);

/// MinCover → MinGcd: a_i = a / prod_{j ∈ C_i} p_j with a = prod_{j ∈ X} p_j.
/// Throws InfeasibleError when the sets do not cover X.
NatFamily cover_to_gcd(const CoverInstance& inst);

}  // namespace gcdlcm
