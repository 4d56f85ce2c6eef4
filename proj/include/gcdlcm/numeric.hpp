#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gcdlcm {

/// Arbitrary-precision nonnegative integer.
using Nat = mpz_class;

/// Finite duplicate-free set of naturals, always iterated in ascending order.
/// Immutable after construction.
class NatSet {
 public:
  using const_iterator = std::vector<Nat>::const_iterator;

  NatSet() = default;
  NatSet(std::initializer_list<Nat> values);
  explicit NatSet(std::vector<Nat> values);

  /// Parses decimal strings; throws DomainError on anything else.
  static NatSet from_strings(std::span<const std::string> values);

  const std::vector<Nat>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const Nat& operator[](std::size_t i) const { return elements_[i]; }
  const_iterator begin() const noexcept { return elements_.begin(); }
  const_iterator end() const noexcept { return elements_.end(); }

  bool contains(const Nat& x) const;
  /// Position of x in ascending order, or size() when absent.
  std::size_t index_of(const Nat& x) const;

  /// Throws DomainError if any element is zero.
  void require_positive(const char* what) const;

  friend bool operator==(const NatSet& a, const NatSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Nat> elements_;
};

NatSet set_union(const NatSet& a, const NatSet& b);

/// gcd of all values; 0 for an empty range.
Nat gcd_of(std::span<const Nat> values);
/// lcm of all values; 1 for an empty range. Zero values are a DomainError.
Nat lcm_of(std::span<const Nat> values);

inline Nat gcd_set(const NatSet& s) { return gcd_of(s.elements()); }
inline Nat lcm_set(const NatSet& s) { return lcm_of(s.elements()); }

/// The first m primes, ascending, from a sieve of Eratosthenes.
std::vector<Nat> first_primes(std::size_t m);

/// Total bit length I(A,B) = sum over A ∪ B of ceil(log2(a + 1)).
std::size_t input_size(const NatSet& a, const NatSet& b);

/// ceil(log2(x + 1)), i.e. the number of binary digits of x (0 for x = 0).
std::size_t bit_length(const Nat& x);

std::string to_decimal(const Nat& x);

}  // namespace gcdlcm
