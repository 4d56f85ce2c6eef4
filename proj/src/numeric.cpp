#include "gcdlcm/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "gcdlcm/errors.hpp"

namespace gcdlcm {

namespace {

void canonicalize(std::vector<Nat>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

NatSet::NatSet(std::initializer_list<Nat> values) : elements_(values) {
  canonicalize(elements_);
}

NatSet::NatSet(std::vector<Nat> values) : elements_(std::move(values)) {
  canonicalize(elements_);
}

NatSet NatSet::from_strings(std::span<const std::string> values) {
  std::vector<Nat> out;
  out.reserve(values.size());
  for (const auto& s : values) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
          return c >= '0' && c <= '9';
        })) {
      throw DomainError("not a decimal natural number: '" + s + "'");
    }
    out.emplace_back(s, 10);
  }
  return NatSet(std::move(out));
}

bool NatSet::contains(const Nat& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::size_t NatSet::index_of(const Nat& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) return elements_.size();
  return static_cast<std::size_t>(it - elements_.begin());
}

void NatSet::require_positive(const char* what) const {
  if (!elements_.empty() && elements_.front() <= 0) {
    throw DomainError(std::string(what) + " contains a non-positive element");
  }
}

NatSet set_union(const NatSet& a, const NatSet& b) {
  std::vector<Nat> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NatSet(std::move(out));
}

Nat gcd_of(std::span<const Nat> values) {
  Nat g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Nat lcm_of(std::span<const Nat> values) {
  Nat l = 1;
  for (const auto& v : values) {
    if (v == 0) throw DomainError("lcm of a set containing 0");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
  }
  return l;
}

std::vector<Nat> first_primes(std::size_t m) {
  if (m == 0) return {};
  // p_m < m (ln m + ln ln m) for m >= 6.
  std::size_t limit = 16;
  if (m >= 6) {
    const double x = static_cast<double>(m);
    limit = static_cast<std::size_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
  }
  for (;; limit *= 2) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<Nat> primes;
    for (std::size_t i = 2; i <= limit && primes.size() < m; ++i) {
      if (composite[i]) continue;
      primes.emplace_back(static_cast<unsigned long>(i));
      for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    if (primes.size() == m) return primes;
  }
}

std::size_t bit_length(const Nat& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t input_size(const NatSet& a, const NatSet& b) {
  std::size_t total = 0;
  for (const auto& x : set_union(a, b)) total += bit_length(x);
  return total;
}

std::string to_decimal(const Nat& x) { return x.get_str(10); }

}  // namespace gcdlcm
