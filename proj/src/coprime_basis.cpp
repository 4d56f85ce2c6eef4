#include "gcdlcm/coprime_basis.hpp"

#include <algorithm>
#include <set>

#include "gcdlcm/errors.hpp"

namespace gcdlcm {

namespace {

// One refinement step on the lexicographically first pair sharing a factor.
// Returns false once the working set is pairwise coprime.
bool refine_once(std::set<Nat>& work) {
  Nat h;
  for (auto p = work.begin(); p != work.end(); ++p) {
    for (auto q = std::next(p); q != work.end(); ++q) {
      mpz_gcd(h.get_mpz_t(), p->get_mpz_t(), q->get_mpz_t());
      if (h == 1) continue;
      const Nat pp = *p / h;
      const Nat qq = *q / h;
      work.erase(p);
      work.erase(q);
      for (const Nat* x : std::initializer_list<const Nat*>{&pp, &qq, &h}) {
        if (*x > 1) work.insert(*x);
      }
      return true;
    }
  }
  return false;
}

void refine(std::set<Nat>& work) {
  while (refine_once(work)) {
  }
}

}  // namespace

CoprimeBasis compute_basis(const NatSet& a) {
  a.require_positive("coprime basis input");

  std::set<Nat> work;
  for (const auto& x : a) {
    if (x > 1) work.insert(x);
  }

  for (;;) {
    refine(work);
    std::vector<Nat> basis(work.begin(), work.end());
    std::vector<std::vector<unsigned>> rows;
    rows.reserve(a.size());
    bool complete = true;

    for (const auto& x : a) {
      std::vector<unsigned> row(basis.size(), 0);
      Nat rest = x;
      for (std::size_t j = 0; j < basis.size() && rest > 1; ++j) {
        while (mpz_divisible_p(rest.get_mpz_t(), basis[j].get_mpz_t())) {
          mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), basis[j].get_mpz_t());
          ++row[j];
        }
      }
      if (rest > 1) {
        work.insert(rest);
        complete = false;
      }
      rows.push_back(std::move(row));
    }

    if (complete) {
      return CoprimeBasis{a, std::move(basis), std::move(rows)};
    }
  }
}

std::vector<unsigned> exponent_profile(const CoprimeBasis& cb, ExponentStat stat) {
  if (cb.source.empty()) {
    throw DomainError("exponent profile of an empty set");
  }
  std::vector<unsigned> out = cb.exponents.front();
  for (const auto& row : cb.exponents) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = stat == ExponentStat::Max ? std::max(out[j], row[j])
                                         : std::min(out[j], row[j]);
    }
  }
  return out;
}

Nat evaluate(const std::vector<Nat>& basis, const std::vector<unsigned>& exponents) {
  Nat out = 1;
  Nat power;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    mpz_pow_ui(power.get_mpz_t(), basis[j].get_mpz_t(), exponents[j]);
    out *= power;
  }
  return out;
}

}  // namespace gcdlcm
