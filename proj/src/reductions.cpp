#include "gcdlcm/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "gcdlcm/errors.hpp"

namespace gcdlcm {

const Nat& BEliminationMap::representative(const Nat& v) const {
  const std::size_t i = reduced.index_of(v);
  if (i == reduced.size()) {
    throw DomainError(to_decimal(v) + " is not an element of the reduced set");
  }
  return section[i];
}

BEliminationMap eliminate_b(const NatSet& a, const NatSet& b) {
  if (a.empty()) throw DomainError("B-elimination of an empty set");
  a.require_positive("A");
  b.require_positive("B");

  const Nat gb = gcd_set(b);
  // A is ascending, so the first hit for each image is the smallest preimage.
  std::map<Nat, Nat> image;
  for (const auto& x : a) {
    Nat v;
    mpz_gcd(v.get_mpz_t(), x.get_mpz_t(), gb.get_mpz_t());
    image.try_emplace(v, x);
  }

  BEliminationMap out;
  std::vector<Nat> reduced;
  for (auto& [v, x] : image) {
    reduced.push_back(v);
    out.section.push_back(x);
  }
  out.reduced = NatSet(std::move(reduced));
  return out;
}

CoverReduction cover_from_basis(const CoprimeBasis& cb, ExponentStat stat,
                                std::span<const std::size_t> owner_order,
                                const std::vector<bool>& precovered) {
  CoverReduction out;
  if (cb.source.empty()) return out;
  const auto profile = exponent_profile(cb, stat);

  std::vector<std::size_t> label_of(cb.basis.size(), 0);
  std::vector<bool> live(cb.basis.size(), true);
  for (std::size_t j = 0; j < cb.basis.size(); ++j) {
    if (j < precovered.size() && precovered[j]) {
      live[j] = false;
      continue;
    }
    label_of[j] = out.universe_labels.size();
    out.universe_labels.push_back(cb.basis[j]);
  }
  out.cover.universe_size = out.universe_labels.size();

  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (auto i : owner_order) {
    if (i >= cb.source.size()) {
      throw DomainError("cover owner index out of range");
    }
    std::vector<std::size_t> set;
    for (std::size_t j = 0; j < cb.basis.size(); ++j) {
      if (live[j] && cb.exponent(i, j) == profile[j]) set.push_back(label_of[j]);
    }
    if (!seen.try_emplace(set, out.cover.sets.size()).second) continue;
    out.cover.sets.push_back(std::move(set));
    out.set_owners.push_back(cb.source[i]);
  }
  return out;
}

namespace {

CoverReduction to_cover(const NatSet& a, ExponentStat stat) {
  if (a.empty()) throw DomainError("reduction of an empty set");
  const auto cb = compute_basis(a);
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return cover_from_basis(cb, stat, order);
}

void require_covering(const CoverInstance& inst) {
  std::vector<bool> hit(inst.universe_size, false);
  for (const auto& s : inst.sets) {
    for (auto e : s) {
      if (e >= inst.universe_size) {
        throw DomainError("cover set element " + std::to_string(e) +
                          " outside universe of size " +
                          std::to_string(inst.universe_size));
      }
      hit[e] = true;
    }
  }
  const auto miss = std::find(hit.begin(), hit.end(), false);
  if (miss != hit.end()) {
    const auto e = static_cast<std::size_t>(miss - hit.begin());
    throw InfeasibleError("sets do not cover the universe",
                          "element " + std::to_string(e) + " is in no set", e);
  }
}

template <typename Value>
NatFamily reverse(const CoverInstance& inst, Nat target, Value value) {
  require_covering(inst);
  const auto primes = first_primes(inst.universe_size);
  std::map<Nat, std::size_t> owner;
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    Nat product = 1;
    for (auto e : inst.sets[i]) product *= primes[e];
    owner.try_emplace(value(product), i);
  }
  NatFamily out;
  std::vector<Nat> values;
  for (auto& [v, i] : owner) {
    values.push_back(v);
    out.owners.push_back(i);
  }
  out.values = NatSet(std::move(values));
  out.target = std::move(target);
  return out;
}

Nat primorial_of(std::size_t m) {
  Nat a = 1;
  for (const auto& p : first_primes(m)) a *= p;
  return a;
}

}  // namespace

CoverReduction lcm_to_cover(const NatSet& a) { return to_cover(a, ExponentStat::Max); }

CoverReduction gcd_to_cover(const NatSet& a) { return to_cover(a, ExponentStat::Min); }

NatFamily cover_to_lcm(const CoverInstance& inst) {
  const Nat all = primorial_of(inst.universe_size);
  return reverse(inst, all, [](const Nat& product) { return product; });
}

NatFamily cover_to_gcd(const CoverInstance& inst) {
  const Nat all = primorial_of(inst.universe_size);
  return reverse(inst, Nat(1), [&](const Nat& product) { return Nat(all / product); });
}

}  // namespace gcdlcm
