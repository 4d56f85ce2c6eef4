#include "gcdlcm/solver.hpp"

#include <algorithm>
#include <numeric>

#include "gcdlcm/errors.hpp"

namespace gcdlcm {

void ProblemInstance::validate() const {
  a.require_positive("A");
  b.require_positive("B");
  if (a.empty() && b.empty()) {
    throw DomainError("instance needs a nonempty A or B");
  }
}

Nat mode_value(Mode mode, std::span<const Nat> s, const NatSet& b) {
  std::vector<Nat> all(s.begin(), s.end());
  all.insert(all.end(), b.begin(), b.end());
  return mode == Mode::MinGcd ? gcd_of(all) : lcm_of(all);
}

namespace {

Pipeline gcd_pipeline(const ProblemInstance& inst, Pipeline out) {
  auto elim = eliminate_b(inst.a, inst.b);
  const auto cb = compute_basis(elim.reduced);

  std::vector<std::size_t> order(elim.reduced.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return elim.section[x] < elim.section[y];
  });
  out.reduction = cover_from_basis(cb, ExponentStat::Min, order);
  for (const auto& owner : out.reduction.set_owners) {
    out.representatives.push_back(elim.representative(owner));
  }
  out.elimination = std::move(elim);
  return out;
}

Pipeline lcm_pipeline(const ProblemInstance& inst, Pipeline out) {
  const NatSet all = set_union(inst.a, inst.b);
  const auto cb = compute_basis(all);
  const auto d = exponent_profile(cb, ExponentStat::Max);

  std::vector<bool> precovered(cb.basis.size(), false);
  for (const auto& x : inst.b) {
    const std::size_t i = all.index_of(x);
    for (std::size_t j = 0; j < cb.basis.size(); ++j) {
      if (cb.exponent(i, j) == d[j]) precovered[j] = true;
    }
  }
  std::vector<std::size_t> order;
  for (const auto& x : inst.a) order.push_back(all.index_of(x));
  out.reduction = cover_from_basis(cb, ExponentStat::Max, order, precovered);
  out.representatives = out.reduction.set_owners;
  return out;
}

}  // namespace

Pipeline build_pipeline(const ProblemInstance& inst) {
  inst.validate();
  Pipeline out;
  out.target = mode_value(inst.mode, inst.a.elements(), inst.b);
  if (mode_value(inst.mode, {}, inst.b) == out.target) {
    out.trivial = true;
    return out;
  }
  if (inst.mode == Mode::MinGcd) return gcd_pipeline(inst, std::move(out));
  return lcm_pipeline(inst, std::move(out));
}

SubsetSolution solve(const ProblemInstance& inst, Method method) {
  const auto start = std::chrono::steady_clock::now();
  const Pipeline pipe = build_pipeline(inst);

  SubsetSolution out;
  out.method = method;
  out.target = pipe.target;
  out.stats.universe_size = pipe.reduction.cover.universe_size;
  out.stats.set_count = pipe.reduction.cover.sets.size();

  if (pipe.trivial) {
    out.optimal = true;
  } else {
    const CoverSolution cover = method == Method::Exact
                                    ? exact_cover(pipe.reduction.cover)
                                    : greedy_cover(pipe.reduction.cover);
    std::vector<Nat> chosen;
    for (auto i : cover.chosen) chosen.push_back(pipe.representatives[i]);
    out.optimal = cover.is_optimal;
    // An empty universe means any one element reaches the target, but the
    // empty set does not (B alone was already ruled out).
    if (chosen.empty()) {
      chosen.push_back(*std::min_element(pipe.representatives.begin(),
                                         pipe.representatives.end()));
      out.optimal = true;
    }
    out.s = NatSet(std::move(chosen));
  }

  out.achieved = mode_value(inst.mode, out.s.elements(), inst.b);
  if (out.achieved != out.target) {
    throw std::logic_error("solver produced an infeasible subset");
  }
  out.stats.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

bool decide(const ProblemInstance& inst, std::size_t k) {
  return solve(inst, Method::Exact).s.size() <= k;
}

SubsetSolution brute_force(const ProblemInstance& inst, std::size_t cap) {
  inst.validate();
  const std::size_t n = inst.a.size();
  if (n > cap) {
    throw RefusalError("brute force refused: |A| = " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
  }
  const auto start = std::chrono::steady_clock::now();
  SubsetSolution out;
  out.method = Method::Exact;
  out.optimal = true;
  out.target = mode_value(inst.mode, inst.a.elements(), inst.b);

  std::vector<Nat> pick;
  for (std::size_t k = 0; k <= n; ++k) {
    // Index combinations in lexicographic order.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
      pick.clear();
      for (auto i : idx) pick.push_back(inst.a[i]);
      if (mode_value(inst.mode, pick, inst.b) == out.target) {
        out.s = NatSet(pick);
        out.achieved = out.target;
        out.stats.elapsed = std::chrono::steady_clock::now() - start;
        return out;
      }
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw std::logic_error("brute force: the full set must reach the target");
}

}  // namespace gcdlcm
