#include "gcdlcm/setcover.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "gcdlcm/errors.hpp"

namespace gcdlcm {

namespace {

using Bits = boost::dynamic_bitset<>;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<Bits> to_bits(const CoverInstance& inst) {
  std::vector<Bits> out;
  out.reserve(inst.sets.size());
  for (const auto& s : inst.sets) {
    Bits b(inst.universe_size);
    for (auto e : s) {
      if (e >= inst.universe_size) {
        throw DomainError("cover set element " + std::to_string(e) +
                          " outside universe of size " +
                          std::to_string(inst.universe_size));
      }
      b.set(e);
    }
    out.push_back(std::move(b));
  }
  return out;
}

void require_feasible(const CoverInstance& inst, const std::vector<Bits>& sets) {
  Bits all(inst.universe_size);
  for (const auto& s : sets) all |= s;
  if (all.all()) return;
  all.flip();
  const std::size_t e = all.find_first();
  throw InfeasibleError("cover instance is infeasible",
                        "element " + std::to_string(e) + " is in no set", e);
}

// Branch and bound over sets with index >= first. Branches on the uncovered
// element with the fewest candidate sets, skipping dominated candidates.
class MinCoverSearch {
 public:
  MinCoverSearch(const std::vector<Bits>& sets, std::size_t universe_size)
      : sets_(sets), containing_(universe_size) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (auto e = sets[i].find_first(); e != Bits::npos; e = sets[i].find_next(e)) {
        containing_[e].push_back(i);
      }
    }
  }

  /// Size of a minimum cover of `uncovered` using sets [first, n) if it is
  /// at most `limit`, kNone otherwise.
  std::size_t min_size(const Bits& uncovered, std::size_t first, std::size_t limit) {
    first_ = first;
    best_ = limit + 1;
    search(uncovered, 0);
    return best_ <= limit ? best_ : kNone;
  }

 private:
  std::size_t lower_bound(const Bits& uncovered) const {
    std::size_t widest = 0;
    for (std::size_t i = first_; i < sets_.size(); ++i) {
      widest = std::max(widest, (sets_[i] & uncovered).count());
    }
    if (widest == 0) return kNone;
    return (uncovered.count() + widest - 1) / widest;
  }

  void search(const Bits& uncovered, std::size_t depth) {
    if (uncovered.none()) {
      best_ = std::min(best_, depth);
      return;
    }
    if (depth + 1 >= best_) return;
    const std::size_t bound = lower_bound(uncovered);
    if (bound == kNone || depth + bound >= best_) return;

    std::size_t pivot = kNone;
    std::size_t pivot_count = kNone;
    for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
      std::size_t c = 0;
      for (auto i : containing_[e]) c += i >= first_;
      if (c < pivot_count) {
        pivot = e;
        pivot_count = c;
        if (c <= 1) break;
      }
    }
    if (pivot_count == 0) return;

    struct Candidate {
      std::size_t index;
      Bits gain;
      std::size_t width;
    };
    std::vector<Candidate> candidates;
    for (auto i : containing_[pivot]) {
      if (i < first_) continue;
      Bits gain = sets_[i] & uncovered;
      const std::size_t width = gain.count();
      candidates.push_back({i, std::move(gain), width});
    }
    std::vector<bool> dominated(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      for (std::size_t b = 0; b < candidates.size() && !dominated[a]; ++b) {
        if (a == b || dominated[b]) continue;
        if (candidates[a].gain.is_subset_of(candidates[b].gain) &&
            (candidates[a].width < candidates[b].width || b < a)) {
          dominated[a] = true;
        }
      }
    }
    std::vector<std::size_t> order;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!dominated[a]) order.push_back(a);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return candidates[x].width > candidates[y].width;
    });
    for (auto a : order) {
      search(uncovered - candidates[a].gain, depth + 1);
      if (depth + 1 >= best_) return;
    }
  }

  const std::vector<Bits>& sets_;
  std::vector<std::vector<std::size_t>> containing_;
  std::size_t first_ = 0;
  std::size_t best_ = 0;
};

}  // namespace

void CoverInstance::normalize() {
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && s.back() >= universe_size) {
      throw DomainError("cover set element " + std::to_string(s.back()) +
                        " outside universe of size " + std::to_string(universe_size));
    }
  }
}

bool covers(const CoverInstance& inst, std::span<const std::size_t> chosen) {
  Bits seen(inst.universe_size);
  for (auto i : chosen) {
    if (i >= inst.sets.size()) return false;
    for (auto e : inst.sets[i]) {
      if (e < inst.universe_size) seen.set(e);
    }
  }
  return seen.all();
}

CoverSolution greedy_cover(const CoverInstance& inst) {
  const auto sets = to_bits(inst);
  require_feasible(inst, sets);

  CoverSolution out;
  Bits uncovered(inst.universe_size);
  uncovered.set();
  while (uncovered.any()) {
    std::size_t pick = 0;
    std::size_t gain = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::size_t g = (sets[i] & uncovered).count();
      if (g > gain) {
        gain = g;
        pick = i;
      }
    }
    uncovered -= sets[pick];
    out.chosen.push_back(pick);
  }
  std::sort(out.chosen.begin(), out.chosen.end());
  out.is_optimal = out.chosen.size() <= 1;
  return out;
}

CoverSolution exact_cover(const CoverInstance& inst) {
  const auto sets = to_bits(inst);
  require_feasible(inst, sets);

  Bits uncovered(inst.universe_size);
  uncovered.set();
  MinCoverSearch search(sets, inst.universe_size);
  const std::size_t upper = greedy_cover(inst).size();
  std::size_t budget = search.min_size(uncovered, 0, upper);

  // Lexicographically smallest cover of the optimal size: fix the smallest
  // index that still leaves a completion within budget.
  CoverSolution out;
  out.is_optimal = true;
  std::size_t next = 0;
  while (uncovered.any()) {
    bool placed = false;
    for (std::size_t i = next; i < sets.size(); ++i) {
      if (!sets[i].intersects(uncovered)) continue;
      const Bits rest = uncovered - sets[i];
      if (search.min_size(rest, i + 1, budget - 1) == kNone) continue;
      out.chosen.push_back(i);
      uncovered = rest;
      next = i + 1;
      --budget;
      placed = true;
      break;
    }
    if (!placed) {
      throw std::logic_error("exact cover: lexicographic reconstruction failed");
    }
  }
  return out;
}

bool decide_cover(const CoverInstance& inst, std::size_t k) {
  try {
    return exact_cover(inst).size() <= k;
  } catch (const InfeasibleError&) {
    return false;
  }
}

}  // namespace gcdlcm
