#include "gcdlcm/circulant.hpp"

#include <queue>
#include <string>
#include <vector>

#include "gcdlcm/errors.hpp"

namespace gcdlcm {

namespace {

void require_nodes(const CirculantGraph& g) {
  if (g.m == 0) throw DomainError("circulant graph needs m >= 1");
  g.links.require_positive("links");
}

Nat modulus_gcd(const CirculantGraph& g) {
  Nat d = static_cast<unsigned long>(g.m);
  for (const auto& a : g.links) {
    mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), a.get_mpz_t());
  }
  return d;
}

}  // namespace

bool is_connected_gcd(const CirculantGraph& g) {
  require_nodes(g);
  return modulus_gcd(g) == 1;
}

bool is_connected_bfs(const CirculantGraph& g, std::uint64_t node_cap) {
  require_nodes(g);
  if (g.m > node_cap) {
    throw RefusalError("BFS refused: m = " + std::to_string(g.m) + " exceeds cap " +
                       std::to_string(node_cap));
  }
  const Nat modulus = static_cast<unsigned long>(g.m);
  std::vector<std::uint64_t> steps;
  for (const auto& a : g.links) {
    const Nat r = a % modulus;
    if (r != 0) steps.push_back(r.get_ui());
  }

  std::vector<bool> seen(g.m, false);
  std::queue<std::uint64_t> frontier;
  seen[0] = true;
  frontier.push(0);
  std::uint64_t reached = 1;
  while (!frontier.empty()) {
    const std::uint64_t i = frontier.front();
    frontier.pop();
    for (auto s : steps) {
      for (std::uint64_t j : {(i + s) % g.m, (i + g.m - s) % g.m}) {
        if (seen[j]) continue;
        seen[j] = true;
        ++reached;
        frontier.push(j);
      }
    }
  }
  return reached == g.m;
}

NatSet prune_links(const CirculantGraph& g, Method method) {
  require_nodes(g);
  const Nat d = modulus_gcd(g);
  if (d != 1) {
    throw InfeasibleError("circulant graph is disconnected",
                          "gcd(links ∪ {m}) = " + to_decimal(d) +
                              "; node 1 is not in the component of node 0");
  }
  ProblemInstance inst{g.links, NatSet{Nat(static_cast<unsigned long>(g.m))}, Mode::MinGcd};
  return solve(inst, method).s;
}

}  // namespace gcdlcm
