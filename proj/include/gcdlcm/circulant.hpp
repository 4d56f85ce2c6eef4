#pragma once

#include <cstdint>

#include "gcdlcm/numeric.hpp"
#include "gcdlcm/solver.hpp"

namespace gcdlcm {

/// Undirected circulant graph G(links, m): nodes 0..m-1, with i ~ j iff
/// |i - j| ≡ a (mod m) for some link a. Links are kept as given; a link
/// that is a multiple of m adds no edges.
struct CirculantGraph {
  std::uint64_t m = 1;
  NatSet links;
};

/// gcd(links ∪ {m}) == 1.
bool is_connected_gcd(const CirculantGraph& g);

/// Breadth-first search from node 0. RefusalError when m > node_cap.
bool is_connected_bfs(const CirculantGraph& g, std::uint64_t node_cap = 1'000'000);

/// Smallest (exact) or greedy-small S ⊆ links keeping G(S, m) connected,
/// i.e. the subset problem with B = {m}. Ties go to the lexicographically
/// smallest link list. InfeasibleError when g is disconnected.
NatSet prune_links(const CirculantGraph& g, Method method);

}  // namespace gcdlcm
