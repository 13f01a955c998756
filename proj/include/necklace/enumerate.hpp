#pragma once

// Brute-force DFS oracle: exact enumeration/counting of Hamiltonian cycles
// of G_{a,b}(n) and of 2-regular spanning subgraphs. Each undirected cycle
// is counted once (anchored at vertex 0, oriented toward the smaller of 0's
// two cycle-neighbours), so emitted bead sequences are already canonical.

#include <cstdint>
#include <optional>
#include <vector>

#include "necklace/core.hpp"

namespace necklace {

struct SearchOptions {
    // Visited search nodes before aborting with ResourceLimitError.
    std::uint64_t node_budget = 1'000'000'000ULL;
    // Optional stronger prune: reject states whose unvisited region is
    // disconnected from the path endpoint. Off by default.
    bool connectivity_prune = false;
};

// N_{a,b}(n): Hamiltonian cycles of G_{a,b}(n) up to rotation/reflection.
BigInt count_hamiltonian(Params params, int n, const SearchOptions& opt = {});

// All distinct necklaces in lexicographic order of their canonical bead
// sequences; search stops after `limit` witnesses when given.
std::vector<Necklace> enumerate_necklaces(Params params, int n,
                                          std::optional<std::size_t> limit = {},
                                          const SearchOptions& opt = {});

// Spanning subgraphs of G_{a,b}(n) in which every vertex has degree exactly
// 2 (disjoint unions of cycles), counted by backtracking.
BigInt count_2regular(Params params, int n, const SearchOptions& opt = {});

} // namespace necklace
