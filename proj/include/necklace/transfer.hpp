#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "necklace/blocks.hpp"
#include "necklace/core.hpp"

namespace necklace {

// Weighted digraph whose weight-n walks from Start to a terminal vertex
// count 2-regular spanning subgraphs (D') or Hamiltonian cycles (D) of
// G_{a,b}(n). Vertex 0 is always Start.
struct WeightedDigraph {
    enum class Construction { d_prime, d };
    enum class VertexKind { start, inner, end };

    struct Vertex {
        VertexKind kind;
        bool terminal = false; // walks may be counted as ending here
        std::optional<Block> block;
        std::optional<RowPairing> pairing; // only for D inner vertices
    };

    WeightedDigraph(Params p, Construction c) : params(p), construction(c) {}

    Params params;
    Construction construction;
    std::vector<Vertex> vertices;
    std::vector<std::vector<std::pair<int, int>>> out; // (target, weight)
};

// D'_{a,b}: vertices are Start plus the reachable blocks; Start -> every
// start block (weight 2b); B -> B2 for every compatible pair (weight =
// right length of B2); terminal vertices are the end-kind blocks.
WeightedDigraph build_D_prime(Params params);

// D_{a,b}: vertices are Start, (block, row pairing) states for start and
// mid blocks, and end blocks; built as a breadth-first reachable closure.
// Refuses b > 8 unless allow_large is set.
WeightedDigraph build_D(Params params, bool allow_large = false);

// Number of weight-n walks from Start to a terminal vertex.
BigInt count_walks(const WeightedDigraph& D, int n);

// Walk counts for every weight 0..n_max in a single pass.
std::vector<BigInt> count_walks_upto(const WeightedDigraph& D, int n_max);

// Exact necklace count: quick facts if decisive, depth-first search when
// n <= 2b, otherwise weight-n walks in D_{a,b}.
BigInt count_necklaces(Params params, int n, bool allow_large = false);

// Counts for n = a+b .. n_max (single DP pass over D for the large n).
std::vector<BigInt> sequence(Params params, int n_max, bool allow_large = false);

// Line-oriented export: "vertex <id> <kind>" then "edge <from> <to> <weight>".
std::string digraph_to_text(const WeightedDigraph& D);

} // namespace necklace
