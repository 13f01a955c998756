#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "necklace/core.hpp"

namespace necklace {

// A block is a two-column degree-<=2 subgraph: left column rows 0..b-1 are
// vertices 0..b-1, right column rows 0..s-1 are vertices b..b+s-1. Edges are
// drawn from a fixed universe (within-column steps of a, cross edges of
// difference b and a) and stored as a bitmask over that universe in canonical
// order.
enum class BlockKind { start, mid, end };

std::string to_string(BlockKind kind);

// Canonical edge universe for a two-column window with right length s.
std::vector<std::pair<int, int>> edge_universe(Params params, int s);

struct Block {
    Params params;
    int s = 0; // right column length, 1..b
    BlockKind kind = BlockKind::mid;
    std::uint64_t mask = 0; // bits index into edge_universe(params, s)

    std::vector<std::pair<int, int>> edges() const;
    int vertex_count() const { return params.b + s; }
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool operator==(const Block& o) const {
        return params == o.params && s == o.s && mask == o.mask;
    }
    bool operator<(const Block& o) const {
        return s != o.s ? s < o.s : mask < o.mask;
    }
};

// Kind predicates, recomputed from the edge set (used to cross-check the
// stored kind tag and to classify blocks found by decompose).
bool is_start_kind(const Block& B);
bool is_mid_kind(const Block& B);
bool is_end_kind(const Block& B);

struct BlockCollection {
    std::vector<Block> start; // s = b
    std::vector<Block> mid;   // s = b
    std::vector<std::vector<Block>> end_by_s; // end_by_s[s-1], s = 1..b
    std::vector<Block> all() const;
};

// Complete, duplicate-free enumeration of blocks of every kind; end blocks
// for every s in 1..b. Mid and end blocks additionally satisfy the top-left
// corner constraint deg(L_0) <= 1.
BlockCollection enumerate_blocks(Params params);

// True iff B's right column has length b and identifying it with B2's left
// column gives every shared vertex degree exactly 2.
bool is_compatible(const Block& B, const Block& B2);

struct RowPairing {
    std::set<std::pair<int, int>> pairs; // {i,j} with i < j

    bool operator==(const RowPairing& o) const { return pairs == o.pairs; }
    bool operator<(const RowPairing& o) const { return pairs < o.pairs; }
    std::string to_string() const;
};

// A multi-column degree-<=2 graph built by gluing a compatible block
// sequence; also used to wrap a single block or an augmented block.
struct ColumnGraph {
    std::vector<std::vector<int>> adj;
    int rightmost_offset = 0; // first vertex id of the rightmost column
    int rightmost_len = 0;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool acyclic() const;
    // True iff deleting isolated vertices leaves exactly one cycle.
    bool cycle_plus_isolated() const;
    int cycle_count() const;
};

ColumnGraph graph_of(const Block& B);
// Glue a compatible sequence B1,...,Bq (Bi spans columns i-1,i).
ColumnGraph glue_blocks(Params params, const std::vector<Block>& seq);

// Row pairing of a graph: one pair {i,j} per maximal path whose two
// endpoints sit in rows i,j of the rightmost column; isolated vertices
// contribute nothing. Throws std::invalid_argument if a path endpoint lies
// outside the rightmost column.
RowPairing pairing_of(const ColumnGraph& H);
RowPairing pairing_of(const Block& B);

struct AugmentedBlock {
    Block block;
    RowPairing pairing;
    ColumnGraph graph; // block plus one left-column edge per pair

    bool acyclic() const { return graph.acyclic(); }
    bool cycle_plus_isolated() const { return graph.cycle_plus_isolated(); }
    bool degrees_ok() const; // max degree 2, left-column degrees in {0,2}
    RowPairing pairing_of() const { return necklace::pairing_of(graph); }
};

// B^L: B (mid or end) plus a virtual left-column edge per pair of L.
AugmentedBlock augment(const Block& B, const RowPairing& L);

// Unique block decomposition of a 2-regular spanning subgraph of
// G_{a,b}(n), given as an edge list. B1 is the induced subgraph on columns
// 0-1; Bj is the induced subgraph on columns j-1,j minus left-column edges.
std::vector<Block> decompose(Params params, int n,
                             const std::vector<std::pair<int, int>>& edges);
std::vector<Block> decompose(const Necklace& H);

// Inverse of decompose: the sorted global edge list of the glued sequence.
std::vector<std::pair<int, int>> reglue(Params params,
                                        const std::vector<Block>& seq);

// Edge list of a necklace (sorted pairs), for round-trip comparisons.
std::vector<std::pair<int, int>> edge_list(const Necklace& H);

// Debug export: "block <kind> <s>" header then one "u-v" line per edge.
std::string block_to_text(const Block& B);

} // namespace necklace
