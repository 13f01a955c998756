#include "necklace/transfer.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "necklace/enumerate.hpp"

namespace necklace {

namespace {

std::vector<int> left_degrees(const Block& B) {
    std::vector<int> deg(B.params.b, 0);
    for (auto [u, v] : B.edges()) {
        if (u < B.params.b) ++deg[u];
        if (v < B.params.b) ++deg[v];
    }
    return deg;
}

std::vector<int> right_degrees(const Block& B) {
    std::vector<int> deg(B.params.b, 0); // padded to b for lookups
    for (auto [u, v] : B.edges()) {
        if (u >= B.params.b) ++deg[u - B.params.b];
        if (v >= B.params.b) ++deg[v - B.params.b];
    }
    return deg;
}

// Successor candidates (mid and end blocks) indexed by left-degree vector,
// so that compatible blocks are found by a single map lookup: B2 is
// compatible with B iff ldeg(B2) = 2 - rdeg(B) componentwise.
struct CandidateIndex {
    std::vector<Block> blocks;
    std::vector<std::vector<std::pair<int, int>>> edges;
    std::map<std::vector<int>, std::vector<int>> by_left_degree;

    void add(const Block& B) {
        by_left_degree[left_degrees(B)].push_back(static_cast<int>(blocks.size()));
        edges.push_back(B.edges());
        blocks.push_back(B);
    }
    const std::vector<int>* matching(const std::vector<int>& rdeg, int b) const {
        std::vector<int> need(b);
        for (int i = 0; i < b; ++i) {
            if (rdeg[i] > 2) return nullptr;
            need[i] = 2 - rdeg[i];
        }
        auto it = by_left_degree.find(need);
        return it == by_left_degree.end() ? nullptr : &it->second;
    }
};

ColumnGraph augmented_graph(const Block& B,
                            const std::vector<std::pair<int, int>>& edges,
                            const RowPairing& L) {
    ColumnGraph g;
    g.adj.resize(B.vertex_count());
    for (auto [u, v] : edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto [i, j] : L.pairs) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
    }
    g.rightmost_offset = B.params.b;
    g.rightmost_len = B.s;
    return g;
}

} // namespace

WeightedDigraph build_D_prime(Params params) {
    if (params.gcd() > 1)
        throw std::invalid_argument("build_D_prime: gcd(a,b) > 1");
    const int b = params.b;
    BlockCollection coll = enumerate_blocks(params);

    CandidateIndex cand;
    for (const Block& B : coll.mid) cand.add(B);
    for (const auto& ends : coll.end_by_s)
        for (const Block& B : ends) cand.add(B);

    WeightedDigraph D(params, WeightedDigraph::Construction::d_prime);
    D.vertices.push_back({WeightedDigraph::VertexKind::start, false, {}, {}});
    D.out.emplace_back();

    std::map<Block, int> id_of;
    std::deque<int> queue;
    auto vertex_for = [&](const Block& B) {
        auto it = id_of.find(B);
        if (it != id_of.end()) return it->second;
        int id = static_cast<int>(D.vertices.size());
        WeightedDigraph::VertexKind k = is_end_kind(B)
                                            ? WeightedDigraph::VertexKind::end
                                            : WeightedDigraph::VertexKind::inner;
        D.vertices.push_back({k, is_end_kind(B), B, {}});
        D.out.emplace_back();
        id_of[B] = id;
        queue.push_back(id);
        return id;
    };

    for (const Block& B : coll.start) {
        int tgt = vertex_for(B); // may grow D.out
        D.out[0].push_back({tgt, 2 * b});
    }

    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        const Block B = *D.vertices[id].block; // copy: D.vertices may grow
        if (B.s != b) continue; // no successors possible
        auto rdeg = right_degrees(B);
        const std::vector<int>* next = cand.matching(rdeg, b);
        if (!next) continue;
        for (int ci : *next) {
            int tgt = vertex_for(cand.blocks[ci]);
            D.out[id].push_back({tgt, cand.blocks[ci].s});
        }
    }
    return D;
}

WeightedDigraph build_D(Params params, bool allow_large) {
    if (params.gcd() > 1)
        throw std::invalid_argument("build_D: gcd(a,b) > 1");
    if (params.b > 8 && !allow_large)
        throw std::invalid_argument(
            "build_D: b > 8 needs allow_large (memory cliff)");
    const int b = params.b;
    BlockCollection coll = enumerate_blocks(params);

    CandidateIndex cand;
    for (const Block& B : coll.mid) cand.add(B);
    for (const auto& ends : coll.end_by_s)
        for (const Block& B : ends) cand.add(B);

    WeightedDigraph D(params, WeightedDigraph::Construction::d);
    D.vertices.push_back({WeightedDigraph::VertexKind::start, false, {}, {}});
    D.out.emplace_back();

    std::map<std::pair<Block, RowPairing>, int> inner_id;
    std::map<Block, int> end_id;
    std::deque<int> queue;

    auto inner_vertex = [&](const Block& B, const RowPairing& L) {
        auto key = std::make_pair(B, L);
        auto it = inner_id.find(key);
        if (it != inner_id.end()) return it->second;
        int id = static_cast<int>(D.vertices.size());
        D.vertices.push_back({WeightedDigraph::VertexKind::inner, false, B, L});
        D.out.emplace_back();
        inner_id[key] = id;
        queue.push_back(id);
        return id;
    };
    auto end_vertex = [&](const Block& B) {
        auto it = end_id.find(B);
        if (it != end_id.end()) return it->second;
        int id = static_cast<int>(D.vertices.size());
        D.vertices.push_back({WeightedDigraph::VertexKind::end, true, B, {}});
        D.out.emplace_back();
        end_id[B] = id;
        return id;
    };

    // Rule 1: Start -> (B, L(B)) for every acyclic start block B.
    for (const Block& B : coll.start) {
        ColumnGraph g = graph_of(B);
        if (!g.acyclic()) continue;
        int tgt = inner_vertex(B, pairing_of(g)); // may grow D.out
        D.out[0].push_back({tgt, 2 * b});
    }

    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        const Block B = *D.vertices[id].block;       // copies: D.vertices
        const RowPairing L = *D.vertices[id].pairing; // may grow below
        auto rdeg = right_degrees(B);
        const std::vector<int>* next = cand.matching(rdeg, b);
        if (!next) continue;
        for (int ci : *next) {
            const Block& B2 = cand.blocks[ci];
            ColumnGraph aug = augmented_graph(B2, cand.edges[ci], L);
            if (B2.kind == BlockKind::mid) {
                // Rule 2: append a mid block when the augmented block stays
                // acyclic; the new state carries the propagated pairing.
                if (!aug.acyclic()) continue;
                int tgt = inner_vertex(B2, pairing_of(aug)); // may grow D.out
                D.out[id].push_back({tgt, b});
            } else {
                // Rule 3: close with an end block when the augmented block
                // minus isolated vertices is a single cycle.
                if (!aug.cycle_plus_isolated()) continue;
                int tgt = end_vertex(B2); // may grow D.out
                D.out[id].push_back({tgt, B2.s});
            }
        }
    }
    return D;
}

std::vector<BigInt> count_walks_upto(const WeightedDigraph& D, int n_max) {
    const int V = static_cast<int>(D.vertices.size());
    std::vector<std::vector<BigInt>> table(
        n_max + 1, std::vector<BigInt>(V, BigInt(0)));
    table[0][0] = 1;
    std::vector<BigInt> result(n_max + 1, BigInt(0));
    for (int w = 0; w <= n_max; ++w) {
        for (int v = 0; v < V; ++v) {
            if (table[w][v] == 0) continue;
            if (D.vertices[v].terminal) result[w] += table[w][v];
            for (auto [tgt, wt] : D.out[v])
                if (w + wt <= n_max) table[w + wt][tgt] += table[w][v];
        }
    }
    return result;
}

BigInt count_walks(const WeightedDigraph& D, int n) {
    if (n <= 2 * D.params.b)
        throw std::invalid_argument("count_walks: n > 2b required");
    return count_walks_upto(D, n)[n];
}

BigInt count_necklaces(Params params, int n, bool allow_large) {
    if (auto f = quick_facts(params, n)) return BigInt(*f);
    if (n <= 2 * params.b) return count_hamiltonian(params, n);
    return count_walks(build_D(params, allow_large), n);
}

std::vector<BigInt> sequence(Params params, int n_max, bool allow_large) {
    std::vector<BigInt> out;
    if (n_max < params.a + params.b) return out;
    std::optional<std::vector<BigInt>> walks;
    if (params.gcd() == 1 && n_max > 2 * params.b &&
        (params.b <= 8 || allow_large))
        walks = count_walks_upto(build_D(params, allow_large), n_max);
    for (int n = params.a + params.b; n <= n_max; ++n) {
        if (auto f = quick_facts(params, n))
            out.push_back(BigInt(*f));
        else if (walks && n > 2 * params.b)
            out.push_back((*walks)[n]);
        else
            out.push_back(count_hamiltonian(params, n));
    }
    return out;
}

std::string digraph_to_text(const WeightedDigraph& D) {
    std::string out;
    for (std::size_t v = 0; v < D.vertices.size(); ++v) {
        const char* kind = "inner";
        if (D.vertices[v].kind == WeightedDigraph::VertexKind::start)
            kind = "start";
        else if (D.vertices[v].terminal)
            kind = "end";
        out += "vertex " + std::to_string(v) + " " + kind + "\n";
    }
    for (std::size_t v = 0; v < D.vertices.size(); ++v)
        for (auto [tgt, wt] : D.out[v])
            out += "edge " + std::to_string(v) + " " + std::to_string(tgt) +
                   " " + std::to_string(wt) + "\n";
    return out;
}

} // namespace necklace
