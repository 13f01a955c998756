#include "necklace/blocks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace necklace {

std::string to_string(BlockKind kind) {
    switch (kind) {
    case BlockKind::start: return "start";
    case BlockKind::mid: return "mid";
    case BlockKind::end: return "end";
    }
    return "?";
}

std::vector<std::pair<int, int>> edge_universe(Params params, int s) {
    const int a = params.a, b = params.b;
    if (s < 1 || s > b) throw std::invalid_argument("edge_universe: bad s");
    std::vector<std::pair<int, int>> uni;
    for (int i = 0; i + a < b; ++i) uni.push_back({i, i + a});          // left
    for (int i = 0; i + a < s; ++i) uni.push_back({b + i, b + i + a});  // right
    for (int i = 0; i < s; ++i) uni.push_back({i, b + i});              // diff b
    for (int j = 0; j < std::min(s, a); ++j)
        uni.push_back({j + b - a, b + j});                              // diff a
    if (uni.size() > 64)
        throw std::invalid_argument("edge_universe: too many edges for mask");
    return uni;
}

std::vector<std::pair<int, int>> Block::edges() const {
    auto uni = edge_universe(params, s);
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < uni.size(); ++i)
        if (mask >> i & 1) out.push_back(uni[i]);
    return out;
}

int Block::degree(int v) const {
    int d = 0;
    for (auto [u, w] : edges())
        if (u == v || w == v) ++d;
    return d;
}

bool Block::has_edge(int u, int v) const {
    for (auto [x, y] : edges())
        if ((x == u && y == v) || (x == v && y == u)) return true;
    return false;
}

namespace {

std::vector<int> degrees(const Block& B) {
    std::vector<int> deg(B.vertex_count(), 0);
    for (auto [u, v] : B.edges()) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool has_left_internal(const Block& B) {
    for (auto [u, v] : B.edges())
        if (u < B.params.b && v < B.params.b) return true;
    return false;
}

} // namespace

bool is_start_kind(const Block& B) {
    if (B.s != B.params.b) return false;
    auto deg = degrees(B);
    for (int v = 0; v < B.params.b; ++v)
        if (deg[v] != 2) return false;
    return true;
}

bool is_mid_kind(const Block& B) {
    if (B.s != B.params.b || has_left_internal(B)) return false;
    auto deg = degrees(B);
    for (int v = B.params.b; v < B.vertex_count(); ++v)
        if (deg[v] <= 1) return true;
    return false;
}

bool is_end_kind(const Block& B) {
    if (has_left_internal(B)) return false;
    auto deg = degrees(B);
    for (int v = B.params.b; v < B.vertex_count(); ++v)
        if (deg[v] != 2) return false;
    return true;
}

namespace {

// Backtracking enumerator over the fixed universe with per-vertex degree
// caps, exact-degree-2 requirements checked as soon as a vertex's last
// incident universe edge has been decided, and a final predicate.
template <typename Emit>
void enumerate_masks(const std::vector<std::pair<int, int>>& uni, int nverts,
                     const std::vector<int>& cap,
                     const std::vector<bool>& need2, Emit&& emit) {
    const int m = static_cast<int>(uni.size());
    std::vector<int> last(nverts, -1);
    for (int i = 0; i < m; ++i) {
        last[uni[i].first] = i;
        last[uni[i].second] = i;
    }
    std::vector<std::vector<int>> deadline(m + 1);
    for (int v = 0; v < nverts; ++v)
        if (need2[v]) deadline[last[v] + 1].push_back(v);

    std::vector<int> deg(nverts, 0);
    std::uint64_t mask = 0;
    auto ok_deadline = [&](int idx) {
        for (int v : deadline[idx])
            if (deg[v] != 2) return false;
        return true;
    };
    auto rec = [&](auto&& self, int idx) -> void {
        if (!ok_deadline(idx)) return;
        if (idx == m) {
            emit(mask);
            return;
        }
        self(self, idx + 1); // skip edge idx
        auto [u, v] = uni[idx];
        if (deg[u] < cap[u] && deg[v] < cap[v]) {
            ++deg[u];
            ++deg[v];
            mask |= 1ULL << idx;
            self(self, idx + 1);
            mask &= ~(1ULL << idx);
            --deg[u];
            --deg[v];
        }
    };
    rec(rec, 0);
}

} // namespace

BlockCollection enumerate_blocks(Params params) {
    if (params.gcd() > 1)
        throw std::invalid_argument("enumerate_blocks: gcd(a,b) > 1");
    const int b = params.b;
    BlockCollection out;
    out.end_by_s.resize(b);

    // Start blocks: full universe (left-internal edges allowed), every
    // left-column vertex degree exactly 2.
    {
        auto uni = edge_universe(params, b);
        std::vector<int> cap(2 * b, 2);
        std::vector<bool> need2(2 * b, false);
        for (int v = 0; v < b; ++v) need2[v] = true;
        enumerate_masks(uni, 2 * b, cap, need2, [&](std::uint64_t mask) {
            out.start.push_back({params, b, BlockKind::start, mask});
        });
    }

    // Mid and end blocks share a universe with no left-internal edges and a
    // degree cap of 1 on the top-left corner vertex. The restricted universe
    // is realized by capping: left-internal edges are excluded by giving the
    // recursion a universe without them.
    auto no_left_internal = [&](int s) {
        std::vector<std::pair<int, int>> uni;
        for (auto [u, v] : edge_universe(params, s))
            if (!(u < b && v < b)) uni.push_back({u, v});
        return uni;
    };

    // Mid blocks: s = b, some right-column vertex of degree <= 1.
    {
        auto uni = no_left_internal(b);
        std::vector<int> cap(2 * b, 2);
        cap[0] = 1;
        std::vector<bool> need2(2 * b, false);
        enumerate_masks(uni, 2 * b, cap, need2, [&](std::uint64_t mask) {
            Block B{params, b, BlockKind::mid, 0};
            // remap mask bits from the restricted universe to the full one
            auto full = edge_universe(params, b);
            std::uint64_t full_mask = 0;
            for (std::size_t i = 0; i < uni.size(); ++i)
                if (mask >> i & 1) {
                    auto it = std::find(full.begin(), full.end(), uni[i]);
                    full_mask |= 1ULL << (it - full.begin());
                }
            B.mask = full_mask;
            if (is_mid_kind(B)) out.mid.push_back(B);
        });
    }

    // End blocks: every s in 1..b, all right-column vertices degree 2.
    for (int s = 1; s <= b; ++s) {
        auto uni = no_left_internal(s);
        auto full = edge_universe(params, s);
        std::vector<int> cap(b + s, 2);
        cap[0] = 1;
        std::vector<bool> need2(b + s, false);
        for (int v = b; v < b + s; ++v) need2[v] = true;
        enumerate_masks(uni, b + s, cap, need2, [&](std::uint64_t mask) {
            std::uint64_t full_mask = 0;
            for (std::size_t i = 0; i < uni.size(); ++i)
                if (mask >> i & 1) {
                    auto it = std::find(full.begin(), full.end(), uni[i]);
                    full_mask |= 1ULL << (it - full.begin());
                }
            out.end_by_s[s - 1].push_back({params, s, BlockKind::end, full_mask});
        });
    }

    auto sort_blocks = [](std::vector<Block>& v) {
        std::sort(v.begin(), v.end());
    };
    sort_blocks(out.start);
    sort_blocks(out.mid);
    for (auto& v : out.end_by_s) sort_blocks(v);
    return out;
}

std::vector<Block> BlockCollection::all() const {
    std::vector<Block> v = start;
    v.insert(v.end(), mid.begin(), mid.end());
    for (const auto& e : end_by_s) v.insert(v.end(), e.begin(), e.end());
    return v;
}

bool is_compatible(const Block& B, const Block& B2) {
    if (!(B.params == B2.params)) return false;
    const int b = B.params.b;
    if (B.s != b) return false;
    std::vector<int> dB = degrees(B), dB2 = degrees(B2);
    for (int i = 0; i < b; ++i)
        if (dB[b + i] + dB2[i] != 2) return false;
    return true;
}

std::string RowPairing::to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto [i, j] : pairs) {
        if (!first) out += ",";
        first = false;
        out += "{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }
    return out + "}";
}

bool ColumnGraph::acyclic() const { return cycle_count() == 0; }

int ColumnGraph::cycle_count() const {
    // Degree <= 2 graphs: components are paths or cycles; a component is a
    // cycle iff its edge count equals its vertex count.
    int n = static_cast<int>(adj.size());
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        int verts = 0, degsum = 0;
        std::vector<int> stack{v};
        seen[v] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++verts;
            degsum += static_cast<int>(adj[x].size());
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        if (degsum == 2 * verts && verts > 0 && degsum > 0) ++cycles;
    }
    return cycles;
}

bool ColumnGraph::cycle_plus_isolated() const {
    for (const auto& nb : adj)
        if (nb.size() == 1 || nb.size() > 2) return false;
    return cycle_count() == 1;
}

ColumnGraph graph_of(const Block& B) {
    ColumnGraph g;
    g.adj.resize(B.vertex_count());
    for (auto [u, v] : B.edges()) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    g.rightmost_offset = B.params.b;
    g.rightmost_len = B.s;
    return g;
}

ColumnGraph glue_blocks(Params params, const std::vector<Block>& seq) {
    if (seq.empty()) throw std::invalid_argument("glue_blocks: empty sequence");
    const int b = params.b;
    const int q = static_cast<int>(seq.size());
    ColumnGraph g;
    g.rightmost_offset = q * b;
    g.rightmost_len = seq.back().s;
    g.adj.resize(q * b + seq.back().s);
    for (int j = 1; j <= q; ++j) {
        int left_off = (j - 1) * b, right_off = j * b;
        for (auto [u, v] : seq[j - 1].edges()) {
            int gu = u < b ? left_off + u : right_off + (u - b);
            int gv = v < b ? left_off + v : right_off + (v - b);
            g.adj[gu].push_back(gv);
            g.adj[gv].push_back(gu);
        }
    }
    return g;
}

RowPairing pairing_of(const ColumnGraph& H) {
    int n = static_cast<int>(H.adj.size());
    auto in_rightmost = [&](int v) {
        return v >= H.rightmost_offset &&
               v < H.rightmost_offset + H.rightmost_len;
    };
    std::vector<bool> seen(n, false);
    RowPairing L;
    for (int v = 0; v < n; ++v) {
        if (seen[v] || H.degree(v) != 1) continue;
        // Walk the maximal path starting at endpoint v.
        int prev = -1, cur = v;
        seen[cur] = true;
        while (true) {
            int next = -1;
            for (int w : H.adj[cur])
                if (w != prev) {
                    next = w;
                    break;
                }
            if (next == -1) break;
            prev = cur;
            cur = next;
            seen[cur] = true;
        }
        if (!in_rightmost(v) || !in_rightmost(cur))
            throw std::invalid_argument(
                "pairing_of: path endpoint outside rightmost column");
        int i = v - H.rightmost_offset, j = cur - H.rightmost_offset;
        L.pairs.insert({std::min(i, j), std::max(i, j)});
    }
    return L;
}

RowPairing pairing_of(const Block& B) { return pairing_of(graph_of(B)); }

bool AugmentedBlock::degrees_ok() const {
    for (std::size_t v = 0; v < graph.adj.size(); ++v) {
        int d = graph.degree(static_cast<int>(v));
        if (d > 2) return false;
        if (static_cast<int>(v) < block.params.b && d == 1) return false;
    }
    return true;
}

AugmentedBlock augment(const Block& B, const RowPairing& L) {
    if (B.kind == BlockKind::start)
        throw std::invalid_argument("augment: B must be a mid or end block");
    AugmentedBlock ab{B, L, graph_of(B)};
    for (auto [i, j] : L.pairs) {
        ab.graph.adj[i].push_back(j);
        ab.graph.adj[j].push_back(i);
    }
    return ab;
}

std::vector<Block> decompose(Params params, int n,
                             const std::vector<std::pair<int, int>>& edges) {
    const int a = params.a, b = params.b;
    if (n <= 2 * b) throw std::invalid_argument("decompose: n > 2b required");
    const int q = (n - 1) / b, r = (n - 1) % b;

    std::vector<int> deg(n, 0);
    for (auto [x, y] : edges) {
        if (x < 0 || y < 0 || x >= n || y >= n || x == y)
            throw std::invalid_argument("decompose: edge out of range");
        ++deg[x];
        ++deg[y];
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] != 2)
            throw std::invalid_argument("decompose: input is not 2-regular");

    std::vector<std::uint64_t> masks(q, 0);
    std::vector<std::map<std::pair<int, int>, int>> index(q);
    for (int j = 1; j <= q; ++j) {
        int s = j == q ? r + 1 : b;
        auto uni = edge_universe(params, s);
        for (std::size_t i = 0; i < uni.size(); ++i) index[j - 1][uni[i]] = static_cast<int>(i);
    }
    auto add = [&](int j, int u, int v) {
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        auto it = index[j - 1].find(key);
        if (it == index[j - 1].end())
            throw std::invalid_argument("decompose: edge not in block universe");
        masks[j - 1] |= 1ULL << it->second;
    };
    for (auto [x, y] : edges) {
        if (x > y) std::swap(x, y);
        if (y - x != a && y - x != b)
            throw std::invalid_argument("decompose: edge difference not a or b");
        int cx = x / b, cy = y / b;
        if (cx == cy) {
            // within-column edge: left-internal of block cx+1 (kept only for
            // block 1), otherwise right-internal of block cx
            if (cx == 0)
                add(1, x % b, y % b);
            else
                add(cx, b + x % b, b + y % b);
        } else {
            add(cy, x % b, b + y % b);
        }
    }

    std::vector<Block> seq;
    for (int j = 1; j <= q; ++j) {
        int s = j == q ? r + 1 : b;
        Block B{params, s, BlockKind::mid, masks[j - 1]};
        if (j == 1)
            B.kind = BlockKind::start;
        else if (j == q)
            B.kind = BlockKind::end;
        else
            B.kind = is_mid_kind(B) ? BlockKind::mid : BlockKind::end;
        seq.push_back(B);
    }
    return seq;
}

std::vector<std::pair<int, int>> edge_list(const Necklace& H) {
    std::vector<std::pair<int, int>> edges;
    int n = H.size();
    for (int i = 0; i < n; ++i) {
        int x = H.beads[i], y = H.beads[(i + 1) % n];
        edges.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<Block> decompose(const Necklace& H) {
    return decompose(H.params, H.size(), edge_list(H));
}

std::vector<std::pair<int, int>> reglue(Params params,
                                        const std::vector<Block>& seq) {
    const int b = params.b;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t j = 1; j <= seq.size(); ++j) {
        int left_off = static_cast<int>(j - 1) * b, right_off = static_cast<int>(j) * b;
        for (auto [u, v] : seq[j - 1].edges()) {
            int gu = u < b ? left_off + u : right_off + (u - b);
            int gv = v < b ? left_off + v : right_off + (v - b);
            edges.push_back({std::min(gu, gv), std::max(gu, gv)});
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::string block_to_text(const Block& B) {
    std::string out = "block " + to_string(B.kind) + " " + std::to_string(B.s) + "\n";
    for (auto [u, v] : B.edges())
        out += std::to_string(u) + "-" + std::to_string(v) + "\n";
    return out;
}

} // namespace necklace
