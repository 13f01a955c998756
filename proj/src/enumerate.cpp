#include "necklace/enumerate.hpp"

#include <algorithm>
#include <cstring>
#include <functional>

namespace necklace {

namespace {

// Shared DFS over Hamiltonian paths anchored at 0. `emit` receives each
// completed cycle as a bead sequence starting 0, second bead < last bead
// (i.e. already canonical); it returns false to stop the search.
class HamiltonianSearch {
public:
    HamiltonianSearch(Params params, int n, const SearchOptions& opt)
        : g_(params, n), n_(n), opt_(opt) {
        adj_.resize(n);
        for (int v = 0; v < n; ++v) adj_[v] = g_.neighbors(v);
        visited_.assign(n, 0);
        // base[w] = (#unvisited neighbours of w) + (w adjacent to 0 ? 1 : 0).
        // The closing slot at 0 stays available for the whole search.
        base_.resize(n);
        for (int v = 0; v < n; ++v)
            base_[v] =
                static_cast<int>(adj_[v].size()) + (g_.adjacent(v, 0) ? 1 : 0);
    }

    void run(const std::function<bool(const std::vector<int>&)>& emit) {
        if (n_ < 3) return;
        emit_ = &emit;
        path_.clear();
        path_.push_back(0);
        visit(0);
        // Try every first step; orientation is enforced at closure time
        // (first neighbour of 0 must be smaller than the last one).
        for (int f : adj_[0]) {
            path_.push_back(f);
            visit(f);
            if (!dfs(f)) break;
            unvisit(f);
            path_.pop_back();
        }
    }

private:
    void visit(int v) {
        visited_[v] = 1;
        for (int w : adj_[v]) --base_[w];
    }
    void unvisit(int v) {
        visited_[v] = 0;
        for (int w : adj_[v]) ++base_[w];
    }

    bool budget_ok() {
        if (++nodes_ > opt_.node_budget)
            throw ResourceLimitError("node budget exceeded");
        return true;
    }

    // Every unvisited vertex must keep at least 2 usable connections:
    // unvisited neighbours, the path head, or the open slot at 0. Only
    // vertices adjacent to the previous head changed when the head moved.
    bool prune_ok(int head, int prev) const {
        for (int w : adj_[prev]) {
            if (visited_[w]) continue;
            int usable = base_[w] + (g_.adjacent(w, head) ? 1 : 0);
            if (usable < 2) return false;
        }
        return true;
    }

    bool connected_ok(int head) const {
        // BFS over unvisited vertices starting from head's unvisited
        // neighbourhood; all unvisited vertices must be reachable.
        int remaining = n_ - static_cast<int>(path_.size());
        if (remaining == 0) return true;
        std::vector<int> stack;
        std::vector<char> mark(n_, 0);
        for (int w : adj_[head])
            if (!visited_[w] && !mark[w]) {
                mark[w] = 1;
                stack.push_back(w);
            }
        int seen = static_cast<int>(stack.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (!visited_[w] && !mark[w]) {
                    mark[w] = 1;
                    ++seen;
                    stack.push_back(w);
                }
        }
        return seen == remaining;
    }

    bool dfs(int head) {
        budget_ok();
        if (static_cast<int>(path_.size()) == n_) {
            if (g_.adjacent(head, 0) && path_[1] < head)
                return (*emit_)(path_);
            return true;
        }
        if (opt_.connectivity_prune && !connected_ok(head)) return true;
        for (int v : adj_[head]) {
            if (visited_[v]) continue;
            path_.push_back(v);
            visit(v);
            if (prune_ok(v, head)) {
                if (!dfs(v)) return false;
            }
            unvisit(v);
            path_.pop_back();
        }
        return true;
    }

    GridGraph g_;
    int n_;
    SearchOptions opt_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> visited_;
    std::vector<int> base_;
    std::vector<int> path_;
    std::uint64_t nodes_ = 0;
    const std::function<bool(const std::vector<int>&)>* emit_ = nullptr;
};

} // namespace

BigInt count_hamiltonian(Params params, int n, const SearchOptions& opt) {
    if (auto qf = quick_facts(params, n)) return *qf;
    std::uint64_t count = 0;
    HamiltonianSearch search(params, n, opt);
    search.run([&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

std::vector<Necklace> enumerate_necklaces(Params params, int n,
                                          std::optional<std::size_t> limit,
                                          const SearchOptions& opt) {
    std::vector<Necklace> out;
    if (limit && *limit == 0) return out;
    if (auto qf = quick_facts(params, n); qf && *qf == 0) return out;
    HamiltonianSearch search(params, n, opt);
    search.run([&](const std::vector<int>& beads) {
        out.push_back(Necklace{params, beads});
        return !(limit && out.size() >= *limit);
    });
    std::sort(out.begin(), out.end(),
              [](const Necklace& x, const Necklace& y) { return x.beads < y.beads; });
    return out;
}

BigInt count_2regular(Params params, int n, const SearchOptions& opt) {
    if (n < 3) return 0;
    GridGraph g(params, n);
    // Backtrack vertex by vertex; when vertex v is reached, edges to lower
    // vertices are fixed, so v must complete its degree to exactly 2 using
    // neighbours above it.
    std::vector<std::vector<int>> up(n);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            if (w > v) up[v].push_back(w);
    std::vector<int> deg(n, 0);
    std::uint64_t nodes = 0;
    BigInt count = 0;
    std::function<void(int)> rec = [&](int v) {
        if (++nodes > opt.node_budget)
            throw ResourceLimitError("node budget exceeded");
        if (v == n) {
            ++count;
            return;
        }
        int need = 2 - deg[v];
        if (need < 0) return;
        const auto& cand = up[v];
        int m = static_cast<int>(cand.size());
        // Choose `need` of the (at most two) upward neighbours.
        std::function<void(int, int)> choose = [&](int idx, int left) {
            if (left == 0) {
                rec(v + 1);
                return;
            }
            if (m - idx < left) return;
            int w = cand[idx];
            if (deg[w] < 2) {
                ++deg[w];
                choose(idx + 1, left - 1);
                --deg[w];
            }
            choose(idx + 1, left);
        };
        choose(0, need);
    };
    rec(0);
    return count;
}

} // namespace necklace
