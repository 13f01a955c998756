#pragma once

// Core model of (a,b)-difference necklaces and the graph G_{a,b}(n):
// vertices 0..n-1, edges between integers differing by a or b. A necklace
// is a Hamiltonian cycle of that graph, considered up to rotation and
// reflection.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace necklace {

using BigInt = boost::multiprecision::cpp_int;

// Thrown when a configured search budget is exhausted.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The difference pair (a,b), 1 <= a < b.
struct Params {
    int a;
    int b;

    Params(int a_, int b_) : a(a_), b(b_) {
        if (a < 1 || a >= b)
            throw std::invalid_argument("Params: need 1 <= a < b");
    }

    int gcd() const;
    bool both_odd() const { return a % 2 == 1 && b % 2 == 1; }

    bool operator==(const Params& o) const { return a == o.a && b == o.b; }
};

// A circular arrangement of 0..n-1 whose cyclically adjacent beads differ
// by +-a or +-b. `beads` stores one traversal order.
struct Necklace {
    Params params;
    std::vector<int> beads;

    int size() const { return static_cast<int>(beads.size()); }
};

// G_{a,b}(n) with the column/row layout n-1 = q*b + r: vertex j*b + i sits
// in column j, row i; columns 0..q, the last column has r+1 vertices.
struct GridGraph {
    Params params;
    int n;
    int q; // last column index
    int r; // last column has rows 0..r

    GridGraph(Params p, int n_) : params(p), n(n_) {
        if (n < 1) throw std::invalid_argument("GridGraph: n >= 1 required");
        q = (n - 1) / params.b;
        r = (n - 1) % params.b;
    }

    int column_count() const { return q + 1; }
    int last_column_len() const { return r + 1; }
    int column_of(int x) const { return x / params.b; }
    int row_of(int x) const { return x % params.b; }
    int vertex(int col, int row) const { return col * params.b + row; }

    // At most four neighbours: x +- a, x +- b clipped to range.
    std::vector<int> neighbors(int x) const {
        std::vector<int> out;
        out.reserve(4);
        for (int d : {-params.b, -params.a, params.a, params.b}) {
            int y = x + d;
            if (0 <= y && y < n) out.push_back(y);
        }
        return out;
    }

    bool adjacent(int x, int y) const {
        int d = x > y ? x - y : y - x;
        return (d == params.a || d == params.b) && 0 <= x && x < n && 0 <= y &&
               y < n;
    }
};

inline GridGraph build_graph(Params params, int n) { return GridGraph(params, n); }

// Outcome of validate(): ok, or the first violated constraint in words.
struct ValidityReport {
    bool ok = true;
    std::string reason; // empty when ok

    explicit operator bool() const { return ok; }
};

// Accepts iff beads is a permutation of 0..n-1 and every cyclic difference
// lies in {a,b}. Distinguishes "not a permutation" from "bad difference".
ValidityReport validate(Params params, const std::vector<int>& beads);

// Canonical representative of the rotation/reflection orbit: rotate so bead
// 0 comes first, orient toward the smaller of 0's two neighbours.
Necklace canonicalize(const Necklace& nk);
std::vector<int> canonical_beads(Params params, const std::vector<int>& beads);

// Closed-form trivial counts: 0 when gcd(a,b) > 1, 0 when a,b both odd and
// n odd, 0 when n < a+b, 1 when n = a+b and gcd = 1; nullopt otherwise.
std::optional<int> quick_facts(Params params, int n);

} // namespace necklace
