#include "necklace/core.hpp"

#include <algorithm>
#include <numeric>

namespace necklace {

int Params::gcd() const { return std::gcd(a, b); }

ValidityReport validate(Params params, const std::vector<int>& beads) {
    const int n = static_cast<int>(beads.size());
    if (n < 3) return {false, "not a permutation: fewer than 3 beads"};
    std::vector<char> seen(n, 0);
    for (int x : beads) {
        if (x < 0 || x >= n)
            return {false, "not a permutation: bead " + std::to_string(x) +
                               " out of range"};
        if (seen[x])
            return {false,
                    "not a permutation: bead " + std::to_string(x) + " repeated"};
        seen[x] = 1;
    }
    for (int i = 0; i < n; ++i) {
        int x = beads[i];
        int y = beads[(i + 1) % n];
        int d = std::abs(x - y);
        if (d != params.a && d != params.b)
            return {false, "bad difference " + std::to_string(d) +
                               " at position " + std::to_string(i)};
    }
    return {};
}

std::vector<int> canonical_beads(Params params, const std::vector<int>& beads) {
    auto rep = validate(params, beads);
    if (!rep) throw std::invalid_argument("canonicalize: " + rep.reason);
    const int n = static_cast<int>(beads.size());
    int pos = static_cast<int>(
        std::find(beads.begin(), beads.end(), 0) - beads.begin());
    int next = beads[(pos + 1) % n];
    int prev = beads[(pos + n - 1) % n];
    std::vector<int> out(n);
    if (next < prev) {
        for (int i = 0; i < n; ++i) out[i] = beads[(pos + i) % n];
    } else {
        for (int i = 0; i < n; ++i) out[i] = beads[(pos + n - i) % n];
    }
    return out;
}

Necklace canonicalize(const Necklace& nk) {
    return {nk.params, canonical_beads(nk.params, nk.beads)};
}

std::optional<int> quick_facts(Params params, int n) {
    if (params.gcd() > 1) return 0;
    if (params.both_odd() && n % 2 == 1) return 0;
    if (n < params.a + params.b) return 0;
    if (n == params.a + params.b) return 1;
    return std::nullopt;
}

} // namespace necklace
