#pragma once

// Explicit existence constructions: the unique length-(a+b) necklace, snake
// necklaces for a = 1, the length-(3a+b) stitch, gluing of two necklaces,
// existence thresholds and the exponential lower bound.

#include <optional>
#include <vector>

#include "necklace/core.hpp"

namespace necklace {

// State of the stitch construction: residues t_i = -b*i mod a, multipliers
// k_i (unique with b <= t_i + k_i*a < b+a), and the segments S_i.
struct StitchState {
    std::vector<int> t;
    std::vector<int> k;
    std::vector<std::vector<int>> segments;
};

// The unique (a,b)-necklace of length a+b (gcd(a,b) = 1 required), built by
// walking from 0 via the three-range adjacency rule: beads x < a have
// neighbours x+a, x+b; a <= x < b have x+a, x-a; x >= b have x-a, x-b.
Necklace base_necklace(Params params);

// A (1,b)-necklace of length n for n >= 2b (n even when b is odd), chosen
// among four boustrophedon patterns by the parities of b and n.
Necklace snake(int b, int n);

// The (a,b)-necklace of length 3a+b obtained by stringing together the
// residue classes mod a (gcd = 1, 2 <= a, 2a <= b).
StitchState stitch_state(Params params);
Necklace stitch_3a_plus_b(Params params);

// Glues X and Y (same params) into a necklace of length |X|+|Y|: shifts X
// by |Y| and swaps one link pair. Returns nullopt when no admissible link
// exists (possible for a = 1; never for a >= 2).
std::optional<Necklace> glue(const Necklace& X, const Necklace& Y);

// Existence guarantee of the gluing machinery: necklaces of every length
// >= threshold exist (even lengths only when ab is odd).
struct ExistenceThreshold {
    long long threshold;
    bool even_only;
};
ExistenceThreshold existence_threshold(Params params);

// A necklace of length n when the constructions of this module apply:
// delegates to snake for a = 1; for a >= 2 writes n = x(a+b) + y(3a+b)
// with x,y >= 0 (minimal y) and folds glue over the pieces.
std::optional<Necklace> construct_any(Params params, int n);

// Lower bound on N_{a,b}(k(a+b)): (b-a)^(k-1) when 2a >= b or k = 1, else
// (b-a)(b-a-1)^(k-2).
BigInt expest_lower_bound(Params params, int k);

} // namespace necklace
