#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "necklace/core.hpp"

namespace necklace {

using Rational = boost::multiprecision::cpp_rational;

// f(n) = sum_{i=1..d} coeffs[i-1] * f(n-i), with coeffs.back() != 0.
struct LinearRecurrence {
    std::vector<Rational> coeffs;

    int order() const { return static_cast<int>(coeffs.size()); }
    std::string to_string() const;
    std::vector<Rational> coefficient_list() const { return coeffs; }
};

// Minimal-order recurrence generating seq (exact rational LFSR synthesis),
// or nothing when the minimal order d has 2d >= |seq| — too little
// evidence to report a recurrence.
std::optional<LinearRecurrence> detect_minimal(const std::vector<BigInt>& seq);

struct VerifyResult {
    bool ok;
    int first_failure = -1; // index into seq, when !ok

    explicit operator bool() const { return ok; }
};

// Checks seq[i] = sum c_j seq[i-j] for every i >= from_index.
VerifyResult verify(const LinearRecurrence& rec, const std::vector<BigInt>& seq,
                    int from_index);

// Appends `count` terms to a copy of seed via the recurrence. Throws if a
// produced term is not an integer (wrong recurrence/seed pairing).
std::vector<BigInt> extend(const LinearRecurrence& rec,
                           std::vector<BigInt> seed, int count);

} // namespace necklace
