#include "necklace/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace necklace {

namespace {

// Berlekamp–Massey over the rationals: returns the shortest connection
// polynomial c with s[n] = sum_{i=1..L} c[i] s[n-i] for all n >= L.
std::vector<Rational> minimal_lfsr(const std::vector<Rational>& s) {
    const int n = static_cast<int>(s.size());
    std::vector<Rational> C{1}, Bp{1}; // connection and backup polynomials
    int L = 0, m = 1;
    Rational bdisc = 1;
    for (int i = 0; i < n; ++i) {
        Rational d = s[i];
        for (int j = 1; j <= L; ++j) d += C[j] * s[i - j];
        if (d == 0) {
            ++m;
        } else if (2 * L <= i) {
            std::vector<Rational> T = C;
            Rational f = d / bdisc;
            if (static_cast<int>(C.size()) < static_cast<int>(Bp.size()) + m)
                C.resize(Bp.size() + m, Rational(0));
            for (std::size_t j = 0; j < Bp.size(); ++j) C[j + m] -= f * Bp[j];
            L = i + 1 - L;
            Bp = T;
            bdisc = d;
            m = 1;
        } else {
            Rational f = d / bdisc;
            if (static_cast<int>(C.size()) < static_cast<int>(Bp.size()) + m)
                C.resize(Bp.size() + m, Rational(0));
            for (std::size_t j = 0; j < Bp.size(); ++j) C[j + m] -= f * Bp[j];
            ++m;
        }
    }
    // coefficients c_i = -C[i] for i = 1..L
    std::vector<Rational> coeffs(L);
    C.resize(L + 1, Rational(0));
    for (int i = 1; i <= L; ++i) coeffs[i - 1] = -C[i];
    return coeffs;
}

bool holds_everywhere(const std::vector<Rational>& coeffs,
                      const std::vector<BigInt>& seq) {
    int d = static_cast<int>(coeffs.size());
    for (int i = d; i < static_cast<int>(seq.size()); ++i) {
        Rational v = 0;
        for (int j = 1; j <= d; ++j) v += coeffs[j - 1] * Rational(seq[i - j]);
        if (v != Rational(seq[i])) return false;
    }
    return true;
}

} // namespace

std::string LinearRecurrence::to_string() const {
    std::string out = "f(n) =";
    bool first = true;
    for (int i = 1; i <= order(); ++i) {
        const Rational& c = coeffs[i - 1];
        if (c == 0) continue;
        std::string term;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (abs_c != 1) term += abs_c.str() + "*";
        term += "f(n-" + std::to_string(i) + ")";
        if (first)
            out += std::string(c < 0 ? " -" : " ") + term;
        else
            out += std::string(c < 0 ? " - " : " + ") + term;
        first = false;
    }
    if (first) out += " 0";
    out += ", order " + std::to_string(order());
    return out;
}

std::optional<LinearRecurrence> detect_minimal(const std::vector<BigInt>& seq) {
    if (seq.size() < 2)
        throw std::invalid_argument("detect_minimal: need at least 2 terms");
    std::vector<Rational> s;
    s.reserve(seq.size());
    for (const BigInt& v : seq) s.emplace_back(v);
    std::vector<Rational> coeffs = minimal_lfsr(s);
    if (coeffs.empty()) return std::nullopt;
    // Evidence threshold: with 2d terms an order-d fit has zero redundant
    // checks (the synthesis always succeeds), so demand strictly more.
    if (2 * static_cast<int>(coeffs.size()) >= static_cast<int>(seq.size()))
        return std::nullopt;
    if (!holds_everywhere(coeffs, seq)) return std::nullopt; // defensive
    // Enforce c_d != 0: drop trailing zero coefficients while the shorter
    // relation still generates the whole sequence.
    while (!coeffs.empty() && coeffs.back() == 0) {
        std::vector<Rational> shorter(coeffs.begin(), coeffs.end() - 1);
        if (shorter.empty() || !holds_everywhere(shorter, seq))
            return std::nullopt;
        coeffs = std::move(shorter);
    }
    return LinearRecurrence{std::move(coeffs)};
}

VerifyResult verify(const LinearRecurrence& rec, const std::vector<BigInt>& seq,
                    int from_index) {
    if (from_index < rec.order())
        throw std::invalid_argument("verify: from_index < order");
    for (int i = from_index; i < static_cast<int>(seq.size()); ++i) {
        Rational v = 0;
        for (int j = 1; j <= rec.order(); ++j)
            v += rec.coeffs[j - 1] * Rational(seq[i - j]);
        if (v != Rational(seq[i])) return {false, i};
    }
    return {true, -1};
}

std::vector<BigInt> extend(const LinearRecurrence& rec,
                           std::vector<BigInt> seed, int count) {
    if (static_cast<int>(seed.size()) < rec.order())
        throw std::invalid_argument("extend: seed shorter than order");
    for (int k = 0; k < count; ++k) {
        Rational v = 0;
        int i = static_cast<int>(seed.size());
        for (int j = 1; j <= rec.order(); ++j)
            v += rec.coeffs[j - 1] * Rational(seed[i - j]);
        if (denominator(v) != 1)
            throw std::invalid_argument(
                "extend: non-integer term (wrong recurrence/seed pairing)");
        seed.push_back(numerator(v));
    }
    return seed;
}

} // namespace necklace
