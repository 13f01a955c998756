#include "necklace/construct.hpp"

#include <algorithm>
#include <set>

namespace necklace {

namespace {

// Ensure a construction result really is a necklace before returning it.
Necklace checked(Params params, std::vector<int> beads, const char* what) {
    auto rep = validate(params, beads);
    if (!rep)
        throw std::logic_error(std::string(what) + ": produced invalid necklace (" +
                               rep.reason + ")");
    return {params, std::move(beads)};
}

} // namespace

Necklace base_necklace(Params params) {
    if (params.gcd() > 1)
        throw std::invalid_argument("base_necklace: gcd(a,b) > 1, none exists");
    const int a = params.a, b = params.b, n = a + b;
    std::vector<int> seq{0, a};
    while (static_cast<int>(seq.size()) < n) {
        int x = seq.back(), prev = seq[seq.size() - 2];
        int n1, n2;
        if (x < a) {
            n1 = x + a;
            n2 = x + b;
        } else if (x < b) {
            n1 = x + a;
            n2 = x - a;
        } else {
            n1 = x - a;
            n2 = x - b;
        }
        seq.push_back(n1 == prev ? n2 : n1);
    }
    return checked(params, std::move(seq), "base_necklace");
}

Necklace snake(int b, int n) {
    Params params(1, b);
    if (n < 2 * b) throw std::invalid_argument("snake: n >= 2b required");
    if (b % 2 == 1 && n % 2 == 1)
        throw std::invalid_argument("snake: n must be even when b is odd");

    const int q = (n - 1) / b;
    const int r = (n - 1) % b;
    auto V = [b](int c, int i) { return c * b + i; };
    std::vector<int> seq;
    seq.reserve(n);

    if (n == 2 * b) {
        // Two full columns: down the first, up the second.
        for (int i = 0; i < b; ++i) seq.push_back(i);
        for (int i = 2 * b - 1; i >= b; --i) seq.push_back(i);
        return checked(params, std::move(seq), "snake");
    }

    if (b % 2 == 1 && r == b - 1) {
        // Full grid with b odd (so q odd): column serpentine + row-0 rail.
        for (int i = 0; i < b; ++i) seq.push_back(V(0, i));
        for (int c = 1; c <= q; ++c) {
            if (c % 2 == 1)
                for (int i = b - 1; i >= 1; --i) seq.push_back(V(c, i));
            else
                for (int i = 1; i <= b - 1; ++i) seq.push_back(V(c, i));
        }
        for (int c = q; c >= 1; --c) seq.push_back(V(c, 0));
    } else if (b % 2 == 0 && n % 2 == 0) {
        // Pattern (A), r odd: column-0 rail down, row serpentine over rows
        // b-1..1 (row j reaches column q only when j <= r), row-0 rail back.
        for (int i = 0; i < b; ++i) seq.push_back(V(0, i));
        auto edge = [&](int j) { return j <= r ? q : q - 1; };
        for (int j = b - 1; j >= 1; --j) {
            if (j % 2 == 1)
                for (int c = 1; c <= edge(j); ++c) seq.push_back(V(c, j));
            else
                for (int c = edge(j); c >= 1; --c) seq.push_back(V(c, j));
        }
        for (int c = q; c >= 1; --c) seq.push_back(V(c, 0));
    } else if (b % 2 == 0) {
        // Pattern (B), r even: bottom rail right, wrap edge up to (q,0),
        // then a row serpentine over rows 0..b-2 closing at (0,b-1).
        for (int c = 0; c < q; ++c) seq.push_back(V(c, b - 1));
        seq.push_back(V(q, 0));
        for (int j = 0; j <= b - 2; ++j) {
            int right = j <= r ? q : q - 1;
            if (j == 0) {
                for (int c = q - 1; c >= 0; --c) seq.push_back(V(c, j));
            } else if (j % 2 == 0) {
                for (int c = right; c >= 0; --c) seq.push_back(V(c, j));
            } else {
                for (int c = 0; c <= right; ++c) seq.push_back(V(c, j));
            }
        }
    } else if (r % 2 == 1) {
        // Pattern (C), b odd and n mod b even (so q even).
        if (q == 2 && r == 1) {
            // n = 2b+2: the variant whose bead b+1 neighbours b and 2b+1.
            seq = {V(0, 0), V(1, 0), V(1, 1), V(2, 1),
                   V(2, 0), V(1, b - 1), V(0, b - 1)};
            for (int i = b - 2; i >= 2; i -= 2) {
                seq.push_back(V(0, i));
                seq.push_back(V(1, i));
                if (i - 1 >= 2) {
                    seq.push_back(V(1, i - 1));
                    seq.push_back(V(0, i - 1));
                }
            }
            seq.push_back(V(0, 1));
        } else {
            // Column 0 up, serpentine columns 1..q-2 over rows 0..b-2, row 0
            // to (q,0), ladder down columns q/q-1 over rows 0..r, column q-1
            // down, bottom rail back.
            for (int i = b - 1; i >= 0; --i) seq.push_back(V(0, i));
            for (int c = 1; c <= q - 2; ++c) {
                if (c % 2 == 1)
                    for (int i = 0; i <= b - 2; ++i) seq.push_back(V(c, i));
                else
                    for (int i = b - 2; i >= 0; --i) seq.push_back(V(c, i));
            }
            seq.push_back(V(q - 1, 0));
            seq.push_back(V(q, 0));
            for (int i = 0; i < r; i += 2) {
                seq.push_back(V(q, i + 1));
                seq.push_back(V(q - 1, i + 1));
                if (i + 2 <= r) {
                    seq.push_back(V(q - 1, i + 2));
                    seq.push_back(V(q, i + 2));
                }
            }
            for (int i = r + 1; i <= b - 1; ++i) seq.push_back(V(q - 1, i));
            for (int c = q - 2; c >= 1; --c) seq.push_back(V(c, b - 1));
        }
    } else {
        // Pattern (D), b odd and n mod b odd (r even, q odd >= 3): bottom
        // rail, wrap edge, ladder down columns q-1/q over rows 1..r, column
        // q-1 down, serpentine columns q-2..1 over rows 0..b-2, column 0.
        for (int c = 0; c < q; ++c) seq.push_back(V(c, b - 1));
        seq.push_back(V(q, 0));
        seq.push_back(V(q - 1, 0));
        for (int i = 1; i <= r; i += 2) {
            seq.push_back(V(q - 1, i));
            seq.push_back(V(q, i));
            seq.push_back(V(q, i + 1));
            seq.push_back(V(q - 1, i + 1));
        }
        for (int i = r + 1; i <= b - 2; ++i) seq.push_back(V(q - 1, i));
        for (int c = q - 2; c >= 1; --c) {
            if ((q - 2 - c) % 2 == 0)
                for (int i = b - 2; i >= 0; --i) seq.push_back(V(c, i));
            else
                for (int i = 0; i <= b - 2; ++i) seq.push_back(V(c, i));
        }
        for (int i = 0; i <= b - 2; ++i) seq.push_back(V(0, i));
    }
    return checked(params, std::move(seq), "snake");
}

StitchState stitch_state(Params params) {
    const int a = params.a, b = params.b;
    if (params.gcd() > 1 || a < 2 || 2 * a > b)
        throw std::invalid_argument(
            "stitch: requires gcd(a,b)=1, a >= 2, 2a <= b");
    StitchState st;
    for (int i = 0; i < a; ++i) {
        int t = ((-b * i) % a + a) % a;
        int k = 2;
        while (!(b <= t + k * a && t + k * a < a + b)) ++k;
        std::vector<int> seg{t + b, t, t + a, t + a + b, t + 2 * a + b};
        for (int j = 2; j < k; ++j) seg.push_back(t + j * a);
        st.t.push_back(t);
        st.k.push_back(k);
        st.segments.push_back(std::move(seg));
    }
    return st;
}

Necklace stitch_3a_plus_b(Params params) {
    StitchState st = stitch_state(params);
    std::vector<int> seq;
    for (const auto& seg : st.segments) seq.insert(seq.end(), seg.begin(), seg.end());
    return checked(params, std::move(seq), "stitch_3a_plus_b");
}

std::optional<Necklace> glue(const Necklace& X, const Necklace& Y) {
    if (!(X.params == Y.params))
        throw std::invalid_argument("glue: mismatched params");
    const Params params = X.params;
    const int a = params.a, b = params.b;
    const int m = X.size(), n = Y.size();

    auto edge_set = [](const std::vector<int>& beads) {
        std::set<std::pair<int, int>> s;
        int len = static_cast<int>(beads.size());
        for (int i = 0; i < len; ++i) {
            int x = beads[i], y = beads[(i + 1) % len];
            s.insert({std::min(x, y), std::max(x, y)});
        }
        return s;
    };
    auto adjX = edge_set(X.beads);
    auto adjY = edge_set(Y.beads);

    // Candidate link positions: scan x_i = (q-i)a first,
    // then every other x in [a, b-1] with the same link shape (the proof
    // scan alone can come up empty; see fallback note below).
    std::vector<int> candidates;
    if (a >= 2) {
        int q = b / a;
        for (int i = 0; i < q; ++i) candidates.push_back((q - i) * a);
    }
    for (int x = b - 1; x >= a; --x)
        if (std::find(candidates.begin(), candidates.end(), x) ==
            candidates.end())
            candidates.push_back(x);

    for (int x1 : candidates) {
        int x2 = x1 - a;
        if (x2 < 0 || x1 > b - 1) continue;
        int y1 = n - b + x1, y2 = n - b + x2;
        if (!adjX.count({std::min(x1, x2), std::max(x1, x2)})) continue;
        if (!adjY.count({std::min(y1, y2), std::max(y1, y2)})) continue;

        // Break edge (y1,y2) in Y and (x1,x2) in X+n; add (x1+n, y1) and
        // (x2+n, y2). Result: Y traversed from y1 the long way to y2, then
        // X+n from x2+n the long way to x1+n, closing back to y1.
        auto path_from = [](const std::vector<int>& beads, int from, int next_banned,
                            int shift) {
            int len = static_cast<int>(beads.size());
            int p = static_cast<int>(
                std::find(beads.begin(), beads.end(), from) - beads.begin());
            int dir = beads[(p + 1) % len] == next_banned ? -1 : 1;
            std::vector<int> out(len);
            for (int k = 0; k < len; ++k)
                out[k] = beads[((p + dir * k) % len + len) % len] + shift;
            return out;
        };
        std::vector<int> beads = path_from(Y.beads, y1, y2, 0);
        std::vector<int> xpath = path_from(X.beads, x2, x1, n);
        beads.insert(beads.end(), xpath.begin(), xpath.end());
        return checked(params, std::move(beads), "glue");
    }
    if (a >= 2)
        throw std::logic_error("glue: no link found despite a >= 2");
    return std::nullopt;
}

ExistenceThreshold existence_threshold(Params params) {
    const long long a = params.a, b = params.b;
    if (params.gcd() > 1)
        throw std::invalid_argument("existence_threshold: requires gcd(a,b)=1");
    if ((a * b) % 2 == 0) return {(a + b - 1) * (3 * a + b - 1), false};
    return {(a + b - 2) * (3 * a + b - 2) / 2, true};
}

std::optional<Necklace> construct_any(Params params, int n) {
    const int a = params.a, b = params.b;
    if (params.gcd() > 1)
        throw std::invalid_argument("construct_any: requires gcd(a,b)=1");
    if (n < a + b) return std::nullopt;
    if (n == a + b) return base_necklace(params);
    if (a == 1) {
        if (n >= 2 * b && !(b % 2 == 1 && n % 2 == 1)) return snake(b, n);
        return std::nullopt;
    }
    if (2 * a > b) {
        // The stitch piece needs 2a <= b, so only chains of base copies
        // (lengths that are multiples of a+b) are available here.
        if (n % (a + b) != 0) return std::nullopt;
        Necklace base = base_necklace(params);
        std::optional<Necklace> acc;
        for (int i = 0; i < n / (a + b); ++i)
            acc = acc ? glue(*acc, base) : base;
        return acc;
    }
    // Solve n = x(a+b) + y(3a+b) with x,y >= 0 and y minimal.
    for (int y = 0; y * (3 * a + b) <= n; ++y) {
        int rest = n - y * (3 * a + b);
        if (rest % (a + b) != 0) continue;
        int x = rest / (a + b);
        std::vector<const Necklace*> pieces;
        Necklace base = base_necklace(params);
        Necklace stitch = (y > 0) ? stitch_3a_plus_b(params) : base;
        std::optional<Necklace> acc;
        for (int i = 0; i < x; ++i) {
            if (!acc)
                acc = base;
            else
                acc = glue(*acc, base);
        }
        for (int i = 0; i < y; ++i) {
            if (!acc)
                acc = stitch;
            else
                acc = glue(*acc, stitch);
        }
        return acc;
    }
    return std::nullopt;
}

BigInt expest_lower_bound(Params params, int k) {
    if (params.gcd() > 1 || k < 1)
        throw std::invalid_argument("expest_lower_bound: gcd(a,b)=1, k >= 1");
    const int a = params.a, b = params.b;
    auto power = [](BigInt base, int e) {
        BigInt out = 1;
        for (int i = 0; i < e; ++i) out *= base;
        return out;
    };
    if (2 * a >= b || k == 1) return power(b - a, k - 1);
    return BigInt(b - a) * power(b - a - 1, k - 2);
}

} // namespace necklace
