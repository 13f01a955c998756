// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion is independent; a failing criterion prints a short
// diagnostic before its FAIL line.

#include "necklace/blocks.hpp"
#include "necklace/construct.hpp"
#include "necklace/core.hpp"
#include "necklace/enumerate.hpp"
#include "necklace/recurrence.hpp"
#include "necklace/tables.hpp"
#include "necklace/transfer.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace necklace;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << name;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

// Reference column N_{a,b}(n) for n = n_lo..n_hi as a dense vector
// (throws if a cell is missing from the fixtures).
std::vector<BigInt> table_column(int a, int b, int n_lo, int n_hi) {
    std::vector<BigInt> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto v = tables::reference_count(a, b, n);
        if (!v) throw std::runtime_error("missing fixture cell");
        out.push_back(*v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// 1. Every fixture cell with b <= 5, n <= 30, reproduced independently by the
//    DFS oracle and (where it applies, n > 2b) by the transfer method.
void criterion1() {
    std::ostringstream detail;
    bool ok = true;
    std::map<std::pair<int, int>, std::vector<BigInt>> walk_cache;
    int cells = 0;
    for (const auto& row : tables::reference_counts()) {
        if (row.b > 5 || row.n > 30) continue;
        Params p(row.a, row.b);
        ++cells;
        BigInt dfs = count_hamiltonian(p, row.n);
        if (dfs != row.count) {
            ok = false;
            detail << "dfs a=" << row.a << " b=" << row.b << " n=" << row.n
                   << " got " << dfs << " want " << row.count << "; ";
        }
        if (p.gcd() == 1 && row.n > 2 * row.b) {
            auto key = std::make_pair(row.a, row.b);
            auto it = walk_cache.find(key);
            if (it == walk_cache.end())
                it = walk_cache.emplace(key, count_walks_upto(build_D(p), 30))
                         .first;
            if (it->second[row.n] != row.count) {
                ok = false;
                detail << "transfer a=" << row.a << " b=" << row.b
                       << " n=" << row.n << " got " << it->second[row.n]
                       << " want " << row.count << "; ";
            }
        }
    }
    if (cells == 0) ok = false;
    report(1, "fixture cells b<=5, n<=30 by DFS and transfer", ok,
           detail.str());
}

// ---------------------------------------------------------------------------
// 2. Every fixture cell with n <= 40 by the auto-dispatched method
//    (closed form, else transfer for b <= 8, else DFS), including the
//    spot values N_{1,5}(40), N_{1,10}(40), N_{3,8}(33), N_{9,10}(38).
void criterion2() {
    std::ostringstream detail;
    bool ok = true;
    std::map<std::pair<int, int>, std::vector<BigInt>> walk_cache;
    for (const auto& row : tables::reference_counts()) {
        if (row.n > 40) continue;
        Params p(row.a, row.b);
        BigInt got;
        if (auto f = quick_facts(p, row.n)) {
            got = *f;
        } else if (p.gcd() == 1 && row.b <= 8 && row.n > 2 * row.b) {
            auto key = std::make_pair(row.a, row.b);
            auto it = walk_cache.find(key);
            if (it == walk_cache.end())
                it = walk_cache.emplace(key, count_walks_upto(build_D(p), 40))
                         .first;
            got = it->second[row.n];
        } else {
            got = count_hamiltonian(p, row.n);
        }
        if (got != row.count) {
            ok = false;
            detail << "a=" << row.a << " b=" << row.b << " n=" << row.n
                   << " got " << got << " want " << row.count << "; ";
        }
    }
    auto spot = [&](int a, int b, int n, const BigInt& want) {
        auto v = tables::reference_count(a, b, n);
        if (!v || *v != want) {
            ok = false;
            detail << "spot a=" << a << " b=" << b << " n=" << n << "; ";
        }
    };
    spot(1, 5, 40, BigInt(51610));
    spot(1, 10, 40, BigInt(6669));
    spot(3, 8, 33, BigInt(113));
    spot(9, 10, 38, BigInt(1));
    report(2, "all fixture cells n<=40 by auto method", ok, detail.str());
}

// ---------------------------------------------------------------------------
// 3. Closed forms: N_{1,2}(n) = 1 for 3 <= n <= 60; N_{1,3}(2m) = Fib(m) for
//    2 <= m <= 20 with Fib(2)=1, Fib(3)=2; N_{1,3}(odd) = 0.
void criterion3() {
    std::ostringstream detail;
    bool ok = true;
    auto walks12 = count_walks_upto(build_D(Params(1, 2)), 60);
    for (int n = 3; n <= 60; ++n) {
        BigInt got = n <= 4 ? count_hamiltonian(Params(1, 2), n) : walks12[n];
        if (got != 1) {
            ok = false;
            detail << "N_{1,2}(" << n << ")=" << got << "; ";
        }
    }
    auto walks13 = count_walks_upto(build_D(Params(1, 3)), 40);
    std::vector<BigInt> fib{0, 1, 1, 2};
    for (int m = 4; m <= 20; ++m) fib.push_back(fib[m - 1] + fib[m - 2]);
    for (int m = 2; m <= 20; ++m) {
        int n = 2 * m;
        BigInt got = n <= 6 ? count_hamiltonian(Params(1, 3), n) : walks13[n];
        if (got != fib[m]) {
            ok = false;
            detail << "N_{1,3}(" << n << ")=" << got << " want " << fib[m]
                   << "; ";
        }
    }
    for (int n = 5; n <= 39; n += 2)
        if ((n <= 6 ? count_hamiltonian(Params(1, 3), n) : walks13[n]) != 0) {
            ok = false;
            detail << "N_{1,3}(" << n << ")!=0; ";
        }
    report(3, "closed forms for (1,2) and (1,3)", ok, detail.str());
}

// ---------------------------------------------------------------------------
// 4. Recurrences hold exactly on the computed sequences:
//    f(n)=f(n-1)+f(n-5) on N_{2,3} for 8 <= n <= 40; the order-13 relation on
//    N_{1,4} for 16 <= n <= 40; the order-9 relation on N_{1,4} from n = 14.
void criterion4() {
    std::ostringstream detail;
    bool ok = true;
    // Sequences indexed from n = 3 (N(3) and N(4) are 0 or covered by the
    // fixtures; for b >= 4 the difference-b edge does not fit, so 0).
    auto seq23 = sequence(Params(2, 3), 40); // starts at n = a+b = 5
    seq23.insert(seq23.begin(), {BigInt(0), BigInt(0)});
    auto at23 = [&](int n) { return seq23[n - 3]; };
    for (int n = 8; n <= 40; ++n)
        if (at23(n) != at23(n - 1) + at23(n - 5)) {
            ok = false;
            detail << "(2,3) order-5 fails at n=" << n << "; ";
        }
    auto seq14 = sequence(Params(1, 4), 40); // starts at n = 5
    seq14.insert(seq14.begin(), {BigInt(0), BigInt(0)});
    LinearRecurrence r13{{0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1}};
    auto v13 = verify(r13, seq14, 16 - 3);
    if (!v13.ok) {
        ok = false;
        detail << "(1,4) order-13 fails at index " << v13.first_failure << "; ";
    }
    LinearRecurrence r9{{-1, 0, 1, 1, 2, 2, 1, 1, 1}};
    auto v9 = verify(r9, seq14, 14 - 3);
    if (!v9.ok) {
        ok = false;
        detail << "(1,4) order-9 fails at index " << v9.first_failure << "; ";
    }
    report(4, "recurrence relations hold on computed sequences", ok,
           detail.str());
}

// ---------------------------------------------------------------------------
// 5. Minimal-order detection: order 5 for (2,3), order 9 for (1,4); no
//    recurrence admitted for (3,4) or (2,5) on <= 36 terms.
void criterion5() {
    std::ostringstream detail;
    bool ok = true;
    auto check = [&](int a, int b, std::optional<int> want_order) {
        auto seq = sequence(Params(a, b), 40); // starts at n = a+b
        if (seq.size() > 36) seq.resize(36);
        auto rec = detect_minimal(seq);
        if (want_order) {
            if (!rec || rec->order() != *want_order) {
                ok = false;
                detail << "(" << a << "," << b << ") want order "
                       << *want_order << " got "
                       << (rec ? std::to_string(rec->order()) : "none")
                       << "; ";
            }
        } else if (rec) {
            ok = false;
            detail << "(" << a << "," << b << ") unexpectedly got order "
                   << rec->order() << "; ";
        }
    };
    check(2, 3, 5);
    check(1, 4, 9);
    check(3, 4, std::nullopt);
    check(2, 5, std::nullopt);
    report(5, "minimal recurrence detection", ok, detail.str());
}

// ---------------------------------------------------------------------------
// 6. Constructions validate: snake for b <= 10 on admissible 2b <= n <= 60;
//    stitch for all coprime 2 <= a, 2a <= b <= 24; glue on 200 randomized
//    admissible pairs; the (3,20) stitch matches the known bead sequence up
//    to canonical form.
void criterion6() {
    std::ostringstream detail;
    bool ok = true;
    for (int b = 2; b <= 10; ++b)
        for (int n = 2 * b; n <= 60; ++n) {
            if (b % 2 == 1 && n % 2 == 1) continue; // no odd necklace exists
            Necklace s = snake(b, n);
            if (!validate(Params(1, b), s.beads)) {
                ok = false;
                detail << "snake b=" << b << " n=" << n << "; ";
            }
        }
    for (int a = 2; a <= 12; ++a)
        for (int b = 2 * a; b <= 24; ++b) {
            if (std::gcd(a, b) != 1) continue;
            Necklace s = stitch_3a_plus_b(Params(a, b));
            if (s.size() != 3 * a + b || !validate(Params(a, b), s.beads)) {
                ok = false;
                detail << "stitch a=" << a << " b=" << b << "; ";
            }
        }
    // Randomized glue pairs: pieces built from base copies and stitches.
    std::mt19937 rng(20260826);
    std::vector<Params> pool;
    for (int a = 1; a <= 5; ++a)
        for (int b = std::max(2, 2 * a); b <= 11; ++b)
            if (std::gcd(a, b) == 1) pool.emplace_back(a, b);
    auto random_piece = [&](Params p) -> Necklace {
        int choice = static_cast<int>(rng() % 3);
        if (p.a == 1) {
            int n = 2 * p.b + static_cast<int>(rng() % 20);
            if (p.b % 2 == 1 && n % 2 == 1) ++n;
            return snake(p.b, n);
        }
        if (choice == 0) return base_necklace(p);
        if (choice == 1) return stitch_3a_plus_b(p);
        auto g = glue(base_necklace(p), base_necklace(p));
        return g ? *g : base_necklace(p);
    };
    for (int t = 0; t < 200; ++t) {
        Params p = pool[rng() % pool.size()];
        Necklace X = random_piece(p), Y = random_piece(p);
        auto G = glue(X, Y);
        if (!G || G->size() != X.size() + Y.size() ||
            !validate(p, G->beads)) {
            ok = false;
            detail << "glue a=" << p.a << " b=" << p.b << " m=" << X.size()
                   << " n=" << Y.size() << "; ";
        }
    }
    // The (3,20) stitch must reproduce the known length-29 bead sequence.
    std::vector<int> fig{20, 0,  3,  23, 26, 6,  9,  12, 15, 18,
                         21, 1,  4,  24, 27, 7,  10, 13, 16, 19,
                         22, 2,  5,  25, 28, 8,  11, 14, 17};
    Necklace s320 = stitch_3a_plus_b(Params(3, 20));
    if (canonical_beads(Params(3, 20), s320.beads) !=
        canonical_beads(Params(3, 20), fig)) {
        ok = false;
        detail << "(3,20) stitch differs from reference cycle; ";
    }
    report(6, "construction validity (snake, stitch, glue)", ok, detail.str());
}

// ---------------------------------------------------------------------------
// 7. Lower bound: N_{a,b}(k(a+b)) >= expest_lower_bound(a,b,k) for all
//    coprime a < b <= 6, k <= 3; tightness N_{1,4}(10) = 3 = bound;
//    N_{1,b}(2b+2) = b for b in {3,5,7,9}.
void criterion7() {
    std::ostringstream detail;
    bool ok = true;
    for (int a = 1; a < 6; ++a)
        for (int b = a + 1; b <= 6; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (int k = 1; k <= 3; ++k) {
                int n = k * (a + b);
                BigInt cnt = count_necklaces(Params(a, b), n);
                BigInt bound = expest_lower_bound(Params(a, b), k);
                if (cnt < bound) {
                    ok = false;
                    detail << "a=" << a << " b=" << b << " k=" << k << " count "
                           << cnt << " < bound " << bound << "; ";
                }
            }
        }
    if (count_necklaces(Params(1, 4), 10) != 3 ||
        expest_lower_bound(Params(1, 4), 2) != 3) {
        ok = false;
        detail << "N_{1,4}(10) tightness; ";
    }
    for (int b : {3, 5, 7, 9})
        if (count_hamiltonian(Params(1, b), 2 * b + 2) != b) {
            ok = false;
            detail << "N_{1," << b << "}(" << 2 * b + 2 << ") != " << b << "; ";
        }
    report(7, "exponential-count lower bound", ok, detail.str());
}

// ---------------------------------------------------------------------------
// 8. Structural laws on >= 1000 random cases: pairing propagation
//    L(G(B_1..B_k, Bhat)) = pairing_of(Bhat ^ L(G(B_1..B_k))); decompose /
//    reglue round trips; D' walk counts equal brute-force 2-regular counts
//    for b <= 4, n <= 16.
void criterion8() {
    std::ostringstream detail;
    bool ok = true;
    std::mt19937 rng(987654321);
    int cases = 0;

    // (a) pairing propagation along random compatible block sequences
    std::vector<Params> pool{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {1, 5},
                             {2, 5}, {3, 5}, {4, 5}};
    for (int t = 0; t < 400 && ok; ++t) {
        Params p = pool[rng() % pool.size()];
        BlockCollection coll = enumerate_blocks(p);
        std::vector<Block> starts;
        for (const Block& B : coll.start)
            if (graph_of(B).acyclic()) starts.push_back(B);
        if (starts.empty()) continue;
        std::vector<Block> seq{starts[rng() % starts.size()]};
        RowPairing L = pairing_of(glue_blocks(p, seq));
        for (int step = 0; step < 6; ++step) {
            std::vector<Block> next;
            for (const Block& B : coll.mid)
                if (is_compatible(seq.back(), B) && augment(B, L).acyclic())
                    next.push_back(B);
            if (next.empty()) break;
            Block Bhat = next[rng() % next.size()];
            RowPairing predicted = augment(Bhat, L).pairing_of();
            seq.push_back(Bhat);
            RowPairing actual = pairing_of(glue_blocks(p, seq));
            ++cases;
            if (!(predicted == actual)) {
                ok = false;
                detail << "pairing propagation a=" << p.a << " b=" << p.b
                       << " len=" << seq.size() << "; ";
                break;
            }
            L = actual;
        }
    }

    // (b) decompose / reglue round trips on random enumerated necklaces
    for (const Params& p : pool) {
        for (int n = 2 * p.b + 1; n <= 16; ++n) {
            auto all = enumerate_necklaces(p, n);
            for (std::size_t i = 0; i < all.size() && i < 20; ++i) {
                const Necklace& H = all[rng() % all.size()];
                ++cases;
                if (reglue(p, decompose(H)) != edge_list(H)) {
                    ok = false;
                    detail << "round trip a=" << p.a << " b=" << p.b
                           << " n=" << n << "; ";
                }
            }
        }
    }

    // (c) D' walk counts against brute-force 2-regular subgraph counts
    for (const Params& p : {Params(1, 2), Params(1, 3), Params(2, 3),
                            Params(1, 4), Params(3, 4)}) {
        auto walks = count_walks_upto(build_D_prime(p), 16);
        for (int n = 2 * p.b + 1; n <= 16; ++n) {
            ++cases;
            if (walks[n] != count_2regular(p, n)) {
                ok = false;
                detail << "D' a=" << p.a << " b=" << p.b << " n=" << n << "; ";
            }
        }
    }

    if (cases < 1000) {
        ok = false;
        detail << "only " << cases << " cases exercised; ";
    }
    report(8, "structural laws (pairing, round trip, D') on " +
                  std::to_string(cases) + " cases",
           ok, detail.str());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    return failures == 0 ? 0 : 1;
}
