// Acceptance suite: one pass/fail line per check, nonzero exit on any
// failure. Every check is exact; runtimes are reported for the heavier
// sweeps.

#include <chrono>
#include <cstdio>
#include <set>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/idempotents.hpp"
#include "schur/oracle.hpp"
#include "schur/padic.hpp"

using namespace schur;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

// 1. Complete idempotent set for all m <= 16, lambda2 <= 64 in
// characteristic 2: idempotency, pairwise orthogonality, sum equal to 1,
// and exactly one nonzero element per g with B(m,g) odd.
bool check_complete_set_sweep() {
    for (u64 m = 0; m <= 16; ++m)
        for (u64 lambda2 = 0; lambda2 <= 64; ++lambda2) {
            auto ctx = make_gf_context(2, m, lambda2);
            auto rep = verify_complete_set(m, ctx);
            std::size_t expected = 0;
            for (u64 g = 0; g <= lambda2; ++g)
                if (kostka_entry(m, g, 2) == 1) ++expected;
            if (!rep.pass || rep.admissible.size() != expected) return false;
        }
    return true;
}

// 2. Orthogonality relations e^2 b(2^s)^2 = 0 and the sharper truncated
// form with psi_{m,s}, for every admissible (m,g) in the grid above and
// every zero column s of B(m,g) with 2^s <= lambda2.
bool check_orthogonality_sweep() {
    for (u64 m = 0; m <= 16; ++m)
        for (u64 lambda2 = 0; lambda2 <= 64; ++lambda2) {
            auto ctx = make_gf_context(2, m, lambda2);
            for (u64 g : admissible_g(m, ctx)) {
                u64 sum = m + 2 * g;
                for (unsigned s = 0; (u64{1} << s) <= lambda2; ++s) {
                    if (bit(sum, s) != 0) continue;
                    if (!orthogonality_check(m, g, s, ctx)) return false;
                }
            }
        }
    return true;
}

// 3. Tensor-space oracle: the matrices of b(0..lambda2) on the weight
// space of words satisfy the triple-binomial structure constants and are
// linearly independent, for all r <= 12, lambda2 <= r/2, p in {2,3,5}.
bool check_structure_constants() {
    for (unsigned r = 0; r <= 12; ++r)
        for (u64 lambda2 = 0; 2 * lambda2 <= r; ++lambda2)
            for (u64 p : {2, 3, 5})
                if (!compare_structure_constants(r, lambda2, p).pass) return false;
    return true;
}

// 4. Rank partition: on tensor space each idempotent has positive rank,
// they are orthogonal, sum to the identity, and the ranks sum to
// binom(r, lambda2), for p = 2 and all r <= 12.
bool check_rank_partition() {
    for (unsigned r = 0; r <= 12; ++r)
        for (u64 lambda2 = 0; 2 * lambda2 <= r; ++lambda2) {
            auto rep = idempotent_rank_report(r - 2 * lambda2, lambda2);
            if (!rep.pass || rep.rank_sum != binomial_u64(r, lambda2)) return false;
        }
    return true;
}

// 5. Digit factorization b(i) = prod_t b(i_t p^t) for all i <= lambda2,
// lambda2 <= 40, m <= 10, p in {2,3,5}.
bool check_factorization() {
    for (u64 p : {2, 3, 5})
        for (u64 m = 0; m <= 10; ++m)
            for (u64 lambda2 = 0; lambda2 <= 40; ++lambda2) {
                auto ctx = make_gf_context(p, m, lambda2);
                for (u64 i = 0; i <= lambda2; ++i)
                    if (!(factorize_basis(i, ctx) == basis_element(ctx, i))) return false;
            }
    return true;
}

// 6. Square reduction in characteristic 2: the closed form for b(2^t)^2
// matches direct multiplication, the squares are idempotent, and
// b(2^i)^2 = 0 whenever every binary digit of m up to position i is 0.
bool check_square_reduction() {
    for (u64 m = 0; m <= 16; ++m)
        for (u64 lambda2 = 1; lambda2 <= 64; ++lambda2) {
            auto ctx = make_gf_context(2, m, lambda2);
            for (unsigned t = 0; (u64{1} << t) <= lambda2; ++t) {
                auto sq = mult_basis(u64{1} << t, u64{1} << t, ctx);
                if (!(square_reduction(t, ctx) == sq)) return false;
                if (!(sq * sq == sq)) return false;
                bool low_zero = (m & ((u64{2} << t) - 1)) == 0;
                if (low_zero && !sq.is_zero()) return false;
            }
        }
    return true;
}

// 7. Characteristic zero: (k!)^2 b(k) = F_k(b(1)) for k <= lambda2 and
// F_{lambda2+1}(b(1)) = 0 over exact rationals, m <= 8, lambda2 <= 10.
bool check_char0() {
    for (u64 m = 0; m <= 8; ++m)
        for (u64 lambda2 = 0; lambda2 <= 10; ++lambda2) {
            auto ctx = make_q_context(m, lambda2);
            for (u64 k = 1; k <= lambda2; ++k)
                if (!char0_basis_identity(k, ctx)) return false;
            if (!minimal_polynomial_check(ctx)) return false;
        }
    return true;
}

// 8. Exhaustive scan: the solutions of x^2 = x in the F_2-span are
// exactly the subset sums of {e_{m,g}} for lambda2 <= 10, m <= 8; for
// m = 0 the only idempotents are 0 and 1.
bool check_exhaustive_scan() {
    for (u64 m = 0; m <= 8; ++m)
        for (u64 lambda2 = 0; lambda2 <= 10; ++lambda2) {
            auto ctx = make_gf_context(2, m, lambda2);
            auto found = exhaustive_idempotent_scan(ctx);
            std::vector<gf_element> es;
            for (u64 g : admissible_g(m, ctx)) es.push_back(build_idempotent(m, g, ctx));
            std::set<u64> sums;
            for (u64 subset = 0; subset < (u64{1} << es.size()); ++subset) {
                auto total = zero_element(ctx);
                for (std::size_t i = 0; i < es.size(); ++i)
                    if ((subset >> i) & 1) total += es[i];
                sums.insert(coefficient_mask(total));
            }
            if (found != sums) return false;
            if (m == 0 && found != std::set<u64>{0, 1}) return false;
        }
    return true;
}

// 9. Associativity of the product defined by the structure constants, on
// all basis triples for lambda2 <= 20 and p in {2,3,5}.
bool check_associativity() {
    for (u64 p : {2, 3, 5})
        for (u64 m : {0, 1, 2, 5, 11})
            for (u64 lambda2 = 0; lambda2 <= 20; ++lambda2) {
                auto ctx = make_gf_context(p, m, lambda2);
                for (u64 i = 0; i <= lambda2; ++i) {
                    auto bi = basis_element(ctx, i);
                    for (u64 j = 0; j <= lambda2; ++j) {
                        auto bij = bi * basis_element(ctx, j);
                        for (u64 k = 0; k <= lambda2; ++k) {
                            auto left = bij * basis_element(ctx, k);
                            auto right =
                                bi * (basis_element(ctx, j) * basis_element(ctx, k));
                            if (!(left == right)) return false;
                        }
                    }
                }
            }
    return true;
}

// 10. Truncation idempotency: (e_{m,g})_{<=t} and (e_{m,g})_{<t} are
// idempotent for every admissible (m,g) in the grid of check 1 and every
// t up to the top digit of m+2g.
bool check_truncation() {
    for (u64 m = 0; m <= 16; ++m)
        for (u64 lambda2 = 0; lambda2 <= 64; ++lambda2) {
            auto ctx = make_gf_context(2, m, lambda2);
            for (u64 g : admissible_g(m, ctx)) {
                unsigned top = bit_length(m + 2 * g);
                for (unsigned t = 0; t <= top; ++t) {
                    auto le = build_truncated(m, g, t, ctx);
                    auto lt = build_truncated(m, g, t, ctx, /*strict=*/true);
                    if (!(le * le == le)) return false;
                    if (!(lt * lt == lt)) return false;
                }
            }
        }
    return true;
}

struct check {
    const char* name;
    bool (*run)();
};

}  // namespace

int main() {
    const check checks[] = {
        {"complete idempotent set sweep (m <= 16, lambda2 <= 64)", check_complete_set_sweep},
        {"orthogonality relations sweep", check_orthogonality_sweep},
        {"tensor-space structure constants (r <= 12, p in {2,3,5})", check_structure_constants},
        {"tensor-space rank partition (r <= 12, p = 2)", check_rank_partition},
        {"digit factorization of the basis", check_factorization},
        {"square reduction in characteristic 2", check_square_reduction},
        {"characteristic-zero polynomial identities", check_char0},
        {"exhaustive idempotent scan equivalence", check_exhaustive_scan},
        {"associativity of the structure constants", check_associativity},
        {"truncation idempotency", check_truncation},
    };

    bool all = true;
    int index = 0;
    for (const auto& c : checks) {
        ++index;
        auto start = clock_type::now();
        bool ok = c.run();
        all = all && ok;
        std::printf("[%2d] %-58s %s (%.1fs)\n", index, c.name, ok ? "pass" : "FAIL",
                    seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%s\n", all ? "all checks passed" : "SOME CHECKS FAILED");
    return all ? 0 : 1;
}
