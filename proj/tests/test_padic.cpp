#include <doctest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "schur/padic.hpp"

using namespace schur;
using boost::multiprecision::cpp_int;

namespace {

// Independent oracle: exact big-integer binomial coefficient.
cpp_int exact_binomial(u64 n, u64 k) {
    if (k > n) return 0;
    cpp_int num = 1, den = 1;
    for (u64 i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    return num / den;
}

}  // namespace

TEST_CASE("p_adic digit expansion") {
    CHECK(p_adic(0, 2).digits.empty());
    CHECK(p_adic(35, 2).digits == std::vector<unsigned>{1, 1, 0, 0, 0, 1});
    CHECK(p_adic(10, 3).digits == std::vector<unsigned>{1, 0, 1});
    CHECK(p_adic(35, 2).value == 35);
    CHECK_THROWS_AS(p_adic(5, 4), std::invalid_argument);

    // round trip over a sample
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        u64 n = rng() % 1000000;
        for (u64 p : {2, 3, 5, 7}) {
            auto d = p_adic(n, p);
            u64 value = 0, pw = 1;
            for (unsigned dg : d.digits) {
                CHECK(dg < p);
                value += dg * pw;
                pw *= p;
            }
            CHECK(value == n);
            if (!d.digits.empty()) CHECK(d.digits.back() != 0);
        }
    }
}

TEST_CASE("lucas_binomial matches exact big-integer binomials") {
    CHECK(lucas_binomial(17, 0, 5) == 1);
    CHECK(lucas_binomial(5, 2, 2) == 0);
    CHECK(lucas_binomial(3, 1, 2) == 1);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        u64 n = rng() % 2000;
        u64 k = rng() % (n + 1);
        for (u64 p : {2, 3, 5, 7}) {
            cpp_int expected = exact_binomial(n, k) % p;
            CHECK(lucas_binomial(n, k, p) == static_cast<u64>(expected));
        }
    }
}

TEST_CASE("kostka_entry and kostka_window") {
    CHECK(kostka_entry(7, 0, 2) == 1);
    CHECK(kostka_entry(1, 2, 2) == 0);
    CHECK(kostka_entry(1, 3, 2) == 1);

    auto rows = kostka_window(1, 3, 2);
    CHECK(rows[0] == std::vector<int>{1, 0, 0, 0});
    CHECK(rows[1] == std::vector<int>{1, 1, 0, 1});
    for (u64 m = 0; m <= 20; ++m) CHECK(kostka_entry(m, 0, 3) == 1);
}

TEST_CASE("carry sequence recurrence and odd-binomial bound") {
    auto cs = carry_sequence(1, 1);
    for (unsigned x : cs.x) CHECK(x == 0);
    cs = carry_sequence(1, 2);
    for (unsigned x : cs.x) CHECK(x == 0);
    for (unsigned x : carry_sequence(37, 0).x) CHECK(x == 0);

    for (u64 m = 0; m <= 64; ++m) {
        for (u64 g = 0; g <= 64; ++g) {
            auto seq = carry_sequence(m, g);
            u64 sum = m + 2 * g;
            // defining recurrence
            unsigned prev = 0;
            for (unsigned i = 0; i < seq.x.size(); ++i) {
                unsigned gi1 = i == 0 ? 0 : bit(g, i - 1);
                CHECK(bit(m, i) + gi1 + prev == bit(sum, i) + 2 * seq.x[i]);
                prev = seq.x[i];
            }
            if (kostka_entry(m, g, 2) == 1) {
                for (unsigned i = 0; i < seq.x.size(); ++i) {
                    CHECK(bit(sum, i) + 2 * seq.x[i] < 3);
                    if (bit(sum, i) == 1) CHECK(seq.x[i] == 0);
                }
            }
        }
    }
}

TEST_CASE("carry bound on the full 2^10 grid for odd B(m,g)") {
    for (u64 m = 0; m < 1024; ++m)
        for (u64 g = 0; g < 1024; ++g) {
            if (kostka_entry(m, g, 2) == 0) continue;
            auto seq = carry_sequence(m, g);
            u64 sum = m + 2 * g;
            for (unsigned i = 0; i < seq.x.size(); ++i)
                REQUIRE(bit(sum, i) + 2 * seq.x[i] < 3);
        }
}

TEST_CASE("index sets") {
    auto s = index_sets(1, 0);
    CHECK(s.I == std::vector<unsigned>{0});
    CHECK(s.J.empty());
    s = index_sets(1, 1);
    CHECK(s.I == std::vector<unsigned>{1});
    CHECK(s.J == std::vector<unsigned>{0});
    s = index_sets(0, 0);
    CHECK(s.I.empty());
    CHECK(s.J.empty());

    // I and J disjoint; their union is the support of m+2g exactly when
    // B(m,g) is odd
    for (u64 m = 0; m <= 128; ++m)
        for (u64 g = 0; g <= 128; ++g) {
            auto sets = index_sets(m, g);
            std::vector<unsigned> merged = sets.I;
            merged.insert(merged.end(), sets.J.begin(), sets.J.end());
            std::sort(merged.begin(), merged.end());
            CHECK(std::adjacent_find(merged.begin(), merged.end()) == merged.end());
            std::vector<unsigned> support;
            u64 sum = m + 2 * g;
            for (unsigned u = 0; u < bit_length(sum); ++u)
                if (bit(sum, u)) support.push_back(u);
            if (kostka_entry(m, g, 2) == 1)
                CHECK(merged == support);
        }
}

TEST_CASE("splitting lemma") {
    auto [n, d] = splitting(1, 1, 1);
    CHECK(n == 1);
    CHECK(d == 1);
    auto [n0, d0] = splitting(5, 0, 0);
    CHECK(n0 == 1);
    CHECK(d0 == 0);
    auto [n5, d5] = splitting(5, 1, 1);
    CHECK(n5 == 1);
    CHECK(d5 == 1);
    CHECK_THROWS_AS(splitting(2, 0, 0), std::invalid_argument);

    // whenever (m+2g)_u = 1, g_u = 0 and B(m,g) odd, the split pair gives
    // an odd binomial again
    for (u64 m = 0; m <= 128; ++m)
        for (u64 g = 0; g <= 128; ++g) {
            if (kostka_entry(m, g, 2) == 0) continue;
            u64 sum = m + 2 * g;
            for (unsigned u = 0; u < bit_length(sum); ++u) {
                if (bit(sum, u) != 1 || bit(g, u) != 0) continue;
                auto [nn, dd] = splitting(m, g, u);
                CHECK(kostka_entry(nn, dd, 2) == 1);
            }
        }
}

TEST_CASE("kostka expansion columns") {
    auto cell = kostka_expansion(1, 2, 2);  // B(1,2) = binom(5,2), even
    CHECK_FALSE(cell.nonzero);
    bool has_zero_over_one = false;
    for (auto [top, bot] : cell.columns)
        if (top == 0 && bot == 1) has_zero_over_one = true;
    CHECK(has_zero_over_one);
}
