#pragma once

// Digit-level combinatorics in base p: p-adic expansions, Lucas binomial
// coefficients, the two-part Kostka predicate B(m,g) = binom(m+2g, g),
// carry sequences of the binary addition m + 2g, and the index sets I/J
// that drive the idempotent construction.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace schur {

using u64 = std::uint64_t;

inline bool is_prime(u64 p) {
    if (p < 2) return false;
    for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Canonical base-p digit list, least significant first, no trailing zeros.
// Zero has the empty digit list.
struct p_adic_digits {
    u64 base = 2;
    std::vector<unsigned> digits;
    u64 value = 0;

    friend bool operator==(const p_adic_digits& a, const p_adic_digits& b) {
        return a.base == b.base && a.value == b.value;
    }
};

inline p_adic_digits p_adic(u64 n, u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("p_adic: base must be prime");
    p_adic_digits out;
    out.base = p;
    out.value = n;
    while (n > 0) {
        out.digits.push_back(static_cast<unsigned>(n % p));
        n /= p;
    }
    return out;
}

// The i-th base-p digit of n; zero for i past the end (and by the paper's
// convention digit(-1) would be zero, callers handle negative positions).
inline unsigned digit(u64 n, u64 p, unsigned i) {
    while (i-- > 0) n /= p;
    return static_cast<unsigned>(n % p);
}

inline unsigned bit(u64 n, unsigned i) { return (n >> i) & 1u; }

inline unsigned bit_length(u64 n) {
    unsigned len = 0;
    while (n > 0) { ++len; n >>= 1; }
    return len;
}

// binom(n, k) mod p, digit-wise by Lucas' theorem. Short-circuits on the
// first zero digit binomial.
inline u64 lucas_binomial(u64 n, u64 k, u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("lucas_binomial: p must be prime");
    u64 result = 1;
    while (k > 0 || n > 0) {
        u64 nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // binom(nd, kd) with nd, kd < p; exact, then reduced
        u64 c = 1;
        for (u64 i = 1; i <= kd; ++i) c = c * (nd - kd + i) / i;
        result = (result * (c % p)) % p;
        n /= p;
        k /= p;
    }
    return result;
}

// One entry of the p-Kostka matrix for two-part partitions: 1 iff
// B(m,g) = binom(m+2g, g) is nonzero mod p.
inline int kostka_entry(u64 m, u64 g, u64 p) {
    return lucas_binomial(m + 2 * g, g, p) != 0 ? 1 : 0;
}

// One column pair of the binomial expansion of B(m,g).
struct kostka_cell {
    u64 m = 0, g = 0;
    std::vector<std::pair<unsigned, unsigned>> columns;  // ((m+2g)_u, g_u)
    bool nonzero = false;
};

inline kostka_cell kostka_expansion(u64 m, u64 g, u64 p) {
    kostka_cell cell;
    cell.m = m;
    cell.g = g;
    u64 s = m + 2 * g, gg = g;
    while (s > 0 || gg > 0) {
        cell.columns.emplace_back(static_cast<unsigned>(s % p),
                                  static_cast<unsigned>(gg % p));
        s /= p;
        gg /= p;
    }
    cell.nonzero = lucas_binomial(m + 2 * g, g, p) != 0;
    return cell;
}

// Finite window of the quarter-infinite Kostka matrix, row-major by m.
inline std::vector<std::vector<int>> kostka_window(u64 m_max, u64 g_max, u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("kostka_window: p must be prime");
    std::vector<std::vector<int>> rows;
    rows.reserve(m_max + 1);
    for (u64 m = 0; m <= m_max; ++m) {
        std::vector<int> row;
        row.reserve(g_max + 1);
        for (u64 g = 0; g <= g_max; ++g) row.push_back(kostka_entry(m, g, p));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Carries x_i of the binary addition m + 2g, defined by
//   m_i + g_{i-1} + x_{i-1} = (m+2g)_i + 2 x_i,   g_{-1} = x_{-1} = 0.
struct carry_sequence_t {
    u64 m = 0, g = 0;
    std::vector<unsigned> x;  // zero beyond the stored positions
};

inline carry_sequence_t carry_sequence(u64 m, u64 g) {
    carry_sequence_t cs;
    cs.m = m;
    cs.g = g;
    u64 sum = m + 2 * g;
    unsigned len = std::max(bit_length(m), bit_length(2 * g)) + 1;
    unsigned prev = 0;
    for (unsigned i = 0; i < len; ++i) {
        unsigned gi1 = (i == 0) ? 0u : bit(g, i - 1);
        unsigned lhs = bit(m, i) + gi1 + prev;
        unsigned xi = (lhs - bit(sum, i)) / 2;
        cs.x.push_back(xi);
        prev = xi;
    }
    return cs;
}

// I = { u : g_u = 0, (m+2g)_u = 1 },  J = { u : g_u = 1, (m+2g)_u = 1 }.
struct index_sets_t {
    u64 m = 0, g = 0;
    std::vector<unsigned> I, J;  // ascending
};

inline index_sets_t index_sets(u64 m, u64 g) {
    index_sets_t s;
    s.m = m;
    s.g = g;
    u64 sum = m + 2 * g;
    for (unsigned u = 0; u < bit_length(sum); ++u) {
        if (bit(sum, u) == 1) {
            if (bit(g, u) == 0)
                s.I.push_back(u);
            else
                s.J.push_back(u);
        }
    }
    return s;
}

// Splitting of B(m,g) at a column u with (m+2g)_u = 1 and B(m,g) odd:
// n keeps digits m_0..m_u, d keeps g_0..g_{u-1}.
inline std::pair<u64, u64> splitting(u64 m, u64 g, unsigned u) {
    if (bit(m + 2 * g, u) != 1)
        throw std::invalid_argument("splitting: column u of m+2g must be 1");
    if (kostka_entry(m, g, 2) == 0)
        throw std::invalid_argument("splitting: B(m,g) must be odd");
    u64 n = (u + 1 >= 64) ? m : m & ((u64{1} << (u + 1)) - 1);
    u64 d = (u >= 64) ? g : g & ((u64{1} << u) - 1);
    return {n, d};
}

}  // namespace schur
