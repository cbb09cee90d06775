#pragma once

// The characteristic-2 idempotents
//
//   e_{m,g} = prod_{u in J} b(2^u) * prod_{u in I} (1 - b(2^u)),
//
// their truncations, the executable complete-set verification, the
// orthogonality check, and the block decomposition they induce.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/padic.hpp"

namespace schur {

struct idempotent_factor {
    unsigned u = 0;            // factor position: b(2^u) or (1 - b(2^u))
    bool complemented = false; // true for the I-factors (1 - b(2^u))
};

struct idempotent_descriptor {
    u64 m = 0, g = 0;
    index_sets_t sets;
    std::vector<idempotent_factor> factors;  // J-factors first, ascending u
    std::optional<unsigned> truncation;
    unsigned degree = 0;  // largest nonzero column of B(m,g)
};

inline idempotent_descriptor describe_idempotent(u64 m, u64 g) {
    if (kostka_entry(m, g, 2) == 0)
        throw std::invalid_argument("describe_idempotent: B(m,g) even, element would be zero");
    idempotent_descriptor d;
    d.m = m;
    d.g = g;
    d.sets = index_sets(m, g);
    for (unsigned u : d.sets.J) d.factors.push_back({u, false});
    for (unsigned u : d.sets.I) d.factors.push_back({u, true});
    u64 sum = m + 2 * g;
    d.degree = sum == 0 ? 0 : bit_length(sum) - 1;
    return d;
}

namespace detail {

inline void check_idempotent_args(u64 m, u64 g, const gf_context& ctx) {
    if (ctx->characteristic() != 2)
        throw std::domain_error("build_idempotent: requires characteristic 2");
    if (ctx->m() != m)
        throw std::invalid_argument("build_idempotent: m does not match context");
    if (kostka_entry(m, g, 2) == 0)
        throw std::invalid_argument("build_idempotent: B(m,g) even, zero element");
    if (g > ctx->lambda2())
        throw std::invalid_argument("build_idempotent: m+2g exceeds degree r");
}

// Product over the listed factor positions. In characteristic 2 the
// I-factor (1 - b(2^u)) is 1 + b(2^u); positions with 2^u > lambda2
// contribute 1 for I and cannot occur for J when m+2g <= r.
inline gf_element idempotent_product(const index_sets_t& sets, const gf_context& ctx,
                                     std::optional<unsigned> bound, bool strict) {
    auto keep = [&](unsigned u) {
        if (!bound.has_value()) return true;
        return strict ? u < *bound : u <= *bound;
    };
    auto result = one_element(ctx);
    for (unsigned u : sets.J) {
        if (!keep(u)) continue;
        if ((u64{1} << u) > ctx->lambda2())
            throw std::logic_error("idempotent_product: J-factor beyond lambda2");
        result = result * basis_element(ctx, u64{1} << u);
    }
    for (unsigned u : sets.I) {
        if (!keep(u)) continue;
        if ((u64{1} << u) > ctx->lambda2()) continue;  // (1 - 0) = 1
        result = result * (one_element(ctx) + basis_element(ctx, u64{1} << u));
    }
    return result;
}

}  // namespace detail

inline gf_element build_idempotent(u64 m, u64 g, const gf_context& ctx) {
    detail::check_idempotent_args(m, g, ctx);
    return detail::idempotent_product(index_sets(m, g), ctx, std::nullopt, false);
}

// (e_{m,g})_{<=t}, or the strict variant (e_{m,g})_{<t}.
inline gf_element build_truncated(u64 m, u64 g, unsigned t, const gf_context& ctx,
                                  bool strict = false) {
    detail::check_idempotent_args(m, g, ctx);
    return detail::idempotent_product(index_sets(m, g), ctx, t, strict);
}

// All g with B(m,g) odd and m+2g <= r, ascending.
inline std::vector<u64> admissible_g(u64 m, const gf_context& ctx) {
    if (ctx->characteristic() != 2)
        throw std::domain_error("admissible_g: requires characteristic 2");
    std::vector<u64> out;
    for (u64 g = 0; g <= ctx->lambda2(); ++g)
        if (kostka_entry(m, g, 2) == 1) out.push_back(g);
    return out;
}

struct orthogonality_result {
    u64 g = 0, d = 0;
    bool ok = false;
};

struct verification_report {
    u64 m = 0, lambda2 = 0, r = 0;
    std::vector<u64> admissible;
    std::vector<bool> idempotent;               // per admissible g
    std::vector<orthogonality_result> orthogonal;
    bool sum_is_identity = false;
    bool count_matches = false;  // elements distinct, nonzero, one per admissible g
    bool pass = false;
};

inline verification_report verify_complete_set(u64 m, const gf_context& ctx) {
    verification_report rep;
    rep.m = m;
    rep.lambda2 = ctx->lambda2();
    rep.r = ctx->r();
    rep.admissible = admissible_g(m, ctx);
    std::vector<gf_element> es;
    es.reserve(rep.admissible.size());
    for (u64 g : rep.admissible) es.push_back(build_idempotent(m, g, ctx));

    bool all = true;
    for (const auto& e : es) {
        bool ok = (e * e == e);
        rep.idempotent.push_back(ok);
        all = all && ok;
    }
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            bool ok = (es[i] * es[j]).is_zero();
            rep.orthogonal.push_back({rep.admissible[i], rep.admissible[j], ok});
            all = all && ok;
        }
    auto total = zero_element(ctx);
    for (const auto& e : es) total += e;
    rep.sum_is_identity = (total == one_element(ctx));
    all = all && rep.sum_is_identity;

    rep.count_matches = true;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i].is_zero()) rep.count_matches = false;
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (es[i] == es[j]) rep.count_matches = false;
    }
    all = all && rep.count_matches;
    rep.pass = all;
    return rep;
}

// Given a zero column s of B(m,g), checks e_{m,g}^2 b(2^s)^2 = 0 and the
// sharper form (e_{m,g})^2_{<s} psi_{m,s} = 0 with
// psi_{m,s} = m_s + sum_{i=v-1}^{s-1} b(2^i)^2.
inline bool orthogonality_check(u64 m, u64 g, unsigned s, const gf_context& ctx) {
    if (ctx->characteristic() != 2)
        throw std::domain_error("orthogonality_check: requires characteristic 2");
    if (kostka_entry(m, g, 2) == 0)
        throw std::invalid_argument("orthogonality_check: B(m,g) even");
    if (bit(m + 2 * g, s) != 0 || bit(g, s) != 0)
        throw std::invalid_argument("orthogonality_check: column s must be zero");
    if ((u64{1} << s) > ctx->lambda2())
        throw std::invalid_argument("orthogonality_check: 2^s exceeds lambda2");

    auto e = build_idempotent(m, g, ctx);
    auto e2 = e * e;
    auto bs2 = mult_basis(u64{1} << s, u64{1} << s, ctx);
    if (!(e2 * bs2).is_zero()) return false;

    // v maximal in [0, s] with m_{v-1} = 0 (m_{-1} = 0 by convention)
    unsigned v = 0;
    for (unsigned w = s; w >= 1; --w)
        if (bit(m, w - 1) == 0) { v = w; break; }
    auto psi = scalar_element(ctx, static_cast<u64>(bit(m, s)));
    for (unsigned i = (v == 0 ? 0 : v - 1); i < s; ++i)
        psi += mult_basis(u64{1} << i, u64{1} << i, ctx);
    auto trunc = build_truncated(m, g, s, ctx, /*strict=*/true);
    return (trunc * trunc * psi).is_zero();
}

struct block_description_t {
    u64 m = 0, g = 0;
    std::vector<u64> basis_degrees;      // a <= lambda2 with bits inside the zero
    std::vector<u64> generator_degrees;  // bits of m+2g
    std::size_t dimension = 0;
};

inline block_description_t block_description(u64 m, u64 g, const gf_context& ctx) {
    if (ctx->characteristic() != 2)
        throw std::domain_error("block_description: requires characteristic 2");
    if (kostka_entry(m, g, 2) == 0 || g > ctx->lambda2())
        throw std::invalid_argument("block_description: g not admissible");
    block_description_t b;
    b.m = m;
    b.g = g;
    u64 sum = m + 2 * g;
    for (u64 a = 0; a <= ctx->lambda2(); ++a)
        if ((a & sum) == 0) b.basis_degrees.push_back(a);
    for (unsigned s = 0; (u64{1} << s) <= ctx->lambda2(); ++s)
        if (bit(sum, s) == 0) b.generator_degrees.push_back(u64{1} << s);
    b.dimension = b.basis_degrees.size();
    return b;
}

// Rank over F_2 of the coefficient vectors of a family of elements.
inline std::size_t gf2_span_rank(const std::vector<gf_element>& elems) {
    if (elems.empty()) return 0;
    std::size_t dim = elems.front().coeffs().size();
    std::size_t words = (dim + 63) / 64;
    std::vector<std::vector<u64>> rows;
    for (const auto& e : elems) {
        std::vector<u64> row(words, 0);
        for (std::size_t a = 0; a < dim; ++a)
            if (e[a] != 0) row[a / 64] |= u64{1} << (a % 64);
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && ((rows[piv][col / 64] >> (col % 64)) & 1u) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank) continue;
            if ((rows[i][col / 64] >> (col % 64)) & 1u)
                for (std::size_t w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
        }
        ++rank;
    }
    return rank;
}

// The products e_{m,g} b(a) over the block's basis degrees.
inline std::vector<gf_element> block_basis_elements(u64 m, u64 g, const gf_context& ctx) {
    auto desc = block_description(m, g, ctx);
    auto e = build_idempotent(m, g, ctx);
    std::vector<gf_element> out;
    out.reserve(desc.basis_degrees.size());
    for (u64 a : desc.basis_degrees) out.push_back(e * basis_element(ctx, a));
    return out;
}

// Coefficient bitmask of a characteristic-2 element (dimension <= 64).
inline u64 coefficient_mask(const gf_element& e) {
    if (e.coeffs().size() > 64)
        throw std::invalid_argument("coefficient_mask: dimension exceeds 64");
    u64 mask = 0;
    for (std::size_t a = 0; a < e.coeffs().size(); ++a)
        if (e[a] != 0) mask |= u64{1} << a;
    return mask;
}

inline gf_element element_from_mask(u64 mask, const gf_context& ctx) {
    gf_element e(ctx);
    for (std::size_t a = 0; a < ctx->dimension(); ++a) e[a] = (mask >> a) & 1u;
    return e;
}

// All solutions of x^2 = x in the F_2-span of the basis, as coefficient
// bitmasks. Enumerates 2^(lambda2+1) candidates, refused beyond
// lambda2 = 12.
inline std::set<u64> exhaustive_idempotent_scan(const gf_context& ctx) {
    if (ctx->characteristic() != 2)
        throw std::domain_error("exhaustive_idempotent_scan: requires characteristic 2");
    if (ctx->lambda2() > 12)
        throw std::length_error("exhaustive_idempotent_scan: lambda2 > 12 refused");
    std::set<u64> found;
    u64 limit = u64{1} << ctx->dimension();
    for (u64 mask = 0; mask < limit; ++mask) {
        auto x = element_from_mask(mask, ctx);
        if (x * x == x) found.insert(mask);
    }
    return found;
}

}  // namespace schur
