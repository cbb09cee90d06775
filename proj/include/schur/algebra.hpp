#pragma once

// The centraliser algebra S_K(lambda) for a two-part partition
// lambda = (m + lambda2, lambda2), in its canonical basis
// {b(0), ..., b(lambda2)}. Multiplication is given by the
// triple-binomial structure constants
//
//   b(i) b(j) = sum_{k=0}^{i} binom(j+k,i) binom(j+k,k) binom(m+j+i,i-k) b(j+k)
//
// with b(a) = 0 for a > lambda2. The context caches a Pascal table and
// all product rows; over F_2 the rows are additionally bit-packed so
// that dense products reduce to word XORs.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "schur/fields.hpp"
#include "schur/padic.hpp"

namespace schur {

template <class Field>
class algebra_element;

template <class Field>
class algebra_context : public std::enable_shared_from_this<algebra_context<Field>> {
public:
    using value_type = typename Field::value_type;

    static std::shared_ptr<const algebra_context> create(Field field, u64 m, u64 lambda2) {
        return std::shared_ptr<const algebra_context>(
            new algebra_context(std::move(field), m, lambda2));
    }

    const Field& field() const { return field_; }
    u64 characteristic() const { return field_.characteristic(); }
    u64 m() const { return m_; }
    u64 lambda2() const { return lambda2_; }
    u64 r() const { return m_ + 2 * lambda2_; }
    std::size_t dimension() const { return static_cast<std::size_t>(lambda2_) + 1; }

    // binom(n, k) as a field element, for n <= r.
    const value_type& binom(u64 n, u64 k) const {
        if (k > n) return zero_;
        return pascal_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    // Coefficient row of b(i) b(j), length dimension().
    const std::vector<value_type>& product_row(u64 i, u64 j) const {
        if (i > lambda2_ || j > lambda2_)
            throw std::invalid_argument("product_row: basis degree out of range");
        return rows_[row_index(i, j)];
    }

    bool bit_packed() const { return packed_words_ > 0; }
    std::size_t packed_words() const { return packed_words_; }
    const u64* packed_row(u64 i, u64 j) const {
        return packed_.data() + row_index(i, j) * packed_words_;
    }

    bool same_as(const algebra_context& other) const {
        return characteristic() == other.characteristic() && m_ == other.m_ &&
               lambda2_ == other.lambda2_;
    }

private:
    algebra_context(Field field, u64 m, u64 lambda2)
        : field_(std::move(field)), m_(m), lambda2_(lambda2), zero_(field_.zero()) {
        build_pascal();
        build_rows();
    }

    static std::size_t row_index_static(u64 i, u64 j) {
        if (i > j) std::swap(i, j);
        return static_cast<std::size_t>(j * (j + 1) / 2 + i);
    }
    std::size_t row_index(u64 i, u64 j) const { return row_index_static(i, j); }

    void build_pascal() {
        u64 top = r();
        pascal_.resize(static_cast<std::size_t>(top) + 1);
        for (u64 n = 0; n <= top; ++n) {
            auto& row = pascal_[static_cast<std::size_t>(n)];
            row.resize(static_cast<std::size_t>(n) + 1, field_.zero());
            row[0] = field_.one();
            for (u64 k = 1; k <= n; ++k) {
                value_type above = (k <= n - 1) ? pascal_[n - 1][k] : field_.zero();
                row[static_cast<std::size_t>(k)] = field_.add(pascal_[n - 1][k - 1], above);
            }
        }
    }

    void build_rows() {
        std::size_t dim = dimension();
        std::size_t n_rows = row_index_static(lambda2_, lambda2_) + 1;
        rows_.assign(n_rows, std::vector<value_type>(dim, field_.zero()));
        for (u64 j = 0; j <= lambda2_; ++j) {
            for (u64 i = 0; i <= j; ++i) {
                auto& row = rows_[row_index(i, j)];
                for (u64 k = 0; k <= i && j + k <= lambda2_; ++k) {
                    value_type c = field_.mul(binom(j + k, i), binom(j + k, k));
                    c = field_.mul(c, binom(m_ + j + i, i - k));
                    row[static_cast<std::size_t>(j + k)] = c;
                }
            }
        }
        if (characteristic() == 2) {
            packed_words_ = (dim + 63) / 64;
            packed_.assign(n_rows * packed_words_, 0);
            for (std::size_t rix = 0; rix < n_rows; ++rix) {
                u64* words = packed_.data() + rix * packed_words_;
                for (std::size_t a = 0; a < dim; ++a)
                    if (!field_.is_zero(rows_[rix][a])) words[a / 64] |= u64{1} << (a % 64);
            }
        }
    }

    Field field_;
    u64 m_, lambda2_;
    value_type zero_;
    std::vector<std::vector<value_type>> pascal_;
    std::vector<std::vector<value_type>> rows_;
    std::vector<u64> packed_;
    std::size_t packed_words_ = 0;
};

template <class Field>
using context_ptr = std::shared_ptr<const algebra_context<Field>>;

template <class Field>
class algebra_element {
public:
    using value_type = typename Field::value_type;

    algebra_element() = default;
    explicit algebra_element(context_ptr<Field> ctx)
        : ctx_(std::move(ctx)), coeffs_(ctx_->dimension(), ctx_->field().zero()) {}

    const context_ptr<Field>& context() const { return ctx_; }
    const std::vector<value_type>& coeffs() const { return coeffs_; }

    const value_type& operator[](std::size_t a) const { return coeffs_[a]; }
    value_type& operator[](std::size_t a) { return coeffs_[a]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!ctx_->field().is_zero(c)) return false;
        return true;
    }

    // Largest degree with nonzero coefficient; empty for the zero element.
    std::optional<u64> degree() const {
        for (std::size_t a = coeffs_.size(); a-- > 0;)
            if (!ctx_->field().is_zero(coeffs_[a])) return static_cast<u64>(a);
        return std::nullopt;
    }

    algebra_element& operator+=(const algebra_element& rhs) {
        check_context(rhs);
        const auto& f = ctx_->field();
        for (std::size_t a = 0; a < coeffs_.size(); ++a)
            coeffs_[a] = f.add(coeffs_[a], rhs.coeffs_[a]);
        return *this;
    }
    algebra_element& operator-=(const algebra_element& rhs) {
        check_context(rhs);
        const auto& f = ctx_->field();
        for (std::size_t a = 0; a < coeffs_.size(); ++a)
            coeffs_[a] = f.sub(coeffs_[a], rhs.coeffs_[a]);
        return *this;
    }

    friend algebra_element operator+(algebra_element a, const algebra_element& b) {
        return a += b;
    }
    friend algebra_element operator-(algebra_element a, const algebra_element& b) {
        return a -= b;
    }

    algebra_element& scale(const value_type& s) {
        const auto& f = ctx_->field();
        for (auto& c : coeffs_) c = f.mul(c, s);
        return *this;
    }

    friend bool operator==(const algebra_element& a, const algebra_element& b) {
        if (!a.ctx_->same_as(*b.ctx_)) return false;
        const auto& f = a.ctx_->field();
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (f.is_zero(f.sub(a.coeffs_[i], b.coeffs_[i])) == false) return false;
        return true;
    }
    friend bool operator!=(const algebra_element& a, const algebra_element& b) {
        return !(a == b);
    }

    friend algebra_element operator*(const algebra_element& x, const algebra_element& y) {
        x.check_context(y);
        const auto& ctx = *x.ctx_;
        if (ctx.bit_packed()) return multiply_packed(x, y);
        const auto& f = ctx.field();
        algebra_element out(x.ctx_);
        std::size_t dim = x.coeffs_.size();
        for (std::size_t i = 0; i < dim; ++i) {
            if (f.is_zero(x.coeffs_[i])) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (f.is_zero(y.coeffs_[j])) continue;
                value_type c = f.mul(x.coeffs_[i], y.coeffs_[j]);
                const auto& row = ctx.product_row(i, j);
                for (std::size_t a = (i < j ? j : i); a < dim; ++a) {
                    if (f.is_zero(row[a])) continue;
                    out.coeffs_[a] = f.add(out.coeffs_[a], f.mul(c, row[a]));
                }
            }
        }
        return out;
    }

private:
    static algebra_element multiply_packed(const algebra_element& x, const algebra_element& y) {
        const auto& ctx = *x.ctx_;
        const auto& f = ctx.field();
        std::size_t dim = x.coeffs_.size();
        std::size_t words = ctx.packed_words();
        std::vector<u64> acc(words, 0);
        for (std::size_t i = 0; i < dim; ++i) {
            if (f.is_zero(x.coeffs_[i])) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (f.is_zero(y.coeffs_[j])) continue;
                const u64* row = ctx.packed_row(i, j);
                for (std::size_t w = 0; w < words; ++w) acc[w] ^= row[w];
            }
        }
        algebra_element out(x.ctx_);
        for (std::size_t a = 0; a < dim; ++a)
            out.coeffs_[a] = (acc[a / 64] >> (a % 64)) & 1u;
        return out;
    }

    void check_context(const algebra_element& rhs) const {
        if (!ctx_ || !rhs.ctx_ || !ctx_->same_as(*rhs.ctx_))
            throw std::invalid_argument("algebra_element: context mismatch");
    }

    context_ptr<Field> ctx_;
    std::vector<value_type> coeffs_;
};

// --- constructors ---------------------------------------------------------

template <class Field>
algebra_element<Field> zero_element(const context_ptr<Field>& ctx) {
    return algebra_element<Field>(ctx);
}

template <class Field>
algebra_element<Field> one_element(const context_ptr<Field>& ctx) {
    algebra_element<Field> e(ctx);
    e[0] = ctx->field().one();
    return e;
}

// b(a) for a <= lambda2.
template <class Field>
algebra_element<Field> basis_element(const context_ptr<Field>& ctx, u64 a) {
    if (a > ctx->lambda2())
        throw std::invalid_argument("basis_element: degree out of range");
    algebra_element<Field> e(ctx);
    e[static_cast<std::size_t>(a)] = ctx->field().one();
    return e;
}

// b(a) with the truncation convention: zero for a > lambda2.
template <class Field>
algebra_element<Field> truncated_basis(const context_ptr<Field>& ctx, u64 a) {
    if (a > ctx->lambda2()) return zero_element(ctx);
    return basis_element(ctx, a);
}

template <class Field>
algebra_element<Field> scalar_element(const context_ptr<Field>& ctx,
                                      typename Field::value_type s) {
    algebra_element<Field> e(ctx);
    e[0] = std::move(s);
    return e;
}

// --- operations -----------------------------------------------------------

// The product b(i) b(j) as an element.
template <class Field>
algebra_element<Field> mult_basis(u64 i, u64 j, const context_ptr<Field>& ctx) {
    if (i > ctx->lambda2() || j > ctx->lambda2())
        throw std::invalid_argument("mult_basis: basis degree out of range");
    algebra_element<Field> out(ctx);
    const auto& row = ctx->product_row(i, j);
    for (std::size_t a = 0; a < row.size(); ++a) out[a] = row[a];
    return out;
}

// Evaluates b(i) = prod_t b(i_t p^t) via the algebra product (char p > 0).
template <class Field>
algebra_element<Field> factorize_basis(u64 i, const context_ptr<Field>& ctx) {
    u64 p = ctx->characteristic();
    if (p == 0) throw std::domain_error("factorize_basis: requires positive characteristic");
    if (i > ctx->lambda2())
        throw std::invalid_argument("factorize_basis: degree out of range");
    auto result = one_element(ctx);
    u64 pow = 1;
    for (u64 rest = i; rest > 0; rest /= p, pow *= p) {
        u64 d = rest % p;
        if (d != 0) result = result * basis_element(ctx, d * pow);
    }
    return result;
}

// b(2^t)^2 evaluated through the characteristic-2 reduction recursion
//   b(2^t)^2 = b(2^t) [ m_t + Gamma(t) ],
//   Gamma(1) = b(1)^2,  Gamma(t) = b(2^{t-1})^2 + m_{t-1} Gamma(t-1).
template <class Field>
algebra_element<Field> square_reduction(unsigned t, const context_ptr<Field>& ctx) {
    if (ctx->characteristic() != 2)
        throw std::domain_error("square_reduction: requires characteristic 2");
    if ((u64{1} << t) > ctx->lambda2())
        throw std::invalid_argument("square_reduction: 2^t exceeds lambda2");
    u64 m = ctx->m();
    const auto& f = ctx->field();
    std::vector<algebra_element<Field>> sq(t + 1, zero_element(ctx));
    sq[0] = basis_element(ctx, 1);
    sq[0].scale(f.from_integer(static_cast<long long>(bit(m, 0))));
    algebra_element<Field> gamma = zero_element(ctx);
    for (unsigned i = 1; i <= t; ++i) {
        if (i == 1) {
            gamma = sq[0];
        } else {
            auto prev = gamma;
            prev.scale(f.from_integer(static_cast<long long>(bit(m, i - 1))));
            gamma = sq[i - 1] + prev;
        }
        auto bracket = scalar_element(ctx, f.from_integer(static_cast<long long>(bit(m, i))));
        bracket += gamma;
        sq[i] = basis_element(ctx, u64{1} << i) * bracket;
    }
    return sq[t];
}

// Checks (b(p^t))^n = (n!)^2 b(n p^t) + terms of lower degree.
template <class Field>
bool power_reduction_check(unsigned t, u64 n, const context_ptr<Field>& ctx) {
    u64 p = ctx->characteristic();
    if (p == 0) throw std::domain_error("power_reduction_check: requires characteristic p");
    if (n < 1 || n > p - 1)
        throw std::invalid_argument("power_reduction_check: need 1 <= n <= p-1");
    u64 pt = 1;
    for (unsigned i = 0; i < t; ++i) pt *= p;
    if (n * pt > ctx->lambda2())
        throw std::invalid_argument("power_reduction_check: n*p^t exceeds lambda2");
    const auto& f = ctx->field();
    auto x = basis_element(ctx, pt);
    auto power = one_element(ctx);
    for (u64 c = 0; c < n; ++c) power = power * x;
    big_int fact = 1;
    for (u64 c = 2; c <= n; ++c) fact *= c;
    auto expected = f.from_integer(fact * fact);
    auto d = power.degree();
    if (!d.has_value() || *d != n * pt) return false;
    return f.is_zero(f.sub(power[static_cast<std::size_t>(n * pt)], expected));
}

// F_k(T) = T (T - (m+2)) (T - 2(m+3)) ... (T - (k-1)(m+k)), monic of
// degree k with integer coefficients, ascending order.
inline std::vector<big_int> f_polynomial(u64 k, u64 m) {
    if (k < 1) throw std::invalid_argument("f_polynomial: k must be >= 1");
    std::vector<big_int> coeffs{0, 1};  // F_1(T) = T
    for (u64 a = 1; a < k; ++a) {
        big_int root = big_int(a) * (m + a + 1);
        std::vector<big_int> next(coeffs.size() + 1, 0);
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            next[d + 1] += coeffs[d];
            next[d] -= root * coeffs[d];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

// Horner evaluation of an integer polynomial at an algebra element.
template <class Field>
algebra_element<Field> evaluate_polynomial(const std::vector<big_int>& coeffs,
                                           const algebra_element<Field>& x) {
    const auto& ctx = x.context();
    const auto& f = ctx->field();
    auto result = zero_element(ctx);
    for (std::size_t d = coeffs.size(); d-- > 0;) {
        result = result * x;
        result += scalar_element(ctx, f.from_integer(coeffs[d]));
    }
    return result;
}

// (k!)^2 b(k) = F_k(b(1)), over exact rationals.
inline bool char0_basis_identity(u64 k, const context_ptr<rational_field>& ctx) {
    if (ctx->characteristic() != 0)
        throw std::domain_error("char0_basis_identity: requires characteristic 0");
    if (k < 1 || k > ctx->lambda2())
        throw std::invalid_argument("char0_basis_identity: k out of range");
    big_int fact = 1;
    for (u64 c = 2; c <= k; ++c) fact *= c;
    auto lhs = basis_element(ctx, k);
    lhs.scale(big_rational(fact * fact));
    auto rhs = evaluate_polynomial(f_polynomial(k, ctx->m()), basis_element(ctx, 1));
    return lhs == rhs;
}

// F_{lambda2+1}(b(1)) = 0 and F_k(b(1)) != 0 for k <= lambda2.
inline bool minimal_polynomial_check(const context_ptr<rational_field>& ctx) {
    if (ctx->characteristic() != 0)
        throw std::domain_error("minimal_polynomial_check: requires characteristic 0");
    auto x = ctx->lambda2() >= 1 ? basis_element(ctx, 1) : zero_element(ctx);
    for (u64 k = 1; k <= ctx->lambda2(); ++k)
        if (evaluate_polynomial(f_polynomial(k, ctx->m()), x).is_zero()) return false;
    return evaluate_polynomial(f_polynomial(ctx->lambda2() + 1, ctx->m()), x).is_zero();
}

using gf_context = context_ptr<gfp_field>;
using gf_element = algebra_element<gfp_field>;
using q_context = context_ptr<rational_field>;
using q_element = algebra_element<rational_field>;

inline gf_context make_gf_context(u64 p, u64 m, u64 lambda2) {
    return algebra_context<gfp_field>::create(gfp_field(p), m, lambda2);
}
inline q_context make_q_context(u64 m, u64 lambda2) {
    return algebra_context<rational_field>::create(rational_field(), m, lambda2);
}

}  // namespace schur
