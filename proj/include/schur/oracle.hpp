#pragma once

// Brute-force realization of S_K(lambda) on the lambda-weight space of
// E^{(x) r}: words of length r over {1,2} with exactly lambda2 letters 2.
// b(i) acts by flipping i letters 2 -> 1 (the divided power e^(i)) and
// then i letters 1 -> 2 (f^(i)), each flip pattern counting once. This
// gives an independent check of the structure constants, idempotency and
// the rank bookkeeping.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/idempotents.hpp"
#include "schur/padic.hpp"

namespace schur {

struct cost_bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline u64 binomial_u64(u64 n, u64 k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u64 res = 1;
    for (u64 i = 1; i <= k; ++i) res = res * (n - k + i) / i;
    return res;
}

constexpr u64 default_cost_bound = 100000;

// Words are bitmasks over positions 0..r-1; a set bit means letter 2.
// Enumeration is lexicographic in the word (letter 1 before letter 2).
struct weight_basis_t {
    unsigned r = 0;
    u64 lambda2 = 0;
    std::vector<std::uint32_t> words;
    std::unordered_map<std::uint32_t, std::size_t> index;

    std::size_t dimension() const { return words.size(); }
};

inline weight_basis_t weight_basis(unsigned r, u64 lambda2,
                                   u64 cost_bound = default_cost_bound) {
    if (lambda2 > r) throw std::invalid_argument("weight_basis: lambda2 > r");
    if (r >= 32) throw std::invalid_argument("weight_basis: r too large for word masks");
    if (binomial_u64(r, lambda2) > cost_bound)
        throw cost_bound_error("weight_basis: dimension exceeds cost bound");
    weight_basis_t basis;
    basis.r = r;
    basis.lambda2 = lambda2;
    // depth-first, letter 1 before letter 2, gives word-lexicographic order
    std::uint32_t word = 0;
    auto rec = [&](auto&& self, unsigned pos, u64 twos) -> void {
        if (pos == r) {
            if (twos == lambda2) basis.words.push_back(word);
            return;
        }
        if (r - pos - 1 + twos >= lambda2) self(self, pos + 1, twos);  // letter 1
        if (twos < lambda2) {                                          // letter 2
            word |= std::uint32_t{1} << pos;
            self(self, pos + 1, twos + 1);
            word &= ~(std::uint32_t{1} << pos);
        }
    };
    rec(rec, 0, 0);
    for (std::size_t i = 0; i < basis.words.size(); ++i) basis.index[basis.words[i]] = i;
    return basis;
}

namespace detail {

// Visit all `count`-subsets of the set bits described by `positions`.
template <class Fn>
void for_each_subset(const std::vector<unsigned>& positions, unsigned count, Fn&& fn) {
    if (count > positions.size()) return;
    std::vector<unsigned> idx(count);
    for (unsigned i = 0; i < count; ++i) idx[i] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (unsigned i : idx) mask |= std::uint32_t{1} << positions[i];
        fn(mask);
        // next combination
        unsigned i = count;
        while (i-- > 0) {
            if (idx[i] + (count - i) < positions.size() + 0u) {
                ++idx[i];
                for (unsigned j = i + 1; j < count; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (count == 0) return;
    }
}

inline std::vector<unsigned> bit_positions(std::uint32_t mask, unsigned r) {
    std::vector<unsigned> pos;
    for (unsigned i = 0; i < r; ++i)
        if ((mask >> i) & 1u) pos.push_back(i);
    return pos;
}

}  // namespace detail

// All words reached from `word` by rewriting exactly `count` letters
// equal to `letter_from` (1 or 2) to the other letter, coefficient 1 each.
inline std::vector<std::uint32_t> divided_power_transfer(std::uint32_t word, unsigned r,
                                                         int letter_from, unsigned count) {
    std::uint32_t all = (r >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << r) - 1);
    std::uint32_t carriers = letter_from == 2 ? word : (all & ~word);
    auto positions = detail::bit_positions(carriers, r);
    std::vector<std::uint32_t> out;
    detail::for_each_subset(positions, count,
                            [&](std::uint32_t flip) { out.push_back(word ^ flip); });
    return out;
}

// Dense square matrix over F_p.
class fp_matrix {
public:
    fp_matrix() = default;
    fp_matrix(std::size_t dim, u64 p) : dim_(dim), p_(p), data_(dim * dim, 0) {}

    static fp_matrix identity(std::size_t dim, u64 p) {
        fp_matrix m(dim, p);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t dim() const { return dim_; }
    u64 modulus() const { return p_; }

    u64& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    u64 operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    friend bool operator==(const fp_matrix& a, const fp_matrix& b) {
        return a.dim_ == b.dim_ && a.p_ == b.p_ && a.data_ == b.data_;
    }

    bool is_zero() const {
        for (u64 v : data_)
            if (v != 0) return false;
        return true;
    }

    fp_matrix& operator+=(const fp_matrix& rhs) {
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = (data_[i] + rhs.data_[i]) % p_;
        return *this;
    }

    fp_matrix& add_scaled(const fp_matrix& rhs, u64 scale) {
        scale %= p_;
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] = (data_[i] + scale * rhs.data_[i]) % p_;
        return *this;
    }

    friend fp_matrix operator*(const fp_matrix& a, const fp_matrix& b) {
        if (a.dim_ != b.dim_ || a.p_ != b.p_)
            throw std::invalid_argument("fp_matrix: shape/modulus mismatch");
        if (a.p_ == 2) return multiply_gf2(a, b);
        fp_matrix c(a.dim_, a.p_);
        // products are tiny (entries < p <= 7), so a full row accumulates
        // in 64 bits and one reduction per entry suffices
        std::vector<u64> acc(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            const u64* arow = a.data_.data() + i * a.dim_;
            for (std::size_t k = 0; k < a.dim_; ++k) {
                u64 s = arow[k];
                if (s == 0) continue;
                const u64* brow = b.data_.data() + k * b.dim_;
                for (std::size_t j = 0; j < a.dim_; ++j) acc[j] += s * brow[j];
            }
            u64* crow = c.data_.data() + i * c.dim_;
            for (std::size_t j = 0; j < a.dim_; ++j) crow[j] = acc[j] % a.p_;
        }
        return c;
    }

    // Rank by Gaussian elimination over F_p.
    std::size_t rank() const {
        if (p_ == 2) return rank_gf2();
        std::vector<u64> work = data_;
        gfp_field f(p_);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < dim_ && rank < dim_; ++col) {
            std::size_t piv = rank;
            while (piv < dim_ && work[piv * dim_ + col] == 0) ++piv;
            if (piv == dim_) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                std::swap(work[rank * dim_ + j], work[piv * dim_ + j]);
            u64 inv = f.inv(work[rank * dim_ + col]);
            for (std::size_t j = col; j < dim_; ++j)
                work[rank * dim_ + j] = f.mul(work[rank * dim_ + j], inv);
            for (std::size_t i = 0; i < dim_; ++i) {
                if (i == rank) continue;
                u64 s = work[i * dim_ + col];
                if (s == 0) continue;
                for (std::size_t j = col; j < dim_; ++j)
                    work[i * dim_ + j] = f.sub(work[i * dim_ + j], f.mul(s, work[rank * dim_ + j]));
            }
            ++rank;
        }
        return rank;
    }

    const std::vector<u64>& data() const { return data_; }

private:
    std::vector<u64> pack_rows() const {
        std::size_t words = (dim_ + 63) / 64;
        std::vector<u64> packed(dim_ * words, 0);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (data_[i * dim_ + j]) packed[i * words + j / 64] |= u64{1} << (j % 64);
        return packed;
    }

    static fp_matrix multiply_gf2(const fp_matrix& a, const fp_matrix& b) {
        std::size_t dim = a.dim_;
        std::size_t words = (dim + 63) / 64;
        auto bp = b.pack_rows();
        fp_matrix c(dim, 2);
        std::vector<u64> acc(words);
        for (std::size_t i = 0; i < dim; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            const u64* arow = a.data_.data() + i * dim;
            for (std::size_t k = 0; k < dim; ++k) {
                if (!arow[k]) continue;
                const u64* brow = bp.data() + k * words;
                for (std::size_t w = 0; w < words; ++w) acc[w] ^= brow[w];
            }
            u64* crow = c.data_.data() + i * dim;
            for (std::size_t j = 0; j < dim; ++j) crow[j] = (acc[j / 64] >> (j % 64)) & 1u;
        }
        return c;
    }

    std::size_t rank_gf2() const {
        std::size_t words = (dim_ + 63) / 64;
        auto packed = pack_rows();
        std::size_t rank = 0;
        for (std::size_t col = 0; col < dim_ && rank < dim_; ++col) {
            std::size_t piv = rank;
            while (piv < dim_ && ((packed[piv * words + col / 64] >> (col % 64)) & 1u) == 0)
                ++piv;
            if (piv == dim_) continue;
            for (std::size_t w = 0; w < words; ++w)
                std::swap(packed[rank * words + w], packed[piv * words + w]);
            for (std::size_t i = 0; i < dim_; ++i) {
                if (i == rank) continue;
                if ((packed[i * words + col / 64] >> (col % 64)) & 1u)
                    for (std::size_t w = 0; w < words; ++w)
                        packed[i * words + w] ^= packed[rank * words + w];
            }
            ++rank;
        }
        return rank;
    }

    std::size_t dim_ = 0;
    u64 p_ = 2;
    std::vector<u64> data_;
};

// Matrix of b(i) on the lambda-weight space: e^(i) then f^(i).
inline fp_matrix b_matrix(u64 i, const weight_basis_t& basis, u64 p) {
    std::size_t dim = basis.dimension();
    fp_matrix mat(dim, p);
    if (i > basis.lambda2) return mat;  // too few 2s to flip: zero matrix
    for (std::size_t col = 0; col < dim; ++col) {
        std::uint32_t w = basis.words[col];
        for (std::uint32_t mid : divided_power_transfer(w, basis.r, 2, static_cast<unsigned>(i))) {
            for (std::uint32_t tgt :
                 divided_power_transfer(mid, basis.r, 1, static_cast<unsigned>(i))) {
                auto it = basis.index.find(tgt);
                if (it == basis.index.end())
                    throw std::logic_error("b_matrix: action left the weight space");
                u64& entry = mat(it->second, col);
                entry = (entry + 1) % p;
            }
        }
    }
    return mat;
}

// F_2 rank of the span of flattened matrices (linear independence check).
inline std::size_t matrix_family_rank(const std::vector<fp_matrix>& mats, u64 p) {
    std::size_t n = mats.size();
    if (n == 0) return 0;
    std::size_t len = mats.front().data().size();
    std::vector<std::vector<u64>> rows;
    for (const auto& m : mats) rows.push_back(m.data());
    gfp_field f(p);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < len && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && rows[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(rows[rank], rows[piv]);
        u64 inv = f.inv(rows[rank][col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank) continue;
            u64 s = f.mul(rows[i][col], inv);
            if (s == 0) continue;
            for (std::size_t j = col; j < len; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(s, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

struct structure_constant_report {
    unsigned r = 0;
    u64 lambda2 = 0;
    u64 p = 2;
    std::size_t dimension = 0;
    std::size_t products_checked = 0;
    std::size_t mismatches = 0;
    bool independent = false;
    bool pass = false;
};

// Checks b_matrix(i) b_matrix(j) against the triple-binomial combination
// sum_k c_k b_matrix(j+k) for all i, j <= lambda2, and that the
// matrices b(0..lambda2) are linearly independent.
inline structure_constant_report compare_structure_constants(
    unsigned r, u64 lambda2, u64 p, u64 cost_bound = default_cost_bound) {
    structure_constant_report rep;
    rep.r = r;
    rep.lambda2 = lambda2;
    rep.p = p;
    if (2 * lambda2 > r)
        throw std::invalid_argument("compare_structure_constants: need lambda2 <= r/2");
    u64 m = r - 2 * lambda2;
    auto basis = weight_basis(r, lambda2, cost_bound);
    rep.dimension = basis.dimension();

    std::vector<fp_matrix> B;
    for (u64 a = 0; a <= lambda2; ++a) B.push_back(b_matrix(a, basis, p));

    // literal triple-binomial coefficients, for each ordered pair (i, j)
    for (u64 i = 0; i <= lambda2; ++i) {
        for (u64 j = 0; j <= lambda2; ++j) {
            fp_matrix product = B[static_cast<std::size_t>(i)] * B[static_cast<std::size_t>(j)];
            fp_matrix expected(basis.dimension(), p);
            for (u64 k = 0; k <= i && j + k <= lambda2; ++k) {
                u64 c = lucas_binomial(j + k, i, p);
                c = (c * lucas_binomial(j + k, k, p)) % p;
                c = (c * lucas_binomial(m + j + i, i - k, p)) % p;
                if (c != 0) expected.add_scaled(B[static_cast<std::size_t>(j + k)], c);
            }
            ++rep.products_checked;
            if (!(product == expected)) ++rep.mismatches;
        }
    }
    rep.independent = matrix_family_rank(B, p) == lambda2 + 1;
    rep.pass = rep.mismatches == 0 && rep.independent;
    return rep;
}

// Matrix realization of an algebra element (coefficients into b matrices).
inline fp_matrix matrix_of_element(const gf_element& e, const std::vector<fp_matrix>& B) {
    fp_matrix mat(B.front().dim(), B.front().modulus());
    for (std::size_t a = 0; a < e.coeffs().size(); ++a)
        if (e[a] != 0) mat.add_scaled(B[a], e[a]);
    return mat;
}

struct rank_report_entry {
    u64 g = 0;
    std::size_t rank = 0;
    bool idempotent = false;
};

struct rank_report {
    unsigned r = 0;
    u64 m = 0;
    u64 p = 2;
    std::size_t dimension = 0;
    std::vector<rank_report_entry> per_g;
    bool pairwise_orthogonal = false;
    bool sum_is_identity = false;
    std::size_t rank_sum = 0;
    bool pass = false;
};

// Evaluates each e_{m,g} on tensor space and records idempotency,
// orthogonality, the identity decomposition and the rank partition.
inline rank_report idempotent_rank_report(u64 m, u64 lambda2,
                                          u64 cost_bound = default_cost_bound) {
    rank_report rep;
    rep.m = m;
    rep.p = 2;
    rep.r = static_cast<unsigned>(m + 2 * lambda2);
    auto basis = weight_basis(rep.r, lambda2, cost_bound);
    rep.dimension = basis.dimension();
    auto ctx = make_gf_context(2, m, lambda2);

    std::vector<fp_matrix> B;
    for (u64 a = 0; a <= lambda2; ++a) B.push_back(b_matrix(a, basis, 2));

    std::vector<fp_matrix> mats;
    for (u64 g : admissible_g(m, ctx))
        mats.push_back(matrix_of_element(build_idempotent(m, g, ctx), B));
    auto gs = admissible_g(m, ctx);

    bool all = true;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        rank_report_entry entry;
        entry.g = gs[i];
        entry.idempotent = (mats[i] * mats[i] == mats[i]);
        entry.rank = mats[i].rank();
        all = all && entry.idempotent && entry.rank > 0;
        rep.rank_sum += entry.rank;
        rep.per_g.push_back(entry);
    }
    rep.pairwise_orthogonal = true;
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            if (!(mats[i] * mats[j]).is_zero()) rep.pairwise_orthogonal = false;
    fp_matrix total(rep.dimension, 2);
    for (const auto& mt : mats) total += mt;
    rep.sum_is_identity = (total == fp_matrix::identity(rep.dimension, 2));
    rep.pass = all && rep.pairwise_orthogonal && rep.sum_is_identity &&
               rep.rank_sum == rep.dimension;
    return rep;
}

}  // namespace schur
