#pragma once

// Coefficient fields for the centraliser algebra: residues mod a prime p
// with exact machine arithmetic, and exact rationals for characteristic
// zero. Both expose the same small interface so the algebra code is
// written once.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "schur/padic.hpp"

namespace schur {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

// F_p with runtime modulus. Values are canonical residues in [0, p).
class gfp_field {
public:
    using value_type = std::uint64_t;

    explicit gfp_field(u64 p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("gfp_field: modulus must be prime");
    }

    u64 characteristic() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1 % p_; }

    value_type add(value_type a, value_type b) const { return (a + b) % p_; }
    value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
    value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }

    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("gfp_field: inverse of zero");
        return pow(a, p_ - 2);
    }

    value_type pow(value_type a, u64 e) const {
        value_type r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    value_type from_integer(const big_int& n) const {
        big_int r = n % p_;
        if (r < 0) r += p_;
        return static_cast<value_type>(r);
    }
    value_type from_integer(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<value_type>(r);
    }

    bool is_zero(value_type a) const { return a == 0; }

    std::string to_string(value_type a) const { return std::to_string(a); }

private:
    u64 p_;
};

// Exact rationals (characteristic zero).
class rational_field {
public:
    using value_type = big_rational;

    u64 characteristic() const { return 0; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }

    value_type inv(const value_type& a) const {
        if (a == 0) throw std::domain_error("rational_field: inverse of zero");
        return 1 / a;
    }

    value_type from_integer(const big_int& n) const { return big_rational(n); }
    value_type from_integer(long long n) const { return big_rational(n); }

    bool is_zero(const value_type& a) const { return a == 0; }

    std::string to_string(const value_type& a) const { return a.str(); }
};

}  // namespace schur
