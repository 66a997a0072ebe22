#pragma once

#include "zq/coeff/laurent.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zq::coeff {

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by the zero scalar") {}
};

class PoleAtOne : public std::domain_error {
public:
    explicit PoleAtOne(int order);
    int order() const { return order_; }

private:
    int order_;
};

/// q^{e} with e an integer or half-integer, stored as 2e.
struct QPower {
    int twice = 0;

    static constexpr QPower of(int e) { return QPower{2 * e}; }
    static constexpr QPower half(int twice_exponent) { return QPower{twice_exponent}; }

    constexpr QPower operator*(QPower o) const { return QPower{twice + o.twice}; }
    constexpr QPower inverse() const { return QPower{-twice}; }
    constexpr QPower pow(int n) const { return QPower{twice * n}; }
    constexpr bool operator==(const QPower&) const = default;
};

/// Exact rational function of q, kept as N(s)/D(s) in s = q^{1/2}.
/// Canonical form: gcd(N, D) = 1 including integer content, D has lowest
/// exponent 0 and positive leading coefficient.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v);  // NOLINT(google-explicit-constructor)
    explicit Scalar(const BigInt& v);

    static Scalar q_power(QPower p);
    static Scalar q_power(int exponent) { return q_power(QPower::of(exponent)); }
    static Scalar rational(const BigInt& num, const BigInt& den);
    /// N(s)/D(s); throws DivisionByZero if den is zero
    static Scalar fraction(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.is_constant() && den_.leading() == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar pow(int e) const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// `P(q)` or `(P(q))/(Q(q))`, exponents decreasing, half powers as q^(a/2)
    std::string to_string() const;

private:
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_{BigInt(1)};
};

enum class ArithOp { add, sub, mul, div };

/// Dispatching form of the four field operations.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

}  // namespace zq::coeff
