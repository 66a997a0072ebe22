#include "zq/coeff/scalar.hpp"

#include <utility>

namespace zq::coeff {

namespace {

// gcd of a Laurent numerator with a polynomial denominator (low() == 0)
LaurentPoly gcd_with_denominator(const LaurentPoly& num, const LaurentPoly& den) {
    return gcd(num.shifted(-num.low()), den);
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_constant()) {
        LaurentPoly q = a;
        if (b.leading() != 1) q.divide_exact(b.leading());
        return q;
    }
    LaurentPoly q;
    if (!divide_exact(a, b, q)) throw std::logic_error("inexact polynomial quotient");
    return q;
}

bool is_unit_one(const LaurentPoly& p) {
    return p.is_constant() && !p.is_zero() && p.leading() == 1;
}

}  // namespace

PoleAtOne::PoleAtOne(int order)
    : std::domain_error("pole of order " + std::to_string(order) + " at q=1"), order_(order) {}

Scalar::Scalar(long v) : num_(BigInt(v)) {}

Scalar::Scalar(const BigInt& v) : num_(v) {}

Scalar Scalar::q_power(QPower p) {
    Scalar s;
    s.num_ = LaurentPoly::monomial(1, p.twice);
    return s;
}

Scalar Scalar::rational(const BigInt& num, const BigInt& den) {
    return fraction(LaurentPoly(num), LaurentPoly(den));
}

Scalar Scalar::fraction(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw DivisionByZero();
    Scalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.canonicalize();
    return s;
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(BigInt(1));
        return;
    }
    if (den_.low() != 0) {
        const int e = den_.low();
        den_ = den_.shifted(-e);
        num_ = num_.shifted(-e);
    }
    if (den_.is_constant()) {
        BigInt g = num_.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.leading().get_mpz_t());
        if (den_.leading() < 0) g = -g;
        if (g != 1) {
            num_.divide_exact(g);
            den_.divide_exact(g);
        }
        return;
    }
    LaurentPoly g = gcd_with_denominator(num_, den_);
    if (!is_unit_one(g)) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
    }
    if (den_.leading() < 0) {
        num_.negate();
        den_.negate();
    }
}

bool Scalar::is_one() const {
    return is_unit_one(num_) && is_unit_one(den_);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.num_.negate();
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!is_unit_one(den_)) canonicalize();
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ *= o.den_.leading();
        num_ += o.num_ * den_.leading();
        den_ *= o.den_.leading();
        canonicalize();
        return *this;
    }
    // Henrici: with g = gcd(d1, d2), gcd(n1 d2/g + n2 d1/g, d1 d2/g) = gcd(that, g)
    LaurentPoly g = gcd(den_, o.den_);
    if (is_unit_one(g)) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        if (num_.is_zero()) den_ = LaurentPoly(BigInt(1));
        else if (den_.leading() < 0) {
            num_.negate();
            den_.negate();
        }
        return *this;
    }
    LaurentPoly d1 = exact_quotient(den_, g);
    LaurentPoly d2 = exact_quotient(o.den_, g);
    num_ = num_ * d2 + o.num_ * d1;
    den_ = den_ * d2;
    if (num_.is_zero()) {
        den_ = LaurentPoly(BigInt(1));
        return *this;
    }
    LaurentPoly h = gcd_with_denominator(num_, g);
    if (!is_unit_one(h)) {
        num_ = exact_quotient(num_, h);
        den_ = exact_quotient(den_, h);
    }
    if (den_.leading() < 0) {
        num_.negate();
        den_.negate();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    if (is_unit_one(den_) && is_unit_one(o.den_)) {
        num_ = num_ * o.num_;
        return *this;
    }
    LaurentPoly n1 = num_, n2 = o.num_, d1 = den_, d2 = o.den_;
    if (!is_unit_one(d2)) {
        LaurentPoly g = gcd_with_denominator(n1, d2);
        if (!is_unit_one(g)) {
            n1 = exact_quotient(n1, g);
            d2 = exact_quotient(d2, g);
        }
    }
    if (!is_unit_one(d1)) {
        LaurentPoly g = gcd_with_denominator(n2, d1);
        if (!is_unit_one(g)) {
            n2 = exact_quotient(n2, g);
            d1 = exact_quotient(d1, g);
        }
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    if (den_.leading() < 0) {
        num_.negate();
        den_.negate();
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar s;
    s.num_ = den_;
    s.den_ = num_;
    s.canonicalize();
    return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

std::string Scalar::to_string() const {
    std::string n = num_.to_string("q", 2);
    if (is_unit_one(den_)) return n;
    if (num_.span() > 1) n = "(" + n + ")";
    std::string d = den_.to_string("q", 2);
    if (den_.span() > 1 || !den_.is_constant()) d = "(" + d + ")";
    return n + "/" + d;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

}  // namespace zq::coeff
