#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace zq::coeff {

using BigInt = mpz_class;

/// Integer Laurent polynomial in one variable, dense between its lowest and
/// highest nonzero exponents.  The zero polynomial has no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const BigInt& constant);

    static LaurentPoly monomial(const BigInt& c, int exponent);
    static LaurentPoly from_coefficients(int low, std::vector<BigInt> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1 && (coeffs_.empty() || low_ == 0); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    std::size_t span() const { return coeffs_.size(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(int exponent) const;
    const BigInt& leading() const { return coeffs_.back(); }
    const BigInt& trailing() const { return coeffs_.front(); }

    LaurentPoly shifted(int by) const;
    BigInt content() const;
    BigInt max_abs() const;
    BigInt sum_of_coefficients() const;

    // evaluation at an integer point; exponents must be nonnegative
    BigInt evaluate(const BigInt& x) const;

    void divide_exact(const BigInt& d);
    void negate();

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const BigInt& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const BigInt& c) { return a *= c; }

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // renders with the given variable name; exponent e prints as e/denominator
    std::string to_string(const std::string& var, int exponent_denominator) const;

private:
    void trim();

    int low_ = 0;
    std::vector<BigInt> coeffs_;
};

// Algorithms on ordinary polynomials (Laurent polynomials with low() >= 0).

/// Exact division; returns false when `divisor` does not divide `dividend` over Z.
bool divide_exact(const LaurentPoly& dividend, const LaurentPoly& divisor, LaurentPoly& quotient);

/// Greatest common divisor over Z with positive leading coefficient.
/// Both arguments must have low() >= 0; the s-power content is not extracted.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Multiplicity of the root x = 1.
int root_multiplicity_at_one(const LaurentPoly& p);

}  // namespace zq::coeff
