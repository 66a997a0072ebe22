#pragma once

#include "zq/coeff/scalar.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace zq::formal {

using coeff::QPower;
using coeff::Scalar;

class WindowError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// One-directional formal series sum_{n >= lo} c_n v^n in a named variable v
/// (for example "w/z" or "z/w"; a series in z^{-1} is a series in "1/z").
/// Coefficients are exact for lo <= n <= hi and exactly zero below lo.
class Series {
public:
    Series(std::string variable, int lo, int hi);

    static Series constant(std::string variable, const Scalar& c, int hi);
    static Series monomial(std::string variable, const Scalar& c, int exponent, int hi);

    const std::string& variable() const { return var_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const std::map<int, Scalar>& terms() const { return coeffs_; }

    /// throws WindowError above hi
    Scalar coefficient(int n) const;
    void set(int n, Scalar c);

    Series truncated(int hi) const;
    /// f(v) -> f(c v)
    Series scaled_argument(QPower c) const;
    /// reciprocal; the coefficient at lo must be nonzero
    Series inverse() const;
    /// exponential of a series with vanishing constant term (lo >= 1 or c_0 = 0)
    Series exp() const;
    Series pow(int e) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Scalar& c, const Series& a);

    /// coefficient-wise equality on the common window
    friend bool agrees(const Series& a, const Series& b);

private:
    std::string var_;
    int lo_;
    int hi_;
    std::map<int, Scalar> coeffs_;
};

/// Taylor coefficients of f(xi) = (q^2 xi - 1)/(xi - q^2) at xi = 0 (the
/// series g(z)), or of 1/f (the series g(z)^{-1}); `variable` names the
/// expansion variable, so g(z^{-1}) is obtained with variable "1/z".
Series g_series(bool inverse, int order, const std::string& variable = "z");

/// (a1 u; y)_inf / (a2 u; y)_inf as a power series in u to order
Series euler_ratio(QPower a1, QPower a2, QPower y, int order, const std::string& variable = "u");

}  // namespace zq::formal
