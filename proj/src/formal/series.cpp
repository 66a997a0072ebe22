#include "zq/formal/series.hpp"

#include "zq/coeff/qfunctions.hpp"

#include <algorithm>
#include <utility>

namespace zq::formal {

namespace {

void require_same_variable(const Series& a, const Series& b) {
    if (a.variable() != b.variable()) {
        throw std::invalid_argument("series in different variables: " + a.variable() + " vs " + b.variable());
    }
}

}  // namespace

Series::Series(std::string variable, int lo, int hi) : var_(std::move(variable)), lo_(lo), hi_(hi) {
    if (hi < lo - 1) throw std::invalid_argument("series window with hi < lo - 1");
}

Series Series::constant(std::string variable, const Scalar& c, int hi) {
    return monomial(std::move(variable), c, 0, hi);
}

Series Series::monomial(std::string variable, const Scalar& c, int exponent, int hi) {
    Series s(std::move(variable), exponent, std::max(hi, exponent - 1));
    if (exponent <= s.hi_) s.set(exponent, c);
    return s;
}

Scalar Series::coefficient(int n) const {
    if (n < lo_) return Scalar(0);
    if (n > hi_) throw WindowError("coefficient " + std::to_string(n) + " of a series in " + var_ + " beyond its window");
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

void Series::set(int n, Scalar c) {
    if (n < lo_ || n > hi_) throw WindowError("set outside the series window");
    if (c.is_zero()) coeffs_.erase(n);
    else coeffs_[n] = std::move(c);
}

Series Series::truncated(int hi) const {
    Series s(var_, lo_, std::min(hi, hi_));
    for (const auto& [n, c] : coeffs_) {
        if (n <= s.hi_) s.coeffs_.emplace(n, c);
    }
    return s;
}

Series Series::scaled_argument(QPower c) const {
    Series s(var_, lo_, hi_);
    for (const auto& [n, x] : coeffs_) s.coeffs_.emplace(n, x * Scalar::q_power(c.pow(n)));
    return s;
}

Series Series::inverse() const {
    if (coeffs_.empty()) throw coeff::DivisionByZero();
    const int low = coeffs_.begin()->first;
    const Scalar c0inv = coeffs_.begin()->second.inverse();
    const int rel = hi_ - low;  // relative order known exactly
    std::vector<Scalar> a(static_cast<std::size_t>(rel + 1)), b(static_cast<std::size_t>(rel + 1));
    for (const auto& [n, x] : coeffs_) {
        if (n - low <= rel) a[static_cast<std::size_t>(n - low)] = x;
    }
    b[0] = c0inv;
    for (int i = 1; i <= rel; ++i) {
        Scalar acc;
        for (int j = 1; j <= i; ++j) {
            if (a[static_cast<std::size_t>(j)].is_zero()) continue;
            acc += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i - j)];
        }
        b[static_cast<std::size_t>(i)] = -(acc * c0inv);
    }
    Series s(var_, -low, hi_ - 2 * low);
    for (int i = 0; i <= rel; ++i) s.set(i - low, b[static_cast<std::size_t>(i)]);
    return s;
}

Series Series::exp() const {
    if (lo_ < 0) {
        for (const auto& [n, x] : coeffs_) {
            if (n < 0) throw std::domain_error("exp of a series with negative exponents");
        }
    }
    if (!coefficient(0).is_zero()) throw std::domain_error("exp of a series with nonzero constant term");
    const int order = hi_;
    std::vector<Scalar> e(static_cast<std::size_t>(std::max(order, 0) + 1));
    e[0] = Scalar(1);
    for (int n = 1; n <= order; ++n) {
        Scalar acc;
        for (const auto& [j, x] : coeffs_) {
            if (j < 1) continue;
            if (j > n) break;
            acc += Scalar(j) * x * e[static_cast<std::size_t>(n - j)];
        }
        e[static_cast<std::size_t>(n)] = acc / Scalar(n);
    }
    Series s(var_, 0, order);
    for (int n = 0; n <= order; ++n) s.set(n, e[static_cast<std::size_t>(n)]);
    return s;
}

Series Series::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Series result = constant(var_, Scalar(1), hi_ - std::min(lo_, 0));
    for (int i = 0; i < e; ++i) result = result * *this;
    return result;
}

Series Series::operator-() const {
    Series s = *this;
    for (auto& [n, x] : s.coeffs_) x = -x;
    return s;
}

Series operator+(const Series& a, const Series& b) {
    require_same_variable(a, b);
    Series s(a.var_, std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
    for (const auto* src : {&a, &b}) {
        for (const auto& [n, x] : src->coeffs_) {
            if (n > s.hi_) continue;
            auto it = s.coeffs_.find(n);
            if (it == s.coeffs_.end()) s.coeffs_.emplace(n, x);
            else {
                it->second += x;
                if (it->second.is_zero()) s.coeffs_.erase(it);
            }
        }
    }
    return s;
}

Series operator-(const Series& a, const Series& b) {
    return a + (-b);
}

Series operator*(const Series& a, const Series& b) {
    require_same_variable(a, b);
    Series s(a.var_, a.lo_ + b.lo_, std::min(a.hi_ + b.lo_, b.hi_ + a.lo_));
    std::map<int, Scalar> acc;
    for (const auto& [i, x] : a.coeffs_) {
        for (const auto& [j, y] : b.coeffs_) {
            if (i + j > s.hi_) break;
            acc[i + j] += x * y;
        }
    }
    for (auto& [n, x] : acc) s.set(n, std::move(x));
    return s;
}

Series operator*(const Scalar& c, const Series& a) {
    Series s(a.var_, a.lo_, a.hi_);
    if (c.is_zero()) return s;
    for (const auto& [n, x] : a.coeffs_) s.coeffs_.emplace(n, c * x);
    return s;
}

bool agrees(const Series& a, const Series& b) {
    require_same_variable(a, b);
    const int lo = std::min(a.lo(), b.lo());
    const int hi = std::min(a.hi(), b.hi());
    for (int n = lo; n <= hi; ++n) {
        if (a.coefficient(n) != b.coefficient(n)) return false;
    }
    return true;
}

Series g_series(bool inverse, int order, const std::string& variable) {
    // f(xi) = (q^2 xi - 1) / (xi - q^2)
    Series num(variable, 0, order), den(variable, 0, order);
    num.set(0, Scalar(-1));
    if (order >= 1) num.set(1, Scalar::q_power(2));
    den.set(0, -Scalar::q_power(2));
    if (order >= 1) den.set(1, Scalar(1));
    return inverse ? den * num.inverse() : num * den.inverse();
}

Series euler_ratio(QPower a1, QPower a2, QPower y, int order, const std::string& variable) {
    if (order < 0) throw std::invalid_argument("euler_ratio: negative order");
    Series p1(variable, 0, order), p2(variable, 0, order);
    for (int m = 0; m <= order; ++m) {
        p1.set(m, coeff::pochhammer_coeff(a1, y, m));
        p2.set(m, coeff::pochhammer_coeff(a2, y, m));
    }
    return p1 * p2.inverse();
}

}  // namespace zq::formal
