#include "zq/coeff/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace zq::coeff {

namespace {

constexpr std::size_t kKroneckerThreshold = 40;

std::vector<BigInt> multiply_schoolbook(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

BigInt pack(const std::vector<BigInt>& c, mp_bitcnt_t bits) {
    BigInt x = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
        x += *it;
    }
    return x;
}

// Kronecker substitution: evaluate both at 2^bits, multiply once, then read
// back balanced digits.
std::vector<BigInt> multiply_kronecker(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    BigInt ma = 0, mb = 0;
    for (const auto& x : a) ma = std::max<BigInt>(ma, abs(x));
    for (const auto& x : b) mb = std::max<BigInt>(mb, abs(x));
    BigInt bound = ma * mb * static_cast<unsigned long>(std::min(a.size(), b.size()));
    const mp_bitcnt_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 2;
    BigInt p = pack(a, bits) * pack(b, bits);
    const std::size_t n = a.size() + b.size() - 1;
    std::vector<BigInt> out(n);
    BigInt half = 1, full = 1;
    mpz_mul_2exp(half.get_mpz_t(), half.get_mpz_t(), bits - 1);
    mpz_mul_2exp(full.get_mpz_t(), full.get_mpz_t(), bits);
    BigInt r;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_fdiv_r_2exp(r.get_mpz_t(), p.get_mpz_t(), bits);
        if (r >= half) r -= full;
        p -= r;
        mpz_fdiv_q_2exp(p.get_mpz_t(), p.get_mpz_t(), bits);
        out[i] = r;
    }
    return out;
}

LaurentPoly primitive_part(const LaurentPoly& p) {
    LaurentPoly out = p;
    if (out.is_zero()) return out;
    BigInt c = out.content();
    if (out.leading() < 0) c = -c;
    out.divide_exact(c);
    return out;
}

// pseudo-remainder of a by b, both ordinary polynomials
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b) {
    const int db = b.high();
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.high() >= db) {
        const int shift = a.high() - db;
        BigInt la = a.leading();
        a *= lb;
        a -= LaurentPoly::monomial(la, shift) * b;
    }
    return a;
}

LaurentPoly gcd_prs(LaurentPoly a, LaurentPoly b) {
    if (a.high() < b.high()) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return primitive_part(a);
}

LaurentPoly interpolate_balanced(BigInt g, const BigInt& xi) {
    std::vector<BigInt> coeffs;
    BigInt half = xi / 2;
    BigInt r;
    while (g != 0) {
        mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
        if (r > half) r -= xi;
        coeffs.push_back(r);
        g -= r;
        mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    }
    return LaurentPoly::from_coefficients(0, std::move(coeffs));
}

}  // namespace

LaurentPoly::LaurentPoly(const BigInt& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
    LaurentPoly p;
    if (c != 0) {
        p.low_ = exponent;
        p.coeffs_.push_back(c);
    }
    return p;
}

LaurentPoly LaurentPoly::from_coefficients(int low, std::vector<BigInt> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void LaurentPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
}

BigInt LaurentPoly::coefficient(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::shifted(int by) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += by;
    return p;
}

BigInt LaurentPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

BigInt LaurentPoly::max_abs() const {
    BigInt m = 0;
    for (const auto& c : coeffs_) {
        if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
    }
    return m;
}

BigInt LaurentPoly::sum_of_coefficients() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

BigInt LaurentPoly::evaluate(const BigInt& x) const {
    if (is_zero()) return 0;
    if (low_ < 0) throw std::invalid_argument("evaluate: negative exponent");
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    for (int i = 0; i < low_; ++i) acc *= x;
    return acc;
}

void LaurentPoly::divide_exact(const BigInt& d) {
    for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

void LaurentPoly::negate() {
    for (auto& c : coeffs_) c = -c;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    p.negate();
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    if (lo < low_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), BigInt(0));
        low_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    return *this += -o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly p;
    p.low_ = a.low_ + b.low_;
    if (std::min(a.coeffs_.size(), b.coeffs_.size()) < kKroneckerThreshold) {
        p.coeffs_ = multiply_schoolbook(a.coeffs_, b.coeffs_);
    } else {
        p.coeffs_ = multiply_kronecker(a.coeffs_, b.coeffs_);
    }
    p.trim();
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    return *this = *this * o;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& c) {
    if (c == 0) {
        coeffs_.clear();
        low_ = 0;
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return low_ == o.low_ && coeffs_ == o.coeffs_;
}

std::string LaurentPoly::to_string(const std::string& var, int exponent_denominator) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = high(); e >= low_; --e) {
        BigInt c = coeffs_[static_cast<std::size_t>(e - low_)];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << '*';
        os << var;
        int num = e, den = exponent_denominator;
        if (num % den == 0) {
            num /= den;
            den = 1;
        }
        if (den == 1) {
            if (num != 1) os << '^' << num;
        } else {
            os << "^(" << num << '/' << den << ')';
        }
    }
    return os.str();
}

bool divide_exact(const LaurentPoly& dividend, const LaurentPoly& divisor, LaurentPoly& quotient) {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (dividend.is_zero()) {
        quotient = {};
        return true;
    }
    if (dividend.span() < divisor.span()) return false;
    const int dl = dividend.low(), vl = divisor.low();
    std::vector<BigInt> rem(dividend.coefficients());
    const auto& dv = divisor.coefficients();
    const std::size_t n = rem.size(), m = dv.size();
    std::vector<BigInt> q(n - m + 1);
    const BigInt& lead = dv.back();
    BigInt r;
    for (std::size_t step = n - m + 1; step-- > 0;) {
        BigInt& top = rem[step + m - 1];
        if (top == 0) continue;
        mpz_tdiv_qr(q[step].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return false;
        for (std::size_t j = 0; j < m; ++j) {
            mpz_submul(rem[step + j].get_mpz_t(), q[step].get_mpz_t(), dv[j].get_mpz_t());
        }
    }
    for (std::size_t j = 0; j + 1 < m; ++j) {
        if (rem[j] != 0) return false;
    }
    quotient = LaurentPoly::from_coefficients(dl - vl, std::move(q));
    return true;
}

LaurentPoly gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
    if (a0.is_zero()) return primitive_part(b0) * b0.content();
    if (b0.is_zero()) return primitive_part(a0) * a0.content();
    if (a0.low() < 0 || b0.low() < 0) throw std::invalid_argument("gcd: negative exponent");
    BigInt ca = a0.content(), cb = b0.content();
    BigInt c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    LaurentPoly a = primitive_part(a0), b = primitive_part(b0);
    // common power of the variable
    const int shift = std::min(a.low(), b.low());
    a = a.shifted(-a.low());
    b = b.shifted(-b.low());
    auto finish = [&](LaurentPoly g) { return g.shifted(shift) * c; };
    if (a.high() == 0 || b.high() == 0) return finish(LaurentPoly(BigInt(1)));
    if (a == b) return finish(a);
    LaurentPoly quotient;
    if (a.high() <= b.high() && divide_exact(b, a, quotient)) return finish(a);
    if (b.high() < a.high() && divide_exact(a, b, quotient)) return finish(b);

    // heuristic gcd: evaluate at a large point, take the integer gcd and
    // interpolate; accept only if the candidate divides both inputs
    BigInt xi = 2 * std::min(a.max_abs(), b.max_abs()) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        BigInt va = a.evaluate(xi), vb = b.evaluate(xi);
        if (va != 0 && vb != 0) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
            LaurentPoly cand = primitive_part(interpolate_balanced(g, xi));
            if (!cand.is_zero() && cand.low() == 0 && divide_exact(a, cand, quotient) &&
                divide_exact(b, cand, quotient)) {
                return finish(cand);
            }
        }
        xi = xi * 73794 / 27011 + 1;
    }
    return finish(gcd_prs(a, b));
}

int root_multiplicity_at_one(const LaurentPoly& p0) {
    if (p0.is_zero()) throw std::invalid_argument("root multiplicity of zero polynomial");
    LaurentPoly p = p0;
    int mult = 0;
    while (p.sum_of_coefficients() == 0) {
        // synthetic division by (x - 1)
        const auto& c = p.coefficients();
        std::vector<BigInt> q(c.size() - 1);
        BigInt acc = 0;
        for (std::size_t i = c.size(); i-- > 1;) {
            acc += c[i];
            q[i - 1] = acc;
        }
        p = LaurentPoly::from_coefficients(p.low(), std::move(q));
        ++mult;
    }
    return mult;
}

}  // namespace zq::coeff
