#include "doctest.h"
#include "oracles.hpp"

#include "zq/coeff/qfunctions.hpp"
#include "zq/formal/distribution.hpp"
#include "zq/formal/series.hpp"

#include <random>

using namespace zq::formal;
using zq::coeff::BigInt;
using zq::coeff::LaurentPoly;

namespace {

Scalar q(int e) { return Scalar::q_power(e); }

Series random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> c(-3, 3), e(-4, 4);
    Series s("u", 0, order);
    for (int n = 0; n <= order; ++n) s.set(n, Scalar(c(rng)) * q(e(rng)) + Scalar(c(rng)) / (Scalar(1) - q(e(rng) | 1)));
    return s;
}

// coefficients of u^0..u^order of prod_{n<count} (1 - a y^n u) as s-polynomials
std::vector<LaurentPoly> partial_product(int a_twice, int y_twice, int count, int order) {
    std::vector<int> exps;
    for (int n = 0; n < count; ++n) exps.push_back(a_twice + n * y_twice);
    std::vector<LaurentPoly> out;
    for (int m = 0; m <= order; ++m) {
        LaurentPoly e = oracle::elementary_symmetric(exps, m);
        out.push_back(m % 2 ? -e : e);
    }
    return out;
}

}  // namespace

TEST_CASE("delta distribution") {
    auto d0 = delta(QPower::of(0), Window2::square(6));
    CHECK(d0.coefficient(5, -5).is_one());
    CHECK(d0.coefficient(5, -4).is_zero());
    auto d2 = delta(QPower::of(2), Window2::square(3));
    CHECK(d2.coefficient(1, -1) == q(2));
    for (int n = -3; n <= 3; ++n) {
        CHECK(d0.coefficient(n, -n) == d0.coefficient(-n, n));
        CHECK(d2.coefficient(-n, n) == q(2).pow(-n));
    }
    auto [pos, neg] = delta_halves(QPower::of(1), 5);
    for (int n = 0; n <= 3; ++n) {
        CHECK(pos.coefficient(n) == d2.coefficient(n, -n).pow(1) * q(-n));
        if (n > 0) CHECK(neg.coefficient(n) == q(-n));
    }
}

TEST_CASE("delta substitution") {
    Distribution2 g({-3, 3, -3, 3}, false, false);
    g.set(1, 0, Scalar(1));
    g.set(0, 1, Scalar(1));
    auto w = delta_substitute(g, QPower::of(0), Window2::square(3));
    CHECK(w.passed);
    bool found = false;
    for (const auto& e : w.entries) {
        if (e.n == 1 && e.m == 0) {
            CHECK(e.product == Scalar(2));
            CHECK(e.substituted_w == Scalar(2));
            found = true;
        }
    }
    CHECK(found);

    Distribution2 h({-3, 3, -3, 3}, false, true);
    h.set(2, -1, q(3));
    h.set(0, 2, Scalar(-2) / (Scalar(1) - q(2)));
    h.set(-1, -1, Scalar(5));
    CHECK(delta_substitute(h, QPower::half(-3), Window2::square(3)).passed);

    Distribution2 bad(Window2::square(2), true, true);
    CHECK_THROWS(delta_substitute(bad, QPower::of(1), Window2::square(2)));
}

TEST_CASE("g series") {
    Series g = g_series(false, 7);
    CHECK(g.coefficient(0) == q(-2));
    CHECK(g.coefficient(1) == q(-4) - Scalar(1));
    // closed form of the Taylor coefficients: q^{-2n-2} - q^{-2n+2}, n >= 1
    for (int n = 1; n <= 7; ++n) CHECK(g.coefficient(n) == q(-2 * n - 2) - q(-2 * n + 2));
    Series gi = g_series(true, 7);
    CHECK(agrees((g * gi).truncated(5), Series::constant("z", Scalar(1), 5)));
    // g(z^{-1}) lives in another variable and has other coefficients
    Series g_reflected = g_series(false, 5, "1/z");
    CHECK(g_reflected.variable() == "1/z");
    CHECK(g_reflected.coefficient(1) != gi.coefficient(1));
}

TEST_CASE("series algebra") {
    std::mt19937 rng(3);
    for (int t = 0; t < 5; ++t) {
        Series a = random_series(rng, 6), b = random_series(rng, 6), c = random_series(rng, 6);
        CHECK(agrees((a * b) * c, a * (b * c)));
        CHECK(agrees(a * b, b * a));
        CHECK(agrees(a * (b + c), a * b + a * c));
    }
    Series x("u", 1, 6);
    x.set(1, Scalar(1));
    // exp(u) coefficients 1/n!
    Series ex = x.exp();
    Scalar fact(1);
    for (int n = 0; n <= 6; ++n) {
        if (n > 0) fact *= Scalar(n);
        CHECK(ex.coefficient(n) == Scalar(1) / fact);
    }
    CHECK_THROWS_AS(ex.coefficient(7), WindowError);
    CHECK_THROWS(Series("u", 0, 3).set(5, Scalar(1)));
    CHECK_THROWS(Series("u", 0, 3) * Series("v", 0, 3));
}

TEST_CASE("Euler product ratios") {
    for (int order = 0; order <= 5; ++order) {
        auto r = euler_ratio(QPower::of(2), QPower::of(2), QPower::of(4), order);
        CHECK(agrees(r, Series::constant("u", Scalar(1), order)));
    }
    CHECK(euler_ratio(QPower::of(-1), QPower::of(3), QPower::of(2), 0).coefficient(0).is_one());
    CHECK_THROWS(euler_ratio(QPower::of(1), QPower::of(1), QPower::of(2), -1));

    // k = 1: (q^{-1} u; q^2) / (q^3 u; q^2); ratio times 8 denominator factors
    // must equal 8 numerator factors below the first dropped factor's q-order
    const int k = 1, order = 2;
    auto r = euler_ratio(QPower::of(k - 2), QPower::of(k + 2), QPower::of(2 * k), order);
    auto num = partial_product(2 * (k - 2), 4 * k, 8, order);
    auto den = partial_product(2 * (k + 2), 4 * k, 8, order);
    const int bound_s = 2 * (8 * 2 * k + order * (k - 2));
    for (int m = 0; m <= order; ++m) {
        Scalar lhs;
        for (int j = 0; j <= m; ++j) lhs += r.coefficient(j) * Scalar::fraction(den[static_cast<std::size_t>(m - j)], LaurentPoly(BigInt(1)));
        CHECK(oracle::expand_in_s(lhs, bound_s) == oracle::truncate_terms(num[static_cast<std::size_t>(m)], bound_s));
    }

    for (int kk = 1; kk <= 3; ++kk) {
        auto a = euler_ratio(QPower::of(kk - 2), QPower::of(kk + 2), QPower::of(2 * kk), 6);
        auto b = euler_ratio(QPower::of(kk + 2), QPower::of(kk - 2), QPower::of(2 * kk), 6);
        CHECK(agrees(a * b, Series::constant("u", Scalar(1), 6)));
    }
}
