#include "doctest.h"

#include "zq/coeff/qfunctions.hpp"
#include "zq/formal/series.hpp"
#include "zq/vertex/currents.hpp"

#include <functional>

using namespace zq::fock;
using namespace zq::vertex;
using zq::coeff::QPower;

namespace {

Scalar q(int e) { return Scalar::q_power(e); }
Scalar qh(int twice) { return Scalar::q_power(QPower::half(twice)); }

ModuleVector single(const TensorState& s) { return ModuleVector{{s, Scalar(1)}}; }

TensorState k1_state(Partition p, int twice_charge) { return TensorState{std::move(p), std::nullopt, {twice_charge}}; }

// u^p coefficient of exp(sum_m c(m) b(dir*m) u^m) v by summing A^j/j! term by term
ModuleVector brute_exponential(int k, int dir, const std::function<Scalar(int)>& c, int p, const ModuleVector& v) {
    // powers[j][d] = u^d coefficient of A^j v
    std::vector<std::vector<ModuleVector>> powers(static_cast<std::size_t>(p + 1),
                                                  std::vector<ModuleVector>(static_cast<std::size_t>(p + 1)));
    powers[0][0] = v;
    ModuleVector out = v;
    if (p > 0) out.clear();
    Scalar factorial(1);
    for (int j = 1; j <= p; ++j) {
        factorial *= Scalar(j);
        for (int d = 1; d <= p; ++d) {
            ModuleVector acc;
            for (int m = 1; m <= d; ++m) {
                const auto& prev = powers[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(d - m)];
                if (prev.empty()) continue;
                add_scaled(acc, heis_act(dir * m, k, prev), c(m));
            }
            powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] = acc;
        }
        add_scaled(out, powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)], factorial.inverse());
    }
    return out;
}

// (q^{2n} - q^{-2n}) / n
Scalar heis_ratio(int n) { return (q(2 * n) - q(-2 * n)) / Scalar(n); }

}  // namespace

TEST_CASE("S-operator modes agree with the brute-force exponential") {
    for (int k = 1; k <= 3; ++k) {
        VertexOperators ops(k, 12);
        for (int sign : {1, -1}) {
            for (int eps : {1, -1}) {
                auto c = [&](int m) { return s_exponent_coefficient(sign, eps, k, m); };
                for (const auto& s : slice_basis(Realization::k1, {-4, 0}, {0, 0})) {
                    for (int n = 0; n <= 4; ++n) {
                        CHECK(ops.s_mode(sign, eps, n, s) == brute_exponential(k, sign, c, n, single(s)));
                    }
                }
            }
        }
    }
}

TEST_CASE("S-operator mode examples") {
    const TensorState vac = k1_state({}, 0);
    CHECK(s_operator_mode(1, 1, 1, 0, single(vac)) == single(vac));
    for (int n = 1; n <= 4; ++n) CHECK(s_operator_mode(1, 1, 1, n, single(vac)).empty());
    const ModuleVector first = s_operator_mode(-1, 1, 1, 1, single(vac));
    CHECK(first == ModuleVector{{k1_state({{1}}, 0), -qh(-1) / (q(1) - q(-1))}});
    CHECK_THROWS_AS(s_operator_mode(1, 1, 1, -1, single(vac)), std::invalid_argument);
    CHECK_THROWS_AS(s_operator_mode(1, 2, 1, 0, single(vac)), std::invalid_argument);
}

TEST_CASE("Heisenberg modes commute with S through a scalar shift") {
    // [b(-n), S^+_{eps,p}] = -eps q^{-eps n k/2} (q^{2n}-q^{-2n})/n S^+_{eps,p-n}, and likewise [b(n), S^-_{eps,p}]
    for (int k = 1; k <= 2; ++k) {
        VertexOperators ops(k, 12);
        for (int eps : {1, -1}) {
            for (const auto& s : slice_basis(Realization::k1, {-3, 0}, {0, 0})) {
                for (int n = 1; n <= 3; ++n) {
                    for (int p = 0; p <= 5; ++p) {
                        const Scalar coef = -eps * qh(-eps * n * k) * heis_ratio(n);
                        for (int sign : {1, -1}) {
                            auto S = [&](int mode, const ModuleVector& v) {
                                return apply_linear([&](const TensorState& t) { return ops.s_mode(sign, eps, mode, t); },
                                                    v);
                            };
                            const int b = -sign * n;
                            ModuleVector lhs = difference(heis_act(b, k, S(p, single(s))), S(p, heis_act(b, k, s)));
                            ModuleVector rhs = p >= n ? scaled(S(p - n, single(s)), coef) : ModuleVector{};
                            CHECK(lhs == rhs);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("inverse S-operators compose to the identity") {
    for (int k = 1; k <= 2; ++k) {
        VertexOperators ops(k, 12);
        for (int sign : {1, -1}) {
            for (int eps : {1, -1}) {
                for (const auto& s : slice_basis(Realization::k1, {-3, 0}, {0, 0})) {
                    for (int n = 0; n <= 4; ++n) {
                        ModuleVector acc;
                        ModuleVector rescaled;
                        for (int j = 0; j <= n; ++j) {
                            for (const auto& [t, c] : ops.s_mode(sign, eps, j, s)) {
                                add_scaled(acc, ops.s_inverse_mode(sign, eps, n - j, t), c);
                                add_scaled(rescaled, ops.s_mode_rescaled(sign, -eps, n - j, 2 * sign * eps * k, t), c);
                            }
                        }
                        CHECK(acc == (n == 0 ? single(s) : ModuleVector{}));
                        CHECK(rescaled == acc);
                    }
                }
            }
        }
    }
}

TEST_CASE("contraction series matches the infinite-product ratio") {
    for (int k = 1; k <= 3; ++k) {
        for (int e : {1, -1}) {
            for (int ep : {1, -1}) {
                const int order = 5;
                auto lhs = exponent_commutator(1, e, -1, ep, k, order).exp();
                const int c2 = (e + ep) * k;  // 2 * (eps + eps') k / 2
                QPower a1 = QPower::half(2 * k - 4 - c2), a2 = QPower::half(2 * k + 4 - c2);
                if (e * ep < 0) std::swap(a1, a2);
                auto rhs = zq::formal::euler_ratio(a1, a2, QPower::of(2 * k), order, "w/z");
                CHECK(agrees(lhs, rhs));
                CHECK(exponent_commutator(1, e, 1, ep, k, order).terms().empty());
                CHECK(exponent_commutator(-1, e, -1, ep, k, order).terms().empty());
            }
        }
    }
}

TEST_CASE("X modes on the k=1 vacuum") {
    const CurrentAlgebra& a = current_algebra(Realization::k1);
    const TensorState vac = k1_state({}, 0);
    CHECK(a.x_mode(1, -1, vac) == single(k1_state({}, 2)));
    CHECK(a.x_mode(-1, -1, vac) == single(k1_state({}, -2)));
    for (int n = 0; n <= 3; ++n) CHECK(a.x_mode(1, n, vac).empty());
    // X(+|-2) vac: the first E^- mode, coefficient q^{-1/2}/(q - q^{-1})
    CHECK(a.x_mode(1, -2, vac) == ModuleVector{{k1_state({{1}}, 2), qh(-1) / (q(1) - q(-1))}});
}

TEST_CASE("X modes through both factorizations agree") {
    for (Realization r : {Realization::k1, Realization::k2_ns, Realization::k2_r}) {
        const CurrentAlgebra& a = current_algebra(r);
        const Rational lo = r == Realization::k2_r ? Rational(-1, 2) : Rational(-1);
        for (const auto& s : slice_basis(r, {-3, 0}, {lo, -lo})) {
            for (int eps : {1, -1}) {
                for (int n = -3; n <= 3; ++n) {
                    CHECK(a.x_mode(eps, n, s) == a.x_mode_factorized(eps, n, s));
                }
            }
        }
    }
}

TEST_CASE("Heisenberg modes shift X modes") {
    // [b(n), X(eps|p)] = eps q^{-eps|n|k/2} (q^{2n}-q^{-2n})/n X(eps|p+n)
    for (Realization r : {Realization::k1, Realization::k2_ns}) {
        const CurrentAlgebra& a = current_algebra(r);
        const int k = a.level();
        for (const auto& s : slice_basis(r, {-2, 0}, {-1, 1})) {
            for (int eps : {1, -1}) {
                for (int n : {-2, -1, 1, 2}) {
                    for (int p = -2; p <= 2; ++p) {
                        ModuleVector lhs = difference(heis_act(n, k, a.x_mode(eps, p, s)), a.x_mode(eps, p, heis_act(n, k, s)));
                        ModuleVector rhs = scaled(a.x_mode(eps, p + n, s), eps * qh(-eps * std::abs(n) * k) * heis_ratio(n));
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("zero modes of Psi and Phi") {
    const CurrentAlgebra& a = current_algebra(Realization::k1);
    for (int h = -4; h <= 4; h += 2) {
        const TensorState s = k1_state({{2, 1}}, h);
        CHECK(a.psi_mode(0, s) == ModuleVector{{s, q(h)}});
        CHECK(a.phi_mode(0, s) == ModuleVector{{s, q(-h)}});
    }
    const TensorState vac = k1_state({}, 0);
    for (int n = 1; n <= 3; ++n) CHECK(a.psi_mode(n, vac).empty());
    CHECK_THROWS_AS(a.psi_mode(-1, vac), std::invalid_argument);
    CHECK_THROWS_AS(a.phi_mode(1, vac), std::invalid_argument);
}

TEST_CASE("Psi zero mode conjugates X by q^{2 eps}") {
    for (Realization r : {Realization::k1, Realization::k2_ns, Realization::k2_r}) {
        const CurrentAlgebra& a = current_algebra(r);
        for (const auto& s : slice_basis(r, {-2, 0}, {-1, 1})) {
            for (int eps : {1, -1}) {
                for (int n = -2; n <= 2; ++n) {
                    ModuleVector lhs = a.psi_mode(0, a.x_mode(eps, n, a.phi_mode(0, single(s))));
                    CHECK(lhs == scaled(a.x_mode(eps, n, s), q(2 * eps)));
                }
            }
        }
    }
}

TEST_CASE("declared grading of the k=2 currents") {
    for (Realization r : {Realization::k2_ns, Realization::k2_r}) {
        const CurrentAlgebra& a = current_algebra(r);
        for (const auto& s : slice_basis(r, {-2, 0}, {-1, 1})) {
            for (int eps : {1, -1}) {
                for (int n = -3; n <= 2; ++n) {
                    const OperatorMode x = a.x(eps, n);
                    for (const auto& [t, c] : x(single(s))) {
                        CHECK(t.lattice.twice_charge == s.lattice.twice_charge + x.twice_charge_shift);
                        CHECK(degree(2, t) == degree(2, s) + Rational(x.degree_shift));
                    }
                }
            }
        }
    }
}

TEST_CASE("states outside the realization are rejected") {
    const TensorState integral{{}, CliffordWord{Sector::R, {}, Spin::plus}, {0}};
    CHECK_THROWS_AS(current_algebra(Realization::k2_r).x_mode(1, 0, integral), std::invalid_argument);
    CHECK_THROWS_AS(current_algebra(Realization::k2_ns).x_mode(1, 0, k1_state({}, 0)), std::invalid_argument);
    CHECK_THROWS_AS(current_algebra(Realization::k1).psi_mode(0, TensorState{{}, CliffordWord{}, {0}}),
                    std::invalid_argument);
}
