#include "internal.hpp"

#include "zq/formal/distribution.hpp"
#include "zq/formal/series.hpp"

#include <cstdlib>

namespace zq::verify::detail {

namespace {

std::string id(const TensorState& s) { return fock::to_string(s); }

ModeOp psi_op(const Realized& ctx) {
    return [&ctx](int twice, const ModuleVector& v) { return ctx.psi(twice / 2, v); };
}

ModeOp phi_op(const Realized& ctx) {
    return [&ctx](int twice, const ModuleVector& v) { return ctx.phi(twice / 2, v); };
}

// [z^{-a} w^{-b}] delta(c z/w) C(d x) v, with x = w or x = z; built from the
// stored delta distribution and the mode expansion C(x) = sum C_m x^{-m}
ModuleVector delta_times_current(QPower c, QPower d, bool on_w, int a, int b, const ModeOp& C, const ModuleVector& v) {
    const int r = std::abs(a) + std::abs(b) + 1;
    const formal::Distribution2 del = formal::delta(c, formal::Window2::square(r));
    ModuleVector out;
    for (const auto& [e, coef] : del.terms()) {
        const auto [i, j] = e;  // z^i w^j
        int m;
        if (on_w) {
            if (-a - i != 0) continue;
            m = b + j;
        } else {
            if (-b - j != 0) continue;
            m = a + i;
        }
        fock::add_scaled(out, C(2 * m, v), coef * Scalar::q_power(d.pow(-m)));
    }
    return out;
}

// coefficient series of g(c u)^{power}, power = +-1
formal::Series g_power(int power, QPower c, int order) {
    return formal::g_series(power < 0, order, "u").scaled_argument(c);
}

std::vector<Job> gamma_central(const Realized& ctx) {
    std::vector<Job> jobs;
    const Scalar gamma = qp(ctx.k), half = qh(ctx.k);
    const int w = ctx.w;
    for (const auto& s : ctx.vectors) {
        for (int n = -w; n <= w; ++n) {
            for (int eps : {1, -1}) {
                jobs.push_back([&ctx, s, n, eps, gamma] {
                    const ModuleVector v = unit(s);
                    return compare(json::array({"x", eps, n}), id(s), fock::scaled(ctx.x(eps, n, v), gamma),
                                   ctx.x(eps, n, fock::scaled(v, gamma)));
                });
            }
            jobs.push_back([&ctx, s, n, half] {
                const ModuleVector v = unit(s);
                const ModuleVector m = n >= 0 ? ctx.psi(n, v) : ctx.phi(n, v);
                const ModuleVector mv = n >= 0 ? ctx.psi(n, fock::scaled(v, half)) : ctx.phi(n, fock::scaled(v, half));
                return compare(json::array({n >= 0 ? "psi" : "phi", 0, n}), id(s), fock::scaled(m, half), mv);
            });
        }
    }
    return jobs;
}

std::vector<Job> commuting_zero(const Realized& ctx, bool psi) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (const auto& s : ctx.vectors) {
        for (int a = 0; a <= w; ++a) {
            for (int b = 0; b <= w; ++b) {
                jobs.push_back([&ctx, s, a, b, psi] {
                    const ModuleVector v = unit(s);
                    const int sa = psi ? a : -a, sb = psi ? b : -b;
                    auto op = [&](int n, const ModuleVector& x) { return psi ? ctx.psi(n, x) : ctx.phi(n, x); };
                    return compare(json::array({sa, sb}), id(s), op(sa, op(sb, v)), op(sb, op(sa, v)));
                });
            }
        }
    }
    return jobs;
}

// Psi(z) Phi(w) = g(u gamma) g(u gamma^{-1})^{-1} Phi(w) Psi(z), u = w/z
std::vector<Job> psi_phi(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    auto pref = std::make_shared<formal::Series>(g_power(1, QPower::of(ctx.k), w) * g_power(-1, QPower::of(-ctx.k), w));
    for (const auto& s : ctx.vectors) {
        for (int a = 0; a <= w; ++a) {
            for (int b = -w; b <= 0; ++b) {
                jobs.push_back([&ctx, s, a, b, pref] {
                    const ModuleVector v = unit(s);
                    ModuleVector rhs;
                    for (int j = 0; j <= std::min(a, -b); ++j) {
                        fock::add_scaled(rhs, ctx.phi(b + j, ctx.psi(a - j, v)), pref->coefficient(j));
                    }
                    return compare(json::array({a, b}), id(s), ctx.psi(a, ctx.phi(b, v)), rhs);
                });
            }
        }
    }
    return jobs;
}

// Psi(z) x(w) = g(u gamma^{-eps/2})^{-eps} x(w) Psi(z), u = w/z, and
// Phi(z) x(w) = g(u gamma^{-eps/2})^{eps} x(w) Phi(z), u = z/w
std::vector<Job> zero_current_x(const Realized& ctx, bool psi) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int eps : {1, -1}) {
        auto pref = std::make_shared<formal::Series>(g_power(psi ? -eps : eps, QPower::half(-eps * ctx.k), w));
        for (const auto& s : ctx.vectors) {
            for (int a = 0; a <= w; ++a) {
                for (int b = -w; b <= w; ++b) {
                    jobs.push_back([&ctx, s, a, b, eps, psi, pref] {
                        const ModuleVector v = unit(s);
                        ModuleVector lhs, rhs;
                        if (psi) {
                            lhs = ctx.psi(a, ctx.x(eps, b, v));
                            for (int j = 0; j <= a; ++j) fock::add_scaled(rhs, ctx.x(eps, b + j, ctx.psi(a - j, v)), pref->coefficient(j));
                        } else {
                            lhs = ctx.phi(-a, ctx.x(eps, b, v));
                            for (int j = 0; j <= a; ++j) fock::add_scaled(rhs, ctx.x(eps, b - j, ctx.phi(-a + j, v)), pref->coefficient(j));
                        }
                        return compare(json::array({eps, psi ? a : -a, b}), id(s), lhs, rhs);
                    });
                }
            }
        }
    }
    return jobs;
}

// [x^eps(z), x^{-eps}(w)] = eps (delta(z/w gamma^{-eps}) Psi(w gamma^{eps/2}) - delta(z/w gamma^eps) Phi(z gamma^{eps/2})) / (q - q^{-1})
std::vector<Job> x_commutator(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w, k = ctx.k;
    for (int eps : {1, -1}) {
        for (const auto& s : ctx.vectors) {
            for (int a = -w; a <= w; ++a) {
                for (int b = -w; b <= w; ++b) {
                    jobs.push_back([&ctx, s, a, b, eps, k] {
                        const ModuleVector v = unit(s);
                        const ModuleVector lhs = fock::difference(ctx.x(eps, a, ctx.x(-eps, b, v)), ctx.x(-eps, b, ctx.x(eps, a, v)));
                        ModuleVector rhs = delta_times_current(QPower::of(-eps * k), QPower::half(eps * k), true, a, b, psi_op(ctx), v);
                        rhs = fock::difference(rhs, delta_times_current(QPower::of(eps * k), QPower::half(eps * k), false, a, b, phi_op(ctx), v));
                        return compare(json::array({eps, a, b}), id(s), lhs, fock::scaled(rhs, Scalar(eps) * inverse_q_gap()));
                    });
                }
            }
        }
    }
    return jobs;
}

// the same bracket as the closed mode formula with gamma^{(n-m)/2}
std::vector<Job> x_commutator_modes(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w, k = ctx.k;
    for (const auto& s : ctx.vectors) {
        for (int n = -w; n <= w; ++n) {
            for (int m = -w; m <= w; ++m) {
                jobs.push_back([&ctx, s, n, m, k] {
                    const ModuleVector v = unit(s);
                    const ModuleVector lhs = fock::difference(ctx.x(1, n, ctx.x(-1, m, v)), ctx.x(-1, m, ctx.x(1, n, v)));
                    ModuleVector rhs = fock::scaled(ctx.psi(n + m, v), qh(k * (n - m)));
                    rhs = fock::difference(rhs, fock::scaled(ctx.phi(n + m, v), qh(k * (m - n))));
                    return compare(json::array({n, m}), id(s), lhs, fock::scaled(rhs, inverse_q_gap()));
                });
            }
        }
    }
    return jobs;
}

// (z - w q^{2 eps}) x(z) x(w) = (z q^{2 eps} - w) x(w) x(z)
std::vector<Job> x_exchange(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int eps : {1, -1}) {
        const Poly2 left{{{1, 0}, Scalar(1)}, {{0, 1}, -qp(2 * eps)}};
        const Poly2 right{{{1, 0}, qp(2 * eps)}, {{0, 1}, Scalar(-1)}};
        for (const auto& s : ctx.vectors) {
            for (int a = -w; a <= w; ++a) {
                for (int b = -w; b <= w; ++b) {
                    jobs.push_back([&ctx, s, a, b, eps, left, right] {
                        const ModuleVector v = unit(s);
                        ModeOp X = [&ctx, eps](int t, const ModuleVector& x) { return ctx.x(eps, t / 2, x); };
                        return compare(json::array({eps, a, b}), id(s), poly_product(left, 2 * a, 2 * b, X, X, false, v),
                                       poly_product(right, 2 * a, 2 * b, X, X, true, v));
                    });
                }
            }
        }
    }
    return jobs;
}

// x_{n+1} x_m - q^{2 eps} x_m x_{n+1} = q^{2 eps} x_n x_{m+1} - x_{m+1} x_n
std::vector<Job> x_exchange_modes(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int eps : {1, -1}) {
        for (const auto& s : ctx.vectors) {
            for (int n = -w; n <= w; ++n) {
                for (int m = -w; m <= w; ++m) {
                    jobs.push_back([&ctx, s, n, m, eps] {
                        const ModuleVector v = unit(s);
                        const Scalar q2 = qp(2 * eps);
                        auto xx = [&](int i, int j) { return ctx.x(eps, i, ctx.x(eps, j, v)); };
                        ModuleVector lhs = fock::difference(xx(n + 1, m), fock::scaled(xx(m, n + 1), q2));
                        ModuleVector rhs = fock::difference(fock::scaled(xx(n, m + 1), q2), xx(m + 1, n));
                        return compare(json::array({eps, n, m}), id(s), lhs, rhs);
                    });
                }
            }
        }
    }
    return jobs;
}

// q^d A_n q^{-d} = q^n A_n for A = x^eps, Psi or Phi
std::vector<Job> grading(const Realized& ctx, const std::string& which) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    const int lo = which == "psi" ? 0 : -w, hi = which == "phi" ? 0 : w;
    const std::vector<int> signs = which == "x" ? std::vector<int>{1, -1} : std::vector<int>{0};
    for (int eps : signs) {
        for (const auto& s : ctx.vectors) {
            for (int n = lo; n <= hi; ++n) {
                jobs.push_back([&ctx, s, n, eps, which] {
                    const ModuleVector v = unit(s);
                    const ModuleVector out = which == "x" ? ctx.x(eps, n, v) : which == "psi" ? ctx.psi(n, v) : ctx.phi(n, v);
                    return compare(json::array({eps, n}), id(s), conjugate_by_degree(ctx, out, ctx.degree(s)), fock::scaled(out, qp(n)));
                });
            }
        }
    }
    return jobs;
}

}  // namespace

std::vector<Job> drinfeld_jobs(const Realized& ctx) {
    const std::string& rel = ctx.spec.relation;
    if (rel == "eq1") return gamma_central(ctx);
    if (rel == "eq2") return commuting_zero(ctx, true);
    if (rel == "eq3") return commuting_zero(ctx, false);
    if (rel == "eq4") return psi_phi(ctx);
    if (rel == "eq5") return zero_current_x(ctx, true);
    if (rel == "eq6") return zero_current_x(ctx, false);
    if (rel == "eq7") return x_commutator(ctx);
    if (rel == "eq8") return x_exchange(ctx);
    if (rel == "eq9") return grading(ctx, "x");
    if (rel == "eq10") return grading(ctx, "psi");
    if (rel == "eq11") return grading(ctx, "phi");
    if (rel == "Eq10") return x_commutator_modes(ctx);
    if (rel == "Eq11") return x_exchange_modes(ctx);
    throw UnsupportedRelation("not a current-algebra relation: " + rel);
}

}  // namespace zq::verify::detail
