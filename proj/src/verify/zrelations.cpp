#include "internal.hpp"

#include "zq/formal/distribution.hpp"
#include "zq/formal/series.hpp"

#include <memory>

namespace zq::verify::detail {

namespace {

std::string id(const TensorState& s) { return fock::to_string(s); }

// f(u) multiplying Z(eps|z) Z(-eps|w): 1/((1 - q^{-1}u)(1 - q u)) at k = 1, 1/(1 - u) at k = 2
formal::Series commutator_prefactor(int k, int order) {
    formal::Series den("u", 0, order);
    if (k == 1) {
        den.set(0, Scalar(1));
        if (order >= 1) den.set(1, -(qp(1) + qp(-1)));
        if (order >= 2) den.set(2, Scalar(1));
    } else {
        den.set(0, Scalar(1));
        if (order >= 1) den.set(1, Scalar(-1));
    }
    return den.inverse();
}

// f(w/z) Z(eps|z) Z(-eps|w) - f(z/w) Z(-eps|w) Z(eps|z) against both delta forms
std::vector<Job> z_commutator(const Realized& ctx) {
    if (ctx.spec.swapped_direction) {
        throw DirectionalClash(ctx.spec.relation +
                               ": f(w/z) expanded in z/w in front of Z(eps|z)Z(-eps|w) leaves the sum over "
                               "Z(-eps|b-j), j -> infinity, untruncated by annihilation");
    }
    std::vector<Job> jobs;
    const int w = ctx.w, k = ctx.k;
    const int order = w - ctx.spec.window.min_degree + 2;
    auto f = std::make_shared<formal::Series>(commutator_prefactor(k, order));
    const formal::Window2 win = formal::Window2::square(w);
    // deltas[e] = delta(z/w q^{e k})
    auto deltas = std::make_shared<std::map<int, formal::Distribution2>>();
    for (int e : {-1, 1}) deltas->emplace(e, formal::delta(QPower::of(e * k), win));
    for (int eps : {1, -1}) {
        for (const auto& s : ctx.vectors) {
            for (int a = -w; a <= w; ++a) {
                for (int b = -w; b <= w; ++b) {
                    for (int form : {1, 2}) {
                        jobs.push_back([&ctx, s, a, b, eps, form, f, deltas] {
                            const ModuleVector v = unit(s);
                            ModuleVector lhs;
                            for (int j = 0; j <= ctx.annihilation_bound(s, b); ++j) {
                                fock::add_scaled(lhs, ctx.z(eps, a - j, ctx.z(-eps, b + j, v)), f->coefficient(j));
                            }
                            for (int j = 0; j <= ctx.annihilation_bound(s, a); ++j) {
                                fock::add_scaled(lhs, ctx.z(-eps, b - j, ctx.z(eps, a + j, v)), -f->coefficient(j));
                            }
                            ModuleVector rhs;
                            if (form == 1) {
                                // eps (Psi_0 delta(z/w q^{-eps k}) - Phi_0 delta(z/w q^{eps k})) / (q - q^{-1})
                                const Scalar d1 = deltas->at(-eps).coefficient(-a, -b);
                                const Scalar d2 = deltas->at(eps).coefficient(-a, -b);
                                rhs = fock::difference(fock::scaled(ctx.psi(0, v), d1), fock::scaled(ctx.phi(0, v), d2));
                                rhs = fock::scaled(rhs, Scalar(eps) * inverse_q_gap());
                            } else {
                                // (q^{eps alpha(0)} delta(z/w q^{-k}) - q^{-eps alpha(0)} delta(z/w q^{k})) / (q - q^{-1})
                                const int h = s.lattice.alpha0();
                                const Scalar c = qp(eps * h) * deltas->at(-1).coefficient(-a, -b) -
                                                 qp(-eps * h) * deltas->at(1).coefficient(-a, -b);
                                rhs = fock::scaled(v, c * inverse_q_gap());
                            }
                            return compare(json::array({form, eps, a, b}), id(s), lhs, rhs);
                        });
                    }
                }
            }
        }
    }
    return jobs;
}

// k = 1: w^2 Z(z) Z(w) = z^2 Z(w) Z(z);
// k = 2: (z - w q^{2e})(1 - w/z q^{-2e}) Z(z) Z(w) = (z q^{2e} - w)(1 - z/w q^{-2e}) Z(w) Z(z)
std::vector<Job> z_exchange(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int eps : {1, -1}) {
        Poly2 left, right;
        if (ctx.k == 1) {
            left = Poly2{{{0, 2}, Scalar(1)}};
            right = Poly2{{{2, 0}, Scalar(1)}};
        } else {
            left = Poly2{{{1, 0}, Scalar(1)}, {{0, 1}, -qp(2 * eps)}} * Poly2{{{0, 0}, Scalar(1)}, {{-1, 1}, -qp(-2 * eps)}};
            right = Poly2{{{1, 0}, qp(2 * eps)}, {{0, 1}, Scalar(-1)}} * Poly2{{{0, 0}, Scalar(1)}, {{1, -1}, -qp(-2 * eps)}};
        }
        for (const auto& s : ctx.vectors) {
            for (int a = -w; a <= w; ++a) {
                for (int b = -w; b <= w; ++b) {
                    jobs.push_back([&ctx, s, a, b, eps, left, right] {
                        const ModuleVector v = unit(s);
                        ModeOp Z = [&ctx, eps](int t, const ModuleVector& x) { return ctx.z(eps, t / 2, x); };
                        return compare(json::array({eps, a, b}), id(s), poly_product(left, 2 * a, 2 * b, Z, Z, false, v),
                                       poly_product(right, 2 * a, 2 * b, Z, Z, true, v));
                    });
                }
            }
        }
    }
    return jobs;
}

// the Z modes obtained from the currents: S^-_eps(z) X(eps|z) S^+_eps(z)
ModuleVector z_from_currents(const Realized& ctx, int eps, int n, const TensorState& s) {
    const vertex::VertexOperators& ops = ctx.ca->vertex_operators();
    ModuleVector out;
    const int parts = s.fock.size();
    const int top = ctx.annihilation_bound(s, n);  // p' <= -deg(s) - n
    for (int p = 0; p <= parts; ++p) {
        const ModuleVector u = ops.s_mode(1, eps, p, s);
        if (u.empty()) continue;
        for (int pp = 0; pp <= top; ++pp) {
            // z^{p'} z^{-m} z^{-p} = z^{-n}
            const ModuleVector xu = ctx.x(eps, n + pp - p, u);
            if (xu.empty()) continue;
            fock::add_scaled(out, vertex::apply_linear([&](const TensorState& t) { return ops.s_mode(-1, eps, pp, t); }, xu),
                             Scalar(1));
        }
    }
    return out;
}

ModuleVector z_from_currents(const Realized& ctx, int eps, int n, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [t, c] : v) fock::add_scaled(out, z_from_currents(ctx, eps, n, t), c);
    return out;
}

// [b(n), Z(eps|m)] = 0, Z either the realized mode or the one built from the currents;
// the latter also against the realized mode and against gamma^{1/2}
std::vector<Job> heis_commute(const Realized& ctx, bool from_currents) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int eps : {1, -1}) {
        for (const auto& s : ctx.vectors) {
            for (int m = -w; m <= w; ++m) {
                if (from_currents) {
                    jobs.push_back([&ctx, s, m, eps] {
                        return compare(json::array({"route", eps, m, 0}), id(s), z_from_currents(ctx, eps, m, s), ctx.z(eps, m, unit(s)));
                    });
                    jobs.push_back([&ctx, s, m, eps] {
                        const Scalar half = qh(ctx.k);
                        const ModuleVector v = unit(s);
                        return compare(json::array({"gamma", eps, m, 0}), id(s), fock::scaled(z_from_currents(ctx, eps, m, v), half),
                                       z_from_currents(ctx, eps, m, fock::scaled(v, half)));
                    });
                }
                for (int n = -w; n <= w; ++n) {
                    if (n == 0) continue;
                    jobs.push_back([&ctx, s, m, n, eps, from_currents] {
                        auto Z = [&](const ModuleVector& x) { return from_currents ? z_from_currents(ctx, eps, m, x) : ctx.z(eps, m, x); };
                        const ModuleVector v = unit(s);
                        return compare(json::array({"b", eps, m, n}), id(s), ctx.heis(n, Z(v)), Z(ctx.heis(n, v)));
                    });
                }
            }
        }
    }
    return jobs;
}

// Psi_0 Z = q^{2 eps} Z Psi_0 (sign +) and Phi_0 Z = q^{-2 eps} Z Phi_0 (sign -)
std::vector<Job> zero_mode_exchange(const Realized& ctx, std::vector<int> signs) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int sign : signs) {
        for (int eps : {1, -1}) {
            for (const auto& s : ctx.vectors) {
                for (int n = -w; n <= w; ++n) {
                    jobs.push_back([&ctx, s, n, eps, sign] {
                        const ModuleVector v = unit(s);
                        auto K = [&](const ModuleVector& x) { return sign > 0 ? ctx.psi(0, x) : ctx.phi(0, x); };
                        return compare(json::array({sign, eps, n}), id(s), K(ctx.z(eps, n, v)),
                                       fock::scaled(ctx.z(eps, n, K(v)), qp(2 * sign * eps)));
                    });
                }
            }
        }
    }
    return jobs;
}

// Psi_n Z = q^{2 eps} Z Psi_n (n >= 0) and Phi_n Z = q^{-2 eps} Z Phi_n (n <= 0)
std::vector<Job> full_zero_exchange(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int eps : {1, -1}) {
        for (const auto& s : ctx.vectors) {
            for (int n = -w; n <= w; ++n) {
                for (int m = -w; m <= w; ++m) {
                    jobs.push_back([&ctx, s, n, m, eps] {
                        const ModuleVector v = unit(s);
                        const int sign = n >= 0 ? 1 : -1;
                        auto A = [&](const ModuleVector& x) { return n >= 0 ? ctx.psi(n, x) : ctx.phi(n, x); };
                        return compare(json::array({sign, eps, n, m}), id(s), A(ctx.z(eps, m, v)),
                                       fock::scaled(ctx.z(eps, m, A(v)), qp(2 * sign * eps)));
                    });
                    if (n == 0) {
                        jobs.push_back([&ctx, s, m, eps] {
                            const ModuleVector v = unit(s);
                            return compare(json::array({-1, eps, 0, m}), id(s), ctx.phi(0, ctx.z(eps, m, v)),
                                           fock::scaled(ctx.z(eps, m, ctx.phi(0, v)), qp(-2 * eps)));
                        });
                    }
                }
            }
        }
    }
    return jobs;
}

// Psi(z) = Psi_0 S^+_eps(z q^{-3 eps k/2}) S^+_{-eps}(z q^{3 eps k/2}) and
// Phi(z) = Phi_0 S^-_eps(z q^{3 eps k/2}) S^-_{-eps}(z q^{-3 eps k/2})
std::vector<Job> zero_current_factorization(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w, k = ctx.k;
    const vertex::VertexOperators& ops = ctx.ca->vertex_operators();
    for (int eps : {1, -1}) {
        for (const auto& s : ctx.vectors) {
            for (int n = -w; n <= w; ++n) {
                jobs.push_back([&ctx, &ops, s, n, eps, k] {
                    const ModuleVector v = unit(s);
                    const int sign = n >= 0 ? 1 : -1, p = n >= 0 ? n : -n;
                    ModuleVector prod;
                    for (int j = 0; j <= p; ++j) {
                        const ModuleVector inner = ops.s_mode_rescaled(sign, -eps, p - j, sign * 3 * eps * k, s);
                        fock::add_scaled(prod, vertex::apply_linear([&](const TensorState& t) {
                            return ops.s_mode_rescaled(sign, eps, j, -sign * 3 * eps * k, t);
                        }, inner), Scalar(1));
                    }
                    const ModuleVector rhs = sign > 0 ? ctx.psi(0, prod) : ctx.phi(0, prod);
                    const ModuleVector lhs = sign > 0 ? ctx.psi(n, v) : ctx.phi(n, v);
                    return compare(json::array({eps, n}), id(s), lhs, rhs);
                });
            }
        }
    }
    return jobs;
}

// X(eps|z) = S^-_{-eps}(z q^{-eps k}) S^+_{-eps}(z q^{eps k}) Z(eps|z) against E^-E^+Z
std::vector<Job> factorization(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int eps : {1, -1}) {
        for (const auto& s : ctx.vectors) {
            for (int n = -w; n <= w; ++n) {
                jobs.push_back([&ctx, s, n, eps] {
                    return compare(json::array({eps, n}), id(s), ctx.ca->x_mode_factorized(eps, n, s), ctx.ca->x_mode(eps, n, s));
                });
            }
        }
    }
    return jobs;
}

// q^d Z_n q^{-d} = q^n Z_n
std::vector<Job> z_grading(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int eps : {1, -1}) {
        for (const auto& s : ctx.vectors) {
            for (int n = -w; n <= w; ++n) {
                jobs.push_back([&ctx, s, n, eps] {
                    const ModuleVector out = ctx.z(eps, n, unit(s));
                    return compare(json::array({eps, n}), id(s), conjugate_by_degree(ctx, out, ctx.degree(s)), fock::scaled(out, qp(n)));
                });
            }
        }
    }
    return jobs;
}

// gamma^{+-1} Z = Z gamma^{+-1}
std::vector<Job> z_gamma(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int pm : {1, -1}) {
        for (int eps : {1, -1}) {
            for (const auto& s : ctx.vectors) {
                for (int n = -w; n <= w; ++n) {
                    jobs.push_back([&ctx, s, n, eps, pm] {
                        const ModuleVector v = unit(s);
                        const Scalar g = qp(pm * ctx.k);
                        return compare(json::array({pm, eps, n}), id(s), fock::scaled(ctx.z(eps, n, v), g), ctx.z(eps, n, fock::scaled(v, g)));
                    });
                }
            }
        }
    }
    return jobs;
}

}  // namespace

std::vector<Job> zq_jobs(const Realized& ctx) {
    const std::string& rel = ctx.spec.relation;
    if (rel == "equa1" || rel == "equal1") return z_commutator(ctx);
    if (rel == "equa2" || rel == "equal2") return z_exchange(ctx);
    if (rel == "equa3" || rel == "equal3" || rel == "R1") return heis_commute(ctx, false);
    if (rel == "aZ") return heis_commute(ctx, true);
    if (rel == "equa4" || rel == "equal4" || rel == "R2") return zero_mode_exchange(ctx, {1});
    if (rel == "equa5" || rel == "equal5" || rel == "R3") return zero_mode_exchange(ctx, {-1});
    if (rel == "PZ") return zero_mode_exchange(ctx, {1, -1});
    if (rel == "ppz") return full_zero_exchange(ctx);
    if (rel == "ps") return zero_current_factorization(ctx);
    if (rel == "equa6" || rel == "equal6" || rel == "R4") return factorization(ctx);
    if (rel == "equa7" || rel == "equal7" || rel == "R5" || rel == "hab") return z_grading(ctx);
    if (rel == "equa8" || rel == "equal8" || rel == "R6") return z_gamma(ctx);
    throw UnsupportedRelation("not a Z-operator relation: " + rel);
}

}  // namespace zq::verify::detail
