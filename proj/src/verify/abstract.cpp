#include "internal.hpp"

namespace zq::verify::detail {

namespace {

using zalg::CompositeZ;
using zalg::ZMode;
using zalg::ZVector;
using zalg::ZWord;

ZVector unit(const ZWord& w) { return ZVector{{w, Scalar(1)}}; }

ZVector scaled(const ZVector& v, const Scalar& c) {
    ZVector out;
    zalg::add_scaled(out, v, c);
    return out;
}

// every intermediate degree of the two orderings stays at or above the floor
bool inside(const Abstract& ctx, const ZWord& v, int n1, int n2) {
    const int d = zalg::degree(v);
    return d + n1 >= ctx.floor && d + n2 >= ctx.floor && d + n1 + n2 >= ctx.floor;
}

// Z(e,-e|n1,n2) = Z(-e,e|n2,n1) + Y(e|n1) delta_{n1+n2,0}
std::vector<Job> opposite_exchange(const Abstract& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int eps : {1, -1}) {
        for (const auto& v : ctx.vectors) {
            for (int n1 = -w; n1 <= w; ++n1) {
                for (int n2 = -w; n2 <= w; ++n2) {
                    if (!inside(ctx, v, n1, n2)) continue;
                    jobs.push_back([&ctx, v, n1, n2, eps] {
                        const ZVector x = unit(v);
                        const ZVector lhs = ctx.alg->apply_composite(CompositeZ{{eps, -eps}, {n1, n2}}, x);
                        ZVector rhs = ctx.alg->apply_composite(CompositeZ{{-eps, eps}, {n2, n1}}, x);
                        if (n1 + n2 == 0) zalg::add_scaled(rhs, x, zalg::y_value(eps, n1, ctx.k, zalg::charge(v)));
                        return compare(json::array({eps, n1, n2}), zalg::to_string(v), lhs, rhs);
                    });
                }
            }
        }
    }
    return jobs;
}

// Z(e,e|n1,n2) = q^{2e} Z(e,e|n1-1,n2+1) + q^{2e} Z(e,e|n2,n1) - Z(e,e|n2+1,n1-1)
std::vector<Job> equal_exchange(const Abstract& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int eps : {1, -1}) {
        for (const auto& v : ctx.vectors) {
            for (int n1 = -w; n1 <= w; ++n1) {
                for (int n2 = -w; n2 <= w; ++n2) {
                    if (!inside(ctx, v, n1, n2)) continue;
                    jobs.push_back([&ctx, v, n1, n2, eps] {
                        const ZVector x = unit(v);
                        auto Z = [&](int a, int b) { return ctx.alg->apply_composite(CompositeZ{{eps, eps}, {a, b}}, x); };
                        const Scalar q2 = qp(2 * eps);
                        ZVector rhs = scaled(Z(n1 - 1, n2 + 1), q2);
                        zalg::add_scaled(rhs, Z(n2, n1), q2);
                        zalg::add_scaled(rhs, Z(n2 + 1, n1 - 1), Scalar(-1));
                        return compare(json::array({eps, n1, n2}), zalg::to_string(v), Z(n1, n2), rhs);
                    });
                }
            }
        }
    }
    return jobs;
}

// sina1 after sina2 is the identity on composites, and sum_n a~_n a_{m-n} = delta_{m,0}
std::vector<Job> round_trip(const Abstract& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int eps : {1, -1}) {
        for (int ep : {1, -1}) {
            for (int m = 0; m <= w - ctx.floor; ++m) {
                jobs.push_back([&ctx, eps, ep, m] {
                    Scalar conv;
                    for (int n = 0; n <= m; ++n) conv += ctx.alg->a_tilde(eps, ep, n) * ctx.alg->a(eps, ep, m - n);
                    return compare(json::array({"convolution", eps, ep, m, 0}), "", conv, Scalar(m == 0 ? 1 : 0));
                });
            }
            for (const auto& v : ctx.vectors) {
                for (int n1 = -w; n1 <= w; ++n1) {
                    for (int n2 = -w; n2 <= w; ++n2) {
                        if (!inside(ctx, v, n1, n2)) continue;
                        jobs.push_back([&ctx, v, n1, n2, eps, ep] {
                            const zalg::ChargeContext cc{zalg::charge(v), zalg::degree(v)};
                            const CompositeZ c{{eps, ep}, {n1, n2}};
                            std::map<CompositeZ, Scalar> total;
                            for (const auto& [word, x] : ctx.alg->composite_to_modes(c, cc, ctx.floor - ctx.w)) {
                                for (const auto& [cc2, y] : ctx.alg->modes_to_composite(word[0], word[1], cc, ctx.floor - ctx.w)) total[cc2] += x * y;
                            }
                            ZVector lhs, rhs;
                            for (const auto& [cz, x] : total) {
                                if (!x.is_zero()) zalg::add_term(lhs, ZWord{{cz.eps[0], cz.n[0]}, {cz.eps[1], cz.n[1]}}, x);
                            }
                            if (n2 + cc.degree <= 0) zalg::add_term(rhs, ZWord{{eps, n1}, {ep, n2}}, Scalar(1));
                            return compare(json::array({"composite", eps, ep, n1, n2}), zalg::to_string(v), lhs, rhs);
                        });
                    }
                }
            }
        }
    }
    return jobs;
}

// the s = 2 generalized commutation relation of either kind as a matrix identity
std::vector<Job> two_mode_relation(const Abstract& ctx, zalg::GqcrKind kind) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int eps : {1, -1}) {
        const int second = kind == zalg::GqcrKind::first ? -eps : eps;
        for (const auto& v : ctx.vectors) {
            for (int n1 = -w; n1 <= w; ++n1) {
                for (int n2 = -w; n2 <= w; ++n2) {
                    if (!inside(ctx, v, n1, n2)) continue;
                    jobs.push_back([&ctx, v, n1, n2, eps, second, kind] {
                        const zalg::GqcrIdentity id = zalg::gqcr_expand(kind, {eps, second}, {n1, n2}, 1, ctx.k);
                        const ZVector x = unit(v);
                        return compare(json::array({eps, n1, n2}), zalg::to_string(v), zalg::evaluate(*ctx.alg, id.lhs, x),
                                       zalg::evaluate(*ctx.alg, id.rhs, x));
                    });
                }
            }
        }
    }
    return jobs;
}

// q^{alpha(0)} Z(e|n) q^{-alpha(0)} = q^{2e} Z(e|n), and the same with Phi_0 = q^{-alpha(0)}
std::vector<Job> charge_conjugation(const Abstract& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w;
    for (int sign : {1, -1}) {
        for (int eps : {1, -1}) {
            for (const auto& v : ctx.vectors) {
                for (int n = -w; n <= w; ++n) {
                    if (zalg::degree(v) + n < ctx.floor) continue;
                    jobs.push_back([&ctx, v, n, eps, sign] {
                        const ZVector x = unit(v);
                        const ZVector lhs = zalg::ZAlgebra::zero_mode(sign, ctx.alg->act({eps, n}, zalg::ZAlgebra::zero_mode(-sign, x)));
                        return compare(json::array({sign, eps, n}), zalg::to_string(v), lhs,
                                       scaled(ctx.alg->act({eps, n}, x), qp(2 * sign * eps)));
                    });
                }
            }
        }
    }
    return jobs;
}

}  // namespace

std::vector<Job> abstract_jobs(const Abstract& ctx) {
    const std::string& rel = ctx.spec.relation;
    if (rel == "khal1") return opposite_exchange(ctx);
    if (rel == "khal2") return equal_exchange(ctx);
    if (rel == "sina") return round_trip(ctx);
    if (rel == "qZ1") return two_mode_relation(ctx, zalg::GqcrKind::first);
    if (rel == "qZ2") return two_mode_relation(ctx, zalg::GqcrKind::second);
    if (rel == "PZ") return charge_conjugation(ctx);
    throw UnsupportedRelation("not a relation on W(M): " + rel);
}

}  // namespace zq::verify::detail
