#include "internal.hpp"

#include "zq/formal/distribution.hpp"

#include <cstdlib>

namespace zq::verify::detail {

namespace {

std::string id(const TensorState& s) { return fock::to_string(s); }

bool ramond(const Realized& ctx) { return ctx.r == Realization::k2_r; }

// doubled mode indices of the sector within the window
std::vector<int> sector_modes(const Realized& ctx) {
    std::vector<int> out;
    for (int t = -2 * ctx.w; t <= 2 * ctx.w; ++t) {
        if ((t % 2 == 0) == ramond(ctx)) out.push_back(t);
    }
    return out;
}

ModuleVector anticommutator(const Realized& ctx, int ta, int tb, const ModuleVector& v) {
    ModuleVector out = ctx.clifford(ta, ctx.clifford(tb, v));
    fock::add_scaled(out, ctx.clifford(tb, ctx.clifford(ta, v)), Scalar(1));
    return out;
}

// {psi(z), psi(w)} against the delta distributions of the sector
std::vector<Job> field_anticommutator(const Realized& ctx) {
    std::vector<Job> jobs;
    const std::vector<int> modes = sector_modes(ctx);
    const formal::Window2 win = formal::Window2::square(ctx.w + 1);
    auto lo = std::make_shared<formal::Distribution2>(formal::delta(QPower::of(-2), win));
    auto hi = std::make_shared<formal::Distribution2>(formal::delta(QPower::of(2), win));
    const bool r = ramond(ctx);
    for (const auto& s : ctx.vectors) {
        for (int ta : modes) {
            for (int tb : modes) {
                jobs.push_back([&ctx, s, ta, tb, lo, hi, r] {
                    const ModuleVector v = unit(s);
                    Scalar c;
                    if (r) {
                        // delta(z/w q^{-2}) + delta(z/w q^2) at z^{-a} w^{-b}
                        c = lo->coefficient(-ta / 2, -tb / 2) + hi->coefficient(-ta / 2, -tb / 2);
                    } else {
                        // (z/w)^{1/2} (q^{-1} delta(z/w q^{-2}) + q delta(z/w q^2)) at z^{-r} w^{-s}
                        const int i = (-ta - 1) / 2, j = (-tb + 1) / 2;
                        c = qp(-1) * lo->coefficient(i, j) + qp(1) * hi->coefficient(i, j);
                    }
                    return compare(json::array({twice_index(ta), twice_index(tb)}), id(s), anticommutator(ctx, ta, tb, v),
                                   fock::scaled(v, c));
                });
            }
        }
    }
    return jobs;
}

// {psi_n, psi_m} = (q^{2n} + q^{-2n}) delta_{n+m,0}
std::vector<Job> mode_anticommutator(const Realized& ctx) {
    std::vector<Job> jobs;
    const std::vector<int> modes = sector_modes(ctx);
    for (const auto& s : ctx.vectors) {
        for (int ta : modes) {
            for (int tb : modes) {
                jobs.push_back([&ctx, s, ta, tb] {
                    const ModuleVector v = unit(s);
                    const Scalar c = ta + tb == 0 ? qp(ta) + qp(-ta) : Scalar(0);
                    return compare(json::array({twice_index(ta), twice_index(tb)}), id(s), anticommutator(ctx, ta, tb, v),
                                   fock::scaled(v, c));
                });
            }
        }
    }
    return jobs;
}

// z (z - w q^{2e})(1 - w/z q^{-2e}) psi(z) psi(w) = w (z q^{2e} - w)(1 - z/w q^{-2e}) psi(w) psi(z)
std::vector<Job> clifford_exchange(const Realized& ctx) {
    std::vector<Job> jobs;
    const std::vector<int> modes = sector_modes(ctx);
    for (int eps : {1, -1}) {
        const Poly2 left = Poly2{{{1, 0}, Scalar(1)}} * Poly2{{{1, 0}, Scalar(1)}, {{0, 1}, -qp(2 * eps)}} *
                           Poly2{{{0, 0}, Scalar(1)}, {{-1, 1}, -qp(-2 * eps)}};
        const Poly2 right = Poly2{{{0, 1}, Scalar(1)}} * Poly2{{{1, 0}, qp(2 * eps)}, {{0, 1}, Scalar(-1)}} *
                            Poly2{{{0, 0}, Scalar(1)}, {{1, -1}, -qp(-2 * eps)}};
        for (const auto& s : ctx.vectors) {
            for (int ta : modes) {
                for (int tb : modes) {
                    jobs.push_back([&ctx, s, ta, tb, eps, left, right] {
                        const ModuleVector v = unit(s);
                        ModeOp P = [&ctx](int t, const ModuleVector& x) { return ctx.clifford(t, x); };
                        return compare(json::array({eps, twice_index(ta), twice_index(tb)}), id(s),
                                       poly_product(left, ta, tb, P, P, false, v), poly_product(right, ta, tb, P, P, true, v));
                    });
                }
            }
        }
    }
    return jobs;
}

// (S^+-_eps(z))^{-1} = S^+-_{-eps}(z q^{+-eps k}): equal modes, and the product is the identity
std::vector<Job> inverse_vertex(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w, k = ctx.k;
    const vertex::VertexOperators& ops = ctx.ca->vertex_operators();
    for (int sign : {1, -1}) {
        for (int eps : {1, -1}) {
            for (const auto& s : ctx.vectors) {
                for (int n = 0; n <= w; ++n) {
                    jobs.push_back([&ops, s, n, eps, sign, k] {
                        return compare(json::array({"inverse", sign, eps, n}), id(s), ops.s_inverse_mode(sign, eps, n, s),
                                       ops.s_mode_rescaled(sign, -eps, n, 2 * sign * eps * k, s));
                    });
                    jobs.push_back([&ops, s, n, eps, sign, k] {
                        ModuleVector prod;
                        for (int j = 0; j <= n; ++j) {
                            const ModuleVector inner = ops.s_mode_rescaled(sign, -eps, n - j, 2 * sign * eps * k, s);
                            fock::add_scaled(prod, vertex::apply_linear([&](const TensorState& t) { return ops.s_mode(sign, eps, j, t); }, inner),
                                             Scalar(1));
                        }
                        return compare(json::array({"product", sign, eps, n}), id(s), prod, n == 0 ? unit(s) : ModuleVector{});
                    });
                }
            }
        }
    }
    return jobs;
}

// [b(n), X(eps|p)] = eps q^{-eps |n| k/2} (q^{2n} - q^{-2n})/n X(eps|p+n)
std::vector<Job> heis_shift(const Realized& ctx) {
    std::vector<Job> jobs;
    const int w = ctx.w, k = ctx.k;
    for (int eps : {1, -1}) {
        for (const auto& s : ctx.vectors) {
            for (int n = -w; n <= w; ++n) {
                if (n == 0) continue;
                for (int p = -w; p <= w; ++p) {
                    jobs.push_back([&ctx, s, n, p, eps, k] {
                        const ModuleVector v = unit(s);
                        const ModuleVector lhs = fock::difference(ctx.heis(n, ctx.x(eps, p, v)), ctx.x(eps, p, ctx.heis(n, v)));
                        const Scalar c = Scalar(eps) * qh(-eps * std::abs(n) * k) * (qp(2 * n) - qp(-2 * n)) / Scalar(n);
                        return compare(json::array({eps, n, p}), id(s), lhs, fock::scaled(ctx.x(eps, p + n, v), c));
                    });
                }
            }
        }
    }
    return jobs;
}

}  // namespace

std::vector<Job> clifford_jobs(const Realized& ctx) {
    const std::string& rel = ctx.spec.relation;
    if (ctx.k != 2) throw UnsupportedRelation(rel + " needs the level 2 realization");
    if (rel == "fir1" || rel == "co1") {
        if (!ramond(ctx)) throw UnsupportedRelation(rel + " holds on the R sector (e^{alpha/2} C[Q]) only");
        return rel == "fir1" ? field_anticommutator(ctx) : mode_anticommutator(ctx);
    }
    if (rel == "fir2" || rel == "co2") {
        if (ramond(ctx)) throw UnsupportedRelation(rel + " holds on the NS sector (C[Q]) only");
        return rel == "fir2" ? field_anticommutator(ctx) : mode_anticommutator(ctx);
    }
    if (rel == "equala2") return clifford_exchange(ctx);
    throw UnsupportedRelation("not a Clifford relation: " + rel);
}

std::vector<Job> vertex_jobs(const Realized& ctx) {
    const std::string& rel = ctx.spec.relation;
    if (rel == "PSS") return inverse_vertex(ctx);
    if (rel == "ax") return heis_shift(ctx);
    throw UnsupportedRelation("not a vertex-operator relation: " + rel);
}

}  // namespace zq::verify::detail
