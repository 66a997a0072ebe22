#include "zq/coeff/qfunctions.hpp"
#include "zq/zalg/algebra.hpp"

#include <functional>

namespace zq::zalg {

namespace {

using coeff::QPower;

Scalar q_twice(int twice) { return Scalar::q_power(QPower::half(twice)); }

// u^m coefficient of ((1 - q^{-2-c} u) / (1 - q^{2-c} u))^{eps}, c = (eps + eps_r) k / 2
Scalar prefactor_coefficient(int eps, int eps_r, int k, int m) {
    if (m == 0) return Scalar(1);
    return q_twice(m * (4 * eps - (eps + eps_r) * k)) * (Scalar(1) - q_twice(-8 * eps));
}

// all m over `slots` with m_i >= 0 and sum m_i = total
void compositions(std::size_t slots, int total, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> m(slots, 0);
    if (slots == 0) {
        if (total == 0) f(m);
        return;
    }
    if (total < 0) return;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == slots) {
            m[i] = left;
            f(m);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            m[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, total);
}

void validate(GqcrKind kind, const std::vector<int>& eps, const std::vector<int>& n, int r) {
    if (eps.size() != n.size()) throw std::invalid_argument("sign and mode lists differ in length");
    if (eps.size() < 2) throw std::invalid_argument("generalized commutation relations need at least two modes");
    for (int e : eps) {
        if (e != 1 && e != -1) throw std::invalid_argument("signs must be +1 or -1");
    }
    if (r < 1 || r + 1 > static_cast<int>(eps.size())) throw std::invalid_argument("position r out of range");
    const int er = eps[static_cast<std::size_t>(r - 1)], er1 = eps[static_cast<std::size_t>(r)];
    if (kind == GqcrKind::first && er != -er1) throw std::invalid_argument("the first relation needs eps_r = -eps_{r+1}");
    if (kind == GqcrKind::second && er != er1) throw std::invalid_argument("the second relation needs eps_r = eps_{r+1}");
}

CompositeZ swapped(CompositeZ c, std::size_t p) {
    std::swap(c.eps[p], c.eps[p + 1]);
    std::swap(c.n[p], c.n[p + 1]);
    return c;
}

}  // namespace

GqcrIdentity gqcr_expand(GqcrKind kind, const std::vector<int>& eps, const std::vector<int>& n, int r, int k) {
    validate(kind, eps, n, r);
    const std::size_t p = static_cast<std::size_t>(r - 1), s = eps.size();
    GqcrIdentity id;
    if (kind == GqcrKind::second) {
        const int e = eps[p];
        const Scalar q2 = q_twice(4 * e);
        auto with = [&](int a, int b) {
            CompositeZ c{eps, n};
            c.n[p] = a;
            c.n[p + 1] = b;
            return c;
        };
        id.lhs.push_back({Scalar(1), with(1 + n[p], n[p + 1]), 0});
        id.lhs.push_back({-q2, with(n[p + 1], 1 + n[p]), 0});
        id.rhs.push_back({q2, with(n[p], 1 + n[p + 1]), 0});
        id.rhs.push_back({Scalar(-1), with(1 + n[p + 1], n[p]), 0});
        return id;
    }
    const CompositeZ c{eps, n};
    id.lhs.push_back({Scalar(1), c, 0});
    id.lhs.push_back({Scalar(-1), swapped(c, p), 0});

    const int er = eps[p];
    const int total = n[p] + n[p + 1];
    int right_charge = 0;
    for (std::size_t i = p + 2; i < s; ++i) right_charge += eps[i];
    const Scalar pre = Scalar(er) / coeff::q_difference(QPower::of(1));
    CompositeZ hat;
    for (std::size_t i = 0; i < s; ++i) {
        if (i == p || i == p + 1) continue;
        hat.eps.push_back(eps[i]);
        hat.n.push_back(n[i]);
    }
    // Psi_0 term: the S^+ factors of Psi pass the modes to the right of r+1
    const Scalar psi_weight = pre * Scalar::q_power(QPower::of(er * k * n[p] + 2 * right_charge));
    compositions(s - p - 2, total, [&](const std::vector<int>& m) {
        CompositeZ h = hat;
        Scalar coef = psi_weight;
        for (std::size_t t = 0; t < m.size(); ++t) {
            const std::size_t i = p + 2 + t;
            h.n[p + t] += m[t];
            coef *= prefactor_coefficient(eps[i], er, k, m[t]);
        }
        id.rhs.push_back({coef, h, 1});
    });
    // Phi_0 term: the S^- factors of Phi pass the modes to the left of r
    const Scalar phi_weight = -pre * Scalar::q_power(QPower::of(-er * k * n[p] - 2 * right_charge));
    compositions(p, -total, [&](const std::vector<int>& m) {
        CompositeZ h = hat;
        Scalar coef = phi_weight;
        for (std::size_t i = 0; i < m.size(); ++i) {
            h.n[i] -= m[i];
            coef *= prefactor_coefficient(eps[i], er, k, m[i]);
        }
        id.rhs.push_back({coef, h, -1});
    });
    return id;
}

ZVector evaluate(const ZAlgebra& alg, const std::vector<OperatorTerm>& side, const ZVector& v) {
    ZVector out;
    for (const auto& t : side) add_scaled(out, alg.apply_composite(t.composite, ZAlgebra::zero_mode(t.zero_mode, v)), t.coeff);
    return out;
}

ClassicalLimit classical_limit_gqcr(GqcrKind kind, const std::vector<int>& eps, const std::vector<int>& n, int r,
                                    int k, int h) {
    const GqcrIdentity id = gqcr_expand(kind, eps, n, r, k);
    const std::size_t p = static_cast<std::size_t>(r - 1), s = eps.size();
    ClassicalLimit out;
    auto collect = [&](const std::vector<OperatorTerm>& side, int tag, bool symmetrize) {
        std::map<std::vector<int>, Scalar> sums;
        for (const auto& t : side) {
            std::vector<int> key = t.composite.n;
            if (symmetrize && key[p] > key[p + 1]) std::swap(key[p], key[p + 1]);
            if (tag >= 0) key.insert(key.begin(), tag);
            sums[key] += t.coeff * Scalar::q_power(t.zero_mode * h);
        }
        for (const auto& [key, c] : sums) {
            mpq_class v = coeff::eval_at_q1(c);
            if (v != 0) out.quantum[key] = v;
        }
    };
    if (kind == GqcrKind::second) {
        // at q = 1 the second relation says Z(..n_r,n_{r+1}..) = Z(..n_{r+1},n_r..), so each side collapses
        collect(id.lhs, 0, true);
        collect(id.rhs, 1, true);
        out.matches = out.quantum.empty();
        return out;
    }
    collect(id.rhs, -1, false);
    const int er = eps[p];
    const int total = n[p] + n[p + 1];
    std::vector<int> hat;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < s; ++i) {
        if (i == p || i == p + 1) continue;
        hat.push_back(n[i]);
        where.push_back(i);
    }
    int right = 0;
    for (std::size_t i = p + 2; i < s; ++i) right += eps[i];
    auto put = [&](std::vector<int> key, long v) {
        if (v != 0) out.classical[std::move(key)] += v;
    };
    if (total == 0) {
        put(hat, static_cast<long>(n[p]) * k + 2L * er * right + static_cast<long>(er) * h);
    } else {
        for (std::size_t t = 0; t < hat.size(); ++t) {
            const std::size_t i = where[t];
            const bool right_side = i > p + 1;
            if ((total > 0) != right_side) continue;
            std::vector<int> key = hat;
            key[t] += total;
            put(key, (total > 0 ? 2L : -2L) * er * eps[i]);
        }
    }
    for (auto it = out.classical.begin(); it != out.classical.end();) {
        if (it->second == 0) it = out.classical.erase(it);
        else ++it;
    }
    out.matches = out.quantum == out.classical;
    return out;
}

}  // namespace zq::zalg
