#include "zq/formal/distribution.hpp"

#include <algorithm>

namespace zq::formal {

Distribution2::Distribution2(Window2 window, bool bilateral_z, bool bilateral_w)
    : window_(window), bilateral_z_(bilateral_z), bilateral_w_(bilateral_w) {}

Scalar Distribution2::coefficient(int n, int m) const {
    if (!window_.contains(n, m)) throw WindowError("distribution coefficient outside its window");
    auto it = coeffs_.find({n, m});
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

void Distribution2::set(int n, int m, Scalar c) {
    if (!window_.contains(n, m)) throw WindowError("distribution set outside its window");
    if (c.is_zero()) coeffs_.erase({n, m});
    else coeffs_[{n, m}] = std::move(c);
}

Distribution2 delta(QPower shift, Window2 window) {
    Distribution2 d(window, true, true);
    for (int n = window.zlo; n <= window.zhi; ++n) {
        if (window.contains(n, -n)) d.set(n, -n, Scalar::q_power(shift.pow(n)));
    }
    return d;
}

std::pair<Series, Series> delta_halves(QPower shift, int order) {
    Series pos("x", 0, order), neg("1/x", 1, order);
    for (int n = 0; n <= order; ++n) pos.set(n, Scalar::q_power(shift.pow(n)));
    for (int n = 1; n <= order; ++n) neg.set(n, Scalar::q_power(shift.pow(-n)));
    return {pos, neg};
}

DeltaWitness delta_substitute(const Distribution2& g, QPower shift, Window2 window) {
    if (g.bilateral_z() && g.bilateral_w()) {
        throw std::invalid_argument("delta_substitute: G is bilateral in both variables; the product is not coefficient-finite");
    }
    // one-variable restrictions G(z, a z) and G(a^{-1} w, w), indexed by total degree
    std::map<int, Scalar> on_z, on_w;
    for (const auto& [nm, c] : g.terms()) {
        const auto [n, m] = nm;
        on_z[n + m] += c * Scalar::q_power(shift.pow(m));
        on_w[n + m] += c * Scalar::q_power(shift.pow(-n));
    }
    auto lookup = [](const std::map<int, Scalar>& h, int t) {
        auto it = h.find(t);
        return it == h.end() ? Scalar(0) : it->second;
    };
    DeltaWitness out;
    for (int n = window.zlo; n <= window.zhi; ++n) {
        for (int m = window.wlo; m <= window.whi; ++m) {
            DeltaEntry e{n, m, Scalar(0), Scalar(0), Scalar(0), true};
            for (const auto& [nm, c] : g.terms()) {
                // term z^{n'} w^{m'} meets delta term a^p z^p w^{-p} with p = n - n'
                const auto [n2, m2] = nm;
                const int p = n - n2;
                if (m2 - p == m) e.product += c * Scalar::q_power(shift.pow(p));
            }
            e.substituted_w = lookup(on_z, n + m) * Scalar::q_power(shift.pow(-m));
            e.substituted_z = lookup(on_w, n + m) * Scalar::q_power(shift.pow(n));
            e.equal = e.product == e.substituted_w && e.product == e.substituted_z;
            out.passed = out.passed && e.equal;
            out.entries.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace zq::formal
