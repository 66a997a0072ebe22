#include "zq/zalg/algebra.hpp"

#include "zq/coeff/qfunctions.hpp"
#include "zq/formal/series.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <memory>

namespace zq::zalg {

namespace {

using coeff::QPower;

Scalar q_twice(int twice) { return Scalar::q_power(QPower::half(twice)); }

void check_sign(int e) {
    if (e != 1 && e != -1) throw std::invalid_argument("signs must be +1 or -1");
}

// exponents of (a1 u; q^{2k}) / (a2 u; q^{2k}) for f(eps,eps'|u) when eps eps' = +1
std::pair<QPower, QPower> f_arguments(int eps, int eps_prime, int k) {
    const int shift = -(eps + eps_prime) * k;  // twice of -(eps+eps')k/2
    QPower lo = QPower::half(shift + 2 * k - 4), hi = QPower::half(shift + 2 * k + 4);
    if (eps * eps_prime < 0) std::swap(lo, hi);
    return {lo, hi};
}

}  // namespace

FCoeffs f_coeffs(int eps, int eps_prime, int k, int order) {
    check_sign(eps);
    check_sign(eps_prime);
    if (k < 1) throw std::invalid_argument("level must be positive");
    const auto [num, den] = f_arguments(eps, eps_prime, k);
    const formal::Series f = formal::euler_ratio(num, den, QPower::of(2 * k), order);
    const formal::Series inv = f.inverse();
    FCoeffs out{eps, eps_prime, k, {}, {}};
    for (int n = 0; n <= order; ++n) {
        out.a.push_back(f.coefficient(n));
        out.a_tilde.push_back(inv.coefficient(n));
    }
    return out;
}

int CompositeZ::degree() const {
    int d = 0;
    for (int x : n) d += x;
    return d;
}

std::string to_string(const CompositeZ& c) {
    std::string e, m;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) {
            e += ",";
            m += ",";
        }
        e += c.eps[i] > 0 ? "+" : "-";
        m += std::to_string(c.n[i]);
    }
    return "Z(" + e + "|" + m + ")";
}

Scalar y_value(int eps, int n, int k, int alpha0) {
    const int e = k * n + eps * alpha0;
    return coeff::q_difference(QPower::of(e)) / coeff::q_difference(QPower::of(1));
}

ZAlgebra::ZAlgebra(int k, long step_budget) : k_(k), step_budget_(step_budget) {
    if (k < 1) throw std::invalid_argument("level must be positive");
}

void ZAlgebra::ensure_order(int eps, int eps_prime, int n) const {
    auto& slot = f_[{eps, eps_prime}];
    if (!slot.a.empty() && static_cast<int>(slot.a.size()) > n) return;
    int order = std::max(8, static_cast<int>(slot.a.size()) * 2);
    while (order < n) order *= 2;
    slot = f_coeffs(eps, eps_prime, k_, order);
}

Scalar ZAlgebra::a(int eps, int eps_prime, int n) const {
    if (n < 0) return Scalar();
    std::lock_guard<std::mutex> lock(mutex_);
    ensure_order(eps, eps_prime, n);
    return f_.at({eps, eps_prime}).a[static_cast<std::size_t>(n)];
}

Scalar ZAlgebra::a_tilde(int eps, int eps_prime, int n) const {
    if (n < 0) return Scalar();
    std::lock_guard<std::mutex> lock(mutex_);
    ensure_order(eps, eps_prime, n);
    return f_.at({eps, eps_prime}).a_tilde[static_cast<std::size_t>(n)];
}

ZVector ZAlgebra::composite_to_modes(const CompositeZ& c, ChargeContext ctx, std::optional<int> floor) const {
    if (c.size() != 2) throw std::invalid_argument("composite_to_modes expects a two-mode composite");
    if (!floor) throw std::invalid_argument("no degree floor given: the a-series has no finite bound");
    ZVector out;
    if (c.degree() + ctx.degree < *floor) return out;
    for (int i = 0; c.n[1] + i + ctx.degree <= 0; ++i) {
        add_term(out, ZWord{{c.eps[0], c.n[0] - i}, {c.eps[1], c.n[1] + i}}, a(c.eps[0], c.eps[1], i));
    }
    return out;
}

std::vector<std::pair<CompositeZ, Scalar>> ZAlgebra::modes_to_composite(ZMode first, ZMode second, ChargeContext ctx,
                                                                       std::optional<int> floor) const {
    if (!floor) throw std::invalid_argument("no degree floor given: the a~-series has no finite bound");
    std::vector<std::pair<CompositeZ, Scalar>> out;
    if (first.n + second.n + ctx.degree < *floor) return out;
    for (int j = 0; second.n + j + ctx.degree <= 0; ++j) {
        Scalar c = a_tilde(first.eps, second.eps, j);
        if (!c.is_zero()) out.emplace_back(CompositeZ{{first.eps, second.eps}, {first.n - j, second.n + j}}, c);
    }
    return out;
}

const std::vector<std::pair<int, Scalar>>& ZAlgebra::same_sign_swap(int eps, int d) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = swap_.find({eps, d});
        if (it != swap_.end()) return it->second;
    }
    // khal2 with n1 = x + d, n2 = x:
    // Z(x+d, x) = q^{2e} Z(x+d-1, x+1) + q^{2e} Z(x, x+d) - Z(x+1, x+d-1)
    const Scalar q2 = q_twice(4 * eps);
    std::map<int, Scalar> acc;
    if (d == 1) {
        acc[0] = q2;  // the last term is the left side itself: 2 Z = 2 q^{2e} Z(x, x+1)
    } else {
        acc[0] += q2;
        acc[1] -= Scalar(1);
        if (d == 2) {
            acc[1] += q2;
        } else {
            for (const auto& [t, c] : same_sign_swap(eps, d - 2)) acc[t + 1] += q2 * c;
        }
    }
    std::vector<std::pair<int, Scalar>> table;
    for (auto& [t, c] : acc) {
        if (!c.is_zero()) table.emplace_back(t, c);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return swap_.emplace(std::make_pair(eps, d), std::move(table)).first->second;
}

CompositeSum ZAlgebra::swap_composite(const CompositeZ& c, ChargeContext ctx) const {
    if (c.size() != 2) throw std::invalid_argument("swap_composite expects a two-mode composite");
    const int e1 = c.eps[0], e2 = c.eps[1], m1 = c.n[0], m2 = c.n[1];
    CompositeSum out;
    if (e1 == -e2) {
        out.terms.emplace_back(CompositeZ{{e2, e1}, {m2, m1}}, Scalar(1));
        if (m1 + m2 == 0) out.identity = y_value(e1, m1, k_, ctx.alpha0);
        return out;
    }
    if (m1 <= m2) {
        out.terms.emplace_back(c, Scalar(1));
        return out;
    }
    for (const auto& [t, coef] : same_sign_swap(e1, m1 - m2)) {
        out.terms.emplace_back(CompositeZ{{e1, e1}, {m2 + t, m1 - t}}, coef);
    }
    return out;
}

void ZAlgebra::expand_normal_composite(const CompositeZ& c, ChargeContext ctx, const Scalar& weight,
                                       ZVector& out) const {
    for (int i = 0; c.n[1] + i + ctx.degree <= 0; ++i) {
        Scalar x = a(c.eps[0], c.eps[1], i);
        if (x.is_zero()) continue;
        add_term(out, ZWord{{c.eps[0], c.n[0] - i}, {c.eps[1], c.n[1] + i}}, weight * x);
    }
}

ZVector ZAlgebra::rewrite_pair(ZMode first, ZMode second, ChargeContext ctx) const {
    ZVector out;
    for (int j = 0; second.n + j + ctx.degree <= 0; ++j) {
        const Scalar w = a_tilde(first.eps, second.eps, j);
        if (w.is_zero()) continue;
        const CompositeZ comp{{first.eps, second.eps}, {first.n - j, second.n + j}};
        if (h_less_equal({comp.eps[0], comp.n[0]}, {comp.eps[1], comp.n[1]})) {
            expand_normal_composite(comp, ctx, w, out);
            continue;
        }
        const CompositeSum sum = swap_composite(comp, ctx);
        add_term(out, ZWord{}, w * sum.identity);
        for (const auto& [c2, c] : sum.terms) expand_normal_composite(c2, ctx, w * c, out);
    }
    return out;
}

ZVector ZAlgebra::act(ZMode m, const ZWord& word) const {
    const int d = degree(word);
    const int total = m.n + d;
    if (total > 0) return {};
    if (total == 0 && charge(word) + 2 * m.eps != 0) return {};
    if (word.empty()) return m.n < 0 ? ZVector{{ZWord{m}, Scalar(1)}} : ZVector{};
    if (h_less_equal(m, word.front())) {
        ZWord w;
        w.reserve(word.size() + 1);
        w.push_back(m);
        w.insert(w.end(), word.begin(), word.end());
        return ZVector{{std::move(w), Scalar(1)}};
    }
    auto key = std::make_pair(m, word);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = act_memo_.find(key);
        if (it != act_memo_.end()) return it->second;
        if (!in_progress_.insert(key).second) {
            throw RewriteError("rewriting loops on " + to_string(ZWord{m}) + " applied to " + to_string(word));
        }
    }
    struct Release {
        const ZAlgebra* self;
        const std::pair<ZMode, ZWord>* key;
        ~Release() {
            std::lock_guard<std::mutex> lock(self->mutex_);
            self->in_progress_.erase(*key);
        }
    } release{this, &key};

    const ZWord rest(word.begin() + 1, word.end());
    const ChargeContext ctx{charge(rest), degree(rest)};
    ZVector out;
    for (const auto& [pair, c] : rewrite_pair(m, word.front(), ctx)) {
        if (pair.empty()) {
            add_term(out, rest, c);
            continue;
        }
        for (const auto& [uw, uc] : act(pair[1], rest)) add_scaled(out, act(pair[0], uw), c * uc);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    act_memo_.emplace(key, out);
    return out;
}

ZVector ZAlgebra::act(ZMode m, const ZVector& v) const {
    ZVector out;
    for (const auto& [w, c] : v) add_scaled(out, act(m, w), c);
    return out;
}

ZVector ZAlgebra::leftmost(const ZWord& w, int floor, long& steps, std::map<ZWord, ZVector>& memo) const {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    if (++steps > step_budget_) throw RewriteError("rewrite step budget exceeded at " + to_string(w));
    int deg = 0, ch = 0;
    for (std::size_t p = w.size(); p-- > 0;) {
        deg += w[p].n;
        ch += 2 * w[p].eps;
        if (deg > 0 || (deg == 0 && ch != 0)) return memo[w] = {};
        if (deg < floor) throw RewriteError("intermediate vector below the degree floor in " + to_string(w));
    }
    std::size_t i = 0;
    while (i + 1 < w.size() && h_less_equal(w[i], w[i + 1])) ++i;
    if (i + 1 >= w.size()) return memo[w] = ZVector{{w, Scalar(1)}};
    const ZWord suffix(w.begin() + static_cast<long>(i) + 2, w.end());
    const ChargeContext ctx{charge(suffix), degree(suffix)};
    ZVector out;
    for (const auto& [pair, c] : rewrite_pair(w[i], w[i + 1], ctx)) {
        ZWord next(w.begin(), w.begin() + static_cast<long>(i));
        next.insert(next.end(), pair.begin(), pair.end());
        next.insert(next.end(), suffix.begin(), suffix.end());
        add_scaled(out, leftmost(next, floor, steps, memo), c);
    }
    return memo[w] = out;
}

ZVector ZAlgebra::normal_order(const ZWord& w, int floor, Strategy strategy) const {
    if (degree(w) < floor) return {};
    if (strategy == Strategy::leftmost) {
        long steps = 0;
        std::map<ZWord, ZVector> memo;
        return leftmost(w, floor, steps, memo);
    }
    ZVector v{{ZWord{}, Scalar(1)}};
    int deg = 0;
    for (std::size_t p = w.size(); p-- > 0;) {
        deg += w[p].n;
        if (deg < floor) throw RewriteError("intermediate vector below the degree floor in " + to_string(w));
        v = act(w[p], v);
        if (v.empty()) break;
    }
    return v;
}

ZVector ZAlgebra::apply_composite(const CompositeZ& c, const ZVector& v) const {
    const int s = static_cast<int>(c.size());
    if (c.n.size() != c.eps.size()) throw std::invalid_argument("composite with mismatched lists");
    if (s == 0) return v;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) pairs.emplace_back(i, j);
    }
    ZVector out;
    for (const auto& [word, wc] : v) {
        const int d = degree(word);
        // cross(p): total l_{ij} over i < p <= j, bounded by the degree budget of the suffix at p
        std::vector<int> bound(static_cast<std::size_t>(s), 0), cross(static_cast<std::size_t>(s), 0);
        int tail = 0;
        bool dead = false;
        for (int p = s - 1; p >= 1; --p) {
            tail += c.n[static_cast<std::size_t>(p)];
            bound[static_cast<std::size_t>(p)] = -d - tail;
            if (bound[static_cast<std::size_t>(p)] < 0) dead = true;
        }
        if (dead) continue;
        std::vector<int> modes(c.n);
        const ZVector start{{word, Scalar(1)}};
        std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t idx, const Scalar& coef) {
            if (idx == pairs.size()) {
                ZVector u = start;
                for (int p = s - 1; p >= 0 && !u.empty(); --p) u = act(ZMode{c.eps[static_cast<std::size_t>(p)], modes[static_cast<std::size_t>(p)]}, u);
                add_scaled(out, u, coef * wc);
                return;
            }
            const auto [i, j] = pairs[idx];
            int cap = std::numeric_limits<int>::max();
            for (int p = i + 1; p <= j; ++p) {
                cap = std::min(cap, bound[static_cast<std::size_t>(p)] - cross[static_cast<std::size_t>(p)]);
            }
            for (int l = 0; l <= cap; ++l) {
                Scalar x = a(c.eps[static_cast<std::size_t>(i)], c.eps[static_cast<std::size_t>(j)], l);
                if (!x.is_zero()) {
                    modes[static_cast<std::size_t>(i)] -= l;
                    modes[static_cast<std::size_t>(j)] += l;
                    for (int p = i + 1; p <= j; ++p) cross[static_cast<std::size_t>(p)] += l;
                    rec(idx + 1, coef * x);
                    for (int p = i + 1; p <= j; ++p) cross[static_cast<std::size_t>(p)] -= l;
                    modes[static_cast<std::size_t>(i)] += l;
                    modes[static_cast<std::size_t>(j)] -= l;
                }
            }
        };
        rec(0, Scalar(1));
    }
    return out;
}

ZVector ZAlgebra::zero_mode(int sign, const ZVector& v) {
    if (sign == 0) return v;
    ZVector out;
    for (const auto& [w, c] : v) add_term(out, w, c * Scalar::q_power(sign * charge(w)));
    return out;
}

const ZAlgebra& z_algebra(int k) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<ZAlgebra>> by_level;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = by_level[k];
    if (!slot) slot = std::make_unique<ZAlgebra>(k);
    return *slot;
}

}  // namespace zq::zalg
