#include "zq/fock/actions.hpp"

#include "zq/coeff/qfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace zq::fock {

namespace {

using coeff::QPower;

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Partition merge(const Partition& a, const Partition& b) {
    Partition out;
    out.parts.reserve(a.parts.size() + b.parts.size());
    std::merge(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(), std::back_inserter(out.parts),
               std::greater<>());
    return out;
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b) {
    return -floor_div(-a, b);
}

void enumerate_words(Sector sector, long budget_twice, std::vector<CliffordWord>& out) {
    // modes (doubled) available: NS -1,-3,...; R -2,-4,...
    const int first = sector == Sector::NS ? 1 : 2;
    std::vector<int> current;
    std::function<void(int, long)> rec = [&](int next_abs, long remaining) {
        CliffordWord w{sector, current, Spin::none};
        if (sector == Sector::R) {
            w.spin = Spin::plus;
            out.push_back(w);
            w.spin = Spin::minus;
            out.push_back(w);
        } else {
            out.push_back(w);
        }
        for (int a = next_abs; a <= remaining; a += 2) {
            current.push_back(-a);
            rec(a + 2, remaining - a);
            current.pop_back();
        }
    };
    rec(first, budget_twice);
}

}  // namespace

Scalar heisenberg_bracket(int n, int k) {
    return coeff::q_difference(QPower::of(2 * n)) * coeff::q_difference(QPower::of(k * n)) / Scalar(n);
}

ModuleVector heis_act(int n, int k, const TensorState& s) {
    if (n == 0) throw std::invalid_argument("b(0) is not a Heisenberg oscillator; the zero mode acts on the lattice");
    ModuleVector out;
    if (n < 0) {
        TensorState t = s;
        t.fock = s.fock.with_part(-n);
        out.emplace(std::move(t), Scalar(1));
        return out;
    }
    const int j = s.fock.multiplicity(n);
    if (j == 0) return out;
    TensorState t = s;
    t.fock = s.fock.without_part(n);
    out.emplace(std::move(t), Scalar(j) * heisenberg_bracket(n, k));
    return out;
}

ModuleVector heis_act(int n, int k, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [s, c] : v) add_scaled(out, heis_act(n, k, s), c);
    return out;
}

TensorState lattice_shift(const TensorState& s, int by_alpha) {
    TensorState t = s;
    t.lattice = s.lattice.shifted(by_alpha);
    return t;
}

Rational lattice_act(LatticeQuery query, int k, LatticePoint p, Rational c) {
    switch (query) {
        case LatticeQuery::alpha0: return p.alpha0();
        case LatticeQuery::z_exponent: return c * p.alpha0();
        case LatticeQuery::degree: return lattice_degree(k, p);
    }
    throw std::invalid_argument("unknown lattice query");
}

WeightedWords clifford_act(int twice_mode, const CliffordWord& w) {
    const bool odd = (twice_mode % 2) != 0;
    if ((w.sector == Sector::NS) != odd) {
        throw std::invalid_argument("Clifford mode parity does not match the sector");
    }
    WeightedWords out;
    const auto& m = w.twice_modes;
    const int len = static_cast<int>(m.size());
    if (twice_mode == 0) {
        // Klein factor keeps psi_0 anticommuting with the nonzero modes
        CliffordWord t = w;
        t.spin = w.spin == Spin::plus ? Spin::minus : Spin::plus;
        out.emplace_back(std::move(t), Scalar(len % 2 ? -1 : 1));
        return out;
    }
    if (twice_mode < 0) {
        if (std::find(m.begin(), m.end(), twice_mode) != m.end()) return out;
        auto pos = std::find_if(m.begin(), m.end(), [&](int x) { return x < twice_mode; });
        const int passed = static_cast<int>(pos - m.begin());
        CliffordWord t = w;
        t.twice_modes.insert(t.twice_modes.begin() + passed, twice_mode);
        out.emplace_back(std::move(t), Scalar(passed % 2 ? -1 : 1));
        return out;
    }
    auto pos = std::find(m.begin(), m.end(), -twice_mode);
    if (pos == m.end()) return out;
    const int passed = static_cast<int>(pos - m.begin());
    CliffordWord t = w;
    t.twice_modes.erase(t.twice_modes.begin() + passed);
    Scalar anti = Scalar::q_power(QPower::of(twice_mode)) + Scalar::q_power(QPower::of(-twice_mode));
    out.emplace_back(std::move(t), passed % 2 ? -anti : anti);
    return out;
}

ModuleVector clifford_act(int twice_mode, const TensorState& s) {
    if (!s.clifford) throw std::invalid_argument("state has no Clifford factor");
    ModuleVector out;
    for (auto& [w, c] : clifford_act(twice_mode, *s.clifford)) {
        TensorState t = s;
        t.clifford = std::move(w);
        add_term(out, t, c);
    }
    return out;
}

bool admits(Realization r, LatticePoint p) {
    switch (r) {
        case Realization::k1: return true;
        case Realization::k2_ns: return p.twice_charge % 2 == 0;
        case Realization::k2_r: return p.twice_charge % 2 != 0;
    }
    return false;
}

std::vector<TensorState> slice_basis(Realization r, DegreeWindow degrees, ChargeWindow charges) {
    const int k = level(r);
    std::vector<TensorState> out;
    const long hlo = ceil_div(2 * charges.lo.numerator(), charges.lo.denominator());
    const long hhi = floor_div(2 * charges.hi.numerator(), charges.hi.denominator());
    for (long h = hlo; h <= hhi; ++h) {
        const LatticePoint p{static_cast<int>(h)};
        if (!admits(r, p)) continue;
        const Rational lat = lattice_degree(k, p);
        if (lat < degrees.lo) continue;
        // budget for Fock plus Clifford degree
        const Rational budget = lat - degrees.lo;
        std::vector<std::optional<CliffordWord>> words;
        if (r == Realization::k1) {
            words.emplace_back(std::nullopt);
        } else {
            std::vector<CliffordWord> ws;
            enumerate_words(r == Realization::k2_ns ? Sector::NS : Sector::R,
                            floor_div(2 * budget.numerator(), budget.denominator()), ws);
            for (auto& w : ws) words.emplace_back(std::move(w));
        }
        std::vector<TensorState> cell;
        for (const auto& w : words) {
            const Rational base = lat + (w ? w->degree() : Rational(0));
            if (base < degrees.lo) continue;
            // -N + base in [lo, hi]
            const Rational nmin_r = base - degrees.hi, nmax_r = base - degrees.lo;
            const long nmin = std::max(0L, ceil_div(nmin_r.numerator(), nmin_r.denominator()));
            const long nmax = floor_div(nmax_r.numerator(), nmax_r.denominator());
            for (long n = nmin; n <= nmax; ++n) {
                for (const auto& part : partitions_of(static_cast<int>(n))) {
                    cell.push_back(TensorState{part, w, p});
                }
            }
        }
        std::stable_sort(cell.begin(), cell.end(), [&](const TensorState& a, const TensorState& b) {
            const Rational da = degree(k, a), db = degree(k, b);
            if (da != db) return da > db;
            return a < b;
        });
        out.insert(out.end(), cell.begin(), cell.end());
    }
    return out;
}

HeisenbergExponential::HeisenbergExponential(int level, bool annihilating, const std::function<Scalar(int)>& c,
                                             int max_order)
    : level_(level), annihilating_(annihilating), max_order_(max_order) {
    power_.resize(static_cast<std::size_t>(max_order + 1));
    for (int m = 1; m <= max_order; ++m) {
        Scalar base = c(m);
        if (annihilating) base *= heisenberg_bracket(m, level);
        auto& row = power_[static_cast<std::size_t>(m)];
        row.push_back(Scalar(1));
        for (int j = 1; j * m <= max_order; ++j) {
            Scalar next = row.back() * base;
            if (!annihilating) next /= Scalar(j);
            row.push_back(std::move(next));
        }
    }
}

std::vector<std::pair<Partition, Scalar>> HeisenbergExponential::apply(int p, const Partition& lambda) const {
    std::vector<std::pair<Partition, Scalar>> out;
    if (p < 0) return out;
    if (p > max_order_) throw std::out_of_range("exponential expanded beyond its precomputed order");
    if (p == 0) {
        out.emplace_back(lambda, Scalar(1));
        return out;
    }
    if (!annihilating_) {
        for (const auto& mu : partitions_of(p)) {
            Scalar c(1);
            for (std::size_t i = 0; i < mu.parts.size();) {
                std::size_t j = i;
                while (j < mu.parts.size() && mu.parts[j] == mu.parts[i]) ++j;
                c *= power_[static_cast<std::size_t>(mu.parts[i])][j - i];
                i = j;
            }
            if (!c.is_zero()) out.emplace_back(merge(lambda, mu), std::move(c));
        }
        return out;
    }
    if (lambda.size() < p) return out;
    // distinct parts with multiplicities
    std::vector<std::pair<int, int>> mult;
    for (std::size_t i = 0; i < lambda.parts.size();) {
        std::size_t j = i;
        while (j < lambda.parts.size() && lambda.parts[j] == lambda.parts[i]) ++j;
        mult.emplace_back(lambda.parts[i], static_cast<int>(j - i));
        i = j;
    }
    std::vector<int> take(mult.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int remaining) {
        if (idx == mult.size()) {
            if (remaining != 0) return;
            Scalar c(1);
            Partition rest;
            for (std::size_t i = 0; i < mult.size(); ++i) {
                const auto [part, j] = mult[i];
                if (take[i] > 0) {
                    c *= Scalar(binomial(j, take[i])) * power_[static_cast<std::size_t>(part)][static_cast<std::size_t>(take[i])];
                }
                for (int t = 0; t < j - take[i]; ++t) rest.parts.push_back(part);
            }
            if (!c.is_zero()) out.emplace_back(std::move(rest), std::move(c));
            return;
        }
        const auto [part, j] = mult[idx];
        for (int t = 0; t <= j && t * part <= remaining; ++t) {
            if (t > 0 && part > max_order_) break;
            take[idx] = t;
            rec(idx + 1, remaining - t * part);
        }
        take[idx] = 0;
    };
    rec(0, p);
    return out;
}

}  // namespace zq::fock
