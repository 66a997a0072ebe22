#include "zq/vertex/currents.hpp"

#include "zq/coeff/qfunctions.hpp"

#include <stdexcept>

namespace zq::vertex {

namespace {

using coeff::QPower;
using fock::Partition;

void require_sign(int s, const char* what) {
    if (s != 1 && s != -1) throw std::invalid_argument(std::string(what) + " must be +1 or -1");
}

int idx(int s) { return s > 0 ? 0 : 1; }

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

// largest doubled Clifford mode that does not annihilate the word
int top_clifford_mode(const fock::CliffordWord& w) {
    if (!w.twice_modes.empty()) return -w.twice_modes.back();
    return w.sector == fock::Sector::R ? 0 : -1;
}

}  // namespace

std::string to_string(Current c) {
    switch (c) {
        case Current::s_plus: return "S+";
        case Current::s_minus: return "S-";
        case Current::x: return "X";
        case Current::psi: return "Psi";
        case Current::phi: return "Phi";
        case Current::z: return "Z";
    }
    return "?";
}

ModuleVector apply_linear(const std::function<ModuleVector(const TensorState&)>& f, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [s, c] : v) add_scaled(out, f(s), c);
    return out;
}

Scalar s_exponent_coefficient(int sign, int eps, int k, int m) {
    require_sign(sign, "sign");
    require_sign(eps, "epsilon");
    const Scalar base = Scalar::q_power(QPower::half(-eps * m * k)) / coeff::q_difference(QPower::of(m * k));
    return sign * eps > 0 ? base : -base;
}

formal::Series exponent_commutator(int sign_a, int eps_a, int sign_b, int eps_b, int k, int order) {
    require_sign(sign_a, "sign");
    require_sign(sign_b, "sign");
    formal::Series out(sign_a > 0 ? "w/z" : "z/w", 1, order);
    if (sign_a == sign_b) return out;
    for (int n = 1; n <= order; ++n) {
        Scalar c = s_exponent_coefficient(sign_a, eps_a, k, n) * s_exponent_coefficient(sign_b, eps_b, k, n) *
                   fock::heisenberg_bracket(n, k);
        out.set(n, sign_a > 0 ? c : -c);
    }
    return out;
}

VertexOperators::VertexOperators(int level, int max_order) : level_(level) {
    if (level < 1) throw std::invalid_argument("level must be positive");
    for (int sign : {1, -1}) {
        for (int eps : {1, -1}) {
            for (int inv = 0; inv < 2; ++inv) {
                auto c = [=](int m) {
                    Scalar e = s_exponent_coefficient(sign, eps, level, m);
                    return inv ? -e : e;
                };
                tables_[idx(sign)][idx(eps)][inv] =
                    std::make_unique<fock::HeisenbergExponential>(level, sign > 0, c, max_order);
            }
        }
    }
}

const fock::HeisenbergExponential& VertexOperators::table(int sign, int eps, bool inverse) const {
    require_sign(sign, "sign");
    require_sign(eps, "epsilon");
    return *tables_[idx(sign)][idx(eps)][inverse ? 1 : 0];
}

namespace {

ModuleVector lift(const std::vector<std::pair<Partition, Scalar>>& parts, const TensorState& s, const Scalar& c) {
    ModuleVector out;
    for (const auto& [p, x] : parts) {
        TensorState t = s;
        t.fock = p;
        add_term(out, t, x * c);
    }
    return out;
}

}  // namespace

ModuleVector VertexOperators::s_mode(int sign, int eps, int n, const TensorState& s) const {
    if (n < 0) throw std::invalid_argument("S-operator modes are indexed by n >= 0 in their own direction");
    return lift(table(sign, eps, false).apply(n, s.fock), s, Scalar(1));
}

ModuleVector VertexOperators::s_inverse_mode(int sign, int eps, int n, const TensorState& s) const {
    if (n < 0) throw std::invalid_argument("S-operator modes are indexed by n >= 0 in their own direction");
    return lift(table(sign, eps, true).apply(n, s.fock), s, Scalar(1));
}

ModuleVector VertexOperators::s_mode_rescaled(int sign, int eps, int n, int twice_shift, const TensorState& s) const {
    if (n < 0) throw std::invalid_argument("S-operator modes are indexed by n >= 0 in their own direction");
    // z -> z c multiplies the coefficient of z^{-n} by c^{-n} and that of z^{n} by c^{n}
    const Scalar c = Scalar::q_power(QPower::half(twice_shift * (sign > 0 ? -n : n)));
    return lift(table(sign, eps, false).apply(n, s.fock), s, c);
}

CurrentAlgebra::CurrentAlgebra(Realization r, int max_order)
    : realization_(r),
      ops_(fock::level(r), max_order),
      psi_exp_(fock::level(r), true, [](int) { return Scalar(1); }, max_order),
      phi_exp_(fock::level(r), false, [](int) { return Scalar(-1); }, max_order) {}

void CurrentAlgebra::require_member(const TensorState& s) const {
    const bool has_clifford = s.clifford.has_value();
    bool ok = fock::admits(realization_, s.lattice);
    switch (realization_) {
        case Realization::k1: ok = ok && !has_clifford; break;
        case Realization::k2_ns:
            ok = ok && has_clifford && s.clifford->sector == fock::Sector::NS && s.clifford->spin == fock::Spin::none;
            break;
        case Realization::k2_r:
            ok = ok && has_clifford && s.clifford->sector == fock::Sector::R && s.clifford->spin != fock::Spin::none;
            break;
    }
    if (!ok) {
        throw std::invalid_argument("state " + fock::to_string(s) + " does not belong to the " +
                                    fock::to_string(realization_) + " module (sector/charge mismatch)");
    }
}

ModuleVector CurrentAlgebra::z_mode(int eps, int n, const TensorState& s) const {
    require_sign(eps, "epsilon");
    require_member(s);
    const int h = s.lattice.alpha0();
    ModuleVector out;
    if (realization_ == Realization::k1) {
        if (n == -(eps * h + 1)) add_term(out, fock::lattice_shift(s, eps), Scalar(1));
        return out;
    }
    for (const auto& [t, c] : fock::clifford_act(2 * n + eps * h + 1, s)) {
        add_term(out, fock::lattice_shift(t, eps), c);
    }
    return out;
}

template <class Route>
ModuleVector CurrentAlgebra::assemble_x(int eps, int n, const TensorState& s, Route&& route) const {
    require_sign(eps, "epsilon");
    require_member(s);
    const int h = s.lattice.alpha0();
    const int size = s.fock.size();
    // Z(eps|m) contributes; then E^+ mode p <= |lambda| and E^- mode p' = m + p - n >= 0
    int m_lo = n - size, m_hi;
    if (realization_ == Realization::k1) {
        m_lo = m_hi = -(eps * h + 1);
    } else {
        m_hi = static_cast<int>(floor_div(top_clifford_mode(*s.clifford) - eps * h - 1, 2));
    }
    ModuleVector out;
    for (int m = m_lo; m <= m_hi; ++m) {
        const ModuleVector zv = z_mode(eps, m, s);
        if (zv.empty()) continue;
        for (int p = 0; p <= size; ++p) {
            const int pp = m + p - n;
            if (pp < 0) continue;
            for (const auto& [t, c] : zv) {
                for (const auto& [mid, a] : route(true, p, t)) {
                    for (const auto& [fin, b] : route(false, pp, mid)) add_term(out, fin, a * b * c);
                }
            }
        }
    }
    const Rational expected = fock::degree(level(), s) + n;
    for (const auto& [t, c] : out) {
        if (fock::degree(level(), t) != expected) throw std::logic_error("X mode broke the degree grading");
    }
    return out;
}

ModuleVector CurrentAlgebra::x_mode(int eps, int n, const TensorState& s) const {
    auto key = std::make_tuple(eps, n, s);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = x_cache_.find(key);
        if (it != x_cache_.end()) return it->second;
    }
    ModuleVector out = assemble_x(eps, n, s, [&](bool annihilating, int p, const TensorState& t) {
        return ops_.s_inverse_mode(annihilating ? 1 : -1, eps, p, t);
    });
    std::lock_guard<std::mutex> lock(mutex_);
    x_cache_.emplace(std::move(key), out);
    return out;
}

ModuleVector CurrentAlgebra::x_mode_factorized(int eps, int n, const TensorState& s) const {
    const int k = level();
    return assemble_x(eps, n, s, [&](bool annihilating, int p, const TensorState& t) {
        // S^+_{-eps}(z q^{eps k}) and S^-_{-eps}(z q^{-eps k})
        return annihilating ? ops_.s_mode_rescaled(1, -eps, p, 2 * eps * k, t)
                            : ops_.s_mode_rescaled(-1, -eps, p, -2 * eps * k, t);
    });
}

ModuleVector CurrentAlgebra::psi_mode(int n, const TensorState& s) const {
    if (n < 0) throw std::invalid_argument("Psi has modes n >= 0 only");
    require_member(s);
    return lift(psi_exp_.apply(n, s.fock), s, Scalar::q_power(QPower::half(2 * s.lattice.alpha0())));
}

ModuleVector CurrentAlgebra::phi_mode(int n, const TensorState& s) const {
    if (n > 0) throw std::invalid_argument("Phi has modes n <= 0 only");
    require_member(s);
    return lift(phi_exp_.apply(-n, s.fock), s, Scalar::q_power(QPower::half(-2 * s.lattice.alpha0())));
}

ModuleVector CurrentAlgebra::x_mode(int eps, int n, const ModuleVector& v) const {
    return apply_linear([&](const TensorState& s) { return x_mode(eps, n, s); }, v);
}

ModuleVector CurrentAlgebra::psi_mode(int n, const ModuleVector& v) const {
    return apply_linear([&](const TensorState& s) { return psi_mode(n, s); }, v);
}

ModuleVector CurrentAlgebra::phi_mode(int n, const ModuleVector& v) const {
    return apply_linear([&](const TensorState& s) { return phi_mode(n, s); }, v);
}

ModuleVector CurrentAlgebra::z_mode(int eps, int n, const ModuleVector& v) const {
    return apply_linear([&](const TensorState& s) { return z_mode(eps, n, s); }, v);
}

OperatorMode CurrentAlgebra::x(int eps, int n) const {
    return {"X(" + sign_char(eps) + "|" + std::to_string(n) + ")", Current::x, eps, realization_, n, n, 2 * eps,
            [this, eps, n](const ModuleVector& v) { return x_mode(eps, n, v); }};
}

OperatorMode CurrentAlgebra::x_factorized(int eps, int n) const {
    return {"XS(" + sign_char(eps) + "|" + std::to_string(n) + ")", Current::x, eps, realization_, n, n, 2 * eps,
            [this, eps, n](const ModuleVector& v) {
                return apply_linear([&](const TensorState& s) { return x_mode_factorized(eps, n, s); }, v);
            }};
}

OperatorMode CurrentAlgebra::psi(int n) const {
    if (n < 0) throw std::invalid_argument("Psi has modes n >= 0 only");
    return {"Psi(" + std::to_string(n) + ")", Current::psi, 0, realization_, n, n, 0,
            [this, n](const ModuleVector& v) { return psi_mode(n, v); }};
}

OperatorMode CurrentAlgebra::phi(int n) const {
    if (n > 0) throw std::invalid_argument("Phi has modes n <= 0 only");
    return {"Phi(" + std::to_string(n) + ")", Current::phi, 0, realization_, n, n, 0,
            [this, n](const ModuleVector& v) { return phi_mode(n, v); }};
}

OperatorMode CurrentAlgebra::z(int eps, int n) const {
    return {"Z(" + sign_char(eps) + "|" + std::to_string(n) + ")", Current::z, eps, realization_, n, n, 2 * eps,
            [this, eps, n](const ModuleVector& v) { return z_mode(eps, n, v); }};
}

const CurrentAlgebra& current_algebra(Realization r) {
    static const CurrentAlgebra k1(Realization::k1);
    static const CurrentAlgebra ns(Realization::k2_ns);
    static const CurrentAlgebra rr(Realization::k2_r);
    switch (r) {
        case Realization::k1: return k1;
        case Realization::k2_ns: return ns;
        case Realization::k2_r: return rr;
    }
    throw std::invalid_argument("unknown realization");
}

ModuleVector s_operator_mode(int sign, int eps, int k, int n, const ModuleVector& v) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<VertexOperators>> by_level;
    const VertexOperators* ops;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = by_level[k];
        if (!slot) slot = std::make_unique<VertexOperators>(k, 24);
        ops = slot.get();
    }
    return apply_linear([&](const TensorState& s) { return ops->s_mode(sign, eps, n, s); }, v);
}

ModuleVector x_current_mode(int eps, Realization r, int n, const ModuleVector& v) {
    return current_algebra(r).x_mode(eps, n, v);
}

ModuleVector psi_phi_current_mode(Current which, Realization r, int n, const ModuleVector& v) {
    const CurrentAlgebra& a = current_algebra(r);
    if (which == Current::psi) return a.psi_mode(n, v);
    if (which == Current::phi) return a.phi_mode(n, v);
    throw std::invalid_argument("expected Psi or Phi");
}

}  // namespace zq::vertex
