#pragma once

#include "zq/fock/actions.hpp"
#include "zq/fock/state.hpp"
#include "zq/formal/series.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

namespace zq::vertex {

using fock::ModuleVector;
using fock::Rational;
using fock::Realization;
using fock::Scalar;
using fock::TensorState;

enum class Current { s_plus, s_minus, x, psi, phi, z };

std::string to_string(Current c);

/// One mode of a current as a linear map with its declared grading.
struct OperatorMode {
    std::string label;
    Current current;
    int epsilon = 0;
    Realization realization;
    int mode = 0;
    int degree_shift = 0;
    int twice_charge_shift = 0;
    std::function<ModuleVector(const ModuleVector&)> action;

    ModuleVector operator()(const ModuleVector& v) const { return action(v); }
};

/// Applies a state-level map linearly.
ModuleVector apply_linear(const std::function<ModuleVector(const TensorState&)>& f, const ModuleVector& v);

/// Mode tables of the vertex operators S^+-_eps and their inverses at one level.
class VertexOperators {
public:
    VertexOperators(int level, int max_order);

    int level() const { return level_; }

    /// S^+_eps: coefficient of z^{-n}; S^-_eps: coefficient of z^{n}; n >= 0
    ModuleVector s_mode(int sign, int eps, int n, const TensorState& s) const;
    /// the same coefficient of (S^+-_eps(z))^{-1}, from the negated exponent
    ModuleVector s_inverse_mode(int sign, int eps, int n, const TensorState& s) const;
    /// the same coefficient of S^+-_eps(z c), c = q^{twice_shift/2}
    ModuleVector s_mode_rescaled(int sign, int eps, int n, int twice_shift, const TensorState& s) const;

private:
    const fock::HeisenbergExponential& table(int sign, int eps, bool inverse) const;

    int level_;
    // index: sign (0 '+', 1 '-'), eps (0 '+', 1 '-'), inverse
    std::unique_ptr<fock::HeisenbergExponential> tables_[2][2][2];
};

/// The currents X(eps|z), Psi(z), Phi(z), Z(eps|z) realized on one module.
/// Memoizes X modes on basis states; safe for concurrent use.
class CurrentAlgebra {
public:
    explicit CurrentAlgebra(Realization r, int max_order = 24);

    Realization realization() const { return realization_; }
    int level() const { return ops_.level(); }
    const VertexOperators& vertex_operators() const { return ops_; }

    /// throws std::invalid_argument when s does not belong to the realization
    void require_member(const TensorState& s) const;

    /// coefficient of z^{-n} in X(eps|z) = E^-_eps(z) E^+_eps(z) Z(eps|z), E = S^{-1}
    ModuleVector x_mode(int eps, int n, const TensorState& s) const;
    /// the same mode through S^-_{-eps}(z q^{-eps k}) S^+_{-eps}(z q^{eps k}) Z(eps|z)
    ModuleVector x_mode_factorized(int eps, int n, const TensorState& s) const;
    /// Psi_n (n >= 0) and Phi_n (n <= 0)
    ModuleVector psi_mode(int n, const TensorState& s) const;
    ModuleVector phi_mode(int n, const TensorState& s) const;
    /// coefficient of z^{-n} in Z(eps|z), the lattice (and Clifford) factor of X
    ModuleVector z_mode(int eps, int n, const TensorState& s) const;

    ModuleVector x_mode(int eps, int n, const ModuleVector& v) const;
    ModuleVector psi_mode(int n, const ModuleVector& v) const;
    ModuleVector phi_mode(int n, const ModuleVector& v) const;
    ModuleVector z_mode(int eps, int n, const ModuleVector& v) const;

    OperatorMode x(int eps, int n) const;
    OperatorMode x_factorized(int eps, int n) const;
    OperatorMode psi(int n) const;
    OperatorMode phi(int n) const;
    OperatorMode z(int eps, int n) const;

private:
    template <class Route>
    ModuleVector assemble_x(int eps, int n, const TensorState& s, Route&& route) const;

    Realization realization_;
    VertexOperators ops_;
    fock::HeisenbergExponential psi_exp_;
    fock::HeisenbergExponential phi_exp_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<int, int, TensorState>, ModuleVector> x_cache_;
};

/// shared instance per realization
const CurrentAlgebra& current_algebra(Realization r);

ModuleVector s_operator_mode(int sign, int eps, int k, int n, const ModuleVector& v);
ModuleVector x_current_mode(int eps, Realization r, int n, const ModuleVector& v);
ModuleVector psi_phi_current_mode(Current which, Realization r, int n, const ModuleVector& v);

/// coefficient of b(+-m) u^m in the exponent of S^+-_eps
Scalar s_exponent_coefficient(int sign, int eps, int k, int m);

/// [A, B] for A the exponent of S^{sign_a}_{eps_a}(z) and B that of
/// S^{sign_b}_{eps_b}(w): a scalar series in "w/z" (or "z/w" when sign_a is -),
/// identically zero for equal signs
formal::Series exponent_commutator(int sign_a, int eps_a, int sign_b, int eps_b, int k, int order);

}  // namespace zq::vertex
