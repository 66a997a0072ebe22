#pragma once

#include "zq/fock/state.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace zq::fock {

/// [b(n), b(-n)] = (q^{2n} - q^{-2n})(q^{kn} - q^{-kn}) / n
Scalar heisenberg_bracket(int n, int k);

/// b(n) = t alpha(n); n < 0 creates a part, n > 0 differentiates
ModuleVector heis_act(int n, int k, const ModuleVector& v);
ModuleVector heis_act(int n, int k, const TensorState& s);

enum class LatticeQuery { alpha0, z_exponent, degree };

/// e^{by_alpha * alpha} on the lattice factor
TensorState lattice_shift(const TensorState& s, int by_alpha);
/// alpha(0) eigenvalue, the exponent c*alpha(0) of z^{c alpha(0)}, or the q^d eigenvalue
Rational lattice_act(LatticeQuery query, int k, LatticePoint p, Rational c = 1);

using WeightedWords = std::vector<std::pair<CliffordWord, Scalar>>;

/// psi_r on a word, r given doubled; psi_0 is (-1)^{length} times the spin swap
WeightedWords clifford_act(int twice_mode, const CliffordWord& w);

/// psi_r on the Clifford factor of a state
ModuleVector clifford_act(int twice_mode, const TensorState& s);

struct DegreeWindow {
    Rational lo, hi;
};
struct ChargeWindow {
    Rational lo, hi;
};

/// basis states of the realization with degree and charge inside the windows,
/// ordered by charge, then decreasing degree, then lexicographically
std::vector<TensorState> slice_basis(Realization r, DegreeWindow degrees, ChargeWindow charges);

/// whether a lattice point belongs to the realization (P, Q, or Q + alpha/2)
bool admits(Realization r, LatticePoint p);

/// exp(sum_{m >= 1} c_m b(+-m) u^m) restricted to its u^p coefficient, acting on
/// Fock basis vectors.  Coefficient tables are built eagerly up to max_order,
/// so instances are immutable and shareable.
class HeisenbergExponential {
public:
    HeisenbergExponential(int level, bool annihilating, const std::function<Scalar(int)>& c, int max_order);

    bool annihilating() const { return annihilating_; }
    int max_order() const { return max_order_; }
    std::vector<std::pair<Partition, Scalar>> apply(int p, const Partition& lambda) const;

private:
    // power_[m][j] = (c_m w_m)^j binomial-ready (annihilating) or c_m^j / j! (creating)
    int level_;
    bool annihilating_;
    int max_order_;
    std::vector<std::vector<Scalar>> power_;
};

}  // namespace zq::fock
