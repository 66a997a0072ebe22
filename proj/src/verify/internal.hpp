#pragma once

#include "zq/fock/actions.hpp"
#include "zq/verify/checks.hpp"
#include "zq/vertex/currents.hpp"
#include "zq/zalg/algebra.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace zq::verify::detail {

using coeff::QPower;
using fock::ModuleVector;
using fock::Rational;
using fock::Realization;
using fock::Scalar;
using fock::TensorState;

/// one coefficient on one test vector
using Job = std::function<Entry()>;

/// runs the jobs on the worker pool; the entries keep the job order
std::vector<Entry> run_jobs(const std::vector<Job>& jobs);

Entry compare(json coeff, std::string vector, const ModuleVector& lhs, const ModuleVector& rhs);
Entry compare(json coeff, std::string vector, const zalg::ZVector& lhs, const zalg::ZVector& rhs);
Entry compare(json coeff, std::string vector, const Scalar& lhs, const Scalar& rhs);

inline Scalar qp(int e) { return Scalar::q_power(e); }
inline Scalar qh(int twice) { return Scalar::q_power(QPower::half(twice)); }
/// 1 / (q - q^{-1})
Scalar inverse_q_gap();

inline ModuleVector unit(const TensorState& s) { return ModuleVector{{s, Scalar(1)}}; }

/// mode index n as json: integer, or "r/2" for half-integers given doubled
json twice_index(int twice);

/// everything a realized relation needs
struct Realized {
    RelationSpec spec;
    Realization r;
    int k;
    const vertex::CurrentAlgebra* ca;
    std::vector<TensorState> vectors;
    int w;

    Rational degree(const TensorState& s) const { return fock::degree(k, s); }
    /// largest j with degree(s) + base + j <= 0, or -1
    int annihilation_bound(const TensorState& s, int base) const;

    ModuleVector x(int eps, int n, const ModuleVector& v) const { return ca->x_mode(eps, n, v); }
    ModuleVector z(int eps, int n, const ModuleVector& v) const { return ca->z_mode(eps, n, v); }
    ModuleVector psi(int n, const ModuleVector& v) const { return n < 0 ? ModuleVector{} : ca->psi_mode(n, v); }
    ModuleVector phi(int n, const ModuleVector& v) const { return n > 0 ? ModuleVector{} : ca->phi_mode(n, v); }
    ModuleVector heis(int n, const ModuleVector& v) const { return fock::heis_act(n, k, v); }
    /// psi_{r} on the Clifford factor, r given doubled
    ModuleVector clifford(int twice, const ModuleVector& v) const;
};

Realized make_realized(const RelationSpec& spec);

/// Laurent polynomial sum c_{ij} z^i w^j
using Poly2 = std::map<std::pair<int, int>, Scalar>;
Poly2 operator*(const Poly2& a, const Poly2& b);

/// [z^{-a} w^{-b}] p(z,w) A(z) B(w) v, or p(z,w) B(w) A(z) v when b_first;
/// modes are doubled so that half-integer currents fit
using ModeOp = std::function<ModuleVector(int twice, const ModuleVector&)>;
ModuleVector poly_product(const Poly2& p, int twice_a, int twice_b, const ModeOp& A, const ModeOp& B, bool b_first,
                          const ModuleVector& v);

/// q^{d} A q^{-d} on a homogeneous input of degree `base`, from the output degrees;
/// throws when an output degree differs from base by a non half-integer
ModuleVector conjugate_by_degree(const Realized& ctx, const ModuleVector& out, Rational base);

// relation families; each returns the jobs of one check
std::vector<Job> drinfeld_jobs(const Realized& ctx);
std::vector<Job> zq_jobs(const Realized& ctx);
std::vector<Job> clifford_jobs(const Realized& ctx);
std::vector<Job> vertex_jobs(const Realized& ctx);

struct Abstract {
    RelationSpec spec;
    int k;
    const zalg::ZAlgebra* alg;
    std::vector<zalg::ZWord> vectors;
    int w;
    int floor;
};

std::vector<Job> abstract_jobs(const Abstract& ctx);

CheckReport finish(const RelationSpec& spec, std::vector<Entry> entries, double elapsed_ms);

}  // namespace zq::verify::detail
