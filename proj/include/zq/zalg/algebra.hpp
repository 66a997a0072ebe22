#pragma once

#include "zq/zalg/words.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace zq::zalg {

/// coefficients of f(eps,eps'|u) = sum a_n u^n and of 1/f = sum a~_n u^n
struct FCoeffs {
    int eps = 1, eps_prime = 1, k = 1;
    std::vector<Scalar> a;
    std::vector<Scalar> a_tilde;
};

FCoeffs f_coeffs(int eps, int eps_prime, int k, int order);

/// Z(eps_1,...,eps_s|n_1,...,n_s), the modes of prod_{i<j} f(eps_i,eps_j|z_j/z_i) Z(eps_1|z_1)...Z(eps_s|z_s)
struct CompositeZ {
    std::vector<int> eps;
    std::vector<int> n;

    std::size_t size() const { return eps.size(); }
    int degree() const;
    auto operator<=>(const CompositeZ&) const = default;
};

std::string to_string(const CompositeZ& c);

/// the vector a product acts on: its alpha(0) eigenvalue and degree
struct ChargeContext {
    int alpha0 = 0;
    int degree = 0;
};

/// (q^{kn + eps c} - q^{-kn - eps c}) / (q - q^{-1}) at alpha(0) = c
Scalar y_value(int eps, int n, int k, int alpha0);

/// raised when a rewrite would leave the truncated module or loops
class RewriteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Strategy { rightmost, leftmost };

/// s = 2 composites with a scalar identity remainder
struct CompositeSum {
    std::vector<std::pair<CompositeZ, Scalar>> terms;
    Scalar identity;
};

/// The Z_q algebra at level k acting on the generalized Verma module W(M).
/// Caches are guarded internally, so one instance may be shared across threads.
class ZAlgebra {
public:
    explicit ZAlgebra(int k, long step_budget = 2'000'000);

    int level() const { return k_; }

    Scalar a(int eps, int eps_prime, int n) const;
    Scalar a_tilde(int eps, int eps_prime, int n) const;

    /// sum_n a_n Z(eps|n1-n) Z(eps'|n2+n), keeping the terms with n2+n+ctx.degree <= 0;
    /// the empty word marks no term.  A composite whose degree lands below the floor is 0.
    ZVector composite_to_modes(const CompositeZ& c, ChargeContext ctx, std::optional<int> floor) const;
    /// sum_n a~_n Z(eps,eps'|n1-n,n2+n) under the same bound
    std::vector<std::pair<CompositeZ, Scalar>> modes_to_composite(ZMode first, ZMode second, ChargeContext ctx,
                                                                  std::optional<int> floor) const;
    /// opposite signs: the exchange Z(e,-e|m1,m2) = Z(-e,e|m2,m1) + Y(e|m1)[m1+m2=0];
    /// equal signs: Z(e,e|m1,m2) with m1 > m2 rewritten into composites with m1 <= m2
    CompositeSum swap_composite(const CompositeZ& c, ChargeContext ctx) const;

    /// a two-letter product on a vector of the given context as a sum of H-ordered pairs
    /// (and the empty word for scalar terms)
    ZVector rewrite_pair(ZMode first, ZMode second, ChargeContext ctx) const;

    /// Z(eps|n) on an H-normal vector
    ZVector act(ZMode m, const ZVector& v) const;
    ZVector act(ZMode m, const ZWord& normal_word) const;

    /// w v0 in H-normal form; words of degree below the floor are cut to 0, and an
    /// intermediate vector below the floor raises RewriteError
    ZVector normal_order(const ZWord& w, int floor, Strategy strategy = Strategy::rightmost) const;

    /// Z(eps_1..eps_s|n_1..n_s) on an H-normal vector
    ZVector apply_composite(const CompositeZ& c, const ZVector& v) const;

    /// Psi_0 = q^{alpha(0)} (sign +) or Phi_0 = q^{-alpha(0)} (sign -)
    static ZVector zero_mode(int sign, const ZVector& v);

private:
    // Z(e,e|d + x, x) = sum_t c_t Z(e,e|x + t, x + d - t), d > 0
    const std::vector<std::pair<int, Scalar>>& same_sign_swap(int eps, int d) const;
    void ensure_order(int eps, int eps_prime, int n) const;
    ZVector leftmost(const ZWord& w, int floor, long& steps, std::map<ZWord, ZVector>& memo) const;
    void expand_normal_composite(const CompositeZ& c, ChargeContext ctx, const Scalar& weight, ZVector& out) const;

    int k_;
    long step_budget_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, FCoeffs> f_;
    mutable std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> swap_;
    mutable std::map<std::pair<ZMode, ZWord>, ZVector> act_memo_;
    mutable std::set<std::pair<ZMode, ZWord>> in_progress_;
};

/// shared instance per level
const ZAlgebra& z_algebra(int k);

/// one side of an identity: sum of c * composite * (zero mode) terms
struct OperatorTerm {
    Scalar coeff;
    CompositeZ composite;  // may be empty: identity
    int zero_mode = 0;     // +1 Psi_0, -1 Phi_0, 0 none (acts first)
};

struct GqcrIdentity {
    std::vector<OperatorTerm> lhs;
    std::vector<OperatorTerm> rhs;
};

enum class GqcrKind { first, second };

/// Mode-level generalized commutation relation at position r (1-based, swapping r and r+1).
/// first kind needs eps_r = -eps_{r+1}, second kind eps_r = eps_{r+1}.
GqcrIdentity gqcr_expand(GqcrKind kind, const std::vector<int>& eps, const std::vector<int>& n, int r, int k);

ZVector evaluate(const ZAlgebra& alg, const std::vector<OperatorTerm>& side, const ZVector& v);

struct ClassicalLimit {
    /// q = 1 values of the quantum right-hand side, keyed by the remaining mode list
    std::map<std::vector<int>, mpq_class> quantum;
    /// the classical formula
    std::map<std::vector<int>, mpq_class> classical;
    bool matches = false;
};

/// evaluates a gqcr instance at q = 1 on a vector of alpha(0) eigenvalue h; throws coeff::PoleAtOne
ClassicalLimit classical_limit_gqcr(GqcrKind kind, const std::vector<int>& eps, const std::vector<int>& n, int r,
                                    int k, int h);

}  // namespace zq::zalg
