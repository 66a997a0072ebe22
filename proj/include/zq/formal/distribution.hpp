#pragma once

#include "zq/coeff/scalar.hpp"
#include "zq/formal/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace zq::formal {

struct Window2 {
    int zlo, zhi, wlo, whi;

    static Window2 square(int w) { return {-w, w, -w, w}; }
    bool contains(int n, int m) const { return zlo <= n && n <= zhi && wlo <= m && m <= whi; }
};

/// Two-variable formal distribution sum c_{n,m} z^n w^m, stored on a finite
/// support.  The flags record whether the series it stands for is unbounded
/// in both directions of a variable.
class Distribution2 {
public:
    Distribution2(Window2 window, bool bilateral_z, bool bilateral_w);

    const Window2& window() const { return window_; }
    bool bilateral_z() const { return bilateral_z_; }
    bool bilateral_w() const { return bilateral_w_; }
    const std::map<std::pair<int, int>, Scalar>& terms() const { return coeffs_; }

    /// zero off the stored support; throws WindowError outside the window
    Scalar coefficient(int n, int m) const;
    void set(int n, int m, Scalar c);

private:
    Window2 window_;
    bool bilateral_z_;
    bool bilateral_w_;
    std::map<std::pair<int, int>, Scalar> coeffs_;
};

/// delta(z w^{-1} a) = sum_n a^n z^n w^{-n} on the window
Distribution2 delta(QPower shift, Window2 window);

/// The two one-directional halves of delta(x): sum_{n>=0} x^n in "x" and
/// sum_{n>=1} x^{-n} in "1/x", both to `order`.
std::pair<Series, Series> delta_halves(QPower shift, int order);

struct DeltaEntry {
    int n, m;
    Scalar product;         // coefficient of G(z,w) delta(a z/w)
    Scalar substituted_w;   // coefficient of G(z, a z) delta(a z/w)
    Scalar substituted_z;   // coefficient of G(a^{-1} w, w) delta(a z/w)
    bool equal;
};

struct DeltaWitness {
    std::vector<DeltaEntry> entries;
    bool passed = true;
};

/// Checks G(z,w) delta(a z/w) = G(z, a z) delta(a z/w) = G(a^{-1}w, w) delta(a z/w)
/// coefficient-wise on `window`.  G must be one-directional in some variable.
DeltaWitness delta_substitute(const Distribution2& g, QPower shift, Window2 window);

}  // namespace zq::formal
