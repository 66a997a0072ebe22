#pragma once

#include "zq/coeff/scalar.hpp"

#include <gmpxx.h>

namespace zq::coeff {

/// [x] = (q^x - q^{-x}) / (q - q^{-1})
Scalar q_integer(int x);

/// q^a - q^{-a} for a given as a QPower exponent
Scalar q_difference(QPower a);

/// Value at q = 1 after cancellation; throws PoleAtOne with the pole order.
mpq_class eval_at_q1(const Scalar& s);

/// Coefficient of x^m in (a x; y)_inf = prod_{n>=0} (1 - a x y^n).
Scalar pochhammer_coeff(QPower a, QPower y, int m);

}  // namespace zq::coeff
