#include "zq/coeff/qfunctions.hpp"

#include <stdexcept>

namespace zq::coeff {

Scalar q_difference(QPower a) {
    return Scalar::q_power(a) - Scalar::q_power(a.inverse());
}

Scalar q_integer(int x) {
    return q_difference(QPower::of(x)) / q_difference(QPower::of(1));
}

mpq_class eval_at_q1(const Scalar& s) {
    // q = 1 is s = 1 for the principal square root
    const LaurentPoly& den = s.denominator();
    if (den.sum_of_coefficients() == 0) {
        throw PoleAtOne(root_multiplicity_at_one(den));
    }
    mpq_class v(s.numerator().sum_of_coefficients(), den.sum_of_coefficients());
    v.canonicalize();
    return v;
}

Scalar pochhammer_coeff(QPower a, QPower y, int m) {
    if (y.twice == 0) throw std::domain_error("pochhammer_coeff: base q^0 is not summable");
    if (m < 0) throw std::invalid_argument("pochhammer_coeff: negative order");
    if (m == 0) return Scalar(1);
    // (-1)^m a^m y^{m(m-1)/2} / prod_{i=1}^m (1 - y^i)
    Scalar num = Scalar::q_power(a.pow(m) * y.pow(m * (m - 1) / 2));
    if (m % 2 == 1) num = -num;
    Scalar den(1);
    for (int i = 1; i <= m; ++i) den *= Scalar(1) - Scalar::q_power(y.pow(i));
    return num / den;
}

}  // namespace zq::coeff
