#ifndef BRAUER_CYCLOTOMIC_HPP
#define BRAUER_CYCLOTOMIC_HPP

#include "brauer/int_polynomial.hpp"
#include "brauer/numeric.hpp"

namespace brauer {

/// The d-th cyclotomic polynomial, monic of degree phi(d), computed by exact
/// recursive division of x^d - 1 by Phi_e for the proper divisors e | d.
IntPolynomial cyclotomic(unsigned long d);

/// Phi_d(1) for d >= 2. Evaluated exactly through the divisor recursion
/// Phi_d(1) = d / prod_{1<e|d, e<d} Phi_e(1) and cross-checked against the
/// prime-power classification (p if d = p^i, else 1); a disagreement throws.
Int cyclotomic_at_one(unsigned long d);

/// The integer polynomial q^phi(d) t^phi(d) Phi_d(1/(q t)), whose reciprocal
/// roots are q times the primitive d-th roots of unity.
IntPolynomial scaled_cyclotomic_l_factor(unsigned long d, const Int& q);

}  // namespace brauer

#endif
