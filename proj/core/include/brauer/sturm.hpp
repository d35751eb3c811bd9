#ifndef BRAUER_STURM_HPP
#define BRAUER_STURM_HPP

#include <vector>

#include "brauer/int_polynomial.hpp"

namespace brauer {

struct RootCount {
    /// distinct real roots in the closed interval [lo, hi]
    long count = 0;
    bool lo_is_root = false;
    bool hi_is_root = false;
};

/// Sturm chain of f: f, f', then negated primitive pseudo-remainders.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& f);

/// Number of sign changes of the chain evaluated at x (zeros skipped).
long sign_variations(const std::vector<IntPolynomial>& chain, const Rat& x);

/// Distinct real roots of f in [lo, hi] via Sturm sequences over exact
/// rationals. Multiplicities are recoverable by repeated squarefree
/// reduction; endpoint roots are reported separately so callers can choose
/// open or closed semantics.
RootCount count_real_roots_in_interval(const IntPolynomial& f, const Rat& lo, const Rat& hi);

}  // namespace brauer

#endif
