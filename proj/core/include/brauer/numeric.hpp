#ifndef BRAUER_NUMERIC_HPP
#define BRAUER_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace brauer {

// All arithmetic in this library is exact: arbitrary-precision integers
// and rationals, no floating point on any decision path.
using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

Int pow_int(const Int& base, unsigned long exp);
Rat pow_rat(const Rat& base, unsigned long exp);

// floor(sqrt(n)); n >= 0
Int isqrt(const Int& n);
// smallest m >= 0 with m*m >= n
Int ceil_isqrt(const Int& n);
bool is_perfect_square(const Int& n);

bool is_prime(const Int& n);

struct PrimePower {
    Int p;
    unsigned long exp;
};
// q = p^exp with p prime, exp >= 1; nullopt otherwise
std::optional<PrimePower> as_prime_power(const Int& q);

// trial-division factorization, smallest prime first; n >= 1
std::vector<std::pair<Int, unsigned long>> factor(const Int& n);

// exponent of p in x; x != 0
unsigned long valuation(const Int& x, const Int& p);

bool is_squarefree(const Int& n);

// discriminant of the maximal order of a quadratic field
bool is_fundamental_discriminant(const Int& d);

unsigned long euler_phi(unsigned long n);

// lambda(d) = p if d = p^t is a prime power, 1 otherwise
Int prime_power_lambda(unsigned long d);

std::vector<unsigned long> divisors(unsigned long n);

}  // namespace brauer

#endif
