#include "brauer/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace brauer {

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat pow_rat(const Rat& base, unsigned long exp) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    r.canonicalize();
    return r;
}

Int isqrt(const Int& n) {
    if (sign(n) < 0) throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int ceil_isqrt(const Int& n) {
    if (sign(n) <= 0) return 0;
    Int r = isqrt(n);
    if (r * r < n) r += 1;
    return r;
}

bool is_perfect_square(const Int& n) {
    return sign(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_prime(const Int& n) {
    // 2 = definitely prime, 1 = probably; reps=40 keeps the error margin
    // far below anything reachable at the sizes handled here
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<Int, unsigned long>> factor(const Int& n) {
    if (sign(n) <= 0) throw std::invalid_argument("factor: argument must be >= 1");
    std::vector<std::pair<Int, unsigned long>> out;
    Int m = n;
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            unsigned long e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::optional<PrimePower> as_prime_power(const Int& q) {
    if (q < 2) return std::nullopt;
    auto fac = factor(q);
    if (fac.size() != 1) return std::nullopt;
    return PrimePower{fac[0].first, fac[0].second};
}

unsigned long valuation(const Int& x, const Int& p) {
    if (sign(x) == 0) throw std::invalid_argument("valuation: zero argument");
    if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
    unsigned long v = 0;
    Int m = abs(x);
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

bool is_squarefree(const Int& n) {
    if (sign(n) == 0) return false;
    for (const auto& [p, e] : factor(abs(n)))
        if (e > 1) return false;
    return true;
}

bool is_fundamental_discriminant(const Int& d) {
    if (d == 1 || sign(d) == 0) return false;
    Int r = d % 4;
    if (r < 0) r += 4;
    if (r == 1) return is_squarefree(d);
    if (r == 0) {
        Int m = d / 4;
        Int rm = m % 4;
        if (rm < 0) rm += 4;
        return (rm == 2 || rm == 3) && is_squarefree(m);
    }
    return false;
}

unsigned long euler_phi(unsigned long n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be >= 1");
    unsigned long result = 1;
    for (const auto& [p, e] : factor(Int(n))) {
        unsigned long pl = p.get_ui();
        unsigned long pe = 1;
        for (unsigned long i = 1; i < e; ++i) pe *= pl;
        result *= pe * (pl - 1);
    }
    return result;
}

Int prime_power_lambda(unsigned long d) {
    if (d < 2) throw std::invalid_argument("prime_power_lambda: d must be >= 2");
    auto pp = as_prime_power(Int(d));
    return pp ? pp->p : Int(1);
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace brauer
