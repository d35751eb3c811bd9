#include "brauer/cyclotomic.hpp"

#include <map>
#include <stdexcept>

namespace brauer {

namespace {

const IntPolynomial& cyclo_rec(unsigned long d, std::map<unsigned long, IntPolynomial>& memo) {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    IntPolynomial p = IntPolynomial::x_power_minus_one(d);
    for (unsigned long e : divisors(d)) {
        if (e == d) continue;
        p = p.divide_exact(cyclo_rec(e, memo));
    }
    return memo.emplace(d, std::move(p)).first->second;
}

Int phi_at_one_rec(unsigned long d, std::map<unsigned long, Int>& memo) {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    // from prod_{1 != e | d} Phi_e(1) = d
    Int value = d;
    for (unsigned long e : divisors(d)) {
        if (e == 1 || e == d) continue;
        value /= phi_at_one_rec(e, memo);
    }
    memo.emplace(d, value);
    return value;
}

}  // namespace

IntPolynomial cyclotomic(unsigned long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be >= 1");
    std::map<unsigned long, IntPolynomial> memo;
    IntPolynomial p = cyclo_rec(d, memo);
    if (p.degree() != euler_phi(d)) throw std::logic_error("cyclotomic: degree mismatch");
    return p;
}

Int cyclotomic_at_one(unsigned long d) {
    if (d < 2) throw std::invalid_argument("cyclotomic_at_one: d must be >= 2");
    std::map<unsigned long, Int> memo;
    Int direct = phi_at_one_rec(d, memo);
    Int classified = prime_power_lambda(d);
    if (direct != classified)
        throw std::logic_error("cyclotomic_at_one: evaluation disagrees with classification");
    return direct;
}

IntPolynomial scaled_cyclotomic_l_factor(unsigned long d, const Int& q) {
    if (q < 2) throw std::invalid_argument("scaled_cyclotomic_l_factor: q must be >= 2");
    const IntPolynomial phi = cyclotomic(d);
    const unsigned long m = phi.degree();
    std::vector<Int> out(m + 1);
    Int qk = 1;
    for (unsigned long k = 0; k <= m; ++k) {
        out[k] = phi.coeff(m - k) * qk;
        qk *= q;
    }
    return IntPolynomial(std::move(out));
}

}  // namespace brauer
