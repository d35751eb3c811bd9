#include "brauer/sturm.hpp"

#include <stdexcept>

namespace brauer {

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
    std::vector<IntPolynomial> chain;
    chain.push_back(f);
    if (f.degree() == 0) return chain;
    chain.push_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const IntPolynomial& a = chain[chain.size() - 2];
        const IntPolynomial& b = chain.back();
        IntPolynomial r = a.signed_pseudo_rem(b);
        if (r.is_zero()) break;
        // primitive-part normalization keeps coefficient growth in check
        chain.push_back(-r.primitive_part());
    }
    return chain;
}

long sign_variations(const std::vector<IntPolynomial>& chain, const Rat& x) {
    long changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = p.is_zero() ? 0 : sign(p.evaluate(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

RootCount count_real_roots_in_interval(const IntPolynomial& f, const Rat& lo, const Rat& hi) {
    if (f.is_zero()) throw std::invalid_argument("count_real_roots_in_interval: zero polynomial");
    if (lo > hi) throw std::invalid_argument("count_real_roots_in_interval: lo > hi");

    IntPolynomial g = f.squarefree_part();
    RootCount rc;
    rc.lo_is_root = !g.is_zero() && g.degree() >= 1 && sign(g.evaluate(lo)) == 0;
    rc.hi_is_root = (lo != hi) ? (g.degree() >= 1 && sign(g.evaluate(hi)) == 0) : rc.lo_is_root;

    if (lo == hi) {
        rc.count = rc.lo_is_root ? 1 : 0;
        return rc;
    }

    // deflate endpoint roots so the classical statement (no roots at the
    // evaluation points) applies to the remaining open interval
    if (rc.lo_is_root) g = g.strip_rational_root(lo).first;
    if (rc.hi_is_root && g.degree() >= 1 && sign(g.evaluate(hi)) == 0)
        g = g.strip_rational_root(hi).first;

    long interior = 0;
    if (!g.is_zero() && g.degree() >= 1) {
        auto chain = sturm_chain(g);
        interior = sign_variations(chain, lo) - sign_variations(chain, hi);
    }
    rc.count = interior + (rc.lo_is_root ? 1 : 0) + (rc.hi_is_root ? 1 : 0);
    return rc;
}

}  // namespace brauer
