#include "brauer/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace brauer {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Int> ascending) : coeffs_(std::move(ascending)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long c : ascending) coeffs_.emplace_back(c);
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial p;
    p.coeffs_.push_back(std::move(c));
    p.normalize();
    return p;
}

IntPolynomial IntPolynomial::monomial(Int c, unsigned long k) {
    IntPolynomial p;
    if (sign(c) != 0) {
        p.coeffs_.assign(k + 1, Int(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

IntPolynomial IntPolynomial::x_power_minus_one(unsigned long n) {
    IntPolynomial p;
    p.coeffs_.assign(n + 1, Int(0));
    p.coeffs_[0] = -1;
    p.coeffs_[n] = 1;
    return p;
}

unsigned long IntPolynomial::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

const Int& IntPolynomial::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const Int& IntPolynomial::coeff(unsigned long k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) + o.coeff(i);
    r.normalize();
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    IntPolynomial r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) - o.coeff(i);
    r.normalize();
    return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    IntPolynomial r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sign(coeffs_[i]) == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.normalize();
    return r;
}

IntPolynomial IntPolynomial::operator*(const Int& c) const {
    if (sign(c) == 0) return IntPolynomial();
    IntPolynomial r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

IntPolynomial operator*(const Int& c, const IntPolynomial& p) { return p * c; }

IntPolynomial IntPolynomial::pow(unsigned long e) const {
    IntPolynomial r = constant(1);
    IntPolynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (is_zero() || degree() == 0) return IntPolynomial();
    IntPolynomial r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_[i - 1] = Int(i) * coeffs_[i];
    r.normalize();
    return r;
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return IntPolynomial();
    Int g = content();
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c /= g;
    return r;
}

std::optional<IntPolynomial> IntPolynomial::try_divide(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (is_zero()) return IntPolynomial();
    const unsigned long dd = divisor.degree();
    if (degree() < dd) return std::nullopt;

    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(degree() - dd + 1, Int(0));
    for (size_t i = rem.size(); i-- > dd;) {
        if (sign(rem[i]) == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(),
                    divisor.leading().get_mpz_t());
        if (sign(r) != 0) return std::nullopt;
        quot[i - dd] = q;
        for (size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
    }
    for (size_t j = 0; j < dd; ++j)
        if (sign(rem[j]) != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    auto q = try_divide(divisor);
    if (!q) throw std::domain_error("divide_exact: not divisible");
    return *q;
}

IntPolynomial IntPolynomial::signed_pseudo_rem(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("pseudo-remainder by zero");
    if (is_zero() || degree() < divisor.degree()) return *this;

    const unsigned long dd = divisor.degree();
    const Int& lead = divisor.leading();
    IntPolynomial r = *this;
    unsigned long steps = 0;
    while (!r.is_zero() && r.degree() >= dd) {
        const Int c = r.leading();
        const unsigned long s = r.degree() - dd;
        r = r * lead - monomial(c, s) * divisor;
        ++steps;
    }
    // r equals lead^steps times the true remainder; fix the sign so r is a
    // positive multiple of it
    if (sign(lead) < 0 && steps % 2 == 1) r = -r;
    return r;
}

IntPolynomial IntPolynomial::gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial x = a, y = b;
    if (x.is_zero()) std::swap(x, y);
    if (x.is_zero()) return IntPolynomial();
    x = x.primitive_part();
    if (!y.is_zero()) y = y.primitive_part();
    while (!y.is_zero()) {
        IntPolynomial r = x.signed_pseudo_rem(y);
        x = y;
        y = r.is_zero() ? r : r.primitive_part();
    }
    if (sign(x.leading()) < 0) x = -x;
    return x;
}

IntPolynomial IntPolynomial::squarefree_part() const {
    if (is_zero()) throw std::logic_error("squarefree part of the zero polynomial");
    if (degree() == 0) return constant(1);
    IntPolynomial g = gcd(*this, derivative());
    IntPolynomial q = primitive_part().divide_exact(g).primitive_part();
    if (sign(q.leading()) < 0) q = -q;
    return q;
}

IntPolynomial IntPolynomial::reverse(unsigned long target_deg) const {
    if (is_zero()) return IntPolynomial();
    if (target_deg < degree()) throw std::invalid_argument("reverse: target degree too small");
    std::vector<Int> out(target_deg + 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[target_deg - i] = coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shift(const Int& c) const {
    if (is_zero()) return IntPolynomial();
    const IntPolynomial lin(std::vector<Int>{c, Int(1)});  // x + c
    IntPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + constant(*it);
    return acc;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::even_odd_parts() const {
    std::vector<Int> ev, od;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        (i % 2 == 0 ? ev : od).push_back(coeffs_[i]);
    return {IntPolynomial(std::move(ev)), IntPolynomial(std::move(od))};
}

unsigned long IntPolynomial::root_multiplicity(const Rat& r) const {
    return strip_rational_root(r).second;
}

std::pair<IntPolynomial, unsigned long> IntPolynomial::strip_rational_root(const Rat& r) const {
    if (is_zero()) throw std::logic_error("rational root of the zero polynomial");
    const IntPolynomial lin(std::vector<Int>{-Int(r.get_num()), Int(r.get_den())});
    IntPolynomial p = *this;
    unsigned long k = 0;
    while (p.degree() >= 1 && sign(p.evaluate(r)) == 0) {
        // den*x - num is primitive, so it divides the primitive part in Z[x]
        const Int cont = p.content();
        p = p.primitive_part().divide_exact(lin) * cont;
        ++k;
        if (p.is_zero()) throw std::logic_error("strip_rational_root: degenerate quotient");
        if (p.degree() == 0) break;
    }
    return {p, k};
}

std::string IntPolynomial::to_string(const std::string& var, bool ascending) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](size_t i) {
        const Int& c = coeffs_[i];
        if (sign(c) == 0) return;
        Int a = abs(c);
        if (first) {
            if (sign(c) < 0) os << "-";
            first = false;
        } else {
            os << (sign(c) < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << var;
            if (i > 1) os << "^" << i;
        }
    };
    if (ascending) {
        for (size_t i = 0; i < coeffs_.size(); ++i) emit(i);
    } else {
        for (size_t i = coeffs_.size(); i-- > 0;) emit(i);
    }
    return os.str();
}

}  // namespace brauer
