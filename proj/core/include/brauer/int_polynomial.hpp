#ifndef BRAUER_INT_POLYNOMIAL_HPP
#define BRAUER_INT_POLYNOMIAL_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauer/numeric.hpp"

namespace brauer {

/// Dense univariate polynomial with exact integer coefficients, stored in
/// ascending degree. Canonical form: no trailing zero coefficients; the zero
/// polynomial has an empty coefficient vector and no degree (degree() throws
/// rather than returning -1 into arithmetic).
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> ascending);
    IntPolynomial(std::initializer_list<long> ascending);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(Int c);
    static IntPolynomial monomial(Int c, unsigned long k);
    /// x^n - 1
    static IntPolynomial x_power_minus_one(unsigned long n);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// Degree of a nonzero polynomial; throws std::logic_error on zero.
    unsigned long degree() const;
    const Int& leading() const;
    /// Coefficient of x^k (zero beyond the degree).
    const Int& coeff(unsigned long k) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& c) const;

    IntPolynomial pow(unsigned long e) const;

    Int evaluate(const Int& x) const;
    Rat evaluate(const Rat& x) const;

    IntPolynomial derivative() const;

    /// gcd of |coefficients|, positive; content of the zero polynomial is 0.
    Int content() const;
    /// this / content, keeping the sign of the leading coefficient.
    IntPolynomial primitive_part() const;

    /// Exact division in Z[x]; nullopt when the quotient does not exist.
    std::optional<IntPolynomial> try_divide(const IntPolynomial& divisor) const;
    /// Exact division that must succeed; throws std::domain_error otherwise.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    /// Pseudo-remainder adjusted so that it equals the true remainder of
    /// this by divisor up to a positive rational factor.
    IntPolynomial signed_pseudo_rem(const IntPolynomial& divisor) const;

    /// Primitive gcd with positive leading coefficient.
    static IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

    /// Product of the distinct irreducible factors: this / gcd(this, this'),
    /// primitive with positive leading coefficient.
    IntPolynomial squarefree_part() const;

    /// x^target_deg * P(1/x); requires target_deg >= degree.
    IntPolynomial reverse(unsigned long target_deg) const;

    /// P(x + c)
    IntPolynomial shift(const Int& c) const;

    /// A, B with P(x) = A(x^2) + x B(x^2)
    std::pair<IntPolynomial, IntPolynomial> even_odd_parts() const;

    /// Multiplicity of the rational root r (0 if not a root).
    unsigned long root_multiplicity(const Rat& r) const;
    /// Divides out (den*x - num)^k for the rational root r = num/den of
    /// multiplicity exactly k; returns the quotient and k.
    std::pair<IntPolynomial, unsigned long> strip_rational_root(const Rat& r) const;

    /// Canonical rendering: explicit signs, '^' powers, unit coefficients
    /// omitted. Descending order suits Weil polynomials, ascending suits
    /// L-polynomials.
    std::string to_string(const std::string& var = "x", bool ascending = false) const;

  private:
    void normalize();
    std::vector<Int> coeffs_;
};

IntPolynomial operator*(const Int& c, const IntPolynomial& p);

}  // namespace brauer

#endif
