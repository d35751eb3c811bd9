#ifndef BRAUER_WEIL_HPP
#define BRAUER_WEIL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brauer/int_polynomial.hpp"
#include "brauer/numeric.hpp"

namespace brauer {

/// q-adic valuations of the reciprocal roots, normalized so v(q) = 1.
/// Sorted ascending; they pair up to sum to the weight.
struct NewtonSlopes {
    std::vector<Rat> slopes;
    int weight = 1;

    long p_rank() const;
    bool supersingular() const;
};

/// Outcome of the Weil-polynomial decision procedure. When `valid` is false,
/// `failed_check` names the stage that rejected the input.
struct WeilCertificate {
    bool valid = false;
    enum class Check {
        none,
        functional_equation,
        transform_inconsistent,
        roots_off_circle,
    } failed_check = Check::none;
    std::string detail;
};

/// Decides whether every complex root of the monic, even-degree f has
/// absolute value q^(weight/2): functional equation first, then the real
/// Weil transform, then exact Sturm root location on a rational interval.
WeilCertificate is_weil_polynomial(const IntPolynomial& f, const Int& q, int weight);

/// A validated Weil polynomial (all roots of absolute value q^(weight/2)).
class WeilPolynomial {
  public:
    /// Throws std::invalid_argument on precondition violations (odd degree,
    /// non-monic, q not a prime power) and std::domain_error when the
    /// polynomial fails the root-location test.
    static WeilPolynomial make(IntPolynomial f, Int q, int weight);
    static std::optional<WeilPolynomial> try_make(IntPolynomial f, Int q, int weight);
    /// Accepts the L-polynomial convention (constant term 1, ascending) and
    /// reverses internally.
    static WeilPolynomial from_l_polynomial(const IntPolynomial& l, const Int& q, int weight);

    const IntPolynomial& poly() const { return poly_; }
    const Int& q() const { return q_; }
    const Int& p() const { return p_; }
    unsigned long n_exp() const { return n_exp_; }
    int weight() const { return weight_; }
    unsigned long g() const { return g_; }
    /// t^2g * f(1/t), the associated L-polynomial.
    IntPolynomial l_polynomial() const;

  private:
    WeilPolynomial() = default;
    IntPolynomial poly_;
    Int q_, p_;
    unsigned long n_exp_ = 1;
    int weight_ = 1;
    unsigned long g_ = 0;
};

struct RealWeilTransform {
    /// R(y) = prod (y + b_i) where f(x) = prod (x^2 + b_i x + q^2)
    IntPolynomial r;
    /// h(x) = R(x - 2q) = prod (x - c_i), c_i = 2q - b_i
    IntPolynomial h;
};

/// Weight-2 only; f must not vanish at +-q (strip those factors first).
RealWeilTransform real_weil_transform(const WeilPolynomial& f);

struct TraceBoundVerdict {
    Int a1;          // coefficient of x^(2g-1)
    Int bound;       // g(2q - 1)
    bool has_plus_q_root = false;
    bool has_minus_q_root = false;
    bool within_bound = false;
};

/// Weight-2 trace bound: a1 > g(2q-1) forces f(-q) = 0; a violation of that
/// implication throws std::logic_error.
TraceBoundVerdict check_trace_bound(const WeilPolynomial& f);

NewtonSlopes newton_slopes(const WeilPolynomial& f);
/// Lower-level variant for raw polynomials with known (p, n_exp).
NewtonSlopes newton_slopes(const IntPolynomial& f, const Int& p, unsigned long n_exp, int weight);

/// L-polynomial split into scaled-cyclotomic factors and transcendental rest.
struct CycloDecomposition {
    /// d -> multiplicity of the factor with reciprocal roots {zeta_d * q}
    std::map<unsigned long, unsigned long> parts;
    /// residual transcendental part, an L-polynomial in t
    IntPolynomial ltr;
    Int q;

    unsigned long tau() const;  // sum over d >= 2 of a_d * phi(d)
};

/// Greedily and exhaustively divides out the factors with reciprocal roots
/// q * (root of unity), ascending d; the remainder is the transcendental
/// part. Requires P(0) = 1.
CycloDecomposition strip_cyclotomic_factors(const IntPolynomial& p_poly, const Int& q);

struct LtrValue {
    Rat value;         // L_tr(1/q), exact and positive
    Rat bound;         // ((4q-1)/q)^g
    bool within_bound = false;
};

LtrValue ltr_value(const CycloDecomposition& dec);

}  // namespace brauer

#endif
