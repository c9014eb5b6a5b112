#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "padicgamma/padic.hpp"
#include "padicgamma/polynomial.hpp"

namespace padicgamma {

// Exponent vector (a_0, ..., a_n) of a monomial Y0^a0 ... Yn^an.
using ExponentVector = std::vector<std::uint32_t>;

// Antilexicographic order: the rightmost differing entry decides, larger
// entry wins, so Y0 < Y1 < ... < Yn and the constant monomial is minimal.
// Equivalently: alpha > beta iff the rightmost nonzero entry of the vector
// difference alpha - beta is positive.
std::strong_ordering antilex_compare(const ExponentVector& a, const ExponentVector& b);

std::uint32_t total_degree(const ExponentVector& a);

struct AntilexDescending {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return antilex_compare(a, b) == std::strong_ordering::greater;
    }
};

// X-rational function, reduced to lowest terms with a monic denominator.
struct RationalFunction {
    RationalPolynomial num;
    RationalPolynomial den;
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

RationalFunction make_rational_function(RationalPolynomial num, RationalPolynomial den);

// Differential polynomial P(X, Y0, ..., Yn): a term map from exponent
// vectors (length n+1, n the ambient order) to exact-rational coefficient
// polynomials in X. Zero coefficients are never stored; the zero polynomial
// has an empty map. Terms are kept antilex-descending, so the leading term
// is the first entry and formatting is canonical by construction.
class DifferentialPolynomial {
  public:
    using TermMap = std::map<ExponentVector, RationalPolynomial, AntilexDescending>;

    explicit DifferentialPolynomial(std::uint32_t order = 0) : order_(order) {}
    static DifferentialPolynomial monomial(RationalPolynomial coeff, ExponentVector alpha);

    std::uint32_t order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const ExponentVector& alpha, const RationalPolynomial& coeff);

    // Same polynomial viewed with ambient order n >= order().
    DifferentialPolynomial with_order(std::uint32_t n) const;

    std::pair<ExponentVector, RationalPolynomial> leading_term() const;

    friend DifferentialPolynomial operator+(const DifferentialPolynomial& a,
                                            const DifferentialPolynomial& b);
    friend DifferentialPolynomial operator-(const DifferentialPolynomial& a,
                                            const DifferentialPolynomial& b);
    friend DifferentialPolynomial operator*(const DifferentialPolynomial& a,
                                            const DifferentialPolynomial& b);
    DifferentialPolynomial operator-() const;
    DifferentialPolynomial scaled(const RationalPolynomial& c) const;
    DifferentialPolynomial pow(std::uint32_t e) const;

    // Structural equality after lifting both sides to a common ambient order.
    friend bool operator==(const DifferentialPolynomial& a, const DifferentialPolynomial& b);

  private:
    std::uint32_t order_;
    TermMap terms_;
};

// The Q construction: X -> X+p and Y_k -> sum_{j<=k} C(k,j) f^(k-j)(X) Y_j
// with f = f_poly(p); the image of the jet of g at x under the p-step
// recurrence. Ring homomorphism; expanded and normalized.
DifferentialPolynomial shift_transform(const DifferentialPolynomial& P, const Prime& p);

// LT(shift_transform(P)) == (alpha, q(X+p) * f^(|alpha|)) for LT(P) = (alpha, q).
bool lt_identity_check(const DifferentialPolynomial& P, const Prime& p);

// R(X) = q(X+p)/q(X) * f(X)^|alpha| for the leading term (alpha, q) of P.
RationalFunction compute_R(const DifferentialPolynomial& P, const Prime& p);

// The X-rational factor with Q = R * P, when one exists.
RationalFunction exact_divide(const DifferentialPolynomial& Q, const DifferentialPolynomial& P);

// Coefficients evaluated at X = x0; terms with a positive Y0 power dropped
// when set_y0_zero. The result has constant coefficients.
DifferentialPolynomial partial_evaluate(const DifferentialPolynomial& P, const BigRat& x0,
                                        bool set_y0_zero);

// P(x, jet_0, ..., jet_n) with exact coefficients mapped into Q_p.
PadicNumber evaluate(const DifferentialPolynomial& P, const PadicNumber& x,
                     std::span<const PadicNumber> jet);

} // namespace padicgamma
