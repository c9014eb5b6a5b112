#pragma once

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "padicgamma/errors.hpp"
#include "padicgamma/padic.hpp"

namespace padicgamma {

// Dense univariate polynomial over an exact coefficient ring (BigInt or
// BigRat here). Coefficients ascending, normalized: no stored trailing
// zeros, degree() of the zero polynomial is -1.
template <class T>
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> ascending) : coeffs_(ascending) { normalize(); }

    static Polynomial from_coeffs(std::vector<T> ascending) {
        Polynomial r;
        r.coeffs_ = std::move(ascending);
        r.normalize();
        return r;
    }
    static Polynomial constant(T c) { return from_coeffs({std::move(c)}); }
    static Polynomial variable() { return from_coeffs({T(0), T(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
    const T& leading() const {
        if (is_zero()) throw zero_polynomial("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    bool is_constant() const { return coeffs_.size() <= 1; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return from_coeffs(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    Polynomial operator-() const {
        std::vector<T> c(coeffs_);
        for (auto& x : c) x = -x;
        return from_coeffs(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coeffs(std::move(c));
    }
    friend Polynomial operator*(const T& s, const Polynomial& a) {
        std::vector<T> c(a.coeffs_);
        for (auto& x : c) x *= s;
        return from_coeffs(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    Polynomial derivative(unsigned order = 1) const {
        Polynomial r = *this;
        for (unsigned k = 0; k < order; ++k) {
            if (r.coeffs_.size() <= 1) return Polynomial();
            std::vector<T> c(r.coeffs_.size() - 1);
            for (std::size_t i = 1; i < r.coeffs_.size(); ++i) c[i - 1] = T(i) * r.coeffs_[i];
            r = from_coeffs(std::move(c));
        }
        return r;
    }

    T eval(const T& x) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // P(X + c), exact Horner-style rewrite.
    Polynomial shift(const T& c) const {
        Polynomial acc;
        Polynomial lin = from_coeffs({c, T(1)});
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * lin + constant(*it);
        return acc;
    }

    Polynomial pow(std::uint64_t e) const {
        Polynomial acc = constant(T(1));
        for (std::uint64_t i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<BigRat>;

inline RationalPolynomial lift(const IntPolynomial& p) {
    std::vector<BigRat> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return RationalPolynomial::from_coeffs(std::move(c));
}

// Monic gcd over the rationals (plain Euclid; sizes here are tiny).
inline RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        // a mod b by long division
        RationalPolynomial r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            BigRat q = r.leading() / b.leading();
            std::vector<BigRat> shift(static_cast<std::size_t>(r.degree() - b.degree()), BigRat(0));
            shift.push_back(q);
            r = r - RationalPolynomial::from_coeffs(std::move(shift)) * b;
        }
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return (BigRat(1) / a.leading()) * a;
}

// Quotient of an exact division; throws when the division leaves a remainder.
inline RationalPolynomial poly_exact_div(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    RationalPolynomial r = a, q;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        BigRat c = r.leading() / b.leading();
        std::vector<BigRat> shift(static_cast<std::size_t>(r.degree() - b.degree()), BigRat(0));
        shift.push_back(c);
        auto s = RationalPolynomial::from_coeffs(std::move(shift));
        q = q + s;
        r = r - s * b;
    }
    if (!r.is_zero()) throw not_divisible("polynomial division leaves a remainder");
    return q;
}

inline PadicNumber eval_padic(const IntPolynomial& poly, const PadicNumber& x, std::int32_t prec) {
    PadicNumber acc = PadicNumber::zero(x.prime(), prec);
    const auto& c = poly.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + PadicNumber::from_integer(*it, x.prime(), prec);
    return acc;
}

inline PadicNumber eval_padic(const RationalPolynomial& poly, const PadicNumber& x,
                              std::int32_t prec) {
    PadicNumber acc = PadicNumber::zero(x.prime(), prec);
    const auto& c = poly.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + PadicNumber::from_rational(boost::multiprecision::numerator(*it),
                                                   boost::multiprecision::denominator(*it),
                                                   x.prime(), prec);
    }
    return acc;
}

// Canonical text for X-polynomials: descending powers, no spaces, explicit
// * and ^, e.g. "-X^2-3*X-2". Used by the differential-polynomial grammar.
inline std::string xpoly_str(const RationalPolynomial& poly) {
    if (poly.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::int64_t d = poly.degree(); d >= 0; --d) {
        BigRat c = poly.coeff(static_cast<std::size_t>(d));
        if (c == 0) continue;
        bool neg = c < 0;
        BigRat a = neg ? BigRat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        if (d == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "X";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

} // namespace padicgamma
