#include "padicgamma/diffpoly.hpp"

#include "padicgamma/calculus.hpp"
#include "padicgamma/gamma.hpp"

namespace padicgamma {

std::strong_ordering antilex_compare(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw length_mismatch("exponent vectors live in different ambient orders");
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

std::uint32_t total_degree(const ExponentVector& a) {
    std::uint32_t d = 0;
    for (auto e : a) d += e;
    return d;
}

RationalFunction make_rational_function(RationalPolynomial num, RationalPolynomial den) {
    if (den.is_zero()) throw division_by_zero("rational function with zero denominator");
    if (num.is_zero()) return {RationalPolynomial(), RationalPolynomial::constant(BigRat(1))};
    RationalPolynomial g = poly_gcd(num, den);
    num = poly_exact_div(num, g);
    den = poly_exact_div(den, g);
    BigRat lc = den.leading();
    num = (BigRat(1) / lc) * num;
    den = (BigRat(1) / lc) * den;
    return {std::move(num), std::move(den)};
}

DifferentialPolynomial DifferentialPolynomial::monomial(RationalPolynomial coeff,
                                                        ExponentVector alpha) {
    if (alpha.empty()) alpha.push_back(0);
    DifferentialPolynomial r(static_cast<std::uint32_t>(alpha.size()) - 1);
    r.add_term(alpha, coeff);
    return r;
}

void DifferentialPolynomial::add_term(const ExponentVector& alpha,
                                      const RationalPolynomial& coeff) {
    if (alpha.size() != order_ + 1)
        throw length_mismatch("exponent vector does not match the ambient order");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(alpha, coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DifferentialPolynomial DifferentialPolynomial::with_order(std::uint32_t n) const {
    if (n < order_) throw order_exceeded("cannot shrink the ambient order");
    if (n == order_) return *this;
    DifferentialPolynomial r(n);
    for (const auto& [alpha, coeff] : terms_) {
        ExponentVector a = alpha;
        a.resize(n + 1, 0);
        r.terms_.emplace(std::move(a), coeff);
    }
    return r;
}

std::pair<ExponentVector, RationalPolynomial> DifferentialPolynomial::leading_term() const {
    if (is_zero()) throw zero_polynomial("the zero polynomial has no leading term");
    return *terms_.begin();
}

DifferentialPolynomial operator+(const DifferentialPolynomial& a,
                                 const DifferentialPolynomial& b) {
    std::uint32_t n = std::max(a.order(), b.order());
    DifferentialPolynomial r = a.with_order(n);
    DifferentialPolynomial bn = b.with_order(n);
    for (const auto& [alpha, coeff] : bn.terms()) r.add_term(alpha, coeff);
    return r;
}

DifferentialPolynomial DifferentialPolynomial::operator-() const {
    DifferentialPolynomial r(order_);
    for (const auto& [alpha, coeff] : terms_) r.terms_.emplace(alpha, -coeff);
    return r;
}

DifferentialPolynomial operator-(const DifferentialPolynomial& a,
                                 const DifferentialPolynomial& b) {
    return a + (-b);
}

DifferentialPolynomial operator*(const DifferentialPolynomial& a,
                                 const DifferentialPolynomial& b) {
    std::uint32_t n = std::max(a.order(), b.order());
    DifferentialPolynomial an = a.with_order(n), bn = b.with_order(n);
    DifferentialPolynomial r(n);
    for (const auto& [alpha, ca] : an.terms()) {
        for (const auto& [beta, cb] : bn.terms()) {
            ExponentVector sum(n + 1);
            for (std::size_t i = 0; i <= n; ++i) sum[i] = alpha[i] + beta[i];
            r.add_term(sum, ca * cb);
        }
    }
    return r;
}

DifferentialPolynomial DifferentialPolynomial::scaled(const RationalPolynomial& c) const {
    DifferentialPolynomial r(order_);
    if (c.is_zero()) return r;
    for (const auto& [alpha, coeff] : terms_) r.terms_.emplace(alpha, c * coeff);
    return r;
}

DifferentialPolynomial DifferentialPolynomial::pow(std::uint32_t e) const {
    DifferentialPolynomial acc =
        DifferentialPolynomial::monomial(RationalPolynomial::constant(BigRat(1)),
                                         ExponentVector(order_ + 1, 0));
    for (std::uint32_t i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool operator==(const DifferentialPolynomial& a, const DifferentialPolynomial& b) {
    std::uint32_t n = std::max(a.order(), b.order());
    return a.with_order(n).terms() == b.with_order(n).terms();
}

DifferentialPolynomial shift_transform(const DifferentialPolynomial& P, const Prime& p) {
    const std::uint32_t n = P.order();
    const RationalPolynomial f = lift(f_poly(p));
    std::vector<RationalPolynomial> fder; // f, f', f'', ...
    fder.push_back(f);
    for (std::uint32_t i = 1; i <= n; ++i) fder.push_back(fder.back().derivative());

    // S_k = sum_{j<=k} C(k,j) f^(k-j)(X) Y_j, the image of Y_k.
    std::vector<DifferentialPolynomial> images;
    for (std::uint32_t k = 0; k <= n; ++k) {
        DifferentialPolynomial s(n);
        for (std::uint32_t j = 0; j <= k; ++j) {
            ExponentVector e(n + 1, 0);
            e[j] = 1;
            s.add_term(e, BigRat(binomial(k, j)) * fder[k - j]);
        }
        images.push_back(std::move(s));
    }

    const BigRat shift(p.value());
    DifferentialPolynomial q(n);
    for (const auto& [alpha, coeff] : P.terms()) {
        DifferentialPolynomial term = DifferentialPolynomial::monomial(
            coeff.shift(shift), ExponentVector(n + 1, 0));
        for (std::uint32_t k = 0; k <= n; ++k)
            if (alpha[k] > 0) term = term * images[k].pow(alpha[k]);
        q = q + term;
    }
    return q;
}

bool lt_identity_check(const DifferentialPolynomial& P, const Prime& p) {
    auto [alpha, q] = P.leading_term();
    std::uint32_t total = total_degree(alpha);
    if (total == 0)
        throw no_y_term("leading term carries no power of Y (P is constant in Y)");
    DifferentialPolynomial Q = shift_transform(P, p);
    auto [beta, qq] = Q.leading_term();
    RationalPolynomial expected = q.shift(BigRat(p.value())) * lift(f_poly(p)).pow(total);
    return beta == alpha && qq == expected;
}

RationalFunction compute_R(const DifferentialPolynomial& P, const Prime& p) {
    auto [alpha, q] = P.leading_term();
    std::uint32_t total = total_degree(alpha);
    if (total == 0)
        throw no_y_term("leading term carries no power of Y (P is constant in Y)");
    return make_rational_function(q.shift(BigRat(p.value())) * lift(f_poly(p)).pow(total), q);
}

RationalFunction exact_divide(const DifferentialPolynomial& Q_in,
                              const DifferentialPolynomial& P_in) {
    if (P_in.is_zero()) throw zero_polynomial("cannot divide by the zero polynomial");
    if (Q_in.is_zero())
        return {RationalPolynomial(), RationalPolynomial::constant(BigRat(1))};
    std::uint32_t n = std::max(Q_in.order(), P_in.order());
    DifferentialPolynomial Q = Q_in.with_order(n), P = P_in.with_order(n);
    auto [aq, cq] = Q.leading_term();
    auto [ap, cp] = P.leading_term();
    if (antilex_compare(aq, ap) != std::strong_ordering::equal)
        throw not_divisible("leading monomials differ");
    RationalFunction r = make_rational_function(cq, cp);
    if (!(Q.scaled(r.den) == P.scaled(r.num)))
        throw not_divisible("no single X-rational factor relates all paired terms");
    return r;
}

DifferentialPolynomial partial_evaluate(const DifferentialPolynomial& P, const BigRat& x0,
                                        bool set_y0_zero) {
    DifferentialPolynomial r(P.order());
    for (const auto& [alpha, coeff] : P.terms()) {
        if (set_y0_zero && alpha[0] > 0) continue;
        BigRat value = coeff.eval(x0);
        if (value == 0) continue;
        r.add_term(alpha, RationalPolynomial::constant(value));
    }
    return r;
}

PadicNumber evaluate(const DifferentialPolynomial& P, const PadicNumber& x,
                     std::span<const PadicNumber> jet) {
    if (jet.size() != P.order() + 1)
        throw length_mismatch("jet length must be order + 1");
    std::int32_t prec = x.rel_precision();
    for (const auto& y : jet) {
        if (y.prime() != x.prime()) throw prime_mismatch("jet and point disagree on p");
        prec = std::max(prec, y.rel_precision());
    }
    if (prec < 1) prec = 1;
    PadicNumber acc = PadicNumber::zero(x.prime(), prec);
    for (const auto& [alpha, coeff] : P.terms()) {
        PadicNumber t = eval_padic(coeff, x, prec);
        for (std::size_t k = 0; k < jet.size(); ++k)
            if (alpha[k] > 0) t = t * jet[k].pow(alpha[k]);
        acc = acc + t;
    }
    return acc;
}

} // namespace padicgamma
