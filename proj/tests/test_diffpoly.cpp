#include <doctest.h>

#include <algorithm>

#include "padicgamma/calculus.hpp"
#include "padicgamma/diffpoly.hpp"
#include "padicgamma/parser.hpp"
#include "padicgamma/rng.hpp"

using namespace padicgamma;

namespace {

ExponentVector random_alpha(SplitMix64& rng, std::uint32_t order, std::uint32_t maxdeg) {
    for (;;) {
        ExponentVector a(order + 1, 0);
        std::uint32_t total = 0;
        for (auto& e : a) {
            e = static_cast<std::uint32_t>(rng.below(maxdeg + 1));
            total += e;
        }
        if (total <= maxdeg) return a;
    }
}

RationalPolynomial random_coeff(SplitMix64& rng, std::uint32_t xdeg) {
    std::vector<BigRat> c;
    for (std::uint32_t i = 0; i <= xdeg; ++i)
        c.emplace_back(BigInt(rng.next() % 13) - 6);
    auto poly = RationalPolynomial::from_coeffs(std::move(c));
    if (poly.is_zero()) poly = RationalPolynomial::constant(BigRat(1));
    return poly;
}

// nonzero, with at least one Y-bearing term so the leading term carries Y
DifferentialPolynomial random_diffpoly(SplitMix64& rng, std::uint32_t order,
                                       std::uint32_t ydeg, std::uint32_t xdeg) {
    DifferentialPolynomial p(order);
    std::size_t terms = 1 + rng.below(4);
    for (std::size_t t = 0; t < terms; ++t)
        p.add_term(random_alpha(rng, order, ydeg), random_coeff(rng, xdeg));
    ExponentVector a(order + 1, 0);
    a[rng.below(order + 1)] = 1 + static_cast<std::uint32_t>(rng.below(ydeg));
    p.add_term(a, random_coeff(rng, xdeg));
    if (p.is_zero() || total_degree(p.leading_term().first) == 0)
        return random_diffpoly(rng, order, ydeg, xdeg);
    return p;
}

} // namespace

TEST_CASE("antilexicographic order: pinned comparisons") {
    using O = std::strong_ordering;
    CHECK(antilex_compare({1, 0}, {0, 1}) == O::less);       // Y0 < Y1
    CHECK(antilex_compare({5, 0}, {0, 1}) == O::less);       // Y0^5 < Y1
    CHECK(antilex_compare({2, 1}, {2, 1}) == O::equal);
    CHECK(antilex_compare({2, 1}, {7, 0}) == O::greater);
    CHECK(antilex_compare({0, 0, 1}, {0, 9, 0}) == O::greater);
    CHECK(antilex_compare({0, 0}, {1, 0}) == O::less);       // constants at the bottom
    CHECK_THROWS_AS(antilex_compare({1}, {1, 2}), length_mismatch);
}

TEST_CASE("antilexicographic order: total, antisymmetric, multiplicative") {
    SplitMix64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        ExponentVector a = random_alpha(rng, 3, 6), b = random_alpha(rng, 3, 6),
                       c = random_alpha(rng, 3, 6);
        auto ab = antilex_compare(a, b);
        auto ba = antilex_compare(b, a);
        CHECK(ab == (0 <=> (ba == std::strong_ordering::less
                                ? -1
                                : ba == std::strong_ordering::greater ? 1 : 0)));
        if (ab == std::strong_ordering::equal) CHECK(a == b);
        // multiplicativity: a > b => a + c > b + c
        ExponentVector ac(a), bc(b);
        for (std::size_t k = 0; k < ac.size(); ++k) {
            ac[k] += c[k];
            bc[k] += c[k];
        }
        CHECK(antilex_compare(ac, bc) == ab);
        // transitivity via sort consistency
        std::vector<ExponentVector> v{a, b, c};
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
            return antilex_compare(x, y) == std::strong_ordering::less;
        });
        CHECK(antilex_compare(v[0], v[1]) != std::strong_ordering::greater);
        CHECK(antilex_compare(v[1], v[2]) != std::strong_ordering::greater);
    }
}

TEST_CASE("leading term picks the antilex-maximal exponent") {
    auto P = parse_diffpoly("X*Y0^2*Y1 + Y0^7");
    auto [alpha, coeff] = P.leading_term();
    CHECK(alpha == ExponentVector{2, 1});
    CHECK(coeff == RationalPolynomial::variable());

    auto single = parse_diffpoly("(X^2+1)*Y1^3");
    CHECK(single.leading_term().first == ExponentVector{0, 3});

    auto Q = parse_diffpoly("Y2 + Y1^9 + Y0^9");
    CHECK(Q.leading_term().first == ExponentVector{0, 0, 1});

    CHECK_THROWS_AS(DifferentialPolynomial(1).leading_term(), zero_polynomial);
}

TEST_CASE("leading terms multiply") {
    SplitMix64 rng(13);
    for (int i = 0; i < 200; ++i) {
        auto P = random_diffpoly(rng, 2, 3, 2);
        auto Q = random_diffpoly(rng, 2, 3, 2);
        auto [pa, pc] = P.leading_term();
        auto [qa, qc] = Q.leading_term();
        auto [ra, rc] = (P * Q).leading_term();
        ExponentVector sum(pa.size());
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = pa[k] + qa[k];
        CHECK(ra == sum);
        CHECK(rc == pc * qc);
    }
}

TEST_CASE("shift transform: pinned examples") {
    Prime p3(3), p2(2);
    // P = Y0 maps to f(X) Y0
    auto q1 = shift_transform(parse_diffpoly("Y0"), p3);
    CHECK(q1 == DifferentialPolynomial::monomial(lift(f_poly(p3)), {1}));
    // a pure X polynomial only picks up the shift
    auto q2 = shift_transform(parse_diffpoly("X"), p3);
    CHECK(q2 == parse_diffpoly("X + 3"));
    // P = Y1 at p=2: f' Y0 + f Y1 with f = X + 1
    auto q3 = shift_transform(parse_diffpoly("Y1"), p2);
    CHECK(q3 == parse_diffpoly("Y0 + (X+1)*Y1"));
}

TEST_CASE("shift transform is a ring homomorphism") {
    Prime p3(3);
    SplitMix64 rng(29);
    for (int i = 0; i < 60; ++i) {
        auto P = random_diffpoly(rng, 2, 2, 2);
        auto Q = random_diffpoly(rng, 2, 2, 2);
        CHECK(shift_transform(P * Q, p3) == shift_transform(P, p3) * shift_transform(Q, p3));
        CHECK(shift_transform(P + Q, p3) == shift_transform(P, p3) + shift_transform(Q, p3));
    }
}

TEST_CASE("leading-term identity for the transform") {
    Prime p3(3);
    CHECK(lt_identity_check(parse_diffpoly("Y0"), p3));
    SplitMix64 rng(31);
    for (std::uint64_t q : {2, 3, 5}) {
        Prime p(q);
        for (int i = 0; i < 100; ++i) {
            auto P = random_diffpoly(rng, 1 + rng.below(3), 3, 3);
            CHECK(lt_identity_check(P, p));
        }
    }
    CHECK_THROWS_AS(lt_identity_check(parse_diffpoly("X^2 + 1"), p3), no_y_term);
    CHECK_THROWS_AS(lt_identity_check(DifferentialPolynomial(0), p3), zero_polynomial);
}

TEST_CASE("R formula") {
    Prime p2(2), p3(3);
    // P = Y0*Y1, q = 1: R = f^2 = (X+1)^2
    auto r1 = compute_R(parse_diffpoly("Y0*Y1"), p2);
    CHECK(r1.den == RationalPolynomial::constant(BigRat(1)));
    CHECK(r1.num == RationalPolynomial{BigRat(1), BigRat(2), BigRat(1)}); // (X+1)^2
    // q = X, |a| = 1 at p=3: R = (X+3)/X * f(X)
    auto r2 = compute_R(parse_diffpoly("X*Y1"), p3);
    CHECK(r2.den == RationalPolynomial::variable());
    CHECK(r2.num == lift(f_poly(p3)) * RationalPolynomial{BigRat(3), BigRat(1)});

    SplitMix64 rng(37);
    for (int i = 0; i < 50; ++i) {
        auto P = random_diffpoly(rng, 2, 3, 0); // constant-q leading terms
        auto r = compute_R(P, p3);
        if (total_degree(P.leading_term().first) >= 1)
            CHECK(r.num.degree() - r.den.degree() >= 1);
    }
}

TEST_CASE("exact division recovers X-rational factors") {
    Prime p3(3);
    // single Y0-power terms transform multiplicatively
    SplitMix64 rng(41);
    for (int i = 0; i < 40; ++i) {
        std::uint32_t a = 1 + static_cast<std::uint32_t>(rng.below(3));
        auto P = DifferentialPolynomial::monomial(random_coeff(rng, 2), {a});
        auto Q = shift_transform(P, p3);
        auto R = exact_divide(Q, P);
        CHECK(R == compute_R(P, p3));
    }
    auto P = parse_diffpoly("Y0^2 + X*Y1");
    auto one = exact_divide(P, P);
    CHECK(one.num == RationalPolynomial::constant(BigRat(1)));
    CHECK(one.den == RationalPolynomial::constant(BigRat(1)));

    CHECK_THROWS_AS(exact_divide(parse_diffpoly("Y0 + Y1"), parse_diffpoly("Y0")),
                    not_divisible);
    CHECK_THROWS_AS(exact_divide(P, DifferentialPolynomial(1)), zero_polynomial);
    // scaled transforms divide exactly too
    auto S = parse_diffpoly("(X^2+1)*Y0^2");
    CHECK(exact_divide(shift_transform(S, p3), S) == compute_R(S, p3));
}

TEST_CASE("partial evaluation") {
    auto P = parse_diffpoly("X*Y0 + Y1");
    auto r = partial_evaluate(P, BigRat(2), true);
    CHECK(r == parse_diffpoly("Y1").with_order(1));

    CHECK(partial_evaluate(parse_diffpoly("Y0^3"), BigRat(1), true).is_zero());

    // the root-substitution step: any transform of a Y0-divisible P dies at a
    // root of f once Y0 is set to zero
    Prime p3(3);
    SplitMix64 rng(43);
    for (int i = 0; i < 30; ++i) {
        auto base = random_diffpoly(rng, 2, 2, 2);
        auto P2 = base * DifferentialPolynomial::monomial(
                             RationalPolynomial::constant(BigRat(1)), {1, 0, 0});
        auto Q = shift_transform(P2, p3);
        CHECK(partial_evaluate(Q, BigRat(-1), true).is_zero()); // f(-1) = 0
        CHECK(partial_evaluate(Q, BigRat(-2), true).is_zero()); // f(-2) = 0
    }
    // Y1^2 transforms to (f' Y0 + f Y1)^2; the Y0-free part carries f(x0)^2
    auto Q = shift_transform(parse_diffpoly("Y1^2"), p3);
    CHECK(partial_evaluate(Q, BigRat(-1), true).is_zero());
    CHECK(!partial_evaluate(Q, BigRat(0), true).is_zero());
}

TEST_CASE("evaluation over Q_p") {
    Prime p5(5);
    std::int32_t K = 10;
    // Y1 - 1 annihilates the identity jet
    auto P = parse_diffpoly("Y1 - 1");
    PadicNumber x = PadicNumber::from_integer(10, p5, K);
    std::vector<PadicNumber> jet{x, PadicNumber::one(p5, K)};
    CHECK(evaluate(P, x, jet).is_zero());

    GammaEvaluator ev(p5, K);
    std::vector<PadicNumber> gjet{ev.gamma(x)};
    CHECK(evaluate(parse_diffpoly("Y0"), x, gjet).is_unit());

    CHECK_THROWS_AS(evaluate(P, x, std::vector<PadicNumber>{x}), length_mismatch);

    // scaling by an X-polynomial is compatible with evaluation
    SplitMix64 rng(47);
    for (int i = 0; i < 40; ++i) {
        auto A = random_diffpoly(rng, 1, 2, 2);
        RationalPolynomial r = random_coeff(rng, 2);
        PadicNumber xx = PadicNumber::from_integer(BigInt(5) * (1 + rng.below(100)), p5, K);
        std::vector<PadicNumber> j2{ev.gamma(xx),
                                    PadicNumber::from_integer(BigInt(1 + rng.below(50)), p5, K)};
        PadicNumber lhs = evaluate(A.scaled(r), xx, j2);
        PadicNumber rhs = eval_padic(r, xx, K) * evaluate(A, xx, j2);
        CHECK(lhs.indistinguishable(rhs));
    }
}

TEST_CASE("transform commutes with evaluation along the recurrence") {
    // evaluate(shift_transform(P), x, jet(x)) vs evaluate(P, x+p, jet(x+p));
    // the step-exponent remainder caps the attainable agreement, so the
    // working precision is chosen with K - n*m - guard below that floor.
    Prime p5(5);
    const std::int32_t K = 12;
    const std::uint32_t m = 4;
    auto ev = std::make_shared<GammaEvaluator>(p5, K);
    PointFunction g = [ev](const PadicNumber& x) { return ev->gamma(x); };
    SplitMix64 rng(53);
    for (int i = 0; i < 20; ++i) {
        std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(2));
        auto P = random_diffpoly(rng, n, 2, 2);
        PadicNumber x = PadicNumber::from_integer(BigInt(5) * (1 + rng.below(300)), p5, K);
        PadicNumber xp = x + PadicNumber::from_integer(5, p5, K);
        std::vector<PadicNumber> jx, jxp;
        for (std::uint32_t k = 0; k <= n; ++k) {
            jx.push_back(finite_difference_derivative(g, x, k, m, K).value);
            jxp.push_back(finite_difference_derivative(g, xp, k, m, K).value);
        }
        PadicNumber lhs = evaluate(shift_transform(P, p5), x, jx);
        PadicNumber rhs = evaluate(P, xp, jxp);
        PadicNumber diff = lhs - rhs;
        std::int64_t val = diff.is_zero() ? diff.abs_precision() : *diff.valuation();
        std::int64_t threshold = K - static_cast<std::int64_t>(n) * m - kDefaultGuard;
        CHECK(val >= threshold);
        CHECK(val >= static_cast<std::int64_t>(m)); // the structural floor
    }
}
