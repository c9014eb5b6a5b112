#include <doctest.h>

#include "padicgamma/calculus.hpp"
#include "padicgamma/rng.hpp"

using namespace padicgamma;

namespace {

PointFunction poly_fn(const IntPolynomial& f, std::int32_t prec) {
    return [f, prec](const PadicNumber& x) { return eval_padic(f, x, prec); };
}

IntPolynomial random_int_poly(SplitMix64& rng, int deg) {
    std::vector<BigInt> c;
    for (int i = 0; i <= deg; ++i) c.push_back(BigInt(rng.next() % 41) - 20);
    if (c.back() == 0) c.back() = 1;
    return IntPolynomial::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("formal polynomial derivatives") {
    IntPolynomial f3 = f_poly(Prime(3)); // -X^2 - 3X - 2
    CHECK(f3.derivative() == IntPolynomial{-3, -2});
    CHECK(f3.derivative(2) == IntPolynomial{-2});
    CHECK(f3.derivative(3).is_zero());
    CHECK(IntPolynomial{1, 2, 3}.derivative(7).is_zero());
}

TEST_CASE("order zero estimate is the bare evaluation") {
    Prime p(5);
    GammaEvaluator ev(p, 12);
    PointFunction g = [&](const PadicNumber& x) { return ev.gamma(x); };
    PadicNumber x = PadicNumber::from_integer(10, p, 12);
    auto est = finite_difference_derivative(g, x, 0, 4, 12);
    CHECK(est.certified_digits == 12);
    CHECK(est.value.indistinguishable(ev.gamma(x)));
}

TEST_CASE("estimates match exact polynomial derivatives to certified digits") {
    // configs keep the certificate at or below the step-induced remainder
    struct Cfg { std::uint32_t k, m; std::int32_t K; };
    for (Cfg cfg : {Cfg{1, 4, 12}, Cfg{2, 5, 16}, Cfg{3, 4, 17}, Cfg{4, 3, 17}}) {
        Prime p(5);
        SplitMix64 rng(1000 + cfg.k);
        for (int i = 0; i < 50; ++i) {
            IntPolynomial f = random_int_poly(rng, 6);
            PadicNumber x =
                PadicNumber::from_integer(BigInt(5) * (1 + rng.below(500)), p, cfg.K);
            auto est = finite_difference_derivative(poly_fn(f, cfg.K), x, cfg.k, cfg.m, cfg.K);
            PadicNumber exact = eval_padic(f.derivative(cfg.k), x, cfg.K);
            PadicNumber diff = est.value - exact;
            std::int64_t val = diff.is_zero() ? diff.abs_precision() : *diff.valuation();
            CHECK(val >= est.certified_digits);
        }
    }
}

TEST_CASE("estimates are Cauchy in the step exponent on Gamma_p") {
    struct Cfg { std::uint32_t k, m; std::int32_t K; };
    for (Cfg cfg : {Cfg{1, 4, 12}, Cfg{2, 4, 16}, Cfg{3, 3, 14}}) {
        for (std::uint64_t q : {3, 5, 7}) {
            Prime p(q);
            auto ev = std::make_shared<GammaEvaluator>(p, cfg.K);
            PointFunction g = [ev](const PadicNumber& x) { return ev->gamma(x); };
            SplitMix64 rng(2000 + q + cfg.k);
            for (int i = 0; i < 10; ++i) {
                PadicNumber x =
                    PadicNumber::from_integer(BigInt(q) * (1 + rng.below(300)), p, cfg.K);
                auto a = finite_difference_derivative(g, x, cfg.k, cfg.m, cfg.K);
                auto b = finite_difference_derivative(g, x, cfg.k, cfg.m + 1, cfg.K);
                PadicNumber diff = a.value - b.value;
                std::int64_t val = diff.is_zero() ? diff.abs_precision() : *diff.valuation();
                // the weaker certificate comes from the larger step
                CHECK(val >= b.certified_digits);
                // observed convergence floor: one step of extra valuation
                CHECK(val >= static_cast<std::int64_t>(cfg.m) - 2);
            }
        }
    }
}

TEST_CASE("difference quotients are linear, exactly") {
    Prime p(5);
    std::int32_t K = 14;
    SplitMix64 rng(77);
    for (int i = 0; i < 40; ++i) {
        IntPolynomial f1 = random_int_poly(rng, 5);
        IntPolynomial f2 = random_int_poly(rng, 5);
        BigInt a = BigInt(rng.next() % 19) - 9;
        PointFunction combo = [&](const PadicNumber& x) {
            return PadicNumber::from_integer(a, p, K) * eval_padic(f1, x, K) +
                   eval_padic(f2, x, K);
        };
        PadicNumber x = PadicNumber::from_integer(BigInt(5) * (1 + rng.below(200)), p, K);
        auto lhs = finite_difference_derivative(combo, x, 2, 3, K);
        auto e1 = finite_difference_derivative(poly_fn(f1, K), x, 2, 3, K);
        auto e2 = finite_difference_derivative(poly_fn(f2, K), x, 2, 3, K);
        PadicNumber rhs = PadicNumber::from_integer(a, p, K) * e1.value + e2.value;
        CHECK(lhs.value.indistinguishable(rhs));
    }
}

TEST_CASE("degenerate steps are rejected") {
    Prime p(5);
    GammaEvaluator ev(p, 8);
    PointFunction g = [&](const PadicNumber& x) { return ev.gamma(x); };
    PadicNumber x = PadicNumber::from_integer(5, p, 8);
    CHECK_THROWS_AS(finite_difference_derivative(g, x, 2, 4, 8), insufficient_precision);
    CHECK_THROWS_AS(finite_difference_derivative(g, x, 1, 0, 8), config_rejected);
}

TEST_CASE("derivative chain of the p-step recurrence") {
    struct Cfg { std::uint32_t n, m; std::int32_t K; };
    for (Cfg cfg : {Cfg{1, 4, 12}, Cfg{2, 4, 12}, Cfg{3, 3, 10}}) {
        for (std::uint64_t q : {2, 3, 5, 7}) {
            Prime p(q);
            auto ev = std::make_shared<GammaEvaluator>(p, cfg.K);
            PointFunction g = [ev](const PadicNumber& x) { return ev->gamma(x); };
            IntPolynomial f = f_poly(p);
            SplitMix64 rng(3000 + q + cfg.n);
            for (int i = 0; i < 20; ++i) {
                PadicNumber x =
                    PadicNumber::from_integer(BigInt(q) * (1 + rng.below(400)), p, cfg.K);
                auto rep = leibniz_chain_check(g, f, p, x, cfg.n, cfg.m, cfg.K);
                CHECK(rep.pass);
            }
        }
    }
}

TEST_CASE("chain with a constant multiplier: derivatives of the factor vanish") {
    // control g_c on pZ_p with g_c(x+p) = c * g_c(x): g_c(p t) = c^t, c = 1+p
    Prime p(5);
    std::int32_t K = 12;
    const BigInt c = 6;
    BigInt mod = big_pow(5, static_cast<std::uint64_t>(K));
    PointFunction gc = [&](const PadicNumber& x) {
        BigInt t = x.representative(K) / 5;
        BigInt acc = 1;
        for (BigInt i = 0; i < t; ++i) acc = acc * c % mod;
        return PadicNumber::from_integer(acc, p, K);
    };
    IntPolynomial constf = IntPolynomial::constant(c);
    SplitMix64 rng(55);
    for (int i = 0; i < 10; ++i) {
        PadicNumber x = PadicNumber::from_integer(BigInt(5) * (1 + rng.below(50)), p, K);
        auto rep = leibniz_chain_check(gc, constf, p, x, 2, 4, K);
        CHECK(rep.pass);
        // the sum side collapses to c * g^(j)(x)
        for (std::uint32_t j = 1; j <= 2; ++j) {
            auto direct = finite_difference_derivative(
                gc, x + PadicNumber::from_integer(5, p, K), j, 4, K);
            auto base = finite_difference_derivative(gc, x, j, 4, K);
            PadicNumber diff =
                direct.value - PadicNumber::from_integer(c, p, K) * base.value;
            std::int64_t val = diff.is_zero() ? diff.abs_precision() : *diff.valuation();
            CHECK(val >= direct.certified_digits);
        }
    }
}
