#include <doctest.h>

#include "padicgamma/gamma.hpp"
#include "padicgamma/rng.hpp"

using namespace padicgamma;

namespace {
// independent oracle: direct restricted product, no cache, no sign tricks
BigInt oracle_gamma_nat(std::uint64_t n, std::uint64_t p, const BigInt& mod) {
    BigInt acc = 1;
    for (std::uint64_t j = 1; j < n; ++j)
        if (j % p != 0) acc = acc * j % mod;
    if (n % 2 == 1) acc = (mod - acc) % mod;
    return acc;
}
} // namespace

TEST_CASE("restricted factorial") {
    CHECK(restricted_factorial(5, Prime(5)) == 24);
    CHECK(restricted_factorial(0, Prime(7)) == 1);
    CHECK(restricted_factorial(4, Prime(5)) == 24);
    CHECK(restricted_factorial(6, Prime(2)) == 15);
}

TEST_CASE("Wilson congruence") {
    CHECK(wilson_check(Prime(2)));
    CHECK(wilson_check(Prime(5)));
    CHECK(wilson_check(Prime(13)));
    for (auto p : primes_below(200)) CHECK(wilson_check(Prime(p)));
}

TEST_CASE("f polynomial: expansion, degree, leading coefficient, f(0)") {
    CHECK(f_poly(Prime(2)) == IntPolynomial{1, 1});          // X + 1
    CHECK(f_poly(Prime(3)) == IntPolynomial{-2, -3, -1});    // -X^2 - 3X - 2
    for (std::uint64_t q : {2, 3, 5, 7, 11}) {
        Prime p(q);
        IntPolynomial f = f_poly(p);
        CHECK(f.degree() == static_cast<std::int64_t>(q) - 1);
        CHECK(f.leading() == (q % 2 == 0 ? 1 : -1));
        BigInt expected = restricted_factorial(q - 1, p);
        if (q % 2 == 1) expected = -expected;
        CHECK(f.eval(0) == expected); // (-1)^p (p-1)!
    }
}

TEST_CASE("f polynomial agrees with its product form at random points") {
    SplitMix64 rng(5);
    for (std::uint64_t q : {3, 5, 7}) {
        IntPolynomial f = f_poly(Prime(q));
        for (int i = 0; i < 100; ++i) {
            BigInt x = BigInt(rng.next() % 2000) - 1000;
            BigInt prod = 1;
            for (std::uint64_t j = 1; j < q; ++j) prod *= x + j;
            if (q % 2 == 1) prod = -prod;
            CHECK(f.eval(x) == prod);
        }
    }
}

TEST_CASE("gamma on naturals: spot values against the direct-product oracle") {
    for (std::uint64_t q : {2, 3, 5, 7, 11}) {
        GammaEvaluator ev(Prime(q), 8);
        CHECK(ev.gamma_nat(1).indistinguishable(PadicNumber::from_integer(-1, Prime(q), 8)));
        CHECK(ev.gamma_nat(0).indistinguishable(PadicNumber::one(Prime(q), 8)));
    }
    GammaEvaluator e5(Prime(5), 8);
    CHECK(e5.gamma_nat(5).indistinguishable(PadicNumber::from_integer(-24, Prime(5), 8)));
    CHECK(e5.gamma_nat(6).indistinguishable(PadicNumber::from_integer(24, Prime(5), 8)));
    GammaEvaluator e2(Prime(2), 8);
    CHECK(e2.gamma_nat(4).indistinguishable(PadicNumber::from_integer(3, Prime(2), 8)));
    CHECK(e2.gamma_nat(2).indistinguishable(PadicNumber::one(Prime(2), 8)));
    GammaEvaluator e3(Prime(3), 8);
    CHECK(e3.gamma_nat(3).indistinguishable(PadicNumber::from_integer(-2, Prime(3), 8)));

    SplitMix64 rng(31);
    for (int i = 0; i < 40; ++i) {
        std::uint64_t n = rng.below(3000);
        BigInt mod = big_pow(5, 8);
        CHECK(e5.gamma_nat(n).representative(8) == oracle_gamma_nat(n, 5, mod));
    }
}

TEST_CASE("every gamma value is a unit") {
    for (std::uint64_t q : {2, 3, 5, 7}) {
        GammaEvaluator ev(Prime(q), 10);
        SplitMix64 rng(301 + q);
        for (int i = 0; i < 200; ++i) {
            PadicNumber v = ev.gamma_nat(rng.below(5000));
            CHECK(v.is_unit());
        }
    }
}

TEST_CASE("continuity transfer: exact for odd p, exact at p=2 away from k=2") {
    for (std::uint64_t q : {3, 5}) {
        Prime p(q);
        std::uint64_t span = q * q * q * q; // p^4
        for (std::uint32_t k = 1; k <= 3; ++k) {
            std::int32_t prec = static_cast<std::int32_t>(k);
            GammaEvaluator ev(p, prec);
            BigInt mod = big_pow(q, k);
            std::uint64_t pk = mod.convert_to<std::uint64_t>();
            for (std::uint64_t n = 0; n < span; ++n) {
                BigInt a = ev.gamma_nat(n).representative(k);
                BigInt b = ev.gamma_nat(n % pk).representative(k);
                CHECK(a == b);
            }
        }
    }
    // p = 2: transfer mod 2^k holds for k = 1 and k >= 3; at k = 2 the unit
    // block of Z/4 multiplies to -1, so Gamma_2(n+4) == -Gamma_2(n) mod 4.
    GammaEvaluator e2(Prime(2), 6);
    BigInt m4 = 4;
    for (std::uint64_t n = 0; n + 4 < 64; ++n) {
        BigInt a = e2.gamma_nat(n).representative(2);
        BigInt b = e2.gamma_nat(n + 4).representative(2);
        CHECK((a + b) % m4 == 0); // flipped sign, never equal
        CHECK(a != b);
    }
    for (std::uint32_t k : {1u, 3u, 4u}) {
        BigInt mod = big_pow(2, k);
        std::uint64_t pk = mod.convert_to<std::uint64_t>();
        for (std::uint64_t n = 0; n < 64; ++n) {
            CHECK(e2.gamma_nat(n).representative(k) ==
                  e2.gamma_nat(n % pk).representative(k));
        }
    }
}

TEST_CASE("gamma via continuity transfer") {
    Prime p5(5);
    GammaEvaluator ev(p5, 6);
    PadicNumber x = PadicNumber::from_integer(5, p5, 6);
    CHECK(ev.gamma(x).indistinguishable(PadicNumber::from_integer(-24, p5, 6)));
    CHECK(ev.gamma(PadicNumber::from_integer(0, p5, 6))
              .indistinguishable(PadicNumber::one(p5, 6)));

    // x == 5 mod 5^6 evaluates like 5 itself
    PadicNumber y = PadicNumber::from_integer(5 + 15625, p5, 6);
    CHECK(ev.gamma(y).indistinguishable(ev.gamma(x)));

    CHECK_THROWS_AS(ev.gamma(PadicNumber::from_rational(1, 5, p5, 6)), not_integral);
    CHECK_THROWS_AS(ev.gamma(PadicNumber::from_integer(7, p5, 3)), insufficient_precision);

    GammaEvaluator tight(p5, 6, /*work_limit=*/10);
    CHECK_THROWS_AS(tight.gamma(PadicNumber::from_integer(5000, p5, 6)), work_limit_exceeded);

    CHECK_THROWS_AS(GammaEvaluator(Prime(2), 2).gamma(PadicNumber::one(Prime(2), 2)),
                    config_rejected);
}

TEST_CASE("h_p branches") {
    Prime p5(5);
    GammaEvaluator ev(p5, 6);
    PadicNumber u = PadicNumber::from_integer(7, p5, 6);
    CHECK(ev.hp(u).indistinguishable(-u));
    CHECK(ev.hp(PadicNumber::from_integer(0, p5, 6))
              .indistinguishable(PadicNumber::from_integer(-1, p5, 6)));
    CHECK(ev.hp(PadicNumber::from_integer(5, p5, 6))
              .indistinguishable(PadicNumber::from_integer(-1, p5, 6)));
    CHECK_THROWS_AS(ev.hp(PadicNumber::from_rational(1, 5, p5, 6)), not_integral);
}

TEST_CASE("functional equation on naturals and random samples") {
    Prime p5(5);
    GammaEvaluator ev(p5, 8);
    CHECK(ev.check_functional(PadicNumber::one(p5, 8)));
    CHECK(ev.check_functional(PadicNumber::from_integer(5, p5, 8)));
    for (std::uint64_t q : {2, 3, 5, 7}) {
        GammaEvaluator e(Prime(q), 8);
        SplitMix64 rng(q);
        for (int i = 0; i < 100; ++i)
            CHECK(e.check_functional(
                PadicNumber::from_integer(BigInt(rng.below(20000)), Prime(q), 8)));
    }
}

TEST_CASE("p-step recurrence on pZ_p") {
    GammaEvaluator e3(Prime(3), 8);
    CHECK(e3.check_pstep(PadicNumber::from_integer(0, Prime(3), 8)));
    GammaEvaluator e2(Prime(2), 8);
    CHECK(e2.check_pstep(PadicNumber::from_integer(0, Prime(2), 8)));
    for (std::uint64_t q : {2, 3, 5, 7}) {
        GammaEvaluator e(Prime(q), 8);
        SplitMix64 rng(q + 100);
        for (int i = 0; i < 100; ++i)
            CHECK(e.check_pstep(
                PadicNumber::from_integer(BigInt(q) * rng.below(5000), Prime(q), 8)));
    }
    CHECK_THROWS_AS(e3.check_pstep(PadicNumber::one(Prime(3), 8)), not_in_maximal_ideal);
}

TEST_CASE("iterating the functional equation p times reproduces the p-step form") {
    for (std::uint64_t q : {2, 3, 5}) {
        Prime p(q);
        GammaEvaluator ev(p, 10);
        SplitMix64 rng(q + 7);
        for (int i = 0; i < 25; ++i) {
            PadicNumber x = PadicNumber::from_integer(BigInt(q) * rng.below(2000), p, 10);
            // chain: Gamma(x+p) = h(x+p-1) h(x+p-2) ... h(x) Gamma(x)
            PadicNumber acc = ev.gamma(x);
            PadicNumber cur = x;
            for (std::uint64_t s = 0; s < q; ++s) {
                acc = ev.hp(cur) * acc;
                cur = cur + PadicNumber::one(p, 10);
            }
            PadicNumber direct =
                ev.gamma(x + PadicNumber::from_integer(BigInt(q), p, 10));
            CHECK(direct.indistinguishable(acc));
            // and the window product equals f(x)
            PadicNumber fx = eval_padic(f_poly(p), x, 10);
            CHECK((direct - fx * ev.gamma(x)).is_zero());
        }
    }
}
