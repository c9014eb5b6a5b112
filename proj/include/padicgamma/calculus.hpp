#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "padicgamma/gamma.hpp"
#include "padicgamma/padic.hpp"
#include "padicgamma/polynomial.hpp"

namespace padicgamma {

// Digits subtracted from every derivative-estimate certificate to absorb the
// local-analyticity remainder of the underlying function.
inline constexpr int kDefaultGuard = 4;

BigInt binomial(std::uint64_t n, std::uint64_t k);

using PointFunction = std::function<PadicNumber(const PadicNumber&)>;

// k-th iterated forward difference of fn at x with step h = p^m, divided by
// h^k. The division costs exactly k*m absolute digits, hence the certificate
// K - k*m - guard; the estimate itself is an exact function of the K-digit
// inputs and is bit-reproducible.
struct DerivativeEstimate {
    PadicNumber value;
    std::uint32_t order;
    std::uint32_t step_exponent;
    std::int64_t certified_digits;
};

DerivativeEstimate finite_difference_derivative(const PointFunction& fn, const PadicNumber& x,
                                                std::uint32_t k, std::uint32_t m,
                                                std::int32_t prec, int guard = kDefaultGuard);

struct ChainCheckLine {
    std::uint32_t order;
    std::int64_t threshold;             // K - order*m - guard
    std::int64_t discrepancy_valuation; // lower bound when the discrepancy vanishes
    bool vanishes;
    bool pass;
};

struct ChainCheckReport {
    std::vector<ChainCheckLine> lines;
    bool pass = true;
    std::string str() const;
};

// Compares the direct estimate of g^(j)(x+p) against
//   sum_{k<=j} C(j,k) f^(j-k)(x) g^(k)(x)
// for every j <= n, with exact binomial coefficients. For f = f_poly(p) and
// g = Gamma_p|pZp this is the derivative chain of the p-step recurrence.
ChainCheckReport leibniz_chain_check(const PointFunction& g, const IntPolynomial& f,
                                     const Prime& p, const PadicNumber& x, std::uint32_t n,
                                     std::uint32_t m, std::int32_t prec,
                                     int guard = kDefaultGuard);

} // namespace padicgamma
