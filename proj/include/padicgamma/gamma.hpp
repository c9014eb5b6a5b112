#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "padicgamma/padic.hpp"
#include "padicgamma/polynomial.hpp"

namespace padicgamma {

// prod of j in [1, n] with p !| j; the empty product is 1.
BigInt restricted_factorial(std::uint64_t n, const Prime& p);

// (p-1)! == -1 mod p; true for every prime.
bool wilson_check(const Prime& p);

// f(X) = (-1)^p (X+1)(X+2)...(X+p-1), expanded. Degree p-1, leading
// coefficient (-1)^p; drives the p-step recurrence g(x+p) = f(x) g(x).
IntPolynomial f_poly(const Prime& p);

// Morita p-adic gamma at a fixed (p, K): Gamma_p(n) = (-1)^n prod_{1<=j<n,
// p!|j} j on naturals (product strictly below n, the convention forced by
// the functional equation), extended to Z_p by continuity. Evaluation at
// x in Z_p reduces to the natural representative N = x mod p^K; the cost is
// O(N) multiplications, so a work limit rejects representatives beyond the
// configured budget instead of running unbounded loops.
//
// Thread safety: the running-product cache grows under an exclusive lock and
// is read under a shared one; results are value-identical either way. Call
// reserve() before fanning out to avoid write contention.
class GammaEvaluator {
  public:
    static constexpr std::uint64_t kDefaultWorkLimit = 1'000'000;

    GammaEvaluator(const Prime& p, std::int32_t prec,
                   std::uint64_t work_limit = kDefaultWorkLimit);

    const Prime& prime() const { return p_; }
    std::int32_t precision() const { return prec_; }
    std::uint64_t work_limit() const { return work_limit_; }

    PadicNumber gamma_nat(std::uint64_t n) const;
    // Continuity transfer; requires x in Z_p carrying >= K certified digits.
    // For p = 2 the transfer is only valid from K >= 3 on (the units of
    // Z/4 multiply to -1, not +1), so smaller precisions are rejected.
    PadicNumber gamma(const PadicNumber& x) const;
    PadicNumber hp(const PadicNumber& x) const;

    // Gamma_p(x+1) == h_p(x) Gamma_p(x) at the shared certified precision.
    bool check_functional(const PadicNumber& x) const;
    // g(x+p) == f(x) g(x) on pZ_p at the shared certified precision.
    bool check_pstep(const PadicNumber& x) const;

    void reserve(std::uint64_t n) const;

  private:
    BigInt prefix(std::uint64_t n) const; // prod_{1<=j<n, p!|j} j mod p^K

    Prime p_;
    std::int32_t prec_;
    BigInt modulus_;
    std::uint64_t work_limit_;
    mutable std::vector<BigInt> prefix_;
    mutable std::shared_mutex mutex_;
};

} // namespace padicgamma
