#include "padicgamma/gamma.hpp"

#include <mutex>

namespace padicgamma {

BigInt restricted_factorial(std::uint64_t n, const Prime& p) {
    BigInt acc = 1;
    for (std::uint64_t j = 1; j <= n; ++j)
        if (j % p.value() != 0) acc *= j;
    return acc;
}

bool wilson_check(const Prime& p) {
    BigInt acc = 1;
    for (std::uint64_t j = 1; j < p.value(); ++j) acc = (acc * j) % p.value();
    return (acc + 1) % p.value() == 0;
}

IntPolynomial f_poly(const Prime& p) {
    IntPolynomial f = IntPolynomial::constant(1);
    for (std::uint64_t j = 1; j < p.value(); ++j)
        f = f * IntPolynomial{BigInt(j), BigInt(1)};
    if (p.value() % 2 == 1) f = -f;
    return f;
}

GammaEvaluator::GammaEvaluator(const Prime& p, std::int32_t prec, std::uint64_t work_limit)
    : p_(p), prec_(prec), work_limit_(work_limit) {
    if (prec < 1) throw config_rejected("precision must be >= 1");
    modulus_ = big_pow(p.value(), static_cast<std::uint64_t>(prec));
    prefix_.push_back(1); // empty product for n = 0
}

void GammaEvaluator::reserve(std::uint64_t n) const {
    std::unique_lock lock(mutex_);
    while (prefix_.size() <= n) {
        std::uint64_t j = prefix_.size() - 1; // last factor below the new index
        BigInt next = prefix_.back();
        if (j >= 1 && j % p_.value() != 0) next = (next * j) % modulus_;
        prefix_.push_back(std::move(next));
    }
}

BigInt GammaEvaluator::prefix(std::uint64_t n) const {
    {
        std::shared_lock lock(mutex_);
        if (n < prefix_.size()) return prefix_[n];
    }
    reserve(n);
    std::shared_lock lock(mutex_);
    return prefix_[n];
}

PadicNumber GammaEvaluator::gamma_nat(std::uint64_t n) const {
    if (n > work_limit_)
        throw work_limit_exceeded("representative " + std::to_string(n) +
                                  " exceeds the work limit " + std::to_string(work_limit_));
    BigInt u = prefix(n);
    if (n % 2 == 1) u = modulus_ - u;
    return PadicNumber::make(p_, 0, u, prec_);
}

PadicNumber GammaEvaluator::gamma(const PadicNumber& x) const {
    if (x.prime() != p_) throw prime_mismatch("evaluator and argument disagree on p");
    if (!x.in_Zp()) throw not_integral("Gamma_p is defined on Z_p only");
    if (p_.value() == 2 && prec_ < 3)
        throw config_rejected("continuity transfer at p=2 requires K >= 3");
    BigInt rep = x.representative(prec_);
    if (rep > work_limit_)
        throw work_limit_exceeded("representative " + rep.str() +
                                  " exceeds the work limit " + std::to_string(work_limit_));
    return gamma_nat(rep.convert_to<std::uint64_t>());
}

PadicNumber GammaEvaluator::hp(const PadicNumber& x) const {
    if (x.prime() != p_) throw prime_mismatch("evaluator and argument disagree on p");
    if (!x.in_Zp()) throw not_integral("h_p is defined on Z_p only");
    if (x.is_unit()) return -x;
    return PadicNumber::from_integer(-1, p_, prec_);
}

bool GammaEvaluator::check_functional(const PadicNumber& x) const {
    PadicNumber lhs = gamma(x + PadicNumber::one(p_, prec_));
    PadicNumber rhs = hp(x) * gamma(x);
    return (lhs - rhs).is_zero();
}

bool GammaEvaluator::check_pstep(const PadicNumber& x) const {
    if (!x.in_pZp()) throw not_in_maximal_ideal("p-step recurrence lives on pZ_p");
    PadicNumber step = PadicNumber::from_integer(BigInt(p_.value()), p_, prec_);
    PadicNumber lhs = gamma(x + step);
    PadicNumber rhs = eval_padic(f_poly(p_), x, prec_) * gamma(x);
    return (lhs - rhs).is_zero();
}

} // namespace padicgamma
