#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padicgamma/errors.hpp"
#include "padicgamma/prime.hpp"

namespace padicgamma {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt big_pow(std::uint64_t base, std::uint64_t exp);
BigInt mod_inverse(const BigInt& a, const BigInt& modulus);
std::int64_t int_valuation(BigInt n, std::uint64_t p); // n must be nonzero

// An element of Q_p known to finite precision.
//
// Nonzero values are stored as p^v * u + O(p^(v+K)) with 0 < u < p^K and
// p !| u; K is the count of certified relative digits. The distinguished
// zero stores only an absolute bound O(p^A): "indistinguishable from zero
// below p^A", never a claim of exact nullity. There is deliberately no
// operator==; equality of inexact values is meaningless beyond the shared
// certified precision (see indistinguishable()).
//
// Values are immutable; all arithmetic is pure. Multiplication intersects
// relative precision, addition intersects absolute precision, and
// cancellation surfaces as lost relative digits rather than wrong ones.
class PadicNumber {
  public:
    static PadicNumber from_integer(const BigInt& n, const Prime& p, std::int32_t prec);
    static PadicNumber from_rational(const BigInt& a, const BigInt& b, const Prime& p,
                                     std::int32_t prec);
    static PadicNumber zero(const Prime& p, std::int64_t abs_prec);
    static PadicNumber one(const Prime& p, std::int32_t prec);
    // Raw constructor: value p^v * u at K relative digits; u reduced mod p^K.
    static PadicNumber make(const Prime& p, std::int64_t v, const BigInt& u, std::int32_t prec);

    const Prime& prime() const { return prime_; }
    bool is_zero() const { return zero_; }
    // nullopt encodes the +infinity convention for the zero element.
    std::optional<std::int64_t> valuation() const;
    std::int64_t abs_precision() const { return zero_ ? prec_ : val_ + prec_; }
    std::int32_t rel_precision() const { return zero_ ? 0 : static_cast<std::int32_t>(prec_); }
    const BigInt& unit() const;
    BigRat norm() const; // p^(-v); exact 0 for the zero element
    bool is_unit() const { return !zero_ && val_ == 0; }
    bool in_Zp() const { return zero_ || val_ >= 0; }
    bool in_pZp() const { return zero_ || val_ >= 1; }

    // Base-p digits of the unit part, little-endian, trailing zeros stripped.
    std::vector<std::uint32_t> digits() const;

    // Natural representative of the value mod p^k (requires the value to be
    // integral and certified to at least k absolute digits).
    BigInt representative(std::int64_t k) const;

    PadicNumber truncate_abs(std::int64_t abs_prec) const;

    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
    PadicNumber operator-() const;
    PadicNumber invert() const;
    PadicNumber pow(std::uint64_t e) const;

    // True when a - b is indistinguishable from zero at the shared certified
    // precision; the strongest equality this representation can assert.
    bool indistinguishable(const PadicNumber& other) const;

    // Canonical text: p^v * (d0 + d1*p + d2*p^2 + ...) + O(p^(v+K)), zero
    // digits omitted; the zero element prints as 0 + O(p^A). Bit-exact.
    std::string str() const;

  private:
    PadicNumber(const Prime& p, bool zero, std::int64_t val, BigInt unit, std::int64_t prec)
        : prime_(p), zero_(zero), val_(val), unit_(std::move(unit)), prec_(prec) {}

    static void require_same_prime(const PadicNumber& a, const PadicNumber& b);

    Prime prime_;
    bool zero_;
    std::int64_t val_;  // unused for the zero element
    BigInt unit_;       // unused for the zero element
    std::int64_t prec_; // relative digits; absolute bound for the zero element
};

} // namespace padicgamma
