#include "padicgamma/padic.hpp"

#include <sstream>

namespace padicgamma {

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt acc = 1, b = base;
    while (exp) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

BigInt mod_inverse(const BigInt& a, const BigInt& modulus) {
    BigInt r0 = modulus, r1 = a % modulus, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += modulus;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw not_invertible("element not invertible modulo p^K");
    s0 %= modulus;
    if (s0 < 0) s0 += modulus;
    return s0;
}

std::int64_t int_valuation(BigInt n, std::uint64_t p) {
    if (n == 0) throw division_by_zero("valuation of exact zero");
    if (n < 0) n = -n;
    std::int64_t v = 0;
    if (p == 2) return static_cast<std::int64_t>(boost::multiprecision::lsb(n));
    BigInt q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, BigInt(p), q, r);
        if (r != 0) return v;
        n = q;
        ++v;
    }
}

PadicNumber PadicNumber::zero(const Prime& p, std::int64_t abs_prec) {
    return PadicNumber(p, true, 0, 0, abs_prec);
}

PadicNumber PadicNumber::one(const Prime& p, std::int32_t prec) {
    return make(p, 0, 1, prec);
}

PadicNumber PadicNumber::make(const Prime& p, std::int64_t v, const BigInt& u, std::int32_t prec) {
    if (prec < 1) throw insufficient_precision("relative precision must be >= 1");
    BigInt modulus = big_pow(p.value(), static_cast<std::uint64_t>(prec));
    BigInt r = u % modulus;
    if (r < 0) r += modulus;
    if (r == 0) return zero(p, v + prec);
    std::int64_t extra = int_valuation(r, p.value());
    if (extra > 0) {
        // Not a unit: renormalize, losing the shifted digits.
        r /= big_pow(p.value(), static_cast<std::uint64_t>(extra));
        std::int64_t k = prec - extra;
        if (k < 1) return zero(p, v + prec);
        r %= big_pow(p.value(), static_cast<std::uint64_t>(k));
        return PadicNumber(p, false, v + extra, r, k);
    }
    return PadicNumber(p, false, v, r, prec);
}

PadicNumber PadicNumber::from_integer(const BigInt& n, const Prime& p, std::int32_t prec) {
    if (prec < 1) throw insufficient_precision("relative precision must be >= 1");
    if (n == 0) return zero(p, prec);
    std::int64_t v = int_valuation(n, p.value());
    BigInt u = n / big_pow(p.value(), static_cast<std::uint64_t>(v));
    return make(p, v, u, prec);
}

PadicNumber PadicNumber::from_rational(const BigInt& a, const BigInt& b, const Prime& p,
                                       std::int32_t prec) {
    if (b == 0) throw division_by_zero("denominator must be nonzero");
    if (a == 0) return zero(p, prec);
    std::int64_t va = int_valuation(a, p.value());
    std::int64_t vb = int_valuation(b, p.value());
    BigInt modulus = big_pow(p.value(), static_cast<std::uint64_t>(prec));
    BigInt ua = (a / big_pow(p.value(), static_cast<std::uint64_t>(va))) % modulus;
    BigInt ub = (b / big_pow(p.value(), static_cast<std::uint64_t>(vb))) % modulus;
    if (ua < 0) ua += modulus;
    if (ub < 0) ub += modulus;
    return make(p, va - vb, ua * mod_inverse(ub, modulus), prec);
}

std::optional<std::int64_t> PadicNumber::valuation() const {
    if (zero_) return std::nullopt;
    return val_;
}

const BigInt& PadicNumber::unit() const {
    if (zero_) throw not_invertible("the zero element has no unit part");
    return unit_;
}

BigRat PadicNumber::norm() const {
    if (zero_) return BigRat(0);
    BigInt pw = big_pow(prime_.value(), static_cast<std::uint64_t>(val_ < 0 ? -val_ : val_));
    return val_ >= 0 ? BigRat(1, pw) : BigRat(pw, 1);
}

std::vector<std::uint32_t> PadicNumber::digits() const {
    std::vector<std::uint32_t> out;
    if (zero_) return out;
    BigInt u = unit_;
    const BigInt p = prime_.value();
    BigInt q, r;
    while (u != 0) {
        boost::multiprecision::divide_qr(u, p, q, r);
        out.push_back(r.convert_to<std::uint32_t>());
        u = q;
    }
    return out;
}

BigInt PadicNumber::representative(std::int64_t k) const {
    if (abs_precision() < k)
        throw insufficient_precision("value certified to fewer digits than requested");
    if (zero_) return 0;
    if (val_ < 0) throw not_integral("value has negative valuation");
    if (val_ >= k) return 0;
    BigInt rep = unit_ * big_pow(prime_.value(), static_cast<std::uint64_t>(val_));
    return rep % big_pow(prime_.value(), static_cast<std::uint64_t>(k));
}

PadicNumber PadicNumber::truncate_abs(std::int64_t abs_prec) const {
    if (abs_prec >= abs_precision()) return *this;
    if (zero_ || abs_prec <= val_) return zero(prime_, abs_prec);
    std::int64_t k = abs_prec - val_;
    return make(prime_, val_, unit_ % big_pow(prime_.value(), static_cast<std::uint64_t>(k)),
                static_cast<std::int32_t>(k));
}

void PadicNumber::require_same_prime(const PadicNumber& a, const PadicNumber& b) {
    if (a.prime_ != b.prime_)
        throw prime_mismatch("operands live in different Q_p");
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    PadicNumber::require_same_prime(a, b);
    const Prime& p = a.prime_;
    std::int64_t abs = std::min(a.abs_precision(), b.abs_precision());
    if (a.zero_ && b.zero_) return PadicNumber::zero(p, abs);
    if (a.zero_) return b.truncate_abs(abs);
    if (b.zero_) return a.truncate_abs(abs);
    std::int64_t w = std::min(a.val_, b.val_);
    std::int64_t len = abs - w;
    if (len < 1) return PadicNumber::zero(p, abs);
    BigInt s = a.unit_ * big_pow(p.value(), static_cast<std::uint64_t>(a.val_ - w)) +
               b.unit_ * big_pow(p.value(), static_cast<std::uint64_t>(b.val_ - w));
    return PadicNumber::make(p, w, s, static_cast<std::int32_t>(len));
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    BigInt modulus = big_pow(prime_.value(), static_cast<std::uint64_t>(prec_));
    return PadicNumber(prime_, false, val_, modulus - unit_, prec_);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    PadicNumber::require_same_prime(a, b);
    const Prime& p = a.prime_;
    if (a.zero_ && b.zero_) return PadicNumber::zero(p, a.prec_ + b.prec_);
    if (a.zero_) return PadicNumber::zero(p, a.prec_ + b.val_);
    if (b.zero_) return PadicNumber::zero(p, b.prec_ + a.val_);
    std::int32_t k = static_cast<std::int32_t>(std::min(a.prec_, b.prec_));
    return PadicNumber::make(p, a.val_ + b.val_, a.unit_ * b.unit_, k);
}

PadicNumber PadicNumber::invert() const {
    if (zero_) throw not_invertible("cannot invert a value indistinguishable from zero");
    BigInt modulus = big_pow(prime_.value(), static_cast<std::uint64_t>(prec_));
    return PadicNumber(prime_, false, -val_, mod_inverse(unit_, modulus), prec_);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) { return a * b.invert(); }

PadicNumber PadicNumber::pow(std::uint64_t e) const {
    if (e == 0) return one(prime_, zero_ ? 1 : static_cast<std::int32_t>(prec_));
    PadicNumber acc = *this;
    for (std::uint64_t i = 1; i < e; ++i) acc = acc * *this;
    return acc;
}

bool PadicNumber::indistinguishable(const PadicNumber& other) const {
    return (*this - other).is_zero();
}

std::string PadicNumber::str() const {
    const std::uint64_t p = prime_.value();
    std::ostringstream os;
    if (zero_) {
        os << "0 + O(" << p << "^" << prec_ << ")";
        return os.str();
    }
    os << p << "^" << val_ << " * (";
    auto ds = digits();
    bool first = true;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (ds[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << ds[i];
        } else {
            os << ds[i] << "*" << p;
            if (i > 1) os << "^" << i;
        }
    }
    os << ") + O(" << p << "^" << (val_ + prec_) << ")";
    return os.str();
}

} // namespace padicgamma
