#pragma once

#include <cstdint>
#include <vector>

#include "padicgamma/errors.hpp"

namespace padicgamma {

// A certified prime. Primality is checked once at construction (trial
// division; the toolkit never needs primes beyond desk scale).
class Prime {
  public:
    explicit Prime(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw not_prime(std::to_string(p) + " is not prime");
    }

    std::uint64_t value() const { return p_; }

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

    static bool is_prime(std::uint64_t n);

  private:
    std::uint64_t p_;
};

std::vector<std::uint64_t> primes_below(std::uint64_t bound);

} // namespace padicgamma
