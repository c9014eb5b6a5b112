#include "padicgamma/prime.hpp"

namespace padicgamma {

bool Prime::is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n < bound; ++n)
        if (Prime::is_prime(n)) out.push_back(n);
    return out;
}

} // namespace padicgamma
