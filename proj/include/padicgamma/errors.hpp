#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padicgamma {

// Every throwing operation in the library raises one of these.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_prime : error { using error::error; };
struct prime_mismatch : error { using error::error; };
struct division_by_zero : error { using error::error; };
struct not_invertible : error { using error::error; };
struct not_integral : error { using error::error; };
struct not_in_maximal_ideal : error { using error::error; };
struct insufficient_precision : error { using error::error; };
struct precision_exhausted : error { using error::error; };
struct work_limit_exceeded : error { using error::error; };
struct zero_polynomial : error { using error::error; };
struct no_y_term : error { using error::error; };
struct not_divisible : error { using error::error; };
struct length_mismatch : error { using error::error; };
struct order_exceeded : error { using error::error; };
struct config_rejected : error { using error::error; };

// Carries the byte offset of the offending token.
struct syntax_error : error {
    std::size_t position;
    syntax_error(const std::string& msg, std::size_t pos)
        : error(msg + " at offset " + std::to_string(pos)), position(pos) {}
};

} // namespace padicgamma
