#pragma once

#include <cstdint>
#include <vector>

#include "padicgamma/padic.hpp"

namespace padicgamma {

using PadicMatrix = std::vector<std::vector<PadicNumber>>;

struct RowReduceResult {
    std::size_t rank = 0;
    // Basis of the nullspace at the final certified precision, one vector per
    // free column, each normalized so its first minimal-valuation entry is 1.
    std::vector<std::vector<PadicNumber>> nullspace;
    std::int64_t certified_digits = 0;
    std::vector<std::int64_t> pivot_valuations;
};

// Gaussian elimination over Q_p with ultrametric pivoting: the pivot is the
// entry of minimal valuation in the active block (ties broken by column then
// row, deterministically). Eliminating with a pivot of valuation v divides by
// it, so the active block afterwards is certified only to v fewer absolute
// digits; the running certificate starts at `certified` and shrinks by each
// pivot valuation. A pivot is admissible only while its valuation is strictly
// below the running certificate. Throws precision_exhausted when the leftover
// block cannot be certified zero at the running precision.
RowReduceResult padic_row_reduce(PadicMatrix m, std::int64_t certified);

} // namespace padicgamma
