#include "padicgamma/linalg.hpp"

#include <algorithm>

namespace padicgamma {

RowReduceResult padic_row_reduce(PadicMatrix m, std::int64_t certified) {
    if (m.empty() || m[0].empty()) return {0, {}, certified, {}};
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw length_mismatch("ragged matrix");
    const Prime p = m[0][0].prime();
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.abs_precision() < certified)
                throw precision_exhausted(
                    "matrix entry carries fewer certified digits than claimed");

    RowReduceResult out;
    out.certified_digits = certified;
    std::vector<bool> row_used(rows, false);
    std::vector<bool> col_used(cols, false);
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col) in order

    for (;;) {
        bool found = false;
        std::int64_t best_val = 0;
        std::size_t best_r = 0, best_c = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (col_used[c]) continue;
            for (std::size_t r = 0; r < rows; ++r) {
                if (row_used[r] || m[r][c].is_zero()) continue;
                std::int64_t v = *m[r][c].valuation();
                if (v >= out.certified_digits) continue;
                if (!found || v < best_val) {
                    found = true;
                    best_val = v;
                    best_r = r;
                    best_c = c;
                }
            }
        }
        if (!found) break;

        pivots.emplace_back(best_r, best_c);
        out.pivot_valuations.push_back(best_val);
        row_used[best_r] = true;
        col_used[best_c] = true;
        ++out.rank;

        const PadicNumber& piv = m[best_r][best_c];
        for (std::size_t r = 0; r < rows; ++r) {
            if (row_used[r] || m[r][best_c].is_zero()) continue;
            PadicNumber mult = m[r][best_c] / piv; // valuation >= 0 by pivot minimality
            for (std::size_t c = 0; c < cols; ++c)
                m[r][c] = m[r][c] - mult * m[best_r][c];
        }
        out.certified_digits -= best_val;
        if (out.certified_digits <= 0) break;
    }

    // Everything left must be indistinguishable from zero at the running
    // certificate, otherwise the input precision cannot support a verdict.
    if (out.certified_digits > 0) {
        for (std::size_t r = 0; r < rows; ++r) {
            if (row_used[r]) continue;
            for (std::size_t c = 0; c < cols; ++c) {
                if (col_used[c]) continue;
                const PadicNumber& e = m[r][c];
                if (e.is_zero() && e.abs_precision() < out.certified_digits)
                    throw precision_exhausted(
                        "entry certified to fewer digits than the running certificate");
            }
        }
    }

    // Back-substitute one nullspace vector per free column. Pivot rows are
    // upper triangular with respect to the pivot order.
    const std::int32_t vec_prec =
        static_cast<std::int32_t>(std::max<std::int64_t>(certified, 1));
    for (std::size_t f = 0; f < cols; ++f) {
        if (col_used[f]) continue;
        std::vector<PadicNumber> v(cols, PadicNumber::zero(p, vec_prec));
        v[f] = PadicNumber::one(p, vec_prec);
        for (std::size_t i = pivots.size(); i-- > 0;) {
            auto [pr, pc] = pivots[i];
            PadicNumber s = PadicNumber::zero(p, vec_prec);
            for (std::size_t c = 0; c < cols; ++c) {
                if (c == pc || v[c].is_zero()) continue;
                s = s + m[pr][c] * v[c];
            }
            v[pc] = -(s / m[pr][pc]);
        }
        // normalize: first entry of minimal valuation becomes exactly 1
        std::size_t lead = cols;
        std::int64_t lead_val = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (v[c].is_zero()) continue;
            std::int64_t val = *v[c].valuation();
            if (lead == cols || val < lead_val) {
                lead = c;
                lead_val = val;
            }
        }
        if (lead < cols) {
            PadicNumber inv = v[lead].invert();
            for (auto& e : v) e = e * inv;
        }
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

} // namespace padicgamma
