#include "padicgamma/falsifier.hpp"

#include <algorithm>
#include <set>

#include "padicgamma/json_io.hpp"

namespace padicgamma {

namespace {

// All alpha over n+1 variables with |alpha| <= d, antilex-ascending.
void collect_alphas(std::size_t pos, std::uint32_t rem, ExponentVector& cur,
                    std::vector<ExponentVector>& out) {
    if (pos == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t e = 0; e <= rem; ++e) {
        cur[pos] = e;
        collect_alphas(pos + 1, rem - e, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<std::pair<std::uint32_t, ExponentVector>> enumerate_monomials(
    const SearchBounds& bounds) {
    std::vector<ExponentVector> alphas;
    ExponentVector cur(bounds.order + 1, 0);
    collect_alphas(0, bounds.y_degree, cur, alphas);
    std::sort(alphas.begin(), alphas.end(), [](const ExponentVector& a, const ExponentVector& b) {
        return antilex_compare(a, b) == std::strong_ordering::less;
    });
    std::vector<std::pair<std::uint32_t, ExponentVector>> out;
    out.reserve(alphas.size() * (bounds.x_degree + 1));
    for (const auto& a : alphas)
        for (std::uint32_t j = 0; j <= bounds.x_degree; ++j) out.emplace_back(j, a);
    return out;
}

std::size_t column_count(const SearchBounds& bounds) {
    // (e+1) * #{alpha : |alpha| <= d over n+1 variables}
    std::size_t count = 1;
    for (std::uint32_t i = 1; i <= bounds.order + 1; ++i)
        count = count * (bounds.y_degree + i) / i;
    return count * (bounds.x_degree + 1);
}

JetSource make_jet_source(SearchTarget target, const Prime& p, std::uint32_t order,
                          const FalsifierConfig& config) {
    const std::int32_t prec = config.precision;
    switch (target) {
        case SearchTarget::gamma: {
            auto ev = std::make_shared<GammaEvaluator>(p, prec, config.work_limit);
            PointFunction g = [ev](const PadicNumber& x) { return ev->gamma(x); };
            std::uint32_t m = config.step_exponent;
            int guard = config.guard;
            return {"gamma", order, false,
                    [g, order, m, prec, guard](const PadicNumber& x) {
                        std::vector<PadicNumber> jet;
                        jet.reserve(order + 1);
                        for (std::uint32_t k = 0; k <= order; ++k)
                            jet.push_back(
                                finite_difference_derivative(g, x, k, m, prec, guard).value);
                        return jet;
                    },
                    ev};
        }
        case SearchTarget::control_identity:
            // g(x) = x: jet is (x, 1, 0, ...).
            return {"identity", order, true, [p, prec, order](const PadicNumber& x) {
                        std::vector<PadicNumber> jet{x};
                        if (order >= 1) jet.push_back(PadicNumber::one(p, prec));
                        for (std::uint32_t k = 2; k <= order; ++k)
                            jet.push_back(PadicNumber::zero(p, prec));
                        return jet;
                    },
                    nullptr};
        case SearchTarget::control_reciprocal:
            // g(x) = 1/(x-1) on pZ_p; g^(k) = (-1)^k k! (x-1)^-(k+1).
            return {"reciprocal", order, true, [p, prec, order](const PadicNumber& x) {
                        PadicNumber base = (x - PadicNumber::one(p, prec)).invert();
                        std::vector<PadicNumber> jet;
                        BigInt kfac = 1;
                        for (std::uint32_t k = 0; k <= order; ++k) {
                            if (k > 0) kfac *= k;
                            BigInt c = (k % 2 == 1) ? BigInt(-kfac) : kfac;
                            jet.push_back(PadicNumber::from_integer(c, p, prec) *
                                          base.pow(k + 1));
                        }
                        return jet;
                    },
                    nullptr};
    }
    throw config_rejected("unknown search target");
}

std::vector<PadicNumber> draw_samples(const Prime& p, const FalsifierConfig& config,
                                      std::size_t count, SplitMix64& rng) {
    std::vector<PadicNumber> pts;
    std::set<std::uint64_t> seen;
    while (pts.size() < count) {
        std::uint64_t u = 1 + rng.below(config.draw_range);
        if (u % p.value() == 0 || !seen.insert(u).second) continue;
        pts.push_back(PadicNumber::from_integer(BigInt(u) * p.value(), p, config.precision));
    }
    return pts;
}

namespace {

std::vector<PadicNumber> matrix_row(const JetSource& source,
                                    const std::vector<std::pair<std::uint32_t, ExponentVector>>& cols,
                                    const PadicNumber& x, std::int32_t precision) {
    std::vector<PadicNumber> jet = source.jets(x);
    std::vector<PadicNumber> row;
    row.reserve(cols.size());
    for (const auto& [j, alpha] : cols) {
        PadicNumber entry = j == 0 ? PadicNumber::one(x.prime(), precision) : x.pow(j);
        for (std::size_t k = 0; k < alpha.size(); ++k)
            if (alpha[k] > 0) entry = entry * jet[k].pow(alpha[k]);
        row.push_back(entry);
    }
    return row;
}

} // namespace

PadicMatrix build_matrix(const JetSource& source, const SearchBounds& bounds,
                         const std::vector<PadicNumber>& points, std::int32_t precision,
                         bool parallel) {
    auto cols = enumerate_monomials(bounds);
    PadicMatrix m(points.size());
    std::vector<std::string> errors(points.size());
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i) {
            try {
                m[static_cast<std::size_t>(i)] =
                    matrix_row(source, cols, points[static_cast<std::size_t>(i)], precision);
            } catch (const std::exception& e) {
                errors[static_cast<std::size_t>(i)] = e.what();
            }
        }
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) {
            try {
                m[i] = matrix_row(source, cols, points[i], precision);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw insufficient_precision(e);
    return m;
}

nlohmann::ordered_json AnnihilatorReport::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["bounds"] = {{"n", bounds.order}, {"d", bounds.y_degree}, {"e", bounds.x_degree}};
    j["config"] = {{"K", config.precision},
                   {"m", config.step_exponent},
                   {"samples", config.samples},
                   {"seed", config.seed},
                   {"guard", config.guard}};
    j["status"] = status == SearchStatus::found ? "found" : "none_at_precision";
    j["rank"] = rank;
    j["columns"] = columns;
    j["certified_digits"] = certified_digits;
    if (annihilator.empty()) {
        j["annihilator"] = nullptr;
    } else {
        auto terms = nlohmann::ordered_json::array();
        for (const auto& t : annihilator) {
            nlohmann::ordered_json term;
            term["j"] = t.x_power;
            term["alpha"] = t.alpha;
            term["coeff"] = t.coeff.str();
            terms.push_back(std::move(term));
        }
        j["annihilator"] = {{"terms", std::move(terms)}};
    }
    j["residual_valuations"] = residual_valuations;
    return j;
}

std::string AnnihilatorReport::to_bytes() const { return to_json().dump(); }

AnnihilatorReport search_annihilator(const Prime& p, const SearchBounds& bounds,
                                     const FalsifierConfig& config_in, SearchTarget target) {
    FalsifierConfig config = config_in;
    if (bounds.y_degree < 1) throw config_rejected("Y-degree bound must be >= 1");

    const bool exact = target != SearchTarget::gamma;
    const std::int64_t entry_certified =
        config.precision -
        (exact ? 0 : static_cast<std::int64_t>(bounds.order) * config.step_exponent) -
        config.guard;
    if (entry_certified < config.min_certified)
        throw config_rejected("precision budget K - n*m - guard = " +
                              std::to_string(entry_certified) + " is below the minimum " +
                              std::to_string(config.min_certified) + " certified digits");

    const std::size_t columns = column_count(bounds);
    if (config.samples == 0) config.samples = 2 * columns;
    if (config.samples < columns)
        throw config_rejected("need at least as many samples as columns");

    JetSource source = make_jet_source(target, p, bounds.order, config);
    SplitMix64 rng(config.seed);
    // one disjoint pool: constraint samples first, held-out validation after
    std::vector<PadicNumber> pool =
        draw_samples(p, config, config.samples + 2 * columns, rng);
    std::vector<PadicNumber> points(pool.begin(),
                                    pool.begin() + static_cast<std::ptrdiff_t>(config.samples));
    std::vector<PadicNumber> held_out(
        pool.begin() + static_cast<std::ptrdiff_t>(config.samples), pool.end());

    if (source.evaluator) {
        // warm the factorial cache serially so parallel rows only read
        std::uint64_t max_rep = 0;
        for (const auto& x : pool)
            max_rep = std::max(max_rep, x.representative(config.precision)
                                            .convert_to<std::uint64_t>());
        std::uint64_t reach = max_rep + p.value() +
                              bounds.order * big_pow(p.value(), config.step_exponent)
                                                 .convert_to<std::uint64_t>() + 2;
        if (reach > config.work_limit)
            throw config_rejected("sample range exceeds the work limit");
        source.evaluator->reserve(reach);
    }

    PadicMatrix matrix = build_matrix(source, bounds, points, config.precision, config.parallel);
    RowReduceResult red = padic_row_reduce(matrix, entry_certified);

    AnnihilatorReport report;
    report.p = p.value();
    report.bounds = bounds;
    report.config = config;
    report.rank = red.rank;
    report.columns = columns;
    report.certified_digits = red.certified_digits;

    if (red.rank == columns) {
        report.status = SearchStatus::none_at_precision;
        return report;
    }

    // Reconstruct the first nullspace vector and cross-validate it on fresh
    // held-out samples before claiming anything.
    const auto& vec = red.nullspace.front();
    auto cols = enumerate_monomials(bounds);
    const std::int64_t threshold = std::max<std::int64_t>(red.certified_digits, 1);
    for (const auto& x : held_out) {
        std::vector<PadicNumber> row = matrix_row(source, cols, x, config.precision);
        PadicNumber residual = PadicNumber::zero(p, config.precision);
        for (std::size_t c = 0; c < columns; ++c) {
            if (vec[c].is_zero()) continue;
            residual = residual + vec[c] * row[c];
        }
        std::int64_t val =
            residual.is_zero() ? residual.abs_precision() : *residual.valuation();
        if (val < threshold)
            throw precision_exhausted(
                "nullspace candidate failed cross-validation on held-out samples");
        report.residual_valuations.push_back(val);
    }

    report.status = SearchStatus::found;
    for (std::size_t c = 0; c < columns; ++c) {
        if (vec[c].is_zero()) continue;
        report.annihilator.push_back({cols[c].first, cols[c].second, vec[c]});
    }
    return report;
}

} // namespace padicgamma
