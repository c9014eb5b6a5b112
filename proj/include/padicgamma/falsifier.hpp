#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "padicgamma/calculus.hpp"
#include "padicgamma/diffpoly.hpp"
#include "padicgamma/gamma.hpp"
#include "padicgamma/linalg.hpp"
#include "padicgamma/rng.hpp"

namespace padicgamma {

// Bounded slice of the annihilator search space: differential polynomials of
// order <= n, total Y-degree <= d, X-degree <= e.
struct SearchBounds {
    std::uint32_t order = 1;    // n
    std::uint32_t y_degree = 1; // d
    std::uint32_t x_degree = 0; // e
};

struct FalsifierConfig {
    std::int32_t precision = 60; // K
    std::uint32_t step_exponent = 4; // m, derivative step p^m
    std::size_t samples = 0;         // 0: defaults to 2x columns
    std::uint64_t seed = 1;
    int guard = kDefaultGuard;
    int min_certified = 10;
    std::uint64_t work_limit = GammaEvaluator::kDefaultWorkLimit;
    std::uint64_t draw_range = 4096; // units drawn from [1, draw_range]
    bool parallel = true;
};

// Source of jets (g(x), g'(x), ..., g^(n)(x)). Gamma uses forward-difference
// estimates at step p^m; the built-in controls have closed-form derivatives
// and supply them exactly, so a Found result on a control is clean up to
// unit scaling.
struct JetSource {
    std::string name;
    std::uint32_t order = 0;
    bool exact = false;
    std::function<std::vector<PadicNumber>(const PadicNumber&)> jets;
    std::shared_ptr<GammaEvaluator> evaluator; // null for closed-form controls
};

enum class SearchTarget { gamma, control_identity, control_reciprocal };

JetSource make_jet_source(SearchTarget target, const Prime& p, std::uint32_t order,
                          const FalsifierConfig& config);

// All (j, alpha) with j <= e and |alpha| <= d, antilex-ascending in alpha and
// ascending in j; this is the fixed column order of the constraint matrix.
std::vector<std::pair<std::uint32_t, ExponentVector>> enumerate_monomials(
    const SearchBounds& bounds);
std::size_t column_count(const SearchBounds& bounds);

// Deterministic sample points p*u, u a unit drawn from [1, draw_range],
// duplicates rejected; all points lie in pZ_p by construction.
std::vector<PadicNumber> draw_samples(const Prime& p, const FalsifierConfig& config,
                                      std::size_t count, SplitMix64& rng);

// Row i: entry at column (j, alpha) is x_i^j * prod_k jet_k(x_i)^alpha_k.
// The parallel flag selects the OpenMP kernel; results are bit-identical to
// the serial reference either way.
PadicMatrix build_matrix(const JetSource& jets, const SearchBounds& bounds,
                         const std::vector<PadicNumber>& points, std::int32_t precision,
                         bool parallel);

enum class SearchStatus { none_at_precision, found };

struct AnnihilatorTerm {
    std::uint32_t x_power;
    ExponentVector alpha;
    PadicNumber coeff;
};

struct AnnihilatorReport {
    std::uint64_t p;
    SearchBounds bounds;
    FalsifierConfig config;
    SearchStatus status;
    std::size_t rank = 0;
    std::size_t columns = 0;
    std::int64_t certified_digits = 0;
    std::vector<AnnihilatorTerm> annihilator;        // empty unless found
    std::vector<std::int64_t> residual_valuations;   // held-out cross-validation

    nlohmann::ordered_json to_json() const;
    std::string to_bytes() const; // canonical serialization, byte-deterministic
};

// Builds the seeded sample set, assembles the constraint matrix, row-reduces
// at certified precision, and either certifies full column rank
// (none_at_precision) or reconstructs a nullspace vector and cross-validates
// it on fresh held-out samples before reporting found.
AnnihilatorReport search_annihilator(const Prime& p, const SearchBounds& bounds,
                                     const FalsifierConfig& config, SearchTarget target);

} // namespace padicgamma
