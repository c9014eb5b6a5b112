#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padicgamma/calculus.hpp"
#include "padicgamma/gamma.hpp"

namespace padicgamma {

// Seeded property-check runners over sampled points. Each sample is
// independent, so the loops run as OpenMP kernels; the serial reference path
// (parallel = false) must produce byte-identical reports and is kept for
// testing and benchmarking.

struct SampleCheck {
    std::uint64_t rep = 0;          // natural representative of the sampled point
    bool pass = false;
    std::int64_t discrepancy = 0;   // valuation lower bound of the defect
};

struct CheckRun {
    std::string name;
    std::uint64_t p = 0;
    std::uint64_t seed = 0;
    bool pass = false;
    std::vector<SampleCheck> samples;
    // Deterministic multi-line report: one line per sample plus a summary.
    std::string report() const;
};

CheckRun run_wilson(std::uint64_t max_p, bool parallel);
// Gamma_p(x+1) = h_p(x) Gamma_p(x) on seeded x in Z_p.
CheckRun run_functional(const Prime& p, std::int32_t prec, std::size_t count,
                        std::uint64_t seed, std::uint64_t bound, bool parallel);
// g(x+p) = f(x) g(x) on seeded x in pZ_p.
CheckRun run_pstep(const Prime& p, std::int32_t prec, std::size_t count, std::uint64_t seed,
                   std::uint64_t bound, bool parallel);
// Derivative chain at seeded points of pZ_p.
CheckRun run_leibniz(const Prime& p, std::uint32_t n, std::uint32_t m, std::int32_t prec,
                     int guard, std::size_t count, std::uint64_t seed, std::uint64_t bound,
                     bool parallel);

} // namespace padicgamma
