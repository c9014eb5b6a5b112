// Timing harness comparing the OpenMP kernels against their serial reference
// implementations, verifying along the way that both produce identical
// results. The kernels are the per-sample loops: constraint-matrix rows for
// the falsifier and the property-check runners.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "padicgamma/checks.hpp"
#include "padicgamma/falsifier.hpp"

using namespace padicgamma;

namespace {

double seconds(const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const std::string& name, double serial, double parallel, bool same) {
    std::cout << name << ": serial " << serial << " s, parallel " << parallel << " s, speedup "
              << (parallel > 0 ? serial / parallel : 0.0) << "x, results "
              << (same ? "identical" : "DIFFER") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t p_value = 5;
    std::size_t samples = 48;
    int repeat = 3;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--p") p_value = std::stoull(argv[i + 1]);
        else if (flag == "--samples") samples = std::stoull(argv[i + 1]);
        else if (flag == "--repeat") repeat = std::stoi(argv[i + 1]);
    }
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: disabled at build time\n";
#endif

    Prime p(p_value);

    { // falsifier constraint-matrix rows
        SearchBounds bounds{1, 2, 2};
        FalsifierConfig cfg;
        cfg.precision = 60;
        cfg.step_exponent = 4;
        JetSource src = make_jet_source(SearchTarget::gamma, p, bounds.order, cfg);
        SplitMix64 rng(7);
        auto pts = draw_samples(p, cfg, samples, rng);
        std::uint64_t reach =
            p.value() * (cfg.draw_range + 2) +
            bounds.order * big_pow(p.value(), cfg.step_exponent).convert_to<std::uint64_t>() +
            p.value() + 2;
        src.evaluator->reserve(reach);

        PadicMatrix a, b;
        double ts = 0, tp = 0;
        for (int r = 0; r < repeat; ++r) {
            ts += seconds([&] { a = build_matrix(src, bounds, pts, cfg.precision, false); });
            tp += seconds([&] { b = build_matrix(src, bounds, pts, cfg.precision, true); });
        }
        bool same = true;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a[i].size(); ++j)
                same = same && a[i][j].str() == b[i][j].str();
        row("matrix rows (" + std::to_string(samples) + " samples, 18 columns)", ts / repeat,
            tp / repeat, same);
    }

    { // functional-equation sampling runner
        CheckRun s, q;
        double ts = 0, tp = 0;
        for (int r = 0; r < repeat; ++r) {
            ts += seconds([&] { s = run_functional(p, 30, 4 * samples, 1, 100000, false); });
            tp += seconds([&] { q = run_functional(p, 30, 4 * samples, 1, 100000, true); });
        }
        row("functional checks (" + std::to_string(4 * samples) + " samples)", ts / repeat,
            tp / repeat, s.report() == q.report());
    }

    { // derivative chain runner
        CheckRun s, q;
        double ts = 0, tp = 0;
        for (int r = 0; r < repeat; ++r) {
            ts += seconds([&] { s = run_leibniz(p, 2, 4, 12, 4, samples, 1, 400, false); });
            tp += seconds([&] { q = run_leibniz(p, 2, 4, 12, 4, samples, 1, 400, true); });
        }
        row("derivative chains (" + std::to_string(samples) + " points)", ts / repeat,
            tp / repeat, s.report() == q.report());
    }
    return 0;
}
