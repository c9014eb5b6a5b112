#include "padicgamma/checks.hpp"

#include <algorithm>
#include <sstream>

#include "padicgamma/prime.hpp"
#include "padicgamma/rng.hpp"

namespace padicgamma {

namespace {

template <class Body>
void for_each_sample(std::size_t count, bool parallel, std::vector<SampleCheck>& out,
                     const Body& body) {
    out.assign(count, SampleCheck{});
    std::vector<std::string> errors(count);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            try {
                out[static_cast<std::size_t>(i)] = body(static_cast<std::size_t>(i));
            } catch (const std::exception& e) {
                errors[static_cast<std::size_t>(i)] = e.what();
            }
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            try {
                out[i] = body(i);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw error(e);
}

std::int64_t defect_valuation(const PadicNumber& diff) {
    return diff.is_zero() ? diff.abs_precision() : *diff.valuation();
}

} // namespace

std::string CheckRun::report() const {
    std::ostringstream os;
    os << name << " p=" << p << " seed=" << seed << " samples=" << samples.size() << "\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        os << "  sample " << i << " rep=" << s.rep << " discrepancy>=" << s.discrepancy
           << (s.pass ? " pass" : " FAIL") << "\n";
    }
    os << name << ": " << (pass ? "all pass" : "FAILURES") << "\n";
    return os.str();
}

CheckRun run_wilson(std::uint64_t max_p, bool parallel) {
    auto primes = primes_below(max_p);
    CheckRun run{"wilson", 0, 0, true, {}};
    for_each_sample(primes.size(), parallel, run.samples, [&](std::size_t i) {
        Prime q(primes[i]);
        bool ok = wilson_check(q);
        return SampleCheck{primes[i], ok, ok ? 1 : 0};
    });
    for (const auto& s : run.samples) run.pass = run.pass && s.pass;
    return run;
}

CheckRun run_functional(const Prime& p, std::int32_t prec, std::size_t count,
                        std::uint64_t seed, std::uint64_t bound, bool parallel) {
    GammaEvaluator ev(p, prec);
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> reps(count);
    for (auto& r : reps) r = rng.below(bound);
    ev.reserve(*std::max_element(reps.begin(), reps.end()) + p.value() + 2);

    CheckRun run{"functional", p.value(), seed, true, {}};
    for_each_sample(count, parallel, run.samples, [&](std::size_t i) {
        PadicNumber x = PadicNumber::from_integer(BigInt(reps[i]), p, prec);
        PadicNumber lhs = ev.gamma(x + PadicNumber::one(p, prec));
        PadicNumber rhs = ev.hp(x) * ev.gamma(x);
        PadicNumber diff = lhs - rhs;
        return SampleCheck{reps[i], diff.is_zero(), defect_valuation(diff)};
    });
    for (const auto& s : run.samples) run.pass = run.pass && s.pass;
    return run;
}

CheckRun run_pstep(const Prime& p, std::int32_t prec, std::size_t count, std::uint64_t seed,
                   std::uint64_t bound, bool parallel) {
    GammaEvaluator ev(p, prec);
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> reps(count);
    for (auto& r : reps) r = p.value() * rng.below(bound);
    ev.reserve(*std::max_element(reps.begin(), reps.end()) + 2 * p.value() + 2);
    IntPolynomial f = f_poly(p);

    CheckRun run{"pstep", p.value(), seed, true, {}};
    for_each_sample(count, parallel, run.samples, [&](std::size_t i) {
        PadicNumber x = PadicNumber::from_integer(BigInt(reps[i]), p, prec);
        PadicNumber step = PadicNumber::from_integer(BigInt(p.value()), p, prec);
        PadicNumber diff = ev.gamma(x + step) - eval_padic(f, x, prec) * ev.gamma(x);
        return SampleCheck{reps[i], diff.is_zero(), defect_valuation(diff)};
    });
    for (const auto& s : run.samples) run.pass = run.pass && s.pass;
    return run;
}

CheckRun run_leibniz(const Prime& p, std::uint32_t n, std::uint32_t m, std::int32_t prec,
                     int guard, std::size_t count, std::uint64_t seed, std::uint64_t bound,
                     bool parallel) {
    auto ev = std::make_shared<GammaEvaluator>(p, prec);
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> reps(count);
    for (auto& r : reps) r = p.value() * (1 + rng.below(bound));
    std::uint64_t reach = *std::max_element(reps.begin(), reps.end()) + p.value() +
                          (n + 1) * big_pow(p.value(), m).convert_to<std::uint64_t>() + 2;
    ev->reserve(reach);
    IntPolynomial f = f_poly(p);
    PointFunction g = [ev](const PadicNumber& x) { return ev->gamma(x); };

    CheckRun run{"leibniz", p.value(), seed, true, {}};
    for_each_sample(count, parallel, run.samples, [&](std::size_t i) {
        PadicNumber x = PadicNumber::from_integer(BigInt(reps[i]), p, prec);
        ChainCheckReport rep = leibniz_chain_check(g, f, p, x, n, m, prec, guard);
        std::int64_t worst = prec;
        for (const auto& line : rep.lines)
            worst = std::min(worst, line.discrepancy_valuation);
        return SampleCheck{reps[i], rep.pass, worst};
    });
    for (const auto& s : run.samples) run.pass = run.pass && s.pass;
    return run;
}

} // namespace padicgamma
