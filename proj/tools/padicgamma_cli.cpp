// Command-line front end: gamma evaluation, property-check runners, the
// differential-polynomial toolbox, and the annihilator falsifier. Results go
// to stdout, diagnostics to stderr; exit 0 on success, 1 on domain errors,
// 2 on rejected configurations, 3 when the falsifier finds an annihilator
// for the gamma target itself.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "padicgamma/checks.hpp"
#include "padicgamma/falsifier.hpp"
#include "padicgamma/json_io.hpp"
#include "padicgamma/parser.hpp"

using namespace padicgamma;

namespace {

struct GammaArgs {
    std::uint64_t p = 5;
    std::int32_t prec = 8;
    std::string x;
    std::int64_t val_shift = 0;
    std::uint64_t work_limit = GammaEvaluator::kDefaultWorkLimit;
    bool json = false;
};

struct CheckArgs {
    std::string kind;
    std::uint64_t p = 5;
    std::int32_t prec = 30;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    std::uint64_t bound = 20000;
    std::uint64_t max_p = 200;
    std::uint32_t n = 1;
    std::uint32_t m = 4;
    int guard = kDefaultGuard;
    bool serial = false;
};

struct DpolyArgs {
    std::string expr, expr2;
    std::uint64_t p = 3;
    std::int32_t prec = 8;
    std::string x;
    std::vector<std::string> jet;
    bool json = false;
};

struct FalsifyArgs {
    std::uint64_t p = 5;
    std::uint32_t n = 1, d = 2, e = 2;
    std::int32_t prec = 60;
    std::uint32_t m = 4;
    std::size_t samples = 0;
    std::uint64_t seed = 7;
    int guard = kDefaultGuard;
    int min_certified = 10;
    std::uint64_t draw_range = 4096;
    std::uint64_t work_limit = GammaEvaluator::kDefaultWorkLimit;
    std::string control;
    std::string out;
    bool serial = false;
};

// --x accepts a plain integer or a little-endian comma digit list; --val
// shifts by p^val, so negative shifts land outside Z_p on purpose.
PadicNumber parse_point(const std::string& text, std::int64_t val_shift, const Prime& p,
                        std::int32_t prec) {
    BigInt n = 0;
    if (text.find(',') == std::string::npos) {
        n = BigInt(text);
    } else {
        BigInt scale = 1;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string digit = text.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            BigInt d(digit);
            if (d < 0 || d >= p.value())
                throw config_rejected("digit " + digit + " out of range for p=" +
                                      std::to_string(p.value()));
            n += d * scale;
            scale *= p.value();
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    PadicNumber x = PadicNumber::from_integer(n, p, prec);
    if (val_shift == 0) return x;
    return x * PadicNumber::make(p, val_shift, 1, prec);
}

int run_gamma(const GammaArgs& a) {
    Prime p(a.p);
    GammaEvaluator ev(p, a.prec, a.work_limit);
    PadicNumber x = parse_point(a.x, a.val_shift, p, a.prec);
    PadicNumber g = ev.gamma(x);
    if (a.json)
        std::cout << padic_json(g).dump() << "\n";
    else
        std::cout << g.str() << "\n";
    return 0;
}

int run_check(const CheckArgs& a, bool prec_given) {
    CheckRun run;
    if (a.kind == "wilson") {
        run = run_wilson(a.max_p, !a.serial);
    } else if (a.kind == "functional") {
        run = run_functional(Prime(a.p), a.prec, a.samples, a.seed, a.bound, !a.serial);
    } else if (a.kind == "pstep") {
        run = run_pstep(Prime(a.p), a.prec, a.samples, a.seed, a.bound, !a.serial);
    } else if (a.kind == "leibniz") {
        // default K = 2m + guard keeps the pass threshold at the step-size
        // remainder floor; larger K demands more agreement than the step
        // h = p^m can deliver (see README on derivative certificates)
        std::int32_t prec =
            prec_given ? a.prec : static_cast<std::int32_t>(2 * a.m + a.guard);
        run = run_leibniz(Prime(a.p), a.n, a.m, prec, a.guard, a.samples, a.seed, a.bound,
                          !a.serial);
    } else {
        throw config_rejected("unknown check '" + a.kind + "'");
    }
    std::cout << run.report();
    return run.pass ? 0 : 1;
}

int run_dpoly(const std::string& sub, const DpolyArgs& a) {
    if (sub == "lt") {
        auto P = parse_diffpoly(a.expr);
        auto [alpha, coeff] = P.leading_term();
        auto term = DifferentialPolynomial::monomial(coeff, alpha);
        if (a.json)
            std::cout << diffpoly_json(term).dump() << "\n";
        else
            std::cout << format_diffpoly(term) << "\n";
        return 0;
    }
    if (sub == "transform") {
        auto Q = shift_transform(parse_diffpoly(a.expr), Prime(a.p));
        if (a.json)
            std::cout << diffpoly_json(Q).dump() << "\n";
        else
            std::cout << format_diffpoly(Q) << "\n";
        return 0;
    }
    if (sub == "divide") {
        auto R = exact_divide(parse_diffpoly(a.expr), parse_diffpoly(a.expr2));
        std::string num = xpoly_str(R.num), den = xpoly_str(R.den);
        if (a.json)
            std::cout << nlohmann::ordered_json({{"num", num}, {"den", den}}).dump() << "\n";
        else if (R.den == RationalPolynomial::constant(BigRat(1)))
            std::cout << num << "\n";
        else
            std::cout << "(" << num << ")/(" << den << ")" << "\n";
        return 0;
    }
    if (sub == "eval") {
        auto P = parse_diffpoly(a.expr);
        Prime p(a.p);
        PadicNumber x = parse_point(a.x, 0, p, a.prec);
        std::vector<PadicNumber> jet;
        for (const auto& y : a.jet) jet.push_back(parse_point(y, 0, p, a.prec));
        PadicNumber v = evaluate(P, x, jet);
        if (a.json)
            std::cout << padic_json(v).dump() << "\n";
        else
            std::cout << v.str() << "\n";
        return 0;
    }
    throw config_rejected("unknown dpoly operation '" + sub + "'");
}

int run_falsify(const FalsifyArgs& a) {
    Prime p(a.p);
    SearchBounds bounds{a.n, a.d, a.e};
    FalsifierConfig cfg;
    cfg.precision = a.prec;
    cfg.step_exponent = a.m;
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    cfg.guard = a.guard;
    cfg.min_certified = a.min_certified;
    cfg.draw_range = a.draw_range;
    cfg.work_limit = a.work_limit;
    cfg.parallel = !a.serial;
    SearchTarget target = SearchTarget::gamma;
    if (a.control == "identity") target = SearchTarget::control_identity;
    else if (a.control == "reciprocal") target = SearchTarget::control_reciprocal;
    else if (!a.control.empty()) throw config_rejected("unknown control '" + a.control + "'");

    AnnihilatorReport report = search_annihilator(p, bounds, cfg, target);
    std::string bytes = report.to_bytes();
    std::cout << bytes << "\n";
    if (!a.out.empty()) {
        std::ofstream f(a.out, std::ios::binary);
        f << bytes << "\n";
    }
    if (report.status == SearchStatus::found && target == SearchTarget::gamma) {
        std::cerr << "anomaly: an annihilator candidate survived cross-validation on the "
                     "gamma target\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morita p-adic gamma toolkit"};
    app.require_subcommand(1);

    GammaArgs ga;
    auto* gamma_cmd = app.add_subcommand("gamma", "evaluate Gamma_p at a point of Z_p");
    gamma_cmd->add_option("--p", ga.p, "prime")->required();
    gamma_cmd->add_option("--prec", ga.prec, "relative precision K");
    gamma_cmd->add_option("--x", ga.x, "integer or little-endian digit list")->required();
    gamma_cmd->add_option("--val", ga.val_shift, "multiply the point by p^val");
    gamma_cmd->add_option("--work-limit", ga.work_limit, "largest representative accepted");
    gamma_cmd->add_flag("--json", ga.json, "machine-readable output");

    CheckArgs ca;
    auto* check_cmd = app.add_subcommand("check", "run a property check suite");
    check_cmd->add_option("kind", ca.kind, "wilson|functional|pstep|leibniz")->required();
    check_cmd->add_option("--p", ca.p, "prime");
    auto* prec_opt = check_cmd->add_option("--prec", ca.prec, "working precision K");
    check_cmd->add_option("--samples", ca.samples, "sample count");
    check_cmd->add_option("--seed", ca.seed, "RNG seed");
    check_cmd->add_option("--bound", ca.bound, "sampling bound for representatives");
    check_cmd->add_option("--max-p", ca.max_p, "wilson: check all primes below this");
    check_cmd->add_option("--n", ca.n, "leibniz: chain order");
    check_cmd->add_option("--m", ca.m, "leibniz: step exponent");
    check_cmd->add_option("--guard", ca.guard, "guard digits");
    check_cmd->add_flag("--serial", ca.serial, "use the serial reference kernels");

    DpolyArgs da;
    auto* dpoly_cmd = app.add_subcommand("dpoly", "differential polynomial toolbox");
    dpoly_cmd->require_subcommand(1);
    auto add_dpoly_common = [&](CLI::App* sub, bool two_exprs, bool point) {
        sub->add_option("--expr", da.expr, "differential polynomial")->required();
        if (two_exprs) sub->add_option("--expr2", da.expr2, "divisor polynomial")->required();
        sub->add_option("--p", da.p, "prime");
        if (point) {
            sub->add_option("--prec", da.prec, "working precision K");
            sub->add_option("--x", da.x, "evaluation point")->required();
            sub->add_option("--y", da.jet, "jet values, one per order")->required();
        }
        sub->add_flag("--json", da.json, "machine-readable output");
    };
    add_dpoly_common(dpoly_cmd->add_subcommand("lt", "leading term"), false, false);
    add_dpoly_common(dpoly_cmd->add_subcommand("transform", "the Q construction"), false,
                     false);
    add_dpoly_common(dpoly_cmd->add_subcommand("divide", "exact X-rational division"), true,
                     false);
    add_dpoly_common(dpoly_cmd->add_subcommand("eval", "evaluate at a p-adic jet"), false,
                     true);

    FalsifyArgs fa;
    auto* falsify_cmd = app.add_subcommand("falsify", "bounded annihilator search");
    falsify_cmd->add_option("--p", fa.p, "prime");
    falsify_cmd->add_option("--n", fa.n, "order bound");
    falsify_cmd->add_option("--d", fa.d, "total Y-degree bound");
    falsify_cmd->add_option("--e", fa.e, "X-degree bound");
    falsify_cmd->add_option("--prec", fa.prec, "working precision K");
    falsify_cmd->add_option("--m", fa.m, "derivative step exponent");
    falsify_cmd->add_option("--samples", fa.samples, "constraint rows (default 2x columns)");
    falsify_cmd->add_option("--seed", fa.seed, "RNG seed");
    falsify_cmd->add_option("--guard", fa.guard, "guard digits");
    falsify_cmd->add_option("--min-certified", fa.min_certified, "minimum certified digits");
    falsify_cmd->add_option("--draw-range", fa.draw_range, "unit draw range");
    falsify_cmd->add_option("--work-limit", fa.work_limit, "largest representative accepted");
    falsify_cmd->add_option("--control", fa.control, "identity|reciprocal");
    falsify_cmd->add_option("--out", fa.out, "also write the JSON report here");
    falsify_cmd->add_flag("--serial", fa.serial, "serial row construction");

    std::string dpoly_sub;
    try {
        app.parse(argc, argv);
        if (gamma_cmd->parsed()) return run_gamma(ga);
        if (check_cmd->parsed()) return run_check(ca, prec_opt->count() > 0);
        if (dpoly_cmd->parsed()) {
            for (auto* sub : dpoly_cmd->get_subcommands()) dpoly_sub = sub->get_name();
            return run_dpoly(dpoly_sub, da);
        }
        if (falsify_cmd->parsed()) return run_falsify(fa);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const syntax_error& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        if (!da.expr.empty() && e.position < da.expr.size()) {
            std::cerr << "  " << da.expr << "\n  " << std::string(e.position, ' ') << "^\n";
        }
        return 1;
    } catch (const not_prime& e) {
        std::cerr << "config rejected: " << e.what() << "\n";
        return 2;
    } catch (const config_rejected& e) {
        std::cerr << "config rejected: " << e.what() << "\n";
        return 2;
    } catch (const work_limit_exceeded& e) {
        std::cerr << "config rejected: " << e.what() << "\n";
        return 2;
    } catch (const order_exceeded& e) {
        std::cerr << "config rejected: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
