#include "padicgamma/calculus.hpp"

#include <sstream>

namespace padicgamma {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        acc *= n - i;
        acc /= i + 1;
    }
    return acc;
}

DerivativeEstimate finite_difference_derivative(const PointFunction& fn, const PadicNumber& x,
                                                std::uint32_t k, std::uint32_t m,
                                                std::int32_t prec, int guard) {
    const Prime& p = x.prime();
    if (k == 0) return {fn(x), 0, m, prec};
    if (m < 1) throw config_rejected("step exponent must be >= 1");
    if (prec - static_cast<std::int64_t>(k) * m <= 0)
        throw insufficient_precision("k*m digits of division loss exceed the working precision");

    const BigInt h = big_pow(p.value(), m);
    PadicNumber acc = PadicNumber::zero(p, prec);
    for (std::uint32_t j = 0; j <= k; ++j) {
        BigInt c = binomial(k, j);
        if ((k - j) % 2 == 1) c = -c;
        PadicNumber point = x;
        if (j > 0) point = x + PadicNumber::from_integer(j * h, p, prec);
        acc = acc + PadicNumber::from_integer(c, p, prec) * fn(point);
    }
    // dividing by h^k shifts the valuation by -k*m and keeps the unit digits
    PadicNumber est = acc * PadicNumber::make(p, -static_cast<std::int64_t>(k) * m, 1, prec);
    return {est, k, m, prec - static_cast<std::int64_t>(k) * m - guard};
}

std::string ChainCheckReport::str() const {
    std::ostringstream os;
    for (const auto& l : lines) {
        os << "order " << l.order << ": discrepancy valuation "
           << (l.vanishes ? ">= " : "") << l.discrepancy_valuation << " threshold "
           << l.threshold << (l.pass ? " pass" : " FAIL") << "\n";
    }
    os << (pass ? "chain check: pass" : "chain check: FAIL") << "\n";
    return os.str();
}

ChainCheckReport leibniz_chain_check(const PointFunction& g, const IntPolynomial& f,
                                     const Prime& p, const PadicNumber& x, std::uint32_t n,
                                     std::uint32_t m, std::int32_t prec, int guard) {
    if (n < 1) throw config_rejected("chain check needs order >= 1");
    if (!x.in_pZp()) throw not_in_maximal_ideal("chain check lives on pZ_p");

    PadicNumber xp = x + PadicNumber::from_integer(BigInt(p.value()), p, prec);
    std::vector<PadicNumber> g_at_x;   // estimates of g^(k)(x), k <= n
    std::vector<PadicNumber> f_at_x;   // exact f^(k)(x), k <= n
    for (std::uint32_t k = 0; k <= n; ++k) {
        g_at_x.push_back(finite_difference_derivative(g, x, k, m, prec, guard).value);
        f_at_x.push_back(eval_padic(f.derivative(k), x, prec));
    }

    ChainCheckReport report;
    for (std::uint32_t j = 1; j <= n; ++j) {
        PadicNumber direct = finite_difference_derivative(g, xp, j, m, prec, guard).value;
        PadicNumber sum = PadicNumber::zero(p, prec);
        for (std::uint32_t k = 0; k <= j; ++k) {
            PadicNumber c = PadicNumber::from_integer(binomial(j, k), p, prec);
            sum = sum + c * f_at_x[j - k] * g_at_x[k];
        }
        PadicNumber disc = direct - sum;
        ChainCheckLine line;
        line.order = j;
        line.threshold = prec - static_cast<std::int64_t>(j) * m - guard;
        line.vanishes = disc.is_zero();
        line.discrepancy_valuation = line.vanishes ? disc.abs_precision() : *disc.valuation();
        line.pass = line.discrepancy_valuation >= line.threshold;
        report.pass = report.pass && line.pass;
        report.lines.push_back(line);
    }
    return report;
}

} // namespace padicgamma
