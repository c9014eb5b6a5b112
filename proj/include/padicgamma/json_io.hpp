#pragma once

#include <json.hpp>

#include "padicgamma/diffpoly.hpp"
#include "padicgamma/padic.hpp"
#include "padicgamma/polynomial.hpp"

namespace padicgamma {

// {"p":5,"v":2,"digits":[2],"prec":4}; the zero element reports v as null
// and prec as its absolute bound. Field order is fixed for byte-exact output.
inline nlohmann::ordered_json padic_json(const PadicNumber& x) {
    nlohmann::ordered_json j;
    j["p"] = x.prime().value();
    if (x.is_zero()) {
        j["v"] = nullptr;
        j["digits"] = nlohmann::ordered_json::array();
        j["prec"] = x.abs_precision();
    } else {
        j["v"] = *x.valuation();
        j["digits"] = x.digits();
        j["prec"] = x.rel_precision();
    }
    return j;
}

// [{"alpha":[2,1],"coeff":"X^2+1"}, ...] in antilex-descending term order.
inline nlohmann::ordered_json diffpoly_json(const DifferentialPolynomial& P) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [alpha, coeff] : P.terms()) {
        nlohmann::ordered_json t;
        t["alpha"] = alpha;
        t["coeff"] = xpoly_str(coeff);
        arr.push_back(std::move(t));
    }
    return arr;
}

} // namespace padicgamma
