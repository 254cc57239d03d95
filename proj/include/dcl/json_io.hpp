#pragma once

// JSON serialization of polynomials. Big integers travel as decimal strings;
// univariate polynomials are dense coefficient arrays (constant term first);
// multivariate polynomials are [exponent-vector, coefficient] pairs plus the
// variable-name array.

#include <json.hpp>

#include "dcl/mpoly.hpp"
#include "dcl/poly.hpp"

namespace dcl {

using nlohmann::json;

inline json poly_to_json(const Poly<BigRat>& f) {
    json coeffs = json::array();
    for (const auto& c : f.c) coeffs.push_back(rat_to_string(c));
    return json{{"type", "poly"}, {"coeffs", coeffs}};
}

inline Poly<BigRat> poly_from_json(const json& j) {
    Poly<BigRat> f((BigRat(0)));
    for (const auto& c : j.at("coeffs")) f.c.push_back(rat_from_string(c.get<std::string>()));
    f.normalize();
    return f;
}

inline json mpoly_to_json(const MPoly& f) {
    json terms = json::array();
    for (const auto& [k, c] : f.terms) {
        json expvec = json::array();
        for (size_t v = 0; v < f.vars.size(); ++v) expvec.push_back(k.get(static_cast<int>(v)));
        terms.push_back(json::array({expvec, rat_to_string(c)}));
    }
    return json{{"type", "mpoly"}, {"vars", f.vars}, {"terms", terms}};
}

inline MPoly mpoly_from_json(const json& j) {
    MPoly f(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
        ExpKey k;
        const auto& expvec = t.at(0);
        for (size_t v = 0; v < expvec.size(); ++v) k.set(static_cast<int>(v), expvec[v].get<int>());
        BigRat c = rat_from_string(t.at(1).get<std::string>());
        if (c != 0) f.terms.emplace_back(k, c);
    }
    std::sort(f.terms.begin(), f.terms.end(),
              [](const auto& a, const auto& b) { return b.first < a.first; });
    return f;
}

} // namespace dcl
