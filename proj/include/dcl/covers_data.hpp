#pragma once

// Embedded explicit data: the coordinate maps of the three covers of the
// (u,v)-, (p,q)- and (a,b)-planes, the quotient maps between the base
// planes, the degree-28 one-parameter polynomial m(t,x), the one-parameter
// pair f28/f36, the discriminant-locus components, the parametrized base
// curves of the three-point-cover tables, and the degree-28 field polynomial
// with smallest known discriminant.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dcl/mpoly.hpp"

namespace dcl {

// rational function as a pair of polynomials over shared variables
struct RatFunc {
    MPoly num, den;

    RatFunc() = default;
    RatFunc(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {}
    static RatFunc poly(MPoly n) {
        MPoly one = MPoly::constant(n.vars, BigRat(1));
        return {std::move(n), std::move(one)};
    }
    RatFunc operator+(const RatFunc& o) const { return {num * o.den + o.num * den, den * o.den}; }
    RatFunc operator-(const RatFunc& o) const { return {num * o.den - o.num * den, den * o.den}; }
    RatFunc operator*(const RatFunc& o) const { return {num * o.num, den * o.den}; }
    RatFunc operator/(const RatFunc& o) const { return {num * o.den, den * o.num}; }

    BigRat eval(const std::vector<BigRat>& pt) const {
        BigRat d = den.eval(pt);
        if (d == 0) throw std::domain_error("indeterminate point");
        return num.eval(pt) / d;
    }
    uint64_t eval_mod(const std::vector<uint64_t>& pt, uint64_t p) const {
        uint64_t d = den.eval_mod(pt, p);
        if (d == 0) throw std::domain_error("indeterminate point mod p");
        return mulmod_u64(num.eval_mod(pt, p), invmod_u64(d, p), p);
    }
};

struct CoverMaps {
    std::vector<std::string> vars; // domain coordinates (x, y)
    MPoly A, B, C, D;              // first coordinate = A/B, second = C/D
};

namespace covers_data {

inline const std::vector<std::string>& xy() {
    static const std::vector<std::string> v{"x", "y"};
    return v;
}

inline MPoly gpoly(const std::string& text) { return MPoly::parse(xy(), text); }

// Domain polynomials of the three covers
inline const std::map<std::string, MPoly>& blocks() {
    static const std::map<std::string, MPoly> m = [] {
        std::map<std::string, MPoly> b;
        b.emplace("g4", gpoly("15*x^2 - 4*y*x - 4*x + 5"));
        b.emplace("g6a", gpoly("9*x*y^2 + y^2 + 18*x*y - 18*y - 66*x + 6"));
        b.emplace("g6b", gpoly("225*x^2 - 30*y*x - 30*x - 2*y^2 + 6*y + 33"));
        b.emplace("g7a", gpoly("15*y*x^2 + 65*x^2 - 2*y^2*x - 4*y*x - 2*x + 5*y + 5"));
        b.emplace("g7b", gpoly("45*y*x^2 - 105*x^2 + 6*y^2*x - 8*y*x - 14*x - 5*y - 5"));
        b.emplace("g9", gpoly("225*x^3 - 30*y*x^2 - 105*x^2 + y^2*x + 22*y*x + 21*x + y^2 - 8*y - 9"));
        b.emplace("g10", gpoly("225*x^2*y^2 + 1200*x^2*y + 2850*x^2 + 250*x*y^2 - 1500*x + 2*y^4 + 8*y^3 "
                               "+ 37*y^2 - 192*y + 402"));
        b.emplace("g17", gpoly("2025*x^3*y^2 + 24300*x^3*y + 39150*x^3 + 540*x^2*y^3 + 1845*x^2*y^2 "
                               "- 180*x^2*y - 29610*x^2 - 18*x*y^4 + 168*x*y^3 - 213*x*y^2 - 252*x*y "
                               "+ 9522*x + 10*y^4 + 60*y^3 - 105*y^2 + 900*y - 2070"));
        b.emplace("g18", gpoly("50625*x^5 - 3375*y*x^4 + 30375*x^4 - 675*y^2*x^3 + 2025*y*x^3 + 2700*x^3 "
                               "+ 75*y^3*x^2 + 2025*y*x^2 + 5850*x^2 - 2*y^4*x - 18*y^3*x + 33*y^2*x "
                               "- 513*y*x + 63*x + 15*y^3 - 30*y^2 + 270*y + 315"));
        b.emplace("h11", gpoly("2*x^5 + 4*x^4 - 12*x^3*y + 8*x^3 + 9*x^2*y + 16*x^2 - 24*x*y + 8*x + 3*y^3 "
                               "+ 18*y + 16"));
        b.emplace("h26", gpoly("4*x^7 + 48*x^6*y + 7*x^6 - 72*x^5*y^2 + 24*x^5 + 48*x^4*y^3 - 63*x^4*y^2 "
                               "+ 288*x^4*y + 42*x^4 - 12*x^3*y^4 - 288*x^3*y^2 + 48*x^3 - 3*x^2*y^4 "
                               "+ 192*x^2*y^3 - 252*x^2*y^2 + 576*x^2*y + 84*x^2 - 24*x*y^4 - 288*x*y^2 "
                               "+ 32*x + 3*y^6 - 6*y^4 + 192*y^3 - 252*y^2 + 384*y + 56"));
        b.emplace("f9", gpoly("144*x^3*y - 408*x^2*y - 12*x^2 + 8*x*y^2 + 388*x*y + 20*x - 9*y^2 - 126*y - 9"));
        b.emplace("f14", gpoly("36*x^4*y^2 - 288*x^3*y^2 - 504*x^3*y + 816*x^2*y^2 + 1236*x^2*y - 12*x^2 "
                               "+ 2*x*y^3 - 840*x*y^2 - 1038*x*y + 20*x - 9*y^3 + 297*y^2 + 297*y - 9"));
        return b;
    }();
    return m;
}

// pi0 : (x,y) -> (u,v)
inline const CoverMaps& pi0_maps() {
    static const CoverMaps m = [] {
        const auto& b = blocks();
        MPoly common = b.at("g6a").pow(3) * b.at("g7a").pow(2) * gpoly("9*x^2 - 2*x + 1") * BigRat(25);
        return CoverMaps{xy(), b.at("g6b").pow(6) * gpoly("x^4*(x + 1)"), common,
                         b.at("g18").pow(2) * b.at("g4").pow(2) * b.at("g9"), common};
    }();
    return m;
}

// pi1 : (x1,y1) -> (p,q)
inline const CoverMaps& pi1_maps() {
    static const CoverMaps m = [] {
        const auto& b = blocks();
        return CoverMaps{xy(), b.at("h26") * BigRat(3), b.at("h11") * b.at("h11"),
                         b.at("h11") * gpoly("y") * gpoly("3*x^2 - y^2 + 6").pow(4) * BigRat(3),
                         b.at("h26") * b.at("h26")};
    }();
    return m;
}

// pi2 : (x2,y2) -> (a,b)
inline const CoverMaps& pi2_maps() {
    static const CoverMaps m = [] {
        const auto& b = blocks();
        return CoverMaps{xy(), b.at("f9").pow(3) * BigRat(3),
                         b.at("f14").pow(2) * gpoly("12*x^2 - 20*x + 9"), gpoly("36*x^4*y^2"),
                         b.at("f14")};
    }();
    return m;
}

// Sigma1 : (x,y) -> (x1,y1) and Sigma2 : (x,y) -> (x2,y2)
struct SurfaceMap {
    RatFunc first, second;
};

inline const SurfaceMap& sigma1_cover() { // Sigma_1
    static const SurfaceMap m = [] {
        const auto& b = blocks();
        RatFunc x1{-b.at("g17"), b.at("g6a") * b.at("g6b")};
        RatFunc y1{b.at("g10") * gpoly("(x + 1)*(9*x^2 - 2*x + 1)") * BigRat(45),
                   b.at("g4") * b.at("g6a") * b.at("g6b")};
        return SurfaceMap{x1, y1};
    }();
    return m;
}

inline const SurfaceMap& sigma2_cover() { // Sigma_2
    static const SurfaceMap m = [] {
        const auto& b = blocks();
        RatFunc x2{MPoly::constant(xy(), BigRat(1)), gpoly("x + 1")};
        RatFunc y2{b.at("g4") * b.at("g7a"), b.at("g7b") * gpoly("(x + 1)^2") * BigRat(5)};
        return SurfaceMap{x2, y2};
    }();
    return m;
}

// --- quotient maps between the base planes ---------------------------------

inline const std::vector<std::string>& uv() {
    static const std::vector<std::string> v{"u", "v"};
    return v;
}

inline const MPoly& delta_uv() { // u^2+v^2+1-2u-2v-2uv
    static const MPoly m = MPoly::parse(uv(), "u^2 + v^2 + 1 - 2*u - 2*v - 2*u*v");
    return m;
}
inline const MPoly& w_uv() { // u^2-10uv+6u+9v^2-18v+9
    static const MPoly m = MPoly::parse(uv(), "u^2 - 10*u*v + 6*u + 9*v^2 - 18*v + 9");
    return m;
}

struct PlaneMap {
    std::vector<std::string> vars;
    RatFunc first, second;
};

inline const PlaneMap& sigma1_map() { // (u,v) -> (p,q), degree 3
    static const PlaneMap m = [] {
        MPoly n1 = MPoly::parse(uv(), "3*(2*u - v + 1)");
        MPoly d1 = MPoly::parse(uv(), "(u - v + 2)^2");
        MPoly n2 = MPoly::parse(uv(), "3*u*(u - v + 2)");
        MPoly d2 = MPoly::parse(uv(), "(2*u - v + 1)^2");
        return PlaneMap{uv(), {n1, d1}, {n2, d2}};
    }();
    return m;
}

inline const PlaneMap& sigma2_map() { // (u,v) -> (a,b), degree 3
    static const PlaneMap m = [] {
        MPoly n1 = MPoly::parse(uv(), "-768*u^3");
        MPoly d1 = w_uv() * w_uv();
        MPoly n2 = delta_uv() * BigRat(9);
        MPoly d2 = w_uv();
        return PlaneMap{uv(), {n1, d1}, {n2, d2}};
    }();
    return m;
}

inline const PlaneMap& st1_map() { // (s1,t1) -> (u,v), degree 2
    static const PlaneMap m = [] {
        std::vector<std::string> st{"s", "t"};
        return PlaneMap{st,
                        {MPoly::parse(st, "(s - 1)*s"), MPoly::parse(st, "(t - 1)*t")},
                        {MPoly::parse(st, "(s - t)^2"), MPoly::parse(st, "(t - 1)*t")}};
    }();
    return m;
}

inline const PlaneMap& st2_map() { // (s2,t2) -> (u,v), degree 4
    static const PlaneMap m = [] {
        std::vector<std::string> st{"s", "t"};
        MPoly one = MPoly::constant(st, BigRat(1));
        return PlaneMap{st,
                        {MPoly::parse(st, "(s - t)^2"), one},
                        {MPoly::parse(st, "(s + t - 1)^2"), one}};
    }();
    return m;
}

inline const PlaneMap& ab_map() { // (p,q) -> (a,b), degree 2
    static const PlaneMap m = [] {
        std::vector<std::string> pq{"p", "q"};
        MPoly one = MPoly::constant(pq, BigRat(1));
        return PlaneMap{pq,
                        {MPoly::parse(pq, "p^2*q^2 - 6*p*q + 4*p + 4*q - 3"), one},
                        {MPoly::parse(pq, "p*q"), one}};
    }();
    return m;
}

// --- discriminant loci ------------------------------------------------------

inline const MPoly& d1_locus() { // in (p,q)
    static const MPoly m = MPoly::parse({"p", "q"}, "p^2*q^2 - 6*p*q + 4*p + 4*q - 3");
    return m;
}
inline const MPoly& d2_locus() { // in (a,b)
    static const MPoly m = MPoly::parse(
        {"a", "b"}, "a^2 - 2*a*b^2 + 12*a*b + 6*a + b^4 - 12*b^3 + 30*b^2 - 28*b + 9");
    return m;
}

// --- the one-parameter degree-28 cover m(t,x) ------------------------------

inline const std::vector<std::string>& tx() {
    static const std::vector<std::string> v{"t", "x"};
    return v;
}

inline const MPoly& mm_A() {
    static const MPoly m = MPoly::parse(tx(), "x^6 - 6*x^5 - 435*x^4 - 308*x^3 + 15*x^2 + 66*x + 19");
    return m;
}
inline const MPoly& mm_B() {
    static const MPoly m = MPoly::parse(tx(), "x^4 + 20*x^3 + 114*x^2 + 68*x + 13");
    return m;
}
inline const MPoly& mm_C() {
    static const MPoly m = MPoly::parse(tx(), "x^2 + 4*x + 1");
    return m;
}
inline const MPoly& mm_D() {
    static const MPoly m = MPoly::parse(tx(), "2*x + 1");
    return m;
}

// m(t,x) = A^4 B - 2^2 3^9 t C^12 D, monic of degree 28 in x; the sign is
// pinned by the discriminant 2^576 3^630 t^18 (t-1)^12 and by the
// multiplicity pattern 2^12 1^4 of m(1,x)
inline const MPoly& mm_poly() {
    static const MPoly m = [] {
        MPoly t = MPoly::var(tx(), "t");
        return mm_A().pow(4) * mm_B() - t * mm_C().pow(12) * mm_D() * BigRat(78732);
    }();
    return m;
}

// t as a degree-28 rational function of x
inline const RatFunc& mm_t_of_x() {
    static const RatFunc f{mm_A().pow(4) * mm_B(), mm_C().pow(12) * mm_D() * BigRat(78732)};
    return f;
}

// the z(x) relating m(t,x) = 0 to the weight-vector family
inline const RatFunc& mm_z_of_x() {
    static const RatFunc f{MPoly::parse(tx(), "(x - 1)^2") * mm_B() * mm_A().pow(2),
                           mm_C().pow(8) * BigRat(243)};
    return f;
}

// --- the one-parameter pair f28 / f36 ---------------------------------------

inline const MPoly& f28_poly() {
    static const MPoly m = [] {
        MPoly t = MPoly::var(tx(), "t");
        MPoly one = MPoly::constant(tx(), BigRat(1));
        MPoly q1 = MPoly::parse(tx(), "3*x^4 - 252*x^3 + 222*x^2 - 692*x - 5");
        MPoly q2 = MPoly::parse(tx(), "81*x^12 + 2106*x^11 + 26001*x^10 + 73332*x^9 + 268515*x^8 "
                                      "+ 574938*x^7 + 618759*x^6 + 400896*x^5 + 184140*x^4 + 52752*x^3 "
                                      "+ 8952*x^2 + 576*x - 32");
        MPoly q3 = MPoly::parse(tx(), "(4*x + 1)*(9*x^4 + 18*x^3 + 48*x^2 + 18*x + 1)^6");
        MPoly q4 = MPoly::parse(tx(), "(x - 2)^8*x^2*(x^2 + 8)*(x^2 - 2*x - 1)^8");
        return -(t * q1 * q2.pow(2)) + (one - t) * q3 * BigRat(1024) + (one - t) * t * q4 * BigRat(19683);
    }();
    return m;
}

inline const MPoly& f36_poly() {
    static const MPoly m = [] {
        MPoly t = MPoly::var(tx(), "t");
        MPoly q1 = MPoly::parse(tx(), "(4*x^4 - 3)^3*(4*x^4 - 12*x^2 + 12*x - 3)^6");
        MPoly q2 = MPoly::parse(tx(), "(x - 1)^4*(2*x^2 - 1)^8*(2*x^2 - 2*x + 1)^4");
        return q1 - t * q2 * BigRat(19683);
    }();
    return m;
}

// --- parametrized base curves (three-point-cover tables) ---------------------

struct ParamCurve {
    std::string name;
    std::string plane; // "pq" or "ab"
    RatFunc first, second;
};

inline const std::vector<ParamCurve>& param_curves() {
    static const std::vector<ParamCurve> curves = [] {
        std::vector<std::string> tv{"t"};
        auto P = [&](const std::string& s) { return MPoly::parse(tv, s); };
        auto F = [&](const std::string& n, const std::string& d) { return RatFunc{P(n), P(d)}; };
        std::vector<ParamCurve> v;
        // (p,q)-plane curves
        v.push_back({"Gp", "pq", F("t", "1"), F("1", "1")});
        v.push_back({"Hp", "pq", F("8*t", "9"), F("3", "4")});
        v.push_back({"Ip", "pq", F("9*t - 5", "4"), F("16", "(9*t - 5)^2")});
        v.push_back({"Jp", "pq", F("t + 3", "4"), F("16*t", "(t + 3)^2")});
        v.push_back({"Kp", "pq", F("t + 2", "3"), F("9*t", "(t + 2)^2")});
        v.push_back({"Lp", "pq", F("3*(t + 4)", "16"), F("24*t", "(t + 4)^2")});
        v.push_back({"Fstar", "pq", F("3", "4*t - 1"), F("3", "4*t - 1")});
        v.push_back({"Mstar", "pq", F("t", "1"), F("1", "t")});
        v.push_back({"Bstar", "pq", F("-3*t", "1"), F("-3", "t")});
        // double-primed curves: coordinates swapped
        for (const char* base : {"Gp", "Hp", "Ip", "Jp", "Kp", "Lp"}) {
            for (const auto& c : v)
                if (c.name == base) {
                    v.push_back({std::string(base) + "p", "pq", c.second, c.first}); // Gpp etc.
                    break;
                }
        }
        // (a,b)-plane curves; where a is tabulated as a function of b, compose
        auto C = [&](const std::string& s) { return RatFunc{P(s), P("1")}; };
        {
            RatFunc b = F("9*(t - 1)", "5*t - 9");
            auto a = (C("-27") * (b - C("1")) * (b - C("1")) * (b - C("1"))) / (C("5") * b - C("9"));
            v.push_back({"A", "ab", a, b});
        }
        v.push_back({"B", "ab", F("-48*(t - 1)", "1"), F("9", "1")});
        {
            RatFunc b = F("9*(t - 1)", "5*t - 1");
            auto a = (C("-1") * (b - C("9")) * (C("5") * b - C("9"))) / C("27");
            v.push_back({"C", "ab", a, b});
        }
        {
            RatFunc b = F("3*(t - 1)", "t - 3");
            auto a = (C("-1") * (b - C("1")) * (b - C("1")) * (b - C("1"))) / (b - C("3"));
            v.push_back({"E", "ab", a, b});
        }
        {
            RatFunc b = F("9*(t - 1)*t", "9*t^2 - 7*t + 1");
            RatFunc a = F("-3", "(9*t^2 - 7*t + 1)^2");
            v.push_back({"F", "ab", a, b});
        }
        v.push_back({"M", "ab", F("-16*t", "1"), F("1", "1")});
        {
            RatFunc b = F("t", "1");
            auto a = (b - C("1")) * (b - C("1"));
            v.push_back({"G", "ab", a, b});
        }
        {
            RatFunc b = F("2*t", "3");
            auto a = b * (C("3") * b - C("2")) / C("3");
            v.push_back({"H", "ab", a, b});
        }
        {
            RatFunc b = F("4", "9*t - 5");
            auto a = (b - C("1")) * (b - C("1")) * (C("5") * b + C("4")) / b;
            v.push_back({"I", "ab", a, b});
        }
        {
            RatFunc b = F("4*t", "t + 3");
            auto a = C("-1") * (b - C("1")) * (b - C("1")) * b / (C("3") * (b - C("4")));
            v.push_back({"J", "ab", a, b});
        }
        {
            RatFunc b = F("3*t", "t + 2");
            auto a = C("-1") * (b - C("1")) * (b - C("1")) * (b - C("1")) / (b - C("3"));
            v.push_back({"K", "ab", a, b});
        }
        {
            RatFunc b = F("9*t", "2*(t + 4)");
            auto a = C("-1") * b * b * (C("10") * b - C("9")) / (C("27") * (C("2") * b - C("9")));
            v.push_back({"L", "ab", a, b});
        }
        return v;
    }();
    return curves;
}

inline const ParamCurve& param_curve(const std::string& name) {
    for (const auto& c : param_curves())
        if (c.name == name) return c;
    throw std::invalid_argument("unknown parametrized curve " + name);
}

// --- the degree-28 field polynomial with smallest known discriminant --------

inline const std::vector<long>& lightly_ramified_f28_coeffs() {
    // constant term first
    static const std::vector<long> c{
        4,     32,   24,   -192, -216, -240,  1800, 672,  -1116, -4680, 1752, 3768, -1068, 3072, -4920,
        1464, -657, -756, 2478, -2292, 2040, -1440, 798,  -420,  165,   -60,  18,   -4,    1};
    return c;
}

// the eight specialization points producing one field
struct OctetPoint {
    std::string family; // S0 | S1 | S2
    BigRat x, y;
};

inline const std::vector<OctetPoint>& octet_points() {
    static const std::vector<OctetPoint> pts = {
        {"S0", BigRat(-4), BigRat(-3)},        {"S0", BigRat(-1, 2), BigRat(1)},
        {"S0", BigRat(1, 2), BigRat(3)},       {"S0", BigRat(4), BigRat(-3)},
        {"S0", BigRat(-32), BigRat(1)},        {"S0", BigRat(-32, 81), BigRat(49, 81)},
        {"S1", BigRat(1), BigRat(1, 2)},       {"S2", BigRat(-27, 4), BigRat(-1, 2)},
    };
    return pts;
}

} // namespace covers_data
} // namespace dcl
