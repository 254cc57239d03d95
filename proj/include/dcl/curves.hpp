#pragma once

// Curve models and their L-polynomials: superelliptic counting by the tame
// Kummer local rule, plane-quartic counting for the bitangent quartics,
// Newton-identity assembly with the functional equation, the mod-3 twist and
// mod-2 reduction, Frobenius classification from division polynomials, and
// the two correspondence tables.

#include <complex>
#include <optional>

#include "dcl/covers.hpp"
#include "dcl/smallfq.hpp"
#include "dcl/table1.hpp"

namespace dcl {

// --- curve models ------------------------------------------------------------

// superelliptic y^m = f(x)/c with branch structure f = prod pieces[i]^mult[i];
// good primes keep every piece squarefree, pairwise coprime, of full degree
struct SuperModel {
    int m = 2;
    std::vector<std::pair<Poly<BigRat>, int>> pieces;
    BigRat c = BigRat(1);
    int genus = 1;
    std::string name;

    Poly<BigRat> full_f() const {
        Poly<BigRat> f = Poly<BigRat>::constant(BigRat(1));
        for (const auto& [piece, mult] : pieces) f = f * piece.pow(static_cast<unsigned>(mult));
        return f;
    }
};

inline Poly<BigRat> poly_in_x(const std::vector<BigRat>& coeffs) {
    return Poly<BigRat>(BigRat(0), std::vector<BigRat>(coeffs));
}

// Y1(u,v):  v y^4 = x^2 (x-1)^3 (v x^2 + (1-u-v) x + u), genus 4
inline SuperModel model_Y1(const BigRat& u, const BigRat& v) {
    SuperModel mod;
    mod.m = 4;
    mod.genus = 4;
    mod.name = "Y1";
    mod.c = v;
    mod.pieces = {{poly_in_x({BigRat(0), BigRat(1)}), 2},
                  {poly_in_x({BigRat(-1), BigRat(1)}), 3},
                  {poly_in_x({u, 1 - u - v, v}), 1}};
    return mod;
}

// Y2(u,v):  4 y^4 = (x^2 + 2x + 1 - 4/v)^2 (x^2 - 2x + 1 - 4u/v), genus 3
inline SuperModel model_Y2(const BigRat& u, const BigRat& v) {
    if (v == 0) throw std::domain_error("degenerate model: v = 0");
    SuperModel mod;
    mod.m = 4;
    mod.genus = 3;
    mod.name = "Y2";
    mod.c = BigRat(4);
    mod.pieces = {{poly_in_x({1 - BigRat(4) / v, BigRat(2), BigRat(1)}), 2},
                  {poly_in_x({1 - BigRat(4) * u / v, BigRat(-2), BigRat(1)}), 1}};
    return mod;
}

// E(u,v):  y^2 = v (x-1)(v x^2 + (1-u-v) x + u), genus 1 (the v-twist makes
// the L-factorization exact)
inline SuperModel model_E(const BigRat& u, const BigRat& v) {
    if (v == 0) throw std::domain_error("degenerate model: v = 0");
    SuperModel mod;
    mod.m = 2;
    mod.genus = 1;
    mod.name = "E";
    mod.c = 1 / v;
    mod.pieces = {{poly_in_x({BigRat(-1), BigRat(1)}), 1},
                  {poly_in_x({u, 1 - u - v, v}), 1}};
    return mod;
}

// good-prime predicate: denominators, leading coefficients, piece
// discriminants and pairwise resultants all invertible; p coprime to 6
inline bool super_good_prime(const SuperModel& mod, int64_t p) {
    if (p <= 3) return false;
    try {
        BigRat check = mod.c;
        if (rat_mod(check, p) == 0) return false;
        for (const auto& [piece, mult] : mod.pieces) {
            if (rat_mod(BigRat(piece.lc()), p) == 0) return false;
            if (piece.deg() >= 2) {
                if (rat_mod(discriminant(piece), p) == 0) return false;
            }
        }
        for (size_t i = 0; i < mod.pieces.size(); ++i)
            for (size_t j = i + 1; j < mod.pieces.size(); ++j)
                if (rat_mod(resultant(mod.pieces[i].first, mod.pieces[j].first), p) == 0) return false;
    } catch (const std::domain_error&) {
        return false; // denominator died
    }
    return true;
}

// degree-one places of the smooth projective model over F_{p^deg}
inline long count_points_super(const SuperModel& mod, SmallFq& F) {
    Poly<BigRat> f = mod.full_f();
    int deg = f.deg();
    // reduce coefficients
    std::vector<uint32_t> fc(deg + 1);
    for (int i = 0; i <= deg; ++i) fc[i] = F.from_rat(f.coeff(i));
    uint32_t cinv = F.inv(F.from_rat(mod.c));
    long total = 0;
    uint32_t q = F.elem_count();
    for (uint32_t alpha = 0; alpha < q; ++alpha) {
        // order of vanishing at alpha and the unit part
        std::vector<uint32_t> cur = fc;
        int d = 0;
        uint32_t u0;
        for (;;) {
            // evaluate by Horner
            uint32_t val = 0;
            for (size_t i = cur.size(); i-- > 0;) val = F.add(F.mul(val, alpha), cur[i]);
            if (val != 0 || cur.size() == 1) {
                u0 = val;
                break;
            }
            // synthetic division by (x - alpha)
            std::vector<uint32_t> next(cur.size() - 1);
            uint32_t carry = 0;
            for (size_t i = cur.size(); i-- > 1;) {
                carry = F.add(cur[i], F.mul(carry, alpha));
                next[i - 1] = carry;
            }
            cur = std::move(next);
            ++d;
        }
        uint32_t unit = F.mul(u0, cinv);
        int g = std::gcd(mod.m, d);
        total += F.nth_root_count(unit, static_cast<uint64_t>(g));
    }
    // infinity: x -> 1/X, Y = y / X^ceil(deg/m)
    int k = (deg + mod.m - 1) / mod.m;
    int dinf = mod.m * k - deg;
    // F_inf(X) = X^{mk} f(1/X): coefficients reversed with X^{dinf} shift
    // order of vanishing at X = 0 is dinf plus trailing zeros of reversed f
    // (leading coefficients of f are nonzero at good primes)
    uint32_t unit_inf = F.mul(fc[deg], cinv); // lowest coefficient of the reversed polynomial
    int ginf = std::gcd(mod.m, dinf);
    total += F.nth_root_count(unit_inf, static_cast<uint64_t>(ginf));
    return total;
}

// --- the bitangent quartic x^3 + A(w) x + B(w) -------------------------------

struct QuarticModel {
    ShiodaParams<BigRat> r;
    std::string name;
    int genus = 3;
};

inline QuarticModel model_Q(const ShiodaParams<BigRat>& r, const std::string& name) { return {r, name, 3}; }

// A(w) = w^3 + r4 w + r6, B(w) = r1 w^4 + r3 w^3 + r5 w^2 + r7 w + r9
inline std::pair<Poly<BigRat>, Poly<BigRat>> quartic_AB(const ShiodaParams<BigRat>& r) {
    Poly<BigRat> A = poly_in_x({r[4], r[2], BigRat(0), BigRat(1)});
    Poly<BigRat> B = poly_in_x({r[6], r[5], r[3], r[1], r[0]});
    return {A, B};
}

// smoothness of the projective quartic over F_p-bar; the two points at
// infinity are always smooth, so only the affine chart is examined
inline bool quartic_smooth_mod_p(const ShiodaParams<BigRat>& r, int64_t p) {
    if (p <= 3) return false;
    FqField F(p, 1);
    FFElem z(F, 0);
    auto [Aq, Bq] = quartic_AB(r);
    PolyF A(z), B(z);
    try {
        A = poly_mod_p(Aq, F);
        B = poly_mod_p(Bq, F);
    } catch (const std::domain_error&) {
        return false;
    }
    if (A.deg() != 3) return false;
    // singular with A(w) != 0: common root of Delta = 4A^3 + 27B^2 and 2AB' - 3A'B
    PolyF Delta = A.pow(3) * kfrom_int(z, 4) + B * B * kfrom_int(z, 27);
    PolyF H = A * B.derivative() * kfrom_int(z, 2) - A.derivative() * B * kfrom_int(z, 3);
    if (Delta.is_zero()) return false;
    PolyF g = H.is_zero() ? Delta : gcd_poly(Delta, H);
    for (;;) {
        PolyF h = gcd_poly(g, A);
        if (h.deg() == 0) break;
        g = divexact(g, h);
    }
    if (g.deg() > 0) return false;
    // singular with A(w) = 0: common root of A, B, B'
    PolyF g2 = gcd_poly(gcd_poly(A, B), B.derivative());
    return g2.deg() == 0;
}

inline long count_points_quartic(const QuarticModel& mod, SmallFq& F) {
    auto [Aq, Bq] = quartic_AB(mod.r);
    std::vector<uint32_t> ac(4), bc(5);
    for (int i = 0; i <= 3; ++i) ac[i] = F.from_rat(Aq.coeff(i));
    for (int i = 0; i <= 4; ++i) bc[i] = F.from_rat(Bq.coeff(i));
    long total = 2; // the two rational points at infinity
    uint32_t q = F.elem_count();
    for (uint32_t w = 0; w < q; ++w) {
        uint32_t A = 0, B = 0;
        for (int i = 3; i >= 0; --i) A = F.add(F.mul(A, w), ac[i]);
        for (int i = 4; i >= 0; --i) B = F.add(F.mul(B, w), bc[i]);
        total += F.cubic_root_count(A, B);
    }
    return total;
}

// --- L-polynomials -------------------------------------------------------------

struct LPolynomial {
    int64_t p = 0;
    int genus = 0;
    std::vector<BigInt> c; // 1 + c1 x + ... + c_{2g} x^{2g}
    std::string provenance;

    bool operator==(const LPolynomial& o) const { return p == o.p && c == o.c; }
};

// counts[i] = #points over F_{p^{i+1}}, for i = 0..g-1
inline LPolynomial lpoly_from_counts(int64_t p, int genus, const std::vector<long>& counts,
                                     const std::string& provenance) {
    LPolynomial L;
    L.p = p;
    L.genus = genus;
    L.provenance = provenance;
    L.c.assign(2 * genus + 1, BigInt(0));
    L.c[0] = 1;
    // power sums s_k = p^k + 1 - N_k; Newton: c_k = -(s_k + sum c_i s_{k-i})/k
    std::vector<BigInt> s(genus + 1);
    for (int k = 1; k <= genus; ++k) s[k] = pow_int(BigInt(p), k) + 1 - BigInt(counts[k - 1]);
    for (int k = 1; k <= genus; ++k) {
        BigInt acc = s[k];
        for (int i = 1; i < k; ++i) acc += L.c[i] * s[k - i];
        if (acc % k != 0) throw std::runtime_error("counting inconsistency: non-integral L coefficient");
        L.c[k] = -acc / k;
    }
    for (int i = 0; i < genus; ++i) L.c[2 * genus - i] = pow_int(BigInt(p), genus - i) * L.c[i];
    return L;
}

inline LPolynomial lpoly_super(const SuperModel& mod, int64_t p) {
    if (!super_good_prime(mod, p)) throw std::domain_error("bad prime for " + mod.name);
    std::vector<long> counts;
    for (int fdeg = 1; fdeg <= mod.genus; ++fdeg) {
        uint64_t qf = 1;
        for (int i = 0; i < fdeg; ++i) qf *= static_cast<uint64_t>(p);
        if (qf > 10000000ull) throw std::domain_error("field enumeration guard exceeded");
        SmallFq F(p, fdeg);
        counts.push_back(count_points_super(mod, F));
    }
    return lpoly_from_counts(p, mod.genus, counts, mod.name);
}

inline LPolynomial lpoly_quartic(const QuarticModel& mod, int64_t p) {
    if (!quartic_smooth_mod_p(mod.r, p)) throw std::domain_error("bad prime for " + mod.name);
    for (const auto& ri : mod.r)
        if (ri != 0 && rat_mod(BigRat(ri.get_den()), static_cast<uint64_t>(p)) == 0)
            throw std::domain_error("bad prime for " + mod.name);
    std::vector<long> counts;
    for (int fdeg = 1; fdeg <= 3; ++fdeg) {
        uint64_t qf = 1;
        for (int i = 0; i < fdeg; ++i) qf *= static_cast<uint64_t>(p);
        if (qf > 10000000ull) throw std::domain_error("field enumeration guard exceeded");
        SmallFq F(p, fdeg);
        counts.push_back(count_points_quartic(mod, F));
    }
    return lpoly_from_counts(p, 3, counts, mod.name);
}

// numeric Weil check: all inverse roots on |z| = sqrt(p)
inline bool weil_bound_holds(const LPolynomial& L, double tol = 1e-6) {
    // Durand-Kerner on the reversed polynomial
    int n = 2 * L.genus;
    std::vector<std::complex<double>> a(n + 1);
    for (int i = 0; i <= n; ++i) a[i] = L.c[i].get_d();
    std::vector<std::complex<double>> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = std::polar(1.0 / std::sqrt(static_cast<double>(L.p)), 0.7 * i + 0.3);
    for (int iter = 0; iter < 400; ++iter) {
        for (int i = 0; i < n; ++i) {
            std::complex<double> num = a[n];
            for (int k = n - 1; k >= 0; --k) num = num * roots[i] + a[k];
            std::complex<double> den = a[n];
            for (int j = 0; j < n; ++j)
                if (j != i) den *= roots[i] - roots[j];
            roots[i] -= num / den;
        }
    }
    for (int i = 0; i < n; ++i) {
        double inv_abs = 1.0 / std::abs(roots[i]); // inverse roots of L
        if (std::abs(inv_abs - std::sqrt(static_cast<double>(L.p))) > tol * std::sqrt(static_cast<double>(L.p)))
            return false;
    }
    return true;
}

// --- mod-3 twist and mod-2 reduction ------------------------------------------

// i -> -i on every coefficient
inline PolyF f9_conj_poly(const PolyF& f) {
    PolyF out = f;
    for (auto& c : out.c) c = f9_conj(c);
    return out;
}

// The degree-6 L-polynomial of these curves splits over Z[i] for p = 1 (4):
// L = f fbar with f = 1 + a x + b x^2 + c x^3, N(c) = p^3 and b = c abar / p.
// The search space is tiny (|a| <= 3 sqrt(p), finitely many c), and the
// mod-3 reduction of the integer factor is what the twist acts on. A search
// purely mod 3 would be ambiguous: distinct classes can share L mod 3.
struct GaussianInt {
    int64_t re = 0, im = 0;
    GaussianInt conj() const { return {re, -im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    int64_t norm() const { return re * re + im * im; }
};

inline std::vector<std::array<GaussianInt, 3>> conjugate_factors_zi(const LPolynomial& L) {
    int64_t p = L.p;
    int64_t c1 = static_cast<int64_t>(L.c[1].get_si());
    int64_t c2 = static_cast<int64_t>(L.c[2].get_si());
    int64_t c3 = static_cast<int64_t>(L.c[3].get_si());
    if (c1 % 2 != 0) throw std::runtime_error("no Z[i] factorization: odd first coefficient");
    int64_t p3 = p * p * p;
    std::vector<std::array<GaussianInt, 3>> found;
    int64_t smax = static_cast<int64_t>(3 * std::sqrt(static_cast<double>(p))) + 1;
    for (int64_t s = -smax; s <= smax; ++s) {
        GaussianInt alpha{c1 / 2, s};
        if (alpha.norm() > 9 * p) continue;
        int64_t gmax = static_cast<int64_t>(std::sqrt(static_cast<double>(p3))) + 1;
        for (int64_t g = -gmax; g <= gmax; ++g) {
            if (g * g > p3) continue;
            int64_t h2 = p3 - g * g;
            int64_t h = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(h2))));
            for (int64_t hh : {h - 1, h, h + 1}) {
                if (hh < 0 || g * g + hh * hh != p3) continue;
                for (int64_t sign : {1, -1}) {
                    GaussianInt gamma{g, sign * hh};
                    GaussianInt num = gamma * alpha.conj();
                    if (num.re % p || num.im % p) continue;
                    GaussianInt beta{num.re / p, num.im / p};
                    // verify N(f) = L
                    if (2 * alpha.re != c1) continue;
                    if (alpha.norm() + 2 * beta.re != c2) continue;
                    GaussianInt ab = alpha * beta.conj();
                    if (2 * gamma.re + 2 * ab.re != c3) continue;
                    found.push_back({alpha, beta, gamma});
                }
            }
        }
    }
    if (found.empty()) throw std::runtime_error("no Z[i] factorization found: counting inconsistency");
    return found;
}

inline PolyF twist_mod3(const LPolynomial& L) {
    if (L.genus != 3) throw std::invalid_argument("twist needs a degree-6 L-polynomial");
    static FqField F9(3, 2);
    FFElem z9(F9, 0);
    if (L.p % 4 == 1) {
        PolyF target(z9);
        for (int i = 0; i <= 6; ++i) target.c.push_back(FFElem(F9, static_cast<int64_t>(mod_u64(L.c[i], 3))));
        target.normalize();
        auto to_f9 = [&](const GaussianInt& g) {
            return FFElem(F9, std::vector<int64_t>{g.re % 3, g.im % 3});
        };
        std::optional<PolyF> result;
        for (const auto& [alpha, beta, gamma] : conjugate_factors_zi(L)) {
            FFElem a = to_f9(alpha), b = to_f9(beta), c = to_f9(gamma);
            PolyF f(z9, {FFElem(F9, 1), a, b, c});
            if (!(f * f9_conj_poly(f) == target))
                throw std::runtime_error("Z[i] factor does not reduce to L mod 3");
            // substitute x -> -gamma^5 x
            FFElem m1 = -(c.pow(5));
            PolyF tw(z9, {FFElem(F9, 1), a * m1, b * m1 * m1, c * m1 * m1 * m1});
            PolyF full = tw * f9_conj_poly(tw);
            if (!result) result = full;
            else if (!(*result == full)) throw std::runtime_error("ambiguous Z[i] factorizations twist differently");
        }
        return *result;
    }
    // p = 3 (4): L is even; substitute x^2 -> p x^2
    for (int i = 1; i <= 5; i += 2)
        if (L.c[i] != 0) throw std::runtime_error("odd coefficient in an even L-polynomial");
    PolyF out(z9);
    out.c.assign(7, FFElem(F9, 0));
    uint64_t pm = static_cast<uint64_t>(L.p);
    out.c[0] = FFElem(F9, 1);
    out.c[2] = FFElem(F9, static_cast<int64_t>(mod_u64(L.c[2] * pm, 3)));
    out.c[4] = FFElem(F9, static_cast<int64_t>(mod_u64(L.c[4] * pm * pm, 3)));
    out.c[6] = FFElem(F9, static_cast<int64_t>(mod_u64(L.c[6] * pm * pm * pm, 3)));
    out.normalize();
    return out;
}

inline SmallFactorization reduce_mod2(const LPolynomial& L) {
    static FqField F2(2, 1);
    PolyF f(FFElem(F2, 0));
    for (const auto& c : L.c) f.c.push_back(FFElem(F2, static_cast<int64_t>(mod_u64(c, 2))));
    f.normalize();
    return factor_full_small(f);
}

// --- Frobenius classification ---------------------------------------------------

struct FrobeniusVerdict {
    int64_t p = 0;
    CyclePartition lambda28;
    bool inner_side = false; // side datum: inner iff p=1 (4) for the pi-covers
    std::vector<std::string> labels; // possibly ambiguous, e.g. {3A, 3B}
};

inline FrobeniusVerdict classify_frobenius(const Poly<BigRat>& divpoly, int64_t p, bool inner_side,
                                           const std::optional<Poly<BigRat>>& resolvent36 = std::nullopt) {
    auto part = partition_mod_p(divpoly, p);
    if (!part) throw std::domain_error("bad prime: division polynomial not squarefree");
    FrobeniusVerdict v;
    v.p = p;
    v.lambda28 = *part;
    v.inner_side = inner_side;
    for (const auto& cd : gamma2_class_data())
        if (cd.inner == inner_side && cd.lambda28 == *part) {
            if (cd.name == "12d") continue; // 12c/12d share everything visible here
            v.labels.push_back(cd.name == "12c" ? "12cd" : cd.name);
        }
    if (v.labels.empty()) throw std::domain_error("partition not in the class table: group too small or bad prime");
    if (v.labels.size() > 1 && resolvent36) {
        auto p36 = partition_mod_p(*resolvent36, p);
        if (p36) {
            std::vector<std::string> filtered;
            for (const auto& name : v.labels)
                for (const auto& cd : gamma2_class_data())
                    if (cd.name == name && cd.lambda36 == *p36) filtered.push_back(name);
            if (filtered.size() == 1) v.labels = filtered;
        }
    }
    return v;
}

// --- embedded correspondence tables ----------------------------------------------

struct CorrespondenceRow {
    std::string cls;        // verdict class
    std::string mod3;       // twisted polynomial: cubic over F9 as "c0,c1,c2,c3" pairs, or even F3 poly
    bool mod3_conjugate;    // entry of the form N(f): compare up to i -> -i
    std::string mod2;       // factored form over F2, canonical product string
    std::vector<int64_t> primes; // tabulated prime lists, 5 <= p <= 97
};

// mod-3 entries are stored as the full degree-6 polynomial; conjugate-pair
// entries are rebuilt as N(f).
inline PolyF parse_f9_cubic(const std::string& text) {
    // text = "a0;a1;a2;a3" with entries "re,im"
    static FqField F9(3, 2);
    PolyF f(FFElem(F9, 0));
    size_t pos = 0;
    for (int k = 0; k < 4; ++k) {
        size_t next = text.find(';', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next + 1;
        auto comma = tok.find(',');
        int64_t re = std::stol(tok.substr(0, comma));
        int64_t im = std::stol(tok.substr(comma + 1));
        f.c.push_back(FFElem(F9, std::vector<int64_t>{re, im}));
    }
    f.normalize();
    return f;
}

inline const std::vector<CorrespondenceRow>& correspondence_rows() {
    static const std::vector<CorrespondenceRow> rows = {
        {"3B", "1,0;0,0;0,0;-1,0", true, "(x+1)^2 (x^2+x+1)^2", {89}},
        {"7AB", "1,0;-1,-1;1,-1;-1,0", true, "(x^3+x+1) (x^3+x^2+1)", {5, 13, 29, 53, 61, 73, 97}},
        {"8AB", "1,0;0,-1;0,-1;-1,0", true, "(x+1)^6", {37, 41}},
        {"12AB", "1,0;1,-1;-1,-1;-1,0", true, "(x^2+x+1)^3", {17}},
        {"6b", "even:1,0,0,1", false, "(x+1)^2 (x^2+x+1)^2", {11, 19}},
        {"8c", "even:1,1,1,1", false, "(x+1)^6", {43, 67, 79, 83}},
        {"12cd", "even:1,2,2,1", false, "(x^2+x+1)^3", {7, 23, 31, 47, 59, 71}},
    };
    return rows;
}

// expected mod-3 polynomial of a row (degree six over F9)
inline PolyF expected_mod3(const CorrespondenceRow& row) {
    static FqField F9(3, 2);
    FFElem z9(F9, 0);
    if (row.mod3.rfind("even:", 0) == 0) {
        // even polynomial over F3 with listed even-degree coefficients c0,c2,c4,c6
        std::string body = row.mod3.substr(5);
        std::vector<int64_t> evens;
        size_t pos = 0;
        while (pos != std::string::npos) {
            size_t next = body.find(',', pos);
            evens.push_back(std::stol(body.substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
            pos = next == std::string::npos ? next : next + 1;
        }
        PolyF f(z9);
        f.c.assign(2 * evens.size() - 1, FFElem(F9, 0));
        for (size_t i = 0; i < evens.size(); ++i) f.c[2 * i] = FFElem(F9, evens[i]);
        f.normalize();
        return f;
    }
    PolyF f = parse_f9_cubic(row.mod3);
    return f * f9_conj_poly(f);
}

inline std::string factorization_string(const SmallFactorization& fac) {
    std::string out;
    for (const auto& [f, m] : fac.factors) {
        std::string fs = "(";
        bool first = true;
        for (int i = 0; i <= f.deg(); ++i) {
            if (f.coeff(i).is_zero()) continue;
            if (!first) fs += "+";
            first = false;
            uint64_t c = f.coeff(i).index();
            if (i == 0 || c != 1) fs += std::to_string(c);
            if (i >= 1) fs += c != 1 ? "*x" : "x";
            if (i >= 2) fs += "^" + std::to_string(i);
        }
        fs += ")";
        if (m > 1) fs += "^" + std::to_string(m);
        if (!out.empty()) out += " ";
        out += fs;
    }
    return out;
}

// canonical mod-2 string of the expected entry
inline std::string expected_mod2_canonical(const std::string& entry) {
    static FqField F2(2, 1);
    FFElem z(F2, 0);
    // entries are products of (x+1), (x^2+x+1), (x^3+x+1), (x^3+x^2+1)
    PolyF acc = PolyF::constant(FFElem(F2, 1));
    std::map<std::string, PolyF> atoms;
    atoms.emplace("(x+1)", PolyF(z, {FFElem(F2, 1), FFElem(F2, 1)}));
    atoms.emplace("(x^2+x+1)", PolyF(z, {FFElem(F2, 1), FFElem(F2, 1), FFElem(F2, 1)}));
    atoms.emplace("(x^3+x+1)", PolyF(z, {FFElem(F2, 1), FFElem(F2, 1), FFElem(F2, 0), FFElem(F2, 1)}));
    atoms.emplace("(x^3+x^2+1)", PolyF(z, {FFElem(F2, 1), FFElem(F2, 0), FFElem(F2, 1), FFElem(F2, 1)}));
    size_t pos = 0;
    while (pos < entry.size()) {
        size_t close = entry.find(')', pos);
        std::string atom = entry.substr(pos, close - pos + 1);
        int mult = 1;
        pos = close + 1;
        if (pos < entry.size() && entry[pos] == '^') {
            size_t end = entry.find(' ', pos);
            mult = std::stoi(entry.substr(pos + 1, end == std::string::npos ? std::string::npos : end - pos - 1));
            pos = end == std::string::npos ? entry.size() : end;
        }
        while (pos < entry.size() && entry[pos] == ' ') ++pos;
        acc = acc * atoms.at(atom).pow(static_cast<unsigned>(mult));
    }
    return factorization_string(factor_full_small(acc));
}

// --- verification drivers -------------------------------------------------------

// the models attached to a base point (u,v): division polynomial and curves
struct CorrespondencePoint {
    BigRat u, v;
    Poly<BigRat> divpoly; // primitive S0(u,v,z)
    SuperModel y2;
    QuarticModel q0, q1, q2;
};

inline CorrespondencePoint correspondence_point(const BigRat& u, const BigRat& v) {
    CorrespondencePoint pt{u, v, Poly<BigRat>(BigRat(0)), model_Y2(u, v),
                           model_Q(s0_params(u, v), "Q0"),
                           model_Q(s0_params(u, v), "Q1"),
                           model_Q(s0_params(u, v), "Q2")};
    pt.divpoly = clear_to_primitive(shioda_eval(s0_params(u, v)));
    auto [p1, q1] = quotient_map_eval("sigma1", u, v);
    auto [a2, b2] = quotient_map_eval("sigma2", u, v);
    pt.q1 = model_Q(s1_params_scaled(p1, q1), "Q1");
    pt.q2 = model_Q(s2_params(a2, b2), "Q2");
    return pt;
}

// Exact identity L_p(Y1) = L_p(Y2) L_p(E) for each listed prime.
inline Report verify_L_factorization(const BigRat& u, const BigRat& v, const std::vector<int64_t>& primes) {
    Report rep;
    rep.title = "L-factorization";
    SuperModel y1 = model_Y1(u, v), y2 = model_Y2(u, v), e = model_E(u, v);
    for (int64_t p : primes) {
        std::string tag = "(" + rat_to_string(u) + "," + rat_to_string(v) + ") p=" + std::to_string(p);
        try {
            LPolynomial L1 = lpoly_super(y1, p);
            LPolynomial L2 = lpoly_super(y2, p);
            LPolynomial LE = lpoly_super(e, p);
            std::vector<BigInt> prod(L1.c.size(), BigInt(0));
            for (size_t i = 0; i < L2.c.size(); ++i)
                for (size_t j = 0; j < LE.c.size(); ++j)
                    if (i + j < prod.size()) prod[i + j] += L2.c[i] * LE.c[j];
            rep.add("L(Y1) = L(Y2) L(E) at " + tag, prod == L1.c);
        } catch (const std::exception& ex) {
            rep.add("L-factorization at " + tag, false, ex.what());
        }
    }
    return rep;
}

// Row-for-row verification of the two reduction tables at a base point. When
// `against_tables` is set (the (-4,-3) case) the computed class verdicts,
// twisted mod-3 polynomials, factored mod-2 reductions, and per-class prime
// lists must all match the embedded rows; otherwise the outputs must at least
// be functions of the verdict class alone.
inline Report verify_correspondence(const BigRat& u, const BigRat& v, int64_t pmax, bool against_tables) {
    Report rep;
    rep.title = "correspondence";
    CorrespondencePoint pt = correspondence_point(u, v);
    std::optional<Poly<BigRat>> resolvent;
    if (against_tables) resolvent = clear_to_primitive(f36_eval(BigRat(4)));

    std::map<std::string, std::pair<std::string, std::string>> outputs_by_class;
    std::map<std::string, std::vector<int64_t>> primes_by_class;
    bool coincidence5 = true, coincidence7 = true;
    for (uint64_t pu : primes_in_range(5, static_cast<uint64_t>(pmax))) {
        int64_t p = static_cast<int64_t>(pu);
        auto part = partition_mod_p(pt.divpoly, p);
        if (!part) continue;
        if (!super_good_prime(pt.y2, p)) continue;
        if (!quartic_smooth_mod_p(pt.q0.r, p) || !quartic_smooth_mod_p(pt.q1.r, p)
            || !quartic_smooth_mod_p(pt.q2.r, p))
            continue;
        FrobeniusVerdict verdict = classify_frobenius(pt.divpoly, p, p % 4 == 1, resolvent);
        std::string cls = verdict.labels.size() == 1 ? verdict.labels[0]
                                                     : verdict.labels[0] + "/" + verdict.labels[1];

        LPolynomial LY2 = lpoly_super(pt.y2, p);
        PolyF tw = twist_mod3(LY2);
        LPolynomial L0 = lpoly_quartic(pt.q0, p);
        LPolynomial L1 = lpoly_quartic(pt.q1, p);
        LPolynomial L2 = lpoly_quartic(pt.q2, p);
        std::string m2 = factorization_string(reduce_mod2(L0));
        std::string m2b = factorization_string(reduce_mod2(L1));
        std::string m2c = factorization_string(reduce_mod2(L2));
        rep.add("mod-2 reductions of Q0,Q1,Q2 coincide at p=" + std::to_string(p),
                m2 == m2b && m2 == m2c, m2);
        if (p == 5 && against_tables) coincidence5 = L0 == L1;
        if (p == 7 && against_tables) coincidence7 = L1 == L2;

        if (against_tables) {
            const CorrespondenceRow* row = nullptr;
            for (const auto& r : correspondence_rows())
                if (r.cls == cls) row = &r;
            rep.add("class verdict known at p=" + std::to_string(p), row != nullptr, cls);
            if (row) {
                rep.add("mod-3 twist matches table at p=" + std::to_string(p), tw == expected_mod3(*row), cls);
                rep.add("mod-2 factorization matches table at p=" + std::to_string(p),
                        m2 == expected_mod2_canonical(row->mod2), m2);
                primes_by_class[cls].push_back(p);
            }
        } else {
            std::string tws;
            for (const auto& c : tw.c) tws += c.str();
            auto it = outputs_by_class.find(cls);
            if (it == outputs_by_class.end())
                outputs_by_class.emplace(cls, std::make_pair(tws, m2));
            else
                rep.add("outputs at p=" + std::to_string(p) + " depend only on class " + cls,
                        it->second == std::make_pair(tws, m2));
        }
    }
    if (against_tables) {
        for (const auto& row : correspondence_rows()) {
            std::vector<int64_t> expected;
            for (int64_t p : row.primes)
                if (p <= pmax) expected.push_back(p);
            auto it = primes_by_class.find(row.cls);
            std::vector<int64_t> got = it == primes_by_class.end() ? std::vector<int64_t>{} : it->second;
            std::string lst;
            for (auto p : got) lst += std::to_string(p) + " ";
            rep.add("prime list for class " + row.cls, got == expected, lst);
        }
        rep.add("L5(Q0) = L5(Q1)", coincidence5);
        rep.add("L7(Q1) = L7(Q2)", coincidence7);
    }
    return rep;
}

} // namespace dcl
