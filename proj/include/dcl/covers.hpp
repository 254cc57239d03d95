#pragma once

// Operations on the embedded cover catalog: exact construction of the
// two-parameter resultant polynomials, specialization, quotient-map
// evaluation, the randomized multi-prime identity suite, the one-parameter
// specializations with their term counts, the field-recovery comparisons,
// and the smooth-discriminant screen.

#include <cmath>
#include <fstream>
#include <memory>
#include <mutex>
#include <set>

#include "dcl/covers_data.hpp"
#include "dcl/factorization.hpp"
#include "dcl/json_io.hpp"
#include "dcl/modular.hpp"
#include "dcl/perm.hpp"
#include "dcl/report.hpp"
#include "dcl/resultant.hpp"
#include "dcl/shioda.hpp"

namespace dcl {

// --- modular Sylvester blackbox for Res_y(A - s1 B, C - s2 D) --------------

namespace detail {

// one MPoly in (x, y), split by the exponent of the eliminated variable and
// reduced mod p: entries (elim_exp, kept_exp, coeff)
struct SplitPoly {
    int elim_deg = 0;
    std::vector<std::vector<std::pair<int, uint64_t>>> rows; // rows[elim_exp] = {(kept_exp, c)}

    SplitPoly(const MPoly& f, int elim_var, int kept_var, uint64_t p) {
        elim_deg = f.degree_in(elim_var);
        rows.assign(elim_deg + 1, {});
        for (const auto& [k, c] : f.terms) {
            uint64_t cm = rat_mod(c, p);
            if (cm == 0) continue;
            rows[k.get(elim_var)].emplace_back(k.get(kept_var), cm);
        }
    }
    uint64_t coeff_at(int elim_exp, uint64_t kept_val, uint64_t p) const {
        if (elim_exp > elim_deg) return 0;
        uint64_t acc = 0;
        for (const auto& [e, c] : rows[elim_exp])
            acc = (acc + mulmod_u64(c, powmod_u64(kept_val, e, p), p)) % p;
        return acc;
    }
};

// det of the Sylvester layout of f = A - s1 B, g = C - s2 D in the eliminated
// variable, evaluated at a point (s1, s2, kept)
struct SylvesterBlackbox {
    const CoverMaps* maps;
    int elim_var, kept_var;
    int m, n; // generic eliminated-variable degrees of f and g

    mutable std::mutex mu;
    mutable std::map<uint64_t, std::array<std::unique_ptr<SplitPoly>, 4>> per_prime;

    SylvesterBlackbox(const CoverMaps& cm, int elim, int kept) : maps(&cm), elim_var(elim), kept_var(kept) {
        m = std::max(cm.A.degree_in(elim), cm.B.degree_in(elim));
        n = std::max(cm.C.degree_in(elim), cm.D.degree_in(elim));
    }

    uint64_t operator()(const std::vector<uint64_t>& pt, uint64_t p) const {
        // pt = (s1, s2, kept-variable value)
        const std::array<std::unique_ptr<SplitPoly>, 4>* split;
        {
            std::lock_guard<std::mutex> lock(mu);
            auto& slot = per_prime[p];
            if (!slot[0]) {
                slot[0] = std::make_unique<SplitPoly>(maps->A, elim_var, kept_var, p);
                slot[1] = std::make_unique<SplitPoly>(maps->B, elim_var, kept_var, p);
                slot[2] = std::make_unique<SplitPoly>(maps->C, elim_var, kept_var, p);
                slot[3] = std::make_unique<SplitPoly>(maps->D, elim_var, kept_var, p);
            }
            split = &slot;
        }
        uint64_t s1 = pt[0], s2 = pt[1], kept = pt[2];
        std::vector<uint64_t> fc(m + 1), gc(n + 1);
        for (int e = 0; e <= m; ++e) {
            uint64_t a = (*split)[0]->coeff_at(e, kept, p);
            uint64_t b = (*split)[1]->coeff_at(e, kept, p);
            fc[e] = (a + p - mulmod_u64(s1, b, p)) % p;
        }
        for (int e = 0; e <= n; ++e) {
            uint64_t c = (*split)[2]->coeff_at(e, kept, p);
            uint64_t d = (*split)[3]->coeff_at(e, kept, p);
            gc[e] = (c + p - mulmod_u64(s2, d, p)) % p;
        }
        // Sylvester matrix: n rows of f, m rows of g (descending coefficients)
        size_t dim = static_cast<size_t>(m + n);
        std::vector<std::vector<uint64_t>> M(dim, std::vector<uint64_t>(dim, 0));
        for (int r = 0; r < n; ++r)
            for (int i = 0; i <= m; ++i) M[r][r + i] = fc[m - i];
        for (int r = 0; r < m; ++r)
            for (int i = 0; i <= n; ++i) M[n + r][r + i] = gc[n - i];
        return det_mod_p(M, p);
    }
};

} // namespace detail

// --- the six resultant polynomials ------------------------------------------

struct CoverCatalog {
    MPoly F0, F1, F2; // in (param1, param2, x)
    MPoly G0, G1, G2; // in (param1, param2, y)
};

inline Poly<BigRat> clear_to_primitive(const Poly<BigRat>& f) {
    auto [content, prim] = content_primitive(f);
    (void)content;
    return prim;
}

// exact one-point resultant, used as the independent route in tests:
// Res_elim(A - s1 B, C - s2 D) over Q[kept]
inline Poly<BigRat> specialize_by_exact_resultant(const CoverMaps& maps, const BigRat& s1, const BigRat& s2,
                                                  bool keep_x) {
    int xvar = maps.A.var_index("x"), yvar = maps.A.var_index("y");
    int elim = keep_x ? yvar : xvar;
    int kept = keep_x ? xvar : yvar;
    using PX = Poly<BigRat>;
    using PE = Poly<PX>;
    BigRat q0(0);
    PX zero(q0);
    auto split = [&](const MPoly& f) {
        std::vector<PX> out(f.degree_in(elim) + 1, zero);
        for (const auto& [k, c] : f.terms) {
            auto& row = out[k.get(elim)];
            size_t e = static_cast<size_t>(k.get(kept));
            if (row.c.size() <= e) row.c.resize(e + 1, BigRat(0));
            row.c[e] += c;
        }
        for (auto& row : out) row.normalize();
        return out;
    };
    auto fold = [&](const std::vector<PX>& A, const std::vector<PX>& B, const BigRat& s) {
        size_t deg = std::max(A.size(), B.size());
        std::vector<PX> out;
        for (size_t e = 0; e < deg; ++e) {
            PX a = e < A.size() ? A[e] : zero;
            PX b = e < B.size() ? B[e] : zero;
            out.push_back(a - b * s);
        }
        PE f(zero, std::move(out));
        return f;
    };
    PE f = fold(split(maps.A), split(maps.B), s1);
    PE g = fold(split(maps.C), split(maps.D), s2);
    return resultant(f, g);
}

// The raw Res of the map pair carries a parameter-independent content in the
// kept variable (powers of the leading coefficients and base-point factors);
// the cover polynomial is the primitive part after dividing that content out.
inline CoverCatalog build_cover_catalog_nocache() {
    struct Job {
        const CoverMaps* maps;
        std::vector<std::string> vars;
        bool keep_x;
        MPoly* out;
    };
    CoverCatalog cat;
    std::vector<Job> jobs = {
        {&covers_data::pi0_maps(), {"u", "v", "x"}, true, &cat.F0},
        {&covers_data::pi1_maps(), {"p", "q", "x"}, true, &cat.F1},
        {&covers_data::pi2_maps(), {"a", "b", "x"}, true, &cat.F2},
        {&covers_data::pi0_maps(), {"u", "v", "y"}, false, &cat.G0},
        {&covers_data::pi1_maps(), {"p", "q", "y"}, false, &cat.G1},
        {&covers_data::pi2_maps(), {"a", "b", "y"}, false, &cat.G2},
    };
    for (auto& job : jobs) {
        int xvar = job.maps->A.var_index("x"), yvar = job.maps->A.var_index("y");
        int elim = job.keep_x ? yvar : xvar;
        int kept = job.keep_x ? xvar : yvar;

        // kept-variable content from two generic exact specializations
        Poly<BigRat> r1 = specialize_by_exact_resultant(*job.maps, BigRat(5), BigRat(7), job.keep_x);
        Poly<BigRat> r2 = specialize_by_exact_resultant(*job.maps, BigRat(-3, 2), BigRat(11), job.keep_x);
        Poly<BigRat> content = clear_to_primitive(gcd_poly(r1, r2));

        detail::SylvesterBlackbox bb(*job.maps, elim, kept);
        int m = bb.m, n = bb.n;
        int kept_bound = 0;
        for (const MPoly* f : {&job.maps->A, &job.maps->B, &job.maps->C, &job.maps->D})
            kept_bound = std::max(kept_bound, f->degree_in(kept));
        kept_bound *= (m + n);
        auto fn = [&bb](const std::vector<uint64_t>& pt, uint64_t p) { return bb(pt, p); };
        auto res = interpolate_blackbox(fn, job.vars, {n, m, kept_bound}, 0xC0FFEE);

        // divide the kept-variable content out of every parameter coefficient
        MPoly stripped(job.vars);
        {
            std::map<std::pair<int, int>, Poly<BigRat>> by_param;
            for (const auto& [k, c] : res.poly.terms) {
                auto key = std::make_pair(k.get(0), k.get(1));
                auto it = by_param.find(key);
                if (it == by_param.end()) it = by_param.emplace(key, Poly<BigRat>(BigRat(0))).first;
                size_t e = static_cast<size_t>(k.get(2));
                if (it->second.c.size() <= e) it->second.c.resize(e + 1, BigRat(0));
                it->second.c[e] += c;
            }
            for (auto& [key, poly] : by_param) {
                poly.normalize();
                if (poly.is_zero()) continue;
                Poly<BigRat> q = divexact(poly, content);
                for (int e = 0; e <= q.deg(); ++e) {
                    if (q.coeff(e) == 0) continue;
                    ExpKey kk;
                    kk.set(0, key.first);
                    kk.set(1, key.second);
                    kk.set(2, e);
                    stripped.terms.emplace_back(kk, q.coeff(e));
                }
            }
            std::sort(stripped.terms.begin(), stripped.terms.end(),
                      [](const auto& a, const auto& b) { return b.first < a.first; });
        }
        // primitive normalization over Z
        BigInt dlcm = 1, ngcd = 0;
        for (const auto& [k, c] : stripped.terms)
            mpz_lcm(dlcm.get_mpz_t(), dlcm.get_mpz_t(), c.get_den().get_mpz_t());
        for (const auto& [k, c] : stripped.terms) {
            BigInt nn = c.get_num() * (dlcm / c.get_den());
            mpz_gcd(ngcd.get_mpz_t(), ngcd.get_mpz_t(), nn.get_mpz_t());
        }
        if (ngcd != 0) {
            BigRat cont(ngcd, dlcm);
            cont.canonicalize();
            if (!stripped.terms.empty() && stripped.terms[0].second < 0) cont = -cont;
            for (auto& [k, c] : stripped.terms) c /= cont;
        }
        *job.out = std::move(stripped);
    }
    return cat;
}

inline const CoverCatalog& cover_catalog() {
    static std::unique_ptr<CoverCatalog> cached;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cached) return *cached;
    std::string path = cache_dir() + "/covers-cache.json";
    std::ifstream in(path);
    if (in) {
        try {
            nlohmann::json j;
            in >> j;
            auto cat = std::make_unique<CoverCatalog>();
            cat->F0 = mpoly_from_json(j.at("F0"));
            cat->F1 = mpoly_from_json(j.at("F1"));
            cat->F2 = mpoly_from_json(j.at("F2"));
            cat->G0 = mpoly_from_json(j.at("G0"));
            cat->G1 = mpoly_from_json(j.at("G1"));
            cat->G2 = mpoly_from_json(j.at("G2"));
            if (cat->F0.term_count() > 0 && cat->G2.term_count() > 0) {
                cached = std::move(cat);
                return *cached;
            }
        } catch (const std::exception&) {
        }
    }
    cached = std::make_unique<CoverCatalog>(build_cover_catalog_nocache());
    nlohmann::json j{{"F0", mpoly_to_json(cached->F0)}, {"F1", mpoly_to_json(cached->F1)},
                     {"F2", mpoly_to_json(cached->F2)}, {"G0", mpoly_to_json(cached->G0)},
                     {"G1", mpoly_to_json(cached->G1)}, {"G2", mpoly_to_json(cached->G2)}};
    std::ofstream out(path);
    if (out) out << j;
    return *cached;
}

// --- specialization ----------------------------------------------------------

inline bool squarefree_over_q(const Poly<BigRat>& f) {
    if (f.deg() < 1) return false;
    return discriminant(f) != 0;
}

// m(t, x) as a monic rational polynomial; cusp parameters rejected
inline Poly<BigRat> mm_eval(const BigRat& t) {
    if (t == 0 || t == 1) throw std::domain_error("cusp parameter");
    return covers_data::mm_poly().specialize_to(1, {t, BigRat(0)});
}

inline Poly<BigRat> f28_eval(const BigRat& t) {
    return covers_data::f28_poly().specialize_to(1, {t, BigRat(0)});
}
inline Poly<BigRat> f36_eval(const BigRat& t) {
    return covers_data::f36_poly().specialize_to(1, {t, BigRat(0)});
}

// primitive integer specialization of a named cover
inline Poly<BigRat> specialize_cover(const std::string& name, const std::vector<BigRat>& point) {
    Poly<BigRat> out((BigRat(0)));
    if (name == "F0" || name == "F1" || name == "F2") {
        const auto& cat = cover_catalog();
        const MPoly& F = name == "F0" ? cat.F0 : name == "F1" ? cat.F1 : cat.F2;
        out = F.specialize_to(2, {point.at(0), point.at(1), BigRat(0)});
    } else if (name == "S0" || name == "S1" || name == "S2") {
        SFamily fam = name == "S0" ? SFamily::S0 : name == "S1" ? SFamily::S1 : SFamily::S2;
        out = s_family_eval(fam, point.at(0), point.at(1));
    } else if (name == "MM") {
        out = mm_eval(point.at(0));
    } else if (name == "f28") {
        out = f28_eval(point.at(0));
    } else if (name == "f36") {
        out = f36_eval(point.at(0));
    } else {
        throw std::invalid_argument("unknown cover " + name);
    }
    if (name == "f36") {
        if (out.deg() != 36) throw std::domain_error("degenerate specialization: degree != 36");
    } else if (out.deg() != 28) {
        throw std::domain_error("degenerate specialization: degree != 28");
    }
    Poly<BigRat> prim = clear_to_primitive(out);
    if (name != "f36" && !squarefree_over_q(prim)) throw std::domain_error("degenerate specialization: not squarefree");
    return prim;
}

// --- quotient maps -----------------------------------------------------------

inline std::pair<BigRat, BigRat> quotient_map_eval(const std::string& name, const BigRat& x, const BigRat& y) {
    const covers_data::PlaneMap* m = nullptr;
    if (name == "sigma1") m = &covers_data::sigma1_map();
    else if (name == "sigma2") m = &covers_data::sigma2_map();
    else if (name == "st1") m = &covers_data::st1_map();
    else if (name == "st2") m = &covers_data::st2_map();
    else if (name == "ab") m = &covers_data::ab_map();
    else throw std::invalid_argument("unknown quotient map " + name);
    std::vector<BigRat> pt{x, y};
    return {m->first.eval(pt), m->second.eval(pt)};
}

// Generic fiber cardinality of the degree-3 quotient maps, computed mod p:
// eliminate v from the two fiber equations by a resultant; target-independent
// extraneous factors are removed with a reference resultant at a second
// target, and the remaining u-degree is the geometric fiber count.
inline int map_generic_fiber_count_modp(const std::string& name, uint64_t p, SplitMix64& rng) {
    const covers_data::PlaneMap& m = name == "sigma2" ? covers_data::sigma2_map() : covers_data::sigma1_map();
    FqField F(static_cast<int64_t>(p), 1);
    FFElem z(F, 0);
    using PU = Poly<FFElem>;
    using PV = Poly<PU>;
    // split an MPoly in (u,v) into a polynomial in v with F_p[u] coefficients
    auto split = [&](const MPoly& f) {
        std::vector<PU> rows(f.degree_in(1) + 1, PU(z));
        for (const auto& [k, c] : f.terms) {
            auto& row = rows[k.get(1)];
            size_t e = static_cast<size_t>(k.get(0));
            if (row.c.size() <= e) row.c.resize(e + 1, z);
            row.c[e] = row.c[e] + FFElem::from_rat(F, c);
        }
        for (auto& row : rows) row.normalize();
        return PV(PU(z), std::move(rows));
    };
    auto fiber_resultant = [&](uint64_t a0, uint64_t b0) {
        // first coordinate: n1 - a0 d1 = 0; second: n2 - b0 d2 = 0
        PV e1 = split(m.first.num) - split(m.first.den) * PU::constant(FFElem(F, static_cast<int64_t>(a0)));
        PV e2 = split(m.second.num) - split(m.second.den) * PU::constant(FFElem(F, static_cast<int64_t>(b0)));
        return resultant(e1, e2); // element of F_p[u]
    };
    auto image_of = [&](uint64_t su, uint64_t sv) {
        return std::make_pair(m.first.eval_mod({su, sv}, p), m.second.eval_mod({su, sv}, p));
    };
    // reference resultant at one generic target, test resultants at others
    uint64_t ra = 0, rb = 0;
    for (;;) {
        try {
            std::tie(ra, rb) = image_of(1 + rng.below(p - 1), 1 + rng.below(p - 1));
            break;
        } catch (const std::domain_error&) {
        }
    }
    PU ref = fiber_resultant(ra, rb);
    for (;;) {
        uint64_t ta, tb;
        try {
            std::tie(ta, tb) = image_of(1 + rng.below(p - 1), 1 + rng.below(p - 1));
        } catch (const std::domain_error&) {
            continue;
        }
        if (ta == ra && tb == rb) continue;
        PU res = fiber_resultant(ta, tb);
        if (res.is_zero() || ref.is_zero()) continue;
        PU content = gcd_poly(res, ref);
        return res.deg() - content.deg();
    }
}

// --- randomized multi-prime identity suite -----------------------------------

namespace detail {

inline std::array<uint64_t, 7> s0_params_mod(uint64_t u, uint64_t v, uint64_t p) {
    auto sub = [p](uint64_t a, uint64_t b) { return (a + p - b % p) % p; };
    uint64_t m = mulmod_u64(u, sub((v + p - 1) % p, u), p); // u(-u+v-1)
    return {1 % p, sub((u + 1) % p, v), sub(0, mulmod_u64(3 % p, u, p)), 0, m, m,
            sub(0, mulmod_u64(u, u, p))};
}

inline std::array<uint64_t, 7> mms_params_mod(uint64_t t, uint64_t p) {
    auto neg = [p](uint64_t a) { return (p - a % p) % p; };
    uint64_t t2 = mulmod_u64(t, t, p), t3 = mulmod_u64(t2, t, p);
    uint64_t t4 = mulmod_u64(t3, t, p), t5 = mulmod_u64(t4, t, p);
    return {0,
            neg(mulmod_u64(27 % p, t2, p)),
            neg(mulmod_u64(81 % p, t2, p)),
            mulmod_u64(243 % p, t3, p),
            mulmod_u64(243 % p, t3, p),
            neg(mulmod_u64(729 % p, t4, p)),
            mulmod_u64(729 % p, t5, p)};
}

// coefficients of G1 (cubic) and G2 (quartic) in b at a fixed z, mod p
inline void shioda_g1g2_at(const std::array<uint64_t, 7>& r, uint64_t z, uint64_t p,
                           std::array<uint64_t, 4>& g1, std::array<uint64_t, 5>& g2) {
    auto mm = [p](uint64_t a, uint64_t b) { return mulmod_u64(a, b, p); };
    auto sub = [p](uint64_t a, uint64_t b) { return (a + p - b % p) % p; };
    uint64_t u1 = (z + r[0]) % p;
    uint64_t z2 = mm(z, z), z3 = mm(z2, z);
    uint64_t p0 = (z3 + r[1]) % p;
    uint64_t q1 = mm(3 % p, z2), q0 = (mm(r[2], z) + r[3]) % p;
    uint64_t u1sq = mm(u1, u1), u1cu = mm(u1sq, u1);
    g1[3] = p - 1;
    g1[2] = sub(mm(4 % p, mm(u1, q1)), (mm(3 % p, p0) + mm(mm(8 % p, u1sq), mm(3 % p, z))) % p);
    g1[1] = sub(mm(4 % p, mm(u1, (q0 + mm(p0, q1)) % p)), (mm(3 % p, mm(p0, p0)) + mm(mm(8 % p, u1sq), r[2])) % p);
    g1[0] = sub(mm(4 % p, mm(u1, mm(p0, q0))), (mm(p0, mm(p0, p0)) + mm(mm(8 % p, u1sq), (mm(r[4], z) + r[5]) % p)) % p);
    // inner = -b^2 + i1 b + i0
    uint64_t i1 = sub(mm(4 % p, mm(u1, q1)), mm(2 % p, p0));
    uint64_t i0 = sub(mm(4 % p, mm(u1, q0)), mm(p0, p0));
    // (i2 b^2 + i1 b + i0)^2 with i2 = -1
    g2[4] = 1;
    g2[3] = sub(0, mm(2 % p, i1));
    g2[2] = (mm(i1, i1) + sub(0, mm(2 % p, i0))) % p;
    g2[1] = mm(2 % p, mm(i1, i0));
    g2[0] = mm(i0, i0);
    uint64_t c = mm(64 % p, u1cu);
    g2[3] = sub(g2[3], c);
    g2[1] = sub(g2[1], mm(c, r[4]));
    g2[0] = sub(g2[0], mm(c, r[6]));
}

// Res_b of the pair above: 7x7 Sylvester determinant mod p
inline uint64_t shioda_raw_resultant_at(const std::array<uint64_t, 7>& r, uint64_t z, uint64_t p) {
    std::array<uint64_t, 4> g1;
    std::array<uint64_t, 5> g2;
    shioda_g1g2_at(r, z, p, g1, g2);
    std::vector<std::vector<uint64_t>> M(7, std::vector<uint64_t>(7, 0));
    for (int row = 0; row < 4; ++row)
        for (int i = 0; i <= 3; ++i) M[row][row + i] = g1[3 - i];
    for (int row = 0; row < 3; ++row)
        for (int i = 0; i <= 4; ++i) M[4 + row][row + i] = g2[4 - i];
    return det_mod_p(M, p);
}

} // namespace detail

inline const std::vector<uint64_t>& identity_check_primes() {
    static const std::vector<uint64_t> primes = {1000003, 1000033, 1000037};
    return primes;
}

// Randomized checks of the composition identities. Each identity is tested at
// `trials` points over each prime > 1e6; points hitting denominators are
// resampled.
inline Report verify_thm42_identities(int trials, uint64_t seed) {
    Report rep;
    rep.title = "thm42-identities";
    const auto& pi0 = covers_data::pi0_maps();
    const auto& pi1 = covers_data::pi1_maps();
    const auto& pi2 = covers_data::pi2_maps();
    const auto& S1map = covers_data::sigma1_cover();
    const auto& S2map = covers_data::sigma2_cover();
    const auto& s1 = covers_data::sigma1_map();
    const auto& s2 = covers_data::sigma2_map();
    const auto& g6a = covers_data::blocks().at("g6a");
    const auto& g6b = covers_data::blocks().at("g6b");

    RatFunc pi0u{pi0.A, pi0.B}, pi0v{pi0.C, pi0.D};
    RatFunc pi1p{pi1.A, pi1.B}, pi1q{pi1.C, pi1.D};
    RatFunc pi2a{pi2.A, pi2.B}, pi2b{pi2.C, pi2.D};
    for (uint64_t p : identity_check_primes()) {
        SplitMix64 rng(seed ^ p);
        auto sample_xy = [&](std::vector<uint64_t>& pt) {
            pt = {1 + rng.below(p - 2), 1 + rng.below(p - 2)};
        };
        int ok_f1 = 0, ok_f2 = 0, ok_zans = 0, ok_mmxz = 0;
        for (int trial = 0; trial < trials; ++trial) {
            // figure-3 commutativity, left square (pi1 branch)
            for (;;) {
                std::vector<uint64_t> xy;
                sample_xy(xy);
                try {
                    uint64_t u = pi0u.eval_mod(xy, p);
                    uint64_t v = pi0v.eval_mod(xy, p);
                    uint64_t pp = s1.first.eval_mod({u, v}, p);
                    uint64_t qq = s1.second.eval_mod({u, v}, p);
                    uint64_t x1 = S1map.first.eval_mod(xy, p);
                    uint64_t y1 = S1map.second.eval_mod(xy, p);
                    uint64_t pp2 = pi1p.eval_mod({x1, y1}, p);
                    uint64_t qq2 = pi1q.eval_mod({x1, y1}, p);
                    if (pp == pp2 && qq == qq2) ++ok_f1;
                    break;
                } catch (const std::domain_error&) {
                }
            }
            // pi2 branch
            for (;;) {
                std::vector<uint64_t> xy;
                sample_xy(xy);
                try {
                    uint64_t u = pi0u.eval_mod(xy, p);
                    uint64_t v = pi0v.eval_mod(xy, p);
                    uint64_t aa = s2.first.eval_mod({u, v}, p);
                    uint64_t bb = s2.second.eval_mod({u, v}, p);
                    uint64_t x2 = S2map.first.eval_mod(xy, p);
                    uint64_t y2 = S2map.second.eval_mod(xy, p);
                    uint64_t aa2 = pi2a.eval_mod({x2, y2}, p);
                    uint64_t bb2 = pi2b.eval_mod({x2, y2}, p);
                    if (aa == aa2 && bb == bb2) ++ok_f2;
                    break;
                } catch (const std::domain_error&) {
                }
            }
            // zans: S0(u(x,y), v(x,y), z(x,y)) = 0 with z = (3x-1) g6b / g6a
            // (this orientation of the two coefficient sextics is the one
            // that vanishes)
            for (;;) {
                std::vector<uint64_t> xy;
                sample_xy(xy);
                try {
                    uint64_t u = pi0u.eval_mod(xy, p);
                    uint64_t v = pi0v.eval_mod(xy, p);
                    uint64_t zn = mulmod_u64((3 * xy[0] + p - 1) % p, g6b.eval_mod(xy, p), p);
                    uint64_t zd = g6a.eval_mod(xy, p);
                    if (zd == 0) continue;
                    uint64_t z = mulmod_u64(zn, invmod_u64(zd, p), p);
                    auto r = detail::s0_params_mod(u, v, p);
                    if ((z + r[0]) % p == 0) continue; // u1 = 0 is the extraneous locus
                    if (detail::shioda_raw_resultant_at(r, z, p) == 0) ++ok_zans;
                    break;
                } catch (const std::domain_error&) {
                }
            }
            // mmxz: with t = t(x), z(x) satisfies the weight-vector family
            for (;;) {
                uint64_t x = 2 + rng.below(p - 3);
                std::vector<uint64_t> tx{0, x};
                try {
                    uint64_t t = covers_data::mm_t_of_x().eval_mod(tx, p);
                    if (t == 0 || t == 1) continue;
                    uint64_t z = covers_data::mm_z_of_x().eval_mod(tx, p);
                    if (z == 0) continue; // u1 = z here (r1 = 0)
                    auto r = detail::mms_params_mod(t, p);
                    if (detail::shioda_raw_resultant_at(r, z, p) == 0) ++ok_mmxz;
                    break;
                } catch (const std::domain_error&) {
                }
            }
        }
        std::string tag = " @p=" + std::to_string(p);
        rep.add("pi1 . Sigma1 = sigma1 . pi0" + tag, ok_f1 == trials,
                std::to_string(ok_f1) + "/" + std::to_string(trials));
        rep.add("pi2 . Sigma2 = sigma2 . pi0" + tag, ok_f2 == trials,
                std::to_string(ok_f2) + "/" + std::to_string(trials));
        rep.add("S0(u(x,y), v(x,y), z(x,y)) = 0" + tag, ok_zans == trials,
                std::to_string(ok_zans) + "/" + std::to_string(trials));
        rep.add("weight-vector family vanishes at z(x) mod m(t,x)" + tag, ok_mmxz == trials,
                std::to_string(ok_mmxz) + "/" + std::to_string(trials));
    }
    // Schwartz-Zippel: identity degrees stay below 10^5 while the primes
    // exceed 10^6, so a false identity survives one trial with probability
    // at most 1/10; the suite runs 3*trials independent points per identity.
    double log2_bound = std::log2(0.1) * 3.0 * trials;
    rep.add("failure probability bound below 2^-60", log2_bound < -60,
            "2^" + std::to_string(static_cast<long>(log2_bound)));
    return rep;
}

// --- weighted family clearing -------------------------------------------------

// Given r_i(base) as rational functions over base variables, produce the
// primitive integer polynomial proportional to S(r(base), z) in
// Z[base..., z]. Uses the weighted-homogeneity scaling by lambda = lcm of the
// denominators.
inline MPoly weighted_family_expand(const std::vector<RatFunc>& images, const std::vector<std::string>& base_vars,
                                    const std::string& zvar) {
    if (images.size() != 7) throw std::invalid_argument("seven parameter images required");
    std::vector<std::string> all_vars = base_vars;
    all_vars.push_back(zvar);
    size_t nbase = base_vars.size();

    // lambda = lcm of denominators, computed in the univariate case by
    // gcd chains and in the monomial case by exponent maxima
    bool univariate = nbase == 1;
    bool monomial_dens = true;
    for (const auto& im : images) monomial_dens = monomial_dens && im.den.term_count() == 1;
    MPoly lambda = MPoly::constant(base_vars, BigRat(1));
    if (monomial_dens) {
        ExpKey k;
        BigRat unit(1);
        for (size_t v = 0; v < nbase; ++v) {
            int e = 0;
            for (const auto& im : images) e = std::max(e, im.den.terms[0].first.get(static_cast<int>(v)));
            k.set(static_cast<int>(v), e);
        }
        lambda = MPoly(base_vars);
        lambda.terms.emplace_back(k, BigRat(1));
    } else if (univariate) {
        Poly<BigRat> acc = Poly<BigRat>::constant(BigRat(1));
        for (const auto& im : images) {
            Poly<BigRat> d = im.den.specialize_to(0, {BigRat(0)}); // univariate in t
            if (d.deg() < 0) throw std::domain_error("zero denominator");
            Poly<BigRat> g = gcd_poly(acc, d);
            acc = divexact(acc * d, g); // lcm = acc*d/gcd
        }
        lambda = MPoly(base_vars);
        for (int i = 0; i <= acc.deg(); ++i) {
            if (acc.coeff(i) == 0) continue;
            ExpKey k;
            k.set(0, i);
            lambda.terms.emplace_back(k, acc.coeff(i));
        }
        std::sort(lambda.terms.begin(), lambda.terms.end(),
                  [](const auto& a, const auto& b) { return b.first < a.first; });
    } else {
        throw std::invalid_argument("unsupported denominator shape");
    }

    // scaled polynomial images lambda^{w_i} * r_i, mapped into (base..., z)
    std::vector<MPoly> master_images;
    for (int i = 0; i < 7; ++i) {
        // lambda^{w_i} * num / den must divide exactly
        MPoly scaled = lambda.pow(static_cast<unsigned>(shioda_weights()[i])) * images[i].num;
        // exact division by den: do it in the univariate/monomial world
        MPoly result(base_vars);
        if (images[i].den.term_count() == 1) {
            const auto& [dk, dc] = images[i].den.terms[0];
            for (const auto& [k, c] : scaled.terms) {
                ExpKey nk = k;
                for (size_t v = 0; v < nbase; ++v) {
                    int e = k.get(static_cast<int>(v)) - dk.get(static_cast<int>(v));
                    if (e < 0) throw std::domain_error("scaled image is not polynomial");
                    nk.set(static_cast<int>(v), e);
                }
                result.terms.emplace_back(nk, c / dc);
            }
            std::sort(result.terms.begin(), result.terms.end(),
                      [](const auto& a, const auto& b) { return b.first < a.first; });
        } else {
            // univariate exact division
            Poly<BigRat> num = scaled.specialize_to(0, {BigRat(0)});
            Poly<BigRat> den = images[i].den.specialize_to(0, {BigRat(0)});
            Poly<BigRat> quo = divexact(num, den);
            result = MPoly(base_vars);
            for (int e = 0; e <= quo.deg(); ++e) {
                if (quo.coeff(e) == 0) continue;
                ExpKey k;
                k.set(0, e);
                result.terms.emplace_back(k, quo.coeff(e));
            }
            std::sort(result.terms.begin(), result.terms.end(),
                      [](const auto& a, const auto& b) { return b.first < a.first; });
        }
        // lift into (base..., z) variable space
        MPoly lifted(all_vars);
        for (const auto& [k, c] : result.terms) lifted.terms.emplace_back(k, c);
        master_images.push_back(lifted);
    }
    MPoly zimg = MPoly::var(all_vars, zvar);
    std::vector<MPoly> subst_images = master_images;
    subst_images.push_back(zimg);
    MPoly T = shioda_master().subst(subst_images); // = lambda^28 S(r, z/lambda)

    // U = sum_k coeff_{z^k}(T) lambda^k z^k = lambda^28 S(r, z)
    MPoly lambda_lifted(all_vars);
    for (const auto& [k, c] : lambda.terms) lambda_lifted.terms.emplace_back(k, c);
    int zidx = static_cast<int>(nbase);
    MPoly U(all_vars);
    std::vector<MPoly> lambda_pows{MPoly::constant(all_vars, BigRat(1))};
    for (int k = 1; k <= 28; ++k) lambda_pows.push_back(lambda_pows.back() * lambda_lifted);
    for (int k = 0; k <= 28; ++k) {
        MPoly ck(all_vars);
        for (const auto& [key, c] : T.terms) {
            if (key.get(zidx) != k) continue;
            ck.terms.emplace_back(key, c);
        }
        std::sort(ck.terms.begin(), ck.terms.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
        U = U + ck * lambda_pows[k];
    }

    // primitive part: strip monomial content, then (univariate case) the
    // polynomial content of the z-coefficients, then the rational content
    auto strip = [&](MPoly f) {
        // monomial content
        for (size_t v = 0; v < nbase; ++v) {
            int mn = 1 << 20;
            for (const auto& [k, c] : f.terms) mn = std::min(mn, k.get(static_cast<int>(v)));
            if (mn > 0)
                for (auto& [k, c] : f.terms) k.set(static_cast<int>(v), k.get(static_cast<int>(v)) - mn);
        }
        if (univariate) {
            // gcd of z-coefficients over Q[t]
            Poly<BigRat> g = Poly<BigRat>(BigRat(0));
            for (int k = 0; k <= 28; ++k) {
                Poly<BigRat> ck((BigRat(0)));
                for (const auto& [key, c] : f.terms) {
                    if (key.get(zidx) != k) continue;
                    size_t e = static_cast<size_t>(key.get(0));
                    if (ck.c.size() <= e) ck.c.resize(e + 1, BigRat(0));
                    ck.c[e] += c;
                }
                ck.normalize();
                if (ck.is_zero()) continue;
                g = g.is_zero() ? ck : gcd_poly(g, ck);
                if (g.deg() == 0) break;
            }
            if (g.deg() > 0) {
                // divide each z-coefficient exactly
                MPoly out(all_vars);
                for (int k = 0; k <= 28; ++k) {
                    Poly<BigRat> ck((BigRat(0)));
                    for (const auto& [key, c] : f.terms) {
                        if (key.get(zidx) != k) continue;
                        size_t e = static_cast<size_t>(key.get(0));
                        if (ck.c.size() <= e) ck.c.resize(e + 1, BigRat(0));
                        ck.c[e] += c;
                    }
                    ck.normalize();
                    if (ck.is_zero()) continue;
                    Poly<BigRat> q = divexact(ck, g);
                    for (int e = 0; e <= q.deg(); ++e) {
                        if (q.coeff(e) == 0) continue;
                        ExpKey key;
                        key.set(0, e);
                        key.set(zidx, k);
                        out.terms.emplace_back(key, q.coeff(e));
                    }
                }
                std::sort(out.terms.begin(), out.terms.end(),
                          [](const auto& a, const auto& b) { return b.first < a.first; });
                f = out;
            }
        }
        // rational content
        BigInt dlcm = 1, ngcd = 0;
        for (const auto& [k, c] : f.terms)
            mpz_lcm(dlcm.get_mpz_t(), dlcm.get_mpz_t(), c.get_den().get_mpz_t());
        for (const auto& [k, c] : f.terms) {
            BigInt n = c.get_num() * (dlcm / c.get_den());
            mpz_gcd(ngcd.get_mpz_t(), ngcd.get_mpz_t(), n.get_mpz_t());
        }
        if (ngcd != 0) {
            BigRat content(ngcd, dlcm);
            content.canonicalize();
            if (!f.terms.empty() && f.terms[0].second < 0) content = -content;
            for (auto& [k, c] : f.terms) c /= content;
        }
        return f;
    };
    return strip(U);
}

// --- per-family symbolic expansions and the one-parameter specializations ----

inline MPoly s_family_symbolic(SFamily fam) {
    auto C = [](const std::vector<std::string>& vars, const std::string& s) {
        return RatFunc::poly(MPoly::parse(vars, s));
    };
    if (fam == SFamily::S0) {
        std::vector<std::string> vars{"u", "v"};
        return weighted_family_expand({C(vars, "1"), C(vars, "u - v + 1"), C(vars, "-3*u"), C(vars, "0"),
                                       C(vars, "u*(-u + v - 1)"), C(vars, "u*(-u + v - 1)"), C(vars, "-u^2")},
                                      vars, "z");
    }
    if (fam == SFamily::S1) {
        std::vector<std::string> vars{"p", "q"};
        std::string d = "(p^2*q^2 - 6*p*q + 4*p + 4*q - 3)";
        return weighted_family_expand(
            {C(vars, "0"), C(vars, d + "^2*p"), C(vars, "3*" + d + "^2*p^2*(q - 1)"),
             C(vars, "3*" + d + "^3*p^2"), C(vars, "-" + d + "^3*p^2*(3*p^2*q^2 - 9*p*q + 4*q + 2*p)"),
             C(vars, "-3*" + d + "^4*p^3*(q - 1)"), C(vars, d + "^5*p^4*(2*p*q^2 - 3*q + 1)")},
            vars, "z");
    }
    // S2: A = 256/a, B = (b-1)/8
    std::vector<std::string> vars{"a", "b"};
    MPoly a = MPoly::var(vars, "a");
    auto A = RatFunc{MPoly::constant(vars, BigRat(256)), a};
    auto B = RatFunc::poly(MPoly::parse(vars, "b - 1") * BigRat(1, 8));
    auto Cst = [&](long v) { return RatFunc::poly(MPoly::constant(vars, BigRat(v))); };
    auto A2 = A * A, B2 = B * B, B3 = B2 * B, B4 = B3 * B;
    std::vector<RatFunc> images{
        Cst(1),
        (A * B2 + Cst(2)) * Cst(3),
        (A * B2 * Cst(8) + A * B + Cst(1)) * Cst(-3),
        (A * B2 * Cst(5) + A * B + Cst(-4)) * Cst(-3),
        A2 * B4 * Cst(-8) - A2 * B3 - A * B2 * Cst(184) - A * B * Cst(31) - A - Cst(2),
        A2 * B4 * Cst(-56) - A2 * B3 * Cst(7) - A * B2 * Cst(199) - A * B * Cst(58) - A * Cst(4) + Cst(10),
        A2 * B4 * Cst(-440) - A2 * B3 * Cst(103) - A2 * B2 * Cst(6) - A * B2 * Cst(693) - A * B * Cst(183)
            - A * Cst(12) + Cst(3)};
    return weighted_family_expand(images, vars, "z");
}

// one-parameter specialization along a named base curve
inline MPoly three_point_family(const std::string& curve_name, SFamily fam) {
    const covers_data::ParamCurve& curve = covers_data::param_curve(curve_name);
    if ((fam == SFamily::S1 && curve.plane != "pq") || (fam == SFamily::S2 && curve.plane != "ab"))
        throw std::invalid_argument("curve targets the wrong base plane");
    std::vector<std::string> tv{"t"};
    auto Cst = [&](const BigRat& v) { return RatFunc::poly(MPoly::constant(tv, v)); };
    RatFunc X = curve.first, Y = curve.second;
    std::vector<RatFunc> images;
    if (fam == SFamily::S1) {
        RatFunc d = X * X * Y * Y - X * Y * Cst(BigRat(6)) + X * Cst(BigRat(4)) + Y * Cst(BigRat(4)) - Cst(BigRat(3));
        RatFunc d2 = d * d, d3 = d2 * d, d4 = d3 * d, d5 = d4 * d;
        RatFunc p2 = X * X, p3 = p2 * X, p4 = p3 * X;
        images = {Cst(BigRat(0)),
                  d2 * X,
                  d2 * p2 * (Y - Cst(BigRat(1))) * Cst(BigRat(3)),
                  d3 * p2 * Cst(BigRat(3)),
                  d3 * p2 * (p2 * Y * Y * Cst(BigRat(3)) - X * Y * Cst(BigRat(9)) + Y * Cst(BigRat(4)) + X * Cst(BigRat(2))) * Cst(BigRat(-1)),
                  d4 * p3 * (Y - Cst(BigRat(1))) * Cst(BigRat(-3)),
                  d5 * p4 * (X * Y * Y * Cst(BigRat(2)) - Y * Cst(BigRat(3)) + Cst(BigRat(1)))};
    } else if (fam == SFamily::S2) {
        RatFunc A = Cst(BigRat(256)) / X;
        RatFunc B = (Y - Cst(BigRat(1))) * Cst(BigRat(1, 8));
        RatFunc A2 = A * A, B2 = B * B, B3 = B2 * B, B4 = B3 * B;
        images = {Cst(BigRat(1)),
                  (A * B2 + Cst(BigRat(2))) * Cst(BigRat(3)),
                  (A * B2 * Cst(BigRat(8)) + A * B + Cst(BigRat(1))) * Cst(BigRat(-3)),
                  (A * B2 * Cst(BigRat(5)) + A * B - Cst(BigRat(4))) * Cst(BigRat(-3)),
                  A2 * B4 * Cst(BigRat(-8)) - A2 * B3 - A * B2 * Cst(BigRat(184)) - A * B * Cst(BigRat(31)) - A - Cst(BigRat(2)),
                  A2 * B4 * Cst(BigRat(-56)) - A2 * B3 * Cst(BigRat(7)) - A * B2 * Cst(BigRat(199)) - A * B * Cst(BigRat(58)) - A * Cst(BigRat(4)) + Cst(BigRat(10)),
                  A2 * B4 * Cst(BigRat(-440)) - A2 * B3 * Cst(BigRat(103)) - A2 * B2 * Cst(BigRat(6)) - A * B2 * Cst(BigRat(693)) - A * B * Cst(BigRat(183)) - A * Cst(BigRat(12)) + Cst(BigRat(3))};
    } else {
        throw std::invalid_argument("three-point specialization targets S1 or S2");
    }
    return weighted_family_expand(images, tv, "z");
}

// the weight-vector family of m(t,x), expanded in Z[t,z]
inline MPoly mms_family_symbolic() {
    std::vector<std::string> tv{"t"};
    auto P = [&](const std::string& s) { return RatFunc::poly(MPoly::parse(tv, s)); };
    return weighted_family_expand({P("0"), P("-27*t^2"), P("-81*t^2"), P("243*t^3"), P("243*t^3"),
                                   P("-729*t^4"), P("729*t^5")},
                                  tv, "z");
}

// --- discriminant utilities ----------------------------------------------------

struct SmoothVerdict {
    bool smooth = false;
    int e2 = 0, e3 = 0;
    BigInt leftover; // absolute value of the prime-to-{2,3} part
};

inline SmoothVerdict smooth_disc_screen(const Poly<BigRat>& f) {
    Poly<BigRat> prim = clear_to_primitive(f);
    BigRat disc = discriminant(prim);
    if (disc == 0) throw std::domain_error("inseparable polynomial");
    if (disc.get_den() != 1) throw std::runtime_error("non-integral discriminant of an integer polynomial");
    BigInt d = disc.get_num();
    SmoothVerdict v;
    BigInt rest = d < 0 ? BigInt(-d) : d;
    v.e2 = strip_factor(rest, 2);
    v.e3 = strip_factor(rest, 3);
    v.leftover = rest;
    v.smooth = rest == 1;
    return v;
}

// m(1,x) is a cusp value for specialization but fine as a polynomial
inline Poly<BigRat> mm_eval_at_one() {
    return covers_data::mm_poly().specialize_to(1, {BigRat(1), BigRat(0)});
}

inline Report verify_mm_discriminant(const std::vector<BigRat>& tvals) {
    Report rep;
    rep.title = "mm-discriminant";
    for (const auto& t : tvals) {
        Poly<BigRat> m = mm_eval(t);
        BigRat disc = discriminant(m);
        BigRat expect = pow_rat(BigRat(2), 576) * pow_rat(BigRat(3), 630) * pow_rat(t, 18) * pow_rat(t - 1, 12);
        bool square = is_perfect_square(disc.get_num()) && is_perfect_square(disc.get_den());
        rep.add("disc m(" + rat_to_string(t) + ",x) matches 2^576 3^630 t^18 (t-1)^12", disc == expect);
        rep.add("disc m(" + rat_to_string(t) + ",x) is a perfect square", square);
    }
    // root multiplicities of m(1,x): 2^12 1^4
    Poly<BigRat> m1 = mm_eval_at_one();
    rep.add("multiplicities of m(1,x) = 2^12 1^4",
            multiplicity_partition_q(m1) == CyclePartition::parse("2^12 1^4"));
    // numerator multiplicities 4^6 1^4
    Poly<BigRat> num = covers_data::mm_A().pow(4).specialize_to(1, {BigRat(0), BigRat(0)})
                       * covers_data::mm_B().specialize_to(1, {BigRat(0), BigRat(0)});
    rep.add("multiplicities of the numerator = 4^6 1^4",
            multiplicity_partition_q(num) == CyclePartition::parse("4^6 1^4"));
    return rep;
}

// The discriminant of S0(u,v,z) is 2^216 3^108 u^42 v^24 Delta(u,v)^2 times a
// perfect square; verified exactly at sampled rational points.
inline Report verify_s0_discriminant(const std::vector<std::pair<BigRat, BigRat>>& points) {
    Report rep;
    rep.title = "s0-discriminant";
    for (const auto& [u, v] : points) {
        std::string tag = "(" + rat_to_string(u) + "," + rat_to_string(v) + ")";
        if (u == 0 || v == 0) {
            rep.add("degenerate point " + tag + " rejected", true);
            continue;
        }
        Poly<BigRat> S = shioda_eval(s0_params(u, v));
        BigRat disc = discriminant(S);
        std::vector<BigRat> pt{u, v};
        BigRat delta = covers_data::delta_uv().eval(pt);
        BigRat factor = pow_rat(BigRat(2), 216) * pow_rat(BigRat(3), 108) * pow_rat(u, 42) * pow_rat(v, 24)
                        * pow_rat(delta, 2);
        BigRat residual = disc / factor;
        bool square = is_perfect_square(residual.get_num()) && is_perfect_square(residual.get_den());
        rep.add("disc S0 at " + tag + " = recorded factor times a square", square);
    }
    return rep;
}

// --- factorization partitions of integer polynomials ---------------------------

// good-prime test + degree partition of a primitive integer polynomial mod p
inline std::optional<CyclePartition> partition_mod_p(const Poly<BigRat>& prim, int64_t p) {
    FqField F(p, 1);
    PolyF fp = poly_mod_p(prim, F);
    if (fp.deg() != prim.deg()) return std::nullopt; // leading coefficient dies
    return factor_partition(fp);
}

// Frobenius fingerprint: partitions at every good prime in [5, bound]
inline std::vector<std::pair<int64_t, CyclePartition>> frobenius_fingerprint(const Poly<BigRat>& prim,
                                                                             int64_t bound) {
    std::vector<std::pair<int64_t, CyclePartition>> out;
    for (uint64_t p : primes_in_range(5, static_cast<uint64_t>(bound))) {
        auto part = partition_mod_p(prim, static_cast<int64_t>(p));
        if (part) out.emplace_back(static_cast<int64_t>(p), *part);
    }
    return out;
}

inline Report verify_mm_recovery(const std::vector<BigRat>& tvals) {
    Report rep;
    rep.title = "mm-recovery";
    for (const auto& t : tvals) {
        if (t == 0 || t == 1 || t == -3) {
            rep.add("t = " + rat_to_string(t) + " rejected as degenerate", true);
            continue;
        }
        BigRat u = pow_rat(2 * t - 1, 4) / (16 * (t - 1) * t);
        Poly<BigRat> lhs = clear_to_primitive(mm_eval(u));
        BigRat pp = 16 * t / pow_rat(t + 3, 2), qq = (t + 3) / 4;
        Poly<BigRat> rhs = clear_to_primitive(shioda_eval(s1_params(pp, qq)));
        int agree = 0, total = 0;
        for (uint64_t p : primes_in_range(5, 200)) {
            auto a = partition_mod_p(lhs, static_cast<int64_t>(p));
            auto b = partition_mod_p(rhs, static_cast<int64_t>(p));
            if (!a || !b) continue; // bad prime for one side
            ++total;
            if (*a == *b) ++agree;
        }
        rep.add("partitions of m(u(t),x) and S1-spec agree at t = " + rat_to_string(t),
                total > 10 && agree == total,
                std::to_string(agree) + "/" + std::to_string(total) + " good primes");
    }
    return rep;
}

// The weight-vector family S(0, -27t^2, -81t^2, 243t^3, 243t^3, -729t^4,
// 729t^5, z) defines the same covers as m(t,x): their factorization
// partitions agree at every good prime.
inline ShiodaParams<BigRat> mms_params(const BigRat& t) {
    BigRat t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    return {BigRat(0), -27 * t2, -81 * t2, 243 * t3, 243 * t3, -729 * t4, 729 * t5};
}

inline Report verify_mm_shioda(const std::vector<BigRat>& tvals) {
    Report rep;
    rep.title = "mm-weight-vector";
    for (const auto& t : tvals) {
        if (t == 0 || t == 1) {
            rep.add("t = " + rat_to_string(t) + " rejected as a cusp", true);
            continue;
        }
        Poly<BigRat> lhs = clear_to_primitive(shioda_eval(mms_params(t)));
        Poly<BigRat> rhs = clear_to_primitive(mm_eval(t));
        int agree = 0, total = 0;
        for (uint64_t p : primes_in_range(5, 200)) {
            auto a = partition_mod_p(lhs, static_cast<int64_t>(p));
            auto b = partition_mod_p(rhs, static_cast<int64_t>(p));
            if (!a || !b) continue;
            ++total;
            if (*a == *b) ++agree;
        }
        rep.add("partitions agree at t = " + rat_to_string(t), total > 20 && agree == total,
                std::to_string(agree) + "/" + std::to_string(total) + " good primes");
    }
    return rep;
}

// --- PGL2(7) on the 28 unordered pairs of P^1(F_7) -----------------------------

inline const std::vector<CyclePartition>& pgl27_lambda28_set() {
    static const std::vector<CyclePartition> out = [] {
        // points of P^1(F_7): 0..6 and infinity = 7
        auto act = [](int a, int b, int c, int d, int x) -> int {
            if (x == 7) return c == 0 ? 7 : ((a * invmod_u64(c, 7)) % 7);
            int num = (a * x + b) % 7, den = (c * x + d) % 7;
            if (den == 0) return 7;
            return (num * static_cast<int>(invmod_u64(den, 7))) % 7;
        };
        // pair indexing
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) pairs.emplace_back(i, j);
        auto pair_index = [&](int i, int j) {
            if (i > j) std::swap(i, j);
            for (size_t k = 0; k < pairs.size(); ++k)
                if (pairs[k] == std::make_pair(i, j)) return static_cast<int>(k);
            throw std::logic_error("pair index");
        };
        std::set<std::array<uint8_t, 28>> seen;
        std::vector<CyclePartition> types;
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b)
                for (int c = 0; c < 7; ++c)
                    for (int d = 0; d < 7; ++d) {
                        if ((a * d - b * c) % 7 == 0) continue;
                        Perm28 perm;
                        for (size_t k = 0; k < pairs.size(); ++k) {
                            int i2 = act(a, b, c, d, pairs[k].first);
                            int j2 = act(a, b, c, d, pairs[k].second);
                            perm.img[k] = static_cast<uint8_t>(pair_index(i2, j2));
                        }
                        if (!seen.insert(perm.img).second) continue;
                        CyclePartition ct = perm.cycle_type();
                        if (std::find(types.begin(), types.end(), ct) == types.end()) types.push_back(ct);
                    }
        if (seen.size() != 336) throw std::runtime_error("PGL2(7) enumeration failed");
        return types;
    }();
    return out;
}

} // namespace dcl
