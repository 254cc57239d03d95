#pragma once

// The degree-28 resolvent of the bitangent system of the quartic
//   y^2 = x^3 + (w^3 + r4 w + r6) x + (r1 w^4 + r3 w^3 + r5 w^2 + r7 w + r9).
// Substituting x = z w + b, y = c w^2 + d w + e and equating coefficients
// gives five equations; clearing c (with c^2 = u1 = z + r1), d = P/(2c),
// e = (4 u1 Q - P^2)/(8 c^3) leaves the pair
//   G1 = 4 u1 P Q - P^3 - 8 u1^2 R      (cubic in b),
//   G2 = (4 u1 Q - P^2)^2 - 64 u1^3 Sc  (monic quartic in b),
// whose b-resultant is the degree-28 polynomial S(r, z) times a power of
// (z + r1). The sign pairing (z,b,c,d,e) -> (z,b,-c,-d,-e) matches the 56
// solutions onto the 28 roots.

#include <array>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "dcl/factorization.hpp"
#include "dcl/json_io.hpp"
#include "dcl/mpoly.hpp"
#include "dcl/numeric.hpp"
#include "dcl/resultant.hpp"
#include "dcl/table1.hpp"

namespace dcl {

template <class K>
using ShiodaParams = std::array<K, 7>; // (r1, r3, r4, r5, r6, r7, r9)

inline const std::array<int, 7>& shioda_weights() {
    static const std::array<int, 7> w{1, 3, 4, 5, 6, 7, 9};
    return w;
}

template <class K>
struct BitangentSystem {
    Poly<Poly<K>> G1, G2; // in b, coefficients in K[z]
};

template <class K>
BitangentSystem<K> bitangent_system(const ShiodaParams<K>& r) {
    K k0 = kzero(r[0]);
    using PZ = Poly<K>;
    using PB = Poly<PZ>;
    PZ z = PZ::x(k0);
    auto zc = [&](const K& v) { return PZ::constant(v); };
    PZ u1 = z + zc(r[0]);
    PZ p0 = z.pow(3) + zc(r[1]);          // P = b + p0
    PZ q1 = z * z * kfrom_int(k0, 3);     // Q = q1 b + q0
    PZ q0 = z * r[2] + zc(r[3]);
    PZ r2c = z * kfrom_int(k0, 3);        // R = r2c b^2 + r1c b + r0c
    PZ r1c = zc(r[2]);
    PZ r0c = z * r[4] + zc(r[5]);
    // Sc = b^3 + s1 b + s0
    PZ s1 = zc(r[4]);
    PZ s0 = zc(r[6]);

    PZ zzero(k0);
    auto B = [&](std::vector<PZ> coeffs) { return PB(zzero, std::move(coeffs)); };
    PB P = B({p0, kone(zzero)});
    PB Q = B({q0, q1});
    PB R = B({r0c, r1c, r2c});
    PB Sc = B({s0, s1, zzero, kone(zzero)});
    PB U1 = PB::constant(u1);
    PB four_u1 = PB::constant(u1 * kfrom_int(k0, 4));

    BitangentSystem<K> sys{PB(zzero), PB(zzero)};
    sys.G1 = four_u1 * P * Q - P * P * P - U1 * U1 * R * kfrom_int(zzero, 8);
    PB inner = four_u1 * Q - P * P;
    sys.G2 = inner * inner - U1 * U1 * U1 * Sc * kfrom_int(zzero, 64);
    return sys;
}

// Monic degree-28 resolvent; throws on non-generic parameters.
//
// The raw b-resultant has z-degree 36 with constant leading coefficient
// 2^12 = 4096; the extraneous factor is exactly (z + r1)^8 (determined once
// by exact divisibility and then pinned by the degree count, since S itself
// may vanish at z = -r1).
template <class K>
Poly<K> shioda_eval(const ShiodaParams<K>& r) {
    auto sys = bitangent_system(r);
    Poly<K> res = resultant(sys.G1, sys.G2); // element of K[z]
    if (res.is_zero()) throw std::domain_error("non-generic parameters: vanishing resultant");
    if (res.deg() != 36) throw std::domain_error("non-generic parameters: raw resultant degree != 36");
    K k0 = kzero(r[0]);
    Poly<K> lin(k0, {r[0], kone(k0)});
    for (int i = 0; i < 8; ++i) {
        auto [q, rem] = divrem(res, lin);
        if (!rem.is_zero()) throw std::domain_error("non-generic parameters: extraneous factor mismatch");
        res = q;
    }
    if (res.deg() != 28) throw std::domain_error("non-generic parameters: degree != 28");
    return monic(res);
}

template <class K>
ShiodaParams<K> shioda_scale(const ShiodaParams<K>& r, const K& lambda) {
    ShiodaParams<K> out;
    for (int i = 0; i < 7; ++i) {
        K f = kone(lambda);
        for (int j = 0; j < shioda_weights()[i]; ++j) f = f * lambda;
        out[i] = r[i] * f;
    }
    return out;
}

// --- brute-force mod-p solution set ---------------------------------------

struct ShiodaBruteForce {
    std::vector<std::pair<uint64_t, int>> z_projection; // (z, fiber count), u1 != 0 only
    long solution_count = 0;
};

inline ShiodaBruteForce shioda_bruteforce_modp(const std::array<uint64_t, 7>& r, uint64_t p) {
    ShiodaBruteForce out;
    auto mm = [p](uint64_t a, uint64_t b) { return mulmod_u64(a, b, p); };
    auto add = [p](uint64_t a, uint64_t b) { return (a + b) % p; };
    auto sub = [p](uint64_t a, uint64_t b) { return (a + p - b % p) % p; };
    for (uint64_t z = 0; z < p; ++z) {
        uint64_t u1 = add(z, r[0]);
        if (u1 == 0) continue;
        uint64_t z2 = mm(z, z), z3 = mm(z2, z);
        uint64_t p0 = add(z3, r[1]);
        uint64_t q1 = mm(3 % p, z2), q0 = add(mm(r[2], z), r[3]);
        // G1 = 4 u1 (b+p0)(q1 b + q0) - (b+p0)^3 - 8 u1^2 (3 z b^2 + r4 b + r6 z + r7)
        uint64_t u1sq = mm(u1, u1);
        uint64_t c3 = sub(0, 1);                                    // -b^3
        uint64_t c2 = sub(mm(4, mm(u1, q1)), add(mm(3, p0), mm(mm(8, u1sq), mm(3, z))));
        uint64_t c1 = sub(add(mm(4, mm(u1, add(q0, mm(p0, q1)))), 0),
                          add(mm(3, mm(p0, p0)), mm(mm(8, u1sq), r[2])));
        uint64_t c0 = sub(mm(4, mm(u1, mm(p0, q0))),
                          add(mm(p0, mm(p0, p0)), mm(mm(8, u1sq), add(mm(r[4], z), r[5]))));
        // G2 = (4 u1 (q1 b + q0) - (b+p0)^2)^2 - 64 u1^3 (b^3 + r6 b + r9)
        uint64_t u1cu = mm(u1sq, u1);
        // inner = -b^2 + (4 u1 q1 - 2 p0) b + (4 u1 q0 - p0^2)
        uint64_t i1 = sub(mm(4, mm(u1, q1)), mm(2, p0));
        uint64_t i0 = sub(mm(4, mm(u1, q0)), mm(p0, p0));
        for (uint64_t b = 0; b < p; ++b) {
            uint64_t g1 = add(add(mm(c3, mm(b, mm(b, b))), mm(c2, mm(b, b))), add(mm(c1, b), c0));
            if (g1 != 0) continue;
            uint64_t inner = add(sub(add(mm(i1, b), i0), mm(b, b)), 0);
            uint64_t g2 = sub(mm(inner, inner), mm(mm(64, u1cu), add(mm(b, mm(b, b)), add(mm(r[4], b), r[6]))));
            if (g2 != 0) continue;
            ++out.solution_count;
            bool found = false;
            for (auto& [zz, cnt] : out.z_projection)
                if (zz == z) { ++cnt, found = true; break; }
            if (!found) out.z_projection.emplace_back(z, 1);
        }
    }
    return out;
}

// number of lifts (c,d,e) in F_p of a surviving (z,b): 0 or 2 by the
// quadratic character of u1
inline int shioda_lift_count(const std::array<uint64_t, 7>& r, uint64_t z, uint64_t b, uint64_t p) {
    auto mm = [p](uint64_t x, uint64_t y) { return mulmod_u64(x, y, p); };
    uint64_t u1 = (z + r[0]) % p;
    if (u1 == 0) return 0;
    uint64_t z2 = mm(z, z), z3 = mm(z2, z);
    uint64_t P = (z3 + r[1] + b) % p;
    uint64_t Q = (mm(3 % p, mm(z2, b)) + mm(r[2], z) + r[3]) % p;
    uint64_t R = (mm(3 % p, mm(z, mm(b, b))) + mm(r[2], b) + mm(r[4], z) + r[5]) % p;
    uint64_t Sc = (mm(b, mm(b, b)) + mm(r[4], b) + r[6]) % p;
    int lifts = 0;
    for (uint64_t c = 1; c < p; ++c) {
        if (mm(c, c) != u1) continue;
        // d = P/(2c), e = (4 u1 Q - P^2) / (8 c^3); the remaining equations
        // are verified outright
        uint64_t d = mm(P, invmod_u64(2 * c % p, p));
        uint64_t num = (4 * mm(u1, Q) % p + p - mm(P, P)) % p;
        uint64_t e = mm(num, invmod_u64(mm(8 % p, mm(c, mm(c, c))), p));
        bool ok = (mm(d, d) + 2 * mm(c, e)) % p == Q && (2 * mm(d, e)) % p == R && mm(e, e) == Sc;
        if (ok) ++lifts;
    }
    return lifts;
}

// --- symbolic expansion by weighted-homogeneous interpolation --------------

namespace detail {

inline void enum_weighted_monomials(int target, int pos, std::array<int, 7>& cur,
                                    std::vector<std::array<int, 7>>& out) {
    if (pos == 7) {
        if (target == 0) out.push_back(cur);
        return;
    }
    int w = shioda_weights()[pos];
    for (int e = 0; e * w <= target; ++e) {
        cur[pos] = e;
        enum_weighted_monomials(target - e * w, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

inline std::vector<std::array<int, 7>> weighted_monomials(int k) {
    std::vector<std::array<int, 7>> out;
    std::array<int, 7> cur{};
    enum_weighted_monomials(k, 0, cur, out);
    return out;
}

// Solve the (possibly overdetermined) system M x = y over F_p; returns empty
// on rank deficiency or inconsistency.
inline std::vector<uint64_t> solve_mod_p(std::vector<std::vector<uint64_t>> M, std::vector<uint64_t> y,
                                         size_t ncols, uint64_t p) {
    size_t nrows = M.size();
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t piv = row;
        while (piv < nrows && M[piv][col] == 0) ++piv;
        if (piv == nrows) return {}; // rank deficient
        std::swap(M[piv], M[row]);
        std::swap(y[piv], y[row]);
        uint64_t inv = invmod_u64(M[row][col], p);
        for (size_t c = col; c < ncols; ++c) M[row][c] = mulmod_u64(M[row][c], inv, p);
        y[row] = mulmod_u64(y[row], inv, p);
        for (size_t r2 = 0; r2 < nrows; ++r2) {
            if (r2 == row || M[r2][col] == 0) continue;
            uint64_t f = M[r2][col];
            for (size_t c = col; c < ncols; ++c)
                M[r2][c] = (M[r2][c] + p - mulmod_u64(f, M[row][c], p)) % p;
            y[r2] = (y[r2] + p - mulmod_u64(f, y[row], p)) % p;
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() != ncols) return {};
    for (size_t r2 = row; r2 < nrows; ++r2)
        if (y[r2] != 0) return {}; // inconsistent
    std::vector<uint64_t> x(ncols);
    for (size_t i = 0; i < ncols; ++i) x[i] = y[i];
    return x;
}

} // namespace detail

inline const std::vector<std::string>& shioda_vars() {
    static const std::vector<std::string> v{"r1", "r3", "r4", "r5", "r6", "r7", "r9", "z"};
    return v;
}

// Reconstruct S(r, z) in Z[r1,...,r9, z]: the coefficient of z^{28-k} is
// weighted-homogeneous of weight k, so each one is interpolated in its
// monomial basis from exact evaluations of shioda_eval.
inline MPoly shioda_expand_symbolic_nocache() {
    // evaluation pool: deterministic small nonzero integers
    size_t max_monomials = 0;
    std::vector<std::vector<std::array<int, 7>>> bases(29);
    for (int k = 0; k <= 28; ++k) {
        bases[k] = detail::weighted_monomials(k);
        max_monomials = std::max(max_monomials, bases[k].size());
    }
    size_t npoints = max_monomials + 12;
    SplitMix64 rng(0x5a5a5a);
    std::vector<std::array<long, 7>> points;
    std::vector<Poly<BigRat>> values(npoints, Poly<BigRat>(BigRat(0)));
    for (size_t i = 0; i < npoints; ++i) {
        std::array<long, 7> pt{};
        for (int v = 0; v < 7; ++v) {
            long x = 0;
            while (x == 0) x = rng.in_range(-9, 9);
            pt[v] = x;
        }
        points.push_back(pt);
    }
    parallel_for(npoints, [&](size_t i) {
        ShiodaParams<BigRat> r;
        for (int v = 0; v < 7; ++v) r[v] = BigRat(points[i][v]);
        values[i] = shioda_eval(r);
    });

    const auto& primes = crt_prime_pool();
    MPoly master(shioda_vars());
    std::vector<std::pair<ExpKey, BigRat>> terms;
    ExpKey monic_key;
    monic_key.set(7, 28);
    terms.emplace_back(monic_key, BigRat(1));

    for (int k = 1; k <= 28; ++k) {
        const auto& basis = bases[k];
        size_t n = basis.size();
        size_t rows = std::min(npoints, n + 6);
        // CRT over enough primes, then verify on spare exact evaluations
        std::vector<BigInt> coeffs(n, BigInt(0));
        BigInt modulus(1);
        std::vector<BigInt> prev;
        bool stable = false;
        for (size_t pi = 0; pi < primes.size() && !stable; ++pi) {
            uint64_t p = primes[pi];
            std::vector<std::vector<uint64_t>> M(rows, std::vector<uint64_t>(n));
            std::vector<uint64_t> y(rows);
            for (size_t rr = 0; rr < rows; ++rr) {
                for (size_t c = 0; c < n; ++c) {
                    uint64_t val = 1;
                    for (int v = 0; v < 7; ++v) {
                        long e = basis[c][v];
                        if (!e) continue;
                        uint64_t base = points[rr][v] >= 0 ? points[rr][v] : p - static_cast<uint64_t>(-points[rr][v]);
                        val = mulmod_u64(val, powmod_u64(base, e, p), p);
                    }
                    M[rr][c] = val;
                }
                y[rr] = rat_mod(values[rr].coeff(28 - k), p);
            }
            auto x = detail::solve_mod_p(std::move(M), std::move(y), n, p);
            if (x.empty()) throw std::runtime_error("singular interpolation system; add evaluation points");
            if (modulus == 1) {
                for (size_t c = 0; c < n; ++c) coeffs[c] = BigInt(static_cast<unsigned long>(x[c]));
                modulus = BigInt(static_cast<unsigned long>(p));
            } else {
                std::vector<BigInt> next(n);
                for (size_t c = 0; c < n; ++c) next[c] = crt_pair(coeffs[c], modulus, x[c], p);
                modulus *= BigInt(static_cast<unsigned long>(p));
                coeffs = std::move(next);
            }
            std::vector<BigInt> lifted(n);
            for (size_t c = 0; c < n; ++c) lifted[c] = symmetric_lift(coeffs[c], modulus);
            if (!prev.empty() && lifted == prev) stable = true;
            prev = std::move(lifted);
        }
        if (!stable) throw std::runtime_error("interpolation did not stabilize");
        // exact verification on held-out points
        for (size_t vr = rows; vr < std::min(npoints, rows + 3); ++vr) {
            BigRat acc(0);
            for (size_t c = 0; c < n; ++c) {
                BigRat t(prev[c]);
                for (int v = 0; v < 7; ++v)
                    for (int e = 0; e < basis[c][v]; ++e) t *= BigRat(points[vr][v]);
                acc += t;
            }
            if (acc != values[vr].coeff(28 - k))
                throw std::runtime_error("interpolated coefficient fails exact verification");
        }
        for (size_t c = 0; c < n; ++c) {
            if (prev[c] == 0) continue;
            ExpKey key;
            for (int v = 0; v < 7; ++v) key.set(v, basis[c][v]);
            key.set(7, 28 - k);
            terms.emplace_back(key, BigRat(prev[c]));
        }
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
    master.terms = std::move(terms);
    return master;
}

inline const MPoly& shioda_master() {
    static std::unique_ptr<MPoly> cached;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    if (cached) return *cached;
    std::string path = cache_dir() + "/shioda-master.json";
    std::ifstream in(path);
    if (in) {
        try {
            nlohmann::json j;
            in >> j;
            MPoly loaded = mpoly_from_json(j);
            if (loaded.vars == shioda_vars() && loaded.term_count() == 1784) {
                cached = std::make_unique<MPoly>(std::move(loaded));
                return *cached;
            }
        } catch (const std::exception&) {
        }
    }
    cached = std::make_unique<MPoly>(shioda_expand_symbolic_nocache());
    std::ofstream out(path);
    if (out) out << mpoly_to_json(*cached);
    return *cached;
}

// reference leading coefficients: z^27 .. z^22
inline std::vector<std::pair<int, std::string>> shioda_reference_coefficients() {
    return {
        {27, "-8*r1"},
        {26, "0"},
        {25, "72*r3"},
        {24, "60*r4"},
        {23, "-504*r5 + 432*r1*r4"},
        {22, "384*r1^2*r4 - 1248*r1*r5 + 540*r3^2 - 540*r6"},
    };
}

// coefficient of z^deg as a polynomial in the r variables
inline MPoly shioda_master_coeff(const MPoly& master, int zdeg) {
    MPoly out(shioda_vars());
    for (const auto& [k, c] : master.terms) {
        if (k.get(7) != zdeg) continue;
        ExpKey key = k;
        key.set(7, 0);
        out.terms.emplace_back(key, c);
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
    return out;
}

// --- the S0/S1/S2 parameter maps (Theorem 5.2 and the two-parameter family) -

inline ShiodaParams<BigRat> s0_params(const BigRat& u, const BigRat& v) {
    BigRat m = u * (-u + v - 1);
    return {BigRat(1), u - v + 1, -3 * u, BigRat(0), m, m, -u * u};
}

inline ShiodaParams<BigRat> s1_params(const BigRat& p, const BigRat& q) {
    BigRat d = p * p * q * q - 6 * p * q + 4 * p + 4 * q - 3;
    BigRat d2 = d * d, d3 = d2 * d, d4 = d3 * d, d5 = d4 * d;
    BigRat p2 = p * p, p3 = p2 * p, p4 = p3 * p;
    return {BigRat(0),
            d2 * p,
            3 * d2 * p2 * (q - 1),
            3 * d3 * p2,
            -d3 * p2 * (3 * p2 * q * q - 9 * p * q + 4 * q + 2 * p),
            -3 * d4 * p3 * (q - 1),
            d5 * p4 * (2 * p * q * q - 3 * q + 1)};
}

inline ShiodaParams<BigRat> s2_params(const BigRat& a, const BigRat& b) {
    if (a == 0) throw std::domain_error("degenerate locus: a = 0");
    BigRat A = BigRat(256) / a, B = (b - 1) / 8;
    BigRat A2 = A * A, B2 = B * B, B3 = B2 * B, B4 = B3 * B;
    return {BigRat(1),
            3 * (A * B2 + 2),
            -3 * (8 * A * B2 + A * B + 1),
            -3 * (5 * A * B2 + A * B - 4),
            -8 * A2 * B4 - A2 * B3 - 184 * A * B2 - 31 * A * B - A - 2,
            -56 * A2 * B4 - 7 * A2 * B3 - 199 * A * B2 - 58 * A * B - 4 * A + 10,
            -440 * A2 * B4 - 103 * A2 * B3 - 6 * A2 * B2 - 693 * A * B2 - 183 * A * B - 12 * A + 3};
}

// index vector I1 carries the 9^i scaling
inline ShiodaParams<BigRat> s1_params_scaled(const BigRat& p, const BigRat& q) {
    ShiodaParams<BigRat> r = s1_params(p, q);
    for (int i = 0; i < 7; ++i) r[i] /= pow_rat(BigRat(9), shioda_weights()[i]);
    return r;
}

enum class SFamily { S0, S1, S2 };

inline Poly<BigRat> s_family_eval(SFamily fam, const BigRat& x, const BigRat& y) {
    switch (fam) {
        case SFamily::S0: return shioda_eval(s0_params(x, y));
        case SFamily::S1: return shioda_eval(s1_params_scaled(x, y));
        case SFamily::S2: return shioda_eval(s2_params(x, y));
    }
    throw std::logic_error("unreachable");
}

// --- the mod-5 search screen ------------------------------------------------

struct ScreenCandidate {
    std::array<int, 7> coeffs; // a_i in F_5, zero where masked
    bool operator<(const ScreenCandidate& o) const { return coeffs < o.coeffs; }
    bool operator==(const ScreenCandidate& o) const { return coeffs == o.coeffs; }
};

// Does S(a_i t^{e_i}, z) have Gamma.2-compatible factorization partitions for
// all t in F_{5^j}, j = 1..3 (squarefree specializations only)?
inline bool screen_candidate_passes(const std::array<int, 7>& a, const std::array<int, 7>& e) {
    for (int j = 1; j <= 3; ++j) {
        FqField F(5, j);
        FFElem zero(F, 0);
        bool any_good = false;
        for (uint64_t ti = 1; ti < F.q(); ++ti) {
            FFElem t = FFElem::from_index(F, ti);
            ShiodaParams<FFElem> r{zero, zero, zero, zero, zero, zero, zero};
            for (int i = 0; i < 7; ++i) {
                if (a[i] == 0) continue;
                r[i] = FFElem(F, a[i]) * t.pow(static_cast<uint64_t>(e[i]));
            }
            Poly<FFElem> S(zero);
            try {
                S = shioda_eval(r);
            } catch (const std::exception&) {
                continue; // degenerate specialization
            }
            auto part = factor_partition(S);
            if (!part) continue; // not squarefree
            any_good = true;
            const auto& allowed = gamma2_lambda28_set();
            if (std::find(allowed.begin(), allowed.end(), *part) == allowed.end()) return false;
        }
        if (!any_good) return false;
    }
    return true;
}

// Iterate the reduced coefficient space over F_5 for a fixed exponent tuple;
// zero-masked positions fixed at 0, others nonzero, deduplicated by the
// weighted homogeneity scaling and the scaling t -> ut.
inline std::vector<ScreenCandidate> search_screen_mod5(const std::array<int, 7>& exponents,
                                                       const std::array<bool, 7>& mask) {
    std::vector<int> free_pos;
    for (int i = 0; i < 7; ++i)
        if (!mask[i]) free_pos.push_back(i);
    // canonical form under a_i -> lambda^{w_i} u^{e_i} a_i, lambda, u in F_5^*
    auto canonical = [&](const std::array<int, 7>& a) {
        std::array<int, 7> best = a;
        for (int lam = 1; lam <= 4; ++lam)
            for (int u = 1; u <= 4; ++u) {
                std::array<int, 7> cur{};
                for (int i = 0; i < 7; ++i) {
                    if (a[i] == 0) continue;
                    long lw = 1, ue = 1;
                    for (int k = 0; k < shioda_weights()[i]; ++k) lw = lw * lam % 5;
                    for (int k = 0; k < exponents[i]; ++k) ue = ue * u % 5;
                    cur[i] = static_cast<int>(a[i] * lw % 5 * ue % 5);
                }
                if (cur < best) best = cur;
            }
        return best;
    };
    std::set<std::array<int, 7>> seen;
    std::vector<std::array<int, 7>> reps;
    size_t total = 1;
    for (size_t i = 0; i < free_pos.size(); ++i) total *= 4;
    for (size_t ix = 0; ix < total; ++ix) {
        std::array<int, 7> a{};
        size_t t = ix;
        for (int pos : free_pos) {
            a[pos] = 1 + static_cast<int>(t % 4);
            t /= 4;
        }
        auto canon = canonical(a);
        if (seen.insert(canon).second) reps.push_back(canon);
    }
    std::vector<uint8_t> pass(reps.size(), 0);
    parallel_for(reps.size(), [&](size_t i) { pass[i] = screen_candidate_passes(reps[i], exponents) ? 1 : 0; });
    std::vector<ScreenCandidate> out;
    for (size_t i = 0; i < reps.size(); ++i)
        if (pass[i]) out.push_back({reps[i]});
    return out;
}

} // namespace dcl
