#pragma once

// Factorization utilities over F_q: root counting through the Frobenius gcd,
// distinct-degree degree partitions, and complete factorization of small
// polynomials by exhaustive trial of monic irreducibles. Also Yun's
// squarefree decomposition over the rationals.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dcl/partition.hpp"
#include "dcl/poly.hpp"

namespace dcl {

using PolyQ = Poly<BigRat>;
using PolyF = Poly<FFElem>;

inline PolyF poly_mod_p(const PolyQ& f, const FqField& F) {
    PolyF out(FFElem(F, 0));
    for (const auto& a : f.c) out.c.push_back(FFElem::from_rat(F, a));
    out.normalize();
    return out;
}

// #roots of f in F_q, without multiplicity: deg gcd(x^q - x, f)
inline int ff_pow_frobenius_root_count(const PolyF& f) {
    if (f.is_zero()) throw std::domain_error("indeterminate root count");
    if (f.deg() == 0) return 0;
    const FqField& F = *f.sample.field;
    PolyF fm = monic(f);
    PolyF xq = polpowmod(PolyF::x(f.sample), BigInt(static_cast<unsigned long>(F.q())), fm);
    PolyF g = gcd_poly(xq - PolyF::x(f.sample), fm);
    return g.is_zero() ? fm.deg() : g.deg();
}

inline bool is_squarefree(const PolyF& f) {
    if (f.is_zero()) return false;
    PolyF d = f.derivative();
    if (d.is_zero()) return f.deg() == 0;
    return gcd_poly(f, d).deg() == 0;
}

// Degree partition of the irreducible factors of a squarefree-checked f,
// by distinct-degree factorization. Returns nullopt when f is not squarefree.
inline std::optional<CyclePartition> factor_partition(const PolyF& f) {
    if (f.is_zero()) throw std::domain_error("factor partition of zero polynomial");
    if (!is_squarefree(f)) return std::nullopt;
    const FqField& F = *f.sample.field;
    PolyF rest = monic(f);
    std::vector<int> parts;
    PolyF h = PolyF::x(f.sample);
    BigInt q(static_cast<unsigned long>(F.q()));
    int d = 0;
    while (rest.deg() > 0) {
        ++d;
        if (2 * d > rest.deg()) {
            parts.push_back(rest.deg()); // remainder is irreducible
            break;
        }
        h = polpowmod(h, q, rest);
        PolyF g = gcd_poly(h - PolyF::x(f.sample), rest);
        if (g.deg() > 0) {
            for (int k = 0; k < g.deg() / d; ++k) parts.push_back(d);
            rest = divexact(rest, g);
            h = divrem(h, rest).second;
        }
    }
    return CyclePartition(std::move(parts));
}

// p-th root of a polynomial whose derivative vanishes: f(x) = g(x^p).
inline PolyF pth_root(const PolyF& f) {
    const FqField& F = *f.sample.field;
    uint64_t e = F.q() / static_cast<uint64_t>(F.p); // c -> c^{q/p} inverts Frobenius
    PolyF out(f.sample);
    for (int i = 0; i * F.p <= f.deg(); ++i) out.c.push_back(f.coeff(static_cast<size_t>(i) * F.p).pow(e == 0 ? 1 : e));
    out.normalize();
    return out;
}

// Squarefree decomposition over F_q: f = lc * prod part[i]^i.
inline std::map<int, PolyF> squarefree_decomposition(const PolyF& f0) {
    std::map<int, PolyF> out;
    if (f0.deg() <= 0) return out;
    PolyF f = monic(f0);
    const long p = f.sample.field->p;
    int pmult = 1; // power of p accumulated through p-th root steps
    auto record = [&out](int mult, const PolyF& piece) {
        auto [it, fresh] = out.emplace(mult, piece);
        if (!fresh) it->second = it->second * piece;
    };
    while (f.deg() > 0) {
        PolyF d = f.derivative();
        if (d.is_zero()) {
            f = pth_root(f);
            pmult *= static_cast<int>(p);
            continue;
        }
        PolyF c = gcd_poly(f, d);
        PolyF w = divexact(f, c);
        int i = 1;
        while (w.deg() > 0) {
            PolyF y = gcd_poly(w, c);
            PolyF piece = divexact(w, y);
            if (piece.deg() > 0) record(i * pmult, piece);
            w = y;
            c = divexact(c, y);
            ++i;
        }
        f = c; // what is left is a p-th power
    }
    return out;
}

inline std::vector<PolyF> monic_polys_of_degree(const FqField& F, int d) {
    std::vector<PolyF> out;
    uint64_t space = 1;
    for (int i = 0; i < d; ++i) space *= F.q();
    for (uint64_t ix = 0; ix < space; ++ix) {
        PolyF f(FFElem(F, 0));
        uint64_t t = ix;
        f.c.resize(d + 1, FFElem(F, 0));
        for (int i = 0; i < d; ++i) {
            f.c[i] = FFElem::from_index(F, t % F.q());
            t /= F.q();
        }
        f.c[d] = FFElem(F, 1);
        out.push_back(f);
    }
    return out;
}

inline bool is_irreducible(const PolyF& f) {
    if (f.deg() <= 0) return false;
    if (f.deg() == 1) return true;
    auto part = factor_partition(f);
    return part && part->parts.size() == 1;
}

// Complete factorization of small f (degree and field small enough to
// enumerate monic irreducibles): returns (irreducible, multiplicity) pairs
// plus the leading unit, product recombines to f exactly.
struct SmallFactorization {
    FFElem unit;
    std::vector<std::pair<PolyF, int>> factors;
};

inline SmallFactorization factor_full_small(const PolyF& f) {
    if (f.is_zero()) throw std::domain_error("factorization of zero polynomial");
    const FqField& F = *f.sample.field;
    SmallFactorization out{f.is_zero() ? FFElem(F, 1) : f.lc(), {}};
    auto sq = squarefree_decomposition(f);
    for (auto& [mult, piece] : sq) {
        // trial division in increasing degree; only irreducibles can divide
        // once all smaller-degree factors are removed
        PolyF rest = piece;
        for (int d = 1; rest.deg() > 0 && 2 * d <= rest.deg(); ++d) {
            for (const auto& cand : monic_polys_of_degree(F, d)) {
                if (rest.deg() < d) break;
                while (rest.deg() >= d) {
                    auto [q, r] = divrem(rest, cand);
                    if (!r.is_zero()) break;
                    bool seen = false;
                    for (auto& fac : out.factors)
                        if (fac.first == cand) { fac.second += mult, seen = true; break; }
                    if (!seen) out.factors.emplace_back(cand, mult);
                    rest = q;
                }
            }
        }
        if (rest.deg() > 0) out.factors.emplace_back(rest, mult); // leftover is irreducible
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        for (int i = a.first.deg(); i >= 0; --i) {
            uint64_t x = a.first.coeff(i).index(), y = b.first.coeff(i).index();
            if (x != y) return x < y;
        }
        return false;
    });
    return out;
}

inline PolyF recombine(const SmallFactorization& fac, const FFElem& sample) {
    PolyF out = PolyF::constant(fac.unit);
    for (const auto& [f, m] : fac.factors) out = out * f.pow(static_cast<unsigned>(m));
    (void)sample;
    return out;
}

// Multiplicity pattern of f over Q by Yun's algorithm: map multiplicity -> factor.
inline std::map<int, PolyQ> squarefree_decomposition_q(const PolyQ& f0) {
    std::map<int, PolyQ> out;
    if (f0.deg() <= 0) return out;
    PolyQ f = monic(f0);
    PolyQ d = f.derivative();
    PolyQ a = gcd_poly(f, d);
    PolyQ b = divexact(f, a);
    PolyQ c = divexact(d, a);
    int i = 1;
    while (b.deg() > 0) {
        PolyQ z = c - b.derivative();
        PolyQ piece = gcd_poly(b, z);
        if (piece.deg() > 0) out.emplace(i, piece);
        b = divexact(b, piece);
        c = divexact(z, piece);
        ++i;
    }
    return out;
}

// Root-multiplicity partition over Q-bar: each multiplicity-m squarefree
// factor of degree d contributes d parts equal to m.
inline CyclePartition multiplicity_partition_q(const PolyQ& f) {
    std::vector<int> parts;
    for (const auto& [m, piece] : squarefree_decomposition_q(f))
        for (int k = 0; k < piece.deg(); ++k) parts.push_back(m);
    return CyclePartition(std::move(parts));
}

} // namespace dcl
