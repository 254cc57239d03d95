#pragma once

// Exact reconstruction of integer multivariate polynomials from modular
// evaluations: per-variable degree probing, tensor-grid Newton interpolation
// over several 62-bit primes, CRT with symmetric lift, and verification at
// held-out random nodes over a fresh prime. Used to build the resultant
// polynomials F_i/G_i and the expanded cover families exactly without
// symbolic elimination.

#include <functional>
#include <stdexcept>
#include <vector>

#include "dcl/mpoly.hpp"
#include "dcl/numeric.hpp"

namespace dcl {

// monomial-basis coefficients (constant first) of the polynomial through
// (nodes[i], values[i]) over F_p
inline std::vector<uint64_t> interpolate_monomial(const std::vector<uint64_t>& nodes,
                                                  const std::vector<uint64_t>& values, uint64_t p) {
    size_t n = nodes.size();
    if (values.size() != n || n == 0) throw std::invalid_argument("bad interpolation input");
    // divided differences
    std::vector<uint64_t> dd(values);
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            uint64_t num = (dd[i] + p - dd[i - 1]) % p;
            uint64_t den = (nodes[i] + p - nodes[i - level]) % p;
            dd[i] = mulmod_u64(num, invmod_u64(den, p), p);
            if (i == level) break;
        }
    }
    // expand the Newton form
    std::vector<uint64_t> coeff(n, 0), cur(n, 0), next(n, 0);
    cur[0] = 1;
    size_t curdeg = 0;
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i <= curdeg; ++i) coeff[i] = (coeff[i] + mulmod_u64(dd[k], cur[i], p)) % p;
        if (k + 1 < n) {
            uint64_t neg = (p - nodes[k] % p) % p;
            std::fill(next.begin(), next.end(), 0);
            for (size_t i = 0; i <= curdeg; ++i) {
                next[i] = (next[i] + mulmod_u64(cur[i], neg, p)) % p;
                next[i + 1] = (next[i + 1] + cur[i]) % p;
            }
            std::swap(cur, next);
            ++curdeg;
        }
    }
    return coeff;
}

// A black box producing values of an integer polynomial mod p.
using ModularBlackbox = std::function<uint64_t(const std::vector<uint64_t>& point, uint64_t p)>;

// Interpolate one variable's true degree by sampling along a random line.
inline int probe_degree(const ModularBlackbox& f, size_t nvars, size_t var, int bound, uint64_t p,
                        SplitMix64& rng) {
    std::vector<uint64_t> base(nvars);
    for (auto& b : base) b = 1 + rng.below(p - 1);
    std::vector<uint64_t> nodes, values;
    for (int i = 0; i <= bound; ++i) {
        std::vector<uint64_t> pt = base;
        pt[var] = 1 + rng.below(p - 1);
        bool fresh = true;
        for (auto nd : nodes) fresh = fresh && nd != pt[var];
        if (!fresh) { --i; continue; }
        nodes.push_back(pt[var]);
        values.push_back(f(pt, p));
    }
    auto coeff = interpolate_monomial(nodes, values, p);
    int deg = 0;
    for (int i = 0; i < static_cast<int>(coeff.size()); ++i)
        if (coeff[i] != 0) deg = i;
    return deg;
}

namespace detail {

// tensor-grid interpolation: values indexed lexicographically over the grid
// dims[v] nodes per variable; converts in place to monomial coefficients
inline void tensor_interpolate(std::vector<uint64_t>& values, const std::vector<std::vector<uint64_t>>& nodes,
                               uint64_t p) {
    size_t nvars = nodes.size();
    std::vector<size_t> dims(nvars);
    size_t total = 1;
    for (size_t v = 0; v < nvars; ++v) {
        dims[v] = nodes[v].size();
        total *= dims[v];
    }
    if (values.size() != total) throw std::invalid_argument("tensor size mismatch");
    // interpolate along each axis in turn
    for (size_t v = 0; v < nvars; ++v) {
        size_t stride = 1;
        for (size_t w = v + 1; w < nvars; ++w) stride *= dims[w];
        size_t block = stride * dims[v];
        std::vector<uint64_t> line(dims[v]), out;
        for (size_t start = 0; start < total; ++start) {
            // iterate over all positions with index-along-v equal to 0
            if ((start / stride) % dims[v] != 0) continue;
            for (size_t i = 0; i < dims[v]; ++i) line[i] = values[start + i * stride];
            out = interpolate_monomial(nodes[v], line, p);
            for (size_t i = 0; i < dims[v]; ++i) values[start + i * stride] = out[i];
        }
        (void)block;
    }
}

} // namespace detail

struct InterpResult {
    MPoly poly;
    std::vector<int> degrees;
};

// Reconstruct the integer polynomial behind `f` in `nvars` variables with the
// given per-variable degree bounds. Degrees are probed first; the CRT result
// must stabilize over two consecutive primes and then pass verification at
// random nodes over one further prime.
inline InterpResult interpolate_blackbox(const ModularBlackbox& f, const std::vector<std::string>& vars,
                                         const std::vector<int>& degree_bounds, uint64_t seed = 1) {
    size_t nvars = vars.size();
    const auto& primes = crt_prime_pool();
    SplitMix64 rng(seed ^ 0xabcdef12345ull);

    // degree probing on the first prime (verified later)
    std::vector<int> degs(nvars);
    for (size_t v = 0; v < nvars; ++v) degs[v] = probe_degree(f, nvars, v, degree_bounds[v], primes[0], rng);

    std::vector<std::vector<uint64_t>> node_ids(nvars);
    size_t total = 1;
    for (size_t v = 0; v < nvars; ++v) {
        for (int i = 0; i <= degs[v]; ++i) node_ids[v].push_back(static_cast<uint64_t>(i + 1));
        total *= static_cast<size_t>(degs[v] + 1);
    }

    std::vector<BigInt> crt_coeffs(total, BigInt(0));
    BigInt modulus(1);
    std::vector<BigInt> prev;
    bool stable = false;
    size_t used = 0;
    for (size_t pi = 0; pi < primes.size() && !stable; ++pi, ++used) {
        uint64_t p = primes[pi];
        std::vector<uint64_t> values(total);
        parallel_for(total, [&](size_t ix) {
            std::vector<uint64_t> pt(nvars);
            size_t t = ix;
            for (size_t v = nvars; v-- > 0;) {
                pt[v] = node_ids[v][t % node_ids[v].size()];
                t /= node_ids[v].size();
            }
            // index order: variable 0 slowest -- match tensor layout below
            values[ix] = f(pt, p);
        });
        detail::tensor_interpolate(values, node_ids, p);
        if (modulus == 1) {
            for (size_t i = 0; i < total; ++i) crt_coeffs[i] = BigInt(static_cast<unsigned long>(values[i]));
            modulus = BigInt(static_cast<unsigned long>(p));
        } else {
            for (size_t i = 0; i < total; ++i) crt_coeffs[i] = crt_pair(crt_coeffs[i], modulus, values[i], p);
            modulus *= BigInt(static_cast<unsigned long>(p));
        }
        std::vector<BigInt> lifted(total);
        for (size_t i = 0; i < total; ++i) lifted[i] = symmetric_lift(crt_coeffs[i], modulus);
        if (!prev.empty() && lifted == prev) stable = true;
        prev = std::move(lifted);
    }
    if (!stable) throw std::runtime_error("modular interpolation did not stabilize");

    MPoly out(vars);
    {
        std::vector<std::pair<ExpKey, BigRat>> terms;
        for (size_t ix = 0; ix < total; ++ix) {
            if (prev[ix] == 0) continue;
            ExpKey key;
            size_t t = ix;
            for (size_t v = nvars; v-- > 0;) {
                key.set(static_cast<int>(v), static_cast<int>(t % node_ids[v].size()));
                t /= node_ids[v].size();
            }
            terms.emplace_back(key, BigRat(prev[ix]));
        }
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
        out.terms = std::move(terms);
    }

    // verification: 24 random nodes over a fresh prime (also catches a
    // too-small probed degree)
    uint64_t vp = primes[used + 1 < primes.size() ? used + 1 : 0];
    for (int trial = 0; trial < 24; ++trial) {
        std::vector<uint64_t> pt(nvars);
        for (auto& x : pt) x = 1 + rng.below(vp - 1);
        if (out.eval_mod(pt, vp) != f(pt, vp))
            throw std::runtime_error("modular interpolation failed verification");
    }
    return {std::move(out), degs};
}

// det of an n x n matrix over F_p (destroys its argument)
inline uint64_t det_mod_p(std::vector<std::vector<uint64_t>>& M, uint64_t p) {
    size_t n = M.size();
    uint64_t det = 1;
    bool neg = false;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(M[piv], M[col]);
            neg = !neg;
        }
        det = mulmod_u64(det, M[col][col], p);
        uint64_t inv = invmod_u64(M[col][col], p);
        for (size_t r = col + 1; r < n; ++r) {
            if (M[r][col] == 0) continue;
            uint64_t fac = mulmod_u64(M[r][col], inv, p);
            for (size_t c = col; c < n; ++c)
                M[r][c] = (M[r][c] + p - mulmod_u64(fac, M[col][c], p)) % p;
        }
    }
    return neg ? (p - det) % p : det;
}

} // namespace dcl
