#pragma once

// Table-based arithmetic for F_{p^f} with p^f up to ~10^7: full exp/log
// tables over a fixed generator, packed-byte addition, and cubic root
// counting through the Frobenius gcd. This is the engine behind the curve
// point counts.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dcl/fq.hpp"
#include "dcl/numeric.hpp"
#include "dcl/rational.hpp"

namespace dcl {

class SmallFq {
  public:
    int64_t p;
    int f;
    uint64_t q;

    SmallFq(int64_t p_, int f_) : p(p_), f(f_) {
        q = 1;
        for (int i = 0; i < f; ++i) q *= static_cast<uint64_t>(p);
        if (q > 20000000ull) throw std::invalid_argument("field too large to enumerate");
        build_tables();
    }

    // elements are dense base-p indices in [0, q)
    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }

    uint32_t from_int(int64_t v) const {
        int64_t r = v % p;
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }
    uint32_t from_rat(const BigRat& r) const { return from_int(static_cast<int64_t>(rat_mod(r, static_cast<uint64_t>(p)))); }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t pa = packed_[a], pb = packed_[b];
        uint32_t sum = pa + pb; // p <= 97: no byte carries
        // subtract p from every byte that reached p (SWAR)
        uint32_t adj = sum + excess_;
        uint32_t mask = adj & 0x80808080u;
        mask = (mask >> 7) * static_cast<uint32_t>(p);
        return dense(sum - mask);
    }
    uint32_t neg(uint32_t a) const { return negtab_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, negtab_[b]); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        uint64_t e = static_cast<uint64_t>(log_[a]) + log_[b];
        if (e >= q - 1) e -= q - 1;
        return exp_[e];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        uint32_t e = log_[a];
        return exp_[e == 0 ? 0 : q - 1 - e];
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        uint64_t le = mulmod_u64(log_[a], e % (q - 1), q - 1);
        return exp_[le];
    }
    uint32_t frobenius(uint32_t a) const { return pow(a, static_cast<uint64_t>(p)); }

    bool is_square(uint32_t a) const {
        if (a == 0) return true;
        return (log_[a] & 1) == 0; // q odd
    }
    // number of w with w^n = u
    int nth_root_count(uint32_t u, uint64_t n) const {
        if (u == 0) return 1;
        uint64_t g = std::gcd(n, q - 1);
        return log_[u] % g == 0 ? static_cast<int>(g) : 0;
    }

    uint32_t elem_count() const { return static_cast<uint32_t>(q); }

    // dense index <-> packed bytes
    uint32_t packed(uint32_t a) const { return packed_[a]; }
    uint32_t dense(uint32_t packed) const {
        uint32_t acc = 0;
        for (int i = f - 1; i >= 0; --i) acc = acc * static_cast<uint32_t>(p) + ((packed >> (8 * i)) & 0xff);
        return acc;
    }

    // --- cubic root counting: #roots of x^3 + A x + B in F_q ---------------
    int cubic_root_count(uint32_t A, uint32_t B) const {
        // r = x^q mod (x^3 + A x + B), then deg gcd(r - x, cubic)
        std::array<uint32_t, 3> r = xq_mod_cubic(A, B);
        // gcd(r(x) - x, x^3 + A x + B)
        std::array<uint32_t, 3> s = r;
        s[1] = sub(s[1], 1);
        // compute gcd of cubic and quadratic-or-lower s
        return gcd_with_cubic_deg(A, B, s);
    }

  private:
    std::vector<uint32_t> exp_;    // dense elements by discrete log
    std::vector<uint32_t> log_;    // discrete log by dense index (log_[0] unused)
    std::vector<uint32_t> packed_; // packed bytes by dense index
    std::vector<uint32_t> negtab_;
    uint32_t excess_ = 0; // SWAR constant (128 - p) per byte

    void build_tables();

    // multiply two degree<3 polys mod x^3 + A x + B (coefficients dense)
    std::array<uint32_t, 3> mulmod_cubic(const std::array<uint32_t, 3>& a, const std::array<uint32_t, 3>& b,
                                         uint32_t A, uint32_t B) const {
        uint32_t c0 = mul(a[0], b[0]);
        uint32_t c1 = add(mul(a[0], b[1]), mul(a[1], b[0]));
        uint32_t c2 = add(add(mul(a[0], b[2]), mul(a[1], b[1])), mul(a[2], b[0]));
        uint32_t c3 = add(mul(a[1], b[2]), mul(a[2], b[1]));
        uint32_t c4 = mul(a[2], b[2]);
        // x^3 = -A x - B; x^4 = -A x^2 - B x
        c2 = sub(c2, mul(c4, A));
        c1 = sub(c1, add(mul(c3, A), mul(c4, B)));
        c0 = sub(c0, mul(c3, B));
        return {c0, c1, c2};
    }

    std::array<uint32_t, 3> xq_mod_cubic(uint32_t A, uint32_t B) const {
        // x^{p^f} by f successive p-th powers mod the cubic
        std::array<uint32_t, 3> r{0, 1, 0};
        for (int k = 0; k < f; ++k) {
            std::array<uint32_t, 3> acc{1, 0, 0}, base = r;
            uint64_t e = static_cast<uint64_t>(p);
            while (e) {
                if (e & 1) acc = mulmod_cubic(acc, base, A, B);
                base = mulmod_cubic(base, base, A, B);
                e >>= 1;
            }
            r = acc;
        }
        return r;
    }

    int gcd_with_cubic_deg(uint32_t A, uint32_t B, std::array<uint32_t, 3> s) const {
        // gcd(x^3 + A x + B, s) degree via Euclid on small arrays
        std::vector<uint32_t> a{B, A, 0, 1}, b{s[0], s[1], s[2]};
        auto trim = [](std::vector<uint32_t>& v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
        };
        trim(b);
        while (!b.empty()) {
            // a mod b
            uint32_t lead = inv(b.back());
            while (a.size() >= b.size()) {
                trim(a);
                if (a.size() < b.size()) break;
                uint32_t c = mul(a.back(), lead);
                size_t k = a.size() - b.size();
                for (size_t i = 0; i < b.size(); ++i) a[i + k] = sub(a[i + k], mul(c, b[i]));
                trim(a);
            }
            std::swap(a, b);
            trim(b);
        }
        trim(a);
        return static_cast<int>(a.size()) - 1;
    }
};

inline void SmallFq::build_tables() {
    // modulus tail via the deterministic search from FqField (p <= 97 here)
    std::vector<int64_t> mod_tail(f, 0);
    if (f == 1) {
        mod_tail.clear();
    } else {
        FqField F(p, f);
        for (int i = 0; i < f; ++i) mod_tail[i] = F.mod_tail[i];
    }
    excess_ = 0;
    for (int i = 0; i < f; ++i) excess_ |= static_cast<uint32_t>(128 - p) << (8 * i);

    packed_.resize(q);
    for (uint64_t ix = 0; ix < q; ++ix) {
        uint64_t t = ix;
        uint32_t packed = 0;
        for (int i = 0; i < f; ++i) {
            packed |= static_cast<uint32_t>(t % static_cast<uint64_t>(p)) << (8 * i);
            t /= static_cast<uint64_t>(p);
        }
        packed_[ix] = packed;
    }
    negtab_.resize(q);
    for (uint64_t ix = 0; ix < q; ++ix) {
        uint64_t t = ix, acc = 0, mult = 1;
        for (int i = 0; i < f; ++i) {
            uint64_t digit = t % static_cast<uint64_t>(p);
            acc += (digit ? static_cast<uint64_t>(p) - digit : 0) * mult;
            mult *= static_cast<uint64_t>(p);
            t /= static_cast<uint64_t>(p);
        }
        negtab_[ix] = static_cast<uint32_t>(acc);
    }

    // multiply dense elements the slow way during table construction
    auto slow_mul = [&](uint64_t a, uint64_t b) -> uint64_t {
        std::vector<int64_t> av(f), bv(f), prod(2 * f - 1, 0);
        uint64_t t = a;
        for (int i = 0; i < f; ++i) { av[i] = static_cast<int64_t>(t % p); t /= p; }
        t = b;
        for (int i = 0; i < f; ++i) { bv[i] = static_cast<int64_t>(t % p); t /= p; }
        for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + av[i] * bv[j]) % p;
        for (int d = 2 * f - 2; d >= f; --d) {
            int64_t top = prod[d];
            if (!top) continue;
            prod[d] = 0;
            for (int i = 0; i < f; ++i) prod[d - f + i] = ((prod[d - f + i] - top * mod_tail[i]) % p + p) % p;
        }
        uint64_t acc = 0;
        for (int i = f - 1; i >= 0; --i) acc = acc * p + static_cast<uint64_t>(prod[i]);
        return acc;
    };

    // factor q - 1 for generator tests
    std::vector<uint64_t> prime_factors;
    {
        uint64_t n = q - 1;
        for (uint64_t d = 2; d * d <= n; ++d) {
            if (n % d) continue;
            prime_factors.push_back(d);
            while (n % d == 0) n /= d;
        }
        if (n > 1) prime_factors.push_back(n);
    }
    auto order_is_full = [&](uint64_t g) {
        for (uint64_t ell : prime_factors) {
            uint64_t e = (q - 1) / ell;
            uint64_t acc = 1, base = g;
            while (e) {
                if (e & 1) acc = slow_mul(acc, base);
                base = slow_mul(base, base);
                e >>= 1;
            }
            if (acc == 1) return false;
        }
        return true;
    };
    uint64_t gen = 0;
    for (uint64_t cand = 2; cand < q; ++cand) {
        if (order_is_full(cand)) { gen = cand; break; }
    }
    if (!gen) throw std::runtime_error("no generator found");

    exp_.resize(q - 1);
    log_.assign(q, 0);
    uint64_t cur = 1;
    for (uint64_t e = 0; e < q - 1; ++e) {
        exp_[e] = static_cast<uint32_t>(cur);
        log_[cur] = static_cast<uint32_t>(e);
        cur = slow_mul(cur, gen);
    }
    if (cur != 1) throw std::runtime_error("generator order mismatch");
}

} // namespace dcl
