#pragma once

// Finite fields F_{p^f} with f <= 4. Elements are coefficient vectors over F_p
// reduced modulo a fixed irreducible modulus. F_9 is pinned to F_3[i] with
// i^2 = -1 so Frobenius conjugation is i -> -i.

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcl/numeric.hpp"
#include "dcl/rational.hpp"

namespace dcl {

class FqField {
  public:
    int64_t p;
    int f;
    // modulus = x^f + mod_tail[f-1] x^{f-1} + ... + mod_tail[0], coefficients in [0,p)
    std::array<int64_t, 4> mod_tail{};

    FqField(int64_t p_, int f_) : p(p_), f(f_) {
        if (f < 1 || f > 4) throw std::invalid_argument("extension degree must be 1..4");
        if (!is_prime_u64(static_cast<uint64_t>(p))) throw std::invalid_argument("characteristic not prime");
        if (f == 1) return;
        if (p == 3 && f == 2) {
            mod_tail = {1, 0, 0, 0}; // x^2 + 1
            return;
        }
        if (!find_irreducible()) throw std::runtime_error("no irreducible modulus found");
    }

    uint64_t q() const {
        uint64_t out = 1;
        for (int i = 0; i < f; ++i) out *= static_cast<uint64_t>(p);
        return out;
    }

    bool operator==(const FqField& o) const { return p == o.p && f == o.f && mod_tail == o.mod_tail; }

  private:
    bool find_irreducible();
};

class FFElem {
  public:
    const FqField* field = nullptr;
    std::array<int64_t, 4> c{};

    FFElem() = default;
    FFElem(const FqField& F, int64_t a0) : field(&F) {
        c[0] = mod_p(a0);
    }
    FFElem(const FqField& F, const std::vector<int64_t>& coeffs) : field(&F) {
        if (static_cast<int>(coeffs.size()) > F.f) throw std::invalid_argument("too many coefficients");
        for (size_t i = 0; i < coeffs.size(); ++i) c[i] = mod_p(coeffs[i]);
    }
    static FFElem from_rat(const FqField& F, const BigRat& r) {
        return FFElem(F, static_cast<int64_t>(rat_mod(r, static_cast<uint64_t>(F.p))));
    }

    bool is_zero() const {
        for (int i = 0; i < field->f; ++i)
            if (c[i]) return false;
        return true;
    }
    bool operator==(const FFElem& o) const { return *field == *o.field && c == o.c; }
    bool operator!=(const FFElem& o) const { return !(*this == o); }

    FFElem operator+(const FFElem& o) const {
        check(o);
        FFElem r = *this;
        for (int i = 0; i < field->f; ++i) r.c[i] = (r.c[i] + o.c[i]) % field->p;
        return r;
    }
    FFElem operator-() const {
        FFElem r = *this;
        for (int i = 0; i < field->f; ++i) r.c[i] = r.c[i] ? field->p - r.c[i] : 0;
        return r;
    }
    FFElem operator-(const FFElem& o) const { return *this + (-o); }

    FFElem operator*(const FFElem& o) const {
        check(o);
        const int f = field->f;
        const int64_t p = field->p;
        if (f == 1) {
            FFElem r(*field, 0);
            r.c[0] = mulmod_s(c[0], o.c[0]);
            return r;
        }
        std::array<int64_t, 7> prod{};
        for (int i = 0; i < f; ++i) {
            if (!c[i]) continue;
            for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + mulmod_s(c[i], o.c[j])) % p;
        }
        // reduce by modulus: x^f = -tail
        for (int d = 2 * f - 2; d >= f; --d) {
            int64_t top = prod[d];
            if (!top) continue;
            prod[d] = 0;
            for (int i = 0; i < f; ++i) {
                int64_t sub = mulmod_s(top, field->mod_tail[i]);
                prod[d - f + i] = ((prod[d - f + i] - sub) % p + p) % p;
            }
        }
        FFElem r(*field, 0);
        for (int i = 0; i < f; ++i) r.c[i] = prod[i];
        return r;
    }

    FFElem pow(uint64_t e) const {
        FFElem r(*field, 1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    FFElem inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return pow(field->q() - 2);
    }
    FFElem operator/(const FFElem& o) const { return *this * o.inv(); }

    FFElem frobenius() const { return pow(static_cast<uint64_t>(field->p)); }

    // index in [0, q): base-p digits
    uint64_t index() const {
        uint64_t ix = 0;
        for (int i = field->f - 1; i >= 0; --i) ix = ix * static_cast<uint64_t>(field->p) + static_cast<uint64_t>(c[i]);
        return ix;
    }
    static FFElem from_index(const FqField& F, uint64_t ix) {
        FFElem r(F, 0);
        for (int i = 0; i < F.f; ++i) {
            r.c[i] = static_cast<int64_t>(ix % static_cast<uint64_t>(F.p));
            ix /= static_cast<uint64_t>(F.p);
        }
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < field->f; ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return "(" + s + ")";
    }

  private:
    int64_t mod_p(int64_t a) const {
        int64_t r = a % field->p;
        return r < 0 ? r + field->p : r;
    }
    int64_t mulmod_s(int64_t a, int64_t b) const {
        return static_cast<int64_t>(mulmod_u64(static_cast<uint64_t>(a), static_cast<uint64_t>(b), static_cast<uint64_t>(field->p)));
    }
    void check(const FFElem& o) const {
        if (!(*field == *o.field)) throw std::invalid_argument("mixed fields");
    }
};

// F_9 = F_3[i]: the element i and conjugation i -> -i.
inline FFElem f9_i(const FqField& F9) {
    if (F9.p != 3 || F9.f != 2) throw std::invalid_argument("not F9");
    return FFElem(F9, std::vector<int64_t>{0, 1});
}
inline FFElem f9_conj(const FFElem& a) { return a.frobenius(); }

namespace detail {
// minimal polynomial arithmetic over F_p for the irreducibility search
inline std::vector<int64_t> fp_polmulmod(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                                         const std::vector<int64_t>& m, int64_t p) {
    std::vector<int64_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j)
                prod[i + j] = (prod[i + j] + static_cast<int64_t>(mulmod_u64(a[i], b[j], p))) % p;
    size_t f = m.size() - 1; // m monic of degree f
    for (size_t d = prod.size(); d-- > f;) {
        int64_t top = prod[d];
        if (!top) continue;
        prod[d] = 0;
        for (size_t i = 0; i < f; ++i)
            prod[d - f + i] = ((prod[d - f + i] - static_cast<int64_t>(mulmod_u64(top, m[i], p))) % p + p) % p;
    }
    prod.resize(f);
    return prod;
}

inline std::vector<int64_t> fp_xpowq(uint64_t e, const std::vector<int64_t>& m, int64_t p) {
    size_t f = m.size() - 1;
    std::vector<int64_t> r(f, 0), b(f, 0);
    r[0] = 1;
    if (f == 1)
        b[0] = ((-m[0]) % p + p) % p;
    else
        b[1] = 1;
    while (e) {
        if (e & 1) r = fp_polmulmod(r, b, m, p);
        b = fp_polmulmod(b, b, m, p);
        e >>= 1;
    }
    return r;
}
} // namespace detail

inline bool FqField::find_irreducible() {
    // deterministic sweep over monic degree-f tails
    uint64_t space = 1;
    for (int i = 0; i < f; ++i) space *= static_cast<uint64_t>(p);
    for (uint64_t tail = 1; tail < space; ++tail) {
        std::array<int64_t, 4> cand{};
        uint64_t t = tail;
        for (int i = 0; i < f; ++i) {
            cand[i] = static_cast<int64_t>(t % static_cast<uint64_t>(p));
            t /= static_cast<uint64_t>(p);
        }
        if (cand[0] == 0) continue; // reducible: x divides
        std::vector<int64_t> m(f + 1, 0);
        for (int i = 0; i < f; ++i) m[i] = cand[i];
        m[f] = 1;
        // irreducible iff x^{p^f} = x mod m and x^{p^{f/l}} != x for prime l | f
        uint64_t q = 1;
        for (int i = 0; i < f; ++i) q *= static_cast<uint64_t>(p);
        auto xq = detail::fp_xpowq(q, m, p);
        std::vector<int64_t> x(f, 0);
        if (f >= 2) x[1] = 1;
        else x[0] = ((-m[0]) % p + p) % p;
        if (xq != x) continue;
        bool proper = true;
        for (int l : {2, 3}) {
            if (f % l != 0) continue;
            uint64_t qq = 1;
            for (int i = 0; i < f / l; ++i) qq *= static_cast<uint64_t>(p);
            if (detail::fp_xpowq(qq, m, p) == x) { proper = false; break; }
        }
        if (!proper) continue;
        mod_tail = cand;
        return true;
    }
    return false;
}

} // namespace dcl
