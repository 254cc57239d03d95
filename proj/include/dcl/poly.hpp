#pragma once

// Dense univariate polynomials over a coefficient ring K. K is one of
// BigRat, FFElem, or Poly<...> (nested, for resultants with polynomial
// coefficients). Elements always carry enough context to produce 0 and 1
// of their ring, which is what the k* trait functions below encode.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcl/fq.hpp"
#include "dcl/rational.hpp"

namespace dcl {

inline bool kz(const BigRat& a) { return a == 0; }
inline BigRat kzero(const BigRat&) { return BigRat(0); }
inline BigRat kone(const BigRat&) { return BigRat(1); }
inline BigRat kfrom_int(const BigRat&, long v) { return BigRat(v); }
inline BigRat kdivex(const BigRat& a, const BigRat& b) { return a / b; }
inline BigRat kinv(const BigRat& a) {
    if (a == 0) throw std::domain_error("division by zero");
    return 1 / a;
}

inline bool kz(const FFElem& a) { return a.is_zero(); }
inline FFElem kzero(const FFElem& a) { return FFElem(*a.field, 0); }
inline FFElem kone(const FFElem& a) { return FFElem(*a.field, 1); }
inline FFElem kfrom_int(const FFElem& a, long v) { return FFElem(*a.field, v); }
inline FFElem kdivex(const FFElem& a, const FFElem& b) { return a / b; }
inline FFElem kinv(const FFElem& a) { return a.inv(); }

template <class K>
class Poly {
  public:
    K sample;          // carries the ring context even for the zero polynomial
    std::vector<K> c;  // constant term first, no trailing zeros

    explicit Poly(const K& sample_) : sample(kzero(sample_)) {}
    Poly(const K& sample_, std::vector<K> coeffs) : sample(kzero(sample_)), c(std::move(coeffs)) { normalize(); }

    static Poly constant(const K& v) {
        Poly p(v);
        p.c = {v};
        p.normalize();
        return p;
    }
    static Poly x(const K& sample_) {
        Poly p(sample_);
        p.c = {kzero(sample_), kone(sample_)};
        return p;
    }
    // c0 + c1 x + ...
    static Poly from_int(const K& sample_, const std::vector<long>& v) {
        Poly p(sample_);
        for (long a : v) p.c.push_back(kfrom_int(sample_, a));
        p.normalize();
        return p;
    }

    void normalize() {
        while (!c.empty() && kz(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const K& lc() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c.back();
    }
    K coeff(size_t i) const { return i < c.size() ? c[i] : kzero(sample); }
    bool is_one() const { return c.size() == 1 && kz(c[0] - kone(sample)); }

    bool operator==(const Poly& o) const {
        if (c.size() != o.c.size()) return false;
        for (size_t i = 0; i < c.size(); ++i)
            if (!kz(c[i] - o.c[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.c) a = kzero(sample) - a;
        return r;
    }
    Poly operator+(const Poly& o) const {
        Poly r(sample);
        r.c.resize(std::max(c.size(), o.c.size()), kzero(sample));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff(i) + o.coeff(i);
        r.normalize();
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly(sample);
        Poly r(sample);
        r.c.assign(c.size() + o.c.size() - 1, kzero(sample));
        for (size_t i = 0; i < c.size(); ++i) {
            if (kz(c[i])) continue;
            for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        }
        r.normalize();
        return r;
    }
    Poly operator*(const K& s) const {
        Poly r = *this;
        for (auto& a : r.c) a = a * s;
        r.normalize();
        return r;
    }
    Poly shifted(int k) const { // multiply by x^k
        if (is_zero()) return *this;
        Poly r(sample);
        r.c.assign(c.size() + k, kzero(sample));
        for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
        return r;
    }
    Poly pow(unsigned e) const {
        Poly r = constant(kone(sample)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    K eval(const K& x0) const {
        K acc = kzero(sample);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x0 + c[i];
        return acc;
    }

    Poly derivative() const {
        Poly r(sample);
        for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * kfrom_int(sample, static_cast<long>(i)));
        r.normalize();
        return r;
    }

    std::string str(const std::string& var = "x") const;
};

// K-as-coefficient-ring traits for nested polynomials
template <class K>
inline bool kz(const Poly<K>& a) { return a.is_zero(); }
template <class K>
inline Poly<K> kzero(const Poly<K>& a) { return Poly<K>(a.sample); }
template <class K>
inline Poly<K> kone(const Poly<K>& a) { return Poly<K>::constant(kone(a.sample)); }
template <class K>
inline Poly<K> kfrom_int(const Poly<K>& a, long v) { return Poly<K>::constant(kfrom_int(a.sample, v)); }

template <class K>
std::string Poly<K>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
        if (kz(c[i])) continue;
        if (!out.empty()) out += " + ";
        if constexpr (std::is_same_v<K, BigRat>)
            out += rat_to_string(c[i]);
        else
            out += "c";
        if (i) out += "*" + var + "^" + std::to_string(i);
    }
    return out;
}

// division with remainder over a field K
template <class K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly<K> q(a.sample), r = a;
    if (r.deg() < b.deg()) return {q, r};
    q.c.assign(r.deg() - b.deg() + 1, kzero(a.sample));
    K binv = kinv(b.lc());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        K t = r.lc() * binv;
        q.c[k] = t;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + k] = r.c[i + k] - t * b.c[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

// exact division in K[x] for a ring K with exact coefficient division
template <class K>
Poly<K> divexact(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return a;
    Poly<K> q(a.sample), r = a;
    if (r.deg() < b.deg()) throw std::domain_error("inexact polynomial division");
    q.c.assign(r.deg() - b.deg() + 1, kzero(a.sample));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        K t = kdivex(r.lc(), b.lc());
        q.c[k] = t;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + k] = r.c[i + k] - t * b.c[i];
        r.normalize();
    }
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    q.normalize();
    return q;
}

template <class K>
Poly<K> kdivex(const Poly<K>& a, const Poly<K>& b) { return divexact(a, b); }

template <class K>
Poly<K> monic(const Poly<K>& a) {
    if (a.is_zero()) return a;
    return a * kinv(a.lc());
}

template <class K>
Poly<K> gcd_poly(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = b;
        b = r;
    }
    return a.is_zero() ? a : monic(a);
}

template <class K>
Poly<K> polmulmod(const Poly<K>& a, const Poly<K>& b, const Poly<K>& m) {
    return divrem(a * b, m).second;
}

template <class K>
Poly<K> polpowmod(Poly<K> base, BigInt e, const Poly<K>& m) {
    Poly<K> r = Poly<K>::constant(kone(base.sample));
    base = divrem(base, m).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = polmulmod(r, base, m);
        base = polmulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

// content/primitive part for rational-coefficient polynomials:
// f = content * primitive, primitive with coprime integer coefficients
// and positive leading coefficient.
inline std::pair<BigRat, Poly<BigRat>> content_primitive(const Poly<BigRat>& f) {
    if (f.is_zero()) return {BigRat(0), f};
    BigInt dlcm = 1, ngcd = 0;
    for (const auto& a : f.c)
        if (a != 0) mpz_lcm(dlcm.get_mpz_t(), dlcm.get_mpz_t(), a.get_den().get_mpz_t());
    for (const auto& a : f.c) {
        BigInt n = a.get_num() * (dlcm / a.get_den());
        mpz_gcd(ngcd.get_mpz_t(), ngcd.get_mpz_t(), n.get_mpz_t());
    }
    BigRat content(ngcd, dlcm);
    content.canonicalize();
    if (f.lc() < 0) content = -content;
    Poly<BigRat> prim = f * kinv(content);
    return {content, prim};
}

} // namespace dcl
