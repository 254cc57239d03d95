#pragma once

// Arbitrary-precision integers and rationals. GMP supplies the arithmetic;
// this header pins the conventions the rest of the library relies on
// (canonical reduced form, positive denominator) and adds the handful of
// helpers GMP does not expose directly.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcl/numeric.hpp"

namespace dcl {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline BigRat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        BigRat r{BigInt(s)};
        return r;
    }
    BigRat r(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const BigRat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const BigRat& r) { return r.get_den() == 1; }

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline BigRat pow_rat(const BigRat& base, long e) {
    if (e == 0) return BigRat(1);
    BigInt n = pow_int(base.get_num(), static_cast<unsigned long>(e < 0 ? -e : e));
    BigInt d = pow_int(base.get_den(), static_cast<unsigned long>(e < 0 ? -e : e));
    BigRat r = e < 0 ? BigRat(d, n) : BigRat(n, d);
    r.canonicalize();
    return r;
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline BigInt isqrt(const BigInt& n) {
    BigInt out;
    mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

// Largest e with q^e | n; divides q^e out of n.
inline int strip_factor(BigInt& n, unsigned long q) {
    if (n == 0) throw std::invalid_argument("strip_factor of zero");
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
        ++e;
    }
    return e;
}

inline uint64_t mod_u64(const BigInt& n, uint64_t p) {
    BigInt r = n % BigInt(static_cast<unsigned long>(p));
    if (r < 0) r += BigInt(static_cast<unsigned long>(p));
    return r.get_ui();
}

// Image of a rational in F_p; throws when the denominator dies.
inline uint64_t rat_mod(const BigRat& r, uint64_t p) {
    uint64_t den = mod_u64(r.get_den(), p);
    if (den == 0) throw std::domain_error("denominator vanishes mod p");
    uint64_t num = mod_u64(r.get_num(), p);
    return mulmod_u64(num, invmod_u64(den, p), p);
}

inline BigInt crt_pair(const BigInt& r1, const BigInt& m1, uint64_t r2, uint64_t m2) {
    // x = r1 mod m1, x = r2 mod m2 (m1, m2 coprime)
    BigInt M2(static_cast<unsigned long>(m2));
    BigInt diff = (BigInt(static_cast<unsigned long>(r2)) - r1) % M2;
    if (diff < 0) diff += M2;
    BigInt m1inv;
    if (mpz_invert(m1inv.get_mpz_t(), BigInt(m1 % M2).get_mpz_t(), M2.get_mpz_t()) == 0)
        throw std::runtime_error("crt moduli not coprime");
    BigInt t = (diff * m1inv) % M2;
    return r1 + m1 * t;
}

// Symmetric representative in (-m/2, m/2].
inline BigInt symmetric_lift(const BigInt& r, const BigInt& m) {
    BigInt x = r % m;
    if (x < 0) x += m;
    if (2 * x > m) x -= m;
    return x;
}

} // namespace dcl
