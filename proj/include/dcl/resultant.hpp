#pragma once

// Resultants by the subresultant pseudo-remainder sequence, over any
// coefficient ring with exact division (BigRat, FFElem, nested Poly).
// Sign convention: Res(f,g) is the Sylvester determinant, equivalently
// lc(f)^{deg g} * prod g(alpha) over the roots alpha of f.
//
// Discriminant convention, used everywhere:
//   disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f).

#include <stdexcept>
#include <utility>

#include "dcl/poly.hpp"

namespace dcl {

// pseudo-remainder: lc(B)^{deg A - deg B + 1} * A mod B
template <class K>
Poly<K> prem(const Poly<K>& A, const Poly<K>& B) {
    if (B.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    int d = A.deg() - B.deg();
    if (d < 0) throw std::domain_error("pseudo-remainder needs deg A >= deg B");
    const K e = B.lc();
    Poly<K> R = A;
    for (int k = d; k >= 0; --k) {
        if (R.deg() == B.deg() + k) {
            K top = R.lc();
            Poly<K> scaled = R * e;
            for (int i = 0; i <= B.deg(); ++i) scaled.c[i + k] = scaled.c[i + k] - top * B.c[i];
            scaled.normalize();
            R = scaled;
        } else {
            R = R * e;
        }
    }
    return R;
}

template <class K>
K resultant(Poly<K> A, Poly<K> B) {
    K one = kone(A.sample);
    if (A.is_zero() || B.is_zero()) return kzero(A.sample);
    if (A.deg() == 0 && B.deg() == 0) throw std::domain_error("resultant of two constants");
    K sign = one;
    if (A.deg() < B.deg()) {
        std::swap(A, B);
        if ((A.deg() % 2) && (B.deg() % 2)) sign = kzero(A.sample) - sign;
    }
    if (B.deg() == 0) {
        K r = one;
        for (int i = 0; i < A.deg(); ++i) r = r * B.lc();
        return sign * r;
    }
    K g = one, h = one;
    for (;;) {
        int dA = A.deg(), dB = B.deg();
        int delta = dA - dB;
        if ((dA % 2) && (dB % 2)) sign = kzero(A.sample) - sign;
        Poly<K> R = prem(A, B);
        A = B;
        // B = R / (g h^delta)
        K denom = g;
        for (int i = 0; i < delta; ++i) denom = denom * h;
        B = R;
        for (auto& coef : B.c) coef = kdivex(coef, denom);
        B.normalize();
        if (B.is_zero()) return kzero(A.sample); // nontrivial common factor
        g = A.lc();
        if (delta > 0) {
            // h = g^delta / h^{delta-1}
            K num = one;
            for (int i = 0; i < delta; ++i) num = num * g;
            K den = one;
            for (int i = 0; i < delta - 1; ++i) den = den * h;
            h = kdivex(num, den);
        }
        if (B.deg() == 0) {
            // res = sign * lc(B)^{deg A} / h^{deg A - 1}
            K num = one;
            for (int i = 0; i < A.deg(); ++i) num = num * B.lc();
            K den = one;
            for (int i = 0; i < A.deg() - 1; ++i) den = den * h;
            return sign * kdivex(num, den);
        }
    }
}

template <class K>
K discriminant(const Poly<K>& f) {
    if (f.deg() < 1) throw std::domain_error("discriminant needs degree >= 1");
    if (f.deg() == 1) return kone(f.sample);
    K res = resultant(f, f.derivative());
    long d = f.deg();
    bool negate = ((d * (d - 1) / 2) % 2) != 0;
    K out = kdivex(res, f.lc());
    return negate ? kzero(f.sample) - out : out;
}

} // namespace dcl
