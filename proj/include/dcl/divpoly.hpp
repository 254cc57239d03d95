#pragma once

// Division polynomials f_n of y^2 = x^3 + a x + b, by the classical
// recursion (f_1 = 1, f_2 = 2, explicit f_3, f_4, then the f_{2m},
// f_{4m+1}, f_{4m+3} rules).

#include <stdexcept>
#include <vector>

#include "dcl/poly.hpp"

namespace dcl {

inline Poly<BigRat> elliptic_division_poly(int n, const BigRat& a, const BigRat& b) {
    if (n < 1) throw std::invalid_argument("division polynomial index must be >= 1");
    using P = Poly<BigRat>;
    BigRat s(0);
    auto C = [&](const BigRat& v) { return P::constant(v); };
    P x = P::x(s);
    P cubic = x.pow(3) + x * a + C(b); // x^3 + a x + b
    P cubic2 = cubic * cubic;

    std::vector<P> f;
    f.reserve(n + 3);
    f.push_back(P(s));    // f_0 = 0
    f.push_back(C(BigRat(1)));
    f.push_back(C(BigRat(2)));
    // f_3 = 3x^4 + 6a x^2 + 12b x - a^2
    f.push_back(x.pow(4) * BigRat(3) + x.pow(2) * (BigRat(6) * a) + x * (BigRat(12) * b) - C(a * a));
    // f_4 = 4x^6 + 20a x^4 + 80b x^3 - 20a^2 x^2 - 16ab x - 4a^3 - 32b^2
    f.push_back(x.pow(6) * BigRat(4) + x.pow(4) * (BigRat(20) * a) + x.pow(3) * (BigRat(80) * b)
                - x.pow(2) * (BigRat(20) * a * a) - x * (BigRat(16) * a * b)
                - C(BigRat(4) * a * a * a + BigRat(32) * b * b));

    for (int k = 5; k <= n; ++k) {
        P next(s);
        if (k % 2 == 0) {
            int m = k / 2;
            next = f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]) * BigRat(1, 2);
        } else if (k % 4 == 1) {
            int m = (k - 1) / 4;
            next = cubic2 * f[2 * m + 2] * f[2 * m].pow(3) - f[2 * m - 1] * f[2 * m + 1].pow(3);
        } else {
            int m = (k - 3) / 4;
            next = f[2 * m + 3] * f[2 * m + 1].pow(3) - cubic2 * f[2 * m] * f[2 * m + 2].pow(3);
        }
        f.push_back(next);
    }
    return f[n];
}

} // namespace dcl
