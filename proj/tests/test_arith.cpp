#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcl/divpoly.hpp"
#include "dcl/factorization.hpp"
#include "dcl/json_io.hpp"
#include "dcl/mpoly.hpp"
#include "dcl/numeric.hpp"
#include "dcl/poly.hpp"
#include "dcl/resultant.hpp"

using namespace dcl;

static PolyF fp_poly(const FqField& F, const std::vector<long>& c) {
    return PolyF::from_int(FFElem(F, 0), c);
}

TEST_CASE("root counting over prime fields") {
    FqField F5(5, 1);
    // x^3 - x has roots 0, 1, -1
    CHECK(ff_pow_frobenius_root_count(fp_poly(F5, {0, -1, 0, 1})) == 3);
    FqField F7(7, 1);
    // -1 is not a square mod 7
    CHECK(ff_pow_frobenius_root_count(fp_poly(F7, {1, 0, 1})) == 0);
    CHECK_THROWS(ff_pow_frobenius_root_count(PolyF(FFElem(F5, 0))));
}

TEST_CASE("root counting over F_125 against exhaustive evaluation") {
    FqField F(5, 3);
    PolyF f = fp_poly(F, {1, 1, 0, 1}); // x^3 + x + 1
    int direct = 0;
    for (uint64_t ix = 0; ix < F.q(); ++ix) {
        if (f.eval(FFElem::from_index(F, ix)).is_zero()) ++direct;
    }
    CHECK(ff_pow_frobenius_root_count(f) == direct);
}

TEST_CASE("factor partition basics") {
    FqField F5(5, 1);
    PolyF sq = fp_poly(F5, {1, 0, 1}); // x^2+1
    CHECK_FALSE(factor_partition(sq * sq).has_value());
    // x^8 - x splits as x (x-1) ... over F2: partition of x^2+x = x(x+1)
    FqField F2(2, 1);
    auto part = factor_partition(fp_poly(F2, {0, 1, 1}));
    REQUIRE(part.has_value());
    CHECK(part->str() == "1^2");
}

TEST_CASE("factor partition parts sum to degree (random squarefree)") {
    SplitMix64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        uint64_t ps[] = {2, 3, 5, 7, 11, 13, 97};
        FqField F(static_cast<int64_t>(ps[rng.below(7)]), 1);
        int deg = 1 + static_cast<int>(rng.below(28));
        PolyF f(FFElem(F, 0));
        f.c.resize(deg + 1, FFElem(F, 0));
        for (int i = 0; i < deg; ++i) f.c[i] = FFElem(F, static_cast<int64_t>(rng.below(static_cast<uint64_t>(F.p))));
        f.c[deg] = FFElem(F, 1);
        auto part = factor_partition(f);
        if (!part) continue;
        CHECK(part->total() == deg);
    }
}

TEST_CASE("full small factorization recombines") {
    FqField F2(2, 1);
    PolyF f = fp_poly(F2, {1, 0, 1, 0, 1, 0, 1}); // 1 + x^2 + x^4 + x^6
    auto fac = factor_full_small(f);
    int degsum = 0;
    for (auto& [g, m] : fac.factors) degsum += g.deg() * m;
    CHECK(degsum == 6);
    CHECK(recombine(fac, f.sample) == monic(f));

    SplitMix64 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        FqField F3(3, 1);
        int deg = 1 + static_cast<int>(rng.below(9));
        PolyF g(FFElem(F3, 0));
        g.c.resize(deg + 1, FFElem(F3, 0));
        for (int i = 0; i <= deg; ++i) g.c[i] = FFElem(F3, static_cast<int64_t>(rng.below(3)));
        g.normalize();
        if (g.deg() < 1) continue;
        auto fa = factor_full_small(g);
        CHECK(recombine(fa, g.sample) == g);
    }
}

TEST_CASE("resultant sign convention and symmetry") {
    BigRat s(0);
    PolyQ x = PolyQ::x(s);
    // Res(x - a, x - b) = a - b with the Sylvester convention
    PolyQ f = x - PolyQ::constant(BigRat(3)); // x - 3
    PolyQ g = x - PolyQ::constant(BigRat(5)); // x - 5
    CHECK(resultant(f, g) == BigRat(3) - BigRat(5));

    SplitMix64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        PolyQ a(s), b(s);
        int da = 1 + static_cast<int>(rng.below(5)), db = 1 + static_cast<int>(rng.below(5));
        for (int i = 0; i <= da; ++i) a.c.push_back(BigRat(rng.in_range(-6, 6)));
        for (int i = 0; i <= db; ++i) b.c.push_back(BigRat(rng.in_range(-6, 6)));
        a.normalize();
        b.normalize();
        if (a.deg() < 1 || b.deg() < 1) continue;
        BigRat r1 = resultant(a, b);
        BigRat r2 = resultant(b, a);
        BigRat sign = (a.deg() * b.deg()) % 2 ? BigRat(-1) : BigRat(1);
        CHECK(r1 == sign * r2);
    }
}

TEST_CASE("resultant multiplicativity oracle") {
    // Res(f, gh) = Res(f, g) Res(f, h)
    BigRat s(0);
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 15; ++trial) {
        PolyQ f(s), g(s), h(s);
        for (int i = 0; i <= 3; ++i) f.c.push_back(BigRat(rng.in_range(-5, 5)));
        for (int i = 0; i <= 2; ++i) g.c.push_back(BigRat(rng.in_range(-5, 5)));
        for (int i = 0; i <= 2; ++i) h.c.push_back(BigRat(rng.in_range(-5, 5)));
        f.normalize(); g.normalize(); h.normalize();
        if (f.deg() < 1 || g.deg() < 1 || h.deg() < 1) continue;
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
}

TEST_CASE("discriminant convention") {
    BigRat s(0);
    PolyQ x = PolyQ::x(s);
    // disc(x^2 + bx + c) = b^2 - 4c
    PolyQ f = x * x + x * BigRat(3) + PolyQ::constant(BigRat(1));
    CHECK(discriminant(f) == BigRat(5));
    // disc(x^3 + px + q) = -4p^3 - 27q^2
    PolyQ g = x.pow(3) - x * BigRat(2) + PolyQ::constant(BigRat(1));
    CHECK(discriminant(g) == BigRat(-4 * (-8) - 27));
}

TEST_CASE("division polynomials match the classical small cases") {
    BigRat a(-7), b(11);
    PolyQ f3 = elliptic_division_poly(3, a, b);
    BigRat s(0);
    PolyQ x = PolyQ::x(s);
    CHECK(f3 == x.pow(4) * BigRat(3) + x.pow(2) * (BigRat(6) * a) + x * (BigRat(12) * b) - PolyQ::constant(a * a));
    PolyQ f4 = elliptic_division_poly(4, a, b);
    PolyQ expect4 = x.pow(6) * BigRat(4) + x.pow(4) * (BigRat(20) * a) + x.pow(3) * (BigRat(80) * b)
                    - x.pow(2) * (BigRat(20) * a * a) - x * (BigRat(16) * a * b)
                    - PolyQ::constant(BigRat(4) * a * a * a + BigRat(32) * b * b);
    CHECK(f4 == expect4);
}

TEST_CASE("division polynomial degrees") {
    BigRat a(-1, 3), b(19, 108);
    CHECK(elliptic_division_poly(11, a, b).deg() == 60);
    for (int n = 3; n <= 12; ++n) {
        int expect = (n % 2) ? (n * n - 1) / 2 : (n * n - 4) / 2;
        CHECK(elliptic_division_poly(n, a, b).deg() == expect);
    }
    CHECK_THROWS(elliptic_division_poly(0, a, b));
}

TEST_CASE("mpoly ring laws on randomized inputs") {
    std::vector<std::string> vars{"x", "y", "z"};
    SplitMix64 rng(31337);
    auto random_poly = [&]() {
        MPoly p(vars);
        int nt = 1 + static_cast<int>(rng.below(6));
        for (int t = 0; t < nt; ++t) {
            ExpKey k;
            for (int v = 0; v < 3; ++v) k.set(v, static_cast<int>(rng.below(4)));
            MPoly term(vars);
            term.terms.emplace_back(k, BigRat(rng.in_range(-9, 9)));
            p = p + term;
        }
        return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
        MPoly f = random_poly(), g = random_poly(), h = random_poly();
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
    }
}

TEST_CASE("mpoly parser") {
    std::vector<std::string> vars{"x", "y"};
    MPoly p = MPoly::parse(vars, "15*x^2 - 4*y*x - 4*x + 5");
    std::vector<BigRat> pt{BigRat(2), BigRat(3)};
    CHECK(p.eval(pt) == BigRat(15 * 4 - 4 * 3 * 2 - 4 * 2 + 5));
    MPoly q = MPoly::parse(vars, "(x + y)^3 - x^3 - y^3 - 3*x*y*(x + y)");
    CHECK(q.is_zero());
}

TEST_CASE("json round trips") {
    BigRat s(0);
    PolyQ f = PolyQ::from_int(s, {1, -4, 0, 7});
    f.c[1] = BigRat(-4, 3);
    CHECK(poly_from_json(poly_to_json(f)) == f);

    std::vector<std::string> vars{"u", "v", "x"};
    MPoly m = MPoly::parse(vars, "3*u^2*x - 7*v + 1");
    CHECK(mpoly_from_json(mpoly_to_json(m)) == m);
}

TEST_CASE("F9 arithmetic") {
    FqField F9(3, 2);
    FFElem i = f9_i(F9);
    CHECK((i * i) == -FFElem(F9, 1));
    CHECK(f9_conj(i) == -i);
    // multiplicative order of the group is 8
    int count = 0;
    for (uint64_t ix = 1; ix < 9; ++ix) {
        FFElem a = FFElem::from_index(F9, ix);
        if (a.pow(8) == FFElem(F9, 1)) ++count;
    }
    CHECK(count == 8);
}
