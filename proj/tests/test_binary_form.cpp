#include <catch2/catch_amalgamated.hpp>

#include "ci610/binary_form.hpp"
#include "ci610/rng.hpp"

using namespace ci610;

namespace {

// Forms in (Y0, Y1): coeff(e) multiplies Y0^(d-e) Y1^e.
BinaryForm<Rat> form(int degree, std::initializer_list<long> coeffs) {
    BinaryForm<Rat> f(degree, Rat(0));
    int e = 0;
    for (long c : coeffs) f.set_coeff(e++, Rat(c));
    return f;
}

BinaryForm<Rat> random_form(Rng& rng, int degree) {
    BinaryForm<Rat> f(degree, Rat(0));
    for (int e = 0; e <= degree; ++e) f.set_coeff(e, Rat(rng.uniform(-4, 4)));
    return f;
}

} // namespace

TEST_CASE("resultant detects shared projective zeros") {
    auto y03_plus_y13 = form(3, {1, 0, 0, 1});
    auto y05_plus_y15 = form(5, {1, 0, 0, 0, 0, 1});
    CHECK(is_zero(binary_resultant(y03_plus_y13, y05_plus_y15))); // gcd = Y0 + Y1

    auto y05_plus_2y15 = form(5, {1, 0, 0, 0, 0, 2});
    CHECK_FALSE(is_zero(binary_resultant(y03_plus_y13, y05_plus_2y15)));

    auto y0_cubed = form(3, {1, 0, 0, 0});
    auto y1_fifth = form(5, {0, 0, 0, 0, 0, 1});
    CHECK_FALSE(is_zero(binary_resultant(y0_cubed, y1_fifth)));
}

TEST_CASE("gcd of binary forms") {
    auto g = binary_gcd(form(3, {1, 0, 0, 1}), form(5, {1, 0, 0, 0, 0, 1}));
    CHECK(g == form(1, {1, 1})); // Y0 + Y1, monic

    auto f = form(4, {0, 3, 6, 0, 0}); // 3 Y0^3 Y1 + 6 Y0^2 Y1^2
    auto gf = binary_gcd(f, f);
    CHECK(gf.degree() == 4);
    CHECK(gf == f.scaled(Rat(1, 6))); // monic multiple of f

    CHECK(binary_gcd(form(1, {1, 0}), form(1, {0, 1})).degree() == 0); // gcd(Y0, Y1) = 1
    CHECK(binary_gcd(form(2, {0, 0, 0}), form(2, {0, 1, 0})) == form(2, {0, 1, 0}));
    CHECK_THROWS_AS(binary_gcd(form(1, {0, 0}), form(2, {0, 0, 0})), PreconditionError);
}

TEST_CASE("resultant vanishes exactly when the gcd has positive degree") {
    Rng rng(101);
    int zero_cases = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int m = static_cast<int>(rng.uniform(1, 4));
        int n = static_cast<int>(rng.uniform(1, 5));
        BinaryForm<Rat> f(m, Rat(0)), g(n, Rat(0));
        if (trial % 3 == 0) {
            // construct a shared root: common linear factor
            auto l = random_form(rng, 1);
            if (l.is_zero()) continue;
            f = l * random_form(rng, m - 1);
            g = l * random_form(rng, n - 1);
        } else {
            f = random_form(rng, m);
            g = random_form(rng, n);
        }
        if (f.is_zero() || g.is_zero()) continue;
        bool res_zero = is_zero(binary_resultant(f, g));
        bool gcd_pos = binary_gcd(f, g).degree() >= 1;
        CHECK(res_zero == gcd_pos);
        zero_cases += res_zero;
    }
    CHECK(zero_cases >= 20); // the constructed common-root cases actually hit
}

TEST_CASE("resultant requires positive degree tags") {
    BinaryForm<Rat> c(0, Rat(0));
    c.set_coeff(0, Rat(2));
    CHECK_THROWS_AS(binary_resultant(c, form(2, {1, 0, 1})), PreconditionError);
}

TEST_CASE("resultant over a prime field") {
    BinaryForm<Fp> f(2, Fp(0, 7)), g(2, Fp(0, 7));
    f.set_coeff(0, Fp(1, 7)); // Y0^2 - Y1^2 = (Y0-Y1)(Y0+Y1)
    f.set_coeff(2, Fp(-1, 7));
    g.set_coeff(1, Fp(1, 7)); // Y0 Y1
    CHECK_FALSE(is_zero(binary_resultant(f, g)));
    g.set_coeff(1, Fp(0, 7));
    g.set_coeff(0, Fp(1, 7));
    g.set_coeff(2, Fp(-1, 7));
    CHECK(is_zero(binary_resultant(f, g)));
}
