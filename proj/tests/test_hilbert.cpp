#include <catch2/catch_amalgamated.hpp>

#include "ci610/hilbert.hpp"
#include "ci610/poly_text.hpp"
#include "ci610/sampling.hpp"

using namespace ci610;

TEST_CASE("Hilbert series of the (6,10) complete intersection") {
    auto h = ci_hilbert_series(20);
    CHECK(h.at(0) == 1);
    CHECK(h.at(6) == 14);
    CHECK(h.at(10) == 40);
    std::vector<std::int64_t> expected{1, 1, 3, 4, 7, 10, 14, 19, 25, 32, 40};
    for (int n = 0; n <= 10; ++n) CHECK(h.at(n) == expected[n]);
    for (int n = 0; n <= 20; ++n) CHECK(h.at(n) >= 0);
}

TEST_CASE("Riemann-Roch predictor") {
    CHECK(chi_riemann_roch(4) == 7);
    CHECK(chi_riemann_roch(7) == 19);
    CHECK(chi_riemann_roch(0) == 5);
    CHECK(chi_riemann_roch(3) == 5);
}

TEST_CASE("series matches Riemann-Roch from degree 4 on") {
    auto h = ci_hilbert_series(20);
    for (int n = 4; n <= 20; ++n) CHECK(h.at(n) == chi_riemann_roch(n));
}

TEST_CASE("Gorenstein symmetry c_n + c_{3-n} = 5 + n(n-3)/2") {
    auto h = ci_hilbert_series(20);
    for (int n = 0; n <= 20; ++n) CHECK(h.at(n) + h.at(3 - n) == chi_riemann_roch(n));
}

TEST_CASE("quotient dimension oracle on a generic valid pair") {
    auto f = parse_wpoly_q("Z0^2 + X0*U0 + Y0^3 + Y1^3 + X0^6");
    auto g = parse_wpoly_q("U0^2 + Y0^5 + 2*Y1^5 + X0^10");
    CHECK(quotient_dim_oracle(f, g, 5) == 10);
    CHECK(quotient_dim_oracle(f, g, 6) == 14);
    CHECK(quotient_dim_oracle(f, g, 8) == 25);
    CHECK(quotient_dim_oracle(f, g, 8) == chi_riemann_roch(8));
}

TEST_CASE("oracle preconditions") {
    auto f = parse_wpoly_q("Z0^2 + Y0^3");
    auto g = parse_wpoly_q("U0^2 + Y0^5");
    CHECK_THROWS_AS(quotient_dim_oracle(f, g, 21), PreconditionError);
    CHECK_THROWS_AS(quotient_dim_oracle(parse_wpoly_q("Z0^2 + Y0"), g, 6), PreconditionError);
    CHECK_THROWS_AS(quotient_dim_oracle(f, parse_wpoly_q("U0^2 + Y0"), 6), PreconditionError);
}

TEST_CASE("non-regular sequences are detected at degree 10") {
    auto f = parse_wpoly_q("Z0^2 + X0*U0 + Y0^3 + Y1^3 + X0^6");
    auto g_bad = f * parse_wpoly_q("Y0^2 + X0*Z0"); // g10 in the ideal (f6)
    auto series = ci_hilbert_series(12);
    CHECK(quotient_dim_oracle(f, g_bad, 10) != series.at(10));
    for (int n = 6; n <= 9; ++n) CHECK(quotient_dim_oracle(f, g_bad, n) == series.at(n));
}

TEST_CASE("oracle agrees with the series for sampled valid pairs") {
    auto series = ci_hilbert_series(12);
    for (std::uint64_t seed : {2u, 3u, 4u}) {
        auto rs = random_surface<Rat>(seed, Rat(0));
        for (int n = 0; n <= 12; ++n)
            CHECK(quotient_dim_oracle(rs.pair.f6, rs.pair.g10, n) == series.at(n));
    }
}
