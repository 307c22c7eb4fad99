#include <catch2/catch_amalgamated.hpp>

#include "ci610/hilbert.hpp"
#include "ci610/rng.hpp"
#include "ci610/sampling.hpp"
#include "ci610/scan.hpp"
#include "ci610/surface.hpp"

using namespace ci610;

namespace {

SurfacePair<Rat> diagonal_pair() {
    return {parse_wpoly_q("Z0^2 + Y0^3 + Y1^3 + X0^6"),
            parse_wpoly_q("U0^2 + Y0^5 + Y1^5 + X0^10")};
}

template <typename F>
NormalFormParams<F> random_params(Rng& rng, const F& proto) {
    auto tern = [&](int d) {
        auto basis = monomial_basis<TernRing>(d);
        std::vector<F> c;
        for (std::size_t i = 0; i < basis.size(); ++i)
            c.push_back(scalar_from_int<F>(rng.uniform(-4, 4), proto));
        return TernForm<F>::from_coeffs(d, c, proto);
    };
    return {scalar_from_int<F>(rng.uniform(-3, 3), proto), tern(3), tern(3), tern(5)};
}

} // namespace

TEST_CASE("pair validation flags") {
    auto good = diagonal_pair();
    auto r = validate_pair(good);
    CHECK(r.z0sq_nonzero);
    CHECK(r.u0sq_nonzero);
    CHECK(r.degrees_ok);
    CHECK(r.all());

    SurfacePair<Rat> no_z{parse_wpoly_q("Y0^3 + Y1^3 + X0^6"), good.g10};
    CHECK_FALSE(validate_pair(no_z).z0sq_nonzero);

    SurfacePair<Rat> no_u{good.f6, parse_wpoly_q("Y0^5 + Y1^5 + X0^10")};
    CHECK_FALSE(validate_pair(no_u).u0sq_nonzero);

    SurfacePair<Rat> bad_deg{parse_wpoly_q("Z0^2 + Y0^2"), good.g10};
    CHECK_FALSE(validate_pair(bad_deg).degrees_ok);
}

TEST_CASE("normalize: already-normal input gets the identity certificate") {
    Rng rng(5);
    auto params = random_params<Rat>(rng, Rat(0));
    auto pair = params.expand();
    auto [nf, cert] = normalize(pair);
    CHECK(nf.expand().f6 == pair.f6);
    CHECK(nf.expand().g10 == pair.g10);
    CHECK(cert.u == Rat(1));
    CHECK(cert.v == Rat(1));
    CHECK(cert.h.is_zero());
    for (std::size_t i = 0; i < WRing::nvars; ++i)
        CHECK(cert.psi.images()[i] == WPoly<Rat>::variable(i, Rat(1)));
}

TEST_CASE("normalize removes Z0*U0 terms and certifies the reduction") {
    SurfacePair<Rat> p{
        parse_wpoly_q("Z0^2 + 2*X0*U0 + Y0^3 + Y1^3 + X0^6"),
        parse_wpoly_q("U0^2 + 3*Y0*Z0*U0 + Y0^5 + 2*Y1^5 + X0^10 + X0^2*Z0*U0 + Y0^2*Z0^2"
                      " + 2*X0*Z0^3"),
    };
    auto [nf, cert] = normalize(p);
    auto np = nf.expand();
    CHECK(cert.verify(p, np));
    for (const auto& [m, c] : np.g10.terms()) {
        CHECK(m.e[wvar::Z0] <= 1);
        CHECK_FALSE((m.e[wvar::Z0] == 1 && m.e[wvar::U0] >= 1));
    }
}

TEST_CASE("normalize completes the square in Z0") {
    SurfacePair<Rat> p{
        parse_wpoly_q("Z0^2 + X0^3*Z0 + X0*U0 + Y0^3"),
        parse_wpoly_q("U0^2 + Y0^5 + 3*Y1^5 + X0^10"),
    };
    auto [nf, cert] = normalize(p);
    auto np = nf.expand();
    CHECK(cert.verify(p, np));
    CHECK(detail::cofactor_of(np.f6, wvar::Z0, 1).is_zero());
}

TEST_CASE("normalize handles scaled leading coefficients") {
    SurfacePair<Rat> p{
        parse_wpoly_q("3*Z0^2 + Y0^3 + Y1^3 + X0^6 + X0*Y0*Z0"),
        parse_wpoly_q("-2*U0^2 + Y0^5 + Y1^5 + X0^10 + Y1*Z0*U0"),
    };
    auto [nf, cert] = normalize(p);
    CHECK(cert.u == Rat(1, 3));
    CHECK(cert.v == Rat(-1, 2));
    CHECK(cert.verify(p, nf.expand()));
}

TEST_CASE("normalize is idempotent") {
    Rng rng(12);
    for (int trial = 0; trial < 5; ++trial) {
        auto params = random_params<Rat>(rng, Rat(0));
        auto pair = params.expand();
        auto [nf, cert] = normalize(pair);
        CHECK(nf.expand().f6 == pair.f6);
        CHECK(nf.expand().g10 == pair.g10);
    }
}

TEST_CASE("normalization preserves the quotient ring dimensions") {
    SurfacePair<Rat> p{
        parse_wpoly_q("2*Z0^2 + X0^3*Z0 + X0*U0 + Y0^3 + 2*Y1^3 + X0^6"),
        parse_wpoly_q("U0^2 + 2*Y0*Z0*U0 + Y0^5 + 3*Y1^5 + X0^10 + Y0^2*Z0^2"),
    };
    auto [nf, cert] = normalize(p);
    auto np = nf.expand();
    for (int n = 0; n <= 12; ++n)
        CHECK(quotient_dim_oracle(p.f6, p.g10, n) == quotient_dim_oracle(np.f6, np.g10, n));
}

TEST_CASE("normalize rejects invalid input") {
    SurfacePair<Rat> no_z{parse_wpoly_q("Y0^3 + Y1^3 + X0^6"),
                          parse_wpoly_q("U0^2 + Y0^5")};
    CHECK_THROWS_AS(normalize(no_z), PreconditionError);
}

TEST_CASE("normalize certifies over prime fields too") {
    for (std::int64_t p : {7, 11}) {
        Fp proto(0, p);
        SurfacePair<Fp> pair{
            parse_wpoly<Fp>("3*Z0^2 + X0^3*Z0 + 2*X0*U0 + Y0^3 + Y1^3 + X0^6", proto),
            parse_wpoly<Fp>("2*U0^2 + 3*Y0*Z0*U0 + Y0^5 + 2*Y1^5 + X0^10 + X0*Z0^3", proto),
        };
        auto [nf, cert] = normalize(pair);
        auto np = nf.expand();
        CHECK(cert.verify(pair, np));
        auto [nf2, cert2] = normalize(np);
        CHECK(nf2.expand().f6 == np.f6);
        CHECK(cert2.h.is_zero());
    }
}

TEST_CASE("base locus test") {
    CHECK_FALSE(base_locus_empty(diagonal_pair())); // gcd Y0 + Y1

    SurfacePair<Rat> twisted{parse_wpoly_q("Z0^2 + Y0^3 + Y1^3 + X0^6"),
                             parse_wpoly_q("U0^2 + Y0^5 + 2*Y1^5 + X0^10")};
    CHECK(base_locus_empty(twisted));

    SurfacePair<Rat> coords{parse_wpoly_q("Z0^2 + Y0^3"), parse_wpoly_q("U0^2 + Y1^5")};
    CHECK(base_locus_empty(coords));

    SurfacePair<Rat> invalid{parse_wpoly_q("Y0^3"), parse_wpoly_q("U0^2 + Y1^5")};
    CHECK_THROWS_AS(base_locus_empty(invalid), PreconditionError);
}

TEST_CASE("canonical image: cubic branch") {
    Rng rng(31);
    auto params = random_params<Rat>(rng, Rat(0));
    params.alpha0 = Rat(0);
    auto hyp = canonical_image(params);
    CHECK(hyp.degree == 3);
    CHECK(hyp.verify_certificate(params.expand()));

    // equation is xi0 zeta0^2 + alpha3(xi0, eta0, eta1), nothing else
    P3Poly<Rat> expected(Rat(0));
    {
        const Rat one(1);
        std::array<P3Poly<Rat>, 3> args = {P3Poly<Rat>::variable(0, one),
                                           P3Poly<Rat>::variable(1, one),
                                           P3Poly<Rat>::variable(2, one)};
        expected = P3Poly<Rat>::variable(0, one) * P3Poly<Rat>::variable(3, one) *
                       P3Poly<Rat>::variable(3, one) +
                   params.alpha3.expand<P3Ring>(args);
    }
    CHECK(hyp.equation == expected);
    auto md = canonical_map_degree(params);
    CHECK(md.map_degree == 2);
    CHECK(md.image_degree == 3);
}

TEST_CASE("canonical image: sextic branch with exact membership certificate") {
    Rng rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        auto params = random_params<Rat>(rng, Rat(0));
        if (is_zero(params.alpha0)) params.alpha0 = Rat(1);
        auto hyp = canonical_image(params);
        CHECK(hyp.degree == 6);
        CHECK(hyp.verify_certificate(params.expand()));
        auto md = canonical_map_degree(params);
        CHECK(md.map_degree == 1);
        CHECK(md.image_degree == 6);
        CHECK(md.map_degree * md.image_degree <= 9);
    }
}

TEST_CASE("canonical image certificates over prime fields") {
    for (std::int64_t p : {7, 11, 13}) {
        Fp proto(0, p);
        Rng rng(40 + static_cast<std::uint64_t>(p));
        for (int trial = 0; trial < 5; ++trial) {
            auto params = random_params<Fp>(rng, proto);
            auto hyp = canonical_image(params);
            CHECK(hyp.verify_certificate(params.expand()));
        }
    }
}

TEST_CASE("pair file text round-trip") {
    auto p = diagonal_pair();
    auto q = parse_pair_text<Rat>(format_pair_text(p), Rat(0));
    CHECK(p.f6 == q.f6);
    CHECK(p.g10 == q.g10);
    CHECK_THROWS_AS(parse_pair_text<Rat>("f6: Z0^2\n", Rat(0)), PreconditionError);
    auto with_comment = parse_pair_text<Rat>("# comment\nf6: Z0^2\n\ng10: U0^2\n", Rat(0));
    CHECK(with_comment.f6 == parse_wpoly_q("Z0^2"));
}

TEST_CASE("base locus emptiness is a group invariant") {
    // the moduli action permutes/rescales Y0, Y1, which preserves the
    // resultant's vanishing; checked here on a scaled/swapped pair
    auto p = diagonal_pair();
    SurfacePair<Rat> swapped{parse_wpoly_q("Z0^2 + Y1^3 + Y0^3 + X0^6"),
                             parse_wpoly_q("U0^2 + Y1^5 + Y0^5 + X0^10")};
    CHECK(base_locus_empty(p) == base_locus_empty(swapped));
}
