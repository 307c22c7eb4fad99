#include <catch2/catch_amalgamated.hpp>

#include "ci610/splitting.hpp"

using namespace ci610;

namespace {

BinaryForm<Rat> form(int degree, std::initializer_list<long> coeffs) {
    BinaryForm<Rat> f(degree, Rat(0));
    int e = 0;
    for (long c : coeffs) f.set_coeff(e++, Rat(c));
    return f;
}

} // namespace

TEST_CASE("splitting types are determined by their dimension function") {
    SplittingType a({1, 1, 5}), b({1, 2, 4});
    CHECK(a.rank() == 3);
    CHECK(a.degree() == 7);
    CHECK(a.h0_twist(1) == 7);
    CHECK(a != b);
    bool differ_somewhere = false;
    for (int k = -2; k <= 7; ++k) differ_somewhere |= a.h0_twist(k) != b.h0_twist(k);
    CHECK(differ_somewhere);
}

TEST_CASE("Euler sequence: cokernel of (T0, T1) is O(1)") {
    BundleMap<Rat> m(SplittingType({-1}), SplittingType({0, 0}), Rat(0));
    m.set_entry(0, 0, form(1, {1, 0}));
    m.set_entry(1, 0, form(1, {0, 1}));
    auto dims = twisted_section_dims(m, -1, -1);
    CHECK(dims[0] == 3); // h^0(O(1)(1)) = h^0(O(2))
    CHECK(cokernel_splitting(m) == SplittingType({1}));
    auto profile = twisted_section_dims(m, -3, 2);
    CHECK(profile == SplittingType({1}).dim_profile(-3, 2));
}

TEST_CASE("direct image splittings recovered from section dimensions") {
    // V1 data: h^0((5-k)L) with h^0(L) = 2, h^0(2L) = 3
    auto v1 = splitting_from_dims({7, 4, 3, 2, 1, 0}, 1, 3, 7);
    CHECK(v1 == SplittingType({1, 1, 5}));
    CHECK(SplittingType({1, 1, 5}).dim_profile(1, 6) ==
          std::vector<std::int64_t>{7, 4, 3, 2, 1, 0});

    // single summand
    SplittingType o4({4});
    CHECK(splitting_from_dims(o4.dim_profile(4, 6), 4, 1, 4) == o4);

    // V4 from its own profile, over the generic recovery window
    SplittingType v4({4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 16, 16, 20});
    CHECK(v4.rank() == 14);
    CHECK(v4.degree() == 151);
    CHECK(splitting_from_dims(v4.dim_profile(4, 22), 4, 14, 151) == v4);
}

TEST_CASE("rank and degree bookkeeping of V_n") {
    // rk V_n = 4n - 2, deg V_n = 7 + 12 n (n-1)
    SplittingType v2({2, 3, 4, 6, 6, 10});
    CHECK(v2.rank() == 4 * 2 - 2);
    CHECK(v2.degree() == 7 + 12 * 2 * 1);
    SplittingType v4({4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 16, 16, 20});
    CHECK(v4.rank() == 4 * 4 - 2);
    CHECK(v4.degree() == 7 + 12 * 4 * 3);
}

TEST_CASE("coprime column O(1) -> O(2) + O(3) has cokernel O(4)") {
    BundleMap<Rat> m(SplittingType({1}), SplittingType({2, 3}), Rat(0));
    m.set_entry(0, 0, form(1, {1, 1}));    // T0 + T1
    m.set_entry(1, 0, form(2, {1, 0, 1})); // T0^2 + T1^2, coprime to it
    auto cok = cokernel_splitting(m);
    CHECK(cok == SplittingType({4}));
    CHECK(twisted_section_dims(m, 0, 6) == SplittingType({4}).dim_profile(0, 6));
}

TEST_CASE("rank/degree of computed cokernels match target minus source") {
    BundleMap<Rat> m(SplittingType({1}), SplittingType({2, 3}), Rat(0));
    m.set_entry(0, 0, form(1, {2, 3}));
    m.set_entry(1, 0, form(2, {1, 1, 1}));
    auto cok = cokernel_splitting(m);
    CHECK(cok.rank() == m.target().rank() - m.source().rank());
    CHECK(cok.degree() == m.target().degree() - m.source().degree());
}

TEST_CASE("torsion is detected, not silently mislabeled") {
    // both entries divisible by l = T0 + T1: cokernel has torsion at the zero of l
    BundleMap<Rat> m(SplittingType({1}), SplittingType({2, 3}), Rat(0));
    m.set_entry(0, 0, form(1, {1, 1}));
    m.set_entry(1, 0, form(1, {1, 1}) * form(1, {1, -1}));
    CHECK_THROWS_AS(cokernel_splitting(m), TorsionError);
}

TEST_CASE("non-injective maps are rejected") {
    BundleMap<Rat> m(SplittingType({1, 1}), SplittingType({2, 3}), Rat(0));
    // both columns equal -> kernel
    m.set_entry(0, 0, form(1, {1, 2}));
    m.set_entry(1, 0, form(2, {0, 1, 1}));
    m.set_entry(0, 1, form(1, {1, 2}));
    m.set_entry(1, 1, form(2, {0, 1, 1}));
    CHECK_FALSE(m.is_injective());
    CHECK_THROWS_AS(twisted_section_dims(m, 0, 5), PreconditionError);
}

TEST_CASE("inconsistent profiles raise torsion errors") {
    CHECK_THROWS_AS(splitting_from_dims({5, 3, 2, 1}, 1, 2, 9), TorsionError);  // does not vanish
    CHECK_THROWS_AS(splitting_from_dims({4, 2, 1, 0}, 1, 3, 7), TorsionError);  // wrong rank
    CHECK_THROWS_AS(splitting_from_dims({7, 4, 3, 2, 1, 0}, 1, 3, 9), TorsionError); // wrong degree
}
