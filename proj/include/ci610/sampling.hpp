#pragma once

#include <cstdint>

#include "ci610/hilbert.hpp"
#include "ci610/rng.hpp"
#include "ci610/surface.hpp"

namespace ci610 {

template <typename F>
struct RandomSurface {
    NormalFormParams<F> params;
    SurfacePair<F> pair;
    int tries = 0;
    bool base_locus_ok = false;
    bool regular_sequence_ok = false;
};

namespace detail {

template <typename F>
TernForm<F> random_tern_form(Rng& rng, int degree, const F& proto) {
    auto basis = monomial_basis<TernRing>(degree);
    std::vector<F> coeffs;
    coeffs.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        coeffs.push_back(scalar_from_int<F>(rng.uniform(-3, 3), proto));
    return TernForm<F>::from_coeffs(degree, coeffs, proto);
}

} // namespace detail

// True when (f6, g10) is a regular sequence as far as the quotient
// dimensions can tell: the row-reduction oracle must agree with the
// closed-form series through degree 12 (degree 10 is where a g10 that is a
// multiple of f6 first shows up).
template <typename F>
bool regular_sequence_check(const SurfacePair<F>& pair, int max_degree = 12) {
    auto series = ci_hilbert_series(max_degree);
    for (int n = 6; n <= max_degree; ++n)
        if (quotient_dim_oracle(pair.f6, pair.g10, n) != series.at(n)) return false;
    return true;
}

// Seeded random normal-form surface with small integer coefficients,
// rejection-sampled until the pair passes validation, the base-locus test
// and the regular-sequence check.
template <typename F>
RandomSurface<F> random_surface(std::uint64_t seed, const F& proto, int max_tries = 200) {
    Rng rng(seed);
    for (int attempt = 1; attempt <= max_tries; ++attempt) {
        NormalFormParams<F> params{
            scalar_from_int<F>(rng.uniform(-3, 3), proto),
            detail::random_tern_form(rng, 3, proto),
            detail::random_tern_form(rng, 3, proto),
            detail::random_tern_form(rng, 5, proto),
        };
        RandomSurface<F> out{params, params.expand(), attempt, false, false};
        if (!validate_pair(out.pair).all()) continue;
        out.base_locus_ok = base_locus_empty(out.pair);
        if (!out.base_locus_ok) continue;
        out.regular_sequence_ok = regular_sequence_check(out.pair);
        if (!out.regular_sequence_ok) continue;
        return out;
    }
    throw Error("random_surface: sampling budget exhausted after " +
                std::to_string(max_tries) + " tries");
}

} // namespace ci610
