#pragma once

#include <cstdint>
#include <vector>

#include "ci610/errors.hpp"
#include "ci610/linalg.hpp"
#include "ci610/poly.hpp"

namespace ci610 {

// Coefficients of 1 / prod_i (1 - t^w_i) through degree n_max, i.e. the
// number of weight-(1,2,2,3,5) monomials in each degree.
inline std::vector<std::int64_t> weighted_monomial_counts(int n_max) {
    if (n_max < 0) throw PreconditionError("negative degree bound");
    std::vector<std::int64_t> c(static_cast<std::size_t>(n_max) + 1, 0);
    c[0] = 1;
    for (int w : WRing::weights)
        for (int n = w; n <= n_max; ++n) c[n] += c[n - w];
    return c;
}

struct HilbertData {
    static constexpr std::array<int, 5> weights = WRing::weights;
    static constexpr std::array<int, 2> relation_degrees{6, 10};

    std::vector<std::int64_t> coeffs; // c_0 .. c_N

    std::int64_t at(int n) const {
        if (n < 0 || n >= static_cast<int>(coeffs.size())) return 0;
        return coeffs[static_cast<std::size_t>(n)];
    }
};

// chi(O_S(nL)) = chi(O_S) + (nL)(nL-K)/2 with chi = 5, L^2 = 1, K = 3L.
inline std::int64_t chi_riemann_roch(std::int64_t n) { return 5 + n * (n - 3) / 2; }

// Series of (1-t^6)(1-t^10) / ((1-t)(1-t^2)^2(1-t^3)(1-t^5)).
inline HilbertData ci_hilbert_series(int n_max) {
    auto m = weighted_monomial_counts(n_max);
    HilbertData h;
    h.coeffs.resize(static_cast<std::size_t>(n_max) + 1, 0);
    auto mono_at = [&](int n) -> std::int64_t {
        return n < 0 ? 0 : m[static_cast<std::size_t>(n)];
    };
    const int d0 = HilbertData::relation_degrees[0];
    const int d1 = HilbertData::relation_degrees[1];
    for (int n = 0; n <= n_max; ++n)
        h.coeffs[n] = mono_at(n) - mono_at(n - d0) - mono_at(n - d1) + mono_at(n - d0 - d1);
    return h;
}

// Dimension of the degree-n part of F[X0,Y0,Y1,Z0,U0]/(f6,g10), computed by
// exact row reduction of the span { m*f6 } u { m*g10 } inside the degree-n
// monomial basis. Independent of the closed-form series, which it cross-checks.
template <typename F>
std::int64_t quotient_dim_oracle(const WPoly<F>& f6, const WPoly<F>& g10, int n,
                                 int degree_bound = 20) {
    if (!f6.is_homogeneous_of(6) || f6.is_zero())
        throw PreconditionError("quotient_dim_oracle: f6 must be homogeneous of degree 6");
    if (!g10.is_homogeneous_of(10) || g10.is_zero())
        throw PreconditionError("quotient_dim_oracle: g10 must be homogeneous of degree 10");
    if (n < 0) return 0;
    if (n > degree_bound)
        throw PreconditionError("quotient_dim_oracle: degree exceeds configured bound");

    auto basis_n = monomial_basis<WRing>(n);
    std::map<WMono, std::size_t, MonomialLess<WRing>> index;
    for (std::size_t i = 0; i < basis_n.size(); ++i) index.emplace(basis_n[i], i);

    const F zero = zero_like(f6.zero_proto());
    Matrix<F> rows;
    auto push_multiples = [&](const WPoly<F>& rel, int deg_rel) {
        if (n < deg_rel) return;
        for (const auto& m : monomial_basis<WRing>(n - deg_rel)) {
            std::vector<F> row(basis_n.size(), zero);
            for (const auto& [mono, c] : rel.terms()) row[index.at(m * mono)] = c;
            rows.push_back(std::move(row));
        }
    };
    push_multiples(f6, 6);
    push_multiples(g10, 10);

    std::size_t rk = rows.empty() ? 0 : rank_of(rows, one_like(f6.zero_proto()));
    return static_cast<std::int64_t>(basis_n.size()) - static_cast<std::int64_t>(rk);
}

} // namespace ci610
