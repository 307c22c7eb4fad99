#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ci610/errors.hpp"
#include "ci610/substitution.hpp"
#include "ci610/surface.hpp"

namespace ci610 {

// Point of the 34-parameter family
//   f6  = Z0^2 + X0 U0 + Y0^3 + Y1^3 + a0 X0^2 Y0 Y1 + X0^4 (a1 Y0 + a2 Y1) + X0^6
//   g10 = U0^2 + beta3(X0^2,Y0,Y1) X0 Z0 + beta5(X0^2,Y0,Y1).
template <typename F>
struct VPrimeParams {
    F a0, a1, a2;
    TernForm<F> beta3; // degree 3
    TernForm<F> beta5; // degree 5

    static constexpr int total_parameters = 34;

    SurfacePair<F> expand() const {
        const F one = one_like(a0);
        std::array<WPoly<F>, 3> args = {
            WPoly<F>::term(detail::mono(2, 0, 0, 0, 0), one),
            WPoly<F>::variable(wvar::Y0, one),
            WPoly<F>::variable(wvar::Y1, one),
        };
        WPoly<F> f = WPoly<F>::term(detail::mono(0, 0, 0, 2, 0), one);
        f.add_term(detail::mono(1, 0, 0, 0, 1), one);
        f.add_term(detail::mono(0, 3, 0, 0, 0), one);
        f.add_term(detail::mono(0, 0, 3, 0, 0), one);
        f.add_term(detail::mono(2, 1, 1, 0, 0), a0);
        f.add_term(detail::mono(4, 1, 0, 0, 0), a1);
        f.add_term(detail::mono(4, 0, 1, 0, 0), a2);
        f.add_term(detail::mono(6, 0, 0, 0, 0), one);
        WPoly<F> g = WPoly<F>::term(detail::mono(0, 0, 0, 0, 2), one);
        g += beta3.template expand<WRing>(args) *
             WPoly<F>::term(detail::mono(1, 0, 0, 1, 0), one);
        g += beta5.template expand<WRing>(args);
        return {f, g};
    }

    static std::optional<VPrimeParams> from_pair(const SurfacePair<F>& p) {
        const F zero = zero_like(p.f6.zero_proto());
        const F one = one_like(zero);
        VPrimeParams out{zero, zero, zero, TernForm<F>(3, zero), TernForm<F>(5, zero)};
        for (const auto& [m, c] : p.f6.terms()) {
            auto is = [&](int x0, int y0, int y1, int z0, int u0) {
                return m.e == detail::mono(x0, y0, y1, z0, u0).e;
            };
            if (is(0, 0, 0, 2, 0) || is(1, 0, 0, 0, 1) || is(0, 3, 0, 0, 0) ||
                is(0, 0, 3, 0, 0) || is(6, 0, 0, 0, 0)) {
                if (c != one) return std::nullopt;
            } else if (is(2, 1, 1, 0, 0)) {
                out.a0 = c;
            } else if (is(4, 1, 0, 0, 0)) {
                out.a1 = c;
            } else if (is(4, 0, 1, 0, 0)) {
                out.a2 = c;
            } else {
                return std::nullopt;
            }
        }
        for (WMono m : {detail::mono(0, 0, 0, 2, 0), detail::mono(1, 0, 0, 0, 1),
                        detail::mono(0, 3, 0, 0, 0), detail::mono(0, 0, 3, 0, 0),
                        detail::mono(6, 0, 0, 0, 0)})
            if (p.f6.coeff(m) != one) return std::nullopt;

        auto nf = NormalFormParams<F>::from_pair(p);
        if (!nf) return std::nullopt;
        out.beta3 = nf->beta3;
        out.beta5 = nf->beta5;
        return out;
    }

    std::vector<F> coeff_vector() const {
        std::vector<F> v{a0, a1, a2};
        for (const auto& c : beta3.coeffs()) v.push_back(c);
        for (const auto& c : beta5.coeffs()) v.push_back(c);
        return v;
    }

    friend bool operator==(const VPrimeParams& x, const VPrimeParams& y) {
        return x.a0 == y.a0 && x.a1 == y.a1 && x.a2 == y.a2 && x.beta3 == y.beta3 &&
               x.beta5 == y.beta5;
    }
};

struct ParamCounts {
    int full;
    int vprime;
    int finite_group;
};

namespace detail {

// The Y-plane part of <sigma, tau>: maps Y_i -> omega^{p_i} Y_{pi(i)},
// stored as (swap, p0, p1). Closure under composition gives the group order.
struct YAction {
    int swap, p0, p1;
    bool operator<(const YAction& o) const {
        return std::tie(swap, p0, p1) < std::tie(o.swap, o.p0, o.p1);
    }
};

inline YAction compose_y(const YAction& a, const YAction& b) {
    // apply b first, then a
    YAction r{};
    r.swap = (a.swap + b.swap) % 2;
    int a_on_b0 = b.swap ? a.p1 : a.p0; // phase a adds to whatever b sent slot 0 to
    int a_on_b1 = b.swap ? a.p0 : a.p1;
    r.p0 = (b.p0 + a_on_b0) % 3;
    r.p1 = (b.p1 + a_on_b1) % 3;
    return r;
}

inline int sigma_tau_closure_order() {
    std::set<YAction> seen{YAction{0, 0, 0}};
    std::vector<YAction> gens{{0, 1, 2}, {1, 0, 0}}; // sigma, tau
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<YAction> cur(seen.begin(), seen.end());
        for (const auto& x : cur)
            for (const auto& g : gens)
                if (seen.insert(compose_y(g, x)).second) grew = true;
    }
    return static_cast<int>(seen.size());
}

} // namespace detail

// All three counts derived by enumeration: the alpha3/beta3/beta5 spaces by
// monomial counting, the finite part as |<sigma,tau>| * |(Z/3)^2| * |Z/2|.
inline ParamCounts param_counts() {
    int n3 = static_cast<int>(monomial_basis<TernRing>(3).size());
    int n5 = static_cast<int>(monomial_basis<TernRing>(5).size());
    return {1 + 2 * n3 + n5, 3 + n3 + n5, detail::sigma_tau_closure_order() * 3 * 3 * 2};
}

// Element rho o Psi with rho = sigma^s tau^t in <sigma, tau> and
// Psi = Psi_(lambda0, lambda1, mu0, a): X0 -> a X0, Y_i -> omega^lambda_i a^2 Y_i,
// Z0 -> (-1)^mu0 a^3 Z0, U0 -> a^5 U0.
template <typename F>
struct GroupElement {
    int sigma_pow = 0; // mod 3
    int tau_pow = 0;   // mod 2
    int lambda0 = 0;   // mod 3
    int lambda1 = 0;   // mod 3
    int mu0 = 0;       // mod 2
    F a;

    static GroupElement identity(const F& proto) {
        return GroupElement{0, 0, 0, 0, 0, one_like(proto)};
    }
};

// The 6 * 9 * 2 = 108 finite-part elements (scale factor a = 1).
template <typename F>
std::vector<GroupElement<F>> finite_group_elements(const F& proto) {
    std::vector<GroupElement<F>> out;
    const F one = one_like(proto);
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 2; ++t)
            for (int l0 = 0; l0 < 3; ++l0)
                for (int l1 = 0; l1 < 3; ++l1)
                    for (int m = 0; m < 2; ++m)
                        out.push_back(GroupElement<F>{s, t, l0, l1, m, one});
    return out;
}

template <typename F>
GradedSubstitution<F> group_substitution(const GroupElement<F>& g, const F& omega) {
    const F one = one_like(omega);
    auto omega_pow = [&](int k) {
        F r = one;
        for (int i = 0; i < ((k % 3) + 3) % 3; ++i) r = r * omega;
        return r;
    };
    auto a_pow = [&](int k) {
        F r = one;
        for (int i = 0; i < k; ++i) r = r * g.a;
        return r;
    };
    const F sign = g.mu0 % 2 ? -one : one;

    // phi = rho o Psi as functions, so Y0 first picks up omega^lambda0 a^2,
    // then rho permutes/twists.
    F y0_c = omega_pow(g.lambda0) * a_pow(2);
    F y1_c = omega_pow(g.lambda1) * a_pow(2);
    std::size_t y0_target, y1_target;
    if (g.tau_pow % 2) {
        y0_target = wvar::Y1;
        y1_target = wvar::Y0;
        y0_c = y0_c * omega_pow(2 * g.sigma_pow);
        y1_c = y1_c * omega_pow(g.sigma_pow);
    } else {
        y0_target = wvar::Y0;
        y1_target = wvar::Y1;
        y0_c = y0_c * omega_pow(g.sigma_pow);
        y1_c = y1_c * omega_pow(2 * g.sigma_pow);
    }

    typename GradedSubstitution<F>::Images ims = {
        WPoly<F>::variable(wvar::X0, one).scaled(g.a),
        WPoly<F>::variable(y0_target, one).scaled(y0_c),
        WPoly<F>::variable(y1_target, one).scaled(y1_c),
        WPoly<F>::variable(wvar::Z0, one).scaled(sign * a_pow(3)),
        WPoly<F>::variable(wvar::U0, one).scaled(a_pow(5)),
    };
    typename GradedSubstitution<F>::Images inv = {
        WPoly<F>::variable(wvar::X0, one).scaled(inverse(g.a)),
        WPoly<F>::variable(wvar::Y0, one), // fixed below
        WPoly<F>::variable(wvar::Y1, one),
        WPoly<F>::variable(wvar::Z0, one).scaled(inverse(sign * a_pow(3))),
        WPoly<F>::variable(wvar::U0, one).scaled(inverse(a_pow(5))),
    };
    // phi(Y0) = y0_c * Y_{y0_target}  =>  phi^{-1}(Y_{y0_target}) = Y0 / y0_c.
    inv[y0_target] = WPoly<F>::variable(wvar::Y0, one).scaled(inverse(y0_c));
    inv[y1_target] = WPoly<F>::variable(wvar::Y1, one).scaled(inverse(y1_c));
    return GradedSubstitution<F>(ims, inv);
}

// Product g * h acting as phi_g o phi_h. The sigma power folds into the
// lambdas (sigma = Psi_(1,2,0,1)), tau conjugation swaps them.
template <typename F>
GroupElement<F> canonicalized(const GroupElement<F>& g) {
    GroupElement<F> r = g;
    r.sigma_pow = 0;
    // sigma^s tau^t = tau^t sigma^{s'} with s' = 2^t s  (tau sigma tau = sigma^2)
    int s2 = (g.tau_pow % 2) ? (2 * g.sigma_pow) % 3 : g.sigma_pow % 3;
    r.lambda0 = (g.lambda0 + s2) % 3;
    r.lambda1 = (g.lambda1 + 2 * s2) % 3;
    return r;
}

template <typename F>
GroupElement<F> compose(const GroupElement<F>& g_, const GroupElement<F>& h_) {
    GroupElement<F> g = canonicalized(g_), h = canonicalized(h_);
    GroupElement<F> r = GroupElement<F>::identity(g.a);
    r.tau_pow = (g.tau_pow + h.tau_pow) % 2;
    int gl0 = g.lambda0, gl1 = g.lambda1;
    if (h.tau_pow % 2) std::swap(gl0, gl1); // tau^{-1} Psi_g tau
    r.lambda0 = (gl0 + h.lambda0) % 3;
    r.lambda1 = (gl1 + h.lambda1) % 3;
    r.mu0 = (g.mu0 + h.mu0) % 2;
    r.a = g.a * h.a;
    return r;
}

// Transform V' coefficients: substitute, renormalize the grading scale away
// (f by its Z0^2 coefficient, g by its U0^2 coefficient), read back.
template <typename F>
VPrimeParams<F> apply_group(const GroupElement<F>& g, const VPrimeParams<F>& v, const F& omega) {
    auto pair = v.expand();
    auto sub = group_substitution(g, omega);
    WPoly<F> f = sub.apply(pair.f6);
    WPoly<F> gg = sub.apply(pair.g10);
    f = f.scaled(inverse(f.coeff(detail::mono(0, 0, 0, 2, 0))));
    gg = gg.scaled(inverse(gg.coeff(detail::mono(0, 0, 0, 0, 2))));
    auto out = VPrimeParams<F>::from_pair({f, gg});
    if (!out)
        throw Error("apply_group: transformed pair left the V' shape (implementation bug)");
    return *out;
}

// Distinct images of v under the 108 finite-part elements.
template <typename F>
std::vector<VPrimeParams<F>> orbit(const VPrimeParams<F>& v, const F& omega) {
    std::set<std::string> seen;
    std::vector<VPrimeParams<F>> out;
    for (const auto& g : finite_group_elements(zero_like(omega))) {
        auto w = apply_group(g, v, omega);
        std::string key;
        for (const auto& c : w.coeff_vector()) key += to_string(c) + ";";
        if (seen.insert(key).second) out.push_back(w);
    }
    return out;
}

} // namespace ci610
