#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ci610/binary_form.hpp"
#include "ci610/errors.hpp"
#include "ci610/poly.hpp"
#include "ci610/poly_text.hpp"
#include "ci610/substitution.hpp"

namespace ci610 {

template <typename F>
struct SurfacePair {
    WPoly<F> f6;
    WPoly<F> g10;
};

struct PairValidation {
    bool z0sq_nonzero = false;
    bool u0sq_nonzero = false;
    bool degrees_ok = false;

    bool all() const { return z0sq_nonzero && u0sq_nonzero && degrees_ok; }
};

namespace detail {

inline WMono mono(int x0, int y0, int y1, int z0, int u0) {
    WMono m;
    m.e = {x0, y0, y1, z0, u0};
    return m;
}

// Sum of terms with e[var] == k, with that variable divided out.
template <typename F>
WPoly<F> cofactor_of(const WPoly<F>& p, std::size_t var, int k) {
    WPoly<F> out(p.zero_proto());
    for (const auto& [m, c] : p.terms()) {
        if (m.e[var] != k) continue;
        WMono q = m;
        q.e[var] = 0;
        out.add_term(q, c);
    }
    return out;
}

// Quotient by Z0^2 of the Z0-degree >= 2 part.
template <typename F>
WPoly<F> z0sq_quotient(const WPoly<F>& p) {
    WPoly<F> out(p.zero_proto());
    for (const auto& [m, c] : p.terms()) {
        if (m.e[wvar::Z0] < 2) continue;
        WMono q = m;
        q.e[wvar::Z0] -= 2;
        out.add_term(q, c);
    }
    return out;
}

} // namespace detail

template <typename F>
PairValidation validate_pair(const SurfacePair<F>& p) {
    PairValidation r;
    r.degrees_ok = !p.f6.is_zero() && p.f6.is_homogeneous_of(6) && !p.g10.is_zero() &&
                   p.g10.is_homogeneous_of(10);
    r.z0sq_nonzero = !is_zero(p.f6.coeff(detail::mono(0, 0, 0, 2, 0)));
    r.u0sq_nonzero = !is_zero(p.g10.coeff(detail::mono(0, 0, 0, 0, 2)));
    return r;
}

// Homogeneous form in three unit-weight arguments, kept as a coefficient
// vector over the canonical monomial order of its degree.
template <typename F>
class TernForm {
public:
    TernForm(int degree, const F& zero_proto)
        : degree_(degree), poly_(zero_like(zero_proto)) {}
    TernForm(int degree, const TernPoly<F>& poly) : degree_(degree), poly_(poly) {
        if (!poly_.is_homogeneous_of(degree))
            throw PreconditionError("TernForm: polynomial is not homogeneous of degree " +
                                    std::to_string(degree));
    }

    static TernForm from_coeffs(int degree, const std::vector<F>& coeffs, const F& proto) {
        auto basis = monomial_basis<TernRing>(degree);
        if (coeffs.size() != basis.size())
            throw PreconditionError("TernForm: expected " + std::to_string(basis.size()) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
        TernForm f(degree, proto);
        for (std::size_t i = 0; i < basis.size(); ++i) f.poly_.add_term(basis[i], coeffs[i]);
        return f;
    }

    int degree() const { return degree_; }
    const TernPoly<F>& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    std::vector<F> coeffs() const {
        std::vector<F> out;
        for (const auto& m : monomial_basis<TernRing>(degree_)) out.push_back(poly_.coeff(m));
        return out;
    }

    void set_coeff(const Monomial<TernRing>& m, const F& v) {
        auto cur = poly_.coeff(m);
        poly_.add_term(m, v - cur);
    }

    // Evaluate the form on three homogeneous arguments in another ring.
    template <typename R2>
    Poly<R2, F> expand(const std::array<Poly<R2, F>, 3>& args) const {
        return poly_.template map_through<R2>(args);
    }

    friend bool operator==(const TernForm& a, const TernForm& b) {
        return a.degree_ == b.degree_ && a.poly_ == b.poly_;
    }

private:
    int degree_;
    TernPoly<F> poly_;
};

// Coefficients of the shape
//   f6  = Z0^2 + alpha0 * X0 U0 + alpha3(X0^2, Y0, Y1)
//   g10 = U0^2 + beta3(X0^2, Y0, Y1) * X0 Z0 + beta5(X0^2, Y0, Y1),
// 1 + 10 + 10 + 21 = 42 free parameters.
template <typename F>
struct NormalFormParams {
    F alpha0;
    TernForm<F> alpha3; // degree 3
    TernForm<F> beta3;  // degree 3
    TernForm<F> beta5;  // degree 5

    static constexpr int total_parameters = 42;

    SurfacePair<F> expand() const {
        const F one = one_like(alpha0);
        std::array<WPoly<F>, 3> args = {
            WPoly<F>::term(detail::mono(2, 0, 0, 0, 0), one),
            WPoly<F>::variable(wvar::Y0, one),
            WPoly<F>::variable(wvar::Y1, one),
        };
        WPoly<F> f = WPoly<F>::term(detail::mono(0, 0, 0, 2, 0), one);
        f.add_term(detail::mono(1, 0, 0, 0, 1), alpha0);
        f += alpha3.template expand<WRing>(args);
        WPoly<F> g = WPoly<F>::term(detail::mono(0, 0, 0, 0, 2), one);
        g += beta3.template expand<WRing>(args) *
             WPoly<F>::term(detail::mono(1, 0, 0, 1, 0), one);
        g += beta5.template expand<WRing>(args);
        return {f, g};
    }

    // Strict reader; nullopt when the pair is not literally in normal form.
    static std::optional<NormalFormParams> from_pair(const SurfacePair<F>& p) {
        const F zero = zero_like(p.f6.zero_proto());
        const F one = one_like(zero);
        NormalFormParams out{zero, TernForm<F>(3, zero), TernForm<F>(3, zero),
                             TernForm<F>(5, zero)};
        for (const auto& [m, c] : p.f6.terms()) {
            if (m.e == detail::mono(0, 0, 0, 2, 0).e) {
                if (c != one) return std::nullopt;
            } else if (m.e == detail::mono(1, 0, 0, 0, 1).e) {
                out.alpha0 = c;
            } else if (m.e[wvar::Z0] == 0 && m.e[wvar::U0] == 0 && m.e[wvar::X0] % 2 == 0) {
                Monomial<TernRing> t;
                t.e = {m.e[wvar::X0] / 2, m.e[wvar::Y0], m.e[wvar::Y1]};
                out.alpha3.set_coeff(t, c);
            } else {
                return std::nullopt;
            }
        }
        if (is_zero(p.f6.coeff(detail::mono(0, 0, 0, 2, 0)))) return std::nullopt;
        for (const auto& [m, c] : p.g10.terms()) {
            if (m.e == detail::mono(0, 0, 0, 0, 2).e) {
                if (c != one) return std::nullopt;
            } else if (m.e[wvar::U0] == 0 && m.e[wvar::Z0] == 1 && m.e[wvar::X0] % 2 == 1) {
                Monomial<TernRing> t;
                t.e = {(m.e[wvar::X0] - 1) / 2, m.e[wvar::Y0], m.e[wvar::Y1]};
                out.beta3.set_coeff(t, c);
            } else if (m.e[wvar::U0] == 0 && m.e[wvar::Z0] == 0 && m.e[wvar::X0] % 2 == 0) {
                Monomial<TernRing> t;
                t.e = {m.e[wvar::X0] / 2, m.e[wvar::Y0], m.e[wvar::Y1]};
                out.beta5.set_coeff(t, c);
            } else {
                return std::nullopt;
            }
        }
        if (is_zero(p.g10.coeff(detail::mono(0, 0, 0, 0, 2)))) return std::nullopt;
        return out;
    }
};

// Exact witness for the normal-form reduction:
//   f6' = u * (f6 o psi)     and     g10' = v * (g10 o psi) + h * (f6 o psi).
template <typename F>
struct NormalizationCertificate {
    GradedSubstitution<F> psi;
    F u, v;
    WPoly<F> h; // degree 4

    bool verify(const SurfacePair<F>& input, const SurfacePair<F>& normalized) const {
        WPoly<F> fpsi = psi.apply(input.f6);
        WPoly<F> gpsi = psi.apply(input.g10);
        return normalized.f6 == fpsi.scaled(u) &&
               normalized.g10 == gpsi.scaled(v) + h * fpsi;
    }
};

// Reduce a validated pair to normal form. Completing the square in Z0 and
// U0 plus reduction mod f6 only ever divides by 2 and 4, hence the
// characteristic-2 restriction.
template <typename F>
std::pair<NormalFormParams<F>, NormalizationCertificate<F>> normalize(const SurfacePair<F>& in) {
    auto rep = validate_pair(in);
    if (!rep.degrees_ok)
        throw PreconditionError("normalize: input degrees are not (6, 10)");
    if (!rep.z0sq_nonzero) throw PreconditionError("normalize: f6 has no Z0^2 term");
    if (!rep.u0sq_nonzero) throw PreconditionError("normalize: g10 has no U0^2 term");

    const F zero = zero_like(in.f6.zero_proto());
    const F one = one_like(zero);
    const F two = scalar_from_int<F>(2, zero);
    if (is_zero(two)) throw PreconditionError("normalize: characteristic 2 not supported");
    const F half = inverse(two);

    const F u = inverse(in.f6.coeff(detail::mono(0, 0, 0, 2, 0)));
    const F v = inverse(in.g10.coeff(detail::mono(0, 0, 0, 0, 2)));
    WPoly<F> f = in.f6.scaled(u);
    WPoly<F> g = in.g10.scaled(v);
    WPoly<F> h_rel(zero); // g = v * psi(g_in) + h_rel * f  throughout
    auto psi = GradedSubstitution<F>::identity(zero);

    auto apply_step = [&](const GradedSubstitution<F>& step) {
        f = step.apply(f);
        g = step.apply(g);
        h_rel = step.apply(h_rel);
        psi = psi.then(step);
    };
    auto reduce_g_mod_f = [&]() {
        WPoly<F> q = detail::z0sq_quotient(g);
        if (q.is_zero()) return;
        g -= q * f;
        h_rel -= q;
    };

    for (int round = 0; round < 8; ++round) {
        // Z0-linear part of f -> complete the square in Z0.
        WPoly<F> t3 = detail::cofactor_of(f, wvar::Z0, 1);
        if (!t3.is_zero())
            apply_step(GradedSubstitution<F>::shear(wvar::Z0, -t3.scaled(half), zero));
        reduce_g_mod_f();

        // U0-linear Z0-free part of g -> complete the square in U0.
        WPoly<F> w5 = detail::cofactor_of(g, wvar::U0, 1);
        WPoly<F> pure5 = detail::cofactor_of(w5, wvar::Z0, 0);
        if (!pure5.is_zero())
            apply_step(GradedSubstitution<F>::shear(wvar::U0, -pure5.scaled(half), zero));

        // Z0 U0 coefficient of g -> the paired Z0/U0 shear.
        WPoly<F> beta1 = detail::cofactor_of(detail::cofactor_of(g, wvar::U0, 1), wvar::Z0, 1);
        if (!beta1.is_zero()) {
            const F quarter = half * half;
            F a0 = f.coeff(detail::mono(1, 0, 0, 0, 1));
            WPoly<F> x0 = WPoly<F>::variable(wvar::X0, one);
            WPoly<F> z0 = WPoly<F>::variable(wvar::Z0, one);
            apply_step(GradedSubstitution<F>::shear(
                wvar::Z0, (beta1 * x0).scaled(a0 * quarter), zero));
            apply_step(GradedSubstitution<F>::shear(
                wvar::U0, -(beta1 * z0).scaled(half) - (beta1 * beta1 * x0).scaled(a0 * quarter),
                zero));
        }
        reduce_g_mod_f();

        bool f_clean = detail::cofactor_of(f, wvar::Z0, 1).is_zero();
        bool g_clean = detail::z0sq_quotient(g).is_zero() &&
                       detail::cofactor_of(g, wvar::U0, 1).is_zero();
        if (f_clean && g_clean) break;
    }

    auto params = NormalFormParams<F>::from_pair({f, g});
    if (!params) throw Error("normalize: reduction did not reach the normal-form shape");
    NormalizationCertificate<F> cert{psi, u, v, h_rel.scaled(u)};
    if (!cert.verify(in, {f, g})) throw Error("normalize: certificate failed to verify");
    return {*params, cert};
}

// f6 and g10 restricted to the line {X0 = Z0 = U0 = 0}, as binary forms in
// (Y0, Y1) of degrees 3 and 5.
template <typename F>
BinaryForm<F> restrict_to_y_line(const WPoly<F>& p, int form_degree) {
    BinaryForm<F> out(form_degree, zero_like(p.zero_proto()));
    for (const auto& [m, c] : p.terms()) {
        if (m.e[wvar::X0] || m.e[wvar::Z0] || m.e[wvar::U0]) continue;
        out.set_coeff(m.e[wvar::Y1], c);
    }
    return out;
}

// The complete intersection misses all three ambient singular loci exactly
// when these two restrictions share no projective zero.
template <typename F>
bool base_locus_empty(const SurfacePair<F>& p) {
    if (!validate_pair(p).all())
        throw PreconditionError("base_locus_empty: pair fails validation");
    BinaryForm<F> r3 = restrict_to_y_line(p.f6, 3);
    BinaryForm<F> r5 = restrict_to_y_line(p.g10, 5);
    if (r3.is_zero() || r5.is_zero()) return false;
    return !is_zero(binary_resultant(r3, r5));
}

// A hypersurface in P^3 together with an ideal-membership witness: the
// pullback under xi0 -> X0^3, eta0 -> X0 Y0, eta1 -> X0 Y1, zeta0 -> Z0
// equals cof_f * f6 + cof_g * g10 as polynomials.
template <typename F>
struct P3Hypersurface {
    P3Poly<F> equation;
    int degree;
    WPoly<F> cof_f;
    WPoly<F> cof_g;

    WPoly<F> pullback() const {
        const F one = one_like(cof_f.zero_proto());
        std::array<WPoly<F>, 4> images = {
            WPoly<F>::term(detail::mono(3, 0, 0, 0, 0), one),
            WPoly<F>::term(detail::mono(1, 1, 0, 0, 0), one),
            WPoly<F>::term(detail::mono(1, 0, 1, 0, 0), one),
            WPoly<F>::variable(wvar::Z0, one),
        };
        return equation.template map_through<WRing>(images);
    }

    bool verify_certificate(const SurfacePair<F>& p) const {
        return pullback() == cof_f * p.f6 + cof_g * p.g10;
    }
};

// Equation of the canonical image. For alpha0 != 0 the image is the sextic
//   [xi0 zeta0^2 + alpha3(xi0,eta0,eta1)]^2
//     + alpha0^2 [beta3(xi0,eta0,eta1) xi0^2 zeta0 + beta5(xi0,eta0,eta1) xi0],
// whose pullback is X0^6 (f6 - 2 alpha0 X0 U0) f6 + alpha0^2 X0^8 g10. The
// square on alpha0 is forced: with a linear alpha0 factor instead, the
// membership identity closes only when alpha0 is 0 or 1.
// For alpha0 = 0 the image is the cubic xi0 zeta0^2 + alpha3, with pullback
// exactly X0^3 f6.
template <typename F>
P3Hypersurface<F> canonical_image(const NormalFormParams<F>& nf) {
    const F zero = zero_like(nf.alpha0);
    const F one = one_like(zero);
    std::array<P3Poly<F>, 3> xi_args = {
        P3Poly<F>::variable(0, one), // xi0
        P3Poly<F>::variable(1, one), // eta0
        P3Poly<F>::variable(2, one), // eta1
    };
    P3Poly<F> xi0 = P3Poly<F>::variable(0, one);
    P3Poly<F> zeta0 = P3Poly<F>::variable(3, one);
    P3Poly<F> head = xi0 * zeta0 * zeta0 + nf.alpha3.template expand<P3Ring>(xi_args);

    auto pair = nf.expand();
    if (is_zero(nf.alpha0)) {
        WPoly<F> x0cubed = WPoly<F>::term(detail::mono(3, 0, 0, 0, 0), one);
        return {head, 3, x0cubed, WPoly<F>(zero)};
    }

    P3Poly<F> tail = nf.beta3.template expand<P3Ring>(xi_args) * xi0 * xi0 * zeta0 +
                     nf.beta5.template expand<P3Ring>(xi_args) * xi0;
    P3Poly<F> sextic = head * head + tail.scaled(nf.alpha0 * nf.alpha0);

    const F two_a = scalar_from_int<F>(2, zero) * nf.alpha0;
    WPoly<F> x0u0 = WPoly<F>::term(detail::mono(1, 0, 0, 0, 1), one);
    WPoly<F> cof_f = WPoly<F>::term(detail::mono(6, 0, 0, 0, 0), one) *
                     (pair.f6 - x0u0.scaled(two_a));
    WPoly<F> cof_g = WPoly<F>::term(detail::mono(8, 0, 0, 0, 0), nf.alpha0 * nf.alpha0);
    return {sextic, 6, cof_f, cof_g};
}

struct MapDegree {
    int map_degree;
    int image_degree;
};

// deg(Phi) * deg(image) <= K^2 = 9 pins these down once the image degree
// is known: birational onto a sextic, or 2:1 onto a cubic.
template <typename F>
MapDegree canonical_map_degree(const NormalFormParams<F>& nf) {
    return is_zero(nf.alpha0) ? MapDegree{2, 3} : MapDegree{1, 6};
}

// ---- pair file format ----------------------------------------------------
// Two polynomial lines prefixed `f6:` and `g10:`; blank lines and lines
// starting with '#' are ignored.

template <typename F>
SurfacePair<F> parse_pair_text(const std::string& text, const F& proto) {
    std::istringstream in(text);
    std::optional<WPoly<F>> f, g;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (line.compare(first, 3, "f6:") == 0)
            f = parse_wpoly<F>(line.substr(first + 3), proto);
        else if (line.compare(first, 4, "g10:") == 0)
            g = parse_wpoly<F>(line.substr(first + 4), proto);
        else
            throw PreconditionError("pair file: expected lines 'f6: ...' and 'g10: ...'");
    }
    if (!f || !g) throw PreconditionError("pair file: missing f6 or g10 line");
    return {*f, *g};
}

template <typename F>
std::string format_pair_text(const SurfacePair<F>& p) {
    return "f6: " + p.f6.str() + "\ng10: " + p.g10.str() + "\n";
}

} // namespace ci610
