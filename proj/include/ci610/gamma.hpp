#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ci610/binary_form.hpp"
#include "ci610/errors.hpp"
#include "ci610/rng.hpp"
#include "ci610/splitting.hpp"

namespace ci610 {

// Normalized degree-2 multiplication data of a hypothetical genus-3 pencil:
// the 3x3 block
//
//        ( a0      1   a2     )
//   A' = ( alpha0  0   alpha2 )        a_i constants, alpha_j in H^0(O(1)),
//        ( beta0   0   beta2  )        beta_k in H^0(O(2)),
//
// sitting inside the 6x6 matrix of sigma_2 : S^2(V_1) -> V_2 whose lower
// right block is the identity.
template <typename F>
struct GammaData {
    F a0, a2;
    BinaryForm<F> alpha0, alpha2; // degree 1
    BinaryForm<F> beta0, beta2;   // degree 2

    GammaData(F a0_, F a2_, BinaryForm<F> al0, BinaryForm<F> al2, BinaryForm<F> be0,
              BinaryForm<F> be2)
        : a0(std::move(a0_)), a2(std::move(a2_)), alpha0(std::move(al0)),
          alpha2(std::move(al2)), beta0(std::move(be0)), beta2(std::move(be2)) {
        if (alpha0.degree() != 1 || alpha2.degree() != 1)
            throw PreconditionError("GammaData: alpha forms must have degree 1");
        if (beta0.degree() != 2 || beta2.degree() != 2)
            throw PreconditionError("GammaData: beta forms must have degree 2");
    }
};

// The map gamma : O(4) -> O(4) + O(5) + O(6)^2 + O(7) + O(8) obtained by
// squaring A' on the image of (X0 ^ X1)^2 |-> (X0 X0)(X1 X1) - (X0 X1)^2.
// Component order matches the monomial order S0^2, S0 S1, S1^2, S0 S2,
// S1 S2, S2^2 of the target.
template <typename F>
std::vector<BinaryForm<F>> gamma_components(const GammaData<F>& g) {
    const F one = one_like(g.a0);
    BinaryForm<F> c0(0, zero_like(g.a0));
    c0.set_coeff(0, g.a0 * g.a2 - one);
    return {
        c0,                                                // S0^2, degree 0
        g.alpha2.scaled(g.a0) + g.alpha0.scaled(g.a2),     // S0 S1, degree 1
        g.alpha0 * g.alpha2,                               // S1^2,  degree 2
        g.beta2.scaled(g.a0) + g.beta0.scaled(g.a2),       // S0 S2, degree 2
        g.alpha0 * g.beta2 + g.alpha2 * g.beta0,           // S1 S2, degree 3
        g.beta0 * g.beta2,                                 // S2^2,  degree 4
    };
}

template <typename F>
BundleMap<F> gamma_bundle_map(const GammaData<F>& g) {
    BundleMap<F> m(SplittingType({4}), SplittingType({4, 5, 6, 6, 7, 8}),
                   zero_like(g.a0));
    auto comps = gamma_components(g);
    for (std::size_t j = 0; j < comps.size(); ++j) m.set_entry(j, 0, comps[j]);
    return m;
}

struct Sigma2Verdict {
    bool valid;
    std::string reason; // empty when valid

    explicit operator bool() const { return valid; }
};

// sigma_2 must have generic rank 6 and may lose rank at most 1 at any point
// of the line. With the normalized shape both reduce to conditions on A':
// generic rank 3 means alpha0*beta2 - alpha2*beta0 is not identically zero,
// and a rank drop by 2 at P means alpha0, alpha2, beta0, beta2 all vanish
// at P (the constant middle column always survives).
template <typename F>
Sigma2Verdict validate_sigma2(const GammaData<F>& g) {
    BinaryForm<F> det3 = g.alpha0 * g.beta2 - g.alpha2 * g.beta0;
    if (det3.is_zero())
        return {false, "A' has generic rank below 3 (alpha0*beta2 = alpha2*beta0)"};

    std::optional<BinaryForm<F>> common;
    auto fold = [&](const BinaryForm<F>& h) {
        if (h.is_zero()) return; // vanishes everywhere, constrains nothing new
        common = common ? binary_gcd(*common, h) : binary_gcd(h, h);
    };
    fold(g.alpha0);
    fold(g.alpha2);
    fold(g.beta0);
    fold(g.beta2);
    if (common && common->degree() >= 1)
        return {false, "rank of sigma_2 drops by 2 at a common zero of the A' rows"};
    return {true, ""};
}

enum class PencilCase { case1, case211, case212, case221, case2221, case2222 };

inline const char* to_string(PencilCase c) {
    switch (c) {
        case PencilCase::case1: return "1";
        case PencilCase::case211: return "2-1-1";
        case PencilCase::case212: return "2-1-2";
        case PencilCase::case221: return "2-2-1";
        case PencilCase::case2221: return "2-2-2-1";
        case PencilCase::case2222: return "2-2-2-2";
    }
    return "?";
}

inline std::optional<PencilCase> pencil_case_from_string(const std::string& s) {
    for (PencilCase c : {PencilCase::case1, PencilCase::case211, PencilCase::case212,
                         PencilCase::case221, PencilCase::case2221, PencilCase::case2222})
        if (s == to_string(c)) return c;
    return std::nullopt;
}

template <typename F>
struct ClassifiedCase {
    PencilCase kind;
    std::optional<F> a;                  // alpha2' = a * alpha0'   (case 2-1-2)
    std::optional<F> c;                  // lambda  = c * alpha0'   (case 2-2-2-2)
    std::optional<BinaryForm<F>> lambda; // beta0'+beta2' = lambda * alpha0'
};

namespace detail {

template <typename F>
int common_zero_degree(const std::vector<BinaryForm<F>>& forms) {
    std::optional<BinaryForm<F>> g;
    for (const auto& h : forms) {
        if (h.is_zero()) continue;
        g = g ? binary_gcd(*g, h) : binary_gcd(h, h);
    }
    return g ? g->degree() : -1; // -1: everything identically zero
}

} // namespace detail

// The case tree over the normalization a1 = 1, alpha1 = beta1 = 0. When
// a0*a2 = 1 the bases are rescaled so that a0 = a2 = 1; only even powers of
// the rescaling unit enter, so this needs no square roots.
template <typename F>
ClassifiedCase<F> classify_case(const GammaData<F>& g) {
    const F one = one_like(g.a0);
    if (g.a0 * g.a2 != one) return {PencilCase::case1, {}, {}, {}};

    const F u = inverse(g.a0);
    BinaryForm<F> al0 = g.alpha0.scaled(u);
    BinaryForm<F> al2 = g.alpha2.scaled(g.a0);
    BinaryForm<F> be0 = g.beta0.scaled(u);
    BinaryForm<F> be2 = g.beta2.scaled(g.a0);

    BinaryForm<F> s = al0 + al2;
    BinaryForm<F> prod = al0 * al2;
    BinaryForm<F> bsum = be0 + be2;

    if (!s.is_zero()) {
        if (detail::common_zero_degree<F>({s, prod, bsum}) < 1)
            return {PencilCase::case211, {}, {}, {}};
        // Both alphas vanish at the shared zero, hence are proportional.
        if (al0.is_zero()) {
            std::swap(al0, al2);
            std::swap(be0, be2);
        }
        F a = zero_like(g.a0);
        if (!al2.is_zero()) {
            BinaryForm<F> ratio = form_exact_div(al2, al0);
            a = ratio.coeff(0);
        }
        BinaryForm<F> lambda = form_exact_div(bsum, al0);
        return {PencilCase::case212, a, {}, lambda};
    }

    // Case 2-2: alpha2' = -alpha0'; validity forces alpha0' != 0 and
    // beta0' + beta2' != 0 (their product is the A' determinant).
    if (detail::common_zero_degree<F>({al0, bsum}) < 1)
        return {PencilCase::case221, {}, {}, {}};
    BinaryForm<F> lambda = form_exact_div(bsum, al0);
    if (detail::common_zero_degree<F>({al0, lambda}) < 1)
        return {PencilCase::case2221, {}, {}, lambda};
    F c = form_exact_div(lambda, al0).coeff(0);
    return {PencilCase::case2222, {}, c, lambda};
}

// A genus-3 pencil would force a nonzero map O(10) -> Cok(gamma); the bound
// 10 is the degree of det V_1 twisted by the degree-3 divisor of the
// multiplication defect. No summand of degree >= 10 means contradiction.
inline constexpr int kPencilHomThreshold = 10;

template <typename F>
struct PencilVerdict {
    ClassifiedCase<F> label;
    SplittingType cok_gamma;
    bool ruled_out;
};

template <typename F>
PencilVerdict<F> pencil_case_verdict(const GammaData<F>& g) {
    auto v = validate_sigma2(g);
    if (!v.valid) throw PreconditionError("pencil_case_verdict: " + v.reason);
    auto label = classify_case(g);
    auto cok = cokernel_splitting(gamma_bundle_map(g));
    return {label, cok, cok.max_summand() < kPencilHomThreshold};
}

// ---- seeded sample generators, one per terminal case --------------------

namespace detail {

template <typename F>
BinaryForm<F> random_form(Rng& rng, int degree, const F& proto, bool nonzero = false) {
    for (;;) {
        BinaryForm<F> f(degree, proto);
        for (int e = 0; e <= degree; ++e)
            f.set_coeff(e, scalar_from_int<F>(rng.uniform(-4, 4), proto));
        if (!nonzero || !f.is_zero()) return f;
    }
}

} // namespace detail

// Draw GammaData in the requested terminal case. The case-defining algebraic
// conditions are imposed symbolically; rejection only filters degenerate
// draws. Case-2 data is produced from a0 = a2 = 1 representatives and then
// de-normalized by a random unit to exercise the rescaling path.
template <typename F>
GammaData<F> sample_gamma_case(PencilCase kind, Rng& rng, const F& proto) {
    const F one = one_like(proto);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        if (kind == PencilCase::case1) {
            F a0 = scalar_from_int<F>(rng.uniform(-3, 3), proto);
            F a2 = scalar_from_int<F>(rng.uniform(-3, 3), proto);
            if (a0 * a2 == one) continue;
            GammaData<F> g(a0, a2, detail::random_form(rng, 1, proto),
                           detail::random_form(rng, 1, proto),
                           detail::random_form(rng, 2, proto),
                           detail::random_form(rng, 2, proto));
            if (validate_sigma2(g).valid) return g;
            continue;
        }

        BinaryForm<F> al0 = detail::random_form(rng, 1, proto, true);
        BinaryForm<F> al2(1, proto), be0(2, proto), be2(2, proto);
        switch (kind) {
            case PencilCase::case211:
                al2 = detail::random_form(rng, 1, proto);
                be0 = detail::random_form(rng, 2, proto);
                be2 = detail::random_form(rng, 2, proto);
                break;
            case PencilCase::case212: {
                F a = scalar_from_int<F>(rng.uniform(-3, 3), proto);
                if (a + one == zero_like(proto)) continue;
                al2 = al0.scaled(a);
                BinaryForm<F> lambda = detail::random_form(rng, 1, proto);
                be0 = detail::random_form(rng, 2, proto);
                be2 = lambda * al0 - be0;
                break;
            }
            case PencilCase::case221:
                al2 = -al0;
                be0 = detail::random_form(rng, 2, proto);
                be2 = detail::random_form(rng, 2, proto);
                break;
            case PencilCase::case2221: {
                al2 = -al0;
                BinaryForm<F> lambda = detail::random_form(rng, 1, proto, true);
                be0 = detail::random_form(rng, 2, proto);
                be2 = lambda * al0 - be0;
                break;
            }
            case PencilCase::case2222: {
                al2 = -al0;
                F c = scalar_from_int<F>(rng.nonzero_uniform(-3, 3), proto);
                be0 = detail::random_form(rng, 2, proto);
                be2 = (al0 * al0).scaled(c) - be0;
                break;
            }
            default:
                throw Error("unreachable");
        }

        F t = scalar_from_int<F>(rng.nonzero_uniform(-3, 3), proto);
        GammaData<F> g(t, inverse(t), al0.scaled(t), al2.scaled(inverse(t)),
                       be0.scaled(t), be2.scaled(inverse(t)));
        if (!validate_sigma2(g).valid) continue;
        if (classify_case(g).kind != kind) continue;
        return g;
    }
    throw Error(std::string("sample_gamma_case: sampling budget exhausted for case ") +
                to_string(kind));
}

} // namespace ci610
