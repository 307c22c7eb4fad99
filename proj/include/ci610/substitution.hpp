#pragma once

#include <array>
#include <cstddef>

#include "ci610/errors.hpp"
#include "ci610/poly.hpp"

namespace ci610 {

// Invertible graded endomorphism of the weighted ring: each variable maps to
// a homogeneous polynomial of the variable's own weight, and the recorded
// inverse is checked to compose to the identity in both directions.
template <typename F>
class GradedSubstitution {
public:
    using Images = std::array<WPoly<F>, WRing::nvars>;

    GradedSubstitution(Images images, Images inverse_images)
        : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
        for (std::size_t i = 0; i < WRing::nvars; ++i) {
            if (!images_[i].is_homogeneous_of(WRing::weights[i]) || images_[i].is_zero())
                throw PreconditionError(std::string("substitution image of ") + WRing::names[i] +
                                        " is not homogeneous of weight " +
                                        std::to_string(WRing::weights[i]));
            if (!inverse_images_[i].is_homogeneous_of(WRing::weights[i]) ||
                inverse_images_[i].is_zero())
                throw PreconditionError(std::string("substitution inverse image of ") +
                                        WRing::names[i] + " is not graded");
        }
        for (std::size_t i = 0; i < WRing::nvars; ++i) {
            WPoly<F> var = WPoly<F>::variable(i, one_like(images_[i].zero_proto()));
            if (apply(apply_inverse(var)) != var || apply_inverse(apply(var)) != var)
                throw PreconditionError("recorded inverse does not invert the substitution");
        }
    }

    static GradedSubstitution identity(const F& proto) {
        Images ims = variable_images(proto);
        return GradedSubstitution(ims, ims);
    }

    // Replace one variable by itself plus a homogeneous shift; the inverse
    // is the opposite shift when the shift does not involve the variable.
    static GradedSubstitution shear(std::size_t var, const WPoly<F>& shift, const F& proto) {
        if (shift.depends_on(var))
            throw PreconditionError("shear shift may not involve the sheared variable");
        Images ims = variable_images(proto);
        Images inv = variable_images(proto);
        ims[var] += shift;
        inv[var] -= shift;
        return GradedSubstitution(std::move(ims), std::move(inv));
    }

    static GradedSubstitution scaling(const std::array<F, WRing::nvars>& factors) {
        Images ims = variable_images(factors[0]);
        Images inv = variable_images(factors[0]);
        for (std::size_t i = 0; i < WRing::nvars; ++i) {
            ims[i] = ims[i].scaled(factors[i]);
            inv[i] = inv[i].scaled(inverse(factors[i]));
        }
        return GradedSubstitution(std::move(ims), std::move(inv));
    }

    const Images& images() const { return images_; }
    const Images& inverse_images() const { return inverse_images_; }

    WPoly<F> apply(const WPoly<F>& p) const { return p.map_through(images_); }
    WPoly<F> apply_inverse(const WPoly<F>& p) const { return p.map_through(inverse_images_); }

    // The substitution that acts like `this` followed by `next`.
    GradedSubstitution then(const GradedSubstitution& next) const {
        Images ims = images_;
        Images inv = inverse_images_;
        for (std::size_t i = 0; i < WRing::nvars; ++i) {
            ims[i] = next.apply(images_[i]);
            inv[i] = apply_inverse(next.inverse_images_[i]);
        }
        return GradedSubstitution(std::move(ims), std::move(inv));
    }

private:
    static Images variable_images(const F& proto) {
        const F one = one_like(proto);
        return {WPoly<F>::variable(0, one), WPoly<F>::variable(1, one),
                WPoly<F>::variable(2, one), WPoly<F>::variable(3, one),
                WPoly<F>::variable(4, one)};
    }

    Images images_;
    Images inverse_images_;
};

} // namespace ci610
