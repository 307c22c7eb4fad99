#pragma once

#include <vector>

#include "ci610/errors.hpp"
#include "ci610/field.hpp"

namespace ci610 {

// Dense univariate polynomial over an exact field; c[i] is the t^i
// coefficient and trailing zeros are stripped, so degree(zero) = -1.
template <typename F>
class UPoly {
public:
    explicit UPoly(const F& zero_proto) : zero_(zero_like(zero_proto)) {}
    UPoly(std::vector<F> coeffs, const F& zero_proto)
        : c_(std::move(coeffs)), zero_(zero_like(zero_proto)) {
        normalize();
    }

    static UPoly constant(const F& v) { return UPoly({v}, v); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }
    const F& zero_proto() const { return zero_; }

    F coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero_;
        return c_[i];
    }
    F lead() const { return c_.empty() ? zero_ : c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), a.zero_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UPoly(std::move(r), a.zero_);
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), a.zero_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return UPoly(std::move(r), a.zero_);
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.zero_);
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(r), a.zero_);
    }
    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

    UPoly scaled(const F& s) const {
        if (ci610::is_zero(s)) return UPoly(zero_);
        std::vector<F> r = c_;
        for (auto& x : r) x = x * s;
        return UPoly(std::move(r), zero_);
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(inverse(lead()));
    }

    // Euclidean division; the coefficient field makes it always possible.
    static void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
        if (b.is_zero()) throw Error("UPoly division by zero");
        q = UPoly(a.zero_);
        r = a;
        F blead_inv = inverse(b.lead());
        std::vector<F> qc(std::max<std::size_t>(1, a.c_.size()), a.zero_);
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            F factor = r.lead() * blead_inv;
            qc[shift] += factor;
            std::vector<F> rc = r.c_;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                rc[i + shift] -= factor * b.c_[i];
            r = UPoly(std::move(rc), a.zero_);
        }
        q = UPoly(std::move(qc), a.zero_);
    }

    // Division known to be exact (used by fraction-free elimination).
    friend UPoly exact_div(const UPoly& a, const UPoly& b) {
        UPoly q(a.zero_), r(a.zero_);
        divrem(a, b, q, r);
        if (!r.is_zero()) throw Error("exact_div: division was not exact");
        return q;
    }

    friend UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly q(a.zero_), r(a.zero_);
            divrem(a, b, q, r);
            a = b;
            b = r;
        }
        return a.monic();
    }

private:
    void normalize() {
        while (!c_.empty() && ci610::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
    F zero_;
};

template <typename F>
bool is_zero(const UPoly<F>& p) { return p.is_zero(); }

} // namespace ci610
