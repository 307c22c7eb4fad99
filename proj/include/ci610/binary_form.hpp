#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ci610/errors.hpp"
#include "ci610/field.hpp"
#include "ci610/linalg.hpp"
#include "ci610/upoly.hpp"

namespace ci610 {

// Homogeneous binary form of a fixed tagged degree d in (T0, T1);
// coeff(e) multiplies T0^(d-e) * T1^e. The zero form of degree d is allowed.
template <typename F>
class BinaryForm {
public:
    BinaryForm(int degree, const F& zero_proto)
        : d_(degree), c_(static_cast<std::size_t>(degree) + 1, zero_like(zero_proto)) {
        if (degree < 0) throw PreconditionError("BinaryForm: negative degree");
    }
    BinaryForm(int degree, std::vector<F> coeffs) : d_(degree), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<std::size_t>(degree) + 1)
            throw PreconditionError("BinaryForm: coefficient count != degree + 1");
    }

    int degree() const { return d_; }
    const std::vector<F>& coeffs() const { return c_; }
    const F& coeff(int e) const { return c_.at(static_cast<std::size_t>(e)); }
    void set_coeff(int e, const F& v) { c_.at(static_cast<std::size_t>(e)) = v; }
    const F& zero_proto() const { return c_[0]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!ci610::is_zero(x)) return false;
        return true;
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.d_ != b.d_) throw PreconditionError("BinaryForm: degree mismatch in +");
        BinaryForm r = a;
        for (int e = 0; e <= a.d_; ++e) r.c_[e] = a.c_[e] + b.c_[e];
        return r;
    }
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
        if (a.d_ != b.d_) throw PreconditionError("BinaryForm: degree mismatch in -");
        BinaryForm r = a;
        for (int e = 0; e <= a.d_; ++e) r.c_[e] = a.c_[e] - b.c_[e];
        return r;
    }
    friend BinaryForm operator-(const BinaryForm& a) {
        BinaryForm r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm r(a.d_ + b.d_, zero_like(a.c_[0]));
        for (int i = 0; i <= a.d_; ++i)
            for (int j = 0; j <= b.d_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }
    BinaryForm scaled(const F& s) const {
        BinaryForm r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.d_ == b.d_ && a.c_ == b.c_;
    }

    F evaluate(const F& t0, const F& t1) const {
        F acc = zero_like(c_[0]);
        for (int e = 0; e <= d_; ++e) {
            F term = c_[e];
            for (int k = 0; k < d_ - e; ++k) term *= t0;
            for (int k = 0; k < e; ++k) term *= t1;
            acc += term;
        }
        return acc;
    }

    // Set T0 = 1; the lost degree is the multiplicity of the zero at [0:1].
    UPoly<F> dehomogenized() const { return UPoly<F>(c_, zero_like(c_[0])); }

    static BinaryForm rehomogenized(const UPoly<F>& p, int degree) {
        BinaryForm r(degree, p.zero_proto());
        for (int i = 0; i <= p.degree(); ++i) r.c_[i] = p.coeff(i);
        return r;
    }

    std::string str(const char* t0 = "T0", const char* t1 = "T1") const {
        std::string out;
        for (int e = 0; e <= d_; ++e) {
            if (ci610::is_zero(c_[e])) continue;
            std::string cs = to_string(c_[e]);
            bool neg = !cs.empty() && cs[0] == '-';
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (neg) cs = cs.substr(1);
            std::string mono;
            if (d_ - e > 0) {
                mono += t0;
                if (d_ - e > 1) mono += "^" + std::to_string(d_ - e);
            }
            if (e > 0) {
                if (!mono.empty()) mono += "*";
                mono += t1;
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (cs != "1" || mono.empty()) {
                out += cs;
                if (!mono.empty()) out += "*";
            }
            out += mono;
        }
        return out.empty() ? "0" : out;
    }

private:
    int d_;
    std::vector<F> c_;
};

// Sylvester resultant of two tagged forms. Zero exactly when the forms share
// a projective zero over the algebraic closure; a common zero at [0:1] is
// covered because then both top coefficient columns vanish.
template <typename F>
F binary_resultant(const BinaryForm<F>& f, const BinaryForm<F>& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 1 || n < 1) throw PreconditionError("binary_resultant: degree tags must be >= 1");
    const F zero = zero_like(f.zero_proto());
    Matrix<F> s(static_cast<std::size_t>(m + n), std::vector<F>(static_cast<std::size_t>(m + n), zero));
    for (int r = 0; r < n; ++r)
        for (int e = 0; e <= m; ++e) s[r][r + e] = f.coeff(m - e);
    for (int r = 0; r < m; ++r)
        for (int e = 0; e <= n; ++e) s[n + r][r + e] = g.coeff(n - e);
    return determinant_of(s, one_like(f.zero_proto()));
}

// Quotient f / g when g divides f exactly (as forms).
template <typename F>
BinaryForm<F> form_exact_div(const BinaryForm<F>& f, const BinaryForm<F>& g) {
    if (g.is_zero()) throw Error("form_exact_div: division by the zero form");
    UPoly<F> pf = f.dehomogenized(), pg = g.dehomogenized();
    int kf = f.degree() - pf.degree(), kg = g.degree() - pg.degree();
    if (f.is_zero()) return BinaryForm<F>(f.degree() - g.degree(), f.zero_proto());
    if (kf < kg) throw Error("form_exact_div: division was not exact (zero at [0:1])");
    UPoly<F> q = exact_div(pf, pg);
    return BinaryForm<F>::rehomogenized(q, f.degree() - g.degree());
}

// Monic gcd: Euclid on the dehomogenizations plus the shared power of T0
// (zeros at [0:1] live outside the affine chart).
template <typename F>
BinaryForm<F> binary_gcd(const BinaryForm<F>& f, const BinaryForm<F>& g) {
    if (f.is_zero() && g.is_zero())
        throw PreconditionError("binary_gcd: both forms are zero");
    auto t0_mult = [](const BinaryForm<F>& h) { return h.degree() - h.dehomogenized().degree(); };
    if (f.is_zero()) return binary_gcd(g, g);
    if (g.is_zero()) return binary_gcd(f, f);
    UPoly<F> u = gcd(f.dehomogenized(), g.dehomogenized());
    int k = std::min(t0_mult(f), t0_mult(g));
    return BinaryForm<F>::rehomogenized(u, u.degree() + k);
}

} // namespace ci610
