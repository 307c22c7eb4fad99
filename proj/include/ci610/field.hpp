#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "ci610/errors.hpp"

namespace ci610 {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Boost keeps values in lowest terms with a positive
// denominator, which is exactly the canonical form we need.
using Rat = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rat& q) { return q == 0; }
inline Rat inverse(const Rat& q) {
    if (q == 0) throw Error("division by zero");
    return Rat(1) / q;
}
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }

inline std::string to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Weights, relation degrees and the normal-form divisions degenerate in
// characteristics 2, 3 and 5, so those primes are rejected everywhere.
inline bool is_supported_prime(std::int64_t p) {
    return is_prime(p) && p != 2 && p != 3 && p != 5;
}

// Residue mod a prime. Every value carries its modulus so that mixing two
// different prime fields is caught at the first arithmetic operation.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t value, std::int64_t p) : p_(p) {
        if (!is_supported_prime(p))
            throw PreconditionError("unsupported prime modulus " + std::to_string(p));
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    friend bool operator==(const Fp& a, const Fp& b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend bool operator<(const Fp& a, const Fp& b) {
        return a.p_ != b.p_ ? a.p_ < b.p_ : a.v_ < b.v_;
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::int64_t p = matched(a, b);
        return fromReduced((a.v_ + b.v_) % p, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::int64_t p = matched(a, b);
        return fromReduced((a.v_ - b.v_ + p) % p, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::int64_t p = matched(a, b);
        return fromReduced((a.v_ * b.v_) % p, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }
    friend Fp operator-(const Fp& a) { return fromReduced(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }

    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }

    friend Fp inverse(const Fp& a) {
        if (a.v_ == 0) throw Error("division by zero in F_" + std::to_string(a.p_));
        // extended Euclid
        std::int64_t t = 0, new_t = 1, r = a.p_, new_r = a.v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += a.p_;
        return fromReduced(t, a.p_);
    }

private:
    static std::int64_t matched(const Fp& a, const Fp& b) {
        if (a.p_ != b.p_)
            throw FieldMismatchError("field mismatch: F_" + std::to_string(a.p_) +
                                     " vs F_" + std::to_string(b.p_));
        return a.p_;
    }
    static Fp fromReduced(std::int64_t v, std::int64_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }

    std::int64_t v_;
    std::int64_t p_;
};

inline bool is_zero(const Fp& a) { return a.value() == 0; }
inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }

// Reduction homomorphism Q -> F_p on the subring of p-integral rationals.
inline Fp reduce_mod(const Rat& q, std::int64_t p) {
    BigInt num = numerator(q) % p;
    BigInt den = denominator(q) % p;
    if (den == 0)
        throw PreconditionError("denominator of " + to_string(q) +
                                " not invertible mod " + std::to_string(p));
    Fp n(static_cast<std::int64_t>(num), p);
    Fp d(static_cast<std::int64_t>(den), p);
    return n / d;
}

// Smallest element of multiplicative order 3, if one exists (p = 1 mod 3).
inline Fp primitive_cube_root(std::int64_t p) {
    if (!is_supported_prime(p) || (p - 1) % 3 != 0)
        throw PreconditionError("F_" + std::to_string(p) +
                                " has no primitive cube root of unity");
    for (std::int64_t x = 2; x < p; ++x) {
        if (x * x % p * x % p == 1) return Fp(x, p);
    }
    throw Error("no cube root found despite p = 1 mod 3");
}

// Scalars constructed in a generic context: same field as the exemplar.
template <typename F>
F scalar_from_int(std::int64_t n, const F& exemplar);

template <>
inline Rat scalar_from_int<Rat>(std::int64_t n, const Rat&) { return Rat(n); }

template <>
inline Fp scalar_from_int<Fp>(std::int64_t n, const Fp& exemplar) {
    return Fp(n, exemplar.modulus());
}

} // namespace ci610
