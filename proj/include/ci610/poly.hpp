#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ci610/errors.hpp"
#include "ci610/field.hpp"

namespace ci610 {

// Coordinate ring of P(1,2,2,3,5).
struct WRing {
    static constexpr std::size_t nvars = 5;
    static constexpr std::array<int, 5> weights{1, 2, 2, 3, 5};
    static constexpr std::array<const char*, 5> names{"X0", "Y0", "Y1", "Z0", "U0"};
};

// Homogeneous coordinates of the P^3 target of the canonical map.
struct P3Ring {
    static constexpr std::size_t nvars = 4;
    static constexpr std::array<int, 4> weights{1, 1, 1, 1};
    static constexpr std::array<const char*, 4> names{"xi0", "eta0", "eta1", "zeta0"};
};

// Formal three-argument forms; the arguments are substituted later
// (typically with X0^2, Y0, Y1 or with xi0, eta0, eta1).
struct TernRing {
    static constexpr std::size_t nvars = 3;
    static constexpr std::array<int, 3> weights{1, 1, 1};
    static constexpr std::array<const char*, 3> names{"A0", "A1", "A2"};
};

template <typename R>
struct Monomial {
    std::array<int, R::nvars> e{};

    int degree() const {
        int d = 0;
        for (std::size_t i = 0; i < R::nvars; ++i) d += e[i] * R::weights[i];
        return d;
    }

    static Monomial one() { return Monomial{}; }

    static Monomial var(std::size_t i, int power = 1) {
        Monomial m;
        m.e[i] = power;
        return m;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (std::size_t i = 0; i < R::nvars; ++i) m.e[i] = e[i] + o.e[i];
        return m;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Canonical total order: weighted degree first, then lex on exponents.
// Every container iteration, printed polynomial and serialized basis uses it.
template <typename R>
struct MonomialLess {
    bool operator()(const Monomial<R>& a, const Monomial<R>& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

// All monomials of a given weighted degree, in canonical order.
template <typename R>
std::vector<Monomial<R>> monomial_basis(int degree) {
    if (degree < 0) throw PreconditionError("monomial_basis: negative degree");
    std::vector<Monomial<R>> out;
    Monomial<R> cur;
    auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
        if (var + 1 == R::nvars) {
            if (remaining % R::weights[var] == 0) {
                cur.e[var] = remaining / R::weights[var];
                out.push_back(cur);
                cur.e[var] = 0;
            }
            return;
        }
        for (int k = 0; k * R::weights[var] <= remaining; ++k) {
            cur.e[var] = k;
            self(self, var + 1, remaining - k * R::weights[var]);
        }
        cur.e[var] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), MonomialLess<R>{});
    return out;
}

// Sparse polynomial with exact coefficients. Stored zero coefficients are
// never kept; `zero` is the field prototype used when a fresh scalar of the
// right field is needed (relevant for prime fields, which carry a modulus).
template <typename R, typename F>
class Poly {
public:
    using Mono = Monomial<R>;
    using TermMap = std::map<Mono, F, MonomialLess<R>>;

    explicit Poly(const F& zero_proto) : zero_(zero_like(zero_proto)) {}

    static Poly term(const Mono& m, const F& c) {
        Poly p(c);
        p.add_term(m, c);
        return p;
    }

    static Poly constant(const F& c) { return term(Mono::one(), c); }

    static Poly variable(std::size_t i, const F& one_proto) {
        return term(Mono::var(i), one_like(one_proto));
    }

    const TermMap& terms() const { return terms_; }
    const F& zero_proto() const { return zero_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    F coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? zero_ : it->second;
    }

    void add_term(const Mono& m, const F& c) {
        if (ci610::is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (ci610::is_zero(it->second)) terms_.erase(it);
        }
    }

    bool depends_on(std::size_t var) const {
        for (const auto& [m, c] : terms_)
            if (m.e[var] > 0) return true;
        return false;
    }

    // Degree of every term if they agree, nullopt otherwise (or if zero).
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }

    bool is_homogeneous_of(int d) const {
        if (terms_.empty()) return true; // zero lies in every graded piece
        auto h = homogeneous_degree();
        return h && *h == d;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r(a.zero_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.zero_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const F& s) const {
        Poly r(zero_);
        if (ci610::is_zero(s)) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (!(ia->first == ib->first) || ia->second != ib->second) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(std::size_t var) const {
        Poly r(zero_);
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Mono d = m;
            d.e[var] -= 1;
            r.add_term(d, c * scalar_from_int<F>(m.e[var], zero_));
        }
        return r;
    }

    F evaluate(const std::array<F, R::nvars>& point) const {
        F acc = zero_;
        for (const auto& [m, c] : terms_) {
            F t = c;
            for (std::size_t i = 0; i < R::nvars; ++i)
                for (int k = 0; k < m.e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Ring map determined by images of the variables. Images must be
    // homogeneous so gradings compose predictably.
    template <typename R2>
    Poly<R2, F> map_through(const std::array<Poly<R2, F>, R::nvars>& images) const {
        using Out = Poly<R2, F>;
        for (std::size_t i = 0; i < R::nvars; ++i)
            if (!images[i].homogeneous_degree() && !images[i].is_zero())
                throw PreconditionError("map_through: image of " +
                                        std::string(R::names[i]) + " is not homogeneous");
        // Cache powers of each image.
        std::array<std::vector<Out>, R::nvars> pows;
        for (std::size_t i = 0; i < R::nvars; ++i)
            pows[i].push_back(Out::constant(one_like(zero_)));
        Out acc(zero_);
        for (const auto& [m, c] : terms_) {
            Out t = Out::constant(c);
            for (std::size_t i = 0; i < R::nvars; ++i) {
                while (pows[i].size() <= static_cast<std::size_t>(m.e[i]))
                    pows[i].push_back(pows[i].back() * images[i]);
                if (m.e[i] > 0) t *= pows[i][m.e[i]];
            }
            acc += t;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            if (neg) cs = cs.substr(1);
            first = false;
            bool unit_coeff = (cs == "1");
            bool has_vars = false;
            for (std::size_t i = 0; i < R::nvars; ++i) has_vars |= (m.e[i] > 0);
            if (!unit_coeff || !has_vars) {
                os << cs;
                if (has_vars) os << "*";
            }
            bool firstv = true;
            for (std::size_t i = 0; i < R::nvars; ++i) {
                if (m.e[i] == 0) continue;
                if (!firstv) os << "*";
                firstv = false;
                os << R::names[i];
                if (m.e[i] > 1) os << "^" << m.e[i];
            }
        }
        return os.str();
    }

private:
    TermMap terms_;
    F zero_;
};

template <typename F> using WPoly = Poly<WRing, F>;
template <typename F> using P3Poly = Poly<P3Ring, F>;
template <typename F> using TernPoly = Poly<TernRing, F>;

using WMono = Monomial<WRing>;

namespace wvar {
inline constexpr std::size_t X0 = 0, Y0 = 1, Y1 = 2, Z0 = 3, U0 = 4;
} // namespace wvar

} // namespace ci610
