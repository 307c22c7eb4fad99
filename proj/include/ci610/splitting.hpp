#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ci610/binary_form.hpp"
#include "ci610/errors.hpp"
#include "ci610/linalg.hpp"
#include "ci610/upoly.hpp"

namespace ci610 {

// Direct sum of line bundles on P^1, recorded as the sorted multiset of
// twists. The dimension function k -> h^0(E(-k)) determines it uniquely.
class SplittingType {
public:
    SplittingType() = default;
    explicit SplittingType(std::vector<int> summands) : a_(std::move(summands)) {
        std::sort(a_.begin(), a_.end());
    }

    const std::vector<int>& summands() const { return a_; }
    std::size_t rank() const { return a_.size(); }
    int degree() const { return std::accumulate(a_.begin(), a_.end(), 0); }
    int min_summand() const { return a_.front(); }
    int max_summand() const { return a_.back(); }

    std::int64_t h0_twist(int k) const {
        std::int64_t d = 0;
        for (int a : a_) d += std::max(0, a - k + 1);
        return d;
    }

    std::vector<std::int64_t> dim_profile(int k_min, int k_max) const {
        std::vector<std::int64_t> out;
        for (int k = k_min; k <= k_max; ++k) out.push_back(h0_twist(k));
        return out;
    }

    friend bool operator==(const SplittingType& x, const SplittingType& y) {
        return x.a_ == y.a_;
    }
    friend bool operator!=(const SplittingType& x, const SplittingType& y) {
        return !(x == y);
    }

    std::string str() const {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
        os << "}";
        return os.str();
    }

private:
    std::vector<int> a_;
};

// Morphism of split bundles, one binary form per matrix entry; the (j,i)
// entry has degree target_j - source_i and is identically zero where that
// is negative.
template <typename F>
class BundleMap {
public:
    BundleMap(SplittingType source, SplittingType target, const F& zero_proto)
        : source_(std::move(source)), target_(std::move(target)), zero_(zero_like(zero_proto)),
          entries_(target_.rank() * source_.rank()) {}

    const SplittingType& source() const { return source_; }
    const SplittingType& target() const { return target_; }
    const F& zero_proto() const { return zero_; }

    void set_entry(std::size_t j, std::size_t i, BinaryForm<F> form) {
        int want = target_.summands()[j] - source_.summands()[i];
        if (form.degree() != want)
            throw PreconditionError("BundleMap entry (" + std::to_string(j) + "," +
                                    std::to_string(i) + ") must have degree " +
                                    std::to_string(want));
        entries_[j * source_.rank() + i] = std::move(form);
    }

    // Zero form of the right degree when unset or structurally zero.
    BinaryForm<F> entry(std::size_t j, std::size_t i) const {
        const auto& slot = entries_[j * source_.rank() + i];
        if (slot) return *slot;
        int d = target_.summands()[j] - source_.summands()[i];
        return BinaryForm<F>(std::max(d, 0), zero_);
    }

    bool entry_is_zero(std::size_t j, std::size_t i) const {
        const auto& slot = entries_[j * source_.rank() + i];
        return !slot || slot->is_zero();
    }

    // Injectivity as a sheaf map: full column rank over the function field.
    bool is_injective() const {
        const std::size_t rows = target_.rank(), cols = source_.rank();
        UPoly<F> uzero(zero_);
        Matrix<UPoly<F>> m(rows, std::vector<UPoly<F>>(cols, uzero));
        for (std::size_t j = 0; j < rows; ++j)
            for (std::size_t i = 0; i < cols; ++i)
                if (!entry_is_zero(j, i)) m[j][i] = entry(j, i).dehomogenized();
        auto one = UPoly<F>::constant(one_like(zero_));
        std::size_t rk = bareiss_rank<UPoly<F>>(
            m, one, [](const UPoly<F>& a, const UPoly<F>& b) { return exact_div(a, b); });
        return rk == cols;
    }

private:
    SplittingType source_;
    SplittingType target_;
    F zero_;
    std::vector<std::optional<BinaryForm<F>>> entries_;
};

namespace detail {

// Multiplication H^0(O(s)) -> H^0(O(s + deg form)) on monomial bases
// T0^(s-e) T1^e, written into a block of `big` at (row0, col0).
template <typename F>
void emit_mult_block(Matrix<F>& big, std::size_t row0, std::size_t col0,
                     const BinaryForm<F>& form, int src_twist) {
    if (src_twist < 0) return;
    for (int e = 0; e <= src_twist; ++e)
        for (int j = 0; j <= form.degree(); ++j)
            big[row0 + e + j][col0 + e] = big[row0 + e + j][col0 + e] + form.coeff(j);
}

} // namespace detail

// d_k = h^0(Cok(m)(-k)) for k in [k_min, k_max], by exact linear algebra on
// the four-term sequence 0 -> H^0 E(-k) -> H^0 F(-k) -> H^0 Cok(-k)
// -> H^1 E(-k) -> H^1 F(-k). The H^1 blocks are handled through Serre
// duality: H^1(O(d)) is dual to H^0(O(-d-2)) and the induced matrix is the
// transpose of multiplication by the same form on the dual bases.
template <typename F>
std::vector<std::int64_t> twisted_section_dims(const BundleMap<F>& m, int k_min, int k_max) {
    if (!m.is_injective())
        throw PreconditionError("twisted_section_dims: map is not injective as a sheaf map");
    const auto& src = m.source().summands();
    const auto& tgt = m.target().summands();
    const F zero = zero_like(m.zero_proto());
    const F one = one_like(m.zero_proto());

    std::vector<std::int64_t> out;
    for (int k = k_min; k <= k_max; ++k) {
        auto h0 = [](int d) { return std::max(0, d + 1); };
        auto h1 = [](int d) { return std::max(0, -d - 1); };

        std::size_t h0_src = 0, h0_tgt = 0, h1_src = 0, h1_tgt = 0;
        for (int a : src) h0_src += h0(a - k), h1_src += h1(a - k);
        for (int b : tgt) h0_tgt += h0(b - k), h1_tgt += h1(b - k);

        std::size_t rank0 = 0;
        if (h0_src > 0 && h0_tgt > 0) {
            Matrix<F> a0(h0_tgt, std::vector<F>(h0_src, zero));
            std::size_t col = 0;
            for (std::size_t i = 0; i < src.size(); ++i) {
                std::size_t row = 0;
                for (std::size_t j = 0; j < tgt.size(); ++j) {
                    if (!m.entry_is_zero(j, i) && src[i] - k >= 0)
                        detail::emit_mult_block(a0, row, col, m.entry(j, i), src[i] - k);
                    row += h0(tgt[j] - k);
                }
                col += h0(src[i] - k);
            }
            rank0 = rank_of(a0, one);
        }

        std::size_t rank1 = 0;
        if (h1_src > 0 && h1_tgt > 0) {
            // Dual map: blocks H^0(O(k - b_j - 2)) -> H^0(O(k - a_i - 2)).
            Matrix<F> a1(h1_src, std::vector<F>(h1_tgt, zero));
            std::size_t col = 0;
            for (std::size_t j = 0; j < tgt.size(); ++j) {
                std::size_t row = 0;
                for (std::size_t i = 0; i < src.size(); ++i) {
                    if (!m.entry_is_zero(j, i) && k - tgt[j] - 2 >= 0)
                        detail::emit_mult_block(a1, row, col, m.entry(j, i), k - tgt[j] - 2);
                    row += h0(k - src[i] - 2);
                }
                col += h0(k - tgt[j] - 2);
            }
            rank1 = rank_of(a1, one);
        }

        out.push_back(static_cast<std::int64_t>(h0_tgt - rank0) +
                      static_cast<std::int64_t>(h1_src - rank1));
    }
    return out;
}

// Recover the splitting type from a dimension profile: the number of
// summands with b_i >= k equals d_k - d_{k+1} on the scanned range. The
// profile must have decayed to zero by the end of the window; any
// bookkeeping mismatch (negative multiplicity, wrong rank or degree,
// profile not reproduced) means the sheaf has torsion and is reported so.
inline SplittingType splitting_from_dims(const std::vector<std::int64_t>& dims, int k_min,
                                         std::size_t rank, int degree) {
    if (dims.size() < 2) throw PreconditionError("splitting_from_dims: window too short");
    const int k_max = k_min + static_cast<int>(dims.size()) - 1;
    if (dims.back() != 0)
        throw TorsionError("splitting recovery: profile does not vanish at k = " +
                           std::to_string(k_max));
    auto d_at = [&](int k) -> std::int64_t {
        if (k > k_max) return 0;
        return dims[static_cast<std::size_t>(k - k_min)];
    };

    std::vector<int> summands;
    for (int v = k_min; v <= k_max - 1; ++v) {
        std::int64_t c_v = d_at(v) - d_at(v + 1);
        std::int64_t c_next = d_at(v + 1) - d_at(v + 2);
        std::int64_t mult = c_v - c_next;
        if (mult < 0)
            throw TorsionError("splitting recovery: negative multiplicity at twist " +
                               std::to_string(v));
        for (std::int64_t t = 0; t < mult; ++t) summands.push_back(v);
    }
    SplittingType st(summands);
    if (st.rank() != rank)
        throw TorsionError("splitting recovery: rank mismatch (got " +
                           std::to_string(st.rank()) + ", expected " + std::to_string(rank) + ")");
    if (st.degree() != degree)
        throw TorsionError("splitting recovery: degree mismatch (got " +
                           std::to_string(st.degree()) + ", expected " + std::to_string(degree) +
                           "); cokernel has torsion");
    for (int k = k_min; k <= k_max; ++k)
        if (st.h0_twist(k) != d_at(k))
            throw TorsionError("splitting recovery: profile not reproduced at k = " +
                               std::to_string(k));
    return st;
}

// Splitting type of the cokernel of an injective map of split bundles.
// Window: every quotient summand is >= the smallest target summand, and
// is bounded above by deg - (rank-1) * min, since the other summands each
// contribute at least min.
template <typename F>
SplittingType cokernel_splitting(const BundleMap<F>& m) {
    const int r = static_cast<int>(m.target().rank()) - static_cast<int>(m.source().rank());
    const int d = m.target().degree() - m.source().degree();
    if (r <= 0) throw PreconditionError("cokernel_splitting: source rank >= target rank");
    const int lo = m.target().min_summand();
    const int hi = d - (r - 1) * lo + 2;
    auto dims = twisted_section_dims(m, lo, hi);
    return splitting_from_dims(dims, lo, static_cast<std::size_t>(r), d);
}

} // namespace ci610
