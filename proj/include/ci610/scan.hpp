#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "ci610/errors.hpp"
#include "ci610/field.hpp"
#include "ci610/surface.hpp"

namespace ci610 {

using ConePoint = std::array<std::int64_t, 5>;

struct SingularityReport {
    std::int64_t prime = 0;
    std::uint64_t scanned = 0;
    // Nonzero cone points with f6 = g10 = 0 and Jacobian rank <= 1.
    std::vector<ConePoint> singular_points;
};

struct PointCount {
    std::int64_t prime = 0;
    std::uint64_t cone_solutions = 0; // nonzero cone points with f6 = g10 = 0
    std::uint64_t orbits = 0;         // weighted G_m orbits on those points
};

namespace detail {

struct CompiledTerm {
    std::int64_t c;
    std::array<int, 5> e;
};

using CompiledPoly = std::vector<CompiledTerm>;

inline CompiledPoly compile(const WPoly<Fp>& p) {
    CompiledPoly out;
    for (const auto& [m, c] : p.terms()) out.push_back({c.value(), m.e});
    return out;
}

// pow_table[v][k] = v^k mod p
inline std::vector<std::array<std::int64_t, 11>> pow_table(std::int64_t p) {
    std::vector<std::array<std::int64_t, 11>> t(static_cast<std::size_t>(p));
    for (std::int64_t v = 0; v < p; ++v) {
        t[v][0] = 1;
        for (int k = 1; k <= 10; ++k) t[v][k] = t[v][k - 1] * v % p;
    }
    return t;
}

inline std::int64_t eval(const CompiledPoly& poly,
                         const std::vector<std::array<std::int64_t, 11>>& pows,
                         const ConePoint& x, std::int64_t p) {
    std::int64_t acc = 0;
    for (const auto& t : poly) {
        std::int64_t v = t.c;
        for (int i = 0; i < 5; ++i)
            if (t.e[i]) v = v * pows[x[i]][t.e[i]] % p;
        acc = (acc + v) % p;
    }
    return acc;
}

inline ConePoint decode(std::uint64_t index, std::int64_t p) {
    ConePoint x{};
    for (int i = 4; i >= 0; --i) {
        x[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(p));
        index /= static_cast<std::uint64_t>(p);
    }
    return x;
}

inline void advance(ConePoint& x, std::int64_t p) {
    for (int i = 4; i >= 0; --i) {
        if (++x[i] < p) return;
        x[i] = 0;
    }
}

} // namespace detail

template <typename F>
SurfacePair<Fp> reduce_pair_mod(const SurfacePair<F>& pair, std::int64_t p);

template <>
inline SurfacePair<Fp> reduce_pair_mod<Rat>(const SurfacePair<Rat>& pair, std::int64_t p) {
    if (!is_supported_prime(p))
        throw PreconditionError("unsupported prime " + std::to_string(p));
    Fp zero(0, p);
    auto reduce = [&](const WPoly<Rat>& q) {
        WPoly<Fp> out(zero);
        for (const auto& [m, c] : q.terms()) out.add_term(m, reduce_mod(c, p));
        return out;
    };
    return {reduce(pair.f6), reduce(pair.g10)};
}

template <>
inline SurfacePair<Fp> reduce_pair_mod<Fp>(const SurfacePair<Fp>& pair, std::int64_t p) {
    if (!pair.f6.is_zero() && pair.f6.zero_proto().modulus() != p)
        throw PreconditionError("pair is over a different prime field");
    return pair;
}

// Exhaustive scan of the p^5 - 1 nonzero cone points. A point is reported
// iff f6 = g10 = 0 and all ten 2x2 minors of the Jacobian vanish there.
// The index space is cut into a fixed number of chunks, so the result and
// its order are byte-identical for any worker count.
inline SingularityReport scan_cone_singularities(const SurfacePair<Fp>& pair, std::int64_t p,
                                                 int jobs = 1) {
    if (!is_supported_prime(p))
        throw PreconditionError("unsupported prime " + std::to_string(p));
    if (pair.f6.zero_proto().modulus() != p || pair.g10.zero_proto().modulus() != p)
        throw PreconditionError("pair coefficients live in a different prime field");
    if (jobs < 1) jobs = 1;

    auto f = detail::compile(pair.f6);
    auto g = detail::compile(pair.g10);
    std::array<detail::CompiledPoly, 5> df, dg;
    for (std::size_t i = 0; i < 5; ++i) {
        df[i] = detail::compile(pair.f6.derivative(i));
        dg[i] = detail::compile(pair.g10.derivative(i));
    }
    auto pows = detail::pow_table(p);

    const std::uint64_t total = static_cast<std::uint64_t>(p) * p * p * p * p;
    const std::uint64_t n_chunks = 64;
    std::vector<std::vector<ConePoint>> hits(n_chunks);

    std::atomic<std::uint64_t> next_chunk{0};
    auto worker = [&]() {
        for (;;) {
            std::uint64_t chunk = next_chunk.fetch_add(1);
            if (chunk >= n_chunks) return;
            std::uint64_t lo = total * chunk / n_chunks;
            std::uint64_t hi = total * (chunk + 1) / n_chunks;
            ConePoint x = detail::decode(lo, p);
            for (std::uint64_t idx = lo; idx < hi; ++idx, detail::advance(x, p)) {
                if (idx == 0) continue; // origin is not a cone point
                if (detail::eval(f, pows, x, p) != 0) continue;
                if (detail::eval(g, pows, x, p) != 0) continue;
                std::array<std::int64_t, 5> jf, jg;
                for (int i = 0; i < 5; ++i) {
                    jf[i] = detail::eval(df[i], pows, x, p);
                    jg[i] = detail::eval(dg[i], pows, x, p);
                }
                bool rank_le_1 = true;
                for (int i = 0; i < 5 && rank_le_1; ++i)
                    for (int j = i + 1; j < 5; ++j)
                        if ((jf[i] * jg[j] - jf[j] * jg[i]) % p != 0) {
                            rank_le_1 = false;
                            break;
                        }
                if (rank_le_1) hits[chunk].push_back(x);
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SingularityReport rep;
    rep.prime = p;
    rep.scanned = total - 1;
    for (const auto& chunk : hits)
        rep.singular_points.insert(rep.singular_points.end(), chunk.begin(), chunk.end());
    return rep;
}

// Orbits of the weighted G_m-action lambda . x = (l x0, l^2 y0, l^2 y1,
// l^3 z0, l^5 u0) on the nonzero cone solutions, counted by canonical
// (lexicographically smallest) orbit representatives.
inline PointCount count_points(const SurfacePair<Fp>& pair, std::int64_t p) {
    if (!is_supported_prime(p))
        throw PreconditionError("unsupported prime " + std::to_string(p));
    if (pair.f6.zero_proto().modulus() != p || pair.g10.zero_proto().modulus() != p)
        throw PreconditionError("pair coefficients live in a different prime field");
    auto f = detail::compile(pair.f6);
    auto g = detail::compile(pair.g10);
    auto pows = detail::pow_table(p);

    PointCount out;
    out.prime = p;
    const std::uint64_t total = static_cast<std::uint64_t>(p) * p * p * p * p;
    ConePoint x{};
    for (std::uint64_t idx = 0; idx < total; ++idx, detail::advance(x, p)) {
        if (idx == 0) continue;
        if (detail::eval(f, pows, x, p) != 0) continue;
        if (detail::eval(g, pows, x, p) != 0) continue;
        ++out.cone_solutions;
        bool minimal = true;
        for (std::int64_t l = 2; l < p && minimal; ++l) {
            ConePoint y{x[0] * l % p, x[1] * l % p * l % p, x[2] * l % p * l % p,
                        x[3] * pows[l][3] % p, x[4] * pows[l][5] % p};
            if (y < x) minimal = false;
        }
        if (minimal) ++out.orbits;
    }
    return out;
}

} // namespace ci610
