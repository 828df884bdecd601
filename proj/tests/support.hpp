#pragma once

// Independent reference implementations for the tests. These deliberately
// avoid the library's counters and enumerators: colours are collected in a
// std::set and subsets are walked as bitmasks in descending numeric order.

#include "ramsey/bipartite_colouring.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/random.hpp"
#include "ramsey/vertex_set.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace testing {

using namespace ramsey;

inline std::size_t naive_gamma_mask(const Colouring& c, std::uint64_t mask)
{
    std::set<Colour> seen;
    for (Vertex u = 0; u < c.n(); ++u)
        for (Vertex v = u + 1; v < c.n(); ++v)
            if ((mask >> u & 1) && (mask >> v & 1) && c(u, v) != 0)
                seen.insert(c(u, v));
    return seen.size();
}

inline std::size_t naive_gamma(const Colouring& c, const VertexSet& x)
{
    std::uint64_t mask = 0;
    for (const auto v : x.members())
        mask |= std::uint64_t{1} << v;
    return naive_gamma_mask(c, mask);
}

inline std::uint64_t mask_of(const VertexSet& x)
{
    std::uint64_t mask = 0;
    for (const auto v : x.members())
        mask |= std::uint64_t{1} << v;
    return mask;
}

/// All achievable m >= 1, plus the minimum witness size per m.
struct NaiveSpectrum {
    std::set<std::size_t> values;
    std::vector<std::size_t> min_size; // indexed by m, 0 when absent
};

inline NaiveSpectrum naive_spectrum(const Colouring& c, std::size_t min_subset = 0)
{
    NaiveSpectrum out;
    out.min_size.assign(choose2(c.n()) + 1, 0);
    const std::uint64_t full = c.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c.n()) - 1;
    for (std::uint64_t mask = full;; --mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size >= min_subset) {
            const auto m = naive_gamma_mask(c, mask);
            if (m > 0) {
                out.values.insert(m);
                if (out.min_size[m] == 0 || size < out.min_size[m])
                    out.min_size[m] = size;
            }
        }
        if (mask == 0)
            break;
    }
    return out;
}

/// Achievable m over subsets of a ∪ b meeting both sides.
inline std::set<std::size_t> naive_straddling(const Colouring& c, const VertexSet& a, const VertexSet& b)
{
    std::set<std::size_t> out;
    const auto ma = mask_of(a);
    const auto mb = mask_of(b);
    const auto whole = ma | mb;
    for (std::uint64_t mask = whole;; mask = (mask - 1) & whole) {
        if ((mask & ma) && (mask & mb))
            if (const auto m = naive_gamma_mask(c, mask); m > 0)
                out.insert(m);
        if (mask == 0)
            break;
    }
    return out;
}

inline std::set<std::size_t> naive_bipartite_spectrum(const BipartiteColouring& b)
{
    std::set<std::size_t> out;
    for (std::uint64_t xm = 1; xm < (std::uint64_t{1} << b.p()); ++xm)
        for (std::uint64_t ym = 1; ym < (std::uint64_t{1} << b.q()); ++ym) {
            std::set<Colour> seen;
            for (Vertex u = 0; u < b.p(); ++u)
                for (Vertex v = 0; v < b.q(); ++v)
                    if ((xm >> u & 1) && (ym >> v & 1) && b(u, v) != 0)
                        seen.insert(b(u, v));
            if (!seen.empty())
                out.insert(seen.size());
        }
    return out;
}

/// Uniform colouring over 0..max_colour (colour 0 allowed when with_zero).
inline Colouring random_colouring(std::size_t n, Colour max_colour, Rng& rng, bool with_zero = false)
{
    std::vector<Colour> colours(choose2(n));
    for (auto& col : colours)
        col = with_zero ? static_cast<Colour>(rng.below(max_colour + 1))
                        : static_cast<Colour>(1 + rng.below(max_colour));
    return Colouring(n, std::move(colours));
}

inline VertexSet random_subset(std::size_t n, Rng& rng)
{
    VertexSet x(n);
    for (Vertex v = 0; v < n; ++v)
        if (rng.coin())
            x.insert(v);
    return x;
}

inline std::set<std::size_t> as_set(const std::vector<std::size_t>& values)
{
    return {values.begin(), values.end()};
}

} // namespace testing
