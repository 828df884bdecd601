#pragma once

#include "ramsey/vertex_set.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace ramsey {

using Colour = std::uint32_t;

/// The reserved colourless colour. It is never counted by the gamma functions.
inline constexpr Colour colourless = 0;

/// Vertex-count policy. Colourings above dense_cap are rejected unless the
/// caller opts into sparse mode.
struct Capacity {
    std::size_t dense_cap = 64;
    bool sparse = false;

    /// Default policy, with dense_cap overridden by RAMSEY_SPECTRUM_MAX_N when set.
    static Capacity from_environment();

    void check(std::size_t n) const;
};

struct Edge {
    Vertex u;
    Vertex v;
    Colour colour;

    friend bool operator==(const Edge&, const Edge&) = default;
};

constexpr std::size_t choose2(std::size_t n) noexcept
{
    return n < 2 ? 0 : n * (n - 1) / 2;
}

/// Position of the edge {u, v}, u < v, in row-major upper-triangular order:
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
constexpr std::size_t edge_index(std::size_t n, std::size_t u, std::size_t v) noexcept
{
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

/// Immutable edge colouring of the complete graph on vertices 0..n-1.
class Colouring {
public:
    Colouring() = default;

    /// `edge_colours` lists one colour per edge in edge_index order.
    Colouring(std::size_t n, std::vector<Colour> edge_colours, const Capacity& capacity = {});

    static Colouring from_function(std::size_t n, const std::function<Colour(Vertex, Vertex)>& colour_of,
                                   const Capacity& capacity = {});

    std::size_t n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return colours_.size(); }

    /// Colour of {u, v}; either argument order. Throws RangeError on a bad pair.
    Colour at(Vertex u, Vertex v) const;

    /// Unchecked lookup for hot loops. Requires u != v, both in range.
    Colour operator()(Vertex u, Vertex v) const noexcept
    {
        return u < v ? colours_[edge_index(n_, u, v)] : colours_[edge_index(n_, v, u)];
    }

    std::span<const Colour> edge_colours() const noexcept { return colours_; }
    std::vector<Edge> edges() const;

    /// Largest colour id present (0 for no edges or all-colourless).
    Colour max_colour() const noexcept { return max_colour_; }

    /// Number of distinct nonzero colours over the whole graph.
    std::size_t colour_count() const;

    /// Nonzero colours in use form exactly 1..colour_count().
    bool is_normalized() const;

    /// Order-preserving relabel of the nonzero colours onto 1..k.
    Colouring normalized() const;

    VertexSet vertices() const { return VertexSet::all(n_); }

    friend bool operator==(const Colouring&, const Colouring&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Colour> colours_;
    Colour max_colour_ = 0;
};

/// Sorted set of nonzero colours.
class ColourSet {
public:
    ColourSet() = default;
    ColourSet(std::initializer_list<Colour> colours);
    explicit ColourSet(std::vector<Colour> colours);

    bool contains(Colour c) const;
    void insert(Colour c);
    std::size_t size() const noexcept { return colours_.size(); }
    bool empty() const noexcept { return colours_.empty(); }

    const std::vector<Colour>& values() const noexcept { return colours_; }
    auto begin() const noexcept { return colours_.begin(); }
    auto end() const noexcept { return colours_.end(); }

    ColourSet& operator|=(const ColourSet& other);

    friend bool operator==(const ColourSet&, const ColourSet&) = default;

private:
    std::vector<Colour> colours_;
};

/// Distinct nonzero colours on edges inside `x`.
std::size_t gamma(const Colouring& c, const VertexSet& x);

/// Distinct nonzero colours on edges with one endpoint in each of the disjoint sets.
std::size_t gamma_cross(const Colouring& c, const VertexSet& x, const VertexSet& y);

/// Distinct nonzero colours on edges at v. Requires n >= 2.
std::size_t gamma_vertex(const Colouring& c, Vertex v);

/// gamma_vertex restricted to edges from v into `within` (v itself is skipped).
std::size_t gamma_vertex(const Colouring& c, Vertex v, const VertexSet& within);

/// Copy of `c` with every edge coloured from `recoloured` made colourless.
Colouring recolour_to_zero(const Colouring& c, const ColourSet& recoloured);

/// Classes of all-but-u keyed by the colour of the edge to u, ascending by
/// colour (so the colourless class, when nonempty, comes first).
std::vector<std::pair<Colour, VertexSet>> partition_by_colour_at(const Colouring& c, Vertex u);

/// Same partition over `within \ {u}`.
std::vector<std::pair<Colour, VertexSet>> partition_by_colour_at(const Colouring& c, Vertex u,
                                                                 const VertexSet& within);

/// Checks sum gamma(X_i) + sum_{i<j} gamma(X_i, X_j) >= gamma(union X_i) for
/// pairwise disjoint parts. Throws ArgumentError on overlap.
bool superadditivity_check(const Colouring& c, std::span<const VertexSet> parts);

} // namespace ramsey
