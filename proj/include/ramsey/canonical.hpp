#pragma once

#include "ramsey/colouring.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace ramsey {

enum class CanonicalKind { rainbow, mono, left, right, star };

std::string_view to_string(CanonicalKind kind);

/// A vertex set whose induced colouring has one of the canonical shapes.
///
/// Definitions are strict and compare colour ids literally (colour 0 included):
///  - rainbow: all edges pairwise distinct (size >= 2);
///  - mono: all edges one colour (size >= 2);
///  - left: colour of {i, j}, i < j, depends exactly on i, so distinct smaller
///    endpoints carry distinct colours (size >= 3, hence never mono);
///  - right: as left with the larger endpoint;
///  - star: some centre v with the rest mono and the spokes from v pairwise
///    distinct and different from that colour (size >= 3). `centre` holds the
///    smallest valid centre.
struct CanonicalForm {
    CanonicalKind kind = CanonicalKind::rainbow;
    VertexSet vertices;
    std::optional<Vertex> centre;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Direct definitional check of `form` against `c`.
bool satisfies(const Colouring& c, const CanonicalForm& form);

/// Every canonical form on exactly `size` vertices, ordered by vertex set then
/// kind. Found by per-kind backtracking (all five shapes are hereditary).
std::vector<CanonicalForm> find_canonical_subsets(const Colouring& c, std::size_t size);
std::vector<CanonicalForm> find_canonical_subsets(const Colouring& c, std::size_t size, const VertexSet& universe);

/// Lexicographically first `size`-subset of `universe` of the given kind.
std::optional<CanonicalForm> first_canonical_subset(const Colouring& c, std::size_t size, CanonicalKind kind,
                                                    const VertexSet& universe);

} // namespace ramsey
