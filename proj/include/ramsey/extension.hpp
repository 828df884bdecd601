#pragma once

#include "ramsey/colouring.hpp"
#include "ramsey/witness.hpp"

#include <cstddef>
#include <optional>

namespace ramsey {

/// T ⊂ S of size t (default floor(sqrt(|S|))) such that no spoke colour c(x, u),
/// u ∈ T, appears on an edge inside T. Greedy max-degree deletion on the
/// collision triples {u} ∪ e_u, with an exhaustive pass over t-subsets if the
/// greedy run ends short. Throws ArgumentError unless S is rainbow, x ∉ S,
/// t >= 1 and |S| >= t * t. Returns members in ascending order.
std::optional<VertexSet> find_collision_free_subset(const Colouring& c, const VertexSet& s, Vertex x,
                                                    std::optional<std::size_t> t = std::nullopt);

/// For twins x, y (equal colour vectors onto the rainbow set S) build a set with
/// exactly C(n,2)+1 colours: either x plus n vertices of T sharing one spoke
/// colour, or U' ∪ {x, y} with U' ⊂ T of size n-1 chosen so that U' ∪ {x} is
/// rainbow and avoids c(x, y). Throws ArgumentError on precondition
/// violations; nullopt when T is too small for either branch.
std::optional<Witness> build_plus_one_witness(const Colouring& c, const VertexSet& s, Vertex x, Vertex y,
                                              std::size_t n);

} // namespace ramsey
