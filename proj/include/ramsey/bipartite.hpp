#pragma once

#include "ramsey/bipartite_colouring.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/search.hpp"
#include "ramsey/witness.hpp"

#include <cstddef>
#include <optional>

namespace ramsey {

/// Complete graph on p + q vertices: left i becomes i, right j becomes p + j.
/// Edges inside a part are colourless, cross edges keep their colour.
Colouring unify(const BipartiteColouring& b);

/// Distinct nonzero colours between x (universe p) and y (universe q).
std::size_t bipartite_colour_count(const BipartiteColouring& b, const VertexSet& x, const VertexSet& y);

struct BipartiteWitness {
    VertexSet x; // left vertices, universe p
    VertexSet y; // right vertices, universe q
    std::size_t m = 0;
    CaseTrace trace; // over the unified colouring
};

/// A vertex meeting at least m colours gives X = {u} and one right neighbour
/// per colour (left part scanned first, then the right). Otherwise the search
/// runs across the two parts of unify(b). Throws ArgumentError for m == 0.
std::optional<BipartiteWitness> find_bipartite_m_coloured(const BipartiteColouring& b, std::size_t m,
                                                          const SearchBudget& budget = {});

/// Every m achieved by some nonempty X, Y. Witnesses are minimal in |X| + |Y|,
/// then lexicographic as unified vertex sets, and are stored unified.
SpectrumReport bipartite_spectrum(const BipartiteColouring& b, const Capacity& capacity = Capacity::from_environment());

/// Splits a unified vertex set back into its left and right parts.
BipartiteWitness split(const BipartiteColouring& b, const Witness& unified);

} // namespace ramsey
