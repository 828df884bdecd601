#pragma once

#include "ramsey/canonical.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/witness.hpp"

#include <cstddef>
#include <optional>
#include <variant>

namespace ramsey {

/// Finite stand-ins for the "infinitely many colours" conditions of the
/// inductive witness search.
///
/// A vertex set, class or pair of classes is *rich* when it carries at least
/// `colour_threshold` nonzero colours (default m * (m + 1) for the requested m).
/// Instances of at most `fallback_size` vertices go straight to the oracle, as
/// does any level deeper than `max_depth` (default m + 2). Oracle calls are
/// limited to instances of at most `oracle_cap` vertices, and a single search
/// expands at most `max_nodes` case nodes.
struct SearchBudget {
    std::optional<std::size_t> colour_threshold;
    std::size_t fallback_size = 4;
    std::optional<std::size_t> max_depth;
    std::size_t oracle_cap = 22;
    std::size_t max_nodes = 20000;

    /// Throws ArgumentError unless every field is positive and fallback_size >= 3.
    void validate() const;

    std::size_t threshold_for(std::size_t m) const { return colour_threshold.value_or(m * (m + 1)); }
    std::size_t depth_for(std::size_t m) const { return max_depth.value_or(m + 2); }

    /// Budget whose fallback covers any instance of up to n vertices.
    static SearchBudget full_fallback(std::size_t n);
};

/// Inductive search for an exactly-m-coloured vertex set. Returns a witness
/// whose trace replays to the same set, or nullopt when none was found within
/// the budget. Throws ArgumentError for m == 0.
std::optional<Witness> find_m_coloured(const Colouring& c, std::size_t m, const SearchBudget& budget = {});

/// Search for an exactly-m-coloured set meeting both of the disjoint sets `a`
/// and `b` (inside a ∪ b). Throws ArgumentError on overlap.
std::optional<Witness> find_m_coloured_cross(const Colouring& c, const VertexSet& a, const VertexSet& b,
                                             std::size_t m, const SearchBudget& budget = {});

/// Three-vertex 2-coloured set meeting both sides, built from a rainbow
/// matching between `a` and `b`. With `anchor` given, a colourless edge
/// between matched endpoints closes a triangle with it immediately.
std::optional<Witness> find_2_coloured_via_matching(const Colouring& c, const VertexSet& a, const VertexSet& b,
                                                    std::optional<Vertex> anchor = std::nullopt);

using Extraction = std::variant<Witness, CanonicalForm>;

/// For the first vertex v with gamma_vertex(v) at or above the threshold, look
/// for a canonical (m+1)-set among neighbours joined to v in distinct colours.
/// Left/right sets give an m-coloured witness; a 1-coloured set gives a star
/// with centre v; a rainbow set is returned as the obstruction. Returns nullopt
/// when no vertex is rich or its neighbourhood has no canonical set of that size.
std::optional<Extraction> extract_canonical_or_witness(const Colouring& c, std::size_t m,
                                                       const SearchBudget& budget = {});

} // namespace ramsey
