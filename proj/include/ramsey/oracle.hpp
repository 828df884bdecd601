#pragma once

#include "ramsey/colouring.hpp"
#include "ramsey/witness.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace ramsey {

/// Achievable colour counts of a colouring with one minimal witness each.
struct SpectrumReport {
    std::map<std::size_t, Witness> achievable;
    std::size_t max_m = 0;
    std::vector<std::size_t> missing; // unachieved values in 1..max_m, ascending

    bool contains(std::size_t m) const { return achievable.count(m) != 0; }
    std::vector<std::size_t> values() const;
};

struct OracleOptions {
    std::optional<std::size_t> max_subset_size;
    std::size_t min_subset_size = 0;
    /// Worker threads for the enumeration; results do not depend on this.
    unsigned threads = 1;
    Capacity capacity{};
};

/// Every m >= 1 for which some vertex subset is exactly m-coloured. Subsets are
/// ranked by size, then lexicographically, and the first one per m is kept.
SpectrumReport spectrum(const Colouring& c, std::optional<std::size_t> max_subset_size = std::nullopt,
                        const OracleOptions& options = {});

/// Spectrum over subsets of at least `min_size` vertices.
SpectrumReport large_subset_spectrum(const Colouring& c, std::size_t min_size, const OracleOptions& options = {});

/// Minimal exactly-m-coloured subset of `universe`, or nullopt. Subtrees whose
/// colour count already exceeds m are pruned (gamma is monotone).
std::optional<Witness> oracle_find(const Colouring& c, std::size_t m, const VertexSet& universe);
std::optional<Witness> oracle_find(const Colouring& c, std::size_t m);

/// As oracle_find, restricted to subsets of a ∪ b meeting both sides.
std::optional<Witness> oracle_find_straddling(const Colouring& c, std::size_t m, const VertexSet& a,
                                              const VertexSet& b);

/// Number of vertex subsets that are exactly m-coloured (m >= 1).
std::size_t count_m_coloured(const Colouring& c, std::size_t m);

} // namespace ramsey
