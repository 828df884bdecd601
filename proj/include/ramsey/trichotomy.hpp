#pragma once

#include "ramsey/canonical.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/search.hpp"
#include "ramsey/witness.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace ramsey {

enum class TrichotomyBranch {
    all_m,    // every m in 1..n_target achieved
    rainbow,  // rainbow set of n_target vertices
    star,     // star coloured set of n_target vertices
    violated, // none of the above within the budget
};

std::string_view to_string(TrichotomyBranch branch);

struct TrichotomyReport {
    std::size_t n_target = 0;
    std::map<std::size_t, Witness> witnesses; // m -> witness, for the m that were found
    std::vector<std::size_t> missing;         // m in 1..n_target not found
    std::optional<CanonicalForm> rainbow;
    std::optional<CanonicalForm> star;
    bool all_m = false;
    TrichotomyBranch branch = TrichotomyBranch::violated; // first branch that holds, in enum order

    bool satisfied() const noexcept { return branch != TrichotomyBranch::violated; }
};

/// Checks which of the three outcomes holds for c: an m-coloured set for every
/// m in [n_target] (constructive search), a rainbow set of size n_target, or a
/// star coloured set of size n_target.
TrichotomyReport verify_trichotomy(const Colouring& c, std::size_t n_target, const SearchBudget& budget = {});

} // namespace ramsey
