#pragma once

#include "ramsey/colouring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ramsey {

struct CounterexampleBudget {
    std::uint64_t seed = 1;
    /// Exhaustive enumeration runs when the number of exact-k colourings up to
    /// colour renaming, S(C(n,2), k), is at most this.
    std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
    std::size_t restarts = 32;
    std::size_t steps_per_restart = 4000;
};

enum class CounterexampleMode {
    trivial,    // settled without search (m = 1, m = k, or m > k)
    exhaustive, // every canonical exact-k colouring was examined
    stochastic, // seeded hill-climbing; absence is not a proof
};

std::string_view to_string(CounterexampleMode mode);

struct CounterexampleResult {
    std::optional<Colouring> colouring; // exactly k colours, m not in its spectrum
    CounterexampleMode mode = CounterexampleMode::trivial;
    bool absence_proven = false;        // true when no counterexample exists at all
    std::uint64_t colourings_examined = 0;
};

/// Looks for an exact-k colouring of K_n with no exactly-m-coloured vertex set,
/// i.e. a witness that F(V, k, m) fails for |V| = n. Throws ArgumentError when
/// k is not in 1..C(n,2) or m == 0.
CounterexampleResult search_counterexample_F(std::size_t n, std::size_t k, std::size_t m,
                                             const CounterexampleBudget& budget = {});

/// Stirling number of the second kind, saturating at UINT64_MAX.
std::uint64_t stirling2(std::size_t n, std::size_t k);

} // namespace ramsey
