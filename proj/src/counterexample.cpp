#include "ramsey/counterexample.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/generators.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/random.hpp"

#include <string>
#include <vector>

namespace ramsey {

std::string_view to_string(CounterexampleMode mode)
{
    switch (mode) {
    case CounterexampleMode::trivial: return "trivial";
    case CounterexampleMode::exhaustive: return "exhaustive";
    case CounterexampleMode::stochastic: return "stochastic";
    }
    return "unknown";
}

std::uint64_t stirling2(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    // row-by-row recurrence S(i, j) = j S(i-1, j) + S(i-1, j-1)
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; };
    auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
        return (a != 0 && b > UINT64_MAX / a) ? UINT64_MAX : a * b;
    };
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(i, k); j >= 1; --j)
            row[j] = sat_add(sat_mul(j, row[j]), row[j - 1]);
        row[0] = 0;
    }
    return row[k];
}

namespace {

bool omits(const Colouring& c, std::size_t m)
{
    return !oracle_find(c, m).has_value();
}

Capacity open_capacity()
{
    Capacity cap;
    cap.sparse = true;
    return cap;
}

// Restricted growth strings with exactly k blocks: colours appear in order of
// first use, which picks one representative per colour renaming.
class Enumerator {
public:
    Enumerator(std::size_t n, std::size_t k, std::size_t m)
        : n_(n), k_(k), m_(m), colours_(choose2(n), colourless)
    {
    }

    std::optional<Colouring> run() { return descend(0, 0); }
    std::uint64_t examined() const noexcept { return examined_; }

private:
    std::optional<Colouring> descend(std::size_t pos, std::size_t used)
    {
        const auto edges = colours_.size();
        if (used + (edges - pos) < k_)
            return std::nullopt;
        if (pos == edges) {
            ++examined_;
            Colouring c(n_, colours_, open_capacity());
            if (omits(c, m_))
                return c;
            return std::nullopt;
        }
        const auto top = std::min(used + 1, k_);
        for (std::size_t col = 1; col <= top; ++col) {
            colours_[pos] = static_cast<Colour>(col);
            if (auto hit = descend(pos + 1, std::max(used, col)))
                return hit;
        }
        return std::nullopt;
    }

    std::size_t n_;
    std::size_t k_;
    std::size_t m_;
    std::vector<Colour> colours_;
    std::uint64_t examined_ = 0;
};

} // namespace

CounterexampleResult search_counterexample_F(std::size_t n, std::size_t k, std::size_t m,
                                             const CounterexampleBudget& budget)
{
    const auto edges = choose2(n);
    if (k < 1 || k > edges)
        throw ArgumentError("no colouring of K_" + std::to_string(n) + " uses exactly " + std::to_string(k) +
                            " colours");
    if (m == 0)
        throw ArgumentError("target colour count must be at least 1");

    CounterexampleResult result;
    // Any edge is 1-coloured and the whole vertex set is k-coloured.
    if (m == 1 || m == k) {
        result.mode = CounterexampleMode::trivial;
        result.absence_proven = true;
        return result;
    }
    // No vertex set can see more colours than exist.
    if (m > k) {
        result.mode = CounterexampleMode::trivial;
        result.colouring = gen_random_exact_k(n, k, budget.seed);
        result.colourings_examined = 1;
        return result;
    }

    if (stirling2(edges, k) <= budget.exhaustive_limit) {
        Enumerator enumerator(n, k, m);
        result.mode = CounterexampleMode::exhaustive;
        result.colouring = enumerator.run();
        result.colourings_examined = enumerator.examined();
        result.absence_proven = !result.colouring.has_value();
        return result;
    }

    // Hill-climbing on the number of exactly-m-coloured subsets, with
    // surjectivity preserved by never recolouring the last edge of a colour.
    result.mode = CounterexampleMode::stochastic;
    Rng rng(budget.seed);
    for (std::size_t restart = 0; restart < budget.restarts; ++restart) {
        auto start = gen_random_exact_k(n, k, rng.next());
        std::vector<Colour> colours(start.edge_colours().begin(), start.edge_colours().end());
        std::vector<std::size_t> uses(k + 1, 0);
        for (const auto col : colours)
            ++uses[col];
        auto score = count_m_coloured(start, m);
        ++result.colourings_examined;

        for (std::size_t step = 0; step < budget.steps_per_restart && score > 0; ++step) {
            const auto e = static_cast<std::size_t>(rng.below(edges));
            const auto old = colours[e];
            if (uses[old] == 1)
                continue;
            auto fresh = static_cast<Colour>(1 + rng.below(k - 1));
            if (fresh >= old)
                ++fresh;
            colours[e] = fresh;
            Colouring candidate(n, colours, open_capacity());
            const auto candidate_score = count_m_coloured(candidate, m);
            ++result.colourings_examined;
            if (candidate_score <= score) {
                score = candidate_score;
                --uses[old];
                ++uses[fresh];
            } else {
                colours[e] = old;
            }
        }
        if (score == 0) {
            result.colouring = Colouring(n, std::move(colours), open_capacity());
            return result;
        }
    }
    return result;
}

} // namespace ramsey
