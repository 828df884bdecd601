#include "ramsey/oracle.hpp"

#include "colour_counter.hpp"
#include "ramsey/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace ramsey {

std::vector<std::size_t> SpectrumReport::values() const
{
    std::vector<std::size_t> out;
    out.reserve(achievable.size());
    for (const auto& [m, w] : achievable)
        out.push_back(m);
    return out;
}

namespace {

Witness oracle_witness(std::size_t n, std::span<const Vertex> members, std::size_t m, CaseLabel label)
{
    Witness w;
    w.vertices = VertexSet::from(n, members);
    w.m = m;
    TraceStep step;
    step.label = label;
    step.target = m;
    step.added.assign(members.begin(), members.end());
    w.trace.steps.push_back(std::move(step));
    return w;
}

// Depth-first walk over subsets of `pool` (ascending vertex order), i.e. in
// lexicographic order of the sorted member lists, with incremental counts.
class SubsetWalker {
public:
    SubsetWalker(const Colouring& c, std::vector<Vertex> pool)
        : c_(c), pool_(std::move(pool)), counter_(c.max_colour())
    {
        chosen_.reserve(pool_.size());
    }

    const std::vector<Vertex>& chosen() const noexcept { return chosen_; }
    std::size_t colours() const noexcept { return counter_.distinct(); }
    std::size_t pool_size() const noexcept { return pool_.size(); }

    void push(std::size_t pool_index)
    {
        const auto w = pool_[pool_index];
        for (const auto v : chosen_)
            counter_.add(c_(v, w));
        chosen_.push_back(w);
    }

    void pop()
    {
        const auto w = chosen_.back();
        chosen_.pop_back();
        for (const auto v : chosen_)
            counter_.remove(c_(v, w));
    }

    // visit(walker) -> bool: descend below the current subset?
    template <typename Visit>
    void walk_from(std::size_t start, std::size_t max_size, Visit&& visit)
    {
        for (std::size_t i = start; i < pool_.size(); ++i) {
            push(i);
            if (visit(*this) && chosen_.size() < max_size)
                walk_from(i + 1, max_size, visit);
            pop();
        }
    }

private:
    const Colouring& c_;
    std::vector<Vertex> pool_;
    detail::ColourCounter counter_;
    std::vector<Vertex> chosen_;
};

using BestTable = std::vector<std::vector<Vertex>>; // indexed by m; empty = not found

void record(BestTable& best, std::size_t m, const std::vector<Vertex>& chosen)
{
    if (best[m].empty() || best[m].size() > chosen.size())
        best[m] = chosen;
}

SpectrumReport enumerate(const Colouring& c, std::size_t max_size, std::size_t min_size, unsigned threads)
{
    const auto n = c.n();
    const auto top = std::min(choose2(n), c.colour_count());
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v)
        all[v] = v;

    // Partition i holds the subsets whose smallest vertex is i.
    std::vector<BestTable> partitions(n, BestTable(top + 1));
    auto run_partition = [&](std::size_t lead) {
        SubsetWalker walker(c, all);
        auto& best = partitions[lead];
        walker.push(lead);
        if (walker.chosen().size() < max_size) {
            walker.walk_from(lead + 1, max_size, [&](const SubsetWalker& w) {
                const auto g = w.colours();
                if (g > 0 && w.chosen().size() >= min_size)
                    record(best, g, w.chosen());
                return true;
            });
        }
    };

    const auto workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        for (std::size_t lead = 0; lead < n; ++lead)
            run_partition(lead);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (std::size_t lead; (lead = next.fetch_add(1)) < n;)
                    run_partition(lead);
            });
    }

    // Merge in partition order: earlier partitions are lexicographically smaller,
    // so a later one only wins with a strictly smaller witness.
    BestTable merged(top + 1);
    for (const auto& part : partitions)
        for (std::size_t m = 1; m <= top; ++m)
            if (!part[m].empty())
                record(merged, m, part[m]);

    SpectrumReport report;
    for (std::size_t m = 1; m <= top; ++m) {
        if (merged[m].empty())
            continue;
        report.achievable.emplace(m, oracle_witness(n, merged[m], m, CaseLabel::oracle));
        report.max_m = m;
    }
    for (std::size_t m = 1; m < report.max_m; ++m)
        if (!report.contains(m))
            report.missing.push_back(m);
    return report;
}

std::optional<Witness> find_minimal(const Colouring& c, std::size_t m, const VertexSet& pool_set,
                                    const VertexSet* side_a, const VertexSet* side_b)
{
    if (m == 0)
        throw ArgumentError("target colour count must be at least 1");
    SubsetWalker walker(c, pool_set.members());
    std::vector<Vertex> best;
    walker.walk_from(0, walker.pool_size(), [&](const SubsetWalker& w) {
        const auto g = w.colours();
        if (g > m)
            return false;
        const auto& chosen = w.chosen();
        if (!best.empty() && chosen.size() >= best.size())
            return false;
        if (g == m) {
            bool ok = true;
            if (side_a != nullptr) {
                const bool meets_a = std::any_of(chosen.begin(), chosen.end(), [&](Vertex v) { return side_a->contains(v); });
                const bool meets_b = std::any_of(chosen.begin(), chosen.end(), [&](Vertex v) { return side_b->contains(v); });
                ok = meets_a && meets_b;
            }
            if (ok) {
                best = chosen;
                return false;
            }
        }
        return best.empty() || chosen.size() + 1 < best.size();
    });
    if (best.empty())
        return std::nullopt;
    return oracle_witness(c.n(), best, m, CaseLabel::oracle);
}

} // namespace

SpectrumReport spectrum(const Colouring& c, std::optional<std::size_t> max_subset_size, const OracleOptions& options)
{
    options.capacity.check(c.n());
    auto max_size = c.n();
    if (max_subset_size)
        max_size = std::min(max_size, *max_subset_size);
    if (options.max_subset_size)
        max_size = std::min(max_size, *options.max_subset_size);
    return enumerate(c, max_size, options.min_subset_size, options.threads);
}

SpectrumReport large_subset_spectrum(const Colouring& c, std::size_t min_size, const OracleOptions& options)
{
    if (min_size > c.n())
        throw ArgumentError("min_size " + std::to_string(min_size) + " exceeds n = " + std::to_string(c.n()));
    auto opts = options;
    opts.min_subset_size = std::max(opts.min_subset_size, min_size);
    return spectrum(c, std::nullopt, opts);
}

std::optional<Witness> oracle_find(const Colouring& c, std::size_t m, const VertexSet& universe)
{
    return find_minimal(c, m, universe, nullptr, nullptr);
}

std::optional<Witness> oracle_find(const Colouring& c, std::size_t m)
{
    return oracle_find(c, m, c.vertices());
}

std::optional<Witness> oracle_find_straddling(const Colouring& c, std::size_t m, const VertexSet& a,
                                              const VertexSet& b)
{
    if (a.intersects(b))
        throw ArgumentError("straddling search requires disjoint sides");
    return find_minimal(c, m, a | b, &a, &b);
}

std::size_t count_m_coloured(const Colouring& c, std::size_t m)
{
    if (m == 0)
        throw ArgumentError("target colour count must be at least 1");
    SubsetWalker walker(c, c.vertices().members());
    std::size_t count = 0;
    walker.walk_from(0, c.n(), [&](const SubsetWalker& w) {
        const auto g = w.colours();
        if (g == m)
            ++count;
        return g <= m;
    });
    return count;
}

} // namespace ramsey
