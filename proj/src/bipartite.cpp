#include "ramsey/bipartite.hpp"

#include "colour_counter.hpp"
#include "ramsey/errors.hpp"

#include <map>
#include <string>
#include <vector>

namespace ramsey {

Colouring unify(const BipartiteColouring& b)
{
    const auto p = b.p();
    Capacity open;
    open.sparse = true;
    return Colouring::from_function(
        p + b.q(),
        [&](Vertex u, Vertex v) -> Colour {
            if (u < p && v >= p)
                return b(u, static_cast<Vertex>(v - p));
            return colourless;
        },
        open);
}

std::size_t bipartite_colour_count(const BipartiteColouring& b, const VertexSet& x, const VertexSet& y)
{
    if (x.universe() != b.p() || y.universe() != b.q())
        throw ArgumentError("bipartite vertex sets must have universes p and q");
    detail::ColourMarks marks(b.max_colour());
    x.for_each([&](Vertex u) { y.for_each([&](Vertex v) { marks.mark(b(u, v)); }); });
    return marks.distinct();
}

BipartiteWitness split(const BipartiteColouring& b, const Witness& unified)
{
    BipartiteWitness w{VertexSet(b.p()), VertexSet(b.q()), unified.m, unified.trace};
    unified.vertices.for_each([&](Vertex v) {
        if (v < b.p())
            w.x.insert(v);
        else
            w.y.insert(static_cast<Vertex>(v - b.p()));
    });
    return w;
}

namespace {

// X = {centre} on one side, one neighbour per colour on the other.
std::optional<BipartiteWitness> degree_shortcut(const BipartiteColouring& b, std::size_t m)
{
    detail::ColourMarks marks(b.max_colour());
    for (Vertex u = 0; u < b.p(); ++u) {
        marks.reset();
        VertexSet y(b.q());
        for (Vertex v = 0; v < b.q() && y.size() < m; ++v)
            if (marks.mark(b(u, v)))
                y.insert(v);
        if (y.size() == m)
            return BipartiteWitness{VertexSet::of(b.p(), {u}), y, m, {}};
    }
    for (Vertex v = 0; v < b.q(); ++v) {
        marks.reset();
        VertexSet x(b.p());
        for (Vertex u = 0; u < b.p() && x.size() < m; ++u)
            if (marks.mark(b(u, v)))
                x.insert(u);
        if (x.size() == m)
            return BipartiteWitness{x, VertexSet::of(b.q(), {v}), m, {}};
    }
    return std::nullopt;
}

} // namespace

std::optional<BipartiteWitness> find_bipartite_m_coloured(const BipartiteColouring& b, std::size_t m,
                                                          const SearchBudget& budget)
{
    if (m == 0)
        throw ArgumentError("target colour count must be at least 1");
    budget.validate();
    if (auto w = degree_shortcut(b, m)) {
        TraceStep step;
        step.label = CaseLabel::degree_shortcut;
        step.target = m;
        w->x.for_each([&](Vertex u) { step.added.push_back(u); });
        w->y.for_each([&](Vertex v) { step.added.push_back(static_cast<Vertex>(b.p() + v)); });
        w->trace.steps.push_back(std::move(step));
        return w;
    }
    if (b.p() == 0 || b.q() == 0)
        return std::nullopt;
    const auto c = unify(b);
    auto left = VertexSet(c.n());
    auto right = VertexSet(c.n());
    for (Vertex v = 0; v < c.n(); ++v)
        (v < b.p() ? left : right).insert(v);
    auto found = find_m_coloured_cross(c, left, right, m, budget);
    if (!found)
        return std::nullopt;
    return split(b, *found);
}

SpectrumReport bipartite_spectrum(const BipartiteColouring& b, const Capacity& capacity)
{
    const auto p = b.p();
    const auto q = b.q();
    capacity.check(p + q);
    if (p + q > 40)
        throw CapacityError("bipartite spectrum enumerates 2^(p+q) pairs; p + q = " + std::to_string(p + q) +
                            " is too large");

    struct Best {
        std::size_t size;
        VertexSet set;
    };
    std::map<std::size_t, Best> best;
    detail::ColourMarks marks(b.max_colour());
    const auto n = p + q;
    for (std::uint64_t xm = 1; xm < (std::uint64_t{1} << p); ++xm) {
        for (std::uint64_t ym = 1; ym < (std::uint64_t{1} << q); ++ym) {
            marks.reset();
            for (Vertex u = 0; u < p; ++u)
                if (xm >> u & 1)
                    for (Vertex v = 0; v < q; ++v)
                        if (ym >> v & 1)
                            marks.mark(b(u, v));
            const auto m = marks.distinct();
            if (m == 0)
                continue;
            VertexSet set(n);
            for (Vertex u = 0; u < p; ++u)
                if (xm >> u & 1)
                    set.insert(u);
            for (Vertex v = 0; v < q; ++v)
                if (ym >> v & 1)
                    set.insert(static_cast<Vertex>(p + v));
            const auto size = set.size();
            auto it = best.find(m);
            if (it == best.end())
                best.emplace(m, Best{size, set});
            else if (size < it->second.size || (size == it->second.size && set < it->second.set))
                it->second = Best{size, set};
        }
    }

    SpectrumReport report;
    for (auto& [m, entry] : best) {
        Witness w;
        w.vertices = entry.set;
        w.m = m;
        TraceStep step;
        step.label = CaseLabel::oracle;
        step.target = m;
        step.added = entry.set.members();
        w.trace.steps.push_back(std::move(step));
        report.achievable.emplace(m, std::move(w));
        report.max_m = std::max(report.max_m, m);
    }
    for (std::size_t m = 1; m <= report.max_m; ++m)
        if (!report.contains(m))
            report.missing.push_back(m);
    return report;
}

} // namespace ramsey
