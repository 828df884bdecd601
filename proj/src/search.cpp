#include "ramsey/search.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/oracle.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

void SearchBudget::validate() const
{
    if (colour_threshold && *colour_threshold == 0)
        throw ArgumentError("colour_threshold must be positive");
    if (fallback_size < 3)
        throw ArgumentError("fallback_size must be at least 3");
    if (max_depth && *max_depth == 0)
        throw ArgumentError("max_depth must be positive");
    if (oracle_cap == 0)
        throw ArgumentError("oracle_cap must be positive");
    if (max_nodes == 0)
        throw ArgumentError("max_nodes must be positive");
}

SearchBudget SearchBudget::full_fallback(std::size_t n)
{
    SearchBudget b;
    b.fallback_size = std::max<std::size_t>(n, 3);
    b.oracle_cap = std::max<std::size_t>(n, 3);
    return b;
}

namespace {

using Steps = std::vector<TraceStep>;
using Classes = std::vector<std::pair<Colour, VertexSet>>;

Steps prepend(TraceStep step, Steps rest)
{
    rest.insert(rest.begin(), std::move(step));
    return rest;
}

TraceStep make_step(CaseLabel label, std::size_t target, std::optional<Edge> anchor, std::vector<Vertex> added,
                    ColourSet recoloured = {}, std::vector<Vertex> context = {})
{
    TraceStep s;
    s.label = label;
    s.target = target;
    s.anchor = anchor;
    s.added = std::move(added);
    s.recoloured = std::move(recoloured);
    s.context = std::move(context);
    return s;
}

const VertexSet* zero_class(const Classes& classes)
{
    if (!classes.empty() && classes.front().first == colourless)
        return &classes.front().second;
    return nullptr;
}

std::optional<Edge> smallest_edge(const Colouring& c, const VertexSet& a, const VertexSet& b)
{
    std::optional<Edge> found;
    a.for_each([&](Vertex u) {
        if (found)
            return;
        b.for_each([&](Vertex v) {
            if (!found && u != v && c(u, v) != colourless)
                found = Edge{u, v, c(u, v)};
        });
    });
    return found;
}

// Smallest nonzero edge inside `u`, lexicographic on (min, max).
std::optional<Edge> smallest_edge_within(const Colouring& c, const VertexSet& u)
{
    const auto members = u.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (const auto col = c(members[i], members[j]); col != colourless)
                return Edge{members[i], members[j], col};
    return std::nullopt;
}

Witness assemble(std::size_t n, std::size_t m, Steps steps)
{
    Witness w;
    w.vertices = VertexSet(n);
    for (const auto& s : steps)
        for (const auto v : s.added)
            w.vertices.insert(v);
    w.m = m;
    w.trace.steps = std::move(steps);
    return w;
}

std::optional<Steps> matching_search(const Colouring& c, const VertexSet& a, const VertexSet& b,
                                     std::optional<Vertex> anchor);

class Searcher {
public:
    Searcher(const SearchBudget& budget, std::size_t m)
        : budget_(budget), threshold_(budget.threshold_for(m)), depth_cap_(budget.depth_for(m))
    {
    }

    bool exhausted() const noexcept { return exhausted_; }

    std::optional<Steps> full(const Colouring& c, const VertexSet& u, std::size_t m, std::size_t depth)
    {
        if (!tick() || u.size() < 2)
            return std::nullopt;
        if (m == 1) {
            if (const auto e = smallest_edge_within(c, u))
                return Steps{make_step(CaseLabel::base_edge, 1, e, {e->u, e->v})};
            return std::nullopt;
        }
        if (u.size() <= budget_.fallback_size || depth > depth_cap_)
            return oracle(c, u, m);

        if (auto extracted = extract_within(c, u, m, threshold_); extracted && std::holds_alternative<Witness>(*extracted)) {
            auto& w = std::get<Witness>(*extracted);
            return std::move(w.trace.steps);
        }

        const auto anchor = smallest_edge_within(c, u);
        if (!anchor)
            return std::nullopt;
        const auto classes_u = partition_by_colour_at(c, anchor->u, u);
        const auto* zero_u = zero_class(classes_u);

        if (zero_u == nullptr || gamma(c, *zero_u) < threshold_) {
            if (auto r = full_cases_at(c, anchor->u, *anchor, classes_u, m, depth))
                return r;
        } else {
            // Colourless class at u is rich: split it by colour at v.
            const auto classes_v = partition_by_colour_at(c, anchor->v, *zero_u);
            if (auto r = full_cases_at(c, anchor->v, *anchor, classes_v, m, depth))
                return r;
            if (const auto* v0 = zero_class(classes_v); v0 != nullptr && v0->size() >= 2) {
                if (auto sub = full(recolour_to_zero(c, {anchor->colour}), *v0, m - 1, depth + 1))
                    return prepend(make_step(CaseLabel::v0_fallback, m, anchor, {anchor->u, anchor->v},
                                             {anchor->colour}, v0->members()),
                                   std::move(*sub));
            }
        }
        return oracle(c, u, m);
    }

    std::optional<Steps> cross(const Colouring& c, const VertexSet& a, const VertexSet& b, std::size_t m,
                               std::size_t depth)
    {
        if (!tick() || a.empty() || b.empty())
            return std::nullopt;
        if (m == 1) {
            if (const auto e = smallest_edge(c, a, b))
                return Steps{make_step(CaseLabel::base_edge, 1, e, {std::min(e->u, e->v), std::max(e->u, e->v)})};
            return std::nullopt;
        }
        const auto whole = a | b;
        if (whole.size() <= budget_.fallback_size || depth > depth_cap_)
            return oracle_straddling(c, a, b, m);

        // Finite analogue of the side conditions: sparse sides, rich crossing.
        const bool applicable =
            gamma_cross(c, a, b) >= threshold_ && gamma(c, a) < threshold_ && gamma(c, b) < threshold_;
        if (applicable) {
            if (const auto anchor = smallest_edge(c, a, b)) {
                const auto classes_u = partition_by_colour_at(c, anchor->u, whole);
                const auto* zero_u = zero_class(classes_u);
                if (zero_u == nullptr || gamma(c, *zero_u) < threshold_) {
                    if (auto r = cross_cases_at(c, anchor->u, *anchor, classes_u, a, b, m, depth))
                        return r;
                } else {
                    const auto classes_v = partition_by_colour_at(c, anchor->v, *zero_u);
                    if (auto r = cross_cases_at(c, anchor->v, *anchor, classes_v, a, b, m, depth))
                        return r;
                    if (const auto* v0 = zero_class(classes_v); v0 != nullptr) {
                        const auto a0 = *v0 & a;
                        const auto b0 = *v0 & b;
                        if (auto sub = cross(recolour_to_zero(c, {anchor->colour}), a0, b0, m - 1, depth + 1))
                            return prepend(make_step(CaseLabel::v0_fallback, m, anchor, {anchor->u, anchor->v},
                                                     {anchor->colour}, v0->members()),
                                           std::move(*sub));
                    }
                }
            }
        }
        return oracle_straddling(c, a, b, m);
    }

private:
    bool tick()
    {
        if (exhausted_)
            return false;
        if (++nodes_ > budget_.max_nodes) {
            exhausted_ = true;
            return false;
        }
        return true;
    }

    std::optional<Steps> oracle(const Colouring& c, const VertexSet& u, std::size_t m)
    {
        if (u.size() > budget_.oracle_cap)
            return std::nullopt;
        auto w = oracle_find(c, m, u);
        if (!w)
            return std::nullopt;
        return Steps{make_step(CaseLabel::oracle_fallback, m, std::nullopt, w->vertices.members())};
    }

    std::optional<Steps> oracle_straddling(const Colouring& c, const VertexSet& a, const VertexSet& b,
                                           std::size_t m)
    {
        if (a.size() + b.size() > budget_.oracle_cap)
            return std::nullopt;
        auto w = oracle_find_straddling(c, m, a, b);
        if (!w)
            return std::nullopt;
        return Steps{make_step(CaseLabel::oracle_fallback, m, std::nullopt, w->vertices.members())};
    }

    // Rich class, then rich pair of nonzero classes, then colourless class
    // against a nonzero class.
    std::optional<Steps> full_cases_at(const Colouring& c, Vertex anchor, const Edge& anchor_edge,
                                       const Classes& classes, std::size_t m, std::size_t depth)
    {
        for (const auto& [col, cls] : classes) {
            if (col == colourless || cls.size() < 2 || gamma(c, cls) < threshold_)
                continue;
            if (auto sub = full(recolour_to_zero(c, {col}), cls, m - 1, depth + 1))
                return prepend(make_step(CaseLabel::rich_class, m, anchor_edge, {anchor}, {col}, cls.members()),
                               std::move(*sub));
        }
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (classes[i].first == colourless)
                continue;
            for (std::size_t j = i + 1; j < classes.size(); ++j) {
                if (gamma_cross(c, classes[i].second, classes[j].second) < threshold_)
                    continue;
                if (auto sub = cross(c, classes[i].second, classes[j].second, m, depth + 1))
                    return prepend(make_step(CaseLabel::cross_pair, m, anchor_edge, {}), std::move(*sub));
            }
        }
        if (const auto* zero = zero_class(classes)) {
            for (const auto& [col, cls] : classes) {
                if (col == colourless || gamma_cross(c, *zero, cls) < threshold_)
                    continue;
                if (auto sub = cross(c, *zero, cls, m, depth + 1))
                    return prepend(make_step(CaseLabel::zero_cross, m, anchor_edge, {}), std::move(*sub));
            }
        }
        return std::nullopt;
    }

    std::optional<Steps> cross_cases_at(const Colouring& c, Vertex anchor, const Edge& anchor_edge,
                                        const Classes& classes, const VertexSet& a, const VertexSet& b,
                                        std::size_t m, std::size_t depth)
    {
        // Rich class: its two sides must be rich across each other.
        for (const auto& [col, cls] : classes) {
            if (col == colourless || gamma(c, cls) < threshold_)
                continue;
            const auto ca = cls & a;
            const auto cb = cls & b;
            if (ca.empty() || cb.empty())
                continue;
            if (auto sub = cross(recolour_to_zero(c, {col}), ca, cb, m - 1, depth + 1))
                return prepend(make_step(CaseLabel::rich_class, m, anchor_edge, {anchor}, {col}, cls.members()),
                               std::move(*sub));
        }

        // Two nonzero classes rich across each other; both orientations.
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (classes[i].first == colourless)
                continue;
            for (std::size_t j = i + 1; j < classes.size(); ++j) {
                const auto& [ci, ui] = classes[i];
                const auto& [cj, uj] = classes[j];
                if (gamma_cross(c, ui, uj) < threshold_)
                    continue;
                const std::pair<VertexSet, VertexSet> orientations[] = {{ui & a, uj & b}, {uj & a, ui & b}};
                for (const auto& [sa, sb] : orientations) {
                    if (sa.empty() || sb.empty())
                        continue;
                    if (m >= 3) {
                        if (auto sub = cross(recolour_to_zero(c, {ci, cj}), sa, sb, m - 2, depth + 1))
                            return prepend(make_step(CaseLabel::cross_pair, m, anchor_edge, {anchor}, {ci, cj}),
                                           std::move(*sub));
                    } else if (auto sub = matching_search(c, sa, sb, anchor)) {
                        return prepend(make_step(CaseLabel::cross_pair, m, anchor_edge, {}), std::move(*sub));
                    }
                }
            }
        }

        // Colourless class against a nonzero class.
        if (const auto* zero = zero_class(classes)) {
            for (const auto& [col, cls] : classes) {
                if (col == colourless || gamma_cross(c, *zero, cls) < threshold_)
                    continue;
                const std::pair<VertexSet, VertexSet> orientations[] = {{*zero & a, cls & b}, {cls & a, *zero & b}};
                for (const auto& [sa, sb] : orientations) {
                    if (sa.empty() || sb.empty())
                        continue;
                    if (auto sub = cross(recolour_to_zero(c, {col}), sa, sb, m - 1, depth + 1))
                        return prepend(make_step(CaseLabel::zero_cross, m, anchor_edge, {anchor}, {col}),
                                       std::move(*sub));
                }
            }
        }
        return std::nullopt;
    }

public:
    static std::optional<Extraction> extract_within(const Colouring& c, const VertexSet& u, std::size_t m,
                                                    std::size_t threshold);

private:
    const SearchBudget& budget_;
    std::size_t threshold_;
    std::size_t depth_cap_;
    std::size_t nodes_ = 0;
    bool exhausted_ = false;
};

std::optional<Extraction> Searcher::extract_within(const Colouring& c, const VertexSet& u, std::size_t m,
                                                   std::size_t threshold)
{
    const auto size = std::max<std::size_t>(m + 1, 3);
    for (const auto v : u.members()) {
        if (gamma_vertex(c, v, u) < threshold)
            continue;
        // One neighbour per distinct nonzero colour at v.
        VertexSet spread(c.n());
        std::vector<Colour> seen;
        u.for_each([&](Vertex w) {
            if (w == v)
                return;
            const auto col = c(v, w);
            if (col == colourless || std::find(seen.begin(), seen.end(), col) != seen.end())
                return;
            seen.push_back(col);
            spread.insert(w);
        });
        if (spread.size() < size)
            continue;

        if (size == m + 1) {
            for (const auto kind : {CanonicalKind::left, CanonicalKind::right}) {
                const auto form = first_canonical_subset(c, size, kind, spread);
                if (form && gamma(c, form->vertices) == m) {
                    Witness w;
                    w.vertices = form->vertices;
                    w.m = m;
                    w.trace.steps.push_back(make_step(CaseLabel::canonical_extraction, m, std::nullopt,
                                                      form->vertices.members(), {}, spread.members()));
                    return Extraction{std::move(w)};
                }
            }
        }
        if (const auto mono = first_canonical_subset(c, size, CanonicalKind::mono, spread)) {
            // Drop the (at most one) vertex whose spoke repeats the body colour.
            const auto body = mono->vertices.members();
            const auto body_colour = c(body[0], body[1]);
            CanonicalForm star{CanonicalKind::star, mono->vertices, v};
            for (const auto w : body)
                if (c(v, w) == body_colour)
                    star.vertices.erase(w);
            star.vertices.insert(v);
            if (star.vertices.size() >= 3 && satisfies(c, star))
                return Extraction{std::move(star)};
        }
        if (auto rainbow = first_canonical_subset(c, size, CanonicalKind::rainbow, spread))
            return Extraction{std::move(*rainbow)};
    }
    return std::nullopt;
}

std::optional<Steps> matching_search(const Colouring& c, const VertexSet& a, const VertexSet& b,
                                     std::optional<Vertex> anchor)
{
    struct Pair {
        Vertex a;
        Vertex b;
        Colour colour;
    };
    // Greedy rainbow matching: distinct nonzero colours, distinct endpoints.
    std::vector<Pair> matching;
    {
        VertexSet used_b(c.n());
        std::vector<Colour> used_colours;
        a.for_each([&](Vertex x) {
            const auto ys = b.members();
            for (const auto y : ys) {
                const auto col = c(x, y);
                if (used_b.contains(y) || col == colourless ||
                    std::find(used_colours.begin(), used_colours.end(), col) != used_colours.end())
                    continue;
                matching.push_back({x, y, col});
                used_b.insert(y);
                used_colours.push_back(col);
                break;
            }
        });
    }
    if (matching.size() < 2)
        return std::nullopt;

    std::vector<Vertex> flat;
    for (const auto& p : matching) {
        flat.push_back(p.a);
        flat.push_back(p.b);
    }
    auto accept = [&](std::vector<Vertex> x) -> std::optional<Steps> {
        std::sort(x.begin(), x.end());
        if (std::adjacent_find(x.begin(), x.end()) != x.end())
            return std::nullopt;
        if (gamma(c, VertexSet::from(c.n(), x)) != 2)
            return std::nullopt;
        return Steps{make_step(CaseLabel::matching_m2, 2, std::nullopt, std::move(x), {}, flat)};
    };

    if (anchor) {
        for (const auto& p : matching)
            for (const auto& q : matching)
                if (c(p.a, q.b) == colourless)
                    if (auto r = accept({*anchor, p.a, q.b}))
                        return r;
    }

    // 1-coloured subsets of the matched A-endpoints: every monochromatic triple,
    // grown greedily to a maximal 1-coloured set.
    const auto k = matching.size();
    std::vector<std::vector<std::size_t>> mono_sets;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l) {
                const auto d = c(matching[i].a, matching[j].a);
                if (c(matching[i].a, matching[l].a) != d || c(matching[j].a, matching[l].a) != d)
                    continue;
                std::vector<std::size_t> set{i, j, l};
                for (std::size_t x = 0; x < k; ++x) {
                    if (std::find(set.begin(), set.end(), x) != set.end())
                        continue;
                    if (std::all_of(set.begin(), set.end(), [&](std::size_t y) { return c(matching[x].a, matching[y].a) == d; }))
                        set.push_back(x);
                }
                std::sort(set.begin(), set.end());
                if (std::find(mono_sets.begin(), mono_sets.end(), set) == mono_sets.end())
                    mono_sets.push_back(std::move(set));
            }

    for (const auto& set : mono_sets) {
        const auto d = c(matching[set[0]].a, matching[set[1]].a);
        std::vector<Vertex> context;
        for (const auto i : set)
            context.push_back(matching[i].a);
        auto with_ramsey = [&](Steps found) {
            return prepend(make_step(CaseLabel::ramsey_step, 2, std::nullopt, {}, {}, context), std::move(found));
        };

        for (const auto first : set) {
            const auto& p1 = matching[first];
            if (d == colourless) {
                // Two equal colours from a'_1 into the matched B-endpoints; use the
                // one whose matching colour differs from that shared colour.
                for (const auto s : set)
                    for (const auto t : set) {
                        if (s == first || t == first || s == t)
                            continue;
                        const auto shared = c(p1.a, matching[s].b);
                        if (c(p1.a, matching[t].b) != shared || matching[s].colour == shared)
                            continue;
                        if (auto r = accept({p1.a, matching[s].a, matching[s].b}))
                            return with_ramsey(std::move(*r));
                    }
            } else {
                if (p1.colour == d)
                    continue;
                // Two equal colours into b'_1.
                for (const auto s : set)
                    for (const auto t : set) {
                        if (s == first || t == first || s >= t)
                            continue;
                        const auto shared = c(matching[s].a, p1.b);
                        if (c(matching[t].a, p1.b) != shared)
                            continue;
                        auto r = shared == d ? accept({p1.a, matching[s].a, p1.b})
                                             : accept({matching[s].a, matching[t].a, p1.b});
                        if (r)
                            return with_ramsey(std::move(*r));
                    }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Witness> find_m_coloured(const Colouring& c, std::size_t m, const SearchBudget& budget)
{
    budget.validate();
    if (m == 0)
        throw ArgumentError("target colour count must be at least 1");
    Searcher searcher(budget, m);
    auto steps = searcher.full(c, c.vertices(), m, 0);
    if (!steps && searcher.exhausted() && c.n() <= budget.oracle_cap)
        if (auto w = oracle_find(c, m))
            steps = Steps{make_step(CaseLabel::oracle_fallback, m, std::nullopt, w->vertices.members())};
    if (!steps)
        return std::nullopt;
    return assemble(c.n(), m, std::move(*steps));
}

std::optional<Witness> find_m_coloured_cross(const Colouring& c, const VertexSet& a, const VertexSet& b,
                                             std::size_t m, const SearchBudget& budget)
{
    budget.validate();
    if (m == 0)
        throw ArgumentError("target colour count must be at least 1");
    if (a.intersects(b))
        throw ArgumentError("find_m_coloured_cross requires disjoint sides");
    Searcher searcher(budget, m);
    auto steps = searcher.cross(c, a, b, m, 0);
    if (!steps && searcher.exhausted() && a.size() + b.size() <= budget.oracle_cap)
        if (auto w = oracle_find_straddling(c, m, a, b))
            steps = Steps{make_step(CaseLabel::oracle_fallback, m, std::nullopt, w->vertices.members())};
    if (!steps)
        return std::nullopt;
    return assemble(c.n(), m, std::move(*steps));
}

std::optional<Witness> find_2_coloured_via_matching(const Colouring& c, const VertexSet& a, const VertexSet& b,
                                                    std::optional<Vertex> anchor)
{
    if (a.intersects(b))
        throw ArgumentError("find_2_coloured_via_matching requires disjoint sides");
    auto steps = matching_search(c, a, b, anchor);
    if (!steps)
        return std::nullopt;
    return assemble(c.n(), 2, std::move(*steps));
}

std::optional<Extraction> extract_canonical_or_witness(const Colouring& c, std::size_t m, const SearchBudget& budget)
{
    budget.validate();
    if (m == 0)
        throw ArgumentError("target colour count must be at least 1");
    return Searcher::extract_within(c, c.vertices(), m, budget.threshold_for(m));
}

} // namespace ramsey
