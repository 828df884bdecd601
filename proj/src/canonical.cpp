#include "ramsey/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <span>

namespace ramsey {

std::string_view to_string(CanonicalKind kind)
{
    switch (kind) {
    case CanonicalKind::rainbow: return "rainbow";
    case CanonicalKind::mono: return "mono";
    case CanonicalKind::left: return "left";
    case CanonicalKind::right: return "right";
    case CanonicalKind::star: return "star";
    }
    return "unknown";
}

namespace {

using Members = std::span<const Vertex>;

bool all_distinct(std::vector<Colour> colours)
{
    std::sort(colours.begin(), colours.end());
    return std::adjacent_find(colours.begin(), colours.end()) == colours.end();
}

bool rainbow_shape(const Colouring& c, Members s)
{
    std::vector<Colour> colours;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            colours.push_back(c(s[i], s[j]));
    return all_distinct(std::move(colours));
}

bool mono_shape(const Colouring& c, Members s)
{
    if (s.size() < 2)
        return true;
    const auto first = c(s[0], s[1]);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (c(s[i], s[j]) != first)
                return false;
    return true;
}

// `s` ascending. Left: colour fixed by the smaller endpoint, injective in it.
bool left_shape(const Colouring& c, Members s)
{
    std::vector<Colour> per_vertex;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const auto col = c(s[i], s[i + 1]);
        for (std::size_t j = i + 2; j < s.size(); ++j)
            if (c(s[i], s[j]) != col)
                return false;
        per_vertex.push_back(col);
    }
    return all_distinct(std::move(per_vertex));
}

bool right_shape(const Colouring& c, Members s)
{
    std::vector<Colour> per_vertex;
    for (std::size_t j = 1; j < s.size(); ++j) {
        const auto col = c(s[0], s[j]);
        for (std::size_t i = 1; i < j; ++i)
            if (c(s[i], s[j]) != col)
                return false;
        per_vertex.push_back(col);
    }
    return all_distinct(std::move(per_vertex));
}

bool star_with_centre(const Colouring& c, Members s, Vertex centre)
{
    std::vector<Vertex> body;
    std::vector<Colour> spokes;
    for (const auto v : s)
        if (v != centre) {
            body.push_back(v);
            spokes.push_back(c(centre, v));
        }
    if (!mono_shape(c, body) || !all_distinct(spokes))
        return false;
    if (body.size() >= 2) {
        const auto body_colour = c(body[0], body[1]);
        if (std::find(spokes.begin(), spokes.end(), body_colour) != spokes.end())
            return false;
    }
    return true;
}

std::optional<Vertex> star_centre(const Colouring& c, Members s)
{
    for (const auto v : s)
        if (star_with_centre(c, s, v))
            return v;
    return std::nullopt;
}

// Can `s` still grow into a shape of this kind? Every shape is hereditary
// (a star loses its centre only by becoming mono), so the test is on `s` itself.
bool extendable(const Colouring& c, Members s, CanonicalKind kind)
{
    switch (kind) {
    case CanonicalKind::rainbow: return rainbow_shape(c, s);
    case CanonicalKind::mono: return mono_shape(c, s);
    case CanonicalKind::left: return left_shape(c, s);
    case CanonicalKind::right: return right_shape(c, s);
    case CanonicalKind::star: return mono_shape(c, s) || star_centre(c, s).has_value();
    }
    return false;
}

std::size_t min_size(CanonicalKind kind)
{
    return kind == CanonicalKind::rainbow || kind == CanonicalKind::mono ? 2 : 3;
}

std::optional<CanonicalForm> complete(const Colouring& c, Members s, CanonicalKind kind)
{
    if (s.size() < min_size(kind))
        return std::nullopt;
    CanonicalForm form{kind, VertexSet::from(c.n(), s), std::nullopt};
    if (kind == CanonicalKind::star) {
        form.centre = star_centre(c, s);
        if (!form.centre)
            return std::nullopt;
        return form;
    }
    if (!extendable(c, s, kind))
        return std::nullopt;
    return form;
}

// Visits size-`size` subsets of `pool` in lexicographic order whose every prefix
// is extendable; `found` returns true to stop.
template <typename Found>
bool backtrack(const Colouring& c, const std::vector<Vertex>& pool, std::size_t size, CanonicalKind kind,
               std::vector<Vertex>& chosen, std::size_t start, Found&& found)
{
    if (chosen.size() == size) {
        if (auto form = complete(c, chosen, kind))
            return found(std::move(*form));
        return false;
    }
    for (std::size_t i = start; i + (size - chosen.size()) <= pool.size(); ++i) {
        chosen.push_back(pool[i]);
        if (extendable(c, chosen, kind) && backtrack(c, pool, size, kind, chosen, i + 1, found)) {
            chosen.pop_back();
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

constexpr std::array<CanonicalKind, 5> all_kinds{CanonicalKind::rainbow, CanonicalKind::mono, CanonicalKind::left,
                                                 CanonicalKind::right, CanonicalKind::star};

} // namespace

bool satisfies(const Colouring& c, const CanonicalForm& form)
{
    const auto s = form.vertices.members();
    if (std::any_of(s.begin(), s.end(), [&](Vertex v) { return v >= c.n(); }))
        return false;
    if (s.size() < min_size(form.kind))
        return false;
    switch (form.kind) {
    case CanonicalKind::rainbow: return rainbow_shape(c, s);
    case CanonicalKind::mono: return mono_shape(c, s);
    case CanonicalKind::left: return left_shape(c, s);
    case CanonicalKind::right: return right_shape(c, s);
    case CanonicalKind::star:
        return form.centre && form.vertices.contains(*form.centre) && star_with_centre(c, s, *form.centre);
    }
    return false;
}

std::vector<CanonicalForm> find_canonical_subsets(const Colouring& c, std::size_t size)
{
    return find_canonical_subsets(c, size, c.vertices());
}

std::vector<CanonicalForm> find_canonical_subsets(const Colouring& c, std::size_t size, const VertexSet& universe)
{
    const auto pool = universe.members();
    std::vector<CanonicalForm> out;
    for (const auto kind : all_kinds) {
        std::vector<Vertex> chosen;
        backtrack(c, pool, size, kind, chosen, 0, [&](CanonicalForm form) {
            out.push_back(std::move(form));
            return false;
        });
    }
    std::stable_sort(out.begin(), out.end(), [](const CanonicalForm& a, const CanonicalForm& b) {
        if (a.vertices != b.vertices)
            return a.vertices < b.vertices;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
    return out;
}

std::optional<CanonicalForm> first_canonical_subset(const Colouring& c, std::size_t size, CanonicalKind kind,
                                                    const VertexSet& universe)
{
    const auto pool = universe.members();
    std::optional<CanonicalForm> result;
    std::vector<Vertex> chosen;
    backtrack(c, pool, size, kind, chosen, 0, [&](CanonicalForm form) {
        result = std::move(form);
        return true;
    });
    return result;
}

} // namespace ramsey
