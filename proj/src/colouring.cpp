#include "ramsey/colouring.hpp"

#include "colour_counter.hpp"
#include "ramsey/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace ramsey {

Capacity Capacity::from_environment()
{
    Capacity cap;
    if (const char* env = std::getenv("RAMSEY_SPECTRUM_MAX_N"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const auto value = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || value == 0)
            throw ArgumentError(std::string("RAMSEY_SPECTRUM_MAX_N is not a positive integer: ") + env);
        cap.dense_cap = static_cast<std::size_t>(value);
    }
    return cap;
}

void Capacity::check(std::size_t n) const
{
    if (n > dense_cap && !sparse)
        throw CapacityError("n = " + std::to_string(n) + " exceeds the dense cap of " +
                            std::to_string(dense_cap) + " (enable sparse mode to proceed)");
}

Colouring::Colouring(std::size_t n, std::vector<Colour> edge_colours, const Capacity& capacity)
    : n_(n), colours_(std::move(edge_colours))
{
    capacity.check(n);
    if (colours_.size() != choose2(n))
        throw ArgumentError("expected " + std::to_string(choose2(n)) + " edge colours for n = " +
                            std::to_string(n) + ", got " + std::to_string(colours_.size()));
    if (!colours_.empty())
        max_colour_ = *std::max_element(colours_.begin(), colours_.end());
}

Colouring Colouring::from_function(std::size_t n, const std::function<Colour(Vertex, Vertex)>& colour_of,
                                   const Capacity& capacity)
{
    capacity.check(n);
    std::vector<Colour> colours;
    colours.reserve(choose2(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            colours.push_back(colour_of(u, v));
    return Colouring(n, std::move(colours), capacity);
}

Colour Colouring::at(Vertex u, Vertex v) const
{
    if (u >= n_ || v >= n_)
        throw RangeError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside n = " +
                         std::to_string(n_));
    if (u == v)
        throw RangeError("no self-loop at vertex " + std::to_string(u));
    return (*this)(u, v);
}

std::vector<Edge> Colouring::edges() const
{
    std::vector<Edge> out;
    out.reserve(colours_.size());
    std::size_t i = 0;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            out.push_back({u, v, colours_[i++]});
    return out;
}

std::size_t Colouring::colour_count() const
{
    detail::ColourMarks marks(max_colour_);
    for (const auto col : colours_)
        marks.mark(col);
    return marks.distinct();
}

bool Colouring::is_normalized() const
{
    return colour_count() == max_colour_;
}

Colouring Colouring::normalized() const
{
    std::vector<Colour> relabel(static_cast<std::size_t>(max_colour_) + 1, 0);
    for (const auto col : colours_)
        relabel[col] = 1;
    relabel[colourless] = 0;
    Colour next = 0;
    for (std::size_t col = 1; col < relabel.size(); ++col)
        if (relabel[col] != 0)
            relabel[col] = ++next;
    std::vector<Colour> out(colours_.size());
    std::transform(colours_.begin(), colours_.end(), out.begin(), [&](Colour col) { return relabel[col]; });
    Capacity unchecked;
    unchecked.sparse = true;
    return Colouring(n_, std::move(out), unchecked);
}

ColourSet::ColourSet(std::initializer_list<Colour> colours)
    : ColourSet(std::vector<Colour>(colours))
{
}

ColourSet::ColourSet(std::vector<Colour> colours)
{
    for (const auto col : colours)
        insert(col);
}

bool ColourSet::contains(Colour c) const
{
    return std::binary_search(colours_.begin(), colours_.end(), c);
}

void ColourSet::insert(Colour c)
{
    if (c == colourless)
        throw ArgumentError("colour 0 is reserved and cannot be placed in a colour set");
    const auto pos = std::lower_bound(colours_.begin(), colours_.end(), c);
    if (pos == colours_.end() || *pos != c)
        colours_.insert(pos, c);
}

ColourSet& ColourSet::operator|=(const ColourSet& other)
{
    for (const auto col : other)
        insert(col);
    return *this;
}

namespace {

void require_in_range(const Colouring& c, const VertexSet& x)
{
    if (x.universe() > c.n() && x.size() > 0) {
        // A larger universe is fine as long as every member is a real vertex.
        x.for_each([&](Vertex v) {
            if (v >= c.n())
                throw RangeError("vertex " + std::to_string(v) + " outside n = " + std::to_string(c.n()));
        });
    }
}

void require_vertex(const Colouring& c, Vertex v)
{
    if (v >= c.n())
        throw RangeError("vertex " + std::to_string(v) + " outside n = " + std::to_string(c.n()));
}

} // namespace

std::size_t gamma(const Colouring& c, const VertexSet& x)
{
    require_in_range(c, x);
    const auto members = x.members();
    detail::ColourMarks marks(c.max_colour());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            marks.mark(c(members[i], members[j]));
    return marks.distinct();
}

std::size_t gamma_cross(const Colouring& c, const VertexSet& x, const VertexSet& y)
{
    require_in_range(c, x);
    require_in_range(c, y);
    if (x.intersects(y))
        throw ArgumentError("gamma_cross requires disjoint vertex sets");
    const auto xs = x.members();
    const auto ys = y.members();
    detail::ColourMarks marks(c.max_colour());
    for (const auto a : xs)
        for (const auto b : ys)
            marks.mark(c(a, b));
    return marks.distinct();
}

std::size_t gamma_vertex(const Colouring& c, Vertex v)
{
    if (c.n() < 2)
        throw DegenerateError("gamma_vertex needs at least two vertices");
    require_vertex(c, v);
    return gamma_vertex(c, v, c.vertices());
}

std::size_t gamma_vertex(const Colouring& c, Vertex v, const VertexSet& within)
{
    require_vertex(c, v);
    require_in_range(c, within);
    detail::ColourMarks marks(c.max_colour());
    within.for_each([&](Vertex w) {
        if (w != v)
            marks.mark(c(v, w));
    });
    return marks.distinct();
}

Colouring recolour_to_zero(const Colouring& c, const ColourSet& recoloured)
{
    if (recoloured.contains(colourless))
        throw ArgumentError("colour 0 cannot be recoloured");
    auto colours = std::vector<Colour>(c.edge_colours().begin(), c.edge_colours().end());
    if (!recoloured.empty())
        for (auto& col : colours)
            if (recoloured.contains(col))
                col = colourless;
    Capacity unchecked;
    unchecked.sparse = true;
    return Colouring(c.n(), std::move(colours), unchecked);
}

std::vector<std::pair<Colour, VertexSet>> partition_by_colour_at(const Colouring& c, Vertex u)
{
    require_vertex(c, u);
    return partition_by_colour_at(c, u, c.vertices());
}

std::vector<std::pair<Colour, VertexSet>> partition_by_colour_at(const Colouring& c, Vertex u,
                                                                 const VertexSet& within)
{
    require_vertex(c, u);
    require_in_range(c, within);
    std::vector<std::pair<Colour, VertexSet>> classes;
    std::vector<std::size_t> slot(static_cast<std::size_t>(c.max_colour()) + 1, SIZE_MAX);
    within.for_each([&](Vertex w) {
        if (w == u)
            return;
        const auto col = c(u, w);
        if (slot[col] == SIZE_MAX) {
            slot[col] = classes.size();
            classes.emplace_back(col, VertexSet(within.universe()));
        }
        classes[slot[col]].second.insert(w);
    });
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return classes;
}

bool superadditivity_check(const Colouring& c, std::span<const VertexSet> parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].intersects(parts[j]))
                throw ArgumentError("superadditivity_check requires pairwise disjoint parts");

    std::size_t lhs = 0;
    VertexSet whole(c.n());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        lhs += gamma(c, parts[i]);
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            lhs += gamma_cross(c, parts[i], parts[j]);
        parts[i].for_each([&](Vertex v) { whole.insert(v); });
    }
    return lhs >= gamma(c, whole);
}

} // namespace ramsey
