#include "ramsey/extension.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace ramsey {

namespace {

std::size_t isqrt(std::size_t s)
{
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= s)
        ++r;
    return r;
}

void require_outside(const Colouring& c, const VertexSet& s, Vertex x, const char* name)
{
    if (x >= c.n())
        throw ArgumentError(std::string(name) + " = " + std::to_string(x) + " is not a vertex");
    if (s.contains(x))
        throw ArgumentError(std::string(name) + " must lie outside S");
}

// colour -> the unique edge of S carrying it
std::map<Colour, Edge> rainbow_index(const Colouring& c, const VertexSet& s)
{
    if (s.universe() != c.n())
        throw ArgumentError("S has the wrong universe");
    std::map<Colour, Edge> index;
    const auto members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto col = c(members[i], members[j]);
            if (!index.emplace(col, Edge{members[i], members[j], col}).second)
                throw ArgumentError("S is not rainbow coloured");
        }
    return index;
}

struct Collision {
    Vertex u;
    Edge e;
    bool live(const VertexSet& alive) const
    {
        return alive.contains(u) && alive.contains(e.u) && alive.contains(e.v);
    }
};

bool collision_free(const std::vector<Collision>& collisions, const VertexSet& set)
{
    return std::none_of(collisions.begin(), collisions.end(), [&](const Collision& k) { return k.live(set); });
}

VertexSet first_members(const VertexSet& set, std::size_t t)
{
    VertexSet out(set.universe());
    for (const auto v : set.members()) {
        if (out.size() == t)
            break;
        out.insert(v);
    }
    return out;
}

// Lexicographically first collision-free t-subset; the property is hereditary,
// so prefixes that already collide are cut.
bool exhaustive(const std::vector<Collision>& collisions, const std::vector<Vertex>& pool, std::size_t t,
                std::size_t start, VertexSet& chosen)
{
    if (chosen.size() == t)
        return true;
    for (std::size_t i = start; i + (t - chosen.size()) <= pool.size(); ++i) {
        chosen.insert(pool[i]);
        if (collision_free(collisions, chosen) && exhaustive(collisions, pool, t, i + 1, chosen))
            return true;
        chosen.erase(pool[i]);
    }
    return false;
}

} // namespace

std::optional<VertexSet> find_collision_free_subset(const Colouring& c, const VertexSet& s, Vertex x,
                                                    std::optional<std::size_t> t)
{
    require_outside(c, s, x, "x");
    const auto size = t.value_or(isqrt(s.size()));
    if (size == 0)
        throw ArgumentError("subset size t must be positive");
    if (s.size() < size * size)
        throw ArgumentError("|S| = " + std::to_string(s.size()) + " is below t^2 = " + std::to_string(size * size));
    const auto index = rainbow_index(c, s);

    std::vector<Collision> collisions;
    s.for_each([&](Vertex u) {
        if (const auto it = index.find(c(x, u)); it != index.end())
            collisions.push_back({u, it->second});
    });

    auto alive = s;
    for (;;) {
        std::map<Vertex, std::size_t> degree;
        for (const auto& k : collisions)
            if (k.live(alive)) {
                // u may itself be an endpoint of e_u
                ++degree[k.e.u];
                ++degree[k.e.v];
                if (k.u != k.e.u && k.u != k.e.v)
                    ++degree[k.u];
            }
        if (degree.empty())
            break;
        // Highest degree, smallest vertex on ties (map iterates ascending).
        auto worst = degree.begin();
        for (auto it = degree.begin(); it != degree.end(); ++it)
            if (it->second > worst->second)
                worst = it;
        alive.erase(worst->first);
    }
    if (alive.size() >= size)
        return first_members(alive, size);

    VertexSet chosen(c.n());
    if (exhaustive(collisions, s.members(), size, 0, chosen))
        return chosen;
    return std::nullopt;
}

std::optional<Witness> build_plus_one_witness(const Colouring& c, const VertexSet& s, Vertex x, Vertex y,
                                              std::size_t n)
{
    require_outside(c, s, x, "x");
    require_outside(c, s, y, "y");
    if (x == y)
        throw ArgumentError("x and y must be distinct");
    if (n < 2)
        throw ArgumentError("n must be at least 2");
    s.for_each([&](Vertex u) {
        if (c(x, u) != c(y, u))
            throw ArgumentError("x and y disagree on the colour towards " + std::to_string(u));
    });

    const auto t = find_collision_free_subset(c, s, x);
    if (!t)
        return std::nullopt;
    const auto target = choose2(n) + 1;

    auto finish = [&](VertexSet set) -> std::optional<Witness> {
        if (gamma(c, set) != target)
            return std::nullopt;
        Witness w;
        w.vertices = set;
        w.m = target;
        TraceStep step;
        step.label = CaseLabel::plus_one;
        step.target = target;
        step.added = set.members();
        step.context = t->members();
        w.trace.steps.push_back(std::move(step));
        return w;
    };

    // Spoke classes inside T, by colour.
    std::map<Colour, std::vector<Vertex>> classes;
    t->for_each([&](Vertex u) { classes[c(x, u)].push_back(u); });

    for (const auto& [col, members] : classes) {
        if (members.size() < n)
            continue;
        auto set = VertexSet::of(c.n(), {x});
        for (std::size_t i = 0; i < n; ++i)
            set.insert(members[i]);
        if (auto w = finish(set))
            return w;
    }

    if (classes.size() >= n) {
        // One vertex per spoke colour: U ∪ {x} is rainbow.
        std::vector<Vertex> u;
        t->for_each([&](Vertex v) {
            if (u.size() < n && std::none_of(u.begin(), u.end(), [&](Vertex w) { return c(x, w) == c(x, v); }))
                u.push_back(v);
        });
        // Drop the U-endpoint of the edge coloured like xy, else the last vertex.
        const auto xy = c(x, y);
        auto drop = u.back();
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (c(x, u[i]) == xy)
                drop = u[i];
            for (std::size_t j = i + 1; j < u.size(); ++j)
                if (c(u[i], u[j]) == xy)
                    drop = u[j];
        }
        auto set = VertexSet::of(c.n(), {x, y});
        for (const auto v : u)
            if (v != drop)
                set.insert(v);
        if (auto w = finish(set))
            return w;
    }
    return std::nullopt;
}

} // namespace ramsey
