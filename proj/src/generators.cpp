#include "ramsey/generators.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/random.hpp"

#include <array>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

namespace {

// Generators are only bounded by the caller's later use of the colouring.
Capacity open_capacity()
{
    Capacity cap;
    cap.sparse = true;
    return cap;
}

std::vector<Colour> surjective_colours(std::size_t edges, std::size_t k, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<std::size_t> order(edges);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = edges; i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);

    std::vector<Colour> colours(edges, colourless);
    for (std::size_t i = 0; i < edges; ++i)
        colours[order[i]] = i < k ? static_cast<Colour>(i + 1) : static_cast<Colour>(1 + rng.below(k));
    return colours;
}

} // namespace

Colouring gen_rainbow(std::size_t n)
{
    std::vector<Colour> colours(choose2(n));
    std::iota(colours.begin(), colours.end(), Colour{1});
    return Colouring(n, std::move(colours), open_capacity());
}

Colouring gen_mono(std::size_t n)
{
    return Colouring(n, std::vector<Colour>(choose2(n), 1), open_capacity());
}

Colouring gen_star(std::size_t n, Vertex centre)
{
    if (n < 2)
        throw DegenerateError("a star colouring needs at least two vertices");
    if (centre >= n)
        throw RangeError("star centre " + std::to_string(centre) + " outside n = " + std::to_string(n));
    auto c = Colouring::from_function(
        n,
        [&](Vertex u, Vertex v) -> Colour {
            if (u != centre && v != centre)
                return 1;
            const auto other = u == centre ? v : u;
            // rank of `other` among the non-centre vertices, plus the body colour
            return static_cast<Colour>((other < centre ? other : other - 1) + 2);
        },
        open_capacity());
    // K_2 has no body edge, so colour 1 would otherwise be unused.
    return c.normalized();
}

Colouring gen_left(std::size_t n)
{
    return Colouring::from_function(n, [](Vertex u, Vertex) { return static_cast<Colour>(u + 1); },
                                    open_capacity());
}

Colouring gen_right(std::size_t n)
{
    return Colouring::from_function(n, [](Vertex, Vertex v) { return static_cast<Colour>(v); },
                                    open_capacity());
}

Colouring gen_clique_plus_one(std::size_t n, std::size_t l)
{
    if (l < 2 || l > n)
        throw ArgumentError("clique-plus-one needs 2 <= l <= n (l = " + std::to_string(l) +
                            ", n = " + std::to_string(n) + ")");
    const auto outside = static_cast<Colour>(choose2(l) + 1);
    return Colouring::from_function(
        n,
        [&](Vertex u, Vertex v) -> Colour {
            if (v < l)
                return static_cast<Colour>(edge_index(l, u, v) + 1);
            return outside;
        },
        open_capacity());
}

Colouring gen_random_exact_k(std::size_t n, std::size_t k, std::uint64_t seed)
{
    const auto edges = choose2(n);
    if (k < 1 || k > edges)
        throw ArgumentError("cannot use exactly " + std::to_string(k) + " colours on K_" + std::to_string(n) +
                            " (" + std::to_string(edges) + " edges)");
    return Colouring(n, surjective_colours(edges, k, seed), open_capacity());
}

BipartiteColouring gen_bipartite_rainbow(std::size_t p, std::size_t q)
{
    std::vector<Colour> colours(p * q);
    std::iota(colours.begin(), colours.end(), Colour{1});
    return BipartiteColouring(p, q, std::move(colours), open_capacity());
}

BipartiteColouring gen_bipartite_mono(std::size_t p, std::size_t q)
{
    return BipartiteColouring(p, q, std::vector<Colour>(p * q, 1), open_capacity());
}

BipartiteColouring gen_bipartite_random_exact_k(std::size_t p, std::size_t q, std::size_t k, std::uint64_t seed)
{
    if (k < 1 || k > p * q)
        throw ArgumentError("cannot use exactly " + std::to_string(k) + " colours on K_{" + std::to_string(p) +
                            "," + std::to_string(q) + "}");
    return BipartiteColouring(p, q, surjective_colours(p * q, k, seed), open_capacity());
}

namespace {

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 7> kind_names{{
    {GeneratorKind::rainbow, "rainbow"},
    {GeneratorKind::mono, "mono"},
    {GeneratorKind::star, "star"},
    {GeneratorKind::left, "left"},
    {GeneratorKind::right, "right"},
    {GeneratorKind::clique_plus_one, "clique-plus-one"},
    {GeneratorKind::random_exact_k, "random-exact-k"},
}};

} // namespace

std::string_view to_string(GeneratorKind kind)
{
    for (const auto& [k, name] : kind_names)
        if (k == kind)
            return name;
    return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name)
{
    for (const auto& [k, kname] : kind_names)
        if (kname == name)
            return k;
    if (name == "random")
        return GeneratorKind::random_exact_k;
    return std::nullopt;
}

void GeneratorSpec::validate() const
{
    switch (kind) {
    case GeneratorKind::rainbow:
    case GeneratorKind::mono:
        return;
    case GeneratorKind::star:
        if (n < 2)
            throw ArgumentError("star needs n >= 2");
        if (centre >= n)
            throw ArgumentError("star centre " + std::to_string(centre) + " outside n = " + std::to_string(n));
        return;
    case GeneratorKind::left:
    case GeneratorKind::right:
        if (n < 2)
            throw ArgumentError(std::string(to_string(kind)) + " needs n >= 2");
        return;
    case GeneratorKind::clique_plus_one:
        if (l < 2 || l > n)
            throw ArgumentError("clique-plus-one needs 2 <= l <= n");
        return;
    case GeneratorKind::random_exact_k:
        if (k < 1 || k > choose2(n))
            throw ArgumentError("random-exact-k needs 1 <= k <= C(n,2) = " + std::to_string(choose2(n)));
        return;
    }
}

Colouring generate(const GeneratorSpec& spec)
{
    spec.validate();
    switch (spec.kind) {
    case GeneratorKind::rainbow:
        return gen_rainbow(spec.n);
    case GeneratorKind::mono:
        return gen_mono(spec.n);
    case GeneratorKind::star:
        return gen_star(spec.n, spec.centre);
    case GeneratorKind::left:
        return gen_left(spec.n);
    case GeneratorKind::right:
        return gen_right(spec.n);
    case GeneratorKind::clique_plus_one:
        return gen_clique_plus_one(spec.n, spec.l);
    case GeneratorKind::random_exact_k:
        return gen_random_exact_k(spec.n, spec.k, spec.seed);
    }
    throw ArgumentError("unknown generator kind");
}

} // namespace ramsey
