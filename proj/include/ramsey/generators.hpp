#pragma once

#include "ramsey/bipartite_colouring.hpp"
#include "ramsey/colouring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ramsey {

// Named colourings. All outputs are normalized (nonzero colours 1..k, no
// colourless edges).

/// Every edge its own colour, numbered 1..C(n,2) in edge order.
Colouring gen_rainbow(std::size_t n);

/// Every edge colour 1.
Colouring gen_mono(std::size_t n);

/// Body (all edges avoiding `centre`) colour 1; the spoke to the i-th other
/// vertex, in ascending order, colour i + 1.
Colouring gen_star(std::size_t n, Vertex centre = 0);

/// {i, j}, i < j, coloured i + 1.
Colouring gen_left(std::size_t n);

/// {i, j}, i < j, coloured j, so the ids stay in 1..n-1.
Colouring gen_right(std::size_t n);

/// First l vertices rainbow with colours 1..C(l,2); every other edge colour C(l,2)+1.
Colouring gen_clique_plus_one(std::size_t n, std::size_t l);

/// Exactly k colours, reproducible from `seed`. The edges are shuffled
/// (Fisher-Yates, Rng::below); the first k shuffled edges get colours 1..k and
/// each remaining edge gets 1 + below(k).
Colouring gen_random_exact_k(std::size_t n, std::size_t k, std::uint64_t seed);

BipartiteColouring gen_bipartite_rainbow(std::size_t p, std::size_t q);
BipartiteColouring gen_bipartite_mono(std::size_t p, std::size_t q);
BipartiteColouring gen_bipartite_random_exact_k(std::size_t p, std::size_t q, std::size_t k, std::uint64_t seed);

enum class GeneratorKind { rainbow, mono, star, left, right, clique_plus_one, random_exact_k };

std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::rainbow;
    std::size_t n = 0;
    Vertex centre = 0;
    std::size_t l = 2;
    std::size_t k = 1;
    std::uint64_t seed = 1;

    /// Throws ArgumentError when the parameters do not fit the kind.
    void validate() const;
};

Colouring generate(const GeneratorSpec& spec);

} // namespace ramsey
