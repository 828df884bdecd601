#pragma once

#include "ramsey/colouring.hpp"
#include "ramsey/vertex_set.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

/// How a step of a constructive search obtained its part of the witness.
enum class CaseLabel {
    oracle,               // brute-force enumeration (the trust anchor)
    base_edge,            // m = 1: a single edge of nonzero colour
    canonical_extraction, // left/right coloured set inside a rich vertex's neighbourhood
    rich_class,           // colour class at the anchor is rich: recurse for m-1 inside it
    cross_pair,           // two nonzero classes rich across: bipartite-style search
    zero_cross,           // colourless class rich against a nonzero class
    v0_fallback,          // recurse for m-1 inside the common colourless neighbourhood of u, v
    matching_m2,          // m = 2 via a rainbow matching across the two sides
    ramsey_step,          // 1-coloured subset among matched endpoints
    oracle_fallback,      // small or exhausted instance handed to the oracle
    plus_one,             // C(n,2)+1 colours from two twins over a rainbow set
    degree_shortcut,      // bipartite: one vertex and a neighbour per colour it meets
};

std::string_view to_string(CaseLabel label);
std::string_view describe(CaseLabel label);

/// One level of a derivation. The witness is the union of `added` over all
/// steps; the colouring seen at step i has the `recoloured` colours of steps
/// 0..i-1 made colourless.
struct TraceStep {
    CaseLabel label = CaseLabel::oracle;
    std::size_t target = 0;           // m sought at this level
    std::optional<Edge> anchor;       // anchor edge (colour as seen at this level)
    std::vector<Vertex> added;        // vertices contributed by this level
    ColourSet recoloured;             // colours ignored from the next level on
    std::vector<Vertex> context;      // informational: the class / 1-coloured set used
};

struct CaseTrace {
    std::vector<TraceStep> steps;

    /// Comma separated labels, outermost first ("rich-class,base-edge").
    std::string summary() const;
};

struct Witness {
    VertexSet vertices;
    std::size_t m = 0;
    CaseTrace trace;
};

/// Rebuilds the witness from the trace alone and checks every level: anchor
/// colours match, and the union of the vertices added from level i on has
/// exactly `target` colours under level i's colouring. Throws TraceError on
/// any mismatch.
VertexSet replay(const Colouring& c, const CaseTrace& trace);

/// gamma(c, w.vertices) == w.m
bool verify(const Colouring& c, const Witness& w);

} // namespace ramsey
