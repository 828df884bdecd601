#include "ramsey/witness.hpp"

#include "ramsey/errors.hpp"

#include <string>

namespace ramsey {

std::string_view to_string(CaseLabel label)
{
    switch (label) {
    case CaseLabel::oracle: return "oracle";
    case CaseLabel::base_edge: return "base-edge";
    case CaseLabel::canonical_extraction: return "canonical-extraction";
    case CaseLabel::rich_class: return "rich-class";
    case CaseLabel::cross_pair: return "cross-pair";
    case CaseLabel::zero_cross: return "zero-cross";
    case CaseLabel::v0_fallback: return "V0-fallback";
    case CaseLabel::matching_m2: return "matching-m2";
    case CaseLabel::ramsey_step: return "ramsey-step";
    case CaseLabel::oracle_fallback: return "oracle-fallback";
    case CaseLabel::plus_one: return "plus-one";
    case CaseLabel::degree_shortcut: return "degree-shortcut";
    }
    return "unknown";
}

std::string_view describe(CaseLabel label)
{
    switch (label) {
    case CaseLabel::oracle:
        return "exhaustive enumeration of vertex subsets";
    case CaseLabel::base_edge:
        return "m = 1: any edge of nonzero colour";
    case CaseLabel::canonical_extraction:
        return "vertex of many colours: a left/right coloured set w_1..w_{m+1} in its neighbourhood is m-coloured";
    case CaseLabel::rich_class:
        return "class U_i at the anchor carries many colours: find an (m-1)-coloured X' in U_i ignoring colour i, "
               "then X = X' + anchor";
    case CaseLabel::cross_pair:
        return "two nonzero classes carry many colours between them: bipartite search across them";
    case CaseLabel::zero_cross:
        return "the colourless class carries many colours against a nonzero class: bipartite search across them";
    case CaseLabel::v0_fallback:
        return "colourless class is rich: re-partition by colour at v and find an (m-1)-coloured X' in V_0 "
               "ignoring colour c(uv), then X = X' + {u, v}";
    case CaseLabel::matching_m2:
        return "m = 2 across two sides: rainbow matching plus two-colour case analysis";
    case CaseLabel::ramsey_step:
        return "1-coloured subset among the matched endpoints";
    case CaseLabel::oracle_fallback:
        return "instance at or below the fallback size (or no case applied): exhaustive enumeration";
    case CaseLabel::degree_shortcut:
        return "a vertex meets at least m colours: it and one neighbour per colour";
    case CaseLabel::plus_one:
        return "x, y with equal spokes into a rainbow set: n spokes of one fresh colour, or a rainbow U' + {x, y}";
    }
    return "";
}

std::string CaseTrace::summary() const
{
    std::string out;
    for (const auto& step : steps) {
        if (!out.empty())
            out += ',';
        out += to_string(step.label);
    }
    return out;
}

VertexSet replay(const Colouring& c, const CaseTrace& trace)
{
    if (trace.steps.empty())
        throw TraceError("empty trace");

    // colourings[i] is the colouring seen by level i
    std::vector<Colouring> colourings;
    colourings.reserve(trace.steps.size());
    colourings.push_back(c);
    for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i)
        colourings.push_back(recolour_to_zero(colourings.back(), trace.steps[i].recoloured));

    VertexSet acc(c.n());
    for (std::size_t i = trace.steps.size(); i-- > 0;) {
        const auto& step = trace.steps[i];
        const auto& level = colourings[i];
        for (const auto v : step.added) {
            if (v >= c.n())
                throw TraceError("trace step " + std::to_string(i) + " adds vertex " + std::to_string(v) +
                                 " outside the colouring");
            acc.insert(v);
        }
        if (step.anchor) {
            const auto& a = *step.anchor;
            if (a.u >= c.n() || a.v >= c.n() || a.u == a.v || level(a.u, a.v) != a.colour)
                throw TraceError("trace step " + std::to_string(i) + " anchor edge does not match the colouring");
        }
        const auto g = gamma(level, acc);
        if (g != step.target)
            throw TraceError("trace step " + std::to_string(i) + " (" + std::string(to_string(step.label)) +
                             ") expects " + std::to_string(step.target) + " colours, replay gives " +
                             std::to_string(g));
    }
    return acc;
}

bool verify(const Colouring& c, const Witness& w)
{
    return w.m > 0 && gamma(c, w.vertices) == w.m;
}

} // namespace ramsey
