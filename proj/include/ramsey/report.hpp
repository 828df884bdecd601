#pragma once

#include "ramsey/bipartite.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/counterexample.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/trichotomy.hpp"
#include "ramsey/witness.hpp"

#include <json.hpp>

namespace ramsey::report {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

Json vertices(const VertexSet& set);

/// {"vertices", "m", "trace"}; with `steps` also the per-level trace, and with
/// `explain` a plain-language description of each level.
Json witness(const Witness& w, bool steps = false, bool explain = false);

/// {"achievable": {"<m>": {"vertices", "trace"}}, "missing": [...]}
Json spectrum(const SpectrumReport& report);

Json canonical(const CanonicalForm& form);
Json bipartite_witness(const BipartiteWitness& w, bool steps = false, bool explain = false);
Json counterexample(const CounterexampleResult& result);
Json trichotomy(const TrichotomyReport& report);

/// Indented text rendering of a trace, one line per level.
std::string explain(const CaseTrace& trace);

} // namespace ramsey::report
