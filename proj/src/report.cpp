#include "ramsey/report.hpp"

#include "ramsey/io.hpp"

#include <sstream>
#include <string>

namespace ramsey::report {

namespace {

Json step_json(const TraceStep& step, bool explain)
{
    Json j;
    j["label"] = std::string(to_string(step.label));
    j["target"] = step.target;
    if (step.anchor)
        j["anchor"] = {step.anchor->u, step.anchor->v, step.anchor->colour};
    j["added"] = step.added;
    if (!step.recoloured.values().empty())
        j["recoloured"] = step.recoloured.values();
    if (!step.context.empty())
        j["context"] = step.context;
    if (explain)
        j["explanation"] = std::string(describe(step.label));
    return j;
}

} // namespace

Json vertices(const VertexSet& set)
{
    return Json(set.members());
}

Json witness(const Witness& w, bool steps, bool explain)
{
    Json j;
    j["vertices"] = vertices(w.vertices);
    j["m"] = w.m;
    j["trace"] = w.trace.summary();
    if (steps || explain) {
        Json list = Json::array();
        for (const auto& step : w.trace.steps)
            list.push_back(step_json(step, explain));
        j["steps"] = std::move(list);
    }
    return j;
}

Json spectrum(const SpectrumReport& report)
{
    Json achievable = Json::object();
    for (const auto& [m, w] : report.achievable) {
        Json entry;
        entry["vertices"] = vertices(w.vertices);
        entry["trace"] = w.trace.summary();
        achievable[std::to_string(m)] = std::move(entry);
    }
    Json j;
    j["achievable"] = std::move(achievable);
    j["missing"] = report.missing;
    return j;
}

Json canonical(const CanonicalForm& form)
{
    Json j;
    j["kind"] = std::string(to_string(form.kind));
    j["vertices"] = vertices(form.vertices);
    if (form.centre)
        j["centre"] = *form.centre;
    return j;
}

Json bipartite_witness(const BipartiteWitness& w, bool steps, bool explain)
{
    Json j;
    j["X"] = vertices(w.x);
    j["Y"] = vertices(w.y);
    j["m"] = w.m;
    j["trace"] = w.trace.summary();
    if (steps || explain) {
        Json list = Json::array();
        for (const auto& step : w.trace.steps)
            list.push_back(step_json(step, explain));
        j["steps"] = std::move(list);
    }
    return j;
}

Json counterexample(const CounterexampleResult& result)
{
    Json j;
    j["mode"] = std::string(to_string(result.mode));
    j["found"] = result.colouring.has_value();
    j["absence_proven"] = result.absence_proven;
    j["colourings_examined"] = result.colourings_examined;
    if (result.colouring) {
        std::ostringstream text;
        write_colouring(text, *result.colouring);
        j["colouring"] = text.str();
    }
    return j;
}

Json trichotomy(const TrichotomyReport& report)
{
    Json found = Json::object();
    for (const auto& [m, w] : report.witnesses)
        found[std::to_string(m)] = witness(w);
    Json j;
    j["n_target"] = report.n_target;
    j["branch"] = std::string(to_string(report.branch));
    j["satisfied"] = report.satisfied();
    j["all_m"] = report.all_m;
    j["found"] = std::move(found);
    j["missing"] = report.missing;
    j["rainbow"] = report.rainbow ? canonical(*report.rainbow) : Json(nullptr);
    j["star"] = report.star ? canonical(*report.star) : Json(nullptr);
    return j;
}

std::string explain(const CaseTrace& trace)
{
    std::ostringstream out;
    std::string indent;
    for (const auto& step : trace.steps) {
        out << indent << to_string(step.label) << " (m = " << step.target << ')';
        if (step.anchor)
            out << " anchor " << step.anchor->u << '-' << step.anchor->v << " colour " << step.anchor->colour;
        if (!step.added.empty()) {
            out << " adds";
            for (const auto v : step.added)
                out << ' ' << v;
        }
        if (!step.recoloured.values().empty()) {
            out << ", ignoring colour";
            for (const auto col : step.recoloured.values())
                out << ' ' << col;
        }
        out << "\n" << indent << "  " << describe(step.label) << '\n';
        indent += "  ";
    }
    return out.str();
}

} // namespace ramsey::report
