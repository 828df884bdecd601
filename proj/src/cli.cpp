#include "ramsey/cli.hpp"

#include "ramsey/bipartite.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/counterexample.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/generators.hpp"
#include "ramsey/io.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/report.hpp"
#include "ramsey/search.hpp"
#include "ramsey/trichotomy.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace ramsey::cli {

namespace {

using report::Json;

std::string command_name(Command command)
{
    switch (command) {
    case Command::generate: return "generate";
    case Command::analyze: return "analyze";
    case Command::find: return "find";
    case Command::canon: return "canon";
    case Command::search_f: return "search-F";
    case Command::bipartite_find: return "bipartite find";
    case Command::bipartite_analyze: return "bipartite analyze";
    case Command::verify_trichotomy: return "verify-trichotomy";
    }
    return "unknown";
}

template <typename T>
T require(const std::optional<T>& value, const char* flag)
{
    if (!value)
        throw ArgumentError(std::string("missing required option ") + flag);
    return *value;
}

void check_one_source(const RunConfig& cfg)
{
    if (cfg.input && cfg.gen)
        throw ArgumentError("give either --input or --gen, not both");
    if (!cfg.input && !cfg.gen)
        throw ArgumentError("an input is required: --input FILE or --gen KIND with its size");
}

GeneratorKind kind_of(const std::string& name)
{
    const auto kind = parse_generator_kind(name);
    if (!kind)
        throw ArgumentError("unknown generator kind '" + name + "'");
    return *kind;
}

Colouring generated(const RunConfig& cfg)
{
    GeneratorSpec spec;
    spec.kind = kind_of(*cfg.gen);
    spec.n = require(cfg.n, "--n");
    if (cfg.centre)
        spec.centre = static_cast<Vertex>(*cfg.centre);
    if (cfg.l)
        spec.l = *cfg.l;
    if (cfg.k)
        spec.k = *cfg.k;
    spec.seed = cfg.seed;
    spec.validate();
    Capacity::from_environment().check(spec.n);
    return generate(spec);
}

BipartiteColouring generated_bipartite(const RunConfig& cfg)
{
    const auto p = require(cfg.p, "--p");
    const auto q = require(cfg.q, "--q");
    Capacity::from_environment().check(p + q);
    switch (kind_of(*cfg.gen)) {
    case GeneratorKind::rainbow: return gen_bipartite_rainbow(p, q);
    case GeneratorKind::mono: return gen_bipartite_mono(p, q);
    case GeneratorKind::random_exact_k: return gen_bipartite_random_exact_k(p, q, require(cfg.k, "--k"), cfg.seed);
    default: throw ArgumentError("bipartite generators are rainbow, mono and random-exact-k");
    }
}

Colouring load(const RunConfig& cfg)
{
    check_one_source(cfg);
    if (cfg.input)
        return read_colouring_file(*cfg.input, Capacity::from_environment());
    return generated(cfg);
}

BipartiteColouring load_bipartite(const RunConfig& cfg)
{
    check_one_source(cfg);
    if (cfg.input)
        return read_bipartite_file(*cfg.input, Capacity::from_environment());
    return generated_bipartite(cfg);
}

SearchBudget budget_of(const RunConfig& cfg)
{
    SearchBudget budget;
    budget.colour_threshold = cfg.budget_threshold;
    if (cfg.fallback)
        budget.fallback_size = *cfg.fallback;
    budget.validate();
    return budget;
}

Json header(const RunConfig& cfg)
{
    Json j;
    j["schema"] = report::schema_version;
    j["command"] = command_name(cfg.command);
    j["seed"] = cfg.seed;
    if (cfg.input)
        j["input"] = *cfg.input;
    if (cfg.gen)
        j["generator"] = *cfg.gen;
    return j;
}

void print_vertices(std::ostream& out, const VertexSet& set)
{
    out << '{';
    bool first = true;
    set.for_each([&](Vertex v) {
        out << (first ? "" : ",") << v;
        first = false;
    });
    out << '}';
}

void print_list(std::ostream& out, const std::vector<std::size_t>& values)
{
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? " " : "") << values[i];
}

int do_generate(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.input)
        throw ArgumentError("generate takes --gen/--kind, not --input");
    if (!cfg.gen)
        throw ArgumentError("missing required option --kind");
    if (cfg.p || cfg.q)
        write_bipartite(out, generated_bipartite(cfg));
    else
        write_colouring(out, generated(cfg));
    return ok;
}

int do_analyze(const RunConfig& cfg, std::ostream& out)
{
    const auto c = load(cfg);
    OracleOptions options;
    options.threads = cfg.threads;
    options.capacity = Capacity::from_environment();
    if (cfg.min_size) {
        if (*cfg.min_size > c.n())
            throw ArgumentError("--min-size exceeds n");
        options.min_subset_size = *cfg.min_size;
    }
    const auto spec = spectrum(c, cfg.max_size, options);
    if (cfg.json) {
        auto j = header(cfg);
        j["n"] = c.n();
        j["colours"] = c.colour_count();
        j.update(report::spectrum(spec));
        out << j.dump() << '\n';
        return ok;
    }
    out << "n = " << c.n() << ", colours = " << c.colour_count() << '\n';
    out << "achievable: ";
    print_list(out, spec.values());
    out << "\nmissing: ";
    print_list(out, spec.missing);
    out << '\n';
    for (const auto& [m, w] : spec.achievable) {
        out << "  " << m << ": ";
        print_vertices(out, w.vertices);
        out << '\n';
    }
    return ok;
}

int do_find(const RunConfig& cfg, std::ostream& out)
{
    const auto m = require(cfg.m, "--m");
    const auto budget = budget_of(cfg);
    const auto c = load(cfg);
    const auto w = find_m_coloured(c, m, budget);
    if (cfg.json) {
        auto j = header(cfg);
        j["n"] = c.n();
        j["m"] = m;
        j["found"] = w.has_value();
        j["witness"] = w ? report::witness(*w, true, cfg.explain) : Json(nullptr);
        out << j.dump() << '\n';
    } else if (w) {
        out << m << "-coloured set: ";
        print_vertices(out, w->vertices);
        out << "\ntrace: " << w->trace.summary() << '\n';
        if (cfg.explain)
            out << report::explain(w->trace);
    } else {
        out << "no " << m << "-coloured set found\n";
    }
    return w ? ok : not_found;
}

int do_canon(const RunConfig& cfg, std::ostream& out)
{
    const auto size = require(cfg.size, "--size");
    const auto c = load(cfg);
    const auto forms = find_canonical_subsets(c, size);
    if (cfg.json) {
        auto j = header(cfg);
        j["n"] = c.n();
        j["size"] = size;
        Json list = Json::array();
        for (const auto& form : forms)
            list.push_back(report::canonical(form));
        j["forms"] = std::move(list);
        out << j.dump() << '\n';
    } else {
        for (const auto& form : forms) {
            out << to_string(form.kind) << ' ';
            print_vertices(out, form.vertices);
            if (form.centre)
                out << " centre " << *form.centre;
            out << '\n';
        }
        if (forms.empty())
            out << "no canonical subsets of size " << size << '\n';
    }
    return forms.empty() ? not_found : ok;
}

int do_search_f(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.input || cfg.gen)
        throw ArgumentError("search-F builds its own colourings; drop --input/--gen");
    const auto n = require(cfg.n, "--n");
    const auto k = require(cfg.k, "--k");
    const auto m = require(cfg.m, "--m");
    CounterexampleBudget budget;
    budget.seed = cfg.seed;
    const auto result = search_counterexample_F(n, k, m, budget);
    if (cfg.json) {
        auto j = header(cfg);
        j["n"] = n;
        j["k"] = k;
        j["m"] = m;
        j.update(report::counterexample(result));
        out << j.dump() << '\n';
    } else {
        out << "mode: " << to_string(result.mode) << ", colourings examined: " << result.colourings_examined << '\n';
        if (result.colouring) {
            out << "counterexample (no " << m << "-coloured set):\n";
            write_colouring(out, *result.colouring);
        } else if (result.absence_proven) {
            out << "no counterexample exists: every exact-" << k << " colouring of K_" << n << " has a " << m
                << "-coloured set\n";
        } else {
            out << "no counterexample found within the budget\n";
        }
    }
    return result.colouring ? ok : not_found;
}

int do_bipartite_find(const RunConfig& cfg, std::ostream& out)
{
    const auto m = require(cfg.m, "--m");
    const auto budget = budget_of(cfg);
    const auto b = load_bipartite(cfg);
    const auto w = find_bipartite_m_coloured(b, m, budget);
    if (cfg.json) {
        auto j = header(cfg);
        j["p"] = b.p();
        j["q"] = b.q();
        j["m"] = m;
        j["found"] = w.has_value();
        j["witness"] = w ? report::bipartite_witness(*w, true, cfg.explain) : Json(nullptr);
        out << j.dump() << '\n';
    } else if (w) {
        out << "X = ";
        print_vertices(out, w->x);
        out << ", Y = ";
        print_vertices(out, w->y);
        out << " (" << m << " colours)\ntrace: " << w->trace.summary() << '\n';
        if (cfg.explain)
            out << report::explain(w->trace);
    } else {
        out << "no " << m << "-coloured complete bipartite subgraph found\n";
    }
    return w ? ok : not_found;
}

int do_bipartite_analyze(const RunConfig& cfg, std::ostream& out)
{
    const auto b = load_bipartite(cfg);
    const auto spec = bipartite_spectrum(b, Capacity::from_environment());
    if (cfg.json) {
        auto j = header(cfg);
        j["p"] = b.p();
        j["q"] = b.q();
        j.update(report::spectrum(spec));
        out << j.dump() << '\n';
        return ok;
    }
    out << "achievable: ";
    print_list(out, spec.values());
    out << "\nmissing: ";
    print_list(out, spec.missing);
    out << '\n';
    return ok;
}

int do_trichotomy(const RunConfig& cfg, std::ostream& out)
{
    const auto size = require(cfg.size, "--n-target");
    const auto budget = budget_of(cfg);
    const auto c = load(cfg);
    const auto result = verify_trichotomy(c, size, budget);
    if (cfg.json) {
        auto j = header(cfg);
        j["n"] = c.n();
        j.update(report::trichotomy(result));
        out << j.dump() << '\n';
    } else {
        out << "branch: " << to_string(result.branch) << '\n';
        out << "found m: ";
        for (const auto& [m, w] : result.witnesses)
            out << m << ' ';
        out << "\nmissing m: ";
        print_list(out, result.missing);
        out << '\n';
        if (result.rainbow) {
            out << "rainbow ";
            print_vertices(out, result.rainbow->vertices);
            out << '\n';
        }
        if (result.star) {
            out << "star ";
            print_vertices(out, result.star->vertices);
            out << " centre " << *result.star->centre << '\n';
        }
        if (!result.satisfied())
            out << "trichotomy violated at this budget\n";
    }
    return result.satisfied() ? ok : not_found;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        switch (cfg.command) {
        case Command::generate: return do_generate(cfg, out);
        case Command::analyze: return do_analyze(cfg, out);
        case Command::find: return do_find(cfg, out);
        case Command::canon: return do_canon(cfg, out);
        case Command::search_f: return do_search_f(cfg, out);
        case Command::bipartite_find: return do_bipartite_find(cfg, out);
        case Command::bipartite_analyze: return do_bipartite_analyze(cfg, out);
        case Command::verify_trichotomy: return do_trichotomy(cfg, out);
        }
    } catch (const ParseError& e) {
        err << (cfg.input ? *cfg.input + ": " : std::string()) << e.what() << '\n';
        return input_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exactly-m-coloured complete subgraphs of edge colourings"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input) {
            sub->add_option("--input", cfg.input, "colouring file");
            sub->add_option("--gen", cfg.gen, "generator kind");
        }
        sub->add_option("--n", cfg.n, "vertex count");
        sub->add_option("--centre", cfg.centre, "star centre");
        sub->add_option("--l", cfg.l, "clique size for clique-plus-one");
        sub->add_option("--k", cfg.k, "number of colours");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_flag("--json", cfg.json, "JSON output");
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-threshold", cfg.budget_threshold, "colour count that makes a class rich");
        sub->add_option("--fallback", cfg.fallback, "instances this small go to the oracle");
        sub->add_flag("--explain", cfg.explain, "describe each proof case of the trace");
    };

    auto* generate = app.add_subcommand("generate", "write a generated colouring in text format");
    generate->add_option("--kind,--gen", cfg.gen, "generator kind")->required();
    add_common(generate, false);
    generate->add_option("--p", cfg.p, "left part size (bipartite)");
    generate->add_option("--q", cfg.q, "right part size (bipartite)");

    auto* analyze = app.add_subcommand("analyze", "brute-force spectrum with minimal witnesses");
    add_common(analyze, true);
    analyze->add_option("--min-size", cfg.min_size, "only subsets of at least this size");
    analyze->add_option("--max-size", cfg.max_size, "only subsets of at most this size");
    analyze->add_option("--threads", cfg.threads, "enumeration threads");

    auto* find = app.add_subcommand("find", "constructive search for an exactly-m-coloured set");
    add_common(find, true);
    add_budget(find);
    find->add_option("--m", cfg.m, "target colour count")->required();

    auto* canon = app.add_subcommand("canon", "list canonical subsets of a given size");
    add_common(canon, true);
    canon->add_option("--size", cfg.size, "subset size")->required();

    auto* search_f = app.add_subcommand("search-F", "look for an exact-k colouring of K_n with no m-coloured set");
    add_common(search_f, false);
    search_f->add_option("--m", cfg.m, "target colour count")->required();

    auto* bipartite = app.add_subcommand("bipartite", "complete bipartite colourings");
    bipartite->require_subcommand(1);
    auto* bfind = bipartite->add_subcommand("find", "search for an exactly-m-coloured complete bipartite subgraph");
    auto* banalyze = bipartite->add_subcommand("analyze", "brute-force bipartite spectrum");
    for (auto* sub : {bfind, banalyze}) {
        add_common(sub, true);
        sub->add_option("--p", cfg.p, "left part size");
        sub->add_option("--q", cfg.q, "right part size");
    }
    add_budget(bfind);
    bfind->add_option("--m", cfg.m, "target colour count")->required();

    auto* trichotomy = app.add_subcommand("verify-trichotomy", "check the three-way outcome for [n_target]");
    add_common(trichotomy, true);
    add_budget(trichotomy);
    trichotomy->add_option("--n-target,--size", cfg.size, "target size")->required();

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    if (*generate)
        cfg.command = Command::generate;
    else if (*analyze)
        cfg.command = Command::analyze;
    else if (*find)
        cfg.command = Command::find;
    else if (*canon)
        cfg.command = Command::canon;
    else if (*search_f)
        cfg.command = Command::search_f;
    else if (*bfind)
        cfg.command = Command::bipartite_find;
    else if (*banalyze)
        cfg.command = Command::bipartite_analyze;
    else
        cfg.command = Command::verify_trichotomy;
    return run(cfg, out, err);
}

} // namespace ramsey::cli
