// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "ramsey/bipartite.hpp"
#include "ramsey/extension.hpp"
#include "ramsey/generators.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/search.hpp"
#include "ramsey/trichotomy.hpp"
#include "instances.hpp"
#include "support.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace ramsey;
using Values = std::set<std::size_t>;

namespace {

// Collects the first few problems of a criterion for the report line.
struct Outcome {
    std::size_t failures = 0;
    std::string first;
    std::string note;

    void fail(const std::string& what)
    {
        if (failures++ == 0)
            first = what;
    }
    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            fail(what);
    }
};

std::string show(const Values& values)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto v : values) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << '}';
    return out.str();
}

Values values_of(const SpectrumReport& report)
{
    return testing::as_set(report.values());
}

bool sound(const Colouring& c, const Witness& w, std::size_t m)
{
    return w.m == m && testing::naive_gamma(c, w.vertices) == m && verify(c, w) && replay(c, w.trace) == w.vertices;
}

void rainbow_spectrum(Outcome& o)
{
    const auto start = std::chrono::steady_clock::now();
    const auto got = values_of(spectrum(gen_rainbow(8)));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(got == Values{1, 3, 6, 10, 15, 21, 28}, "spectrum " + show(got));
    o.expect(seconds < 5.0, "took " + std::to_string(seconds) + " s");
}

void star_spectrum(Outcome& o)
{
    const auto got = values_of(spectrum(gen_star(10, 0)));
    o.expect(got == Values{1, 3, 4, 5, 6, 7, 8, 9, 10}, "spectrum " + show(got));
}

void clique_plus_one(Outcome& o)
{
    const auto got = values_of(spectrum(gen_clique_plus_one(12, 4)));
    for (const auto m : got) {
        bool shaped = false;
        for (std::size_t t = 2; t <= 12; ++t)
            shaped = shaped || m == choose2(t) || m == choose2(t) + 1;
        o.expect(shaped, std::to_string(m) + " is not C(t,2) or C(t,2)+1");
    }
    o.expect(got.count(5) == 0, "5 is present");
}

void binomial_values(Outcome& o)
{
    Rng rng(4001);
    for (int trial = 0; trial < 200; ++trial) {
        const auto k = 12 + rng.below(34);
        const auto seed = rng.next();
        const auto got = values_of(spectrum(gen_random_exact_k(10, k, seed)));
        for (std::size_t t = 2; t <= 4; ++t)
            o.expect(got.count(choose2(t)) == 1,
                     "k=" + std::to_string(k) + " seed=" + std::to_string(seed) + " lacks " + std::to_string(choose2(t)));
    }
}

void oracle_equivalence(Outcome& o)
{
    const auto start = std::chrono::steady_clock::now();
    Rng rng(4002);
    const auto budget = SearchBudget::full_fallback(10);
    for (int trial = 0; trial < 100; ++trial) {
        const auto k = 1 + rng.below(45);
        const auto seed = rng.next();
        const auto c = gen_random_exact_k(10, k, seed);
        const auto spec = spectrum(c);
        for (std::size_t m = 1; m <= 45; ++m) {
            const auto w = find_m_coloured(c, m, budget);
            o.expect(w.has_value() == spec.contains(m),
                     "k=" + std::to_string(k) + " seed=" + std::to_string(seed) + " m=" + std::to_string(m));
            if (w)
                o.expect(sound(c, *w, m), "unsound witness for m=" + std::to_string(m));
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(seconds < 60.0, "took " + std::to_string(seconds) + " s");
}

void witness_soundness(Outcome& o)
{
    Rng rng(4003);
    std::size_t witnesses = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 4 + rng.below(9);
        const auto c = testing::random_colouring(n, static_cast<Colour>(2 + rng.below(40)), rng, trial % 3 == 0);
        SearchBudget budget;
        budget.colour_threshold = 1 + rng.below(8);
        budget.fallback_size = 3 + rng.below(4);
        const auto m = 1 + rng.below(8);
        const auto tag = "trial " + std::to_string(trial);
        try {
            if (trial % 4 == 3) {
                const auto a = testing::random_subset(n, rng);
                const auto b = VertexSet::all(n) - a;
                if (a.empty() || b.empty())
                    continue;
                if (const auto w = find_m_coloured_cross(c, a, b, m, budget)) {
                    ++witnesses;
                    o.expect(sound(c, *w, m) && w->vertices.intersects(a) && w->vertices.intersects(b), tag);
                }
            } else if (const auto w = find_m_coloured(c, m, budget)) {
                ++witnesses;
                o.expect(sound(c, *w, m), tag);
            }
        } catch (const std::exception& e) {
            o.fail(tag + ": " + e.what());
        }
    }
    o.note = std::to_string(witnesses) + " witnesses checked";
    o.expect(witnesses > 0, "no witness was returned");
}

// Every spoke either fresh or coloured like an edge {u, f(u)} with f(u) < u:
// one representative per labelled forest of self-incident collisions.
void forest_patterns(Outcome& o, std::vector<Colour>& spokes, std::size_t u)
{
    const std::size_t s = spokes.size();
    if (u == s) {
        const auto c = testing::spoke_instance(s, spokes);
        const auto set = VertexSet::all(s + 1) - VertexSet::of(s + 1, {static_cast<Vertex>(s)});
        const auto t = find_collision_free_subset(c, set, static_cast<Vertex>(s));
        o.expect(t && t->size() == 3 && testing::collision_free(c, *t, static_cast<Vertex>(s)), "forest pattern");
        return;
    }
    spokes[u] = static_cast<Colour>(testing::first_fresh(s) + u);
    forest_patterns(o, spokes, u + 1);
    for (Vertex f = 0; f < u; ++f) {
        spokes[u] = testing::rainbow_colour(s, f, static_cast<Vertex>(u));
        forest_patterns(o, spokes, u + 1);
    }
}

void extension_machinery(Outcome& o)
{
    const std::size_t s9 = 9;
    const auto set9 = VertexSet::all(s9 + 1) - VertexSet::of(s9 + 1, {9});

    // Family 1: self-incident collisions, all 9! labelled forests.
    std::vector<Colour> spokes(s9);
    forest_patterns(o, spokes, 0);

    // Family 2: every spoke fresh or on one of the three edges of the triangle
    // {0, 1, 2}, which concentrates collisions; all 4^9 patterns.
    const std::array<Colour, 4> choices{testing::first_fresh(s9), testing::rainbow_colour(s9, 0, 1),
                                        testing::rainbow_colour(s9, 0, 2), testing::rainbow_colour(s9, 1, 2)};
    for (std::uint32_t code = 0; code < (1u << 18); ++code) {
        for (std::size_t u = 0; u < s9; ++u)
            spokes[u] = choices[code >> (2 * u) & 3];
        const auto c = testing::spoke_instance(s9, spokes);
        const auto t = find_collision_free_subset(c, set9, 9);
        o.expect(t && t->size() == 3 && testing::collision_free(c, *t, 9), "triangle pattern " + std::to_string(code));
    }

    // 100 random instances at s = 16.
    Rng rng(4007);
    const std::size_t s16 = 16;
    const auto set16 = VertexSet::all(s16 + 1) - VertexSet::of(s16 + 1, {16});
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Colour> sp(s16);
        for (auto& col : sp)
            col = rng.below(4) == 0 ? static_cast<Colour>(testing::first_fresh(s16) + rng.below(6))
                                    : static_cast<Colour>(1 + rng.below(choose2(s16)));
        const auto c = testing::spoke_instance(s16, sp);
        const auto t = find_collision_free_subset(c, set16, 16);
        o.expect(t && t->size() == 4 && testing::collision_free(c, *t, 16), "s=16 trial " + std::to_string(trial));
    }

    // C(3,2)+1 = 4 from twins: constant spokes and distinct fresh spokes.
    const auto twins = VertexSet::all(s9 + 2) - VertexSet::of(s9 + 2, {9, 10});
    std::vector<Colour> fresh(s9);
    for (std::size_t u = 0; u < s9; ++u)
        fresh[u] = static_cast<Colour>(testing::first_fresh(s9) + u);
    for (const auto& c : {testing::twin_instance(s9, std::vector<Colour>(s9, testing::first_fresh(s9)), 1),
                          testing::twin_instance(s9, fresh, static_cast<Colour>(testing::first_fresh(s9) + s9))}) {
        const auto w = build_plus_one_witness(c, twins, 9, 10, 3);
        o.expect(w && w->m == 4 && testing::naive_gamma(c, w->vertices) == 4 && replay(c, w->trace) == w->vertices,
                 "plus-one witness");
    }
}

void bipartite(Outcome& o)
{
    const auto got = values_of(bipartite_spectrum(gen_bipartite_rainbow(3, 3)));
    o.expect(got == Values{1, 2, 3, 4, 6, 9}, "rainbow 3x3 spectrum " + show(got));

    Rng rng(4008);
    for (int trial = 0; trial < 50; ++trial) {
        const auto k = 1 + rng.below(36);
        const auto seed = rng.next();
        const auto b = gen_bipartite_random_exact_k(6, 6, k, seed);
        const auto spec = values_of(bipartite_spectrum(b));
        o.expect(spec == testing::naive_bipartite_spectrum(b), "spectrum differs from enumeration");
        for (std::size_t m = 1; m <= 36; ++m) {
            const auto w = find_bipartite_m_coloured(b, m);
            o.expect(w.has_value() == (spec.count(m) == 1),
                     "k=" + std::to_string(k) + " seed=" + std::to_string(seed) + " m=" + std::to_string(m));
            if (w)
                o.expect(bipartite_colour_count(b, w->x, w->y) == m, "unsound bipartite witness");
        }
    }
}

void superadditivity(Outcome& o)
{
    Rng rng(4009);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng.below(14);
        const auto c = testing::random_colouring(n, static_cast<Colour>(1 + rng.below(30)), rng, trial % 2 == 0);
        const std::size_t r = 1 + rng.below(5);
        std::vector<VertexSet> parts(r, VertexSet(n));
        for (Vertex v = 0; v < n; ++v)
            if (const auto i = rng.below(r + 1); i < r) // some vertices left out of X
                parts[i].insert(v);
        // independent evaluation of both sides
        std::size_t lhs = 0;
        VertexSet whole(n);
        for (std::size_t i = 0; i < r; ++i) {
            lhs += testing::naive_gamma(c, parts[i]);
            whole |= parts[i];
            for (std::size_t j = i + 1; j < r; ++j) {
                std::set<Colour> across;
                for (const auto a : parts[i].members())
                    for (const auto b : parts[j].members())
                        if (c(a, b) != colourless)
                            across.insert(c(a, b));
                lhs += across.size();
            }
        }
        const bool holds = lhs >= testing::naive_gamma(c, whole);
        o.expect(holds, "trial " + std::to_string(trial));
        o.expect(superadditivity_check(c, parts) == holds, "library disagrees on trial " + std::to_string(trial));
    }
}

void trichotomy(Outcome& o)
{
    Rng rng(4010);
    for (int trial = 0; trial < 200; ++trial) {
        const auto k = 12 + rng.below(34);
        const auto seed = rng.next();
        const auto c = gen_random_exact_k(10, k, seed);
        const auto report = verify_trichotomy(c, 3);
        o.expect(report.satisfied(), "k=" + std::to_string(k) + " seed=" + std::to_string(seed));
        for (const auto& [m, w] : report.witnesses)
            o.expect(sound(c, w, m), "unsound witness");
    }
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"rainbow K_8 spectrum is {1,3,6,10,15,21,28} within 5 s", rainbow_spectrum},
        {"star K_10 spectrum is {1,3,...,10} without 2", star_spectrum},
        {"clique-plus-one(12,4) values are C(t,2) or C(t,2)+1, 5 absent", clique_plus_one},
        {"200 random K_10 with k >= 12 contain 1, 3 and 6", binomial_values},
        {"full-fallback search matches the oracle on 100 K_10 within 60 s", oracle_equivalence},
        {"1000 witnesses re-verify and replay", witness_soundness},
        {"collision-free subsets (s=9 families, s=16 random) and plus-one witnesses", extension_machinery},
        {"bipartite rainbow 3x3 spectrum and 50 random 6x6 searches", bipartite},
        {"1000 superadditivity trials", superadditivity},
        {"trichotomy holds on 200 random K_10 with k >= 12, n_target 3", trichotomy},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(outcome);
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = outcome.failures == 0;
        failed += !pass;
        std::printf("%s  %2zu  %s (%.2f s)", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds);
        if (!outcome.note.empty())
            std::printf(" [%s]", outcome.note.c_str());
        if (!pass)
            std::printf(": %zu failure(s), first: %s", outcome.failures, outcome.first.c_str());
        std::printf("\n");
    }
    return failed == 0 ? 0 : 1;
}
