#include "ramsey/errors.hpp"
#include "ramsey/generators.hpp"
#include "ramsey/trichotomy.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ramsey;

TEST_CASE("trichotomy branches")
{
    SUBCASE("rainbow")
    {
        const auto r = verify_trichotomy(gen_rainbow(8), 5);
        CHECK(r.branch == TrichotomyBranch::rainbow);
        CHECK_FALSE(r.all_m);
        REQUIRE(r.rainbow);
        CHECK(r.rainbow->vertices == VertexSet::of(8, {0, 1, 2, 3, 4}));
        CHECK(r.missing == std::vector<std::size_t>{2, 4, 5});
    }
    SUBCASE("star")
    {
        const auto c = gen_star(10, 0);
        const auto r = verify_trichotomy(c, 4);
        CHECK(r.branch == TrichotomyBranch::star);
        CHECK(r.missing == std::vector<std::size_t>{2});
        REQUIRE(r.star);
        CHECK(r.star->centre == Vertex{0});
        CHECK(satisfies(c, *r.star));
        CHECK_FALSE(r.rainbow.has_value());
    }
    SUBCASE("every m")
    {
        const auto c = gen_left(6);
        const auto r = verify_trichotomy(c, 4);
        CHECK(r.branch == TrichotomyBranch::all_m);
        CHECK(r.all_m);
        CHECK(r.witnesses.size() == 4);
        for (const auto& [m, w] : r.witnesses)
            CHECK(testing::naive_gamma(c, w.vertices) == m);
    }
    SUBCASE("violated")
    {
        // one colour: no 2-coloured set, no rainbow or star triangle
        const auto r = verify_trichotomy(gen_mono(6), 3);
        CHECK(r.branch == TrichotomyBranch::violated);
        CHECK_FALSE(r.satisfied());
        CHECK(to_string(r.branch) == "violated");
    }
    CHECK_THROWS_AS(verify_trichotomy(gen_rainbow(3), 0), ArgumentError);
}

TEST_CASE("trichotomy reports are consistent")
{
    Rng rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = gen_random_exact_k(8, 10 + rng.below(15), rng.next());
        const auto r = verify_trichotomy(c, 3);
        const auto naive = testing::naive_spectrum(c);
        for (std::size_t m = 1; m <= 3; ++m) {
            const bool found = r.witnesses.count(m) == 1;
            CHECK(found == (naive.values.count(m) == 1));
        }
        CHECK(r.all_m == r.missing.empty());
        if (r.rainbow)
            CHECK(satisfies(c, *r.rainbow));
        if (r.star)
            CHECK(satisfies(c, *r.star));
    }
}
