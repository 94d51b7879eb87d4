#include <doctest.h>

#include "support/oracles.hpp"

#include <gridchrome/chromatic_table.hpp>
#include <gridchrome/constructions.hpp>
#include <gridchrome/errors.hpp>
#include <gridchrome/solver.hpp>

using namespace gridchrome;

namespace
{
    auto with_engine(Engine engine) -> SolverConfig
    {
        SolverConfig config;
        config.engine = engine;
        return config;
    }

    auto status(int m, int n, int r, int k, SolverConfig config = {}) -> Status
    {
        return decide({ m, n }, r, k, config).status;
    }

    const Engine all_engines[] = { Engine::Backtracking, Engine::FrontierDP, Engine::Both };
}

TEST_CASE("decide examples")
{
    for (auto engine : all_engines) {
        CAPTURE(to_string(engine));
        auto config = with_engine(engine);
        CHECK(status(3, 6, 3, 4, config) == Status::Unsat);
        CHECK(status(4, 4, 3, 4, config) == Status::Sat);
        CHECK(status(2, 2, 1, 2, config) == Status::Sat);
        CHECK(status(5, 5, 3, 4, config) == Status::Unsat);
        CHECK(status(7, 6, 3, 4, config) == Status::Unsat);
    }
}

TEST_CASE("outcome shape")
{
    auto sat = decide({ 4, 4 }, 3, 4, with_engine(Engine::Both));
    REQUIRE(sat.witness);
    CHECK(sat.engine == Engine::Both);
    CHECK(sat.witness->k() == 4);
    CHECK(validate(*sat.witness, 3, 4).empty());
    CHECK(sat.stats.nodes > 0);
    CHECK(sat.stats.dp_states > 0);
    CHECK(sat.stats.wall_seconds >= 0.0);

    auto unsat = decide({ 3, 6 }, 3, 4);
    CHECK_FALSE(unsat.witness);
    CHECK(to_string(unsat.status) == "UNSAT");
    CHECK(to_string(sat.status) == "SAT");
}

TEST_CASE("paths and tiny grids")
{
    for (auto engine : all_engines) {
        auto config = with_engine(engine);
        CHECK(status(1, 1, 3, 1, config) == Status::Sat);
        CHECK(status(1, 2, 1, 1, config) == Status::Unsat);
        CHECK(status(1, 5, 2, 2, config) == Status::Unsat);
        CHECK(status(1, 5, 2, 3, config) == Status::Sat);
        CHECK(status(6, 1, 4, 3, config) == Status::Sat);
    }
}

TEST_CASE("chromatic_exact examples")
{
    CHECK(chromatic_exact({ 4, 6 }, 3) == 4);
    CHECK(chromatic_exact({ 3, 6 }, 3) == 5);
    CHECK(chromatic_exact({ 3, 3 }, 4) == 5);
    CHECK(chromatic_exact({ 1, 7 }, 2) == 3);
    CHECK(chromatic_exact({ 1, 1 }, 2) == 1);
}

TEST_CASE("chromatic_exact reports the k it was deciding")
{
    SolverConfig config;
    config.node_limit = 5;
    try {
        chromatic_exact({ 6, 6 }, 3, config);
        FAIL("expected ExactSearchLimit");
    }
    catch (const ExactSearchLimit & e) {
        CHECK(e.last_k() == 4);
    }
}

TEST_CASE("brute force oracle")
{
    CHECK(brute_force_oracle({ 2, 3 }, 2, 3) == status(2, 3, 2, 3));
    CHECK(brute_force_oracle({ 2, 2 }, 2, 4) == Status::Sat);
    CHECK(brute_force_oracle({ 3, 3 }, 3, 4) == Status::Unsat);
    CHECK_THROWS_AS(brute_force_oracle({ 3, 5 }, 2, 2), InputError);
}

TEST_CASE("engines agree with brute force on small grids")
{
    for (int m = 1 ; m <= 9 ; ++m)
        for (int n = 1 ; m * n <= 9 ; ++n)
            for (int r = 1 ; r <= 3 ; ++r)
                for (int k = 1 ; k <= 4 ; ++k) {
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(r);
                    CAPTURE(k);
                    auto expected = brute_force_oracle({ m, n }, r, k);
                    CHECK(status(m, n, r, k, with_engine(Engine::Backtracking)) == expected);
                    CHECK(status(m, n, r, k, with_engine(Engine::FrontierDP)) == expected);
                }
}

TEST_CASE("engines agree up to 49 cells")
{
    for (int m = 1 ; m <= 7 ; ++m)
        for (int n = m ; m * n <= 49 ; ++n)
            for (int r = 1 ; r <= 4 ; ++r)
                for (int k = 1 ; k <= 5 ; ++k) {
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(r);
                    CAPTURE(k);
                    auto bt = decide({ m, n }, r, k, with_engine(Engine::Backtracking));
                    auto dp = decide({ m, n }, r, k, with_engine(Engine::FrontierDP));
                    CHECK(bt.status == dp.status);
                    if (dp.witness)
                        CHECK(validate(*dp.witness, r, k).empty());
                }
}

TEST_CASE("status invariant under transposition and toggles")
{
    for (int m = 2 ; m <= 5 ; ++m)
        for (int n = 2 ; n <= 6 ; ++n)
            for (int r = 1 ; r <= 4 ; ++r)
                for (int k = 2 ; k <= 5 ; ++k) {
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(r);
                    CAPTURE(k);
                    auto base = status(m, n, r, k);
                    CHECK(status(n, m, r, k) == base);

                    SolverConfig plain;
                    plain.symmetry_breaking = false;
                    CHECK(status(m, n, r, k, plain) == base);
                    auto dp = with_engine(Engine::FrontierDP);
                    dp.symmetry_breaking = false;
                    CHECK(status(m, n, r, k, dp) == base);

                    SolverConfig lemma;
                    lemma.lemma_propagation = true;
                    CHECK(status(m, n, r, k, lemma) == base);
                }
}

TEST_CASE("lemma propagation never adds nodes")
{
    for (auto [m, n] : { std::pair{ 3, 6 }, { 4, 4 }, { 4, 6 }, { 5, 5 }, { 5, 6 }, { 6, 6 }, { 3, 10 }, { 7, 6 } }) {
        for (bool symmetry : { true, false }) {
            CAPTURE(m);
            CAPTURE(n);
            SolverConfig off;
            off.symmetry_breaking = symmetry;
            auto lemma = off;
            lemma.lemma_propagation = true;
            auto a = decide({ m, n }, 3, 4, off);
            auto b = decide({ m, n }, 3, 4, lemma);
            CHECK(a.status == b.status);
            CHECK(b.stats.nodes <= a.stats.nodes);
        }
    }
    // outside the k=4, r>=3 regime the rules are inactive
    SolverConfig lemma;
    lemma.lemma_propagation = true;
    auto r2 = decide({ 5, 5 }, 2, 4, lemma);
    CHECK(r2.stats.lemma_prunings == 0);
}

TEST_CASE("pinned cells")
{
    auto block = block_coloring({ 4, 4 });
    auto pins = Coloring({ 4, 4 }, 4).with_cell({ 1, 1 }, 2).with_cell({ 2, 2 }, 1);
    for (auto engine : all_engines) {
        auto config = with_engine(engine);
        config.pinned = pins;
        auto outcome = decide({ 4, 4 }, 3, 4, config);
        REQUIRE(outcome.status == Status::Sat);
        CHECK((*outcome.witness)(1, 1) == 2);
        CHECK((*outcome.witness)(2, 2) == 1);

        // (1,1) and (1,2) equal is never proper
        config.pinned = Coloring({ 4, 4 }, 4).with_cell({ 1, 1 }, 0).with_cell({ 1, 2 }, 0);
        CHECK(decide({ 4, 4 }, 3, 4, config).status == Status::Unsat);

        // a full valid assignment is its own witness
        config.pinned = block;
        auto full = decide({ 4, 4 }, 3, 4, config);
        REQUIRE(full.witness);
        CHECK(*full.witness == block);
    }

    SolverConfig config;
    config.pinned = Coloring({ 3, 4 }, 4);
    CHECK_THROWS_AS(decide({ 4, 4 }, 3, 4, config), InputError);
    config.pinned = Coloring({ 4, 4 }, 5).with_cell({ 1, 1 }, 4);
    CHECK_THROWS_AS(decide({ 4, 4 }, 3, 4, config), InputError);
}

TEST_CASE("limits are errors, not answers")
{
    SolverConfig nodes;
    nodes.node_limit = 10;
    CHECK_THROWS_AS(decide({ 8, 8 }, 3, 4, nodes), ResourceError);

    auto budget = with_engine(Engine::FrontierDP);
    budget.dp_state_budget = 10;
    CHECK_THROWS_AS(decide({ 6, 6 }, 3, 4, budget), ResourceError);

    auto wide = with_engine(Engine::FrontierDP);
    CHECK_THROWS_AS(decide({ 4, 4 }, 3, 8, wide), ResourceError);
    CHECK_THROWS_AS(decide({ 11, 11 }, 3, 4, wide), ResourceError);

    SolverConfig timed;
    timed.time_limit = std::chrono::milliseconds(1);
    timed.symmetry_breaking = false;
    CHECK_THROWS_AS(decide({ 30, 30 }, 2, 3, timed), ResourceError);
}

TEST_CASE("configuration checks")
{
    SolverConfig config;
    config.node_limit = 0;
    CHECK_THROWS_AS(decide({ 2, 2 }, 1, 2, config), InputError);
    config = {};
    config.threads = 0;
    CHECK_THROWS_AS(decide({ 2, 2 }, 1, 2, config), InputError);
    config = {};
    config.time_limit = std::chrono::milliseconds(0);
    CHECK_THROWS_AS(decide({ 2, 2 }, 1, 2, config), InputError);
    CHECK_THROWS_AS(decide({ 0, 2 }, 1, 2), InputError);
    CHECK_THROWS_AS(decide({ 2, 2 }, 0, 2), InputError);
    CHECK_THROWS_AS(decide({ 2, 2 }, 1, 0), InputError);
    CHECK_THROWS_AS(decide({ 2, 2 }, 1, 65), InputError);
}

TEST_CASE("engine names")
{
    CHECK(parse_engine("bt") == Engine::Backtracking);
    CHECK(parse_engine("backtracking") == Engine::Backtracking);
    CHECK(parse_engine("dp") == Engine::FrontierDP);
    CHECK(parse_engine("frontier-dp") == Engine::FrontierDP);
    CHECK(parse_engine("both") == Engine::Both);
    CHECK_THROWS_AS(parse_engine("sat"), InputError);
    CHECK(to_string(Engine::FrontierDP) == "frontier-dp");
}

TEST_CASE("determinism")
{
    auto a = decide({ 6, 8 }, 3, 4);
    auto b = decide({ 6, 8 }, 3, 4);
    CHECK(a.witness == b.witness);
    CHECK(a.stats.nodes == b.stats.nodes);

    SolverConfig seeded;
    seeded.seed = 42;
    auto s1 = decide({ 5, 7 }, 2, 4, seeded);
    auto s2 = decide({ 5, 7 }, 2, 4, seeded);
    REQUIRE(s1.witness);
    CHECK(s1.witness == s2.witness);
    CHECK(validate(*s1.witness, 2, 4).empty());

    auto dp1 = decide({ 5, 7 }, 3, 5, with_engine(Engine::FrontierDP));
    auto dp2 = decide({ 5, 7 }, 3, 5, with_engine(Engine::FrontierDP));
    CHECK(dp1.witness == dp2.witness);
}

TEST_CASE("parallel search keeps status and witness")
{
    for (auto [m, n, r, k] : { std::array{ 3, 6, 3, 4 }, { 6, 8, 3, 4 }, { 5, 7, 2, 4 }, { 7, 6, 3, 4 }, { 5, 5, 4, 5 } }) {
        CAPTURE(m);
        CAPTURE(n);
        auto serial = decide({ m, n }, r, k);
        for (unsigned threads : { 2u, 4u }) {
            SolverConfig config;
            config.threads = threads;
            auto parallel = decide({ m, n }, r, k, config);
            CHECK(parallel.status == serial.status);
            CHECK(parallel.witness == serial.witness);

            config.any_witness = true;
            auto any = decide({ m, n }, r, k, config);
            CHECK(any.status == serial.status);
            if (any.witness)
                CHECK(validate(*any.witness, r, k).empty());
        }
    }
}

TEST_CASE("enumerate examples")
{
    auto two = enumerate_colorings({ 2, 2 }, 1, 2, 100);
    CHECK(two.colorings.size() == 2);
    CHECK_FALSE(two.truncated);

    auto none = enumerate_colorings({ 3, 6 }, 3, 4, 100);
    CHECK(none.colorings.empty());
    CHECK_FALSE(none.truncated);

    auto capped = enumerate_colorings({ 4, 4 }, 3, 4, 5);
    CHECK(capped.colorings.size() == 5);
    CHECK(capped.truncated);

    auto all = enumerate_colorings({ 4, 4 }, 3, 4, 1000);
    CHECK(all.colorings.size() == 24);
    CHECK(std::is_sorted(all.colorings.begin(), all.colorings.end(), [] (const Coloring & a, const Coloring & b) {
        return std::lexicographical_compare(a.cells().begin(), a.cells().end(), b.cells().begin(), b.cells().end());
    }));
    for (auto & c : all.colorings)
        CHECK(validate(c, 3, 4).empty());

    auto reduced = enumerate_colorings({ 4, 4 }, 3, 4, 1000, true);
    REQUIRE(reduced.colorings.size() == 1);
    CHECK(reduced.colorings[0] == block_coloring({ 4, 4 }));
}

TEST_CASE("enumeration counts match the column-transfer oracle")
{
    for (int m = 1 ; m <= 4 ; ++m)
        for (int n = 1 ; m * n <= 12 ; ++n)
            for (int r = 1 ; r <= 3 ; ++r)
                for (int k = 2 ; k <= 4 ; ++k) {
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(r);
                    CAPTURE(k);
                    SolverConfig config;
                    config.symmetry_breaking = false;
                    auto summary = enumerate({ m, n }, r, k, config, [] (const Coloring &) { return true; });
                    CHECK(summary.count == oracle::count_colorings(m, n, r, k));
                    CHECK_FALSE(summary.truncated);
                }
}

TEST_CASE("enumerate visitor can stop early")
{
    SolverConfig config;
    config.symmetry_breaking = false;
    int seen = 0;
    auto summary = enumerate({ 4, 4 }, 3, 4, config, [&] (const Coloring &) { return ++seen < 3; });
    CHECK(seen == 3);
    CHECK(summary.truncated);
}
