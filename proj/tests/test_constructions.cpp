#include <doctest.h>

#include <gridchrome/chromatic_table.hpp>
#include <gridchrome/constructions.hpp>
#include <gridchrome/errors.hpp>

using namespace gridchrome;

TEST_CASE("mod5 examples")
{
    auto c = mod5_coloring({ 3, 3 });
    CHECK(c.k() == 5);
    CHECK(c == Coloring::from_rows(5, { { 3, 0, 2 }, { 4, 1, 3 }, { 0, 2, 4 } }));
    CHECK(validate(mod5_coloring({ 5, 6 }), 4).empty());
    CHECK(validate(mod5_coloring({ 2, 2 }), 4).empty());
    CHECK_THROWS_AS(mod5_coloring({ 1, 5 }), UnsupportedInput);
}

TEST_CASE("block examples")
{
    auto c = block_coloring({ 4, 4 });
    CHECK(c == Coloring::from_rows(4, { { 0, 1, 2, 3 }, { 2, 3, 0, 1 }, { 1, 0, 3, 2 }, { 3, 2, 1, 0 } }));
    CHECK(validate(c, 3).empty());

    auto six = block_coloring({ 6, 6 });
    for (int j = 1 ; j <= 6 ; ++j) {
        CHECK(six(5, j) == six(1, j));
        CHECK(six(6, j) == six(2, j));
        CHECK(six(1, j) == c(1, (j - 1) % 4 + 1));
    }
    CHECK(validate(six, 3).empty());
    CHECK(validate(block_coloring({ 2, 7 }), 4).empty());
}

TEST_CASE("block precondition names the odd side")
{
    CHECK_FALSE(block_coloring_applicable({ 3, 4 }));
    CHECK(block_coloring_applicable({ 2, 9 }));
    CHECK(block_coloring_applicable({ 6, 10 }));
    try {
        block_coloring({ 4, 5 });
        FAIL("expected UnsupportedInput");
    }
    catch (const UnsupportedInput & e) {
        CHECK(std::string(e.what()).find("n=5") != std::string::npos);
    }
    try {
        block_coloring({ 3, 4 });
        FAIL("expected UnsupportedInput");
    }
    catch (const UnsupportedInput & e) {
        CHECK(std::string(e.what()).find("m=3") != std::string::npos);
    }
    CHECK_THROWS_AS(block_coloring({ 1, 4 }), UnsupportedInput);
}

TEST_CASE("every construction is valid in its envelope")
{
    for (int m = 2 ; m <= 12 ; ++m)
        for (int n = 2 ; n <= 12 ; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            auto five = mod5_coloring({ m, n });
            CHECK(validate(five, 4, 5).empty());
            if (m * n >= 5)
                CHECK(five.distinct_colors() == 5);

            if (block_coloring_applicable({ m, n })) {
                auto block = block_coloring({ m, n });
                CHECK(validate(block, 3, 4).empty());
                CHECK(block.distinct_colors() == 4);
                if (std::min(m, n) == 2)
                    CHECK(validate(block, 4, 4).empty());
            }
            CHECK(validate(checkerboard_coloring({ m, n }), 1, 2).empty());
        }
}

TEST_CASE("block tiling fails r=3 outside its envelope")
{
    // the truncated tiling itself, read past the precondition
    for (auto [m, n] : { std::pair{ 3, 4 }, { 3, 3 }, { 5, 6 }, { 4, 7 } }) {
        std::vector<Color> cells;
        for (int i = 1 ; i <= m ; ++i)
            for (int j = 1 ; j <= n ; ++j)
                cells.push_back(tiling_color(i, j));
        CHECK_FALSE(validate(Coloring({ m, n }, 4, cells), 3).empty());
    }
}

TEST_CASE("mod5 affine shifts stay valid")
{
    for (int shift = 0 ; shift < 5 ; ++shift)
        for (auto [m, n] : { std::pair{ 2, 2 }, { 3, 7 }, { 5, 6 }, { 9, 4 } }) {
            auto base = mod5_coloring({ m, n });
            std::vector<Color> shifted;
            for (auto x : base.cells())
                shifted.push_back((x + shift) % 5);
            CHECK(validate(Coloring({ m, n }, 5, shifted), 4).empty());
        }
}

TEST_CASE("optimal_coloring")
{
    auto a = optimal_coloring({ 4, 6 }, 3);
    CHECK(a.kind == ConstructionKind::BlockTiling);
    CHECK(a.coloring.k() == 4);
    CHECK(validate(a.coloring, 3).empty());

    auto b = optimal_coloring({ 5, 6 }, 3);
    CHECK(b.kind == ConstructionKind::Mod5Diagonal);
    CHECK(b.coloring.k() == 5);

    auto c = optimal_coloring({ 3, 3 }, 2);
    CHECK(c.kind == ConstructionKind::SolverWitness);
    CHECK(c.coloring.k() == 4);
    CHECK(validate(c.coloring, 2).empty());

    CHECK(optimal_coloring({ 7, 3 }, 1).kind == ConstructionKind::Checkerboard);
    CHECK_THROWS_AS(optimal_coloring({ 1, 3 }, 2), OutOfTableError);
}

TEST_CASE("optimal_coloring uses exactly the table value")
{
    for (int m = 2 ; m <= 9 ; ++m)
        for (int n = 2 ; n <= 9 ; ++n)
            for (int r = 1 ; r <= 5 ; ++r) {
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(r);
                auto result = optimal_coloring({ m, n }, r);
                CHECK(result.coloring.k() == grid_chromatic(m, n, r).value);
                CHECK(validate(result.coloring, r, result.coloring.k()).empty());
            }
}

TEST_CASE("witness search timeout is retryable")
{
    auto tight = default_witness_search();
    tight.node_limit = 1;
    CHECK_THROWS_AS(optimal_coloring({ 9, 9 }, 2, tight), WitnessTimeout);
}

TEST_CASE("construction kind names")
{
    CHECK(to_string(ConstructionKind::Mod5Diagonal) == "mod5");
    CHECK(to_string(ConstructionKind::BlockTiling) == "block");
    CHECK(to_string(ConstructionKind::Checkerboard) == "checkerboard");
    CHECK(to_string(ConstructionKind::SolverWitness) == "solver-witness");
}
