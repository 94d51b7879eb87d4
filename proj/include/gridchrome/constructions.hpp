#pragma once

#include <gridchrome/grid.hpp>
#include <gridchrome/solver.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace gridchrome
{
    /// The 4x4 block whose 4-periodic tiling gives the 4-colour
    /// constructions. Read with colours 0,1,2,3 as a,b,c,d it is also the
    /// canonical coherent corner abcd/cdab/badc/dcba.
    inline constexpr std::array<std::array<Color, 4>, 4> tiling_block{ {
        { 0, 1, 2, 3 },
        { 2, 3, 0, 1 },
        { 1, 0, 3, 2 },
        { 3, 2, 1, 0 },
    } };

    /// Colour of the infinite 4-periodic tiling at 1-based (i,j).
    constexpr auto tiling_color(int i, int j) -> Color
    {
        return tiling_block[std::size_t((i - 1) % 4)][std::size_t((j - 1) % 4)];
    }

    enum class ConstructionKind
    {
        Mod5Diagonal,
        BlockTiling,
        Checkerboard,
        SolverWitness
    };

    auto to_string(ConstructionKind kind) -> std::string;

    /// cell (i,j) = (i + 2j) mod 5. Valid 4-dynamic 5-colouring for m,n >= 2.
    auto mod5_coloring(GridDims dims) -> Coloring;

    /// Block tiling truncated to the first m rows and n columns. Valid
    /// 3-dynamic when min(m,n) = 2 or m,n both even; 4-dynamic when
    /// min(m,n) = 2.
    auto block_coloring(GridDims dims) -> Coloring;
    auto block_coloring_applicable(GridDims dims) -> bool;

    /// (i + j) mod 2.
    auto checkerboard_coloring(GridDims dims) -> Coloring;

    struct OptimalColoring
    {
        ConstructionKind kind;
        Coloring coloring;
    };

    /// A coloring with exactly grid_chromatic(m,n,r) colours that is
    /// r-dynamic. Falls back to exact search (with `search` limits) where no
    /// explicit construction applies; a search that runs out of budget throws
    /// WitnessTimeout.
    auto optimal_coloring(GridDims dims, int r, const SolverConfig & search = default_witness_search()) -> OptimalColoring;
}
