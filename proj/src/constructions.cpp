#include <gridchrome/chromatic_table.hpp>
#include <gridchrome/constructions.hpp>
#include <gridchrome/errors.hpp>

namespace gridchrome
{
    auto to_string(ConstructionKind kind) -> std::string
    {
        switch (kind) {
            case ConstructionKind::Mod5Diagonal: return "mod5";
            case ConstructionKind::BlockTiling: return "block";
            case ConstructionKind::Checkerboard: return "checkerboard";
            case ConstructionKind::SolverWitness: return "solver-witness";
        }
        return "?";
    }

    namespace
    {
        template <typename CellColour>
        auto generate(GridDims dims, int k, CellColour colour) -> Coloring
        {
            std::vector<Color> cells;
            cells.reserve(std::size_t(dims.vertex_count()));
            for (int i = 1 ; i <= dims.m ; ++i)
                for (int j = 1 ; j <= dims.n ; ++j)
                    cells.push_back(colour(i, j));
            return Coloring{ dims, k, std::move(cells) };
        }
    }

    auto mod5_coloring(GridDims dims) -> Coloring
    {
        require_proper_grid(dims, "mod5_coloring");
        return generate(dims, 5, [] (int i, int j) { return (i + 2 * j) % 5; });
    }

    auto block_coloring_applicable(GridDims dims) -> bool
    {
        return dims.m >= 2 && dims.n >= 2 && (std::min(dims.m, dims.n) == 2 || (dims.m % 2 == 0 && dims.n % 2 == 0));
    }

    auto block_coloring(GridDims dims) -> Coloring
    {
        require_proper_grid(dims, "block_coloring");
        if (! block_coloring_applicable(dims)) {
            std::string failing = dims.m % 2 ? "m=" + std::to_string(dims.m) : "n=" + std::to_string(dims.n);
            throw UnsupportedInput("block_coloring needs min(m,n) = 2 or both m and n even; " + failing
                    + " is odd and min(m,n) = " + std::to_string(std::min(dims.m, dims.n)));
        }
        return generate(dims, 4, tiling_color);
    }

    auto checkerboard_coloring(GridDims dims) -> Coloring
    {
        dims = make_dims(dims.m, dims.n);
        return generate(dims, 2, [] (int i, int j) { return (i + j) % 2; });
    }

    auto optimal_coloring(GridDims dims, int r, const SolverConfig & search) -> OptimalColoring
    {
        auto answer = grid_chromatic(dims.m, dims.n, r);
        if (r == 1)
            return { ConstructionKind::Checkerboard, checkerboard_coloring(dims) };
        if (answer.value == 5)
            return { ConstructionKind::Mod5Diagonal, mod5_coloring(dims) };
        if (block_coloring_applicable(dims))
            return { ConstructionKind::BlockTiling, block_coloring(dims) };

        // chi_2 = 4 with an odd side of length >= 3: no verified explicit pattern
        SolverConfig config = search;
        config.engine = Engine::Backtracking;
        config.pinned.reset();
        try {
            auto outcome = decide(dims, r, answer.value, config);
            if (outcome.status != Status::Sat)
                throw ConsistencyError("exact search found no " + std::to_string(answer.value) + "-colouring of G_{"
                        + std::to_string(dims.m) + "," + std::to_string(dims.n) + "} for r=" + std::to_string(r)
                        + ", contradicting the table");
            return { ConstructionKind::SolverWitness, std::move(*outcome.witness) };
        }
        catch (const ResourceError & e) {
            throw WitnessTimeout(std::string("witness search gave up: ") + e.what());
        }
    }
}
