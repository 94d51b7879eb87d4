#pragma once

#include <gridchrome/errors.hpp>
#include <gridchrome/grid.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gridchrome
{
    enum class Engine
    {
        Backtracking,
        FrontierDP,
        Both
    };

    auto to_string(Engine engine) -> std::string;
    auto parse_engine(std::string_view name) -> Engine;

    enum class Status
    {
        Sat,
        Unsat
    };

    auto to_string(Status status) -> std::string;

    struct SolverConfig
    {
        Engine engine = Engine::Backtracking;

        /// Fix (1,1) to colour 0 and let new colours appear in increasing
        /// order along the scan. Ignored (treated as off) when cells are pinned.
        bool symmetry_breaking = true;

        /// Prune with the local 3-dynamic 4-colouring lemmas (rainbow 2x3
        /// windows, zigzag). Only active when k = 4 and r >= 3.
        bool lemma_propagation = false;

        std::optional<std::uint64_t> node_limit;
        std::optional<std::chrono::milliseconds> time_limit;
        std::optional<std::uint64_t> enumeration_limit;

        /// Total frontier states (summed over layers) the DP engine may retain
        /// before giving up; bounds its memory.
        std::uint64_t dp_state_budget = 40'000'000;

        /// Worker threads for the backtracking engine. Status and (unless
        /// any_witness) the witness do not depend on this.
        unsigned threads = 1;
        bool any_witness = false;

        /// Shuffles the value order of the backtracking engine.
        std::optional<std::uint64_t> seed;

        /// Partial coloring whose assigned cells are fixed in every solution.
        std::optional<Coloring> pinned;

        /// Throws InputError on non-positive limits or zero threads.
        auto check() const -> void;
    };

    /// Limits used by optimal_coloring when it falls back to search.
    auto default_witness_search() -> SolverConfig;

    struct SearchStats
    {
        std::uint64_t nodes = 0;              ///< backtracking assignments tried
        std::uint64_t prunings = 0;           ///< look-ahead and clash cut-offs
        std::uint64_t lemma_prunings = 0;     ///< cut-offs from lemma propagation
        std::uint64_t dp_states = 0;          ///< frontier states summed over layers
        std::uint64_t dp_peak_layer = 0;
        double wall_seconds = 0.0;
    };

    struct DecisionOutcome
    {
        Status status = Status::Unsat;
        std::optional<Coloring> witness;      ///< present iff status == Sat
        SearchStats stats;
        Engine engine = Engine::Backtracking;
    };

    /// Decides whether G_{m,n} has a proper r-dynamic k-coloring.
    /// Throws ResourceError when a limit is hit, ConsistencyError when the
    /// engines disagree or a witness fails validation.
    auto decide(GridDims dims, int r, int k, const SolverConfig & config = {}) -> DecisionOutcome;

    /// chromatic_exact ran out of budget; last_k is the palette size it was
    /// deciding.
    class ExactSearchLimit : public ResourceError
    {
    public:
        ExactSearchLimit(const std::string & what, int last_k) : ResourceError(what), _last_k(last_k) {}
        auto last_k() const noexcept -> int { return _last_k; }

    private:
        int _last_k;
    };

    /// Least k with decide(dims, r, k) = Sat, starting from min(Delta, r) + 1.
    auto chromatic_exact(GridDims dims, int r, const SolverConfig & config = {}) -> int;

    struct EnumerationSummary
    {
        std::uint64_t count = 0;
        bool truncated = false;               ///< enumeration_limit (or the visitor) stopped early
        SearchStats stats;
    };

    /// Calls visit on every proper r-dynamic k-coloring in row-major
    /// lexicographic order (up to colour relabelling when
    /// config.symmetry_breaking is set). visit returns false to stop.
    auto enumerate(GridDims dims, int r, int k, const SolverConfig & config,
            const std::function<auto (const Coloring &) -> bool> & visit) -> EnumerationSummary;

    /// Convenience wrapper collecting at most `limit` colorings.
    struct EnumerationResult
    {
        std::vector<Coloring> colorings;
        bool truncated = false;
    };

    auto enumerate_colorings(GridDims dims, int r, int k, std::uint64_t limit, bool symmetry_breaking = false)
        -> EnumerationResult;

    /// Tries all k^{mn} assignments, checking the definition directly.
    /// Throws InputError when mn > 12.
    auto brute_force_oracle(GridDims dims, int r, int k) -> Status;

    inline constexpr int brute_force_cell_cap = 12;
}
