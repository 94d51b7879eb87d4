#pragma once

#include <gridchrome/solver.hpp>

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <vector>

namespace gridchrome::detail
{
    /// A decision instance after config has been checked. pins is row-major
    /// and uses `unassigned` for free cells (all free when nothing is pinned).
    struct Instance
    {
        GridDims dims;
        int r;
        int k;
        std::vector<Color> pins;
        bool has_pins = false;
    };

    auto make_instance(GridDims dims, int r, int k, const SolverConfig & config) -> Instance;

    /// Wall-clock deadline shared by engines; unset means unlimited.
    class Deadline
    {
    public:
        explicit Deadline(const std::optional<std::chrono::milliseconds> & limit);
        auto expired() const -> bool;

    private:
        std::optional<std::chrono::steady_clock::time_point> _at;
    };

    auto lemma_rules_apply(int r, int k) -> bool;

    /// Backtracking in row-major order. Returns the outcome without the
    /// engine/wall-time fields filled in.
    auto backtracking_decide(const Instance & instance, const SolverConfig & config, const Deadline & deadline)
        -> DecisionOutcome;

    auto backtracking_enumerate(const Instance & instance, const SolverConfig & config, const Deadline & deadline,
            const std::function<auto (const Coloring &) -> bool> & visit) -> EnumerationSummary;

    /// Column-sweep frontier dynamic programming.
    auto frontier_dp_decide(const Instance & instance, const SolverConfig & config, const Deadline & deadline)
        -> DecisionOutcome;
}
