#include <gridchrome/solver.hpp>

#include "engines.hpp"

#include <algorithm>

namespace gridchrome
{
    auto to_string(Engine engine) -> std::string
    {
        switch (engine) {
            case Engine::Backtracking: return "backtracking";
            case Engine::FrontierDP: return "frontier-dp";
            case Engine::Both: return "both";
        }
        return "?";
    }

    auto parse_engine(std::string_view name) -> Engine
    {
        if (name == "backtracking" || name == "bt")
            return Engine::Backtracking;
        if (name == "frontier-dp" || name == "dp")
            return Engine::FrontierDP;
        if (name == "both")
            return Engine::Both;
        throw InputError("unknown engine '" + std::string(name) + "' (expected backtracking, frontier-dp or both)");
    }

    auto to_string(Status status) -> std::string
    {
        return status == Status::Sat ? "SAT" : "UNSAT";
    }

    auto SolverConfig::check() const -> void
    {
        if (node_limit && *node_limit == 0)
            throw InputError("node limit must be positive");
        if (time_limit && time_limit->count() <= 0)
            throw InputError("time limit must be positive");
        if (enumeration_limit && *enumeration_limit == 0)
            throw InputError("enumeration limit must be positive");
        if (dp_state_budget == 0)
            throw InputError("DP state budget must be positive");
        if (threads == 0)
            throw InputError("thread count must be positive");
    }

    auto default_witness_search() -> SolverConfig
    {
        SolverConfig config;
        config.node_limit = 50'000'000;
        config.time_limit = std::chrono::seconds(60);
        return config;
    }

    namespace detail
    {
        Deadline::Deadline(const std::optional<std::chrono::milliseconds> & limit)
        {
            if (limit)
                _at = std::chrono::steady_clock::now() + *limit;
        }

        auto Deadline::expired() const -> bool
        {
            return _at && std::chrono::steady_clock::now() >= *_at;
        }

        auto make_instance(GridDims dims, int r, int k, const SolverConfig & config) -> Instance
        {
            config.check();
            dims = make_dims(dims.m, dims.n);
            if (r < 1)
                throw InputError("dynamic parameter r must be at least 1, got " + std::to_string(r));
            if (k < 1 || k > 64)
                throw InputError("palette size k must be in [1..64], got " + std::to_string(k));

            Instance instance{ dims, r, k, std::vector<Color>(std::size_t(dims.vertex_count()), unassigned) };
            if (config.pinned) {
                auto & pinned = *config.pinned;
                if (pinned.dims() != dims)
                    throw InputError("pinned coloring shape does not match the instance");
                for (std::size_t v = 0 ; v < instance.pins.size() ; ++v) {
                    Color c = pinned.cells()[v];
                    if (c != unassigned && c >= k)
                        throw InputError("pinned colour " + std::to_string(c) + " outside palette of size " + std::to_string(k));
                    instance.pins[v] = c;
                }
                instance.has_pins = pinned.assigned_count() > 0;
            }
            return instance;
        }
    }

    namespace
    {
        auto check_witness(const DecisionOutcome & outcome, int r, int k, Engine engine) -> void
        {
            if (outcome.status != Status::Sat)
                return;
            if (! outcome.witness)
                throw ConsistencyError(to_string(engine) + " reported SAT without a witness");
            auto report = validate(*outcome.witness, r, k);
            if (! report.empty())
                throw ConsistencyError(to_string(engine) + " produced a witness with "
                        + std::to_string(report.violation_count()) + " violations");
        }

        /// The same instance on the transposed grid.
        auto transposed(const detail::Instance & instance) -> detail::Instance
        {
            auto dims = instance.dims;
            detail::Instance result{ dims.transposed(), instance.r, instance.k, instance.pins, instance.has_pins };
            for (int i = 1 ; i <= dims.m ; ++i)
                for (int j = 1 ; j <= dims.n ; ++j)
                    result.pins[std::size_t(result.dims.index({ j, i }))] = instance.pins[std::size_t(dims.index({ i, j }))];
            return result;
        }

        /// Backtracking scans rows of the shorter side so that every vertex's
        /// constraint closes within a short distance of the scan front.
        auto backtracking_short_rows(const detail::Instance & instance, const SolverConfig & config,
                const detail::Deadline & deadline) -> DecisionOutcome
        {
            if (instance.dims.n <= instance.dims.m)
                return detail::backtracking_decide(instance, config, deadline);
            auto outcome = detail::backtracking_decide(transposed(instance), config, deadline);
            if (outcome.witness)
                outcome.witness = outcome.witness->transposed();
            return outcome;
        }

        auto check_pins(const DecisionOutcome & outcome, const SolverConfig & config) -> void
        {
            if (outcome.status != Status::Sat || ! config.pinned)
                return;
            auto pins = config.pinned->cells();
            auto cells = outcome.witness->cells();
            for (std::size_t v = 0 ; v < pins.size() ; ++v)
                if (pins[v] != unassigned && pins[v] != cells[v])
                    throw ConsistencyError("witness does not respect the pinned cells");
        }
    }

    auto decide(GridDims dims, int r, int k, const SolverConfig & config) -> DecisionOutcome
    {
        auto instance = detail::make_instance(dims, r, k, config);
        detail::Deadline deadline{ config.time_limit };
        auto start = std::chrono::steady_clock::now();

        auto run = [&] (Engine engine) {
            auto outcome = engine == Engine::Backtracking
                ? backtracking_short_rows(instance, config, deadline)
                : detail::frontier_dp_decide(instance, config, deadline);
            outcome.engine = engine;
            check_witness(outcome, r, k, engine);
            check_pins(outcome, config);
            return outcome;
        };

        DecisionOutcome outcome;
        if (config.engine == Engine::Both) {
            auto bt = run(Engine::Backtracking);
            auto dp = run(Engine::FrontierDP);
            if (bt.status != dp.status)
                throw ConsistencyError("engines disagree on G_{" + std::to_string(dims.m) + "," + std::to_string(dims.n)
                        + "}, r=" + std::to_string(r) + ", k=" + std::to_string(k) + ": backtracking says "
                        + to_string(bt.status) + ", frontier DP says " + to_string(dp.status));
            outcome = std::move(bt);
            outcome.engine = Engine::Both;
            outcome.stats.dp_states = dp.stats.dp_states;
            outcome.stats.dp_peak_layer = dp.stats.dp_peak_layer;
        }
        else
            outcome = run(config.engine);

        outcome.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return outcome;
    }

    auto chromatic_exact(GridDims dims, int r, const SolverConfig & config) -> int
    {
        dims = make_dims(dims.m, dims.n);
        if (r < 1)
            throw InputError("dynamic parameter r must be at least 1, got " + std::to_string(r));
        int k = std::min(dims.max_degree(), r) + 1;
        for (;; ++k) {
            try {
                if (decide(dims, r, k, config).status == Status::Sat)
                    return k;
            }
            catch (const ExactSearchLimit &) {
                throw;
            }
            catch (const ResourceError & e) {
                throw ExactSearchLimit(std::string(e.what()) + " (while deciding k=" + std::to_string(k) + ")", k);
            }
        }
    }

    auto enumerate(GridDims dims, int r, int k, const SolverConfig & config,
            const std::function<auto (const Coloring &) -> bool> & visit) -> EnumerationSummary
    {
        auto instance = detail::make_instance(dims, r, k, config);
        detail::Deadline deadline{ config.time_limit };
        auto start = std::chrono::steady_clock::now();
        auto summary = detail::backtracking_enumerate(instance, config, deadline, visit);
        summary.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return summary;
    }

    auto enumerate_colorings(GridDims dims, int r, int k, std::uint64_t limit, bool symmetry_breaking) -> EnumerationResult
    {
        SolverConfig config;
        config.symmetry_breaking = symmetry_breaking;
        config.enumeration_limit = limit;
        EnumerationResult result;
        auto summary = enumerate(dims, r, k, config, [&] (const Coloring & c) {
            result.colorings.push_back(c);
            return true;
        });
        result.truncated = summary.truncated;
        return result;
    }
}
