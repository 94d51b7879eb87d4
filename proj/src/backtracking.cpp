#include "engines.hpp"

#include <gridchrome/lemma_rules.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace gridchrome::detail
{
    namespace
    {
        struct SearchAborted
        {
            std::string reason;
        };

        struct SubtreeCancelled
        {
        };

        /// Limits shared by every worker of one decide call.
        struct SharedControl
        {
            const Deadline & deadline;
            std::optional<std::uint64_t> node_limit;
            std::atomic<std::uint64_t> nodes{ 0 };
        };

        class Search
        {
        public:
            Search(const Instance & instance, const SolverConfig & config, SharedControl & control) :
                _dims(instance.dims),
                _r(instance.r),
                _k(instance.k),
                _cells(instance.dims.vertex_count()),
                _symmetry(config.symmetry_breaking && ! instance.has_pins),
                _lemmas(config.lemma_propagation && lemma_rules_apply(instance.r, instance.k)),
                _control(control),
                _neighbours(std::size_t(_cells)),
                _need(std::size_t(_cells)),
                _colour(std::size_t(_cells), unassigned),
                _count(std::size_t(_cells) * std::size_t(_k), 0),
                _distinct(std::size_t(_cells), 0),
                _free(std::size_t(_cells), 0)
            {
                for (int v = 0 ; v < _cells ; ++v) {
                    auto p = _dims.position(v);
                    auto & list = _neighbours[std::size_t(v)];
                    list.fill(-1);
                    int d = 0;
                    for (auto q : neighbors(_dims, p))
                        list[std::size_t(d++)] = _dims.index(q);
                    _need[std::size_t(v)] = std::int8_t(std::min(_r, d));
                    _free[std::size_t(v)] = std::int8_t(d);
                }
                if (config.seed) {
                    _seed = *config.seed;
                    _rng.emplace(_seed);
                }
            }

            /// Applies the pinned cells and builds the free-cell order. Returns
            /// false if the pins already violate a constraint.
            auto setup(const std::vector<Color> & pins) -> bool
            {
                for (int v = 0 ; v < _cells ; ++v) {
                    Color x = pins[std::size_t(v)];
                    if (x == unassigned) {
                        _order.push_back(v);
                        continue;
                    }
                    if (clashes(v, x) || ! assign(v, x) || (_lemmas && ! lemma_consistent(v)))
                        return false;
                }
                return true;
            }

            auto order_size() const -> std::size_t { return _order.size(); }

            /// Reseeds the value shuffle for subtree `salt` of a parallel run.
            auto seed_rng(std::uint64_t salt) -> void
            {
                if (_rng)
                    _rng->seed(_seed ^ (salt * 0x9E3779B97F4A7C15ull));
            }

            /// Abandon this subtree once a witness is known in an earlier one.
            auto cancel_when_below(const std::atomic<std::size_t> * best, std::size_t index) -> void
            {
                _best = best;
                _index = index;
            }

            /// Replays a prefix collected at the split depth.
            auto apply_prefix(const std::vector<Color> & prefix) -> void
            {
                for (std::size_t d = 0 ; d < prefix.size() ; ++d) {
                    int v = _order[d];
                    assign(v, prefix[d]);
                    _max_used = std::max(_max_used, prefix[d]);
                }
            }

            /// Depth-first search from `depth`; on_solution returns true to
            /// stop. Returns true if stopped by on_solution.
            template <typename OnSolution>
            auto dfs(std::size_t depth, OnSolution & on_solution, std::size_t stop_depth = std::numeric_limits<std::size_t>::max()) -> bool
            {
                if (depth == _order.size() || depth == stop_depth)
                    return on_solution(*this);

                int v = _order[depth];
                int hi = _symmetry ? std::min(_k - 1, _max_used + 1) : _k - 1;
                std::array<Color, 64> values{};
                int value_count = hi + 1;
                std::iota(values.begin(), values.begin() + value_count, 0);
                if (_rng)
                    std::shuffle(values.begin(), values.begin() + value_count, *_rng);

                for (int idx = 0 ; idx < value_count ; ++idx) {
                    Color x = values[std::size_t(idx)];
                    if (clashes(v, x)) {
                        ++stats.prunings;
                        continue;
                    }
                    tick();
                    bool ok = assign(v, x);
                    if (! ok)
                        ++stats.prunings;
                    else if (_lemmas && ! lemma_consistent(v)) {
                        ok = false;
                        ++stats.lemma_prunings;
                    }
                    if (ok) {
                        int saved = _max_used;
                        _max_used = std::max(_max_used, x);
                        bool stop = dfs(depth + 1, on_solution, stop_depth);
                        _max_used = saved;
                        if (stop) {
                            unassign(v);
                            return true;
                        }
                    }
                    unassign(v);
                }
                return false;
            }

            auto prefix_colours(std::size_t depth) const -> std::vector<Color>
            {
                std::vector<Color> result;
                for (std::size_t d = 0 ; d < depth ; ++d)
                    result.push_back(_colour[std::size_t(_order[d])]);
                return result;
            }

            auto coloring() const -> Coloring
            {
                return Coloring{ _dims, _k, _colour };
            }

            SearchStats stats;

        private:
            auto tick() -> void
            {
                ++stats.nodes;
                auto total = _control.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
                if (_control.node_limit && total > *_control.node_limit)
                    throw SearchAborted{ "node limit of " + std::to_string(*_control.node_limit) + " reached" };
                if ((stats.nodes & 0x3ff) == 0) {
                    if (_control.deadline.expired())
                        throw SearchAborted{ "time limit reached" };
                    if (_best && _best->load(std::memory_order_relaxed) < _index)
                        throw SubtreeCancelled{};
                }
            }

            auto clashes(int v, Color x) const -> bool
            {
                for (int u : _neighbours[std::size_t(v)])
                    if (u >= 0 && _colour[std::size_t(u)] == x)
                        return true;
                return false;
            }

            /// Most distinct colours v can still end up seeing.
            auto potential(int v) const -> int
            {
                int distinct = _distinct[std::size_t(v)];
                return distinct + std::min<int>(_free[std::size_t(v)], _k - 1 - distinct);
            }

            /// Applies v := x and returns false if a look-ahead bound fails.
            /// The assignment stays applied either way; callers unassign.
            auto assign(int v, Color x) -> bool
            {
                _colour[std::size_t(v)] = x;
                bool ok = true;
                for (int u : _neighbours[std::size_t(v)]) {
                    if (u < 0)
                        break;
                    auto & c = _count[std::size_t(u) * std::size_t(_k) + std::size_t(x)];
                    if (c++ == 0)
                        ++_distinct[std::size_t(u)];
                    --_free[std::size_t(u)];
                    if (potential(u) < _need[std::size_t(u)])
                        ok = false;
                }
                return ok;
            }

            auto unassign(int v) -> void
            {
                Color x = _colour[std::size_t(v)];
                for (int u : _neighbours[std::size_t(v)]) {
                    if (u < 0)
                        break;
                    auto & c = _count[std::size_t(u) * std::size_t(_k) + std::size_t(x)];
                    if (--c == 0)
                        --_distinct[std::size_t(u)];
                    ++_free[std::size_t(u)];
                }
                _colour[std::size_t(v)] = unassigned;
            }

            /// Lemma rules on every window or zigzag instance touching v.
            auto lemma_consistent(int v) const -> bool
            {
                using lemma::RuleCheck;
                auto p = _dims.position(v);
                auto at = [this] (int i, int j) { return _colour[std::size_t((i - 1) * _dims.n + (j - 1))]; };

                for (int top = p.i - 1 ; top <= p.i ; ++top)
                    for (int left = p.j - 2 ; left <= p.j ; ++left)
                        if (top >= 1 && left >= 1 && top + 1 <= _dims.m && left + 2 <= _dims.n
                                && lemma::check_rainbow_window(at, top, left, 2, 3) == RuleCheck::Violated)
                            return false;
                for (int top = p.i - 2 ; top <= p.i ; ++top)
                    for (int left = p.j - 1 ; left <= p.j ; ++left)
                        if (top >= 1 && left >= 1 && top + 2 <= _dims.m && left + 1 <= _dims.n
                                && lemma::check_rainbow_window(at, top, left, 3, 2) == RuleCheck::Violated)
                            return false;
                for (int i = p.i - 1 ; i <= p.i + 1 ; ++i)
                    for (int j = p.j - 1 ; j <= p.j + 1 ; ++j)
                        for (bool exchanged : { false, true })
                            if (lemma::check_zigzag_at(at, _dims, i, j, exchanged) == RuleCheck::Violated)
                                return false;
                return true;
            }

            GridDims _dims;
            int _r, _k, _cells;
            bool _symmetry, _lemmas;
            SharedControl & _control;
            std::vector<std::array<int, 4>> _neighbours;
            std::vector<std::int8_t> _need;
            std::vector<Color> _colour;
            std::vector<std::uint8_t> _count;
            std::vector<std::int8_t> _distinct, _free;
            std::vector<int> _order;
            int _max_used = -1;
            std::optional<std::mt19937_64> _rng;
            std::uint64_t _seed = 0;
            const std::atomic<std::size_t> * _best = nullptr;
            std::size_t _index = 0;
        };

        auto add_stats(SearchStats & into, const SearchStats & from) -> void
        {
            into.nodes += from.nodes;
            into.prunings += from.prunings;
            into.lemma_prunings += from.lemma_prunings;
        }

        auto make_search(const Instance & instance, const SolverConfig & config, SharedControl & control) -> Search
        {
            return Search{ instance, config, control };
        }

        auto sequential_decide(const Instance & instance, const SolverConfig & config, SharedControl & control)
            -> DecisionOutcome
        {
            DecisionOutcome outcome;
            auto search = make_search(instance, config, control);
            if (! search.setup(instance.pins)) {
                outcome.status = Status::Unsat;
                return outcome;
            }
            auto on_solution = [&] (Search & s) {
                outcome.witness = s.coloring();
                return true;
            };
            bool found = search.dfs(0, on_solution);
            outcome.status = found ? Status::Sat : Status::Unsat;
            outcome.stats = search.stats;
            return outcome;
        }

        /// Splits the tree into subtrees at a fixed depth and searches them on
        /// worker threads. The reported witness is the one from the first
        /// subtree in sequential order that has one, unless any_witness.
        auto parallel_decide(const Instance & instance, const SolverConfig & config, SharedControl & control)
            -> DecisionOutcome
        {
            DecisionOutcome outcome;
            auto base = make_search(instance, config, control);
            if (! base.setup(instance.pins)) {
                outcome.status = Status::Unsat;
                return outcome;
            }

            std::size_t split = std::min<std::size_t>(base.order_size(), 6);
            std::vector<std::vector<Color>> prefixes;
            std::optional<Coloring> shallow_witness;
            {
                auto collect = [&] (Search & s) {
                    if (split == base.order_size() && ! shallow_witness)
                        shallow_witness = s.coloring();
                    prefixes.push_back(s.prefix_colours(split));
                    return false;
                };
                auto probe = base;
                probe.dfs(0, collect, split);
                add_stats(outcome.stats, probe.stats);
            }
            if (shallow_witness) {
                outcome.status = Status::Sat;
                outcome.witness = shallow_witness;
                return outcome;
            }

            std::atomic<std::size_t> next{ 0 };
            std::atomic<std::size_t> best{ std::numeric_limits<std::size_t>::max() };
            std::mutex mutex;
            std::optional<Coloring> best_witness;
            std::optional<SearchAborted> aborted;
            SearchStats worker_totals;

            auto worker = [&] {
                SearchStats local;
                try {
                    for (;;) {
                        auto index = next.fetch_add(1);
                        if (index >= prefixes.size())
                            break;
                        if (index > best.load() || (config.any_witness && best.load() != std::numeric_limits<std::size_t>::max()))
                            continue;
                        auto search = base;
                        search.stats = {};
                        search.seed_rng(index + 1);
                        if (! config.any_witness)
                            search.cancel_when_below(&best, index);
                        search.apply_prefix(prefixes[index]);
                        auto on_solution = [&] (Search & s) {
                            std::lock_guard lock{ mutex };
                            if (index < best.load() || (config.any_witness && ! best_witness)) {
                                best = index;
                                best_witness = s.coloring();
                            }
                            return true;
                        };
                        try {
                            search.dfs(split, on_solution);
                        }
                        catch (const SubtreeCancelled &) {
                        }
                        add_stats(local, search.stats);
                    }
                }
                catch (const SearchAborted & e) {
                    std::lock_guard lock{ mutex };
                    if (! aborted)
                        aborted = e;
                    next = prefixes.size();
                }
                std::lock_guard lock{ mutex };
                add_stats(worker_totals, local);
            };

            std::vector<std::thread> threads;
            for (unsigned t = 0 ; t < config.threads ; ++t)
                threads.emplace_back(worker);
            for (auto & t : threads)
                t.join();

            add_stats(outcome.stats, worker_totals);
            if (best_witness) {
                outcome.status = Status::Sat;
                outcome.witness = std::move(best_witness);
                return outcome;
            }
            if (aborted)
                throw *aborted;
            outcome.status = Status::Unsat;
            return outcome;
        }
    }

    auto lemma_rules_apply(int r, int k) -> bool
    {
        return k == 4 && r >= 3;
    }

    auto backtracking_decide(const Instance & instance, const SolverConfig & config, const Deadline & deadline)
        -> DecisionOutcome
    {
        SharedControl control{ deadline, config.node_limit };
        try {
            if (config.threads > 1)
                return parallel_decide(instance, config, control);
            return sequential_decide(instance, config, control);
        }
        catch (const SearchAborted & e) {
            throw ResourceError("backtracking search stopped: " + e.reason);
        }
    }

    auto backtracking_enumerate(const Instance & instance, const SolverConfig & config, const Deadline & deadline,
            const std::function<auto (const Coloring &) -> bool> & visit) -> EnumerationSummary
    {
        SharedControl control{ deadline, config.node_limit };
        EnumerationSummary summary;
        auto search = make_search(instance, config, control);
        if (! search.setup(instance.pins))
            return summary;
        auto on_solution = [&] (Search & s) {
            if (config.enumeration_limit && summary.count >= *config.enumeration_limit) {
                summary.truncated = true;
                return true;
            }
            ++summary.count;
            if (! visit(s.coloring())) {
                summary.truncated = true;
                return true;
            }
            return false;
        };
        try {
            search.dfs(0, on_solution);
        }
        catch (const SearchAborted & e) {
            throw ResourceError("enumeration stopped: " + e.reason);
        }
        summary.stats = search.stats;
        return summary;
    }
}
