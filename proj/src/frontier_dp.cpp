#include "engines.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

// Column-sweep dynamic programming over the grid oriented so that columns are
// the shorter side. Cells are added one at a time in column-major order and a
// state is the colouring of the last 2h cells (h = column height). At every
// column boundary this window is exactly the pair (previous column, current
// column); the per-cell steps in between are that column transition split up
// so the fan-out per step is k instead of k^h. A cell's dynamic requirement
// is checked at the step that places its last neighbour, so every state
// reachable after the final cell is a valid colouring.
//
// A cell (i, j-1) is eventually needed only as the left neighbour of (i, j).
// Once both vertical neighbours of (i, j) are placed, if its colour repeats
// one of them or they already meet the requirement of (i, j), the slot is
// cleared so that states differing only there merge.
//
// When nothing is pinned and symmetry breaking is on, states are stored up to
// renaming of colours (relabelled by first occurrence, oldest cell first).

namespace gridchrome::detail
{
    namespace
    {
        constexpr int slot_bits = 3;
        constexpr std::uint64_t slot_mask = 7;
        constexpr std::uint64_t empty_slot = 7;

        struct Child
        {
            std::uint64_t key;
            std::uint32_t parent;
            std::uint8_t colour;
        };

        struct Back
        {
            std::uint32_t parent;
            std::uint8_t colour;
        };

        class FrontierDP
        {
        public:
            FrontierDP(const Instance & instance, const SolverConfig & config, const Deadline & deadline) :
                _transposed(instance.dims.m > instance.dims.n),
                _h(std::min(instance.dims.m, instance.dims.n)),
                _w(std::max(instance.dims.m, instance.dims.n)),
                _window(2 * _h),
                _r(instance.r),
                _k(instance.k),
                _canonical(config.symmetry_breaking && ! instance.has_pins),
                _budget(config.dp_state_budget),
                _deadline(deadline),
                _original(instance.dims)
            {
                if (_k > 7)
                    throw ResourceError("frontier DP supports at most 7 colours, got k=" + std::to_string(_k));
                if (_window * slot_bits > 64)
                    throw ResourceError("frontier DP supports grids whose shorter side is at most 10, got "
                            + std::to_string(_h));

                _pins.assign(std::size_t(_h * _w), unassigned);
                if (instance.has_pins)
                    for (int t = 0 ; t < _h * _w ; ++t)
                        _pins[std::size_t(t)] = instance.pins[std::size_t(original_index(t))];
            }

            auto run() -> DecisionOutcome
            {
                DecisionOutcome outcome;
                std::uint64_t empty_key = 0;
                for (int s = 0 ; s < _window ; ++s)
                    empty_key |= empty_slot << (slot_bits * s);

                std::vector<std::uint64_t> layer{ empty_key };
                std::vector<std::vector<Back>> backs;
                backs.reserve(std::size_t(_h * _w));
                std::vector<Child> children;

                for (int t = 0 ; t < _h * _w ; ++t) {
                    if (_deadline.expired())
                        throw ResourceError("frontier DP stopped: time limit reached");

                    children.clear();
                    for (std::uint32_t idx = 0 ; idx < layer.size() ; ++idx)
                        expand(t, layer[idx], idx, children);

                    std::sort(children.begin(), children.end(), [] (const Child & a, const Child & b) {
                        return a.key != b.key ? a.key < b.key : a.parent < b.parent;
                    });
                    layer.clear();
                    std::vector<Back> back;
                    for (std::size_t c = 0 ; c < children.size() ; ++c) {
                        if (c > 0 && children[c].key == children[c - 1].key)
                            continue;
                        layer.push_back(children[c].key);
                        back.push_back({ children[c].parent, children[c].colour });
                    }
                    backs.push_back(std::move(back));

                    outcome.stats.dp_states += layer.size();
                    outcome.stats.dp_peak_layer = std::max<std::uint64_t>(outcome.stats.dp_peak_layer, layer.size());
                    if (outcome.stats.dp_states > _budget)
                        throw ResourceError("frontier DP retained " + std::to_string(outcome.stats.dp_states)
                                + " states, exceeding the budget of " + std::to_string(_budget));
                    if (layer.empty()) {
                        outcome.status = Status::Unsat;
                        return outcome;
                    }
                }

                outcome.status = Status::Sat;
                outcome.witness = reconstruct(backs);
                return outcome;
            }

        private:
            auto original_index(int t) const -> int
            {
                int i = t % _h, j = t / _h;
                return _transposed ? j * _original.n + i : i * _original.n + j;
            }

            static auto slot(std::uint64_t key, int s) -> int
            {
                return int((key >> (slot_bits * s)) & slot_mask);
            }

            static auto bit(int c) -> unsigned
            {
                return std::uint64_t(c) == empty_slot ? 0u : 1u << c;
            }

            auto meets(unsigned seen_mask, int degree) const -> bool
            {
                return __builtin_popcount(seen_mask) >= std::min(_r, degree);
            }

            /// Whether placing colour x as cell t on top of window `key` keeps
            /// every constraint that becomes final at this step.
            auto admissible(int t, std::uint64_t key, int x) const -> bool
            {
                const int i = t % _h, j = t / _h, W = _window, h = _h;

                if (i > 0 && slot(key, W - 1) == x)
                    return false;
                if (j > 0 && slot(key, W - h) == x)
                    return false;

                // (i, j-1) now has all its neighbours
                if (j > 0) {
                    unsigned mask = bit(x);
                    if (i > 0)
                        mask |= bit(slot(key, W - h - 1));
                    if (i < h - 1)
                        mask |= bit(slot(key, W - h + 1));
                    if (j > 1)
                        mask |= bit(slot(key, 0));
                    if (! meets(mask, (i > 0) + (i < h - 1) + (j > 1) + 1))
                        return false;
                }

                if (j == _w - 1) {
                    // last column: (i-1, j) is complete once its lower neighbour is placed
                    if (i > 0) {
                        unsigned mask = bit(x);
                        if (i > 1)
                            mask |= bit(slot(key, W - 2));
                        if (j > 0)
                            mask |= bit(slot(key, W - h - 1));
                        if (! meets(mask, (i > 1) + 1 + (j > 0)))
                            return false;
                    }
                    if (i == h - 1) {
                        unsigned mask = 0;
                        if (h > 1)
                            mask |= bit(slot(key, W - 1));
                        if (j > 0)
                            mask |= bit(slot(key, W - h));
                        if (! meets(mask, (h > 1) + (j > 0)))
                            return false;
                    }
                }
                return true;
            }

            /// Whether the left neighbour of (i, j) no longer affects it, given
            /// column j is complete and the grid continues to the right.
            auto settled(int i, int j, int left, int up, int down) const -> bool
            {
                if (j == 0 || j == _w - 1)
                    return false;
                unsigned around = bit(up) | bit(down);
                int degree = (i > 0) + (i < _h - 1) + 2;
                return (around & bit(left)) || __builtin_popcount(around) >= std::min(_r, degree);
            }

            /// Step after which cell u = (i, j-1) is only needed as the left
            /// neighbour of (i, j): both vertical neighbours of (i, j) are placed.
            auto release_step(int u) const -> int
            {
                int i = u % _h, j = u / _h + 1;
                return j * _h + std::min(i + 1, _h - 1);
            }

            /// Clears the slot of the cell released by placing cell t, if it
            /// is settled. key is the window after placing t.
            auto clear_settled(int t, std::uint64_t key) const -> std::uint64_t
            {
                const int i = t % _h, j = t / _h, W = _window;
                auto check = [&] (int row, int left_slot, int up_slot, int down_slot) {
                    int up = up_slot >= 0 ? slot(key, up_slot) : int(empty_slot);
                    int down = down_slot >= 0 ? slot(key, down_slot) : int(empty_slot);
                    if (settled(row, j, slot(key, left_slot), up, down))
                        key |= empty_slot << (slot_bits * left_slot);
                };
                if (i > 0)
                    check(i - 1, W - _h - 2, i > 1 ? W - 3 : -1, W - 1);
                if (i == _h - 1)
                    check(i, W - _h - 1, i > 0 ? W - 2 : -1, -1);
                return key;
            }

            /// Whether cell u had been cleared in the window that precedes
            /// placing cell t.
            auto cleared(int u, int t, const std::vector<Color> & placed) const -> bool
            {
                if (release_step(u) >= t)
                    return false;
                int i = u % _h, j = u / _h + 1;
                int up = i > 0 ? placed[std::size_t(j * _h + i - 1)] : int(empty_slot);
                int down = i < _h - 1 ? placed[std::size_t(j * _h + i + 1)] : int(empty_slot);
                return settled(i, j, placed[std::size_t(u)], up, down);
            }

            auto canonicalize(std::uint64_t key) const -> std::uint64_t
            {
                std::array<int, 8> relabel;
                relabel.fill(-1);
                int next = 0;
                std::uint64_t result = 0;
                for (int s = 0 ; s < _window ; ++s) {
                    auto c = slot(key, s);
                    std::uint64_t out = empty_slot;
                    if (std::uint64_t(c) != empty_slot) {
                        if (relabel[std::size_t(c)] < 0)
                            relabel[std::size_t(c)] = next++;
                        out = std::uint64_t(relabel[std::size_t(c)]);
                    }
                    result |= out << (slot_bits * s);
                }
                return result;
            }

            auto expand(int t, std::uint64_t key, std::uint32_t parent, std::vector<Child> & children) const -> void
            {
                int lo = 0, hi = _k - 1;
                if (Color pin = _pins[std::size_t(t)] ; pin != unassigned)
                    lo = hi = pin;
                else if (_canonical) {
                    // labels in a canonical window are 0..L-1; every absent
                    // colour is interchangeable, so try just one of them
                    int used = 0;
                    for (int s = 0 ; s < _window ; ++s)
                        if (std::uint64_t c = std::uint64_t(slot(key, s)) ; c != empty_slot)
                            used = std::max(used, int(c) + 1);
                    hi = std::min(hi, used);
                }

                for (int x = lo ; x <= hi ; ++x) {
                    if (! admissible(t, key, x))
                        continue;
                    std::uint64_t child = (key >> slot_bits) | (std::uint64_t(x) << (slot_bits * (_window - 1)));
                    child = clear_settled(t, child);
                    if (_canonical)
                        child = canonicalize(child);
                    children.push_back({ child, parent, std::uint8_t(x) });
                }
                if (children.size() > _budget)
                    throw ResourceError("frontier DP expansion exceeds the state budget of " + std::to_string(_budget));
            }

            auto reconstruct(const std::vector<std::vector<Back>> & backs) const -> Coloring
            {
                const int cells = _h * _w;
                std::vector<int> labels(static_cast<std::size_t>(cells));
                std::uint32_t idx = 0;
                for (int t = cells - 1 ; t >= 0 ; --t) {
                    auto & b = backs[std::size_t(t)][idx];
                    labels[std::size_t(t)] = b.colour;
                    idx = b.parent;
                }

                std::vector<Color> placed(static_cast<std::size_t>(cells));
                for (int t = 0 ; t < cells ; ++t) {
                    int label = labels[std::size_t(t)];
                    if (! _canonical) {
                        placed[std::size_t(t)] = label;
                        continue;
                    }
                    // the parent state is the actual window renamed by first occurrence
                    std::array<int, 8> to_actual;
                    std::array<bool, 8> in_window{};
                    int next = 0;
                    for (int u = std::max(0, t - _window) ; u < t ; ++u) {
                        if (cleared(u, t, placed))
                            continue;
                        Color c = placed[std::size_t(u)];
                        if (! in_window[std::size_t(c)]) {
                            in_window[std::size_t(c)] = true;
                            to_actual[std::size_t(next++)] = c;
                        }
                    }
                    if (label < next)
                        placed[std::size_t(t)] = to_actual[std::size_t(label)];
                    else {
                        Color fresh = 0;
                        while (in_window[std::size_t(fresh)])
                            ++fresh;
                        placed[std::size_t(t)] = fresh;
                    }
                }

                std::vector<Color> cells_row_major(static_cast<std::size_t>(cells));
                for (int t = 0 ; t < cells ; ++t)
                    cells_row_major[std::size_t(original_index(t))] = placed[std::size_t(t)];
                return Coloring{ _original, _k, std::move(cells_row_major) };
            }

            bool _transposed;
            int _h, _w, _window, _r, _k;
            bool _canonical;
            std::uint64_t _budget;
            const Deadline & _deadline;
            GridDims _original;
            std::vector<Color> _pins;
        };
    }

    auto frontier_dp_decide(const Instance & instance, const SolverConfig & config, const Deadline & deadline)
        -> DecisionOutcome
    {
        return FrontierDP{ instance, config, deadline }.run();
    }
}
