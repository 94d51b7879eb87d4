#pragma once

// Local consequences of being a 3-dynamic 4-coloring, evaluated on possibly
// partial colorings. Shared by the structure analyzer (diagnostics) and the
// backtracking engine (propagation), so both trust the same code.

#include <gridchrome/grid.hpp>

namespace gridchrome::lemma
{
    enum class RuleCheck
    {
        Satisfied,
        Violated,
        Undetermined,   ///< some cell the rule reads is unassigned
        Inapplicable    ///< rule's premise is false (or the instance leaves the grid)
    };

    /// Every height x width window must use all four colours. `at(i,j)` is
    /// 1-based and only called inside the window.
    template <typename At>
    constexpr auto check_rainbow_window(const At & at, int top, int left, int height, int width) -> RuleCheck
    {
        unsigned mask = 0;
        for (int i = top ; i < top + height ; ++i)
            for (int j = left ; j < left + width ; ++j) {
                Color c = at(i, j);
                if (c == unassigned)
                    return RuleCheck::Undetermined;
                mask |= 1u << c;
            }
        return __builtin_popcount(mask) >= 4 ? RuleCheck::Satisfied : RuleCheck::Violated;
    }

    /// Zigzag rule centred at (i,j), 2 <= i < m, 2 <= j < n:
    ///   if x[i-1][j] == x[i][j-1] and x[i][j] != x[i-1][j+1]
    ///   then x[i+1][j] == x[i-1][j+1] and x[i+1][j+1] == x[i-1][j].
    /// With `exchanged`, rows and columns swap roles:
    ///   if x[i][j-1] == x[i-1][j] and x[i][j] != x[i+1][j-1]
    ///   then x[i][j+1] == x[i+1][j-1] and x[i+1][j+1] == x[i][j-1].
    template <typename At>
    constexpr auto check_zigzag_at(const At & at, GridDims dims, int i, int j, bool exchanged) -> RuleCheck
    {
        if (i < 2 || j < 2 || i >= dims.m || j >= dims.n)
            return RuleCheck::Inapplicable;

        auto get = [&] (int di, int dj) {
            return exchanged ? at(i + dj, j + di) : at(i + di, j + dj);
        };

        Color left_up = get(-1, 0), left = get(0, -1), centre = get(0, 0), diagonal = get(-1, 1);
        bool undetermined = false;

        if (left_up != unassigned && left != unassigned) {
            if (left_up != left)
                return RuleCheck::Inapplicable;
        }
        else
            undetermined = true;

        if (centre != unassigned && diagonal != unassigned) {
            if (centre == diagonal)
                return RuleCheck::Inapplicable;
        }
        else
            undetermined = true;

        if (undetermined)
            return RuleCheck::Undetermined;

        Color below = get(1, 0), below_right = get(1, 1);
        if ((below != unassigned && below != diagonal) || (below_right != unassigned && below_right != left_up))
            return RuleCheck::Violated;
        if (below == unassigned || below_right == unassigned)
            return RuleCheck::Undetermined;
        return RuleCheck::Satisfied;
    }
}
