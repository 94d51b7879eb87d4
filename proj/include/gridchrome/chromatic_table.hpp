#pragma once

#include <string>
#include <vector>

namespace gridchrome
{
    /// Which statement fixes the value of an answer.
    enum class Provenance
    {
        Bipartite,      ///< r = 1: grids are bipartite
        ObsDeltaCap,    ///< r > 4: chi_r = chi_Delta since Delta <= 4
        ThmPrior,       ///< chi_3 / chi_4 values known before the mn = 2 mod 4 case
        ThmMain,        ///< chi_3 = 5 for m,n >= 3 and mn = 2 (mod 4)
        CitedChi2       ///< chi_2 = 4, cited result
    };

    /// Where the matching lower bound comes from.
    enum class LowerBoundSource
    {
        ObsMinDegree,   ///< chi_r >= min(Delta, r) + 1 is already tight
        ThmProof        ///< needs the structural argument
    };

    auto to_string(Provenance p) -> std::string;
    auto to_string(LowerBoundSource s) -> std::string;

    struct ChromaticAnswer
    {
        int value;
        Provenance provenance;
        LowerBoundSource lower_bound_source;

        auto operator== (const ChromaticAnswer &) const -> bool = default;
    };

    /// Closed-form chi_r(G_{m,n}) for m,n >= 2, r >= 1. Throws
    /// OutOfTableError for m or n below 2.
    auto grid_chromatic(int m, int n, int r) -> ChromaticAnswer;

    inline constexpr int table_dimension_cap = 1000;
    inline constexpr int table_max_r = 5;

    struct TableEntry
    {
        int m, n, r;
        ChromaticAnswer answer;
    };

    /// grid_chromatic for every 2 <= m <= max_m, 2 <= n <= max_n, 1 <= r <= 5,
    /// ordered by m, then n, then r.
    struct ChromaticTable
    {
        int max_m = 2, max_n = 2;
        std::vector<TableEntry> entries;

        auto at(int m, int n, int r) const -> const ChromaticAnswer &;
    };

    auto table_report(int max_m, int max_n, int cap = table_dimension_cap) -> ChromaticTable;

    auto table_to_csv(const ChromaticTable & table) -> std::string;
}
