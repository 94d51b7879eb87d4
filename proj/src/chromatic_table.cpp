#include <gridchrome/chromatic_table.hpp>
#include <gridchrome/errors.hpp>
#include <gridchrome/grid.hpp>

#include <algorithm>
#include <sstream>

namespace gridchrome
{
    auto to_string(Provenance p) -> std::string
    {
        switch (p) {
            case Provenance::Bipartite: return "Bipartite";
            case Provenance::ObsDeltaCap: return "Obs-DeltaCap";
            case Provenance::ThmPrior: return "Thm-Prior";
            case Provenance::ThmMain: return "Thm-Main";
            case Provenance::CitedChi2: return "Cited-Chi2";
        }
        return "?";
    }

    auto to_string(LowerBoundSource s) -> std::string
    {
        return s == LowerBoundSource::ObsMinDegree ? "Obs-MinDegree" : "Thm-Proof";
    }

    namespace
    {
        auto chi4(int lo) -> int
        {
            return lo == 2 ? 4 : 5;
        }

        auto chi3(int lo, int hi) -> int
        {
            if (lo == 2 || (lo % 2 == 0 && hi % 2 == 0))
                return 4;
            return 5;
        }
    }

    auto grid_chromatic(int m, int n, int r) -> ChromaticAnswer
    {
        if (m < 2 || n < 2)
            throw OutOfTableError("no closed form for G_{" + std::to_string(m) + "," + std::to_string(n)
                    + "}: the table covers m,n >= 2; use the exact solver (solve / chromatic_exact)");
        if (r < 1)
            throw InputError("dynamic parameter r must be at least 1, got " + std::to_string(r));

        int lo = std::min(m, n), hi = std::max(m, n);
        int value;
        Provenance provenance;
        if (r == 1) {
            value = 2;
            provenance = Provenance::Bipartite;
        }
        else if (r == 2) {
            value = 4;
            provenance = Provenance::CitedChi2;
        }
        else if (r == 3) {
            value = chi3(lo, hi);
            provenance = (lo >= 3 && (m * n) % 4 == 2) ? Provenance::ThmMain : Provenance::ThmPrior;
        }
        else {
            value = chi4(lo);
            provenance = r == 4 ? Provenance::ThmPrior : Provenance::ObsDeltaCap;
        }

        int bound = std::min(GridDims{ m, n }.max_degree(), r) + 1;
        return { value, provenance, value == bound ? LowerBoundSource::ObsMinDegree : LowerBoundSource::ThmProof };
    }

    auto ChromaticTable::at(int m, int n, int r) const -> const ChromaticAnswer &
    {
        if (m < 2 || m > max_m || n < 2 || n > max_n || r < 1 || r > table_max_r)
            throw InputError("table entry (" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r)
                    + ") outside the table");
        auto index = (std::size_t(m - 2) * std::size_t(max_n - 1) + std::size_t(n - 2)) * table_max_r + std::size_t(r - 1);
        return entries[index].answer;
    }

    auto table_report(int max_m, int max_n, int cap) -> ChromaticTable
    {
        if (max_m < 2 || max_n < 2)
            throw InputError("table dimensions must be at least 2");
        if (max_m > cap || max_n > cap)
            throw InputError("table dimensions exceed the cap of " + std::to_string(cap));

        ChromaticTable table{ max_m, max_n, {} };
        table.entries.reserve(std::size_t(max_m - 1) * std::size_t(max_n - 1) * table_max_r);
        for (int m = 2 ; m <= max_m ; ++m)
            for (int n = 2 ; n <= max_n ; ++n)
                for (int r = 1 ; r <= table_max_r ; ++r)
                    table.entries.push_back({ m, n, r, grid_chromatic(m, n, r) });
        return table;
    }

    auto table_to_csv(const ChromaticTable & table) -> std::string
    {
        std::ostringstream out;
        out << "m,n,r,value,provenance,lower_bound_source\n";
        for (auto & e : table.entries)
            out << e.m << ',' << e.n << ',' << e.r << ',' << e.answer.value << ',' << to_string(e.answer.provenance)
                << ',' << to_string(e.answer.lower_bound_source) << '\n';
        return out.str();
    }
}
