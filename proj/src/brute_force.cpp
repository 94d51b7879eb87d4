#include <gridchrome/solver.hpp>

#include <vector>

// Reference decision procedure: no pruning, no symmetry, nothing shared with
// the search engines beyond the grid dimensions.

namespace gridchrome
{
    namespace
    {
        auto satisfies_definition(const std::vector<int> & x, int m, int n, int r) -> bool
        {
            for (int i = 0 ; i < m ; ++i)
                for (int j = 0 ; j < n ; ++j) {
                    int own = x[std::size_t(i * n + j)];
                    unsigned seen = 0;
                    int d = 0;
                    const int di[] = { -1, 1, 0, 0 }, dj[] = { 0, 0, -1, 1 };
                    for (int e = 0 ; e < 4 ; ++e) {
                        int a = i + di[e], b = j + dj[e];
                        if (a < 0 || a >= m || b < 0 || b >= n)
                            continue;
                        ++d;
                        int other = x[std::size_t(a * n + b)];
                        if (other == own)
                            return false;
                        seen |= 1u << other;
                    }
                    if (__builtin_popcount(seen) < (r < d ? r : d))
                        return false;
                }
            return true;
        }
    }

    auto brute_force_oracle(GridDims dims, int r, int k) -> Status
    {
        dims = make_dims(dims.m, dims.n);
        if (dims.vertex_count() > brute_force_cell_cap)
            throw InputError("brute force oracle is capped at " + std::to_string(brute_force_cell_cap)
                    + " cells, got " + std::to_string(dims.vertex_count()));
        if (r < 1 || k < 1 || k > 16)
            throw InputError("brute force oracle needs r >= 1 and 1 <= k <= 16");

        std::vector<int> x(std::size_t(dims.vertex_count()), 0);
        for (;;) {
            if (satisfies_definition(x, dims.m, dims.n, r))
                return Status::Sat;
            // odometer over [0..k-1]^{mn}
            std::size_t v = 0;
            while (v < x.size() && ++x[v] == k)
                x[v++] = 0;
            if (v == x.size())
                return Status::Unsat;
        }
    }
}
