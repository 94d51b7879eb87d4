#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gridchrome
{
    using Color = int;

    /// Cell value of a partial coloring that has not been assigned yet.
    inline constexpr Color unassigned = -1;

    /// 1-based cell of a grid: row i in [1..m], column j in [1..n].
    struct Position
    {
        int i = 1;
        int j = 1;

        auto operator<=> (const Position &) const = default;
    };

    auto to_string(Position p) -> std::string;

    /// Shape of the grid graph G_{m,n}: vertex set [m]x[n], edges between
    /// cells at Manhattan distance 1.
    struct GridDims
    {
        int m = 1;
        int n = 1;

        auto operator<=> (const GridDims &) const = default;

        auto vertex_count() const noexcept -> int { return m * n; }
        auto contains(Position p) const noexcept -> bool
        {
            return p.i >= 1 && p.i <= m && p.j >= 1 && p.j <= n;
        }
        auto index(Position p) const noexcept -> int { return (p.i - 1) * n + (p.j - 1); }
        auto position(int index) const noexcept -> Position { return { index / n + 1, index % n + 1 }; }
        auto transposed() const noexcept -> GridDims { return { n, m }; }

        /// Maximum vertex degree of G_{m,n}.
        auto max_degree() const noexcept -> int;
    };

    /// Checked constructor: throws InputError unless m,n >= 1.
    auto make_dims(int m, int n) -> GridDims;

    /// Throws UnsupportedInput unless m,n >= 2 (every closed-form claim
    /// about grids needs this).
    auto require_proper_grid(GridDims dims, std::string_view operation) -> void;

    auto degree(GridDims dims, Position p) -> int;

    /// Neighbours of p in the order up, down, left, right (those that
    /// exist). Throws InputError if p is outside the grid.
    auto neighbors(GridDims dims, Position p) -> std::vector<Position>;

    /// An m x n matrix of colors from [0..k-1] (or `unassigned` for partial
    /// colorings). Values are immutable once constructed; the transforming
    /// members return new colorings.
    class Coloring
    {
    public:
        /// All cells unassigned.
        Coloring(GridDims dims, int k);

        /// Row-major cells; throws InputError on shape or range mismatch.
        Coloring(GridDims dims, int k, std::vector<Color> cells);

        static auto from_rows(int k, const std::vector<std::vector<Color>> & rows) -> Coloring;

        auto dims() const noexcept -> GridDims { return _dims; }
        auto k() const noexcept -> int { return _k; }

        /// Throws InputError if p is outside the grid.
        auto at(Position p) const -> Color;
        auto operator() (int i, int j) const -> Color { return at({ i, j }); }

        /// Row-major cells, 0-based internally.
        auto cells() const noexcept -> std::span<const Color> { return _cells; }

        auto is_complete() const noexcept -> bool;
        auto assigned_count() const noexcept -> int;
        auto distinct_colors() const -> int;

        auto with_cell(Position p, Color c) const -> Coloring;

        /// Renames every color x to mapping[x]; mapping must be a bijection
        /// of [0..k-1].
        auto permuted(std::span<const Color> mapping) const -> Coloring;
        auto transposed() const -> Coloring;
        auto reflected_rows() const -> Coloring;
        auto reflected_cols() const -> Coloring;

        /// Same cells, different palette size.
        auto with_palette(int k) const -> Coloring;

        auto operator== (const Coloring &) const -> bool = default;

    private:
        GridDims _dims;
        int _k;
        std::vector<Color> _cells;
    };

    /// Colors on the neighbours of p, i.e. f(N(p)), sorted ascending.
    /// Unassigned neighbours contribute nothing.
    auto seen_colors(const Coloring & c, Position p) -> std::vector<Color>;

    struct ImproperEdge
    {
        Position a, b;
        Color color;

        auto operator== (const ImproperEdge &) const -> bool = default;
    };

    struct Deficiency
    {
        Position position;
        int degree;
        int required;   ///< min(r, degree)
        int seen;       ///< |f(N(v))|, always < required

        auto operator== (const Deficiency &) const -> bool = default;
    };

    struct PaletteOverflow
    {
        Position position;
        Color color;

        auto operator== (const PaletteOverflow &) const -> bool = default;
    };

    /// Every violation of the r-dynamic condition in a coloring. Empty means
    /// the coloring is a proper r-dynamic coloring.
    struct ViolationReport
    {
        int r = 1;
        std::vector<ImproperEdge> improper_edges;
        std::vector<Deficiency> deficient_vertices;
        std::vector<PaletteOverflow> palette_overflows;

        auto empty() const noexcept -> bool
        {
            return improper_edges.empty() && deficient_vertices.empty() && palette_overflows.empty();
        }
        auto violation_count() const noexcept -> std::size_t
        {
            return improper_edges.size() + deficient_vertices.size() + palette_overflows.size();
        }
    };

    /// Lists every adjacent equal-colour pair and every vertex v with
    /// |f(N(v))| < min(r, d(v)). If expected_k is given, cells with colour
    /// >= expected_k are flagged too. Requires a complete coloring and r >= 1.
    auto validate(const Coloring & c, int r, std::optional<int> expected_k = std::nullopt) -> ViolationReport;

    auto is_r_dynamic(const Coloring & c, int r) -> bool;

    /// Coloring text format: "m n k\n" then m lines of n space-separated
    /// colour indices, each line newline-terminated. "." marks an unassigned
    /// cell of a partial coloring.
    auto parse_coloring(std::string_view text) -> Coloring;
    auto format_coloring(const Coloring & c) -> std::string;
}
