#include <gridchrome/grid.hpp>
#include <gridchrome/errors.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gridchrome
{
    ParseError::ParseError(const std::string & message, std::size_t line, std::size_t column) :
        InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        _line(line),
        _column(column)
    {
    }

    auto to_string(Position p) -> std::string
    {
        return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
    }

    auto GridDims::max_degree() const noexcept -> int
    {
        auto axis = [] (int len) { return len >= 3 ? 2 : len - 1; };
        return axis(m) + axis(n);
    }

    auto make_dims(int m, int n) -> GridDims
    {
        if (m < 1 || n < 1)
            throw InputError("grid dimensions must be positive, got " + std::to_string(m) + "x" + std::to_string(n));
        return { m, n };
    }

    auto require_proper_grid(GridDims dims, std::string_view operation) -> void
    {
        if (dims.m < 2 || dims.n < 2)
            throw UnsupportedInput(std::string(operation) + " requires m,n >= 2, got "
                    + std::to_string(dims.m) + "x" + std::to_string(dims.n));
    }

    namespace
    {
        auto check_position(GridDims dims, Position p) -> void
        {
            if (! dims.contains(p))
                throw InputError("position " + to_string(p) + " outside " + std::to_string(dims.m) + "x"
                        + std::to_string(dims.n) + " grid");
        }
    }

    auto degree(GridDims dims, Position p) -> int
    {
        check_position(dims, p);
        return (p.i > 1) + (p.i < dims.m) + (p.j > 1) + (p.j < dims.n);
    }

    auto neighbors(GridDims dims, Position p) -> std::vector<Position>
    {
        check_position(dims, p);
        std::vector<Position> result;
        result.reserve(4);
        if (p.i > 1)
            result.push_back({ p.i - 1, p.j });
        if (p.i < dims.m)
            result.push_back({ p.i + 1, p.j });
        if (p.j > 1)
            result.push_back({ p.i, p.j - 1 });
        if (p.j < dims.n)
            result.push_back({ p.i, p.j + 1 });
        return result;
    }

    Coloring::Coloring(GridDims dims, int k) :
        Coloring(dims, k, std::vector<Color>(std::size_t(make_dims(dims.m, dims.n).vertex_count()), unassigned))
    {
    }

    Coloring::Coloring(GridDims dims, int k, std::vector<Color> cells) :
        _dims(make_dims(dims.m, dims.n)),
        _k(k),
        _cells(std::move(cells))
    {
        if (k < 1)
            throw InputError("palette size must be positive, got " + std::to_string(k));
        if (_cells.size() != std::size_t(_dims.vertex_count()))
            throw InputError("coloring has " + std::to_string(_cells.size()) + " cells, expected "
                    + std::to_string(_dims.vertex_count()));
        for (std::size_t v = 0 ; v < _cells.size() ; ++v)
            if (_cells[v] != unassigned && (_cells[v] < 0 || _cells[v] >= k))
                throw InputError("colour " + std::to_string(_cells[v]) + " at " + to_string(_dims.position(int(v)))
                        + " outside palette [0.." + std::to_string(k - 1) + "]");
    }

    auto Coloring::from_rows(int k, const std::vector<std::vector<Color>> & rows) -> Coloring
    {
        if (rows.empty() || rows.front().empty())
            throw InputError("coloring needs at least one row and one column");
        GridDims dims{ int(rows.size()), int(rows.front().size()) };
        std::vector<Color> cells;
        cells.reserve(std::size_t(dims.vertex_count()));
        for (auto & row : rows) {
            if (row.size() != rows.front().size())
                throw InputError("ragged coloring rows");
            cells.insert(cells.end(), row.begin(), row.end());
        }
        return Coloring{ dims, k, std::move(cells) };
    }

    auto Coloring::at(Position p) const -> Color
    {
        check_position(_dims, p);
        return _cells[std::size_t(_dims.index(p))];
    }

    auto Coloring::is_complete() const noexcept -> bool
    {
        return std::find(_cells.begin(), _cells.end(), unassigned) == _cells.end();
    }

    auto Coloring::assigned_count() const noexcept -> int
    {
        return int(_cells.size()) - int(std::count(_cells.begin(), _cells.end(), unassigned));
    }

    auto Coloring::distinct_colors() const -> int
    {
        std::vector<bool> used(std::size_t(_k), false);
        for (auto c : _cells)
            if (c != unassigned)
                used[std::size_t(c)] = true;
        return int(std::count(used.begin(), used.end(), true));
    }

    auto Coloring::with_cell(Position p, Color c) const -> Coloring
    {
        check_position(_dims, p);
        auto cells = _cells;
        cells[std::size_t(_dims.index(p))] = c;
        return Coloring{ _dims, _k, std::move(cells) };
    }

    auto Coloring::permuted(std::span<const Color> mapping) const -> Coloring
    {
        if (mapping.size() != std::size_t(_k))
            throw InputError("colour permutation must have exactly k entries");
        std::vector<bool> hit(std::size_t(_k), false);
        for (auto c : mapping) {
            if (c < 0 || c >= _k || hit[std::size_t(c)])
                throw InputError("colour mapping is not a bijection of the palette");
            hit[std::size_t(c)] = true;
        }
        auto cells = _cells;
        for (auto & c : cells)
            if (c != unassigned)
                c = mapping[std::size_t(c)];
        return Coloring{ _dims, _k, std::move(cells) };
    }

    auto Coloring::transposed() const -> Coloring
    {
        auto dims = _dims.transposed();
        std::vector<Color> cells(_cells.size());
        for (int i = 1 ; i <= _dims.m ; ++i)
            for (int j = 1 ; j <= _dims.n ; ++j)
                cells[std::size_t(dims.index({ j, i }))] = _cells[std::size_t(_dims.index({ i, j }))];
        return Coloring{ dims, _k, std::move(cells) };
    }

    auto Coloring::reflected_rows() const -> Coloring
    {
        std::vector<Color> cells(_cells.size());
        for (int i = 1 ; i <= _dims.m ; ++i)
            for (int j = 1 ; j <= _dims.n ; ++j)
                cells[std::size_t(_dims.index({ _dims.m + 1 - i, j }))] = _cells[std::size_t(_dims.index({ i, j }))];
        return Coloring{ _dims, _k, std::move(cells) };
    }

    auto Coloring::reflected_cols() const -> Coloring
    {
        std::vector<Color> cells(_cells.size());
        for (int i = 1 ; i <= _dims.m ; ++i)
            for (int j = 1 ; j <= _dims.n ; ++j)
                cells[std::size_t(_dims.index({ i, _dims.n + 1 - j }))] = _cells[std::size_t(_dims.index({ i, j }))];
        return Coloring{ _dims, _k, std::move(cells) };
    }

    auto Coloring::with_palette(int k) const -> Coloring
    {
        return Coloring{ _dims, k, _cells };
    }

    auto seen_colors(const Coloring & c, Position p) -> std::vector<Color>
    {
        std::vector<Color> result;
        for (auto q : neighbors(c.dims(), p)) {
            auto colour = c.at(q);
            if (colour != unassigned)
                result.push_back(colour);
        }
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    auto validate(const Coloring & c, int r, std::optional<int> expected_k) -> ViolationReport
    {
        if (r < 1)
            throw InputError("dynamic parameter r must be at least 1, got " + std::to_string(r));
        if (! c.is_complete())
            throw InputError("validate needs a complete coloring; this one has unassigned cells");

        ViolationReport report;
        report.r = r;
        auto dims = c.dims();
        for (int i = 1 ; i <= dims.m ; ++i)
            for (int j = 1 ; j <= dims.n ; ++j) {
                Position p{ i, j };
                // each edge once: look right and down
                for (auto q : { Position{ i, j + 1 }, Position{ i + 1, j } })
                    if (dims.contains(q) && c.at(p) == c.at(q))
                        report.improper_edges.push_back({ p, q, c.at(p) });

                int d = degree(dims, p);
                int required = std::min(r, d);
                int seen = int(seen_colors(c, p).size());
                if (seen < required)
                    report.deficient_vertices.push_back({ p, d, required, seen });

                if (expected_k && c.at(p) >= *expected_k)
                    report.palette_overflows.push_back({ p, c.at(p) });
            }
        return report;
    }

    auto is_r_dynamic(const Coloring & c, int r) -> bool
    {
        return validate(c, r).empty();
    }

    namespace
    {
        struct Scanner
        {
            std::string_view text;
            std::size_t pos = 0, line = 1, line_start = 0;

            auto column() const -> std::size_t { return pos - line_start + 1; }

            [[noreturn]] auto fail(const std::string & message) const -> void
            {
                throw ParseError(message, line, column());
            }

            auto describe_here() const -> std::string
            {
                if (pos >= text.size())
                    return "end of input";
                if (text[pos] == '\n')
                    return "end of line";
                return std::string("'") + text[pos] + "'";
            }

            /// One token of digits (or "." if allowed); returns -1 for ".".
            auto number(bool allow_unassigned) -> long
            {
                if (allow_unassigned && pos < text.size() && text[pos] == '.') {
                    ++pos;
                    return -1;
                }
                auto begin = pos;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
                    ++pos;
                if (begin == pos)
                    fail("expected a decimal integer, found " + describe_here());
                long value = 0;
                auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + pos, value);
                if (ec != std::errc{}) {
                    pos = begin;
                    fail("integer out of range");
                }
                return value;
            }

            auto expect(char ch, const char * what) -> void
            {
                if (pos >= text.size() || text[pos] != ch)
                    fail(std::string("expected ") + what + ", found " + describe_here());
                ++pos;
                if (ch == '\n') {
                    ++line;
                    line_start = pos;
                }
            }
        };
    }

    auto parse_coloring(std::string_view text) -> Coloring
    {
        Scanner s{ text };
        auto header_value = [&] (const char * name) {
            auto col = s.column();
            auto v = s.number(false);
            if (v < 1 || v > 1'000'000)
                throw ParseError(std::string(name) + " must be a positive integer", s.line, col);
            return int(v);
        };
        int m = header_value("m");
        s.expect(' ', "a single space");
        int n = header_value("n");
        s.expect(' ', "a single space");
        int k = header_value("k");
        s.expect('\n', "end of line");

        if (std::size_t(m) * std::size_t(n) > 100'000'000)
            throw ParseError("grid too large", 1, 1);

        std::vector<Color> cells;
        cells.reserve(std::size_t(m) * std::size_t(n));
        for (int i = 0 ; i < m ; ++i) {
            for (int j = 0 ; j < n ; ++j) {
                if (j > 0)
                    s.expect(' ', "a single space");
                auto col = s.column();
                auto v = s.number(true);
                if (v >= k)
                    throw ParseError("colour " + std::to_string(v) + " outside palette [0.." + std::to_string(k - 1) + "]",
                            s.line, col);
                cells.push_back(Color(v));
            }
            s.expect('\n', "end of line");
        }
        if (s.pos != text.size())
            s.fail("unexpected trailing content");
        return Coloring{ { m, n }, k, std::move(cells) };
    }

    auto format_coloring(const Coloring & c) -> std::string
    {
        std::ostringstream out;
        auto dims = c.dims();
        out << dims.m << ' ' << dims.n << ' ' << c.k() << '\n';
        for (int i = 1 ; i <= dims.m ; ++i) {
            for (int j = 1 ; j <= dims.n ; ++j) {
                if (j > 1)
                    out << ' ';
                auto colour = c.at({ i, j });
                if (colour == unassigned)
                    out << '.';
                else
                    out << colour;
            }
            out << '\n';
        }
        return out.str();
    }
}
