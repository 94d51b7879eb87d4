#include <gridchrome/analyzer.hpp>
#include <gridchrome/constructions.hpp>
#include <gridchrome/errors.hpp>
#include <gridchrome/lemma_rules.hpp>

#include <algorithm>
#include <array>

namespace gridchrome
{
    auto to_string(LemmaId id) -> std::string
    {
        switch (id) {
            case LemmaId::BorderPeriodicity: return "ring";
            case LemmaId::CornerEqualities: return "corner";
            case LemmaId::Rainbow2x3: return "2x3";
            case LemmaId::Zigzag: return "zigzag";
            case LemmaId::Coherence: return "coherence";
            case LemmaId::Classification: return "classify";
            case LemmaId::PartialSignature: return "partial";
        }
        return "?";
    }

    auto parse_lemma_id(std::string_view name) -> LemmaId
    {
        for (auto id : { LemmaId::BorderPeriodicity, LemmaId::CornerEqualities, LemmaId::Rainbow2x3, LemmaId::Zigzag,
                 LemmaId::Coherence, LemmaId::Classification, LemmaId::PartialSignature })
            if (to_string(id) == name)
                return id;
        throw InputError("unknown lemma '" + std::string(name) + "'");
    }

    auto to_string(Verdict v) -> std::string
    {
        switch (v) {
            case Verdict::Holds: return "Holds";
            case Verdict::Violated: return "Violated";
            case Verdict::NotApplicable: return "NotApplicable";
        }
        return "?";
    }

    auto to_string(PositionLabel label) -> std::string
    {
        switch (label) {
            case PositionLabel::Correct: return "Correct";
            case PositionLabel::FlippedRowPair: return "FlippedRowPair";
            case PositionLabel::FlippedColPair: return "FlippedColPair";
            case PositionLabel::Other: return "Other";
            case PositionLabel::Unassigned: return "Unassigned";
        }
        return "?";
    }

    auto plausibly_3_dynamic(const Coloring & c) -> bool
    {
        auto dims = c.dims();
        for (int i = 1 ; i <= dims.m ; ++i)
            for (int j = 1 ; j <= dims.n ; ++j) {
                Position p{ i, j };
                auto around = neighbors(dims, p);
                int free = 0;
                for (auto q : around) {
                    if (c.at(q) == unassigned)
                        ++free;
                    else if (c.at(q) == c.at(p))
                        return false;
                }
                int seen = int(seen_colors(c, p).size());
                int need = std::min(3, int(around.size()));
                if (seen + std::min(free, c.k() - 1 - seen) < need)
                    return false;
            }
        return true;
    }

    namespace
    {
        auto not_applicable(LemmaId id, std::string why) -> LemmaFinding
        {
            return LemmaFinding{ id, Verdict::NotApplicable, {}, false, std::move(why) };
        }

        /// Shared gate for the lemmas about 3-dynamic 4-colorings.
        auto gate(LemmaId id, const Coloring & c, int min_side) -> std::optional<LemmaFinding>
        {
            if (c.k() != 4)
                return not_applicable(id, "needs a 4-colouring, palette has " + std::to_string(c.k()));
            if (c.dims().m < min_side || c.dims().n < min_side)
                return not_applicable(id, "needs m,n >= " + std::to_string(min_side));
            if (! plausibly_3_dynamic(c))
                return not_applicable(id, "not a proper 3-dynamic colouring");
            return std::nullopt;
        }

        auto conclude(LemmaFinding finding) -> LemmaFinding
        {
            finding.verdict = finding.witnesses.empty() ? Verdict::Holds : Verdict::Violated;
            return finding;
        }

        /// Colouring read through one of the four reflections of the grid.
        struct Oriented
        {
            const Coloring & c;
            bool flip_rows, flip_cols;

            auto position(int i, int j) const -> Position
            {
                return { flip_rows ? c.dims().m + 1 - i : i, flip_cols ? c.dims().n + 1 - j : j };
            }
            auto operator() (int i, int j) const -> Color { return c.at(position(i, j)); }
        };
    }

    auto check_border_periodicity(const Coloring & c) -> LemmaFinding
    {
        if (auto skip = gate(LemmaId::BorderPeriodicity, c, 3))
            return *skip;

        LemmaFinding finding{ LemmaId::BorderPeriodicity };
        auto dims = c.dims();
        for (bool flip_rows : { false, true })
            for (bool flip_cols : { false, true }) {
                Oriented x{ c, flip_rows, flip_cols };
                std::array<Color, 4> corner{ x(1, 1), x(1, 2), x(2, 1), x(2, 2) };
                if (std::find(corner.begin(), corner.end(), unassigned) != corner.end())
                    continue;
                auto a = corner[0], b = corner[1], cc = corner[2], d = corner[3];
                std::array<Color, 4> sorted = corner;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                    finding.witnesses.push_back({ x.position(1, 1), x.position(1, 2), x.position(2, 1), x.position(2, 2) });
                    continue;
                }

                // row 1: (a,b,c,d), row 2: (c,d,a,b), column 1: (a,c,b,d), column 2: (b,d,a,c)
                const std::array<Color, 4> row1{ a, b, cc, d }, row2{ cc, d, a, b }, col1{ a, cc, b, d }, col2{ b, d, a, cc };
                auto expect = [&] (int i, int j, Color want) {
                    Color got = x(i, j);
                    if (got != unassigned && got != want)
                        finding.witnesses.push_back({ x.position(i, j) });
                };
                for (int j = 1 ; j <= dims.n ; ++j) {
                    expect(1, j, row1[std::size_t((j - 1) % 4)]);
                    expect(2, j, row2[std::size_t((j - 1) % 4)]);
                }
                for (int i = 3 ; i <= dims.m ; ++i) {
                    expect(i, 1, col1[std::size_t((i - 1) % 4)]);
                    expect(i, 2, col2[std::size_t((i - 1) % 4)]);
                }
            }

        std::sort(finding.witnesses.begin(), finding.witnesses.end());
        finding.witnesses.erase(std::unique(finding.witnesses.begin(), finding.witnesses.end()), finding.witnesses.end());
        return conclude(std::move(finding));
    }

    auto check_corner_equalities(const Coloring & c) -> LemmaFinding
    {
        if (auto skip = gate(LemmaId::CornerEqualities, c, 3))
            return *skip;

        LemmaFinding finding{ LemmaId::CornerEqualities };
        for (bool flip_rows : { false, true })
            for (bool flip_cols : { false, true }) {
                Oriented x{ c, flip_rows, flip_cols };
                Color below = x(3, 2), right = x(2, 3);
                if (below != unassigned && right != unassigned && below != right)
                    finding.witnesses.push_back({ x.position(3, 2), x.position(2, 3) });
            }
        return conclude(std::move(finding));
    }

    auto check_2x3_rainbow(const Coloring & c) -> LemmaFinding
    {
        if (auto skip = gate(LemmaId::Rainbow2x3, c, 1))
            return *skip;

        LemmaFinding finding{ LemmaId::Rainbow2x3 };
        auto dims = c.dims();
        auto at = [&] (int i, int j) { return c.at({ i, j }); };
        int windows = 0;
        for (auto [height, width] : { std::pair{ 2, 3 }, std::pair{ 3, 2 } })
            for (int top = 1 ; top + height - 1 <= dims.m ; ++top)
                for (int left = 1 ; left + width - 1 <= dims.n ; ++left) {
                    auto check = lemma::check_rainbow_window(at, top, left, height, width);
                    if (check == lemma::RuleCheck::Undetermined)
                        continue;
                    ++windows;
                    if (check == lemma::RuleCheck::Violated) {
                        std::vector<Position> window;
                        for (int i = top ; i < top + height ; ++i)
                            for (int j = left ; j < left + width ; ++j)
                                window.push_back({ i, j });
                        finding.witnesses.push_back(std::move(window));
                    }
                }
        finding.vacuous = windows == 0;
        finding.note = std::to_string(windows) + " windows checked";
        return conclude(std::move(finding));
    }

    auto check_zigzag(const Coloring & c) -> LemmaFinding
    {
        if (auto skip = gate(LemmaId::Zigzag, c, 1))
            return *skip;

        LemmaFinding finding{ LemmaId::Zigzag };
        auto dims = c.dims();
        auto at = [&] (int i, int j) { return c.at({ i, j }); };
        int premises = 0;
        for (int i = 2 ; i < dims.m ; ++i)
            for (int j = 2 ; j < dims.n ; ++j)
                for (bool exchanged : { false, true }) {
                    auto check = lemma::check_zigzag_at(at, dims, i, j, exchanged);
                    if (check == lemma::RuleCheck::Satisfied || check == lemma::RuleCheck::Violated)
                        ++premises;
                    if (check != lemma::RuleCheck::Violated)
                        continue;
                    auto pos = [&] (int di, int dj) {
                        return exchanged ? Position{ i + dj, j + di } : Position{ i + di, j + dj };
                    };
                    finding.witnesses.push_back({ pos(-1, 0), pos(0, -1), pos(0, 0), pos(-1, 1), pos(1, 0), pos(1, 1) });
                }
        finding.vacuous = premises == 0;
        finding.note = std::to_string(premises) + " premise instances";
        return conclude(std::move(finding));
    }

    auto check_coherence(const Coloring & c) -> CoherenceResult
    {
        CoherenceResult result{ { LemmaId::Coherence }, std::nullopt };
        if (c.k() != 4) {
            result.finding = not_applicable(LemmaId::Coherence, "needs a 4-colouring, palette has " + std::to_string(c.k()));
            return result;
        }
        if (c.dims().m < 4 || c.dims().n < 4) {
            result.finding = not_applicable(LemmaId::Coherence, "needs m,n >= 4");
            return result;
        }
        for (int i = 1 ; i <= 4 ; ++i)
            for (int j = 1 ; j <= 4 ; ++j)
                if (c.at({ i, j }) == unassigned) {
                    result.finding = not_applicable(LemmaId::Coherence, "upper-left 4x4 block is not fully assigned");
                    return result;
                }

        // the upper-left 2x2 of the canonical block is a,b / c,d
        std::vector<Color> mapping(4, unassigned);
        const std::array<Position, 4> anchors{ Position{ 1, 1 }, Position{ 1, 2 }, Position{ 2, 1 }, Position{ 2, 2 } };
        for (auto p : anchors) {
            auto & slot = mapping[std::size_t(c.at(p))];
            if (slot != unassigned) {
                result.finding.witnesses.push_back({ anchors.begin(), anchors.end() });
                return { conclude(std::move(result.finding)), std::nullopt };
            }
            slot = tiling_color(p.i, p.j);
        }
        for (int i = 1 ; i <= 4 ; ++i)
            for (int j = 1 ; j <= 4 ; ++j)
                if (mapping[std::size_t(c.at({ i, j }))] != tiling_color(i, j))
                    result.finding.witnesses.push_back({ Position{ i, j } });

        result.finding = conclude(std::move(result.finding));
        if (result.finding.verdict == Verdict::Holds)
            result.reference_permutation = std::move(mapping);
        return result;
    }

    auto PositionClassification::count(PositionLabel label) const -> int
    {
        return int(std::count(labels.begin(), labels.end(), label));
    }

    namespace
    {
        /// Colour the 4-periodic extension of the coherent corner puts at (i,j),
        /// in the coloring's own colour names.
        auto periodic(const Coloring & c, int i, int j) -> Color
        {
            return c.at({ (i - 1) % 4 + 1, (j - 1) % 4 + 1 });
        }

        auto correct(const Coloring & c, int i, int j) -> bool
        {
            Color x = c.at({ i, j });
            return x != unassigned && x == periodic(c, i, j);
        }

        /// (i,j) and its successor (down when vertical) hold each other's
        /// periodic colours.
        auto flipped(const Coloring & c, int i, int j, bool vertical) -> bool
        {
            int i2 = vertical ? i + 1 : i, j2 = vertical ? j : j + 1;
            if (! c.dims().contains({ i2, j2 }))
                return false;
            Color x = c.at({ i, j }), y = c.at({ i2, j2 });
            return x != unassigned && y != unassigned && x == periodic(c, i2, j2) && y == periodic(c, i, j);
        }
    }

    auto classify_positions(const Coloring & c) -> PositionClassification
    {
        auto coherence = check_coherence(c);
        if (! coherence.reference_permutation)
            throw InputError("classify_positions needs a coherent 4-colouring (" + to_string(coherence.finding.verdict)
                    + (coherence.finding.note.empty() ? "" : ": " + coherence.finding.note) + ")");

        auto dims = c.dims();
        PositionClassification result{ dims, *coherence.reference_permutation,
            std::vector<PositionLabel>(std::size_t(dims.vertex_count()), PositionLabel::Other) };
        auto label = [&] (int i, int j) -> PositionLabel & { return result.labels[std::size_t(dims.index({ i, j }))]; };

        for (int i = 1 ; i <= dims.m ; ++i)
            for (int j = 1 ; j <= dims.n ; ++j) {
                if (c.at({ i, j }) == unassigned)
                    label(i, j) = PositionLabel::Unassigned;
                else if (correct(c, i, j))
                    label(i, j) = PositionLabel::Correct;
            }

        for (int i = 1 ; i <= dims.m ; ++i)
            for (int j = 1 ; j <= dims.n ; ++j) {
                if (label(i, j) != PositionLabel::Other)
                    continue;
                if (i > 4 && i < dims.m && label(i + 1, j) == PositionLabel::Other && flipped(c, i, j, true))
                    label(i, j) = label(i + 1, j) = PositionLabel::FlippedRowPair;
                else if (j > 4 && j < dims.n && label(i, j + 1) == PositionLabel::Other && flipped(c, i, j, false))
                    label(i, j) = label(i, j + 1) = PositionLabel::FlippedColPair;
            }
        return result;
    }

    auto detect_partial_signature(const Coloring & c) -> std::optional<PartialSignature>
    {
        if (! check_coherence(c).reference_permutation)
            return std::nullopt;
        auto dims = c.dims();

        auto first_incorrect = [&] (bool down_column) {
            int limit = down_column ? dims.m : dims.n;
            for (int t = 1 ; t <= limit ; ++t)
                if (! (down_column ? correct(c, t, 3) : correct(c, 3, t)))
                    return t;
            return limit + 1;
        };

        int col = first_incorrect(false);
        int row = first_incorrect(true);
        if (col < 5 || col % 2 == 0 || row < 5 || row % 2 == 0)
            return std::nullopt;
        if (! flipped(c, 3, col, false) || ! flipped(c, row, 3, true))
            return std::nullopt;

        PartialSignature sig{ (row - 1) / 2, (col - 1) / 2 };
        auto all_correct = [&] (int i_lo, int i_hi, int j_lo, int j_hi) {
            for (int i = i_lo ; i <= i_hi ; ++i)
                for (int j = j_lo ; j <= j_hi ; ++j)
                    if (! dims.contains({ i, j }) || ! correct(c, i, j))
                        return false;
            return true;
        };
        if (! all_correct(1, 3, 1, 2 * sig.s) || ! all_correct(4, 4, 1, 2 * sig.s + 2)
                || ! all_correct(1, 2 * sig.r, 1, 3) || ! all_correct(1, 2 * sig.r + 2, 4, 4))
            return std::nullopt;
        return sig;
    }

    auto make_partial_fixture(int r, int s, GridDims dims) -> Coloring
    {
        if (r < 2 || s < 2)
            throw InputError("partial fixtures need r,s >= 2");
        if (dims.m < 2 * r + 2 || dims.n < 2 * s + 2)
            throw InputError("an (" + std::to_string(r) + "," + std::to_string(s) + ")-partial fixture needs at least "
                    + std::to_string(2 * r + 2) + "x" + std::to_string(2 * s + 2) + " cells");

        std::vector<Color> cells(std::size_t(dims.vertex_count()), unassigned);
        auto put = [&] (int i, int j, Color x) { cells[std::size_t(dims.index({ i, j }))] = x; };
        auto fill_correct = [&] (int i_hi, int j_hi, int i_lo = 1, int j_lo = 1) {
            for (int i = i_lo ; i <= i_hi ; ++i)
                for (int j = j_lo ; j <= j_hi ; ++j)
                    put(i, j, tiling_color(i, j));
        };

        fill_correct(3, 2 * s);
        fill_correct(4, 2 * s + 2, 4);
        fill_correct(2 * r, 3);
        fill_correct(2 * r + 2, 4, 1, 4);

        put(3, 2 * s + 1, tiling_color(3, 2 * s + 2));
        put(3, 2 * s + 2, tiling_color(3, 2 * s + 1));
        put(2 * r + 1, 3, tiling_color(2 * r + 2, 3));
        put(2 * r + 2, 3, tiling_color(2 * r + 1, 3));
        return Coloring{ dims, 4, std::move(cells) };
    }

    auto analyze(const Coloring & c, LemmaId id) -> LemmaFinding
    {
        switch (id) {
            case LemmaId::BorderPeriodicity: return check_border_periodicity(c);
            case LemmaId::CornerEqualities: return check_corner_equalities(c);
            case LemmaId::Rainbow2x3: return check_2x3_rainbow(c);
            case LemmaId::Zigzag: return check_zigzag(c);
            case LemmaId::Coherence: return check_coherence(c).finding;
            case LemmaId::Classification: {
                auto coherence = check_coherence(c);
                if (! coherence.reference_permutation)
                    return not_applicable(id, "not coherent");
                auto classes = classify_positions(c);
                LemmaFinding finding{ id, Verdict::Holds };
                finding.note = std::to_string(classes.count(PositionLabel::Correct)) + " correct, "
                    + std::to_string(classes.count(PositionLabel::FlippedRowPair) / 2) + " flipped row pairs, "
                    + std::to_string(classes.count(PositionLabel::FlippedColPair) / 2) + " flipped column pairs, "
                    + std::to_string(classes.count(PositionLabel::Other)) + " other";
                return finding;
            }
            case LemmaId::PartialSignature: {
                auto sig = detect_partial_signature(c);
                if (! sig)
                    return not_applicable(id, "no (r,s)-partial signature");
                LemmaFinding finding{ id, Verdict::Holds };
                finding.note = "(" + std::to_string(sig->r) + "," + std::to_string(sig->s) + ")-partial";
                return finding;
            }
        }
        throw InputError("unknown lemma id");
    }

    auto analyze_all(const Coloring & c) -> std::vector<LemmaFinding>
    {
        std::vector<LemmaFinding> result;
        for (auto id : { LemmaId::BorderPeriodicity, LemmaId::CornerEqualities, LemmaId::Rainbow2x3, LemmaId::Zigzag,
                 LemmaId::Coherence, LemmaId::Classification, LemmaId::PartialSignature })
            result.push_back(analyze(c, id));
        return result;
    }
}
