#pragma once

#include <gridchrome/grid.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridchrome
{
    /// Structural facts about 3-dynamic 4-colorings of grids, checked on a
    /// concrete (possibly partial) coloring. Colours 0,1,2,3 play the roles
    /// of a,b,c,d. Predicates only quantify over windows whose cells are all
    /// assigned.
    enum class LemmaId
    {
        BorderPeriodicity,  ///< "ring": first/last two rows and columns cycle
        CornerEqualities,   ///< "corner": x32 = x23 and its mirror images
        Rainbow2x3,         ///< "2x3": every 2x3 and 3x2 window has 4 colours
        Zigzag,             ///< "zigzag": the local copy rule
        Coherence,          ///< "coherence": upper-left 4x4 is the canonical block
        Classification,     ///< "classify": correct / flipped labelling
        PartialSignature    ///< "partial": (r,s)-partial pattern
    };

    auto to_string(LemmaId id) -> std::string;
    auto parse_lemma_id(std::string_view name) -> LemmaId;

    enum class Verdict
    {
        Holds,
        Violated,
        NotApplicable
    };

    auto to_string(Verdict v) -> std::string;

    struct LemmaFinding
    {
        LemmaId lemma;
        Verdict verdict = Verdict::NotApplicable;
        /// Each entry is one concrete position set: a failing window, a
        /// mismatched pair, and so on. Never empty when Violated.
        std::vector<std::vector<Position>> witnesses = {};
        /// Holds only because no instance of the rule's premise occurs.
        bool vacuous = false;
        std::string note = {};
    };

    /// True for a complete proper 3-dynamic coloring; for partial colorings,
    /// true when no violation is visible yet (assigned neighbours differ and
    /// every vertex can still see min(3, d) colours).
    auto plausibly_3_dynamic(const Coloring & c) -> bool;

    auto check_border_periodicity(const Coloring & c) -> LemmaFinding;
    auto check_corner_equalities(const Coloring & c) -> LemmaFinding;
    auto check_2x3_rainbow(const Coloring & c) -> LemmaFinding;
    auto check_zigzag(const Coloring & c) -> LemmaFinding;

    struct CoherenceResult
    {
        LemmaFinding finding;
        /// mapping[x] is the canonical colour (0..3 for a..d) of colour x.
        std::optional<std::vector<Color>> reference_permutation;
    };

    auto check_coherence(const Coloring & c) -> CoherenceResult;

    enum class PositionLabel
    {
        Correct,
        FlippedRowPair,     ///< (i,j),(i+1,j) flipped, i > 4
        FlippedColPair,     ///< (i,j),(i,j+1) flipped, j > 4
        Other,
        Unassigned
    };

    auto to_string(PositionLabel label) -> std::string;

    struct PositionClassification
    {
        GridDims dims;
        std::vector<Color> reference_permutation;
        std::vector<PositionLabel> labels;    ///< row-major

        auto at(Position p) const -> PositionLabel { return labels[std::size_t(dims.index(p))]; }
        auto count(PositionLabel label) const -> int;
    };

    /// Labels every position relative to the 4-periodic extension of the
    /// upper-left block. Throws InputError when the coloring is not coherent.
    auto classify_positions(const Coloring & c) -> PositionClassification;

    struct PartialSignature
    {
        int r, s;

        auto operator== (const PartialSignature &) const -> bool = default;
    };

    /// (r,s) when c flips (3,2s+1),(3,2s+2) and (2r+1,3),(2r+2,3) and is
    /// correct on rows 1-3 through column 2s, row 4 through column 2s+2,
    /// columns 1-3 through row 2r and column 4 through row 2r+2.
    auto detect_partial_signature(const Coloring & c) -> std::optional<PartialSignature>;

    /// Partial 4-coloring assigning exactly the cells the (r,s)-partial
    /// pattern constrains, in canonical colours. Needs r,s >= 2,
    /// m >= 2r+2 and n >= 2s+2.
    auto make_partial_fixture(int r, int s, GridDims dims) -> Coloring;

    auto analyze(const Coloring & c, LemmaId id) -> LemmaFinding;
    auto analyze_all(const Coloring & c) -> std::vector<LemmaFinding>;
}
