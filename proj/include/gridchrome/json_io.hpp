#pragma once

#include <gridchrome/analyzer.hpp>
#include <gridchrome/chromatic_table.hpp>
#include <gridchrome/grid.hpp>
#include <gridchrome/solver.hpp>

#include <json.hpp>

// nlohmann::json conversions for the CLI's --json output. Positions are
// [i, j] arrays; colorings are embedded in the coloring text format. The
// shapes are documented by the schemas under docs/schemas.

namespace gridchrome
{
    auto to_json(nlohmann::json & j, Position p) -> void;
    auto to_json(nlohmann::json & j, const ViolationReport & report) -> void;
    auto to_json(nlohmann::json & j, const SearchStats & stats) -> void;
    auto to_json(nlohmann::json & j, const DecisionOutcome & outcome) -> void;
    auto to_json(nlohmann::json & j, const LemmaFinding & finding) -> void;
    auto to_json(nlohmann::json & j, const ChromaticTable & table) -> void;

    auto chromatic_json(int m, int n, int r, const ChromaticAnswer & answer) -> nlohmann::json;
    auto coloring_json(const Coloring & c) -> nlohmann::json;
}
