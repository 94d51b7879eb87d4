#include <gridchrome/json_io.hpp>

namespace gridchrome
{
    using nlohmann::json;

    auto to_json(json & j, Position p) -> void
    {
        j = json::array({ p.i, p.j });
    }

    auto to_json(json & j, const ViolationReport & report) -> void
    {
        j = json{ { "r", report.r }, { "valid", report.empty() }, { "violation_count", report.violation_count() } };
        j["improper_edges"] = json::array();
        for (auto & e : report.improper_edges)
            j["improper_edges"].push_back({ { "a", e.a }, { "b", e.b }, { "color", e.color } });
        j["deficient_vertices"] = json::array();
        for (auto & d : report.deficient_vertices)
            j["deficient_vertices"].push_back(
                    { { "position", d.position }, { "degree", d.degree }, { "required", d.required }, { "seen", d.seen } });
        j["palette_overflows"] = json::array();
        for (auto & o : report.palette_overflows)
            j["palette_overflows"].push_back({ { "position", o.position }, { "color", o.color } });
    }

    auto to_json(json & j, const SearchStats & stats) -> void
    {
        j = json{
            { "nodes", stats.nodes },
            { "prunings", stats.prunings },
            { "lemma_prunings", stats.lemma_prunings },
            { "dp_states", stats.dp_states },
            { "dp_peak_layer", stats.dp_peak_layer },
            { "wall_seconds", stats.wall_seconds },
        };
    }

    auto to_json(json & j, const DecisionOutcome & outcome) -> void
    {
        j = json{
            { "status", to_string(outcome.status) },
            { "engine", to_string(outcome.engine) },
            { "witness", outcome.witness ? json(format_coloring(*outcome.witness)) : json(nullptr) },
            { "stats", outcome.stats },
        };
    }

    auto to_json(json & j, const LemmaFinding & finding) -> void
    {
        j = json{
            { "lemma", to_string(finding.lemma) },
            { "verdict", to_string(finding.verdict) },
            { "witnesses", finding.witnesses },
            { "vacuous", finding.vacuous },
            { "note", finding.note },
        };
    }

    auto to_json(json & j, const ChromaticTable & table) -> void
    {
        j = json{ { "max_m", table.max_m }, { "max_n", table.max_n }, { "entries", json::array() } };
        for (auto & e : table.entries)
            j["entries"].push_back(chromatic_json(e.m, e.n, e.r, e.answer));
    }

    auto chromatic_json(int m, int n, int r, const ChromaticAnswer & answer) -> json
    {
        return json{
            { "m", m },
            { "n", n },
            { "r", r },
            { "value", answer.value },
            { "provenance", to_string(answer.provenance) },
            { "lower_bound_source", to_string(answer.lower_bound_source) },
        };
    }

    auto coloring_json(const Coloring & c) -> json
    {
        return json{ { "m", c.dims().m }, { "n", c.dims().n }, { "k", c.k() }, { "coloring", format_coloring(c) } };
    }
}
