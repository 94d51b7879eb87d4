#include <doctest.h>

#include <gridchrome/analyzer.hpp>
#include <gridchrome/cli.hpp>
#include <gridchrome/constructions.hpp>
#include <gridchrome/grid.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gridchrome;
using nlohmann::json;

namespace
{
    struct Result
    {
        int code;
        std::string out, err;
    };

    auto call(std::vector<std::string> args, const std::string & input = "") -> Result
    {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = cli::run(args, in, out, err);
        return { code, out.str(), err.str() };
    }

    auto temp_file(const std::string & name, const std::string & content) -> std::string
    {
        auto path = std::filesystem::temp_directory_path() / ("gridchrome_test_" + name);
        std::ofstream(path, std::ios::binary) << content;
        return path.string();
    }
}

TEST_CASE("chromatic")
{
    auto r = call({ "chromatic", "3", "6", "3" });
    CHECK(r.code == 0);
    CHECK(r.out == "5 Thm-Main\n");

    auto j = json::parse(call({ "chromatic", "4", "6", "3", "--json" }).out);
    CHECK(j["value"] == 4);
    CHECK(j["provenance"] == "Thm-Prior");
    CHECK(j["lower_bound_source"] == "Obs-MinDegree");

    auto path = call({ "chromatic", "1", "5", "2" });
    CHECK(path.code == 2);
    CHECK(path.err.find("exact solver") != std::string::npos);

    auto exact = call({ "chromatic", "1", "5", "2", "--exact" });
    CHECK(exact.code == 0);
    CHECK(exact.out == "3 exact\n");
}

TEST_CASE("construct and verify")
{
    auto built = call({ "construct", "--kind", "mod5", "5", "6" });
    CHECK(built.code == 0);
    CHECK(built.out == format_coloring(mod5_coloring({ 5, 6 })));

    auto verified = call({ "verify", "--r", "4", "-" }, built.out);
    CHECK(verified.code == 0);
    CHECK(verified.out == "valid r=4\n");

    auto checker = call({ "construct", "--kind", "checkerboard", "3", "3" });
    auto deficient = call({ "verify", "--r", "2", "-" }, checker.out);
    CHECK(deficient.code == 1);
    CHECK(deficient.out.find("deficient vertex (2,2) degree 4 requires 2 sees 1\n") != std::string::npos);
    CHECK(deficient.out.find("invalid r=2: 9 violations\n") != std::string::npos);

    auto report = json::parse(call({ "verify", "--r", "2", "--k", "1", "--json", "-" }, checker.out).out);
    CHECK(report["valid"] == false);
    CHECK(report["deficient_vertices"].size() == 9);
    CHECK(report["palette_overflows"].size() == 4);
    CHECK(report["deficient_vertices"][0]["position"] == json::array({ 1, 1 }));

    auto file = temp_file("block.txt", call({ "construct", "--kind", "block", "4", "6" }).out);
    CHECK(call({ "verify", "--r", "3", file }).code == 0);
    CHECK(call({ "verify", "--r", "3", "/nonexistent/coloring.txt" }).code == 2);

    auto out_file = (std::filesystem::temp_directory_path() / "gridchrome_test_out.txt").string();
    CHECK(call({ "construct", "--kind", "block", "2", "5", "-o", out_file }).code == 0);
    std::ifstream written(out_file);
    std::stringstream text;
    text << written.rdbuf();
    CHECK(text.str() == format_coloring(block_coloring({ 2, 5 })));
}

TEST_CASE("construct kinds")
{
    CHECK(call({ "construct", "--kind", "block", "3", "4" }).code == 2);
    CHECK(call({ "construct", "--kind", "spiral", "4", "4" }).code == 2);
    CHECK(call({ "construct", "4", "4" }).code == 2);

    auto optimal = json::parse(call({ "construct", "--r", "3", "--json", "5", "6" }).out);
    CHECK(optimal["kind"] == "mod5");
    CHECK(optimal["k"] == 5);
    CHECK(parse_coloring(optimal["coloring"].get<std::string>()) == mod5_coloring({ 5, 6 }));

    auto witness = json::parse(call({ "construct", "--r", "2", "--json", "3", "3" }).out);
    CHECK(witness["kind"] == "solver-witness");
    auto c = parse_coloring(witness["coloring"].get<std::string>());
    CHECK(validate(c, 2, 4).empty());
}

TEST_CASE("construct, verify and analyze round trip")
{
    for (auto [kind, m, n, r] : { std::tuple{ "mod5", 7, 9, 4 }, { "block", 6, 10, 3 }, { "block", 2, 7, 4 }, { "checkerboard", 5, 4, 1 } }) {
        auto built = call({ "construct", "--kind", kind, std::to_string(m), std::to_string(n) });
        REQUIRE(built.code == 0);
        auto file = temp_file(std::string(kind) + ".txt", built.out);
        CHECK(call({ "verify", "--r", std::to_string(r), file }).code == 0);
        CHECK(call({ "analyze", file }).code == 0);
    }
}

TEST_CASE("solve")
{
    auto unsat = call({ "solve", "3", "6", "3", "4" });
    CHECK(unsat.code == 1);
    CHECK(unsat.out == "UNSAT\n");

    auto sat = call({ "solve", "4", "4", "3", "4" });
    CHECK(sat.code == 0);
    CHECK(sat.out.rfind("SAT\n", 0) == 0);
    CHECK(validate(parse_coloring(sat.out.substr(4)), 3, 4).empty());

    auto both = json::parse(call({ "solve", "5", "6", "3", "4", "--engine", "both", "--json" }).out);
    CHECK(both["status"] == "UNSAT");
    CHECK(both["engine"] == "both");
    CHECK(both["witness"].is_null());
    CHECK(both["stats"]["dp_states"].get<std::uint64_t>() > 0);

    auto dp = json::parse(call({ "solve", "4", "6", "3", "4", "--engine", "dp", "--json" }).out);
    CHECK(dp["status"] == "SAT");
    CHECK(validate(parse_coloring(dp["witness"].get<std::string>()), 3, 4).empty());

    CHECK(call({ "solve", "3", "6", "3", "4", "--lemma-prop", "--no-symmetry" }).code == 1);
    CHECK(call({ "solve", "10", "10", "3", "4", "--limit-nodes", "50" }).code == 3);
    CHECK(call({ "solve", "30", "30", "2", "3", "--no-symmetry", "--time-limit", "0.01" }).code == 3);
    CHECK(call({ "solve", "3", "6", "3", "4", "--engine", "sat" }).code == 2);
    CHECK(call({ "solve", "3", "6", "3" }).code == 2);
}

TEST_CASE("solve output is byte-stable")
{
    auto a = call({ "solve", "6", "8", "3", "4", "--seed", "7" });
    auto b = call({ "solve", "6", "8", "3", "4", "--seed", "7" });
    CHECK(a.out == b.out);
    auto threaded = call({ "solve", "6", "8", "3", "4", "--seed", "7", "--threads", "3" });
    CHECK(threaded.out == a.out);
}

TEST_CASE("solve with pinned cells")
{
    auto pins = temp_file("pins.txt", "4 4 4\n2 . . .\n. . . .\n. . . .\n. . . .\n");
    auto r = call({ "solve", "4", "4", "3", "4", "--pin", pins });
    CHECK(r.code == 0);
    CHECK(parse_coloring(r.out.substr(4))(1, 1) == 2);

    auto partial = call({ "solve", "6", "6", "3", "4", "--pin", "-" }, format_coloring(make_partial_fixture(2, 2, { 6, 6 })));
    CHECK(partial.code == 1);
}

TEST_CASE("threads from the environment")
{
    ::setenv("GRIDCHROME_THREADS", "2", 1);
    CHECK(call({ "solve", "3", "6", "3", "4" }).code == 1);
    ::setenv("GRIDCHROME_THREADS", "zero", 1);
    auto bad = call({ "solve", "3", "6", "3", "4" });
    CHECK(bad.code == 2);
    CHECK(bad.err.find("GRIDCHROME_THREADS") != std::string::npos);
    CHECK(call({ "solve", "3", "6", "3", "4", "--threads", "1" }).code == 1);
    ::unsetenv("GRIDCHROME_THREADS");
}

TEST_CASE("table")
{
    auto csv = call({ "table", "--max-m", "3", "--max-n", "3" });
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("m,n,r,value,provenance,lower_bound_source\n", 0) == 0);

    auto j = json::parse(call({ "table", "--max-m", "4", "--max-n", "4", "--format", "json" }).out);
    CHECK(j["entries"].size() == 45);
    CHECK(call({ "table", "--max-m", "1" }).code == 2);
    CHECK(call({ "table", "--format", "xml" }).code == 2);
}

TEST_CASE("analyze")
{
    auto block = format_coloring(block_coloring({ 8, 8 }));
    auto all = call({ "analyze", "-" }, block);
    CHECK(all.code == 0);
    CHECK(all.out.find("ring Holds\n") != std::string::npos);
    CHECK(all.out.find("partial NotApplicable") != std::string::npos);

    auto findings = json::parse(call({ "analyze", "--json", "-" }, block).out);
    CHECK(findings.size() == 7);
    CHECK(findings[0]["lemma"] == "ring");

    auto fixture = format_coloring(make_partial_fixture(2, 3, { 8, 10 }));
    auto partial = call({ "analyze", "--lemma", "partial", "-" }, fixture);
    CHECK(partial.code == 0);
    CHECK(partial.out == "partial Holds: (2,3)-partial\n");

    auto broken = "5 5 4\n. . . . .\n. . 0 . .\n. 1 . . .\n. . . . .\n. . . . .\n";
    auto corner = call({ "analyze", "--lemma", "corner", "-" }, broken);
    CHECK(corner.code == 1);
    CHECK(corner.out == "corner Violated\n  (3,2) (2,3)\n");

    CHECK(call({ "analyze", "--lemma", "nope", "-" }, block).code == 2);
    auto parse = call({ "analyze", "-" }, "2 2 2\n0 1\n1 0");
    CHECK(parse.code == 2);
    CHECK(parse.err.find("line 3") != std::string::npos);
}

TEST_CASE("usage errors")
{
    CHECK(call({}).code == 2);
    CHECK(call({ "frobnicate" }).code == 2);
    CHECK(call({ "chromatic", "3", "6", "3", "--bogus" }).code == 2);
    CHECK(call({ "chromatic", "three", "6", "3" }).code == 2);
    auto help = call({ "--help" });
    CHECK(help.code == 0);
    CHECK(help.out.find("solve") != std::string::npos);
}
