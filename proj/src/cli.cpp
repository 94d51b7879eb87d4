#include <gridchrome/analyzer.hpp>
#include <gridchrome/chromatic_table.hpp>
#include <gridchrome/cli.hpp>
#include <gridchrome/constructions.hpp>
#include <gridchrome/errors.hpp>
#include <gridchrome/json_io.hpp>
#include <gridchrome/solver.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gridchrome::cli
{
    namespace
    {
        using nlohmann::json;

        struct Options
        {
            bool json_output = false;

            // construct
            std::string kind = "optimal";
            std::string output = "-";

            // shared by several subcommands
            int m = 0, n = 0, r = 0, k = 0;
            std::string input;

            // verify
            std::optional<int> expected_k;

            // chromatic
            bool exact = false;

            // table
            int max_m = 10, max_n = 10;
            std::string format = "csv";

            // solve
            std::string engine = "backtracking";
            bool no_symmetry = false;
            bool lemma_prop = false;
            std::optional<std::uint64_t> limit_nodes;
            std::optional<double> time_limit;
            std::optional<unsigned> threads;
            bool any_witness = false;
            std::optional<std::uint64_t> seed;
            std::string pin;

            // analyze
            std::string lemma = "all";
        };

        auto read_coloring(const std::string & path, std::istream & in) -> Coloring
        {
            std::ostringstream text;
            if (path == "-")
                text << in.rdbuf();
            else {
                std::ifstream file(path, std::ios::binary);
                if (! file)
                    throw InputError("cannot open '" + path + "'");
                text << file.rdbuf();
            }
            return parse_coloring(text.str());
        }

        auto thread_count(const Options & opt) -> unsigned
        {
            if (opt.threads)
                return *opt.threads;
            const char * env = std::getenv("GRIDCHROME_THREADS");
            if (! env || ! *env)
                return 1;
            char * end = nullptr;
            long value = std::strtol(env, &end, 10);
            if (*end || value < 1 || value > 1024)
                throw InputError(std::string("GRIDCHROME_THREADS must be an integer in [1..1024], got '") + env + "'");
            return unsigned(value);
        }

        auto print_report(const ViolationReport & report, std::ostream & out) -> void
        {
            for (auto & e : report.improper_edges)
                out << "improper edge " << to_string(e.a) << "-" << to_string(e.b) << " color " << e.color << "\n";
            for (auto & d : report.deficient_vertices)
                out << "deficient vertex " << to_string(d.position) << " degree " << d.degree << " requires " << d.required
                    << " sees " << d.seen << "\n";
            for (auto & o : report.palette_overflows)
                out << "palette overflow " << to_string(o.position) << " color " << o.color << "\n";
            if (report.empty())
                out << "valid r=" << report.r << "\n";
            else
                out << "invalid r=" << report.r << ": " << report.violation_count() << " violations\n";
        }

        auto print_finding(const LemmaFinding & f, std::ostream & out) -> void
        {
            out << to_string(f.lemma) << " " << to_string(f.verdict);
            if (f.vacuous)
                out << " (vacuous)";
            if (! f.note.empty())
                out << ": " << f.note;
            out << "\n";
            for (auto & w : f.witnesses) {
                out << " ";
                for (auto p : w)
                    out << " " << to_string(p);
                out << "\n";
            }
        }

        auto do_construct(const Options & opt, std::ostream & out) -> int
        {
            auto dims = make_dims(opt.m, opt.n);
            Coloring result{ dims, 1 };
            std::string kind = opt.kind;
            if (opt.kind == "mod5")
                result = mod5_coloring(dims);
            else if (opt.kind == "block")
                result = block_coloring(dims);
            else if (opt.kind == "checkerboard")
                result = checkerboard_coloring(dims);
            else {
                auto optimal = optimal_coloring(dims, opt.r);
                kind = to_string(optimal.kind);
                result = std::move(optimal.coloring);
            }

            std::string payload;
            if (opt.json_output) {
                auto j = coloring_json(result);
                j["kind"] = kind;
                payload = j.dump(2) + "\n";
            }
            else
                payload = format_coloring(result);

            if (opt.output == "-")
                out << payload;
            else {
                std::ofstream file(opt.output, std::ios::binary);
                if (! (file << payload))
                    throw InputError("cannot write '" + opt.output + "'");
            }
            return exit_ok;
        }

        auto do_verify(const Options & opt, std::istream & in, std::ostream & out) -> int
        {
            auto c = read_coloring(opt.input, in);
            auto report = validate(c, opt.r, opt.expected_k);
            if (opt.json_output)
                out << json(report).dump(2) << "\n";
            else
                print_report(report, out);
            return report.empty() ? exit_ok : exit_negative;
        }

        auto solver_config(const Options & opt) -> SolverConfig
        {
            SolverConfig config;
            config.engine = parse_engine(opt.engine);
            config.symmetry_breaking = ! opt.no_symmetry;
            config.lemma_propagation = opt.lemma_prop;
            config.node_limit = opt.limit_nodes;
            if (opt.time_limit) {
                if (*opt.time_limit <= 0)
                    throw InputError("time limit must be positive");
                config.time_limit = std::chrono::milliseconds(std::max<long long>(1, (long long)(*opt.time_limit * 1000)));
            }
            config.threads = thread_count(opt);
            config.any_witness = opt.any_witness;
            config.seed = opt.seed;
            return config;
        }

        auto do_chromatic(const Options & opt, std::ostream & out) -> int
        {
            if (opt.exact) {
                auto config = solver_config(opt);
                int value = chromatic_exact(make_dims(opt.m, opt.n), opt.r, config);
                if (opt.json_output)
                    out << json{ { "m", opt.m }, { "n", opt.n }, { "r", opt.r }, { "value", value }, { "provenance", "exact" } }
                               .dump(2)
                        << "\n";
                else
                    out << value << " exact\n";
                return exit_ok;
            }
            auto answer = grid_chromatic(opt.m, opt.n, opt.r);
            if (opt.json_output)
                out << chromatic_json(opt.m, opt.n, opt.r, answer).dump(2) << "\n";
            else
                out << answer.value << " " << to_string(answer.provenance) << "\n";
            return exit_ok;
        }

        auto do_table(const Options & opt, std::ostream & out) -> int
        {
            auto table = table_report(opt.max_m, opt.max_n);
            if (opt.json_output || opt.format == "json")
                out << json(table).dump(2) << "\n";
            else
                out << table_to_csv(table);
            return exit_ok;
        }

        auto do_solve(const Options & opt, std::istream & in, std::ostream & out) -> int
        {
            auto config = solver_config(opt);
            if (! opt.pin.empty())
                config.pinned = read_coloring(opt.pin, in).with_palette(opt.k);
            auto outcome = decide(make_dims(opt.m, opt.n), opt.r, opt.k, config);
            if (opt.json_output)
                out << json(outcome).dump(2) << "\n";
            else {
                out << to_string(outcome.status) << "\n";
                if (outcome.witness)
                    out << format_coloring(*outcome.witness);
            }
            return outcome.status == Status::Sat ? exit_ok : exit_negative;
        }

        auto do_analyze(const Options & opt, std::istream & in, std::ostream & out) -> int
        {
            auto c = read_coloring(opt.input, in);
            std::vector<LemmaFinding> findings;
            if (opt.lemma == "all")
                findings = analyze_all(c);
            else
                findings.push_back(analyze(c, parse_lemma_id(opt.lemma)));

            if (opt.json_output)
                out << json(findings).dump(2) << "\n";
            else
                for (auto & f : findings)
                    print_finding(f, out);
            bool violated = std::any_of(findings.begin(), findings.end(), [] (auto & f) { return f.verdict == Verdict::Violated; });
            return violated ? exit_negative : exit_ok;
        }
    }

    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        Options opt;
        CLI::App app{ "r-dynamic colorings of grid graphs", "gridchrome" };
        app.require_subcommand(1);
        app.set_version_flag("--version", "gridchrome 0.1.0");

        auto add_json = [&] (CLI::App * sub) { sub->add_flag("--json", opt.json_output, "Write JSON instead of text"); };
        auto kinds = CLI::IsMember({ "mod5", "block", "checkerboard", "optimal" });
        auto engines = CLI::IsMember({ "backtracking", "bt", "frontier-dp", "dp", "both" });

        auto construct = app.add_subcommand("construct", "Write an explicit coloring of G_{m,n}");
        construct->add_option("--kind", opt.kind, "mod5, block, checkerboard or optimal")->check(kinds)->capture_default_str();
        construct->add_option("--r", opt.r, "Dynamic parameter for --kind optimal")->check(CLI::PositiveNumber);
        construct->add_option("-o,--output", opt.output, "Output file, - for stdout")->capture_default_str();
        construct->add_option("m", opt.m)->required();
        construct->add_option("n", opt.n)->required();
        add_json(construct);

        auto verify = app.add_subcommand("verify", "Check a coloring file for the r-dynamic condition");
        verify->add_option("--r", opt.r, "Dynamic parameter")->required()->check(CLI::PositiveNumber);
        verify->add_option("--k", opt.expected_k, "Flag colours >= k");
        verify->add_option("file", opt.input, "Coloring file, - for stdin")->required();
        add_json(verify);

        auto chromatic = app.add_subcommand("chromatic", "Closed-form chi_r(G_{m,n}) with provenance");
        chromatic->add_option("m", opt.m)->required();
        chromatic->add_option("n", opt.n)->required();
        chromatic->add_option("r", opt.r)->required();
        chromatic->add_flag("--exact", opt.exact, "Compute by exhaustive search instead");
        chromatic->add_option("--engine", opt.engine, "Engine for --exact")->check(engines);
        chromatic->add_option("--threads", opt.threads, "Backtracking worker threads for --exact");
        add_json(chromatic);

        auto table = app.add_subcommand("table", "Closed-form table for 2 <= m,n <= max and r = 1..5");
        table->add_option("--max-m", opt.max_m)->capture_default_str();
        table->add_option("--max-n", opt.max_n)->capture_default_str();
        table->add_option("--format", opt.format)->check(CLI::IsMember({ "csv", "json" }))->capture_default_str();
        add_json(table);

        auto solve = app.add_subcommand("solve", "Decide whether G_{m,n} has an r-dynamic k-coloring");
        solve->add_option("m", opt.m)->required();
        solve->add_option("n", opt.n)->required();
        solve->add_option("r", opt.r)->required();
        solve->add_option("k", opt.k)->required();
        solve->add_option("--engine", opt.engine, "backtracking, frontier-dp or both")->check(engines)->capture_default_str();
        solve->add_flag("--no-symmetry", opt.no_symmetry, "Disable colour symmetry breaking");
        solve->add_flag("--lemma-prop", opt.lemma_prop, "Prune with the rainbow and zigzag rules (k=4, r>=3)");
        solve->add_option("--limit-nodes", opt.limit_nodes, "Backtracking node budget");
        solve->add_option("--time-limit", opt.time_limit, "Wall-clock budget in seconds");
        solve->add_option("--threads", opt.threads, "Backtracking worker threads (default GRIDCHROME_THREADS or 1)");
        solve->add_flag("--any-witness", opt.any_witness, "Let parallel search return the first witness found");
        solve->add_option("--seed", opt.seed, "Shuffle value order with this seed");
        solve->add_option("--pin", opt.pin, "Partial coloring whose assigned cells are fixed");
        add_json(solve);

        auto analyze_cmd = app.add_subcommand("analyze", "Check the structural lemmas on a 4-coloring");
        analyze_cmd->add_option("file", opt.input, "Coloring file, - for stdin")->required();
        analyze_cmd->add_option("--lemma", opt.lemma)
            ->check(CLI::IsMember({ "all", "ring", "corner", "2x3", "zigzag", "coherence", "classify", "partial" }))
            ->capture_default_str();
        add_json(analyze_cmd);

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        if (construct->parsed() && opt.kind == "optimal" && opt.r == 0) {
            err << "construct --kind optimal needs --r\n";
            return exit_usage;
        }

        try {
            if (construct->parsed())
                return do_construct(opt, out);
            if (verify->parsed())
                return do_verify(opt, in, out);
            if (chromatic->parsed())
                return do_chromatic(opt, out);
            if (table->parsed())
                return do_table(opt, out);
            if (solve->parsed())
                return do_solve(opt, in, out);
            return do_analyze(opt, in, out);
        }
        catch (const InputError & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const ResourceError & e) {
            err << "resource limit: " << e.what() << "\n";
            return exit_resource;
        }
        catch (const ConsistencyError & e) {
            err << "internal inconsistency: " << e.what() << "\n";
            return exit_internal;
        }
        catch (const Error & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
    }
}
