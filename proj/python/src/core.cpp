#include <gridchrome/analyzer.hpp>
#include <gridchrome/chromatic_table.hpp>
#include <gridchrome/constructions.hpp>
#include <gridchrome/errors.hpp>
#include <gridchrome/json_io.hpp>
#include <gridchrome/solver.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gridchrome;

namespace
{
    // Results leave the module as plain Python objects shaped like the
    // CLI's --json documents.
    auto to_python(const nlohmann::json & j) -> py::object
    {
        switch (j.type()) {
            case nlohmann::json::value_t::null: return py::none();
            case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
            case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
            case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
            case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
            case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
            case nlohmann::json::value_t::array: {
                py::list list;
                for (auto & item : j)
                    list.append(to_python(item));
                return list;
            }
            case nlohmann::json::value_t::object: {
                py::dict dict;
                for (auto & [key, value] : j.items())
                    dict[py::str(key)] = to_python(value);
                return dict;
            }
            default: throw ConsistencyError("unexpected JSON value");
        }
    }

    auto rows(const Coloring & c) -> py::list
    {
        py::list out;
        for (int i = 1 ; i <= c.dims().m ; ++i) {
            py::list row;
            for (int j = 1 ; j <= c.dims().n ; ++j) {
                Color x = c(i, j);
                row.append(x == unassigned ? py::object(py::none()) : py::object(py::int_(x)));
            }
            out.append(row);
        }
        return out;
    }

    auto from_rows(const std::vector<std::vector<std::optional<Color>>> & cells, int k) -> Coloring
    {
        std::vector<std::vector<Color>> plain;
        for (auto & row : cells) {
            auto & out = plain.emplace_back();
            for (auto & x : row)
                out.push_back(x.value_or(unassigned));
        }
        return Coloring::from_rows(k, plain);
    }

    auto config(const std::string & engine, bool symmetry_breaking, bool lemma_propagation,
            std::optional<std::uint64_t> node_limit, std::optional<double> time_limit, unsigned threads,
            std::optional<std::uint64_t> seed, std::optional<Coloring> pinned) -> SolverConfig
    {
        SolverConfig c;
        c.engine = parse_engine(engine);
        c.symmetry_breaking = symmetry_breaking;
        c.lemma_propagation = lemma_propagation;
        c.node_limit = node_limit;
        if (time_limit)
            c.time_limit = std::chrono::milliseconds(std::int64_t(*time_limit * 1000.0));
        c.threads = threads;
        c.seed = seed;
        c.pinned = std::move(pinned);
        c.check();
        return c;
    }

    auto finding(const LemmaFinding & f) -> py::object
    {
        nlohmann::json j = f;
        return to_python(j);
    }
}

PYBIND11_MODULE(_core, m) {
    m.doc() = "r-dynamic colourings of grid graphs.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto input = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", input);
    auto unsupported = py::register_exception<UnsupportedInput>(m, "UnsupportedInput", input);
    py::register_exception<OutOfTableError>(m, "OutOfTableError", unsupported);
    py::register_exception<ResourceError>(m, "ResourceError", error);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", error);

    py::class_<Coloring>(m, "Coloring")
        .def(py::init(&from_rows), py::arg("rows"), py::arg("k"),
                "Rows of colours in [0, k); None marks an unassigned cell.")
        .def(py::init([] (int m, int n, int k) { return Coloring(make_dims(m, n), k); }),
                py::arg("m"), py::arg("n"), py::arg("k"), "All cells unassigned.")
        .def_static("parse", [] (const std::string & text) { return parse_coloring(text); }, py::arg("text"))
        .def_property_readonly("m", [] (const Coloring & c) { return c.dims().m; })
        .def_property_readonly("n", [] (const Coloring & c) { return c.dims().n; })
        .def_property_readonly("k", &Coloring::k)
        .def_property_readonly("rows", &rows)
        .def("is_complete", &Coloring::is_complete)
        .def("to_text", [] (const Coloring & c) { return format_coloring(c); })
        .def("__getitem__", [] (const Coloring & c, std::pair<int, int> p) -> py::object {
            Color x = c.at({ p.first, p.second });
            return x == unassigned ? py::object(py::none()) : py::object(py::int_(x));
        })
        .def("__eq__", [] (const Coloring & a, const Coloring & b) { return a == b; })
        .def("__repr__", [] (const Coloring & c) {
            return "Coloring(m=" + std::to_string(c.dims().m) + ", n=" + std::to_string(c.dims().n)
                + ", k=" + std::to_string(c.k()) + ")";
        });

    m.def("construct", [] (const std::string & kind, int m, int n, std::optional<int> r) {
        GridDims dims = make_dims(m, n);
        if (kind == "mod5")
            return mod5_coloring(dims);
        if (kind == "block")
            return block_coloring(dims);
        if (kind == "checkerboard")
            return checkerboard_coloring(dims);
        if (kind == "optimal") {
            if (! r)
                throw InputError("optimal construction needs r");
            return optimal_coloring(dims, *r).coloring;
        }
        throw InputError("unknown construction kind '" + kind + "'");
    }, py::arg("kind"), py::arg("m"), py::arg("n"), py::arg("r") = py::none(),
        "kind is mod5, block, checkerboard or optimal (needs r).");

    m.def("validate", [] (const Coloring & c, int r, std::optional<int> k) {
        nlohmann::json j = validate(c, r, k);
        return to_python(j);
    }, py::arg("coloring"), py::arg("r"), py::arg("k") = py::none());

    m.def("chromatic", [] (int m, int n, int r) {
        return to_python(chromatic_json(m, n, r, grid_chromatic(m, n, r)));
    }, py::arg("m"), py::arg("n"), py::arg("r"), "Closed-form chromatic number with its provenance.");

    m.def("chromatic_exact", [] (int m, int n, int r, const std::string & engine, std::optional<double> time_limit) {
        auto c = config(engine, true, false, std::nullopt, time_limit, 1, std::nullopt, std::nullopt);
        py::gil_scoped_release release;
        return chromatic_exact(make_dims(m, n), r, c);
    }, py::arg("m"), py::arg("n"), py::arg("r"), py::arg("engine") = "both", py::arg("time_limit") = py::none());

    m.def("table", [] (int max_m, int max_n) {
        nlohmann::json j = table_report(max_m, max_n);
        return to_python(j);
    }, py::arg("max_m") = 10, py::arg("max_n") = 10);

    m.def("solve", [] (int m, int n, int r, int k, const std::string & engine, bool symmetry_breaking,
            bool lemma_propagation, std::optional<std::uint64_t> node_limit, std::optional<double> time_limit,
            unsigned threads, std::optional<std::uint64_t> seed, std::optional<Coloring> pinned) {
        auto c = config(engine, symmetry_breaking, lemma_propagation, node_limit, time_limit, threads, seed,
                std::move(pinned));
        DecisionOutcome outcome;
        {
            py::gil_scoped_release release;
            outcome = decide(make_dims(m, n), r, k, c);
        }
        nlohmann::json j = outcome;
        py::object result = to_python(j);
        result["witness"] = outcome.witness ? py::cast(*outcome.witness) : py::none();
        return result;
    }, py::arg("m"), py::arg("n"), py::arg("r"), py::arg("k"), py::arg("engine") = "backtracking",
        py::arg("symmetry_breaking") = true, py::arg("lemma_propagation") = false, py::arg("node_limit") = py::none(),
        py::arg("time_limit") = py::none(), py::arg("threads") = 1u, py::arg("seed") = py::none(),
        py::arg("pinned") = py::none(),
        "Decides r-dynamic k-colourability; the witness is a Coloring or None.");

    m.def("enumerate_colorings", [] (int m, int n, int r, int k, std::uint64_t limit, bool symmetry_breaking) {
        EnumerationResult result;
        {
            py::gil_scoped_release release;
            result = enumerate_colorings(make_dims(m, n), r, k, limit, symmetry_breaking);
        }
        return py::make_tuple(result.colorings, result.truncated);
    }, py::arg("m"), py::arg("n"), py::arg("r"), py::arg("k"), py::arg("limit") = 100000,
        py::arg("symmetry_breaking") = false, "Returns (colorings, truncated).");

    m.def("analyze", [] (const Coloring & c, const std::string & lemma) {
        py::list out;
        if (lemma == "all")
            for (auto & f : analyze_all(c))
                out.append(finding(f));
        else
            out.append(finding(analyze(c, parse_lemma_id(lemma))));
        return out;
    }, py::arg("coloring"), py::arg("lemma") = "all");

    m.def("partial_fixture", [] (int r, int s, int m, int n) { return make_partial_fixture(r, s, make_dims(m, n)); },
        py::arg("r"), py::arg("s"), py::arg("m"), py::arg("n"));

    m.attr("__version__") = "0.1.0";
}
