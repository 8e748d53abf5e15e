#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbcp/bench.hpp"
#include "mbcp/instance_gen.hpp"
#include "mbcp/io.hpp"
#include "mbcp/local_search.hpp"
#include "mbcp/solver.hpp"
#include "mbcp/verify.hpp"

namespace py = pybind11;
using namespace mbcp;

namespace {

SolverConfig make_config(std::uint64_t seed, double p0, int max_exp_length, int regrow_size,
                         int max_iterations, int stagnation_limit, int grow_n_attempts) {
    SolverConfig c;
    c.seed = seed;
    c.p0 = p0;
    c.max_exp_length = max_exp_length;
    c.regrow_size = regrow_size;
    c.max_iterations = max_iterations;
    c.stagnation_limit = stagnation_limit;
    c.grow_n_attempts = grow_n_attempts;
    return c;
}

Solution to_solution(const std::vector<std::int32_t>& assignment) {
    Solution s;
    s.assignment = assignment;
    s.objective = s.count_assigned();
    return s;
}

Instance make_instance(std::size_t node_count, const std::vector<Edge>& edges, std::vector<NodeId> roots,
                       int capacity) {
    Instance inst;
    inst.graph = build_graph(node_count, edges);
    inst.roots = std::move(roots);
    inst.capacity = capacity;
    inst.validate();
    return inst;
}

}  // namespace

PYBIND11_MODULE(_mbcp, m) {
    m.doc() = "Bi-connected partitioning with a size constraint";

    py::register_exception<OracleSizeError>(m, "OracleSizeError", PyExc_ValueError);
    py::register_exception<GenerationError>(m, "GenerationError", PyExc_RuntimeError);

    py::class_<Instance>(m, "Instance")
        .def(py::init(&make_instance), py::arg("node_count"), py::arg("edges"), py::arg("roots"),
             py::arg("capacity"))
        .def_static("from_json", [](const std::string& text) { return instance_from_json(json::parse(text)); })
        .def_static("load", [](const std::string& path) { return read_instance(path); })
        .def("to_json", [](const Instance& i) { return instance_to_json(i).dump(); })
        .def("save", [](const Instance& i, const std::string& path) { write_instance(path, i); })
        .def_property_readonly("node_count", [](const Instance& i) { return i.graph.node_count(); })
        .def_property_readonly("edges", [](const Instance& i) { return i.graph.edges(); })
        .def_property_readonly("roots", [](const Instance& i) { return i.roots; })
        .def_property_readonly("capacity", [](const Instance& i) { return i.capacity; })
        .def_property_readonly("known_optimum", [](const Instance& i) { return i.known_optimum; });

    m.def("is_biconnected",
          [](const Instance& i, const std::vector<NodeId>& nodes) { return is_biconnected(i.graph, nodes); });
    m.def("articulation_points", [](const Instance& i, const std::vector<NodeId>& nodes) {
        return articulation_points(i.graph, nodes);
    });

    m.def(
        "generate_instance",
        [](int n, int capacity, double alpha, std::uint64_t seed) {
            GenConfig c;
            c.n = n;
            c.m = capacity;
            c.alpha = alpha;
            c.seed = seed;
            auto g = generate_instance(c);
            return py::make_tuple(g.instance, g.block_membership);
        },
        py::arg("n"), py::arg("m"), py::arg("alpha") = 2.0, py::arg("seed") = 0,
        "Returns (instance, block_membership).");

    m.def(
        "reduce_mpgsd_star",
        [](int sup, const std::vector<int>& demands) {
            auto r = reduce_mpgsd_star(sup, demands);
            return py::make_tuple(r.instance, r.oracle_value);
        },
        py::arg("sup"), py::arg("demands"), "Returns (instance, optimum).");

    m.def(
        "generate_solution",
        [](const Instance& inst, std::uint64_t seed, double p0, int max_exp_length) {
            SolverConfig c = make_config(seed, p0, max_exp_length, 9, 10000, 2000, 50);
            Rng rng(seed);
            return generate_solution(inst, c, rng).assignment;
        },
        py::arg("instance"), py::arg("seed") = 0, py::arg("p0") = 0.5, py::arg("max_exp_length") = 12);

    m.def(
        "local_search",
        [](const Instance& inst, const std::string& mode, std::uint64_t seed, double p0, int max_exp_length,
           int regrow_size, int max_iterations, int stagnation_limit, int grow_n_attempts) {
            RegrowMode rm;
            if (mode == "grow-n" || mode == "N") rm = RegrowMode::Neighbor;
            else if (mode == "grow-r" || mode == "R") rm = RegrowMode::Random;
            else throw std::invalid_argument("mode must be grow-n or grow-r");
            auto c = make_config(seed, p0, max_exp_length, regrow_size, max_iterations, stagnation_limit,
                                 grow_n_attempts);
            LocalSearchResult res;
            {
                py::gil_scoped_release release;
                res = local_search(inst, c, rm);
            }
            py::dict stats;
            stats["best_objective"] = res.stats.best_objective;
            stats["iterations"] = res.stats.iterations;
            stats["iteration_of_best"] = res.stats.iteration_of_best;
            stats["wall_millis"] = res.stats.wall_millis;
            stats["millis_to_best"] = res.stats.millis_to_best;
            return py::make_tuple(res.best.assignment, stats);
        },
        py::arg("instance"), py::arg("mode") = "grow-n", py::arg("seed") = 0, py::arg("p0") = 0.5,
        py::arg("max_exp_length") = 12, py::arg("regrow_size") = 9, py::arg("max_iterations") = 10000,
        py::arg("stagnation_limit") = 2000, py::arg("grow_n_attempts") = 50,
        "Returns (assignment, stats).");

    m.def(
        "verify",
        [](const Instance& inst, const std::vector<std::int32_t>& assignment) {
            auto report = verify_solution(inst, to_solution(assignment));
            py::list violations;
            for (const auto& v : report.violations)
                violations.append(py::make_tuple(to_string(v.kind), v.subgraph, v.detail));
            py::dict out;
            out["feasible"] = report.feasible();
            out["objective"] = report.objective;
            out["violations"] = violations;
            return out;
        },
        py::arg("instance"), py::arg("assignment"));

    m.def("brute_force_optimum", &brute_force_optimum, py::arg("instance"));

    m.def(
        "run_bench",
        [](const std::string& spec_json) {
            auto spec = bench_spec_from_json(json::parse(spec_json));
            std::vector<BenchRow> rows;
            {
                py::gil_scoped_release release;
                rows = run_bench(spec);
            }
            return bench_csv(rows, spec.record_timing);
        },
        py::arg("spec_json"), "Runs a batch spec (JSON text) and returns the CSV.");
}
