#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ffsolve/modular.hpp"
#include "ffsolve/report.hpp"

namespace py = pybind11;
using namespace ffsolve;

namespace {

std::string solve_json(const std::string& text, const std::string& alg, bool tableaux) {
    AnySystem sys = parse_system(text);
    return run_solve(sys, alg, tableaux).json.dump();
}

std::string verify_json(const std::string& text) {
    AnySystem sys = parse_system(text);
    return run_verify(sys).json.dump();
}

std::string verify_random_json(int n, int m, int trials, uint64_t seed) {
    return run_verify_random(n, m, trials, seed).json.dump();
}

CostScenario make_scenario(const std::string& ring, long long r, long long p, long long l,
                           long long tm, long long td, long long ta, long long mbits) {
    CostScenario s = CostScenario::for_kind(cost_kind_from_string(ring));
    s.r = r;
    s.p = p;
    s.l = l;
    if (tm >= 0) s.tm = tm;
    if (td >= 0) s.td = td;
    if (ta >= 0) s.ta = ta;
    s.modulus_bits = mbits;
    return s;
}

std::string predict_json(long long n, long long m, const std::string& ring, long long r,
                         long long p, long long l, long long tm, long long td, long long ta,
                         long long mbits) {
    if (m == 0) m = n + 1;
    return run_predict(n, m, make_scenario(ring, r, p, l, tm, td, ta, mbits)).json.dump();
}

py::dict count_formulas_py(const std::string& alg, long long n, long long m) {
    Algo a;
    if (alg == "dodgson") a = Algo::dodgson;
    else if (alg == "bareiss") a = Algo::bareiss;
    else if (alg == "fb") a = Algo::forward_backup;
    else if (alg == "onepass") a = Algo::one_pass;
    else throw std::invalid_argument("unknown algorithm: " + alg);
    OpCounts c = count_formulas(a, n, m);
    py::dict d;
    d["mul"] = c.mul;
    d["div"] = c.div;
    d["addsub"] = c.addsub;
    if (a == Algo::dodgson) d["div_corrected"] = dodgson_divisions_corrected(n);
    return d;
}

std::string hadamard_bound_py(const std::string& text) {
    AnySystem sys = parse_system(text);
    if (sys.kind != AnySystem::Kind::integer)
        throw std::invalid_argument("hadamard bound applies to integer systems");
    return hadamard_bound(std::get<Matrix<bigint>>(sys.mat)).str();
}

long long modulus_count_py(long long n, const std::string& ring, long long r, long long p,
                           long long l, long long mbits) {
    return modulus_count(n, make_scenario(ring, r, p, l, -1, -1, -1, mbits));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact linear-system toolkit core (fraction-free elimination over rings)";

    m.def("solve_json", &solve_json, py::arg("text"), py::arg("alg") = "onepass",
          py::arg("tableaux") = false,
          "Solve a system given in the text format; returns the report as a JSON string.");
    m.def("verify_json", &verify_json, py::arg("text"),
          "Cross-check all applicable algorithms and the determinant oracle.");
    m.def("verify_random_json", &verify_random_json, py::arg("n"), py::arg("m") = 0,
          py::arg("trials") = 100, py::arg("seed") = 1);
    m.def("predict_json", &predict_json, py::arg("n"), py::arg("m") = 0, py::arg("ring") = "unit",
          py::arg("r") = 0, py::arg("p") = 1, py::arg("l") = 1, py::arg("tm") = -1,
          py::arg("td") = -1, py::arg("ta") = -1, py::arg("mbits") = 31,
          "Closed-form operation counts, predicted times and ratio summaries.");
    m.def("count_formulas", &count_formulas_py, py::arg("alg"), py::arg("n"), py::arg("m"));
    m.def("hadamard_bound", &hadamard_bound_py, py::arg("text"));
    m.def("modulus_count", &modulus_count_py, py::arg("n"), py::arg("ring") = "modular",
          py::arg("r") = 0, py::arg("p") = 1, py::arg("l") = 1, py::arg("mbits") = 31);
    m.def("serialize", [](const std::string& text) { return serialize_system(parse_system(text)); },
          py::arg("text"), "Parse and re-emit a system file in canonical form.");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
