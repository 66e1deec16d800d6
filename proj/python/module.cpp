// Python bindings for the core operations: exact rational functions, the
// matrix pipeline, and the brute-force cross-check.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kauffman/oracle.hpp"
#include "kauffman/pipeline.hpp"
#include "kauffman/serialize.hpp"

namespace py = pybind11;
using namespace kauffman;

namespace {

FractionNotation parse(const std::string& text) {
    try {
        return parse_notation(text);
    } catch (const notation_error& e) {
        throw py::value_error(e.what());
    }
}

std::string eval_str(const RatFunc& f, const std::string& alpha_val,
                     const std::string& s_val) {
    mpq_class a(alpha_val), s(s_val);
    a.canonicalize();
    s.canonicalize();
    mpq_class r = f.eval_rational(a, s);
    return r.get_str();
}

}  // namespace

PYBIND11_MODULE(kauffman2bridge, m) {
    m.doc() = "Kauffman polynomials of 2-bridge knots and links";

    py::class_<RatFunc>(m, "RatFunc")
        .def(py::init<long>(), py::arg("n") = 0)
        .def("__eq__", [](const RatFunc& a, const RatFunc& b) { return a == b; })
        .def("__add__", [](const RatFunc& a, const RatFunc& b) { return a + b; })
        .def("__sub__", [](const RatFunc& a, const RatFunc& b) { return a - b; })
        .def("__mul__", [](const RatFunc& a, const RatFunc& b) { return a * b; })
        .def("__truediv__", [](const RatFunc& a, const RatFunc& b) { return a / b; })
        .def("__neg__", [](const RatFunc& a) { return -a; })
        .def("__pow__", &RatFunc::pow)
        .def("__repr__", &RatFunc::to_plain)
        .def("inv", &RatFunc::inv)
        .def("mirror", &RatFunc::mirror)
        .def("reduce", [](const RatFunc& a) { return a.reduce(); })
        .def("is_zero", &RatFunc::is_zero)
        .def("plain", &RatFunc::to_plain)
        .def("latex", &RatFunc::to_latex)
        .def("json", [](const RatFunc& a) { return to_json(a).dump(); })
        .def("eval", &eval_str, py::arg("alpha"), py::arg("s"),
             "Exact evaluation at rational alpha and s, given and returned "
             "as strings like \"3/2\".");

    m.def("alpha", &RatFunc::alpha, py::arg("power") = 1);
    m.def("s", &RatFunc::s, py::arg("power") = 1);
    m.def("delta", &delta, "The trivial-loop value.");
    m.def("from_json", [](const std::string& text) {
        return ratfunc_from_json(nlohmann::json::parse(text));
    });

    m.def(
        "compute",
        [](const std::string& notation, bool reduce) {
            return kauffman_2bridge(parse(notation), reduce).value;
        },
        py::arg("notation"), py::arg("reduce") = true,
        "Kauffman polynomial of a continued-fraction notation like \"[-2,1,-2]\".");

    m.def(
        "oracle",
        [](const std::string& notation, int crossing_limit) {
            OracleOptions opt;
            opt.crossing_limit = crossing_limit;
            return kauffman_bruteforce(build_diagram(parse(notation)), opt);
        },
        py::arg("notation"), py::arg("crossing_limit") = 12,
        "Brute-force skein evaluation of the same diagram.");

    m.def(
        "verify",
        [](const std::string& notation, int crossing_limit) {
            OracleOptions opt;
            opt.crossing_limit = crossing_limit;
            return verify_pair(parse(notation), opt);
        },
        py::arg("notation"), py::arg("crossing_limit") = 12,
        "True when the pipeline and the brute-force oracle agree.");
}
