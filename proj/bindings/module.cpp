#include "polycert/parser.hpp"
#include "polycert/printing.hpp"
#include "polycert/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

namespace py = pybind11;
using namespace polycert;

namespace {

Rat rat_arg(const std::string& text, const char* what) {
    auto value = rat_from_string(text);
    if (!value) throw std::invalid_argument(std::string("malformed rational for ") + what);
    return *value;
}

std::string construct(const std::string& family, int n, const std::string& K, int Q, int terms,
                      std::tuple<std::string, std::string, std::string> frame) {
    FamilySpec spec;
    if (family == "power") {
        spec.tag = FamilyTag::power;
        spec.Q = Q;
    } else if (family == "f2") {
        spec.tag = FamilyTag::f2;
        spec.n = n;
    } else if (family == "f3") {
        spec.tag = FamilyTag::f3;
        spec.n = n;
        spec.K = rat_arg(K, "K");
    } else if (family == "f4") {
        spec.tag = FamilyTag::f4;
        spec.n = n;
    } else if (family == "bessel") {
        spec.tag = FamilyTag::bessel_trunc;
        spec.terms = terms;
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    spec.frame = Frame{rat_arg(std::get<0>(frame), "frame"), rat_arg(std::get<1>(frame), "frame"),
                       rat_arg(std::get<2>(frame), "frame")};
    return ratfun_to_string(build_family(spec));
}

std::string report_json_for(const std::string& expr, bool classify_input) {
    RatFun f = parse_ratfun(expr);
    if (f.is_constant()) throw std::invalid_argument("input is a constant function");
    return report_to_json(make_report(expr, f, classify_input));
}

std::vector<std::pair<std::string, std::string>> roots(const std::string& expr,
                                                       const std::string& width) {
    RatFun f = parse_ratfun(expr);
    Rat w = rat_arg(width, "width");
    std::vector<std::pair<std::string, std::string>> out;
    if (f.num().is_constant()) return out;
    for (const auto& iv : isolate_real_roots(f.num(), w)) {
        out.emplace_back(rat_to_string(iv.lo), rat_to_string(iv.hi));
    }
    return out;
}

std::pair<std::string, std::string> f4_enclosure(const std::string& x, const std::string& tol) {
    RatInterval box = f4_eval_certified(rat_arg(x, "x"), rat_arg(tol, "tol"));
    return {rat_to_string(box.lo), rat_to_string(box.hi)};
}

py::dict f4_roots(const std::string& bound, int count) {
    F4RootBrackets brackets = f4_negative_roots(rat_arg(bound, "bound"), count);
    py::list intervals;
    for (const auto& iv : brackets.intervals) {
        intervals.append(py::make_tuple(rat_to_string(iv.lo), rat_to_string(iv.hi)));
    }
    py::dict out;
    out["complete"] = brackets.complete;
    out["intervals"] = intervals;
    return out;
}

bool solves_ode(const std::string& expr, const std::string& coefficient,
                const std::string& constant) {
    RatFun f = parse_ratfun(expr);
    RatFun p = parse_ratfun(coefficient);
    if (!p.is_polynomial() || p.is_zero()) {
        throw std::invalid_argument("ODE coefficient must be a nonzero polynomial");
    }
    OdeIdentity ode{p.num(), rat_arg(constant, "constant")};
    return ode_residual(f, ode).is_zero();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact construction, certification and classification of rational solutions of "
              "P(z) y'' = c y";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const LowerError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("parse", [](const std::string& expr) { return ratfun_to_string(parse_ratfun(expr)); },
          py::arg("expr"), "Parse an expression in z and return its canonical form.");
    m.def("construct", &construct, py::arg("family"), py::arg("n") = 0, py::arg("K") = "",
          py::arg("Q") = 0, py::arg("terms") = 0,
          py::arg("frame") = std::make_tuple(std::string("1"), std::string("1"), std::string("0")),
          "Build a canonical family member and return its canonical form.");
    m.def("verify_json", [](const std::string& e) { return report_json_for(e, false); },
          py::arg("expr"), "Hypothesis report as a JSON string.");
    m.def("classify_json", [](const std::string& e) { return report_json_for(e, true); },
          py::arg("expr"), "Hypothesis + classification report as a JSON string.");
    m.def("roots", &roots, py::arg("expr"), py::arg("width") = "1/64",
          "Isolating intervals for the real roots of the numerator.");
    m.def("tables", &tables_text, "The built-in example catalog.");
    m.def("f4_enclosure", &f4_enclosure, py::arg("x"), py::arg("tol"),
          "Certified rational enclosure of the z*y''=y series solution at x.");
    m.def("f4_negative_roots", &f4_roots, py::arg("bound") = "16", py::arg("count") = 2,
          "Certified enclosures of the first negative roots of the series solution.");
    m.def("solves_ode", &solves_ode, py::arg("expr"), py::arg("coefficient"),
          py::arg("constant"), "Exact check of P*y'' = c*y.");
}
