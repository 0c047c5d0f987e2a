#include "approxjac/branch.hpp"
#include "approxjac/jnd.hpp"
#include "approxjac/json_io.hpp"
#include "approxjac/newton_diagram.hpp"
#include "approxjac/parse.hpp"
#include "approxjac/puiseux.hpp"
#include "approxjac/resultant.hpp"
#include "approxjac/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace approxjac;

namespace {

// Python ints and the string "inf" map to ExtInt.
ExtInt ext_from_py(const py::handle& h) {
    if (py::isinstance<py::str>(h)) {
        if (h.cast<std::string>() != "inf") throw py::value_error("expected an integer or 'inf'");
        return ExtInt::infinity();
    }
    if (py::isinstance<py::float_>(h)) {
        const double v = h.cast<double>();
        if (v == std::numeric_limits<double>::infinity()) return ExtInt::infinity();
        throw py::value_error("lengths and heights must be integers or 'inf'");
    }
    return ExtInt(h.cast<std::int64_t>());
}

py::object ext_to_py(ExtInt e) {
    if (e.is_infinite()) return py::str("inf");
    return py::int_(e.value());
}

NewtonDiagram diagram_from_segments(const py::iterable& segs, std::pair<std::int64_t, std::int64_t> shift) {
    std::vector<ElementarySegment> v;
    for (const auto& item : segs) {
        const auto pair = item.cast<py::sequence>();
        if (pair.size() != 2) throw py::value_error("segments are (length, height) pairs");
        v.emplace_back(ext_from_py(pair[0]), ext_from_py(pair[1]));
    }
    return NewtonDiagram(std::move(v), LatticePoint{shift.first, shift.second});
}

py::tuple rational_to_py(const Rational& r) { return py::make_tuple(r.numerator(), r.denominator()); }

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Approximate jacobian Newton diagrams of plane branches";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    // Kept alive for the interpreter lifetime; the instance gets line/column attributes.
    static PyObject* parse_exc = PyErr_NewException("approxjac._core.ParseError", PyExc_ValueError, nullptr);
    m.attr("ParseError") = py::handle(parse_exc);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::object err = py::handle(parse_exc)(e.what());
            err.attr("line") = e.line();
            err.attr("column") = e.column();
            PyErr_SetObject(parse_exc, err.ptr());
        }
    });

    py::class_<BiPoly>(m, "BiPoly")
        .def(py::init([](const std::string& text) { return parse_poly(text); }), py::arg("text"))
        .def_static("x", &BiPoly::x)
        .def_static("y", &BiPoly::y)
        .def("deg_y", &BiPoly::deg_y)
        .def("deg_x", &BiPoly::deg_x)
        .def("is_zero", &BiPoly::is_zero)
        .def("terms",
             [](const BiPoly& p) {
                 py::dict d;
                 auto fractions = py::module_::import("fractions");
                 for (const auto& [mono, c] : p.terms())
                     d[py::make_tuple(mono.x, mono.y)] =
                         fractions.attr("Fraction")(c.get_str());
                 return d;
             })
        .def("__add__", [](const BiPoly& a, const BiPoly& b) { return a + b; })
        .def("__sub__", [](const BiPoly& a, const BiPoly& b) { return a - b; })
        .def("__mul__", [](const BiPoly& a, const BiPoly& b) { return a * b; })
        .def("__neg__", [](const BiPoly& a) { return -a; })
        .def("__pow__", [](const BiPoly& a, int e) { return a.pow(e); })
        .def("__eq__", [](const BiPoly& a, const BiPoly& b) { return a == b; })
        .def("__str__", &BiPoly::to_string)
        .def("__repr__", [](const BiPoly& p) { return "BiPoly('" + p.to_string() + "')"; });

    py::class_<NewtonDiagram>(m, "NewtonDiagram")
        .def(py::init(&diagram_from_segments), py::arg("segments"),
             py::arg("shift") = std::pair<std::int64_t, std::int64_t>{0, 0})
        .def_property_readonly("segments",
                               [](const NewtonDiagram& d) {
                                   py::list out;
                                   for (const auto& s : d.segments())
                                       out.append(py::make_tuple(ext_to_py(s.length), ext_to_py(s.height)));
                                   return out;
                               })
        .def_property_readonly("shift", [](const NewtonDiagram& d) { return py::make_tuple(d.shift().x, d.shift().y); })
        .def("vertices",
             [](const NewtonDiagram& d) {
                 py::list out;
                 for (const auto& v : d.vertices()) out.append(py::make_tuple(v.x, v.y));
                 return out;
             })
        .def("to_json", [](const NewtonDiagram& d) { return json_to_py(diagram_to_json(d)); })
        .def("render_svg", [](const NewtonDiagram& d) { return render(d, RenderFormat::Svg); })
        .def("render_ascii", [](const NewtonDiagram& d) { return render(d, RenderFormat::Ascii); })
        .def("__add__", &minkowski_sum)
        .def("__sub__", &diagram_difference)
        .def("__eq__", [](const NewtonDiagram& a, const NewtonDiagram& b) { return a == b; })
        .def("__str__", &NewtonDiagram::to_string)
        .def("__repr__", [](const NewtonDiagram& d) { return "NewtonDiagram('" + d.to_string() + "')"; });

    m.def("minkowski_sum", &minkowski_sum, py::arg("a"), py::arg("b"));
    m.def("diagram_difference", &diagram_difference, py::arg("a"), py::arg("b"));
    m.def("parse_poly", [](const std::string& s) { return parse_poly(s); }, py::arg("text"));
    m.def("jacobian_det", &jacobian_det, py::arg("g"), py::arg("f"));
    m.def(
        "intersection_multiplicity",
        [](const BiPoly& f, const BiPoly& h) { return ext_to_py(intersection_multiplicity(f, h)); }, py::arg("f"),
        py::arg("h"), "Local intersection multiplicity at the origin; 'inf' for a common component.");
    m.def("milnor_number", &milnor_number, py::arg("f"));
    m.def("newton_diagram", [](const BiPoly& f) {
        std::vector<LatticePoint> pts;
        for (const auto& [mono, c] : f.terms()) pts.push_back({mono.x, mono.y});
        return diagram_from_support(pts);
    });

    m.def("semigroup_of", [](const BiPoly& f) { return semigroup_of(f).gens(); }, py::arg("f"));
    m.def("characteristic_roots", &characteristic_roots, py::arg("f"));
    m.def("approximate_root", &approximate_root, py::arg("f"), py::arg("p"));
    m.def("char_to_semigroup", [](const std::vector<std::int64_t>& b) { return char_to_semigroup(CharSequence(b)).gens(); });
    m.def("semigroup_to_char", [](const std::vector<std::int64_t>& g) { return semigroup_to_char(Semigroup(g)).values(); });
    m.def("milnor_from_semigroup", [](const std::vector<std::int64_t>& g) { return milnor_from_semigroup(Semigroup(g)); });

    m.def("jnd_formula", [](const std::vector<std::int64_t>& g, int k) { return jnd_formula(Semigroup(g), k); },
          py::arg("semigroup"), py::arg("k"));
    m.def("jnd_family", [](const std::vector<std::int64_t>& g) { return jnd_family(Semigroup(g)).diagrams; },
          py::arg("semigroup"));
    m.def(
        "jacobian_invariants",
        [](const std::vector<std::int64_t>& g, int k) {
            py::list out;
            for (const auto& r : jacobian_invariants(Semigroup(g), k)) out.append(rational_to_py(r));
            return out;
        },
        py::arg("semigroup"), py::arg("k"), "Inclinations as (numerator, denominator) pairs.");
    m.def("recover_semigroup", [](const std::vector<NewtonDiagram>& fam) { return recover_semigroup(fam).gens(); },
          py::arg("family"));

    m.def(
        "puiseux_expand",
        [](const BiPoly& f, std::int64_t num, std::int64_t den) {
            py::list out;
            for (const auto& s : puiseux_expand(f, Rational(num, den))) {
                py::list terms;
                for (const auto& t : s.terms) terms.append(py::make_tuple(rational_to_py(t.exponent), t.coeff));
                out.append(terms);
            }
            return out;
        },
        py::arg("f"), py::arg("depth_num"), py::arg("depth_den") = 1,
        "Roots through the origin as lists of ((num, den), coefficient) terms.");
    m.def("jnd_oracle", [](const BiPoly& f, int k) { return jnd_oracle(f, k); }, py::arg("f"), py::arg("k"));
    m.def(
        "verify_decomposition",
        [](const BiPoly& f, int k, std::optional<BiPoly> root) {
            const VerificationReport rep = root ? verify_decomposition(f, k, *root) : verify_decomposition(f, k);
            return json_to_py(rep.to_json());
        },
        py::arg("f"), py::arg("k"), py::arg("root") = py::none());
    m.def("numerically_irreducible", [](const BiPoly& f) { return numerically_irreducible(f); }, py::arg("f"));
}
