#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "jumpform/adjunction.hpp"
#include "jumpform/bounds.hpp"
#include "jumpform/characteristic.hpp"
#include "jumpform/detector.hpp"
#include "jumpform/errors.hpp"
#include "jumpform/lattice.hpp"

namespace py = pybind11;
using namespace jumpform;

namespace pybind11::detail {

// cpp_int <-> python int, via the decimal string representation
template <>
struct type_caster<Int> {
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) return false;
        object s = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!s) {
            PyErr_Clear();
            return false;
        }
        value = Int(std::string(py::str(s)));
        return true;
    }

    static handle cast(const Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

// cpp_rational <-> fractions.Fraction (python ints also load)
template <>
struct type_caster<Rat> {
    PYBIND11_TYPE_CASTER(Rat, const_name("Fraction"));

    bool load(handle src, bool convert) {
        if (!src) return false;
        if (PyLong_Check(src.ptr())) {
            type_caster<Int> c;
            if (!c.load(src, convert)) return false;
            value = Rat(static_cast<Int&>(c));
            return true;
        }
        if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
        type_caster<Int> num, den;
        if (!num.load(src.attr("numerator"), convert) || !den.load(src.attr("denominator"), convert))
            return false;
        value = Rat(static_cast<Int&>(num), static_cast<Int&>(den));
        return true;
    }

    static handle cast(const Rat& v, return_value_policy policy, handle parent) {
        object fraction = module_::import("fractions").attr("Fraction");
        object num = reinterpret_steal<object>(
            type_caster<Int>::cast(numerator(v), policy, parent));
        object den = reinterpret_steal<object>(
            type_caster<Int>::cast(denominator(v), policy, parent));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

HomologyClass to_class(std::vector<Int> v) { return HomologyClass(std::move(v)); }

std::vector<Int> from_class(const HomologyClass& v) { return v.coords; }

BoundsCase case_from_string(const std::string& s) {
    if (s == "negative") return BoundsCase::NegativeSelfInt;
    if (s == "positive") return BoundsCase::PositiveSelfInt;
    throw MalformedInputError("case must be 'positive' or 'negative', got '" + s + "'");
}

std::string parity_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact intersection-form arithmetic, the adjunction identity, characteristic-sphere "
              "bounds, and a numerical complex-jump-point detector.";

    auto base = py::register_exception<Error>(m, "JumpformError");
    py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError", base);
    py::register_exception<MalformedInputError>(m, "MalformedInputError", base);
    py::register_exception<ParityError>(m, "ParityError", base);
    py::register_exception<InfeasibleGeometryError>(m, "InfeasibleGeometryError", base);
    py::register_exception<SizeLimitError>(m, "SizeLimitError", base);
    py::register_exception<UnsupportedClassificationError>(m, "UnsupportedClassificationError",
                                                           base);
    py::register_exception<NoSolutionError>(m, "NoSolutionError", base);
    py::register_exception<DegenerateFormError>(m, "DegenerateFormError", base);
    py::register_exception<DegenerateSurfaceError>(m, "DegenerateSurfaceError", base);
    py::register_exception<IdenticallyComplexError>(m, "IdenticallyComplexError", base);
    py::register_exception<RadiusUnusableError>(m, "RadiusUnusableError", base);
    py::register_exception<IoError>(m, "IoError", base);

    py::class_<IntegerForm>(m, "IntegerForm")
        .def(py::init([](const std::vector<std::vector<Int>>& rows) { return IntegerForm(rows); }),
             py::arg("gram"))
        .def_property_readonly("rank", &IntegerForm::rank)
        .def_property_readonly("gram", &IntegerForm::rows)
        .def("__eq__", [](const IntegerForm& a, const IntegerForm& b) { return a == b; })
        .def("__repr__", [](const IntegerForm& f) {
            return "IntegerForm(rank=" + std::to_string(f.rank()) + ")";
        });

    py::class_<Inertia>(m, "Inertia")
        .def_readonly("b_plus", &Inertia::b_plus)
        .def_readonly("b_minus", &Inertia::b_minus)
        .def_readonly("b_zero", &Inertia::b_zero)
        .def("signature", &Inertia::signature)
        .def("__eq__", [](const Inertia& a, const Inertia& b) { return a == b; })
        .def("__iter__",
             [](const Inertia& i) {
                 return py::iter(py::make_tuple(i.b_plus, i.b_minus, i.b_zero));
             })
        .def("__repr__", [](const Inertia& i) {
            return "Inertia(" + std::to_string(i.b_plus) + ", " + std::to_string(i.b_minus) +
                   ", " + std::to_string(i.b_zero) + ")";
        });

    m.def("pairing", [](const IntegerForm& q, std::vector<Int> x, std::vector<Int> y) {
        return pairing(q, to_class(std::move(x)), to_class(std::move(y)));
    });
    m.def("self_intersection", [](const IntegerForm& q, std::vector<Int> x) {
        return self_intersection(q, to_class(std::move(x)));
    });
    m.def("inertia", &inertia);
    m.def("determinant", &determinant);
    m.def("is_unimodular", &is_unimodular);
    m.def("parity", [](const IntegerForm& q) { return parity_string(parity(q)); });
    m.def("direct_sum", &direct_sum);
    m.def("diagonal_form", &diagonal_form, py::arg("plus"), py::arg("minus"));
    m.def("hyperbolic_form", &hyperbolic_form);
    m.def("e8_form", &e8_form);
    m.def("neg_e8_form", &neg_e8_form);

    py::class_<CanonicalDecomposition>(m, "CanonicalDecomposition")
        .def_property_readonly("parity",
                               [](const CanonicalDecomposition& d) {
                                   return parity_string(d.form_parity);
                               })
        .def_readonly("diag_plus", &CanonicalDecomposition::diag_plus)
        .def_readonly("diag_minus", &CanonicalDecomposition::diag_minus)
        .def_readonly("e8_blocks", &CanonicalDecomposition::e8_blocks)
        .def_readonly("h_blocks", &CanonicalDecomposition::h_blocks)
        .def_readonly("representative", &CanonicalDecomposition::representative)
        .def("description", &CanonicalDecomposition::description)
        .def("__repr__", [](const CanonicalDecomposition& d) {
            return "CanonicalDecomposition(" + d.description() + ")";
        });
    m.def("classify_indefinite_unimodular", &classify_indefinite_unimodular);

    py::class_<CharacteristicCoset>(m, "CharacteristicCoset")
        .def_property_readonly("base",
                               [](const CharacteristicCoset& c) { return from_class(c.base); })
        .def_readonly("unimodular", &CharacteristicCoset::unimodular)
        .def_property_readonly("kernel_basis", [](const CharacteristicCoset& c) {
            std::vector<std::vector<Int>> out;
            for (const auto& k : c.kernel_basis) out.push_back(from_class(k));
            return out;
        });

    m.def("is_characteristic", [](const IntegerForm& q, std::vector<Int> xi) {
        return is_characteristic(q, to_class(std::move(xi)));
    });
    m.def("find_characteristic", &find_characteristic);
    m.def("enumerate_characteristic", [](const IntegerForm& q, int box) {
        std::vector<std::vector<Int>> out;
        for (const auto& xi : enumerate_characteristic(q, box)) out.push_back(from_class(xi));
        return out;
    });

    py::class_<C1Report>(m, "C1Report")
        .def_readonly("characteristic", &C1Report::characteristic)
        .def_readonly("wu_identity", &C1Report::wu_identity);
    m.def("validate_c1_almost_complex", [](const IntegerForm& q, std::vector<Int> c1) {
        return validate_c1_almost_complex(q, to_class(std::move(c1)));
    });

    py::class_<SurfaceGeometry>(m, "SurfaceGeometry")
        .def(py::init<Int, Int, Int>(), py::arg("genus"), py::arg("c1f"), py::arg("fc"))
        .def_readonly("genus", &SurfaceGeometry::genus)
        .def_readonly("c1f", &SurfaceGeometry::c1f)
        .def_readonly("fc", &SurfaceGeometry::fc);

    m.def("jump_count", &jump_count, py::arg("genus"), py::arg("ff"), py::arg("c1f"));
    m.def("genus_from", &genus_from, py::arg("ff"), py::arg("c1f"), py::arg("fc"));
    m.def("self_int_from_geometry", &self_int_from_geometry);
    m.def("pairing_from_geometry", &pairing_from_geometry);

    py::class_<ReconstructionResult>(m, "ReconstructionResult")
        .def_readonly("form", &ReconstructionResult::form)
        .def_readonly("unimodular", &ReconstructionResult::unimodular);
    m.def(
        "reconstruct_gram",
        [](const std::vector<SurfaceGeometry>& basis,
           const std::map<std::pair<std::size_t, std::size_t>, SurfaceGeometry>& pairs) {
            ReconstructionInput in;
            in.basis = basis;
            in.pairs = pairs;
            return reconstruct_gram(in);
        },
        py::arg("basis"), py::arg("pairs"));

    m.def("chern_eval", [](const IntegerForm& q, std::vector<Int> c1, std::vector<Int> f) {
        return chern_eval(q, to_class(std::move(c1)), to_class(std::move(f)));
    });
    m.def("lai_dim4_check", &lai_dim4_check, py::arg("genus"), py::arg("ff"), py::arg("c1f"),
          py::arg("count"));

    py::class_<RationalInterval>(m, "RationalInterval")
        .def_readonly("lo", &RationalInterval::lo)
        .def_readonly("hi", &RationalInterval::hi)
        .def_readonly("empty", &RationalInterval::empty)
        .def("contains", &RationalInterval::contains)
        .def("__repr__", [](const RationalInterval& iv) {
            if (iv.empty) return std::string("RationalInterval(empty)");
            return "RationalInterval(" + numerator(iv.lo).str() + "/" + denominator(iv.lo).str() +
                   ", " + numerator(iv.hi).str() + "/" + denominator(iv.hi).str() + ")";
        });

    py::class_<IntegerRange>(m, "IntegerRange")
        .def_readonly("lo", &IntegerRange::lo)
        .def_readonly("hi", &IntegerRange::hi)
        .def_readonly("empty", &IntegerRange::empty);

    m.def("jump_bounds",
          [](const Int& bp, const Int& bm, const Int& c1f, const std::string& which) {
              return jump_bounds(bp, bm, c1f, case_from_string(which));
          },
          py::arg("b_plus"), py::arg("b_minus"), py::arg("c1f"), py::arg("case"));
    m.def("integer_feasible", &integer_feasible, py::arg("interval"),
          py::arg("require_nonnegative") = false);
    m.def("check_bounds",
          [](const Int& n, const Int& bp, const Int& bm, const Int& c1f, const std::string& which) {
              return check_bounds(n, bp, bm, c1f, case_from_string(which));
          },
          py::arg("n"), py::arg("b_plus"), py::arg("b_minus"), py::arg("c1f"), py::arg("case"));
    m.def("char_sphere_selfint_bounds",
          [](const Int& bp, const Int& bm, const std::string& which) {
              return char_sphere_selfint_bounds(bp, bm, case_from_string(which));
          },
          py::arg("b_plus"), py::arg("b_minus"), py::arg("case"));

    py::class_<ParamSurface>(m, "ParamSurface")
        .def_readonly("name", &ParamSurface::name)
        .def_property_readonly("chart_count",
                               [](const ParamSurface& s) { return s.charts.size(); })
        .def("__repr__",
             [](const ParamSurface& s) { return "ParamSurface(" + s.name + ")"; });

    py::class_<AlmostComplexStructure>(m, "AlmostComplexStructure")
        .def_static("standard", &AlmostComplexStructure::standard)
        .def_static(
            "from_field",
            [](py::function field, double tol) {
                return AlmostComplexStructure::from_field(
                    [field](const Vec4& p) {
                        py::gil_scoped_acquire gil;
                        return field(p).cast<Mat4>();
                    },
                    tol);
            },
            py::arg("field"), py::arg("tol") = 1e-8)
        .def("at", &AlmostComplexStructure::at);

    py::class_<JumpPoint>(m, "JumpPoint")
        .def_readonly("chart", &JumpPoint::chart)
        .def_readonly("u", &JumpPoint::u)
        .def_readonly("v", &JumpPoint::v)
        .def_readonly("location", &JumpPoint::location)
        .def_readonly("index", &JumpPoint::index)
        .def_readonly("residual", &JumpPoint::residual)
        .def("__repr__", [](const JumpPoint& p) {
            return "JumpPoint(chart=" + std::to_string(p.chart) + ", index=" +
                   std::to_string(p.index) + ")";
        });

    py::class_<DetectionReport>(m, "DetectionReport")
        .def_readonly("points", &DetectionReport::points)
        .def_readonly("total_index", &DetectionReport::total_index)
        .def_readonly("dropped_seeds", &DetectionReport::dropped_seeds)
        .def_readonly("dropped_points", &DetectionReport::dropped_points)
        .def_readonly("zero_fraction", &DetectionReport::zero_fraction)
        .def_readonly("grid_n", &DetectionReport::grid_n)
        .def_readonly("tol", &DetectionReport::tol);

    // the GIL is released during detector runs so user-supplied J fields can
    // be evaluated from worker threads
    m.def("defect", &defect, py::arg("surface"), py::arg("j"), py::arg("chart"), py::arg("u"),
          py::arg("v"), py::call_guard<py::gil_scoped_release>());
    m.def("find_jump_points", &find_jump_points, py::arg("surface"), py::arg("j"),
          py::arg("grid_n"), py::arg("tol") = 1e-10, py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("index_at", &index_at, py::arg("surface"), py::arg("j"), py::arg("point"),
          py::arg("radius"), py::call_guard<py::gil_scoped_release>());
    m.def("total_algebraic_count", &total_algebraic_count, py::arg("surface"), py::arg("j"),
          py::arg("grid_n"), py::arg("tol") = 1e-10, py::call_guard<py::gil_scoped_release>());

    m.def("clifford_torus", &clifford_torus);
    m.def("round_sphere", &round_sphere);
    m.def("holomorphic_graph", &holomorphic_graph, py::arg("degree"));
    m.def("graph_of_zbar", &graph_of_zbar);

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
