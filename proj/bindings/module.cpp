#include "recipstab/control.hpp"
#include "recipstab/counterexample.hpp"
#include "recipstab/funceq.hpp"
#include "recipstab/hyers.hpp"
#include "recipstab/interval.hpp"
#include "recipstab/rational.hpp"
#include "recipstab/report.hpp"
#include "recipstab/valuation.hpp"
#include "recipstab/version.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace recipstab;

// Rationals cross the boundary as exact "num/den" strings; Python callers
// can hand them to fractions.Fraction unchanged.
namespace {

Rational rat(const std::string& s) { return parse_rational(s); }
std::string str(const Rational& q) { return format_rational(q); }

py::dict norm_dict(const NormValue& n, const ValuationSpec& v) {
    py::dict d;
    Json j = norm_json(n, v);
    d["value"] = j.at("value").get<std::string>();
    if (j.contains("annotation")) d["annotation"] = j.at("annotation").get<std::string>();
    return d;
}

}  // namespace

PYBIND11_MODULE(_recipstab, mod) {
    mod.doc() = "exact-arithmetic verification of reciprocal-nonic and "
                "reciprocal-decic stability";
    mod.attr("__version__") = kToolkitVersion;

    py::enum_<EquationKind>(mod, "EquationKind")
        .value("nonic", EquationKind::Nonic)
        .value("decic", EquationKind::Decic);

    py::enum_<CoefficientPolicy>(mod, "CoefficientPolicy")
        .value("corrected", CoefficientPolicy::Corrected)
        .value("printed", CoefficientPolicy::Printed);

    py::enum_<Direction>(mod, "Direction")
        .value("contract", Direction::Contract)
        .value("expand", Direction::Expand);

    mod.def("equation_from_string", &equation_from_string);
    mod.def("policy_from_string", &policy_from_string);

    py::class_<ValuationSpec>(mod, "ValuationSpec")
        .def_static("archimedean", &ValuationSpec::archimedean)
        .def_static("padic", &ValuationSpec::padic, py::arg("p"))
        .def_static("from_name", &ValuationSpec::from_name, py::arg("name"))
        .def("is_padic", &ValuationSpec::is_padic)
        .def("name", &ValuationSpec::name)
        .def("__repr__",
             [](const ValuationSpec& v) { return "ValuationSpec(" + v.name() + ")"; });

    mod.def(
        "norm",
        [](const std::string& x, const ValuationSpec& v) {
            return str(norm(rat(x), v).value);
        },
        py::arg("x"), py::arg("valuation"),
        "norm of an exact rational in the given valued field, as num/den");

    py::class_<RootMapping>(mod, "RootMapping")
        .def_static("exact", &RootMapping::exact, py::arg("kind"))
        .def("eval", [](const RootMapping& m, const std::string& x) {
            return str(m.eval(rat(x)));
        })
        .def("base_at", [](const RootMapping& m, const std::string& x) {
            return str(m.base_at(rat(x)));
        });

    py::class_<FinitePerturbation>(mod, "FinitePerturbation")
        .def(py::init([](const std::map<std::string, std::string>& table) {
            FinitePerturbation pert;
            for (const auto& [point, value] : table)
                pert.deviation[rat(point)] = rat(value);
            return pert;
        }))
        .def("mapping", &FinitePerturbation::mapping, py::arg("kind"));

    mod.def(
        "delta",
        [](EquationKind kind, CoefficientPolicy policy, const RootMapping& m,
           const std::string& x, const std::string& y) {
            return str(delta(EquationTraits::of(kind), policy, m, rat(x), rat(y)));
        },
        py::arg("kind"), py::arg("policy"), py::arg("mapping"), py::arg("x"),
        py::arg("y"), "the difference operator, exactly");

    mod.def(
        "collapse_diagonal",
        [](EquationKind kind, const RootMapping& m, const std::string& x) {
            return str(collapse_diagonal(EquationTraits::of(kind), m, rat(x)));
        },
        py::arg("kind"), py::arg("mapping"), py::arg("x"));

    py::class_<ControlFunction>(mod, "ControlFunction")
        .def_static("constant",
                    [](const std::string& eps) {
                        return ControlFunction::constant(rat(eps));
                    })
        .def_static("sum_powers",
                    [](const std::string& eps, const std::string& q) {
                        return ControlFunction::sum_powers(rat(eps), rat(q));
                    })
        .def_static("product_powers",
                    [](const std::string& eps, const std::string& r,
                       const std::string& s) {
                        return ControlFunction::product_powers(rat(eps), rat(r),
                                                               rat(s));
                    })
        .def_static("mixed_product_sum",
                    [](const std::string& eps, const std::string& q) {
                        return ControlFunction::mixed_product_sum(rat(eps), rat(q));
                    })
        .def("degree", [](const ControlFunction& c) { return str(c.degree()); })
        .def("diagonal_multiplicity", &ControlFunction::diagonal_multiplicity)
        .def("describe", &ControlFunction::describe)
        .def("evaluate", [](const ControlFunction& c, const std::string& x,
                            const std::string& y, const ValuationSpec& v) {
            return str(c.evaluate(rat(x), rat(y), v));
        });

    mod.def(
        "check_vanishing",
        [](const ControlFunction& c, const ValuationSpec& v, Direction p,
           EquationKind kind) {
            return condition_json(check_vanishing(c, v, p, kind)).dump();
        },
        py::arg("control"), py::arg("valuation"), py::arg("direction"),
        py::arg("kind"), "JSON record of the vanishing-condition check");

    mod.def("choose_direction", &choose_direction, py::arg("control"),
            py::arg("valuation"), py::arg("kind"));

    mod.def(
        "approximant",
        [](const RootMapping& m, const std::string& x, Direction p, int K,
           EquationKind kind, const ControlFunction& c, const ValuationSpec& v,
           int horizon) {
            const ApproximantEstimate a = approximant(m, rat(x), p, K, kind, c, v,
                                                      horizon);
            py::dict d;
            d["x"] = str(a.x);
            d["iterations"] = a.iterations;
            d["value"] = str(a.value);
            d["tail_bound"] = norm_dict(a.tail_bound, v);
            d["converged"] = a.converged;
            return d;
        },
        py::arg("mapping"), py::arg("x"), py::arg("direction"), py::arg("iterations"),
        py::arg("kind"), py::arg("control"), py::arg("valuation"),
        py::arg("horizon") = kDefaultHorizon);

    mod.def(
        "stability_bound",
        [](const std::string& x, const ControlFunction& c, const ValuationSpec& v,
           Direction p, EquationKind kind, int horizon) {
            return str(stability_bound(rat(x), c, v, p, kind, horizon).value);
        },
        py::arg("x"), py::arg("control"), py::arg("valuation"), py::arg("direction"),
        py::arg("kind"), py::arg("horizon") = kDefaultHorizon);

    mod.def(
        "uniqueness_check",
        [](const RootMapping& m, const std::string& x, Direction p, int K1, int K2,
           EquationKind kind, const ControlFunction& c, const ValuationSpec& v,
           int horizon) {
            return uniqueness_check(m, rat(x), p, K1, K2, kind, c, v, horizon);
        },
        py::arg("mapping"), py::arg("x"), py::arg("direction"), py::arg("k1"),
        py::arg("k2"), py::arg("kind"), py::arg("control"), py::arg("valuation"),
        py::arg("horizon") = kDefaultHorizon);

    mod.def(
        "measured_constant_envelope",
        [](const FinitePerturbation& pert, EquationKind kind, const std::string& x,
           Direction p, const ValuationSpec& v) {
            return measured_constant_envelope(pert, kind, rat(x), p, v);
        },
        py::arg("perturbation"), py::arg("kind"), py::arg("x"), py::arg("direction"),
        py::arg("valuation"));

    mod.def(
        "audit_standard_suite",
        [](const ValuationSpec& v, const std::string& x) {
            Json arr = Json::array();
            for (const BoundAuditEntry& e : audit_standard_suite(v, rat(x)))
                arr.push_back(audit_json(e));
            return arr.dump();
        },
        py::arg("valuation"), py::arg("x"),
        "JSON array of stated-vs-computed bound audits");

    py::class_<GajdaParams>(mod, "GajdaParams")
        .def_static("make", [](EquationKind kind, const std::string& level) {
            return GajdaParams::make(kind, rat(level));
        });

    mod.def("series_eval", [](const GajdaParams& params, const std::string& x) {
        const SeriesValue sv = series_eval(params, rat(x));
        py::dict d;
        d["x"] = str(sv.x);
        d["active_terms"] = sv.active_terms;
        d["value"] = str(sv.value);
        return d;
    });
    mod.def("series_bound", [](const GajdaParams& params) {
        return str(series_bound(params));
    });
    mod.def("rhs_constant", [](const GajdaParams& params) {
        return str(rhs_constant(params));
    });

    mod.def(
        "delta_series",
        [](const GajdaParams& params, const std::string& x, const std::string& y,
           unsigned precision_bits) {
            const CertifiedInterval ci =
                delta_series(params, rat(x), rat(y), precision_bits);
            py::dict d;
            d["lower"] = str(ci.lower);
            d["upper"] = str(ci.upper);
            d["conclusive"] = ci.conclusive;
            if (!ci.reason.empty()) d["reason"] = ci.reason;
            return d;
        },
        py::arg("params"), py::arg("x"), py::arg("y"),
        py::arg("precision_bits") = 128u);

    mod.def(
        "nonstability_witness",
        [](const GajdaParams& params, const std::string& alpha) {
            const Witness w = nonstability_witness(params, rat(alpha));
            py::dict d;
            d["alpha"] = str(w.alpha);
            d["m"] = w.m;
            d["x"] = str(w.x);
            d["g_of_x"] = str(w.g_of_x);
            d["envelope"] = str(w.envelope);
            d["threshold"] = str(w.threshold);
            return d;
        },
        py::arg("params"), py::arg("alpha"));

    mod.def(
        "nth_root_enclosure",
        [](const std::string& value, unsigned n, unsigned bits) {
            const RationalInterval iv = nth_root_enclosure(rat(value), n, bits);
            return py::make_tuple(str(iv.lo), str(iv.hi));
        },
        py::arg("value"), py::arg("n"), py::arg("bits") = 128u);
}
