#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgr/involution.hpp"
#include "qgr/quantum_ring.hpp"
#include "qgr/ring_checks.hpp"
#include "qgr/spectrum.hpp"

namespace py = pybind11;
using namespace qgr;

namespace {

// pybind11 holders cannot be pointers to const.
using Ctx = std::shared_ptr<Grassmannian>;

Ctx holder(const GrassmannianPtr& g) { return std::const_pointer_cast<Grassmannian>(g); }

CohomClass to_class(const GrassmannianPtr& g, const py::object& x) {
    if (py::isinstance<CohomClass>(x)) return x.cast<CohomClass>();
    if (py::isinstance<py::str>(x)) return parse_class(g, x.cast<std::string>());
    return CohomClass::of(g, g->partition(x.cast<std::vector<int>>()));
}

py::dict report_dict(const Report& r) {
    py::list failures;
    for (const auto& f : r.failures) failures.append(py::dict(py::arg("where") = f.where, py::arg("lhs") = f.lhs,
                                                              py::arg("rhs") = f.rhs));
    py::dict d(py::arg("suite") = r.suite, py::arg("k") = r.k, py::arg("n") = r.n, py::arg("checked") = r.checked,
               py::arg("failures") = failures, py::arg("ok") = r.ok());
    if (r.max_deviation) d["max_deviation"] = *r.max_deviation;
    return d;
}

py::list verify(const Ctx& g, const std::string& suite, std::uint64_t seed, std::size_t samples,
                double tol, std::size_t random_classes) {
    if (suite != "all" && suite != "ring" && suite != "involution" && suite != "spectrum")
        throw std::invalid_argument("unknown suite '" + suite + "'");
    std::vector<Report> reps;
    if (suite == "all" || suite == "ring") {
        reps.push_back(verify_commutativity(g));
        reps.push_back(verify_associativity(g, samples, seed));
        reps.push_back(verify_top_degree(g));
        reps.push_back(verify_pieri_consistency(g));
        reps.push_back(verify_giambelli(g));
        reps.push_back(verify_gw_symmetry(g, samples, seed));
        reps.push_back(verify_c_operator(g));
    }
    if (suite == "all" || suite == "involution") {
        reps.push_back(verify_involution_structure(g));
        reps.push_back(verify_lemma_bar_eq_hat_ck(g));
        reps.push_back(verify_theorem1(g, SampleMode::exhaustive, seed));
        reps.push_back(verify_eq1_and_for1(g));
        reps.push_back(verify_corollary(g, samples, seed));
    }
    if (suite == "all" || suite == "spectrum") {
        const SpectralData s = joint_eigenbasis(g, seed, tol);
        const auto probes = probe_classes(g, random_classes, seed);
        reps.push_back(verify_characters(s));
        reps.push_back(verify_conjugation(s));
        reps.push_back(verify_point_conjugation(s));
        reps.push_back(verify_sympos(s, probes, tol));
        reps.push_back(verify_vanishing(s, probes));
    }
    py::list out;
    for (const auto& r : reps) out.append(report_dict(r));
    return out;
}

}  // namespace

PYBIND11_MODULE(_qgr, m) {
    m.doc() = "Quantum cohomology of Grassmannians at q = 1";

    py::register_exception<DegenerateSpectrum>(m, "DegenerateSpectrum", PyExc_RuntimeError);
    py::register_exception<CacheMismatch>(m, "CacheMismatch", PyExc_RuntimeError);

    py::class_<Grassmannian, Ctx>(m, "Grassmannian")
        .def(py::init([](int k, int n) { return holder(Grassmannian::make(k, n)); }), py::arg("k"), py::arg("n"))
        .def_property_readonly("k", &Grassmannian::k)
        .def_property_readonly("n", &Grassmannian::n)
        .def_property_readonly("l", &Grassmannian::l)
        .def_property_readonly("dim", &Grassmannian::dim)
        .def("basis", [](const Grassmannian& g) {
            std::vector<std::vector<int>> out;
            for (const auto& p : g.basis()) out.push_back(p.trimmed());
            return out;
        })
        .def("__eq__", [](const Grassmannian& a, const Grassmannian& b) { return a == b; })
        .def("__repr__", [](const Grassmannian& g) {
            return "Grassmannian(" + std::to_string(g.k()) + ", " + std::to_string(g.n()) + ")";
        });

    py::class_<CohomClass>(m, "Class")
        .def(py::init([](const Ctx& g, const py::object& x) { return to_class(g, x); }),
             py::arg("ctx"), py::arg("value") = "")
        .def_property_readonly("ctx", [](const CohomClass& c) { return holder(c.ctx()); })
        .def("terms", [](const CohomClass& c) {
            py::dict d;
            for (auto [r, v] : c.terms()) d[py::tuple(py::cast(c.grassmannian().at(r).trimmed()))] = v;
            return d;
        })
        .def("is_zero", &CohomClass::is_zero)
        .def("__add__", [](const CohomClass& a, const CohomClass& b) { return a + b; })
        .def("__sub__", [](const CohomClass& a, const CohomClass& b) { return a - b; })
        .def("__mul__", [](const CohomClass& a, const CohomClass& b) { return a * b; })
        .def("__mul__", [](const CohomClass& a, Coeff c) { return class_scale(c, a); })
        .def("__rmul__", [](const CohomClass& a, Coeff c) { return class_scale(c, a); })
        .def("__eq__", [](const CohomClass& a, const CohomClass& b) { return a == b; })
        .def("__str__", &format_class)
        .def("__repr__", [](const CohomClass& c) { return "Class(" + format_class(c) + ")"; });

    m.def("mul", [](const CohomClass& a, const CohomClass& b) { return a * b; });
    m.def("bar", &qgr::bar);
    m.def("dual", &qgr::dual);
    m.def("cshift", &c_apply, py::arg("cls"), py::arg("j") = 1);
    m.def(
        "gw",
        [](const Ctx& g, const py::object& a, const py::object& b, const py::object& c) {
            auto part = [&](const py::object& x) {
                return py::isinstance<py::str>(x) ? parse_partition(*g, x.cast<std::string>())
                                                  : g->partition(x.cast<std::vector<int>>());
            };
            const GWRecord rec = gw_record(g, part(a), part(b), part(c));
            return py::make_tuple(rec.value, rec.degree_d ? py::cast(*rec.degree_d) : py::none());
        },
        py::arg("ctx"), py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("verify", &verify, py::arg("ctx"), py::arg("suite") = "all", py::arg("seed") = kDefaultSeed,
          py::arg("samples") = 1000, py::arg("tol") = kResidualTol, py::arg("random_classes") = 100);

    py::class_<SpectralData>(m, "Spectrum")
        .def_property_readonly("points",
                               [](const SpectralData& s) {
                                   std::vector<std::vector<Complex>> out;
                                   for (const auto& p : s.points) out.push_back(p.coords);
                                   return out;
                               })
        .def_readonly("residual", &SpectralData::residual)
        .def_readonly("seed", &SpectralData::seed)
        .def("evaluate", [](const SpectralData& s, const CohomClass& c) { return evaluate(c, s); })
        .def("to_json", &spectrum_to_json);
    m.def(
        "spectrum", [](const Ctx& g, std::uint64_t seed, double tol) { return joint_eigenbasis(g, seed, tol); }, py::arg("ctx"), py::arg("seed") = kDefaultSeed,
          py::arg("tol") = kResidualTol);
}
