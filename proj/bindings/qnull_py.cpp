#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qnull/certificate_io.hpp"
#include "qnull/constructor.hpp"
#include "qnull/obstruction.hpp"
#include "qnull/verifier.hpp"

namespace py = pybind11;
using namespace qnull;

namespace {

py::dict report_to_dict(const VerificationReport& r) {
    py::dict d;
    d["accepted"] = r.accepted;
    d["tol"] = r.tol;
    d["boundary_error"] = r.boundary_error;
    d["continuity_modulus"] = r.continuity_modulus;
    d["declared_mesh_bound"] = r.declared_mesh_bound;
    d["basepoint_drift"] = r.basepoint_drift;
    d["ring_windings"] = r.has_windings ? py::cast(r.ring_windings) : py::object(py::none());
    d["failures"] = r.failures;
    return d;
}

SampledLoop rp2_loop_from_triples(const std::vector<std::array<double, 3>>& points) {
    std::vector<SpacePoint> samples;
    samples.reserve(points.size());
    for (const auto& p : points)
        samples.push_back(SpacePoint::rp2(Complex(p[0], p[1]), p[2]));
    return make_loop(Space::RP2, std::move(samples));
}

} // namespace

PYBIND11_MODULE(_qnull, m) {
    m.doc() = "quantum-nullhomotopy certificates: construction, verification, and the "
              "determinant-winding obstruction";

    // base first: translators run newest-first, so the derived classes
    // must be registered after their base to win the match
    py::register_exception<Error>(m, "QnullError", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<MeshError>(m, "MeshError", PyExc_ArithmeticError);

    py::class_<Certificate>(m, "Certificate")
        .def_property_readonly("space", [](const Certificate& c) { return space_name(c.space); })
        .def_property_readonly("rings", [](const Certificate& c) { return c.grid.rings; })
        .def_property_readonly("angles", [](const Certificate& c) { return c.grid.angles; })
        .def_property_readonly("mesh_bound",
                               [](const Certificate& c) { return c.tolerances.mesh_bound; })
        .def_property_readonly("construction_log",
                               [](const Certificate& c) { return c.construction_log; })
        .def("__repr__", [](const Certificate& c) {
            return "<qnull.Certificate space=" + space_name(c.space) + " rings=" +
                   std::to_string(c.grid.rings) + " angles=" + std::to_string(c.grid.angles) + ">";
        });

    m.def("canonical_obstruction", &canonical_obstruction, py::arg("n"), py::arg("samples") = 256,
          "winding of det for the canonical loop s -> s I_n; equals n");
    m.def(
        "winding_number",
        [](const std::vector<Complex>& values) { return winding_number(values).winding; },
        py::arg("values"), "degree of a closed sequence of unit complex numbers");

    m.def(
        "construct_rp2_generator", [](int samples) {
            return build_rp2_certificate(rp2_generator_loop(samples));
        },
        py::arg("samples") = 256);
    m.def(
        "construct_rp2",
        [](const std::vector<std::array<double, 3>>& points, int samples) {
            BuildOptions opts;
            opts.samples = samples;
            return build_rp2_certificate(rp2_loop_from_triples(points), opts);
        },
        py::arg("points"), py::arg("samples") = 0,
        "certificate for a based RP2 loop given as [re, im, t] triples");
    m.def(
        "construct_wedge_commutator",
        [](int a_turns, int b_turns, int samples) {
            BuildOptions opts;
            opts.samples = samples;
            return build_wedge_commutator_certificate(a_turns, b_turns, opts);
        },
        py::arg("a_turns") = 1, py::arg("b_turns") = 1, py::arg("samples") = 0);

    m.def(
        "verify",
        [](const Certificate& cert, double tol) { return report_to_dict(verify(cert, tol)); },
        py::arg("certificate"), py::arg("tol") = kDefaultCertTol,
        "verify a certificate against its stored boundary loop");
    m.def("check_hom_laws", &check_hom_laws, py::arg("certificate"), py::arg("trials") = 1000,
          py::arg("seed") = 0x5eed5eedULL);
    m.def(
        "pushforward",
        [](const Certificate& cert, const std::string& map_name) {
            return pushforward_certificate(cert, space_map_from_name(map_name));
        },
        py::arg("certificate"), py::arg("map"), "map a certificate along collapseA/collapseB");
    m.def(
        "adversarial_suite",
        [](const std::string& space) {
            const AdversarialReport r = adversarial_suite(space_from_name(space));
            py::list cases;
            for (const AdversarialCase& c : r.cases) {
                py::dict d;
                d["name"] = c.name;
                d["expect_accept"] = c.expect_accept;
                d["accepted"] = c.accepted;
                d["failures"] = c.failures;
                cases.append(d);
            }
            py::dict out;
            out["cases"] = cases;
            out["all_as_expected"] = r.all_as_expected;
            return out;
        },
        py::arg("space"));

    m.def("save_certificate", &save_certificate, py::arg("certificate"), py::arg("path"));
    m.def("load_certificate", &load_certificate, py::arg("path"));
    m.def(
        "commutator_word", [](int a, int b) { return commutator_word(a, b); }, py::arg("a_turns"),
        py::arg("b_turns"), "reduced free-group word of the commutator; empty means trivial");

    m.def(
        "pairing_demo_ring_windings",
        [](int samples, int rings) {
            const DiskGrid<ComplexMatrix> grid = pairing_nullhomotopy_demo(samples, rings);
            std::vector<int> windings;
            for (int i = 1; i <= grid.rings; ++i) {
                std::vector<Complex> dets;
                dets.reserve(static_cast<size_t>(grid.angles));
                for (int k = 0; k < grid.angles; ++k) dets.push_back(det(grid.at(i, k)));
                windings.push_back(winding_number(dets).winding);
            }
            return windings;
        },
        py::arg("samples") = 256, py::arg("rings") = 64,
        "ring windings of the explicit U(2) disk extension of diag(s, conj s)");

    m.attr("__version__") = "0.1.0";
}
