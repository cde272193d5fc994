#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bandspec/errors.hpp"
#include "bandspec/random_gen.hpp"
#include "bandspec/spectral.hpp"
#include "bandspec/toda.hpp"
#include "bandspec/tridiag.hpp"

namespace py = pybind11;
using namespace bandspec;

namespace {

BandedHermitian banded_from_blocks(int k, int dim,
                                   const std::vector<Matrix>& diag,
                                   const std::vector<Matrix>& sub) {
  return BandedHermitian(k, dim, diag, sub);
}

MatrixMeasure measure_from_blocks(int k, const std::vector<double>& points,
                                  const std::vector<Matrix>& weights) {
  return MatrixMeasure::from_weights(k, points, weights);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "spectral maps, band reductions, and Toda flows for Hermitian "
            "block tridiagonal matrices";

  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError",
                                         PyExc_ArithmeticError);

  py::class_<BandedHermitian>(m, "BandedHermitian")
      .def(py::init(&banded_from_blocks), py::arg("k"), py::arg("n"),
           py::arg("diag"), py::arg("sub"))
      .def_property_readonly("k", &BandedHermitian::k)
      .def_property_readonly("dim", &BandedHermitian::dim)
      .def_property_readonly("blocks", &BandedHermitian::blocks)
      .def_property_readonly("ell", &BandedHermitian::ell)
      .def("a", &BandedHermitian::a, py::arg("j"))
      .def("b", &BandedHermitian::b, py::arg("j"))
      .def("dense", &BandedHermitian::dense);

  py::class_<MeasureAtom>(m, "MeasureAtom")
      .def_readonly("x", &MeasureAtom::x)
      .def_readonly("weight", &MeasureAtom::weight)
      .def_readonly("factor", &MeasureAtom::factor);

  py::class_<MatrixMeasure>(m, "MatrixMeasure")
      .def(py::init(&measure_from_blocks), py::arg("k"), py::arg("points"),
           py::arg("weights"))
      .def_property_readonly("k", &MatrixMeasure::k)
      .def("__len__", &MatrixMeasure::size)
      .def("atom", &MatrixMeasure::atom, py::arg("j"),
           py::return_value_policy::reference_internal)
      .def("total_rank", &MatrixMeasure::total_rank)
      .def("total_mass", &MatrixMeasure::total_mass);

  py::class_<MeasureClassReport>(m, "MeasureClassReport")
      .def_readonly("member", &MeasureClassReport::member)
      .def_readonly("dim", &MeasureClassReport::dim)
      .def_readonly("n", &MeasureClassReport::n)
      .def_readonly("ell", &MeasureClassReport::ell)
      .def_readonly("krylov_rank", &MeasureClassReport::krylov_rank)
      .def_readonly("mass_error", &MeasureClassReport::mass_error)
      .def_readonly("violations", &MeasureClassReport::violations);

  py::class_<EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("comparable", &EquivalenceReport::comparable)
      .def_readonly("agree", &EquivalenceReport::agree)
      .def_readonly("early_termination", &EquivalenceReport::early_termination)
      .def_readonly("lanczos_steps", &EquivalenceReport::lanczos_steps)
      .def_readonly("lanczos_vs_householder",
                    &EquivalenceReport::lanczos_vs_householder)
      .def_readonly("lanczos_vs_inverse",
                    &EquivalenceReport::lanczos_vs_inverse)
      .def_readonly("householder_vs_inverse",
                    &EquivalenceReport::householder_vs_inverse);

  m.def("validate_banded", &validate_banded, py::arg("m"), py::arg("k"),
        py::arg("tol") = kRankTol);
  m.def("banded_violations", &banded_violations, py::arg("m"), py::arg("k"),
        py::arg("tol") = kRankTol);
  m.def(
      "validate_measure",
      [](const MatrixMeasure& mu, int expected_dim, double tol) {
        return validate_measure(mu, expected_dim, tol);
      },
      py::arg("mu"), py::arg("expected_dim") = -1, py::arg("tol") = kRankTol);
  m.def("spectral_map", &spectral_map, py::arg("j"),
        py::arg("merge_tol") = kMergeTol, py::arg("rank_tol") = kRankTol);
  m.def("inverse_spectral_map", &inverse_spectral_map, py::arg("mu"),
        py::arg("tol") = kRankTol);
  m.def(
      "householder_blocktridiag",
      [](const Matrix& a, int k, double tol) {
        return householder_blocktridiag(a, k, tol);
      },
      py::arg("a"), py::arg("k"), py::arg("tol") = kRankTol);
  m.def(
      "block_lanczos",
      [](const Matrix& a, int k, bool reorth, double tol) {
        LanczosResult r = block_lanczos_leading(a, k, reorth, tol);
        py::dict d;
        d["completed"] = r.completed;
        d["early_termination"] = r.early_termination;
        d["steps"] = r.steps;
        if (r.completed) d["matrix"] = r.banded();
        return d;
      },
      py::arg("a"), py::arg("k"), py::arg("reorth") = true,
      py::arg("tol") = kRankTol);
  m.def("equivalence_check", &equivalence_check, py::arg("a"), py::arg("k"),
        py::arg("tol") = kEquivTol, py::arg("rank_tol") = kRankTol);
  m.def(
      "toda_qr_flow",
      [](const BandedHermitian& x0, double t, double tol) {
        TodaSolution sol = toda_qr_flow(x0, t, tol);
        py::dict d;
        d["x"] = sol.x;
        d["eig_drift"] = sol.eig_drift;
        d["measure"] = sol.measure;
        return d;
      },
      py::arg("x0"), py::arg("t"), py::arg("tol") = kRankTol);
  m.def("toda_spectral_flow", &toda_spectral_flow, py::arg("x0"), py::arg("t"),
        py::arg("tol") = kRankTol);
  m.def("toda_rk4", &toda_rk4, py::arg("x0"), py::arg("t"),
        py::arg("dt") = 1e-3);
  m.def("evolve_measure", &evolve_measure, py::arg("mu"), py::arg("t"),
        py::arg("tol") = kRankTol);
  m.def(
      "random_banded",
      [](int k, int dim, unsigned long long seed) {
        Rng rng(seed);
        return random_banded(k, dim, rng);
      },
      py::arg("k"), py::arg("dim"), py::arg("seed"));
  m.def(
      "random_measure",
      [](int k, int dim, unsigned long long seed) {
        Rng rng(seed);
        return random_measure(k, dim, rng);
      },
      py::arg("k"), py::arg("dim"), py::arg("seed"));
  m.def(
      "random_hermitian",
      [](int dim, unsigned long long seed) {
        Rng rng(seed);
        return random_hermitian(dim, rng);
      },
      py::arg("dim"), py::arg("seed"));
}
