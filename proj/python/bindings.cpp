#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbertrand/error.hpp"
#include "qbertrand/family.hpp"
#include "qbertrand/pct.hpp"
#include "qbertrand/radial.hpp"
#include "qbertrand/second_class.hpp"
#include "qbertrand/spectrum.hpp"
#include "qbertrand/verification.hpp"

namespace py = pybind11;
using namespace qbertrand;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bound-state potentials from similarity transformations of the Euler operator";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::enum_<Sign>(m, "Sign").value("plus", Sign::plus).value("minus", Sign::minus);
  py::enum_<AlphaClass>(m, "AlphaClass")
      .value("coulomb", AlphaClass::coulomb)
      .value("oscillator", AlphaClass::oscillator)
      .value("not_constant_independent", AlphaClass::not_constant_independent);
  py::enum_<PctForm>(m, "PctForm")
      .value("canonical", PctForm::canonical)
      .value("tabulated", PctForm::tabulated);

  py::class_<PhysicalConstants>(m, "PhysicalConstants")
      .def(py::init<>())
      .def_readwrite("hbar", &PhysicalConstants::hbar)
      .def_readwrite("mass", &PhysicalConstants::mass)
      .def_readwrite("coulomb_strength", &PhysicalConstants::coulomb_strength)
      .def_readwrite("omega", &PhysicalConstants::omega);

  py::class_<FamilyParams>(m, "FamilyParams")
      .def(py::init<>())
      .def(py::init([](double alpha, double a, double b, double c, double epsilon, double l) {
             FamilyParams p;
             p.alpha = alpha, p.a = a, p.b = b, p.c = c, p.epsilon = epsilon, p.l = l;
             return p;
           }),
           py::arg("alpha"), py::arg("a"), py::arg("b") = 0.0, py::arg("c") = 0.0,
           py::arg("epsilon") = 0.0, py::arg("l") = 0.0)
      .def_readwrite("alpha", &FamilyParams::alpha)
      .def_readwrite("a", &FamilyParams::a)
      .def_readwrite("b", &FamilyParams::b)
      .def_readwrite("c", &FamilyParams::c)
      .def_readwrite("epsilon", &FamilyParams::epsilon)
      .def_readwrite("lambda_", &FamilyParams::lambda)
      .def_readwrite("l", &FamilyParams::l)
      .def_readwrite("constants", &FamilyParams::constants)
      .def_readwrite("sigma", &FamilyParams::sigma);

  py::class_<CouplingSet>(m, "CouplingSet")
      .def_readonly("g1", &CouplingSet::g1)
      .def_readonly("g2", &CouplingSet::g2)
      .def_readonly("g3", &CouplingSet::g3)
      .def_readonly("tg1", &CouplingSet::tg1)
      .def_readonly("tg2", &CouplingSet::tg2)
      .def_readonly("tg3", &CouplingSet::tg3)
      .def_readonly("exponents", &CouplingSet::exponents);

  m.def("couplings", &couplings);
  m.def("potential_eval", &potential_eval, py::arg("couplings"), py::arg("energy"), py::arg("r"));
  m.def("classify_alpha", &classify_alpha);
  m.def("coulomb_params", &coulomb_params, py::arg("l"), py::arg("sigma"),
        py::arg("constants") = PhysicalConstants{}, py::arg("lambda_") = 1.0);
  m.def("oscillator_params", &oscillator_params, py::arg("l"), py::arg("omega"),
        py::arg("constants") = PhysicalConstants{}, py::arg("lambda_") = 1.0);
  m.def("solve_l_for_zero_energy", &solve_l_for_zero_energy);

  py::class_<SpectralLine>(m, "SpectralLine")
      .def_readonly("n", &SpectralLine::n)
      .def_readonly("l", &SpectralLine::l)
      .def_readonly("branch", &SpectralLine::branch)
      .def_readonly("epsilon_n", &SpectralLine::epsilon_n)
      .def_readonly("energy", &SpectralLine::energy)
      .def_readonly("sigma", &SpectralLine::sigma);

  m.def("discriminant", &discriminant);
  m.def("epsilon_n", &epsilon_n, py::arg("params"), py::arg("n"), py::arg("branch"));
  m.def("energy_coulomb", &energy_coulomb, py::arg("n"), py::arg("l"),
        py::arg("constants") = PhysicalConstants{}, py::arg("lambda_") = 1.0);
  m.def("energy_oscillator", &energy_oscillator, py::arg("n"), py::arg("l"), py::arg("omega") = 1.0,
        py::arg("constants") = PhysicalConstants{}, py::arg("lambda_") = 1.0);
  m.def("laguerre", &laguerre, py::arg("n"), py::arg("k"), py::arg("x"));
  m.def("branch_select", &branch_select);

  py::class_<Wavefunction>(m, "Wavefunction")
      .def_readonly("params", &Wavefunction::params)
      .def_readonly("n", &Wavefunction::n)
      .def_readonly("branch", &Wavefunction::branch)
      .def_readonly("normalization", &Wavefunction::normalization)
      .def("__call__", &wavefunction_eval);
  m.def("make_wavefunction", &make_wavefunction);
  m.def("normalize", &normalize);

  py::class_<RadialGrid>(m, "RadialGrid")
      .def(py::init<double, double, std::size_t>(), py::arg("r_min"), py::arg("r_max"),
           py::arg("n_points"))
      .def_property_readonly("spacing", &RadialGrid::spacing)
      .def("points", &RadialGrid::points)
      .def("__len__", &RadialGrid::size);

  py::class_<Eigenpair>(m, "Eigenpair")
      .def_readonly("energy", &Eigenpair::energy)
      .def_readonly("u", &Eigenpair::u)
      .def_readonly("residual", &Eigenpair::residual);

  m.def("fd_spectrum", &fd_spectrum, py::arg("V"), py::arg("l"), py::arg("grid"), py::arg("count"),
        py::arg("units") = PhysicalConstants{});
  m.def("numerov_eigen", &numerov_eigen, py::arg("V"), py::arg("l"), py::arg("grid"),
        py::arg("bracket"), py::arg("units") = PhysicalConstants{});

  m.def("exp_map_potential", &exp_map_potential, py::arg("params"), py::arg("rho"),
        py::arg("form") = PctForm::tabulated);
  m.def("pct_energy", &pct_energy, py::arg("params"), py::arg("form") = PctForm::tabulated);
  m.def("morse_view", &morse_view, py::arg("params"), py::arg("form") = PctForm::tabulated);

  py::class_<SecondClassParams>(m, "SecondClassParams")
      .def(py::init<>())
      .def_readwrite("alpha", &SecondClassParams::alpha)
      .def_readwrite("beta", &SecondClassParams::beta)
      .def_readwrite("delta", &SecondClassParams::delta)
      .def_readwrite("gamma", &SecondClassParams::gamma)
      .def_readwrite("a", &SecondClassParams::a)
      .def_readwrite("b", &SecondClassParams::b)
      .def_readwrite("l", &SecondClassParams::l);

  py::class_<DerivedCoefficients>(m, "DerivedCoefficients")
      .def_readonly("A1", &DerivedCoefficients::A1)
      .def_readonly("A2", &DerivedCoefficients::A2)
      .def_readonly("B1", &DerivedCoefficients::B1)
      .def_readonly("B2", &DerivedCoefficients::B2)
      .def_readonly("B3", &DerivedCoefficients::B3)
      .def_readonly("C1", &DerivedCoefficients::C1)
      .def_readonly("C2", &DerivedCoefficients::C2)
      .def_readonly("C3", &DerivedCoefficients::C3)
      .def_readonly("D1", &DerivedCoefficients::D1)
      .def_readonly("D2", &DerivedCoefficients::D2)
      .def_readonly("D3", &DerivedCoefficients::D3);

  m.def("derived_coeffs", &derived_coeffs);
  m.def("second_potential", &second_potential);
  m.def("chain_potential", &chain_potential);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("group", &CheckResult::group)
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::pass)
      .def_readonly("measured", &CheckResult::measured)
      .def_readonly("tolerance", &CheckResult::tolerance)
      .def_readonly("informational", &CheckResult::informational)
      .def_readonly("detail", &CheckResult::detail);

  m.def(
      "run_verification",
      [](std::uint64_t seed, std::vector<std::string> only) {
        return run_verification({seed, std::move(only)});
      },
      py::arg("seed") = 42, py::arg("only") = std::vector<std::string>{});
  m.def("verification_groups", &verification_groups);
}
