#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "csemit/emission.hpp"
#include "csemit/validation.hpp"

namespace py = pybind11;
using namespace csemit;

PYBIND11_MODULE(csemit, m) {
  m.doc() =
      "Spontaneous-emission decay rates and radiative shifts of metastable "
      "resonance states of 1D potentials, computed with the complex-scaling "
      "(non-Hermitian) formalism.";

  py::register_exception<Error>(m, "CsemitError");

  py::class_<UnitSystem>(m, "UnitSystem")
      .def(py::init<>())
      .def_readwrite("hbar", &UnitSystem::hbar)
      .def_readwrite("mass", &UnitSystem::mass)
      .def_readwrite("charge", &UnitSystem::charge)
      .def_readwrite("c_light", &UnitSystem::c_light)
      .def("compton_cutoff", &UnitSystem::compton_cutoff);

  py::class_<ComplexEnergy>(m, "ComplexEnergy")
      .def(py::init<double, double>(), py::arg("re"), py::arg("im"))
      .def_readonly("re", &ComplexEnergy::re)
      .def_readonly("im", &ComplexEnergy::im)
      .def("omega", [](const ComplexEnergy& e) { return e.omega(); })
      .def("gamma", &ComplexEnergy::gamma)
      .def("value", &ComplexEnergy::value)
      .def_static(
          "from_omega_gamma",
          [](double omega, double gamma) {
            return ComplexEnergy::from_omega_gamma(omega, gamma);
          },
          py::arg("omega"), py::arg("gamma"));

  m.def(
      "complex_frequency",
      [](const ComplexEnergy& en, const ComplexEnergy& em) {
        return complex_frequency(en, em);
      },
      py::arg("e_n"), py::arg("e_m"));

  py::class_<PotentialSpec>(m, "PotentialSpec")
      .def_static("gaussian_well", &PotentialSpec::gaussian_well, py::arg("a"),
                  py::arg("b"), py::arg("w"))
      .def_static("harmonic", &PotentialSpec::harmonic, py::arg("omega0"))
      .def("__call__", &PotentialSpec::operator())
      .def("continuum_threshold", &PotentialSpec::continuum_threshold)
      .def("__repr__", &PotentialSpec::describe);

  py::class_<ScalingAngle>(m, "ScalingAngle")
      .def(py::init<double>(), py::arg("theta"))
      .def_property_readonly("theta", &ScalingAngle::value);

  py::class_<Grid>(m, "Grid")
      .def_readonly("x_min", &Grid::x_min)
      .def_readonly("x_max", &Grid::x_max)
      .def_readonly("n_points", &Grid::n_points)
      .def_readonly("dx", &Grid::dx)
      .def_readonly("points", &Grid::points);

  m.def("build_grid", &build_grid, py::arg("x_min"), py::arg("x_max"),
        py::arg("n_points"));

  py::enum_<StateKind>(m, "StateKind")
      .value("bound", StateKind::bound)
      .value("resonance", StateKind::resonance)
      .value("continuum", StateKind::continuum);

  py::enum_<Parity>(m, "Parity")
      .value("even", Parity::even)
      .value("odd", Parity::odd)
      .value("none", Parity::none);

  py::class_<EigenState>(m, "EigenState")
      .def_readonly("energy", &EigenState::energy)
      .def_readonly("wavefunction", &EigenState::wavefunction)
      .def_readonly("kind", &EigenState::kind)
      .def_readonly("parity", &EigenState::parity)
      .def_readonly("index", &EigenState::index);

  py::class_<SpectralOptions>(m, "SpectralOptions")
      .def(py::init<>())
      .def_readwrite("confirm_resonances", &SpectralOptions::confirm_resonances)
      .def_readwrite("confirm_dtheta", &SpectralOptions::confirm_dtheta)
      .def_readwrite("confirm_drift_ratio",
                     &SpectralOptions::confirm_drift_ratio)
      .def_readwrite("tol_parity", &SpectralOptions::tol_parity);

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("states", &Spectrum::states)
      .def_readonly("n_bound", &Spectrum::n_bound)
      .def_readonly("n_resonance", &Spectrum::n_resonance)
      .def_property_readonly("theta",
                             [](const Spectrum& s) { return s.theta.value(); })
      .def_property_readonly("grid",
                             [](const Spectrum& s) { return s.grid; })
      .def("n_discrete", &Spectrum::n_discrete)
      .def("discrete_state", &Spectrum::discrete_state, py::arg("n"),
           py::return_value_policy::reference_internal)
      .def("energies", [](const Spectrum& s) {
        std::vector<Complex> out;
        out.reserve(s.states.size());
        for (const auto& state : s.states) out.push_back(state.energy.value());
        return out;
      });

  m.def(
      "compute_spectrum",
      [](const Grid& grid, const PotentialSpec& potential, double theta,
         const SpectralOptions& opts, const UnitSystem& units) {
        return compute_spectrum(grid, potential, ScalingAngle(theta), opts,
                                units);
      },
      py::arg("grid"), py::arg("potential"), py::arg("theta"),
      py::arg("options") = SpectralOptions{}, py::arg("units") = UnitSystem{});

  py::class_<TransitionTable>(m, "TransitionTable")
      .def_readonly("d", &TransitionTable::d)
      .def_readonly("f", &TransitionTable::f)
      .def_readonly("Z", &TransitionTable::Z);

  m.def("build_table", &build_table, py::arg("spectrum"),
        py::arg("units") = UnitSystem{});

  m.def(
      "dipole_element",
      [](const EigenState& a, const EigenState& b, const Grid& grid,
         double theta, const UnitSystem& units) {
        return dipole_element(a, b, grid, ScalingAngle(theta), units);
      },
      py::arg("a"), py::arg("b"), py::arg("grid"), py::arg("theta"),
      py::arg("units") = UnitSystem{});

  m.def(
      "momentum_consistency",
      [](const EigenState& a, const EigenState& b, const Grid& grid,
         double theta, const UnitSystem& units) {
        return momentum_consistency(a, b, grid, ScalingAngle(theta), units);
      },
      py::arg("a"), py::arg("b"), py::arg("grid"), py::arg("theta"),
      py::arg("units") = UnitSystem{});

  m.def("arg_neg", &arg_neg, py::arg("f"));
  m.def("partial_rate", &partial_rate, py::arg("Z"), py::arg("f"),
        py::arg("c_light"), py::arg("cutoff_sq"));

  py::class_<RatePartial>(m, "RatePartial")
      .def_readonly("final_index", &RatePartial::final_index)
      .def_readonly("kind", &RatePartial::kind)
      .def_readonly("dgamma", &RatePartial::dgamma);

  py::class_<CumulativePoint>(m, "CumulativePoint")
      .def_readonly("finals_included", &CumulativePoint::finals_included)
      .def_readonly("rate", &CumulativePoint::rate)
      .def_readonly("fraction", &CumulativePoint::fraction);

  py::class_<DecayBreakdown>(m, "DecayBreakdown")
      .def_readonly("initial_index", &DecayBreakdown::initial_index)
      .def_readonly("partials", &DecayBreakdown::partials)
      .def_readonly("discrete_sum", &DecayBreakdown::discrete_sum)
      .def_readonly("continuum_sum", &DecayBreakdown::continuum_sum)
      .def_readonly("total", &DecayBreakdown::total)
      .def_readonly("cumulative", &DecayBreakdown::cumulative);

  py::class_<ShiftPartial>(m, "ShiftPartial")
      .def_readonly("final_index", &ShiftPartial::final_index)
      .def_readonly("contribution", &ShiftPartial::contribution);

  py::class_<ShiftBreakdown>(m, "ShiftBreakdown")
      .def_readonly("initial_index", &ShiftBreakdown::initial_index)
      .def_readonly("partials", &ShiftBreakdown::partials)
      .def_readonly("total", &ShiftBreakdown::total)
      .def_readonly("cutoff_sq", &ShiftBreakdown::cutoff_sq);

  m.def(
      "total_rate",
      [](int n, const Spectrum& spectrum, const TransitionTable& table,
         const UnitSystem& units, std::optional<double> cutoff_sq) {
        return total_rate(n, spectrum, table, units, cutoff_sq);
      },
      py::arg("n"), py::arg("spectrum"), py::arg("table"),
      py::arg("units") = UnitSystem{}, py::arg("cutoff_sq") = py::none());

  m.def(
      "total_shift",
      [](int n, const Spectrum& spectrum, const TransitionTable& table,
         const UnitSystem& units, std::optional<double> cutoff_sq) {
        return total_shift(n, spectrum, table, units, cutoff_sq);
      },
      py::arg("n"), py::arg("spectrum"), py::arg("table"),
      py::arg("units") = UnitSystem{}, py::arg("cutoff_sq") = py::none());

  m.def("hermitian_rate", &hermitian_rate, py::arg("n"), py::arg("spectrum"),
        py::arg("table"), py::arg("units") = UnitSystem{});

  m.def("trk_sum", &trk_sum, py::arg("n"), py::arg("spectrum"),
        py::arg("table"));

  py::class_<HermitianReference>(m, "HermitianReference")
      .def_readonly("rate", &HermitianReference::rate)
      .def_readonly("shift", &HermitianReference::shift);

  m.def("hermitian_oracle", &hermitian_oracle, py::arg("potential"),
        py::arg("grid"), py::arg("n"), py::arg("units") = UnitSystem{});

  py::enum_<Observable>(m, "Observable")
      .value("total_rate", Observable::total_rate)
      .value("total_shift", Observable::total_shift);

  py::class_<ThetaScanReport>(m, "ThetaScanReport")
      .def_readonly("thetas", &ThetaScanReport::thetas)
      .def_readonly("values", &ThetaScanReport::values)
      .def_readonly("max_rel_deviation", &ThetaScanReport::max_rel_deviation);

  m.def(
      "theta_scan",
      [](Observable observable, int n, const Grid& grid,
         const PotentialSpec& potential, const std::vector<double>& thetas,
         const UnitSystem& units) {
        return theta_scan(observable, n, grid, potential, thetas, {}, units);
      },
      py::arg("observable"), py::arg("n"), py::arg("grid"),
      py::arg("potential"), py::arg("thetas"),
      py::arg("units") = UnitSystem{});
}
