#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "casent/analysis.hpp"
#include "casent/errors.hpp"
#include "casent/thermo.hpp"
#include "casent/verify.hpp"

namespace py = pybind11;
using namespace casent;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Casimir free energy and entropy between parallel metal plates "
            "(Drude / plasma permittivity, Lifshitz theory).";

  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<CancellationError>(m, "CancellationError", PyExc_RuntimeError);
  py::register_exception<FitError>(m, "FitError", PyExc_RuntimeError);

  // quantities
  py::enum_<FrequencyKind>(m, "FrequencyKind")
      .value("matsubara", FrequencyKind::matsubara)
      .value("relaxation", FrequencyKind::relaxation)
      .value("plasma", FrequencyKind::plasma);
  py::class_<FrequencyValue>(m, "FrequencyValue")
      .def_readonly("mev", &FrequencyValue::mev)
      .def_property_readonly("kind", [](const FrequencyValue& v) { return v.basis.kind; })
      .def("__repr__", [](const FrequencyValue& v) {
        return "FrequencyValue(" + std::to_string(v.mev) + " meV)";
      });
  m.def("matsubara_frequency", &matsubara_frequency, py::arg("m"), py::arg("t_kelvin"),
        "zeta_m(T) = 2 pi k m T / hbar, in meV.");
  m.def("matsubara_ladder", &matsubara_ladder, py::arg("t_kelvin"), py::arg("count"));
  m.def("matsubara_spacing_mev_per_k", &matsubara_spacing_mev_per_k);
  m.def("mev_to_radps", &mev_to_radps, py::arg("mev"));
  m.def("radps_to_mev", &radps_to_mev, py::arg("radps"));

  // materials
  py::class_<RelaxationModel>(m, "RelaxationModel")
      .def_static("constant", &RelaxationModel::constant, py::arg("nu0_mev"))
      .def_static("bloch_gruneisen", &RelaxationModel::bloch_gruneisen,
                  py::arg("debye_t_k"), py::arg("calib_t_k"), py::arg("calib_nu_mev"))
      .def_static("bloch_gruneisen_residual", &RelaxationModel::bloch_gruneisen_residual,
                  py::arg("debye_t_k"), py::arg("calib_t_k"), py::arg("calib_nu_mev"),
                  py::arg("nu0_mev"))
      .def_readonly("nu0_mev", &RelaxationModel::nu0_mev);
  m.def("nu_at", &nu_at, py::arg("model"), py::arg("t_kelvin"),
        "Relaxation frequency nu(T) in meV.");
  m.def("bloch_gruneisen_nu", &bloch_gruneisen_nu, py::arg("model"), py::arg("t_kelvin"));

  py::class_<PermittivityModel>(m, "PermittivityModel")
      .def_static("drude", &PermittivityModel::drude, py::arg("omega_p_mev"),
                  py::arg("relaxation"))
      .def_static("plasma", &PermittivityModel::plasma, py::arg("omega_p_mev"))
      .def_readonly("omega_p_mev", &PermittivityModel::omega_p_mev);
  m.def("permittivity_imag_axis", &permittivity_imag_axis, py::arg("model"),
        py::arg("zeta_mev"), py::arg("t_kelvin"),
        "eps(i zeta) along the imaginary frequency axis.");

  // lifshitz
  py::enum_<TailMethod>(m, "TailMethod")
      .value("euler_maclaurin", TailMethod::euler_maclaurin)
      .value("truncate", TailMethod::truncate);
  py::class_<NumericControls>(m, "NumericControls")
      .def(py::init<>())
      .def_readwrite("quad_rel_tol", &NumericControls::quad_rel_tol)
      .def_readwrite("sum_rel_tol", &NumericControls::sum_rel_tol)
      .def_readwrite("max_matsubara_terms", &NumericControls::max_matsubara_terms)
      .def_readwrite("tail_method", &NumericControls::tail_method);
  py::class_<PlateSystem>(m, "PlateSystem")
      .def(py::init([](double separation_m, const PermittivityModel& p,
                       const NumericControls& n) {
             PlateSystem s;
             s.separation_m = separation_m;
             s.permittivity = p;
             s.numeric = n;
             s.validate();
             return s;
           }),
           py::arg("separation_m"), py::arg("permittivity"),
           py::arg("numeric") = NumericControls{})
      .def_readonly("separation_m", &PlateSystem::separation_m)
      .def_readonly("permittivity", &PlateSystem::permittivity);

  py::class_<ReflectionCoefficients>(m, "ReflectionCoefficients")
      .def_readonly("r_tm", &ReflectionCoefficients::r_tm)
      .def_readonly("r_te", &ReflectionCoefficients::r_te);
  m.def("reflection_coeffs", &reflection_coeffs, py::arg("eps"), py::arg("y"),
        py::arg("y_m"), "Fresnel coefficients in dimensionless variables.");
  m.def("per_frequency_integral", &per_frequency_integral, py::arg("system"),
        py::arg("zeta_mev"), py::arg("t_kelvin"));

  py::class_<FreeEnergyResult>(m, "FreeEnergyResult")
      .def_readonly("f_j_per_m2", &FreeEnergyResult::f_j_per_m2)
      .def_readonly("est_error_j_per_m2", &FreeEnergyResult::est_error_j_per_m2)
      .def_readonly("terms_used", &FreeEnergyResult::terms_used);
  m.def("free_energy", &free_energy, py::arg("system"), py::arg("t_kelvin"),
        "F(a,T) per unit area, J/m^2.");

  py::class_<EnergyResult>(m, "EnergyResult")
      .def_readonly("e_j_per_m2", &EnergyResult::e_j_per_m2)
      .def_readonly("est_error_j_per_m2", &EnergyResult::est_error_j_per_m2);
  m.def("zero_temperature_energy", &zero_temperature_energy, py::arg("system"));

  py::class_<ThermalCorrection>(m, "ThermalCorrection")
      .def_readonly("delta_f_j_per_m2", &ThermalCorrection::delta_f_j_per_m2)
      .def_readonly("est_error_j_per_m2", &ThermalCorrection::est_error_j_per_m2)
      .def_readonly("meaningful", &ThermalCorrection::meaningful);
  m.def("thermal_correction", &thermal_correction, py::arg("system"), py::arg("t_kelvin"),
        "Delta F(T) = F(a,T) - E(a).");

  // thermo
  py::class_<EntropyResult>(m, "EntropyResult")
      .def_readonly("s_j_per_m2_k", &EntropyResult::s_j_per_m2_k)
      .def_readonly("est_error", &EntropyResult::est_error)
      .def_readonly("step_used_k", &EntropyResult::step_used_k)
      .def_readonly("step_dominated", &EntropyResult::step_dominated);
  m.def("entropy",
        py::overload_cast<const PlateSystem&, double, double>(&entropy),
        py::arg("system"), py::arg("t_kelvin"), py::arg("step_k"));
  m.def("entropy", py::overload_cast<const PlateSystem&, double>(&entropy),
        py::arg("system"), py::arg("t_kelvin"));

  py::enum_<NernstClass>(m, "NernstClass")
      .value("satisfied_smooth", NernstClass::satisfied_smooth)
      .value("satisfied_with_negative_dip", NernstClass::satisfied_with_negative_dip)
      .value("violated_negative_limit", NernstClass::violated_negative_limit);
  py::class_<NernstVerdict>(m, "NernstVerdict")
      .def_readonly("classification", &NernstVerdict::classification)
      .def_readonly("s_limit_estimate", &NernstVerdict::s_limit_estimate)
      .def_readonly("s_limit_error", &NernstVerdict::s_limit_error)
      .def_readonly("evidence_t_lo_k", &NernstVerdict::evidence_t_lo_k)
      .def_readonly("evidence_t_hi_k", &NernstVerdict::evidence_t_hi_k);
  m.def("classify_nernst", &classify_nernst, py::arg("system"), py::arg("t_grid_k"),
        py::arg("threads") = 1);

  // analysis
  py::enum_<FrequencyRelation>(m, "FrequencyRelation")
      .value("much_less", FrequencyRelation::much_less)
      .value("less", FrequencyRelation::less)
      .value("greater", FrequencyRelation::greater)
      .value("much_greater", FrequencyRelation::much_greater);
  py::class_<RegimeEntry>(m, "RegimeEntry")
      .def_readonly("m", &RegimeEntry::m)
      .def_readonly("zeta_m_mev", &RegimeEntry::zeta_m_mev)
      .def_readonly("relation", &RegimeEntry::relation);
  py::class_<RegimeReport>(m, "RegimeReport")
      .def_readonly("t_kelvin", &RegimeReport::t_kelvin)
      .def_readonly("nu_mev", &RegimeReport::nu_mev)
      .def_readonly("strong_ratio", &RegimeReport::strong_ratio)
      .def_readonly("entries", &RegimeReport::entries);
  m.def("regime_report", &regime_report, py::arg("nu_model"), py::arg("t_kelvin"),
        py::arg("m_max"), py::arg("strong_ratio") = 0.1);
  m.def("crossover_temperature", &crossover_temperature, py::arg("nu0_mev"),
        py::arg("n_freq"), py::arg("strong_ratio") = 0.1);

  py::class_<AsymptoticFit>(m, "AsymptoticFit")
      .def_readonly("c1", &AsymptoticFit::c1)
      .def_readonly("c2", &AsymptoticFit::c2)
      .def_readonly("c1_err", &AsymptoticFit::c1_err)
      .def_readonly("c2_err", &AsymptoticFit::c2_err)
      .def_readonly("t_lo_k", &AsymptoticFit::t_lo_k)
      .def_readonly("t_hi_k", &AsymptoticFit::t_hi_k)
      .def_readonly("rms_residual", &AsymptoticFit::rms_residual)
      .def_readonly("separation_m", &AsymptoticFit::separation_m)
      .def_readonly("nu0_mev", &AsymptoticFit::nu0_mev);
  m.def("fit_asymptotic_coefficients", &fit_asymptotic_coefficients, py::arg("system"),
        py::arg("t_points_k"), py::arg("strong_ratio") = 0.1);
  m.def("default_fit_temperatures", &default_fit_temperatures, py::arg("nu0_mev"),
        py::arg("n_points") = 8);

  py::class_<ScalingRow>(m, "ScalingRow")
      .def_readonly("nu0_mev", &ScalingRow::nu0_mev)
      .def_readonly("c1", &ScalingRow::c1)
      .def_readonly("c2", &ScalingRow::c2)
      .def_readonly("c1_nu0", &ScalingRow::c1_nu0)
      .def_readonly("c2_sqrt_nu0", &ScalingRow::c2_sqrt_nu0);
  py::class_<ScalingTable>(m, "ScalingTable")
      .def_readonly("rows", &ScalingTable::rows)
      .def_readonly("c1_product_spread", &ScalingTable::c1_product_spread)
      .def_readonly("c2_product_spread", &ScalingTable::c2_product_spread);
  m.def("scaling_check", &scaling_check, py::arg("separation_m"), py::arg("nu0_list_mev"),
        py::arg("omega_p_mev") = 9000.0, py::arg("controls") = NumericControls{},
        py::arg("fit_points") = 8);

  // verify
  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("skipped", &CheckResult::skipped)
      .def_readonly("detail", &CheckResult::detail);
  m.def(
      "run_verify",
      [](bool slow, int threads) {
        VerifyOptions o;
        o.slow = slow;
        o.threads = threads;
        return run_verify(o);
      },
      py::arg("slow") = true, py::arg("threads") = 1,
      "Golden verification suite over built-in Au defaults.");
}
