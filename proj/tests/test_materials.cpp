#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "casent/errors.hpp"
#include "casent/materials.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace casent;

namespace {

RelaxationModel au_bg() { return RelaxationModel::bloch_gruneisen(165.0, 300.0, 34.5); }

// Independent Bloch-Gruneisen evaluation: high-resolution trapezoid of the
// textbook integrand, calibrated the same way.
double bg_oracle(double t_kelvin, double debye = 165.0, double calib_t = 300.0,
                 double calib_nu = 34.5) {
  auto integral = [](double u) {
    return oracles::trapezoid(oracles::bg_integrand, 1e-9, std::min(u, 60.0), 200000);
  };
  const double rc = calib_t / debye;
  const double amp = calib_nu / (std::pow(rc, 5) * integral(debye / calib_t));
  return amp * std::pow(t_kelvin / debye, 5) * integral(debye / t_kelvin);
}

}  // namespace

TEST_CASE("Bloch-Gruneisen calibration point is exact") {
  CHECK(std::fabs(nu_at(au_bg(), 300.0).mev - 34.5) <= 1e-12 * 34.5);
}

TEST_CASE("low-temperature T^5 law") {
  const double ratio = nu_at(au_bg(), 2.0).mev / nu_at(au_bg(), 1.0).mev;
  CHECK(std::fabs(ratio / 32.0 - 1.0) < 0.02);
}

TEST_CASE("near-linear regime and agreement with the trapezoid oracle") {
  // the trapezoid oracle puts nu(300)/nu(150) at 2.1019 for T_D = 165 K:
  // close to the linear-law value 2, a few percent above it
  const double r = nu_at(au_bg(), 300.0).mev / nu_at(au_bg(), 150.0).mev;
  const double r_oracle = bg_oracle(300.0) / bg_oracle(150.0);
  CHECK(r == doctest::Approx(r_oracle).epsilon(1e-6));
  CHECK(r == doctest::Approx(2.1019).epsilon(1e-3));
  CHECK(std::fabs(r / 2.0 - 1.0) < 0.06);

  for (double t : {5.0, 30.0, 150.0, 300.0, 700.0}) {
    const double ours = nu_at(au_bg(), t).mev;
    const double ref = bg_oracle(t);
    CHECK(std::fabs(ours / ref - 1.0) < 1e-6);
  }
}

TEST_CASE("constant and residual variants") {
  CHECK(nu_at(RelaxationModel::constant(34.5e-3), 123.4).mev == 34.5e-3);
  CHECK(nu_at(RelaxationModel::constant(34.5e-6), 1e-6).mev == 34.5e-6);

  const auto residual = RelaxationModel::bloch_gruneisen_residual(165.0, 300.0, 34.5, 0.0345);
  CHECK(nu_at(residual, 0.0).mev == 0.0345);  // phonon term vanishes at T = 0

  // Matthiessen additivity: residual minus its floor is the pure phonon
  // term, up to the cancellation of subtracting nu0 in this very check
  for (double t : {0.5, 3.0, 40.0, 300.0}) {
    const double diff = nu_at(residual, t).mev - nu_at(residual, 0.0).mev;
    const double pure = nu_at(au_bg(), t).mev;
    CHECK(std::fabs(diff - pure) <= 1e-12 * pure + 1e-15 * 0.0345);
  }
}

TEST_CASE("nu is monotone nondecreasing in T") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> t_dist(0.0, 800.0);
  const auto residual = RelaxationModel::bloch_gruneisen_residual(165.0, 300.0, 34.5, 1e-3);
  for (int i = 0; i < 100; ++i) {
    double a = t_dist(rng), b = t_dist(rng);
    if (a > b) std::swap(a, b);
    CHECK(nu_at(au_bg(), a).mev <= nu_at(au_bg(), b).mev * (1 + 1e-14));
    CHECK(nu_at(residual, a).mev <= nu_at(residual, b).mev * (1 + 1e-14));
  }
}

TEST_CASE("nu/T^5 is stable well below the Debye temperature") {
  // ratio stability to 2% below T_D/50
  const double t_ref = 165.0 / 50.0;
  const double base = nu_at(au_bg(), t_ref).mev / std::pow(t_ref, 5);
  for (double t : {0.2, 0.5, 1.0, 2.0, 3.3}) {
    const double r = nu_at(au_bg(), t).mev / std::pow(t, 5);
    CHECK(std::fabs(r / base - 1.0) < 0.02);
  }
}

TEST_CASE("permittivity along the imaginary axis") {
  const auto plasma = PermittivityModel::plasma(9000.0);
  CHECK(permittivity_imag_axis(plasma, 9000.0, 300.0) == doctest::Approx(2.0));

  // direct scalar evaluation as oracle
  const auto drude = PermittivityModel::drude(9000.0, RelaxationModel::constant(34.5));
  const double expected = 1.0 + 9000.0 * 9000.0 / (161.9 * (161.9 + 34.5));
  CHECK(permittivity_imag_axis(drude, 161.9, 300.0) ==
        doctest::Approx(expected).epsilon(1e-12));

  // drude approaches plasma as nu -> 0
  const auto nearly = PermittivityModel::drude(9000.0, RelaxationModel::constant(1e-12));
  CHECK(std::fabs(permittivity_imag_axis(nearly, 100.0, 300.0) /
                      permittivity_imag_axis(plasma, 100.0, 300.0) -
                  1.0) < 1e-10);
}

TEST_CASE("eps > 1 and strictly decreasing in zeta") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> z_dist(1e-6, 1e5);
  const auto drude = PermittivityModel::drude(9000.0, RelaxationModel::constant(34.5e-3));
  const auto plasma = PermittivityModel::plasma(9000.0);
  for (int i = 0; i < 200; ++i) {
    double a = z_dist(rng), b = z_dist(rng);
    if (a > b) std::swap(a, b);
    if (a == b) continue;
    for (const auto& model : {drude, plasma}) {
      const double ea = permittivity_imag_axis(model, a, 300.0);
      const double eb = permittivity_imag_axis(model, b, 300.0);
      CHECK(ea > 1.0);
      CHECK(eb > 1.0);
      CHECK(ea > eb);
    }
  }
}

TEST_CASE("model construction and domain violations") {
  CHECK_THROWS_AS(RelaxationModel::constant(0.0), std::invalid_argument);
  CHECK_THROWS_AS(RelaxationModel::constant(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(RelaxationModel::bloch_gruneisen(0.0, 300.0, 34.5), std::invalid_argument);
  CHECK_THROWS_AS(RelaxationModel::bloch_gruneisen_residual(165.0, 300.0, 34.5, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(PermittivityModel::plasma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(nu_at(au_bg(), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(bloch_gruneisen_nu(RelaxationModel::constant(1.0), 300.0),
                  std::invalid_argument);
  const auto plasma = PermittivityModel::plasma(9000.0);
  CHECK_THROWS_AS(permittivity_imag_axis(plasma, 0.0, 300.0), std::invalid_argument);
  CHECK_THROWS_AS(permittivity_imag_axis(plasma, -1.0, 300.0), std::invalid_argument);
}
