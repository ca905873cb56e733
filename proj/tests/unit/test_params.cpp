#include <cmath>
#include <random>

#include <doctest.h>

#include "common.hpp"
#include "csfq/constants.hpp"
#include "csfq/params.hpp"

using namespace csfq;
using doctest::Approx;

TEST_SUITE("params") {
  TEST_CASE("constants are the exact SI values") {
    CHECK(constants::flux_quantum == constants::planck / (2.0 * constants::elementary_charge));
    CHECK(constants::hbar * 2.0 * constants::pi == Approx(constants::planck).epsilon(1e-15));
  }

  TEST_CASE("charging energy from capacitance") {
    CHECK(charging_energy_from_capacitance(78.0) == Approx(0.2483).epsilon(2e-4));
    CHECK(charging_energy_from_capacitance(6.0) == Approx(3.23).epsilon(2e-3));
    CHECK(charging_energy_from_capacitance(1e12) < 1e-9);
    CHECK_THROWS_AS(charging_energy_from_capacitance(0.0), ParameterError);
    CHECK_THROWS_AS(charging_energy_from_capacitance(-1.0), ParameterError);
  }

  TEST_CASE("charging energy scales as 1/C") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> c(0.1, 1000.0);
    for (int i = 0; i < 200; ++i) {
      const double a = c(rng);
      const double b = c(rng);
      const double ea = charging_energy_from_capacitance(a);
      const double eb = charging_energy_from_capacitance(b);
      CHECK(ea * a == Approx(eb * b).epsilon(1e-13));
      if (a < b) CHECK(ea > eb);
      CHECK(capacitance_from_charging_energy(ea) == Approx(a).epsilon(1e-13));
    }
  }

  TEST_CASE("unit round trips") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-6.0, 3.0);
    for (int i = 0; i < 200; ++i) {
      const double x = std::pow(10.0, u(rng));
      CHECK(std::abs(units::joule_to_ghz(units::ghz_to_joule(x)) / x - 1.0) < 1e-12);
      CHECK(std::abs(units::ghz_to_kelvin(units::kelvin_to_ghz(x)) / x - 1.0) < 1e-12);
    }
    CHECK(units::ghz_to_rad_per_s(1.0) == Approx(2e9 * constants::pi));
    CHECK(units::mhz_to_cyclic_rate(1.3) == Approx(1.3e6));
    CHECK(units::microev_to_ghz(200.0) == Approx(48.36).epsilon(1e-3));
  }

  TEST_CASE("validate_params") {
    const ValidatedQubit q = test::perturbative_set();
    CHECK(q.ecs_ghz() == Approx(0.2483363).epsilon(1e-6));
    CHECK_FALSE(q.quartic_sign_warning());
    CHECK(q.beta() > 0.0);
    CHECK(q.cj_ff() == Approx(capacitance_from_charging_energy(3.2)));

    CHECK_THROWS_WITH_AS(validate_params({0.5, 85.0, 3.2, 78.0}), "alpha >= 0.5: double-well regime unsupported",
                         ParameterError);
    CHECK_THROWS_AS(validate_params({0.0, 85.0, 3.2, 78.0}), ParameterError);
    CHECK_THROWS_AS(validate_params({0.3, -1.0, 3.2, 78.0}), ParameterError);
    CHECK_THROWS_AS(validate_params({0.3, 85.0, 3.2, 0.0}), ParameterError);
    CHECK_THROWS_AS(validate_params({0.3, 85.0, -3.2, 78.0}), ParameterError);
    CHECK_THROWS_AS(validate_params({NAN, 85.0, 3.2, 78.0}), ParameterError);

    const ValidatedQubit edge = validate_params({0.125, 85.0, std::nullopt, 78.0});
    CHECK(edge.quartic_sign_warning());
    CHECK_FALSE(edge.has_junction_charging_energy());
    CHECK_THROWS_AS(edge.ec_ghz(), ParameterError);
  }

  TEST_CASE("cavity parameters") {
    const CavityParams c(8.2175, 0.6, 0.7);
    CHECK(c.kappa_mhz() == 0.6 + 0.7);
    CHECK(c.quality_factor() == Approx(6321.2).epsilon(1e-4));
    CHECK_THROWS_AS(CavityParams(8.0, -0.1, 0.7), ParameterError);
    CHECK_THROWS_AS(CavityParams(0.0, 0.6, 0.7), ParameterError);
    CHECK_THROWS_AS(CavityParams(8.0, 0.0, 0.0), ParameterError);
  }

  TEST_CASE("flux bias") {
    CHECK(FluxBias{}.f == 0.5);
    CHECK(FluxBias{0.51}.offset() == Approx(0.01));
  }
}
