#include <doctest.h>

#include <cmath>

#include "pdipole/design_equations.hpp"
#include "pdipole/errors.hpp"
#include "pdipole/microstrip_feed.hpp"

using namespace pdipole;
using doctest::Approx;

namespace {

const Substrate kFr4{"FR4", 4.3, 1.6, 0.002};
const Substrate kRogers{"RogersRT5880", 2.2, 1.6, 0.0009};

// Wide-strip quasi-static line impedance, evaluated term by term.
double oracle_z0_wide(double w, double h, double er) {
  const double u = w / h;
  const double ee = (er + 1.0) / 2.0 + (er - 1.0) / 2.0 / std::sqrt(1.0 + 12.0 / u);
  const double eta0 = 4e-7 * M_PI * 299792458.0;
  return eta0 / std::sqrt(ee) / (u + 1.393 + 0.667 * std::log(u + 1.444));
}

}  // namespace

TEST_CASE("line impedance of the 3 mm FR4 feed") {
  CHECK(z0_microstrip(3.0, 1.6, 4.3) == Approx(oracle_z0_wide(3.0, 1.6, 4.3)).epsilon(1e-6));
  CHECK(z0_microstrip(3.0, 1.6, 4.3) == Approx(51.4).epsilon(0.003));
}

TEST_CASE("line impedance is monotone") {
  for (double er : {1.0, 2.2, 4.3, 10.2}) {
    double prev = INFINITY;
    for (double w = 0.16; w <= 32.0; w *= 1.05) {
      const double z = z0_microstrip(w, 1.6, er);
      CHECK(z > 0.0);
      CHECK(z < prev);
      prev = z;
    }
  }
  for (double w : {0.5, 1.6, 3.0, 10.0}) {
    CHECK(z0_microstrip(2.0 * w, 1.6, 4.3) < z0_microstrip(w, 1.6, 4.3));
    CHECK(z0_microstrip(w, 1.6, 4.3) < z0_microstrip(w, 1.6, 2.2));
  }
}

TEST_CASE("air line is the homogeneous limit") {
  const double z_air = z0_microstrip(3.0, 1.6, 1.0);
  CHECK(z_air == Approx(oracle_z0_wide(3.0, 1.6, 1.0)));
  CHECK(z_air == Approx(z0_microstrip(3.0, 1.6, 4.3) * std::sqrt(eps_eff_microstrip(4.3, 3.0, 1.6))));
}

TEST_CASE("line impedance rejects non-physical input") {
  CHECK_THROWS_AS(z0_microstrip(0.0, 1.6, 4.3), DomainError);
  CHECK_THROWS_AS(z0_microstrip(3.0, 0.0, 4.3), DomainError);
  CHECK_THROWS_AS(z0_microstrip(3.0, 1.6, 0.5), DomainError);
}

TEST_CASE("50 ohm width synthesis") {
  const double w = synth_width_for_z0(50.0, kFr4);
  CHECK(w == Approx(3.1).epsilon(0.03));
  CHECK(std::abs(z0_microstrip(w, 1.6, 4.3) - 50.0) <= 0.05);
  CHECK(synth_width_for_z0(50.0, kRogers) > w);
}

TEST_CASE("width synthesis inverts the line impedance") {
  for (double w : {0.4, 0.9, 2.0, 3.0, 6.0, 12.0, 25.0}) {
    const double z = z0_microstrip(w, 1.6, 4.3);
    const double back = synth_width_for_z0(z, kFr4);
    CHECK(std::abs(z0_microstrip(back, 1.6, 4.3) - z) <= 0.05);
    CHECK(back == Approx(w).epsilon(1e-3));
  }
}

TEST_CASE("unreachable impedance names the interval") {
  try {
    synth_width_for_z0(500.0, kFr4);
    FAIL("expected RangeError");
  } catch (const RangeError& e) {
    CHECK(std::string(e.what()).find("achievable range") != std::string::npos);
  }
  CHECK_THROWS_AS(synth_width_for_z0(1.0, kFr4), RangeError);
}

TEST_CASE("quarter-wave stub") {
  const double ee = eps_eff_microstrip(4.3, 3.0, 1.6);
  CHECK(ee == Approx(3.26).epsilon(2e-3));
  CHECK(quarter_wave_stub_length(1.8e9, ee) == Approx(23.1).epsilon(3e-3));
  CHECK(std::abs(quarter_wave_stub_length(1.8e9, ee) - 25.0) < 2.0);
  CHECK(quarter_wave_stub_length(1.8e9, 1.0) == Approx(41.64).epsilon(1e-3));
  CHECK(quarter_wave_stub_length(3.6e9, ee) == Approx(quarter_wave_stub_length(1.8e9, ee) / 2.0));
  CHECK_THROWS_AS(quarter_wave_stub_length(0.0, 1.0), DomainError);
}

TEST_CASE("feed line design") {
  const auto spec = design_feed_line(kFr4, 1.8e9);
  CHECK(spec.h_mm == 1.6);
  CHECK(std::abs(spec.z0_ohm - 50.0) <= 0.05);
  REQUIRE(spec.stub_length_mm);
  CHECK(*spec.stub_length_mm > 0.0);
  CHECK(*spec.stub_length_mm == Approx(quarter_wave_stub_length(1.8e9, spec.eps_eff)));
}
