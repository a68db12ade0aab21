#include <doctest.h>

#include <cmath>
#include <limits>

#include "pdipole/errors.hpp"
#include "pdipole/metrics.hpp"

using namespace pdipole;
using doctest::Approx;

namespace {

SweepSample db_sample(double f, double s11_db) {
  SweepSample s;
  s.freq_hz = f;
  s.s11_db = s11_db;
  return s;
}

// Two-sided parabola in dB: minimum -30 dB at 1.8 GHz, -10 dB at 1.65 and 1.98 GHz.
double parabola_db(double f_ghz) {
  const double w = f_ghz < 1.8 ? 0.15 : 0.18;
  const double x = (f_ghz - 1.8) / w;
  return -30.0 + 20.0 * x * x;
}

SweepResult parabola_sweep() {
  SweepResult s;
  for (int i = 0; i <= 160; ++i) {
    const double f = 1.0 + 0.01 * i;
    s.samples.push_back(db_sample(f * 1e9, parabola_db(f)));
  }
  return s;
}

SweepResult reactance_sweep(std::initializer_list<std::pair<double, double>> fx) {
  SweepResult s;
  for (auto [f, x] : fx) s.samples.push_back(make_sample(f, {50.0, x}, 50.0));
  return s;
}

}  // namespace

TEST_CASE("reflection coefficient") {
  CHECK(reflection_coefficient({50.0, 0.0}, 50.0) == cplx(0.0, 0.0));
  CHECK(reflection_coefficient({0.0, 0.0}, 50.0) == cplx(-1.0, 0.0));
  const cplx g = reflection_coefficient({51.0, -0.216}, 50.0);
  // |(Z - Z0)/(Z + Z0)| evaluated by hand.
  const double mag = std::hypot(1.0, 0.216) / std::hypot(101.0, 0.216);
  CHECK(std::abs(g) == Approx(mag));
  CHECK(std::abs(g) == Approx(0.01013).epsilon(1e-3));
  CHECK_THROWS_AS(reflection_coefficient({-1.0, 0.0}, 50.0), NonPassiveError);
  for (double r : {0.0, 1.0, 50.0, 1e4}) {
    for (double x : {-1e4, -30.0, 0.0, 42.0}) {
      CHECK(std::abs(reflection_coefficient({r, x}, 50.0)) <= 1.0 + 1e-15);
    }
  }
}

TEST_CASE("return loss") {
  CHECK(return_loss_db_from_magnitude(0.003984) == Approx(-48.0).epsilon(1e-3));
  CHECK(return_loss_db_from_magnitude(1.0) == 0.0);
  CHECK(return_loss_db_from_magnitude(0.11308) == Approx(-18.93).epsilon(1e-3));
  CHECK(return_loss_db(cplx(0.0, 0.0)) == -std::numeric_limits<double>::infinity());
  CHECK(format_db(return_loss_db(cplx(0.0, 0.0))) == "< -100 dB");
  CHECK(format_db(-18.934) == "-18.93 dB");
  CHECK_THROWS_AS(return_loss_db_from_magnitude(1.5), DomainError);
}

TEST_CASE("VSWR") {
  CHECK(vswr_from_magnitude(0.0) == 1.0);
  CHECK(vswr_from_magnitude(0.05482) == Approx(1.116).epsilon(1e-3));
  CHECK(vswr_from_magnitude(1.0 / 3.0) == Approx(2.0));
  CHECK(std::isinf(vswr(cplx(1.0, 0.0))));
  const auto matched = make_sample(1.8e9, {50.0, 0.0}, 50.0);
  CHECK(matched.gamma == cplx(0.0, 0.0));
  CHECK(matched.vswr == 1.0);
}

TEST_CASE("round trips over a dense reflection grid") {
  for (int i = 0; i < 10000; ++i) {
    const double g = i / 10000.0;
    const double v = vswr_from_magnitude(g);
    CHECK(std::abs(gamma_magnitude_from_vswr(v) - g) <= 1e-10);
    if (g > 0.0) {
      const double rl = return_loss_db_from_magnitude(g);
      const double g2 = gamma_magnitude_from_return_loss(rl);
      CHECK(std::abs(g2 - g) <= 1e-10);
      CHECK(std::abs(vswr_from_magnitude(g2) - v) <= 1e-10 * v);
    }
  }
}

TEST_CASE("sample invariants") {
  for (double r : {5.0, 25.0, 50.0, 120.0, 400.0}) {
    for (double x : {-200.0, -10.0, 0.0, 10.0, 200.0}) {
      const auto s = make_sample(1e9, {r, x}, 50.0);
      const double g = std::abs(s.gamma);
      CHECK(s.vswr == Approx((1.0 + g) / (1.0 - g)).epsilon(1e-12));
      CHECK(s.s11_db <= 0.0);
    }
  }
}

TEST_CASE("bandwidth of an analytic parabola") {
  auto s = parabola_sweep();
  const auto bw = fractional_bandwidth(s, -10.0);
  CHECK(bw.f_center_hz == Approx(1.8e9));
  CHECK(bw.f_lo_hz == Approx(1.65e9).epsilon(1e-9));
  CHECK(bw.f_hi_hz == Approx(1.98e9).epsilon(1e-9));
  CHECK(bw.percent == Approx(100.0 * 0.33 / 1.8).epsilon(1e-9));
  CHECK(bw.percent == Approx(18.333).epsilon(1e-4));
  CHECK_FALSE(bw.edge_clipped);
}

TEST_CASE("bandwidth edge cases") {
  SweepResult above;
  for (int i = 0; i < 10; ++i) above.samples.push_back(db_sample(1e9 + i * 1e7, -5.0));
  CHECK(fractional_bandwidth(above, -10.0).percent == 0.0);

  SweepResult clipped;
  for (int i = 0; i < 10; ++i) clipped.samples.push_back(db_sample(1e9 + i * 1e7, -20.0 + i));
  const auto bw = fractional_bandwidth(clipped, -10.0);
  CHECK(bw.edge_clipped);
  CHECK(bw.percent > 0.0);

  SweepResult disordered;
  disordered.samples = {db_sample(2e9, -20.0), db_sample(1e9, -20.0)};
  CHECK_THROWS_AS(fractional_bandwidth(disordered, -10.0), UsageError);
  CHECK_THROWS_AS(fractional_bandwidth(clipped, 0.0), DomainError);
}

TEST_CASE("bandwidth shrinks as the threshold tightens") {
  const auto s = parabola_sweep();
  double prev = INFINITY;
  for (double t = -1.0; t >= -40.0; t -= 0.5) {
    const double p = fractional_bandwidth(s, t).percent;
    CHECK(p <= prev);
    prev = p;
  }
}

TEST_CASE("resonance at the reactance zero crossing") {
  CHECK(resonant_frequency(reactance_sweep({{1.79e9, -5.0}, {1.81e9, 5.0}})) == Approx(1.8e9));
  CHECK_THROWS_AS(resonant_frequency(reactance_sweep({{1e9, -50.0}, {1.5e9, -20.0}, {2e9, -1.0}})),
                  NoResonanceError);
  // A positive-to-negative crossing is not a resonance.
  CHECK_THROWS_AS(resonant_frequency(reactance_sweep({{1e9, 10.0}, {2e9, -10.0}})),
                  NoResonanceError);
  // The lowest crossing wins.
  const auto two = reactance_sweep({{1e9, -10.0}, {1.1e9, 10.0}, {1.2e9, -10.0}, {1.3e9, 10.0}});
  CHECK(resonant_frequency(two) == Approx(1.05e9));
}

TEST_CASE("annotate fills the summary") {
  auto s = reactance_sweep({{1.0e9, -40.0}, {1.1e9, -5.0}, {1.2e9, 30.0}});
  annotate(s);
  REQUIRE(s.resonant_hz);
  CHECK(*s.resonant_hz == Approx(1.1e9 + 0.1e9 * 5.0 / 35.0));
  CHECK(s.f_min_s11_hz == 1.1e9);
  CHECK(s.min_s11_db == s.samples[1].s11_db);

  auto none = reactance_sweep({{1.0e9, -40.0}, {1.1e9, -30.0}});
  annotate(none);
  CHECK_FALSE(none.resonant_hz);
}
