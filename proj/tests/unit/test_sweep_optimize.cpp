#include <doctest.h>

#include <cmath>

#include "pdipole/errors.hpp"
#include "pdipole/metrics.hpp"
#include "pdipole/sweep_optimize.hpp"

using namespace pdipole;
using doctest::Approx;

namespace {

const Substrate kFr4{"FR4", 4.3, 1.6, 0.002};

StudyBand coarse_band() {
  StudyBand b;
  b.f_step_hz = 20e6;
  return b;
}

}  // namespace

TEST_CASE("golden section on a parabola") {
  int calls = 0;
  const auto r = golden_section_minimize(
      [&](double x) {
        ++calls;
        return (x - 3.7) * (x - 3.7);
      },
      0.0, 10.0);
  CHECK(r.flag == SearchFlag::kOk);
  CHECK(std::abs(r.x - 3.7) < 0.01);
  CHECK(r.final_width <= 0.01);
  CHECK(r.iterations <= kMaxOptimizerIterations);
  CHECK(calls < 13 + 2 + kMaxOptimizerIterations + 2);
}

TEST_CASE("golden section flags") {
  const auto flat = golden_section_minimize([](double) { return -12.5; }, 50.0, 80.0);
  CHECK(flat.flag == SearchFlag::kDegenerate);
  CHECK(flat.x == 65.0);

  const auto two = golden_section_minimize([](double x) { return std::cos(x); }, 0.0,
                                           4.0 * M_PI);
  CHECK(two.flag == SearchFlag::kNonUnimodal);
  CHECK(std::cos(two.x) < -0.8);

  const auto edge = golden_section_minimize([](double x) { return x; }, 2.0, 5.0);
  CHECK(edge.flag == SearchFlag::kOk);
  CHECK(edge.x - 2.0 < 0.01);

  CHECK_THROWS_AS(golden_section_minimize([](double x) { return x; }, 5.0, 2.0), DomainError);
  CHECK(to_string(SearchFlag::kNonUnimodal) == "non-unimodal");
}

TEST_CASE("study mesh size is shared by every row") {
  std::vector<DipoleGeometry> gs;
  for (double w : {5.0, 6.0, 7.0, 8.0}) {
    DipoleGeometry g;
    g.length_mm = 60.0;
    g.width_mm = w;
    gs.push_back(g);
  }
  CHECK(study_segment_count(gs, kFr4, 41) == 29);
  CHECK(study_segment_count({gs[0]}, kFr4, 21) == 21);
}

TEST_CASE("length study") {
  const auto rows = length_study(6.0, {63.0, 65.0, 67.0}, kFr4, coarse_band());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].param_mm == 63.0);
  CHECK(rows[2].param_mm == 67.0);
  for (const auto& r : rows) {
    REQUIRE_FALSE(r.error);
    REQUIRE(r.resonant_hz);
    CHECK(r.segments == 41);
    const double g = gamma_magnitude_from_vswr(r.vswr);
    CHECK(std::abs(return_loss_db_from_magnitude(g) - r.rl_db) <= 1e-10 * std::abs(r.rl_db));
    CHECK(r.directivity_dbi > 0.0);
  }
  CHECK(*rows[0].resonant_hz > *rows[1].resonant_hz);
  CHECK(*rows[1].resonant_hz > *rows[2].resonant_hz);

  const auto single = length_study(6.0, {65.0}, kFr4, coarse_band());
  REQUIRE(single.size() == 1);
  CHECK(single[0].z_in == rows[1].z_in);
}

TEST_CASE("width study") {
  CHECK(width_study(60.0, {}, kFr4, coarse_band()).empty());
  const auto rows = width_study(60.0, {0.05, 6.0}, kFr4, coarse_band());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].error);
  CHECK_FALSE(rows[1].error);
  CHECK(rows[1].bw_pct > 0.0);
}

TEST_CASE("length optimiser on reactance") {
  const auto opt = optimize_length(1.8e9, kFr4, 6.0, {50.0, 80.0});
  CHECK(std::abs(opt.z_in.imag()) < kReactanceTolOhm);
  CHECK(opt.iterations <= kMaxOptimizerIterations);
  CHECK(opt.length_mm >= 50.0);
  CHECK(opt.length_mm <= 80.0);
  WARN_MESSAGE(opt.length_mm >= 55.0, "reactance zero at " << opt.length_mm << " mm");

  const auto again = optimize_length(1.8e9, kFr4, 6.0, {50.0, 80.0});
  CHECK(again.length_mm == opt.length_mm);
  // The mesh follows the lower bound, so pin it when comparing brackets.
  SolverOptions pinned;
  pinned.segments = opt.segments;
  const auto tight =
      optimize_length(1.8e9, kFr4, 6.0, {opt.length_mm - 2.0, opt.length_mm + 2.0}, pinned);
  CHECK(tight.segments == opt.segments);
  CHECK(std::abs(tight.length_mm - opt.length_mm) < 0.1);

  try {
    optimize_length(1.8e9, kFr4, 6.0, {63.0, 67.0});
    FAIL("expected BracketError");
  } catch (const BracketError& e) {
    CHECK(std::string(e.what()).find("X =") != std::string::npos);
  }
  CHECK_THROWS_AS(optimize_length(1.8e9, kFr4, 6.0, {70.0, 60.0}), DomainError);
}

TEST_CASE("length optimiser on return loss") {
  const auto opt = optimize_for_max_rl(1.8e9, kFr4, 6.0, {50.0, 80.0});
  CHECK(opt.length_mm >= 50.0);
  CHECK(opt.length_mm <= 80.0);
  CHECK(opt.iterations <= kMaxOptimizerIterations);
  const auto again = optimize_for_max_rl(1.8e9, kFr4, 6.0, {50.0, 80.0});
  CHECK(again.length_mm == opt.length_mm);
  SolverOptions pinned;
  pinned.segments = opt.segments;
  const double lo = std::max(50.0, opt.length_mm - 3.0);
  const auto tight = optimize_for_max_rl(1.8e9, kFr4, 6.0, {lo, lo + 6.0}, pinned);
  CHECK(std::abs(tight.length_mm - opt.length_mm) < 0.1);
}
