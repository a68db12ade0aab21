#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pdipole/errors.hpp"
#include "pdipole/farfield.hpp"

using namespace pdipole;
using doctest::Approx;

namespace {

constexpr double kC = 299792458.0;
constexpr double kPi = 3.14159265358979323846;
const Substrate kFr4{"FR4", 4.3, 1.6, 0.002};

struct Source {
  CurrentDistribution current;
  SegmentMesh mesh;
};

Source hertzian() {
  Source s;
  s.mesh.n = 1;
  s.mesh.delta_mm = 1.0;
  s.mesh.centers_mm = {0.0};
  s.current.currents = {cplx(1.0, 0.0)};
  return s;
}

// Sinusoidal half-wave current sampled on a fine mesh, free space at f.
Source half_wave(double f, int n) {
  const double lambda_mm = kC / f * 1e3;
  const double length = lambda_mm / 2.0;
  Source s;
  s.mesh.n = n;
  s.mesh.delta_mm = length / (n + 1);
  const double k = 2.0 * kPi / lambda_mm;
  for (int i = 0; i < n; ++i) {
    const double z = (i - (n - 1) / 2) * s.mesh.delta_mm;
    s.mesh.centers_mm.push_back(z);
    s.current.currents.emplace_back(std::cos(k * z), 0.0);
  }
  return s;
}

double half_wave_oracle(double theta_deg) {
  const double t = theta_deg * kPi / 180.0;
  return std::cos(0.5 * kPi * std::cos(t)) / std::sin(t);
}

DipoleGeometry strip(double l, double w) {
  DipoleGeometry g;
  g.length_mm = l;
  g.width_mm = w;
  return g;
}

}  // namespace

TEST_CASE("theta grid is cell centred") {
  const auto g = theta_grid();
  REQUIRE(g.size() == 360);
  CHECK(g.front() == Approx(0.25));
  CHECK(g.back() == Approx(179.75));
  CHECK(theta_grid(0.25).size() == 720);
  CHECK_THROWS_AS(theta_grid(1.0), UsageError);
}

TEST_CASE("Hertzian dipole") {
  const auto s = hertzian();
  const auto cut = pattern_from_current(s.current, s.mesh, 1e9, theta_grid());
  // The cell-centred grid peaks at 89.75 deg, which carries the 0 dB reference.
  const double peak = std::sin(89.75 * kPi / 180.0);
  for (std::size_t i = 0; i < cut.angles_deg.size(); ++i) {
    const double want = 20.0 * std::log10(std::sin(cut.angles_deg[i] * kPi / 180.0) / peak);
    CHECK(std::abs(cut.field_db[i] - want) <= 1e-9);
  }
  CHECK(*std::max_element(cut.field_db.begin(), cut.field_db.end()) == 0.0);
  CHECK(std::abs(cut.directivity_dbi - 1.76) <= 0.02);
  CHECK_FALSE(cut.hpbw.full_width);
  CHECK(std::abs(cut.hpbw.degrees - 90.0) <= 0.5);
}

TEST_CASE("half-wave dipole") {
  const auto s = half_wave(1e9, 401);
  const auto cut = pattern_from_current(s.current, s.mesh, 1e9, theta_grid());
  for (std::size_t i = 0; i < cut.angles_deg.size(); ++i) {
    const double got = std::pow(10.0, cut.field_db[i] / 20.0);
    CHECK(std::abs(got - half_wave_oracle(cut.angles_deg[i])) <= 0.01);
  }
  CHECK(std::abs(cut.directivity_dbi - 2.15) <= 0.05);
  CHECK(std::abs(cut.hpbw.degrees - 78.0) <= 2.0);
}

TEST_CASE("solved dipole pattern properties") {
  const auto p = solve_dipole(strip(67.0, 6.0), kFr4, 1.8e9);
  const auto cut = pattern_from_current(p.current, p.mesh, 1.8e9, theta_grid());
  CHECK(*std::max_element(cut.field_db.begin(), cut.field_db.end()) == 0.0);
  const std::size_t n = cut.field_db.size();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(cut.field_db[i] - cut.field_db[n - 1 - i]) <= 1e-9);
  }
  // Nulls along the axis.
  CHECK(cut.field_db.front() < -30.0);
  CHECK(cut.field_db.back() < -30.0);
  CHECK(cut.directivity_dbi >= 0.0);

  const auto fine = pattern_from_current(p.current, p.mesh, 1.8e9, theta_grid(0.25));
  CHECK(std::abs(fine.directivity_dbi - cut.directivity_dbi) < 0.02);

  const auto h = h_plane_cut(p.current, p.mesh, 1.8e9);
  CHECK(h.plane == CutPlane::kH);
  const auto [lo, hi] = std::minmax_element(h.field_db.begin(), h.field_db.end());
  CHECK(*hi - *lo < 1e-9);
  CHECK(h.hpbw.full_width);
  CHECK(h.directivity_dbi == cut.directivity_dbi);
  CHECK(directivity_2d(cut, h) == Approx(cut.directivity_dbi).epsilon(1e-9));
}

TEST_CASE("isotropic and degenerate cuts") {
  PatternCut flat;
  flat.angles_deg = theta_grid();
  flat.field_db.assign(flat.angles_deg.size(), 0.0);
  CHECK(std::abs(directivity(flat)) < 0.01);
  CHECK(hpbw(flat).full_width);
  CHECK(hpbw(flat).degrees == 180.0);

  auto s = hertzian();
  s.current.currents = {cplx(0.0, 0.0)};
  CHECK_THROWS_AS(pattern_from_current(s.current, s.mesh, 1e9, theta_grid()),
                  DegeneratePatternError);
  CHECK_THROWS_AS(pattern_from_current(CurrentDistribution{}, s.mesh, 1e9, theta_grid()),
                  UsageError);
  std::vector<double> coarse(90);
  for (int i = 0; i < 90; ++i) coarse[i] = 1.0 + 2.0 * i;
  CHECK_THROWS_AS(pattern_from_current(hertzian().current, s.mesh, 1e9, coarse), UsageError);
}
