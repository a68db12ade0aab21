#include "pdipole/farfield.hpp"

#include <algorithm>
#include <cmath>

#include "pdipole/constants.hpp"
#include "pdipole/errors.hpp"

namespace pdipole {

namespace {

using constants::kPi;

constexpr double kDegToRad = kPi / 180.0;
const double kHalfPowerDb = 10.0 * std::log10(0.5);

double nominal_span(CutPlane plane) { return plane == CutPlane::kE ? 180.0 : 360.0; }

void check_theta_grid(const std::vector<double>& theta_deg) {
  if (theta_deg.size() < static_cast<std::size_t>(kMinPatternSamples)) {
    throw UsageError("theta grid needs at least " + std::to_string(kMinPatternSamples) +
                     " samples");
  }
  for (std::size_t i = 0; i < theta_deg.size(); ++i) {
    if (!(theta_deg[i] > 0.0 && theta_deg[i] < 180.0)) {
      throw UsageError("theta samples must lie strictly between 0 and 180 degrees");
    }
    if (i > 0 && !(theta_deg[i] > theta_deg[i - 1])) {
      throw UsageError("theta samples must be ascending");
    }
  }
}

std::vector<double> normalise_db(const std::vector<double>& magnitude) {
  const double peak = *std::max_element(magnitude.begin(), magnitude.end());
  if (!(peak > 0.0)) throw DegeneratePatternError("radiation pattern is identically zero");
  std::vector<double> db(magnitude.size());
  for (std::size_t i = 0; i < magnitude.size(); ++i) {
    db[i] = 20.0 * std::log10(magnitude[i] / peak);
  }
  return db;
}

}  // namespace

std::string to_string(CutPlane plane) { return plane == CutPlane::kE ? "E" : "H"; }

std::vector<double> theta_grid(double step_deg) {
  if (!(step_deg > 0.0) || 180.0 / step_deg < kMinPatternSamples - 0.5) {
    throw UsageError("theta step must give at least " + std::to_string(kMinPatternSamples) +
                     " samples");
  }
  const auto count = static_cast<std::size_t>(std::floor(180.0 / step_deg + 1e-9));
  std::vector<double> out(count);
  const double start = 0.5 * (180.0 - static_cast<double>(count - 1) * step_deg);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step_deg;
  return out;
}

PatternCut pattern_from_current(const CurrentDistribution& current, const SegmentMesh& mesh,
                                double freq_hz, const std::vector<double>& theta_deg) {
  if (!current.solved()) throw UsageError("current distribution has not been solved");
  if (current.currents.size() != mesh.centers_mm.size()) {
    throw UsageError("current and mesh sizes differ");
  }
  if (!(freq_hz > 0.0)) throw DomainError("frequency must be positive");
  check_theta_grid(theta_deg);

  const double k = current.wavenumber > 0.0
                       ? current.wavenumber
                       : 2.0 * kPi * freq_hz / constants::kSpeedOfLight;
  const double delta = mesh.delta_mm / constants::kMmPerMetre;

  std::vector<double> magnitude(theta_deg.size());
  for (std::size_t t = 0; t < theta_deg.size(); ++t) {
    const double th = theta_deg[t] * kDegToRad;
    const double kc = k * std::cos(th);
    cplx sum{};
    for (std::size_t n = 0; n < current.currents.size(); ++n) {
      const double z = mesh.centers_mm[n] / constants::kMmPerMetre;
      sum += current.currents[n] * std::polar(1.0, kc * z);
    }
    magnitude[t] = std::abs(std::sin(th) * sum * delta);
  }

  PatternCut cut;
  cut.plane = CutPlane::kE;
  cut.angles_deg = theta_deg;
  cut.field_db = normalise_db(magnitude);
  cut.directivity_dbi = directivity(cut);
  cut.hpbw = hpbw(cut);
  return cut;
}

double directivity(const PatternCut& cut) {
  if (cut.plane != CutPlane::kE) throw UsageError("directivity needs an E-plane (theta) cut");
  if (cut.angles_deg.size() != cut.field_db.size() || cut.angles_deg.empty()) {
    throw UsageError("malformed pattern cut");
  }
  double u_max = 0.0;
  // Trapezoid over U sin(theta), with zero-valued end points at the poles.
  double integral = 0.0;
  double prev_theta = 0.0;
  double prev_value = 0.0;
  for (std::size_t i = 0; i < cut.angles_deg.size(); ++i) {
    const double th = cut.angles_deg[i] * kDegToRad;
    const double u = std::pow(10.0, cut.field_db[i] / 10.0);
    u_max = std::max(u_max, u);
    const double value = u * std::sin(th);
    integral += 0.5 * (value + prev_value) * (th - prev_theta);
    prev_theta = th;
    prev_value = value;
  }
  integral += 0.5 * prev_value * (kPi - prev_theta);
  if (!(u_max > 0.0) || !(integral > 0.0)) {
    throw DegeneratePatternError("radiation pattern carries no power");
  }
  return 10.0 * std::log10(2.0 * u_max / integral);
}

Beamwidth hpbw(const PatternCut& cut) {
  const auto& a = cut.angles_deg;
  const auto& db = cut.field_db;
  if (a.size() != db.size() || a.empty()) throw UsageError("malformed pattern cut");

  const auto peak = static_cast<std::size_t>(std::max_element(db.begin(), db.end()) - db.begin());
  const auto interp = [&](std::size_t inside, std::size_t outside) {
    const double t = (kHalfPowerDb - db[inside]) / (db[outside] - db[inside]);
    return a[inside] + t * (a[outside] - a[inside]);
  };

  std::size_t lo = peak;
  while (lo > 0 && db[lo - 1] >= kHalfPowerDb) --lo;
  std::size_t hi = peak;
  while (hi + 1 < db.size() && db[hi + 1] >= kHalfPowerDb) ++hi;

  if (lo == 0 || hi + 1 == db.size()) return {nominal_span(cut.plane), true};
  return {interp(hi, hi + 1) - interp(lo, lo - 1), false};
}

PatternCut h_plane_cut(const CurrentDistribution& current, const SegmentMesh& mesh,
                       double freq_hz, double step_deg) {
  const auto e_cut = pattern_from_current(current, mesh, freq_hz, theta_grid());
  if (!(step_deg > 0.0)) throw UsageError("azimuth step must be positive");
  const auto count = static_cast<std::size_t>(std::floor(360.0 / step_deg + 1e-9));
  PatternCut cut;
  cut.plane = CutPlane::kH;
  cut.angles_deg.resize(count);
  for (std::size_t i = 0; i < count; ++i) cut.angles_deg[i] = static_cast<double>(i) * step_deg;
  cut.field_db.assign(count, 0.0);
  cut.directivity_dbi = e_cut.directivity_dbi;
  cut.hpbw = {360.0, true};
  return cut;
}

double directivity_2d(const PatternCut& e_cut, const PatternCut& h_cut) {
  if (e_cut.plane != CutPlane::kE || h_cut.plane != CutPlane::kH) {
    throw UsageError("directivity_2d needs an E-plane and an H-plane cut");
  }
  if (h_cut.angles_deg.size() < 2) throw UsageError("malformed H-plane cut");

  // Theta integral, as in directivity(), without the 2 pi azimuth factor.
  double theta_integral = 0.0;
  double prev_theta = 0.0;
  double prev_value = 0.0;
  double ue_max = 0.0;
  for (std::size_t i = 0; i < e_cut.angles_deg.size(); ++i) {
    const double th = e_cut.angles_deg[i] * kDegToRad;
    const double u = std::pow(10.0, e_cut.field_db[i] / 10.0);
    ue_max = std::max(ue_max, u);
    const double value = u * std::sin(th);
    theta_integral += 0.5 * (value + prev_value) * (th - prev_theta);
    prev_theta = th;
    prev_value = value;
  }
  theta_integral += 0.5 * prev_value * (kPi - prev_theta);

  // Periodic rectangle rule in phi.
  const double dphi = 2.0 * kPi / static_cast<double>(h_cut.angles_deg.size());
  double phi_integral = 0.0;
  double uh_max = 0.0;
  for (double db : h_cut.field_db) {
    const double u = std::pow(10.0, db / 10.0);
    uh_max = std::max(uh_max, u);
    phi_integral += u * dphi;
  }
  const double total = theta_integral * phi_integral;
  if (!(total > 0.0)) throw DegeneratePatternError("radiation pattern carries no power");
  return 10.0 * std::log10(4.0 * kPi * ue_max * uh_max / total);
}

}  // namespace pdipole
