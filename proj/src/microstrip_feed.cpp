#include "pdipole/microstrip_feed.hpp"

#include <cmath>
#include <sstream>

#include "pdipole/constants.hpp"
#include "pdipole/design_equations.hpp"
#include "pdipole/errors.hpp"

namespace pdipole {

namespace {

constexpr double kMinWOverH = 0.1;
constexpr double kMaxWOverH = 20.0;
constexpr int kMaxBisections = 60;
constexpr double kImpedanceTol = 0.05;  // ohm

}  // namespace

double z0_microstrip(double width_mm, double height_mm, double eps_r) {
  const double eps_e = eps_eff_microstrip(eps_r, width_mm, height_mm);  // validates inputs
  const double u = width_mm / height_mm;
  if (u <= 1.0) {
    return 60.0 / std::sqrt(eps_e) * std::log(8.0 / u + u / 4.0);
  }
  const double eta0 = constants::kMu0 * constants::kSpeedOfLight;
  return eta0 / (std::sqrt(eps_e) * (u + 1.393 + 0.667 * std::log(u + 1.444)));
}

double synth_width_for_z0(double z0_target, const Substrate& substrate) {
  substrate.validate();
  if (!(z0_target > 0.0)) throw DomainError("target impedance must be positive");

  const double h = substrate.h_mm;
  // z0 falls as w grows, so the narrow end carries the upper bound.
  double lo = kMinWOverH * h;
  double hi = kMaxWOverH * h;
  const double z_max = z0_microstrip(lo, h, substrate.eps_r);
  const double z_min = z0_microstrip(hi, h, substrate.eps_r);
  if (z0_target > z_max || z0_target < z_min) {
    std::ostringstream msg;
    msg << "target " << z0_target << " ohm outside achievable range [" << z_min << ", " << z_max
        << "] ohm on substrate '" << substrate.name << "'";
    throw RangeError(msg.str());
  }

  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < kMaxBisections; ++i) {
    mid = 0.5 * (lo + hi);
    const double z = z0_microstrip(mid, h, substrate.eps_r);
    if (z > z0_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double err = std::abs(z0_microstrip(mid, h, substrate.eps_r) - z0_target);
  if (err > kImpedanceTol) {
    // Only reachable at the small step between the narrow and wide formulas at w = h.
    std::ostringstream msg;
    msg << "target " << z0_target << " ohm falls in the w/h = 1 branch gap (residual " << err
        << " ohm)";
    throw RangeError(msg.str());
  }
  return mid;
}

double quarter_wave_stub_length(double freq_hz, double eps_eff) {
  return guided_wavelength(freq_hz, eps_eff) / 4.0;
}

FeedLineSpec design_feed_line(const Substrate& substrate, double freq_hz, double z0_target) {
  FeedLineSpec spec;
  spec.h_mm = substrate.h_mm;
  spec.w_mm = synth_width_for_z0(z0_target, substrate);
  spec.z0_ohm = z0_microstrip(spec.w_mm, spec.h_mm, substrate.eps_r);
  spec.eps_eff = eps_eff_microstrip(substrate.eps_r, spec.w_mm, spec.h_mm);
  spec.stub_length_mm = quarter_wave_stub_length(freq_hz, spec.eps_eff);
  return spec;
}

}  // namespace pdipole
