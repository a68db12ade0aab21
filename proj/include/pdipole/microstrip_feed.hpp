#pragma once

#include <optional>

#include "pdipole/substrate.hpp"

namespace pdipole {

/// Microstrip feed line, dimensions in mm, impedance in ohms.
struct FeedLineSpec {
  double w_mm = 0.0;
  double h_mm = 0.0;
  double z0_ohm = 50.0;
  double eps_eff = 1.0;
  std::optional<double> stub_length_mm;
};

inline constexpr double kReferenceImpedance = 50.0;

/// Quasi-static characteristic impedance of a microstrip line.
/// Narrow-strip form for w/h <= 1, wide-strip form otherwise.
double z0_microstrip(double width_mm, double height_mm, double eps_r);

/// Width giving `z0_target` on `substrate`, by bisection over w/h in [0.1, 20].
/// Throws RangeError naming the reachable impedance interval when the target
/// is outside it.
double synth_width_for_z0(double z0_target, const Substrate& substrate);

/// A quarter of the guided wavelength.
double quarter_wave_stub_length(double freq_hz, double eps_eff);

/// Feed line for `z0_target` plus the matching quarter-wave open stub.
FeedLineSpec design_feed_line(const Substrate& substrate, double freq_hz,
                              double z0_target = kReferenceImpedance);

}  // namespace pdipole
