#pragma once

#include <vector>

#include "pdipole/em_solver.hpp"

namespace pdipole {

enum class CutPlane { kE, kH };

std::string to_string(CutPlane plane);

struct Beamwidth {
  double degrees = 0.0;
  bool full_width = false;  // no half-power crossing on one side; degrees = cut span
};

/// Sampled far-field cut normalised to a 0 dB maximum.
struct PatternCut {
  CutPlane plane = CutPlane::kE;
  std::vector<double> angles_deg;  // theta for E-plane cuts, phi for H-plane cuts
  std::vector<double> field_db;
  double directivity_dbi = 0.0;
  Beamwidth hpbw;
};

inline constexpr double kDefaultAngleStepDeg = 0.5;
inline constexpr int kMinPatternSamples = 181;

/// Cell-centred theta samples strictly inside (0, 180).
std::vector<double> theta_grid(double step_deg = kDefaultAngleStepDeg);

/// E-plane cut of the radiation integral
///   E_theta ~ sin(theta) * sum_n I_n delta e^{j k z_n cos(theta)}.
/// The wavenumber is the one recorded by the solve; currents built by hand
/// (wavenumber 0) radiate with the free-space value at `freq_hz`.
PatternCut pattern_from_current(const CurrentDistribution& current, const SegmentMesh& mesh,
                                double freq_hz, const std::vector<double>& theta_deg);

/// 4 pi U_max / integral U dOmega for an axially symmetric radiator, from an
/// E-plane cut (trapezoidal in theta, closed at the poles where sin(theta) = 0).
double directivity(const PatternCut& cut);

/// Half-power width around the maximum, linearly interpolated.
Beamwidth hpbw(const PatternCut& cut);

/// Azimuth cut of the axial dipole: flat at 0 dB. Directivity is taken from
/// the E-plane cut of the same current.
PatternCut h_plane_cut(const CurrentDistribution& current, const SegmentMesh& mesh,
                       double freq_hz, double step_deg = kDefaultAngleStepDeg);

/// Directivity of U(theta, phi) = U_E(theta) U_H(phi) integrated over the sphere.
double directivity_2d(const PatternCut& e_cut, const PatternCut& h_cut);

}  // namespace pdipole
