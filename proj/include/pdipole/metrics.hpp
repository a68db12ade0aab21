#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace pdipole {

using cplx = std::complex<double>;

/// Reported return loss is 20 log10 |gamma|, i.e. a negative number for a
/// passive load ("-25 dB return loss"). Flip this to report positive values.
inline constexpr double kReturnLossSign = 1.0;

/// Bandwidth threshold used when none is configured (VSWR ~ 1.92).
inline constexpr double kDefaultBandwidthThresholdDb = -10.0;

struct SweepSample {
  double freq_hz = 0.0;
  cplx z_in{};
  cplx gamma{};
  double s11_db = 0.0;
  double vswr = 1.0;
};

/// Derived from a sample's impedance against the reference.
SweepSample make_sample(double freq_hz, cplx z_in, double z0);

struct FractionalBandwidth {
  double percent = 0.0;
  double f_lo_hz = 0.0;
  double f_hi_hz = 0.0;
  double f_center_hz = 0.0;  // frequency of the deepest S11 sample
  bool edge_clipped = false;  // band touches the first or last sample
};

struct SweepResult {
  double z0 = 50.0;
  std::vector<SweepSample> samples;

  // Filled by annotate().
  std::optional<double> resonant_hz;
  double min_s11_db = 0.0;
  double f_min_s11_hz = 0.0;
  FractionalBandwidth bandwidth;

  /// Throws UsageError unless frequencies are strictly ascending.
  void validate_order() const;
};

cplx reflection_coefficient(cplx z_in, double z0);

/// 20 log10 |gamma|. Returns -infinity for a perfect match.
double return_loss_db(cplx gamma);
double return_loss_db_from_magnitude(double gamma_mag);

/// (1 + |gamma|) / (1 - |gamma|); +infinity at total reflection.
double vswr(cplx gamma);
double vswr_from_magnitude(double gamma_mag);

// Inverse relations used by the consistency checks.
double gamma_magnitude_from_vswr(double vswr_value);
double gamma_magnitude_from_return_loss(double rl_db);

/// Contiguous band around the deepest S11 minimum with s11 <= threshold.
FractionalBandwidth fractional_bandwidth(const SweepResult& sweep,
                                         double threshold_db = kDefaultBandwidthThresholdDb);

/// Lowest reactance crossing from negative to non-negative, linearly
/// interpolated. Throws NoResonanceError when there is none.
double resonant_frequency(const SweepResult& sweep);

/// Fills the summary fields of `sweep`. A sweep without a reactance zero
/// keeps `resonant_hz` empty.
void annotate(SweepResult& sweep, double threshold_db = kDefaultBandwidthThresholdDb);

/// Display helper: "< -100 dB" style text for the -infinity sentinel.
std::string format_db(double db);

}  // namespace pdipole
