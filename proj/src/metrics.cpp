#include "pdipole/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pdipole/errors.hpp"

namespace pdipole {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double crossing(double f0, double v0, double f1, double v1, double level) {
  if (!std::isfinite(v0) || !std::isfinite(v1) || v1 == v0) return f1;
  return f0 + (level - v0) * (f1 - f0) / (v1 - v0);
}

}  // namespace

cplx reflection_coefficient(cplx z_in, double z0) {
  if (!(z0 > 0.0)) throw DomainError("reference impedance must be positive");
  if (z_in.real() < 0.0) {
    std::ostringstream msg;
    msg << "non-passive input impedance " << z_in.real() << (z_in.imag() < 0 ? " - j" : " + j")
        << std::abs(z_in.imag()) << " ohm";
    throw NonPassiveError(msg.str());
  }
  return (z_in - z0) / (z_in + z0);
}

double return_loss_db_from_magnitude(double gamma_mag) {
  if (!(gamma_mag >= 0.0 && gamma_mag <= 1.0 + 1e-12)) {
    throw DomainError("reflection magnitude must lie in [0, 1]");
  }
  if (gamma_mag == 0.0) return -kInf;
  return kReturnLossSign * 20.0 * std::log10(std::min(gamma_mag, 1.0));
}

double return_loss_db(cplx gamma) { return return_loss_db_from_magnitude(std::abs(gamma)); }

double vswr_from_magnitude(double gamma_mag) {
  if (!(gamma_mag >= 0.0 && gamma_mag <= 1.0 + 1e-12)) {
    throw DomainError("reflection magnitude must lie in [0, 1]");
  }
  if (gamma_mag >= 1.0) return kInf;
  return (1.0 + gamma_mag) / (1.0 - gamma_mag);
}

double vswr(cplx gamma) { return vswr_from_magnitude(std::abs(gamma)); }

double gamma_magnitude_from_vswr(double vswr_value) {
  if (!(vswr_value >= 1.0)) throw DomainError("VSWR must be >= 1");
  if (std::isinf(vswr_value)) return 1.0;
  return (vswr_value - 1.0) / (vswr_value + 1.0);
}

double gamma_magnitude_from_return_loss(double rl_db) {
  const double db = kReturnLossSign * rl_db;
  if (db > 0.0) throw DomainError("return loss of a passive load cannot exceed 0 dB");
  return std::pow(10.0, db / 20.0);
}

SweepSample make_sample(double freq_hz, cplx z_in, double z0) {
  SweepSample s;
  s.freq_hz = freq_hz;
  s.z_in = z_in;
  s.gamma = reflection_coefficient(z_in, z0);
  s.s11_db = return_loss_db(s.gamma);
  s.vswr = vswr(s.gamma);
  return s;
}

void SweepResult::validate_order() const {
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].freq_hz > samples[i - 1].freq_hz)) {
      throw UsageError("sweep samples must be strictly ascending in frequency");
    }
  }
}

FractionalBandwidth fractional_bandwidth(const SweepResult& sweep, double threshold_db) {
  if (!(threshold_db < 0.0)) throw DomainError("bandwidth threshold must be negative");
  sweep.validate_order();
  const auto& s = sweep.samples;
  FractionalBandwidth bw;
  if (s.empty()) return bw;

  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].s11_db < s[best].s11_db) best = i;
  }
  bw.f_center_hz = s[best].freq_hz;
  if (!(s[best].s11_db <= threshold_db)) return bw;

  std::size_t lo = best;
  while (lo > 0 && s[lo - 1].s11_db <= threshold_db) --lo;
  std::size_t hi = best;
  while (hi + 1 < s.size() && s[hi + 1].s11_db <= threshold_db) ++hi;

  if (lo == 0) {
    bw.f_lo_hz = s.front().freq_hz;
    bw.edge_clipped = true;
  } else {
    bw.f_lo_hz = crossing(s[lo - 1].freq_hz, s[lo - 1].s11_db, s[lo].freq_hz, s[lo].s11_db,
                          threshold_db);
  }
  if (hi + 1 == s.size()) {
    bw.f_hi_hz = s.back().freq_hz;
    bw.edge_clipped = true;
  } else {
    bw.f_hi_hz = crossing(s[hi].freq_hz, s[hi].s11_db, s[hi + 1].freq_hz, s[hi + 1].s11_db,
                          threshold_db);
  }
  bw.percent = 100.0 * (bw.f_hi_hz - bw.f_lo_hz) / bw.f_center_hz;
  return bw;
}

namespace {

std::optional<double> find_resonance(const SweepResult& sweep) {
  const auto& s = sweep.samples;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double x0 = s[i].z_in.imag();
    const double x1 = s[i + 1].z_in.imag();
    if (x0 < 0.0 && x1 >= 0.0) {
      return crossing(s[i].freq_hz, x0, s[i + 1].freq_hz, x1, 0.0);
    }
  }
  return std::nullopt;
}

}  // namespace

double resonant_frequency(const SweepResult& sweep) {
  sweep.validate_order();
  if (auto f = find_resonance(sweep)) return *f;
  throw NoResonanceError("reactance has no negative-to-positive zero crossing in the sweep");
}

void annotate(SweepResult& sweep, double threshold_db) {
  sweep.validate_order();
  sweep.resonant_hz = find_resonance(sweep);
  sweep.bandwidth = fractional_bandwidth(sweep, threshold_db);
  if (!sweep.samples.empty()) {
    const SweepSample* best = &sweep.samples.front();
    for (const auto& s : sweep.samples) {
      if (s.s11_db < best->s11_db) best = &s;
    }
    sweep.min_s11_db = best->s11_db;
    sweep.f_min_s11_hz = best->freq_hz;
  }
}

std::string format_db(double db) {
  if (std::isinf(db) && db < 0) return "< -100 dB";
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << db << " dB";
  return out.str();
}

}  // namespace pdipole
