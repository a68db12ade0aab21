#include "pdipole/sweep_optimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pdipole/errors.hpp"
#include "pdipole/farfield.hpp"

namespace pdipole {

namespace {

DipoleGeometry strip(double length_mm, double width_mm) {
  DipoleGeometry g;
  g.length_mm = length_mm;
  g.width_mm = width_mm;
  return g;
}

StudyRow evaluate_row(double param_mm, const DipoleGeometry& geometry, const Substrate& substrate,
                      const StudyBand& band, const SolverOptions& options) {
  StudyRow row;
  row.param_mm = param_mm;
  row.segments = options.segments;
  try {
    auto result = sweep(geometry, substrate, band.f_start_hz, band.f_stop_hz, band.f_step_hz,
                        options);
    row.resonant_hz = result.resonant_hz;
    row.best_rl_db = result.min_s11_db;
    row.f_best_rl_hz = result.f_min_s11_hz;
    row.bw_pct = result.bandwidth.percent;
    row.bw_edge_clipped = result.bandwidth.edge_clipped;

    const auto point = solve_dipole(geometry, substrate, band.f_center_hz, options);
    const auto sample = make_sample(band.f_center_hz, point.impedance.z, options.z0);
    row.z_in = sample.z_in;
    row.vswr = sample.vswr;
    row.rl_db = sample.s11_db;
    row.directivity_dbi =
        pattern_from_current(point.current, point.mesh, band.f_center_hz, theta_grid())
            .directivity_dbi;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<StudyRow> run_study(const std::vector<double>& params,
                                const std::vector<DipoleGeometry>& geometries,
                                const Substrate& substrate, const StudyBand& band,
                                SolverOptions options) {
  std::vector<StudyRow> rows;
  if (geometries.empty()) return rows;
  options.segments = study_segment_count(geometries, substrate, options.segments);
  rows.reserve(geometries.size());
  for (std::size_t i = 0; i < geometries.size(); ++i) {
    rows.push_back(evaluate_row(params[i], geometries[i], substrate, band, options));
  }
  return rows;
}

// Segment count usable for every length in [lo, hi] at a fixed width.
int bounded_segments(double lo_mm, double width_mm, const Substrate& substrate, int requested) {
  return study_segment_count({strip(lo_mm, width_mm)}, substrate, requested);
}

void check_bounds(const LengthBounds& b) {
  if (!(b.lo_mm > 0.0 && b.hi_mm > b.lo_mm)) {
    throw DomainError("length bounds must satisfy 0 < lo < hi");
  }
}

}  // namespace

int study_segment_count(const std::vector<DipoleGeometry>& geometries, const Substrate& substrate,
                        int requested) {
  int n = requested;
  for (const auto& g : geometries) {
    try {
      n = std::min(n, max_segments(wire_model_for(g, substrate)));
    } catch (const std::exception&) {
      // Invalid rows report their own error when evaluated.
    }
  }
  return std::max(n, kMinSegments);
}

std::vector<StudyRow> length_study(double width_mm, const std::vector<double>& lengths_mm,
                                   const Substrate& substrate, const StudyBand& band,
                                   const SolverOptions& options) {
  std::vector<DipoleGeometry> geometries;
  for (double l : lengths_mm) geometries.push_back(strip(l, width_mm));
  return run_study(lengths_mm, geometries, substrate, band, options);
}

std::vector<StudyRow> width_study(double length_mm, const std::vector<double>& widths_mm,
                                  const Substrate& substrate, const StudyBand& band,
                                  const SolverOptions& options) {
  std::vector<DipoleGeometry> geometries;
  for (double w : widths_mm) geometries.push_back(strip(length_mm, w));
  return run_study(widths_mm, geometries, substrate, band, options);
}

LengthOptimum optimize_length(double target_hz, const Substrate& substrate, double width_mm,
                              LengthBounds bounds, const SolverOptions& options) {
  check_bounds(bounds);
  SolverOptions opts = options;
  opts.segments = bounded_segments(bounds.lo_mm, width_mm, substrate, options.segments);

  const auto z_at = [&](double length) {
    return solve_dipole(strip(length, width_mm), substrate, target_hz, opts).impedance.z;
  };

  double lo = bounds.lo_mm;
  double hi = bounds.hi_mm;
  const double x_lo = z_at(lo).imag();
  const double x_hi = z_at(hi).imag();
  if ((x_lo < 0.0) == (x_hi < 0.0)) {
    std::ostringstream msg;
    msg << "reactance does not change sign over [" << lo << ", " << hi << "] mm (X = " << x_lo
        << " and " << x_hi << " ohm)";
    throw BracketError(msg.str());
  }
  const bool lo_negative = x_lo < 0.0;

  LengthOptimum best;
  best.segments = opts.segments;
  for (int it = 1; it <= kMaxOptimizerIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const cplx z = z_at(mid);
    best.length_mm = mid;
    best.z_in = z;
    best.iterations = it;
    if (std::abs(z.imag()) < kReactanceTolOhm && hi - lo < kLengthTolMm) break;
    if ((z.imag() < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return best;
}

std::string to_string(SearchFlag flag) {
  switch (flag) {
    case SearchFlag::kOk: return "ok";
    case SearchFlag::kNonUnimodal: return "non-unimodal";
    case SearchFlag::kDegenerate: return "degenerate";
  }
  return "ok";
}

GoldenResult golden_section_minimize(const std::function<double(double)>& objective, double lo,
                                     double hi, double tol, int max_iterations,
                                     int presample_points) {
  if (!(hi > lo)) throw DomainError("search bracket must satisfy lo < hi");
  if (presample_points < 3) throw UsageError("presample needs at least 3 points");

  std::vector<double> xs(static_cast<std::size_t>(presample_points));
  std::vector<double> fs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(xs.size() - 1);
    fs[i] = objective(xs[i]);
  }
  const auto best = static_cast<std::size_t>(std::min_element(fs.begin(), fs.end()) - fs.begin());
  const auto [fmin, fmax] = std::minmax_element(fs.begin(), fs.end());

  GoldenResult r;
  if (*fmax - *fmin <= 1e-12 * (1.0 + std::abs(*fmin))) {
    r.x = 0.5 * (lo + hi);
    r.value = objective(r.x);
    r.final_width = hi - lo;
    r.flag = SearchFlag::kDegenerate;
    return r;
  }
  bool unimodal = true;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (i < best && fs[i] < fs[i + 1]) unimodal = false;
    if (i >= best && fs[i] > fs[i + 1]) unimodal = false;
  }
  if (!unimodal) {
    r.x = xs[best];
    r.value = fs[best];
    r.final_width = (hi - lo) / static_cast<double>(xs.size() - 1);
    r.flag = SearchFlag::kNonUnimodal;
    return r;
  }

  double a = xs[best == 0 ? 0 : best - 1];
  double b = xs[std::min(best + 1, xs.size() - 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  int it = 0;
  while (b - a > tol && it < max_iterations) {
    ++it;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(d);
    }
  }
  r.x = 0.5 * (a + b);
  r.value = objective(r.x);
  r.iterations = it;
  r.final_width = b - a;
  return r;
}

ReturnLossOptimum optimize_for_max_rl(double target_hz, const Substrate& substrate,
                                      double width_mm, LengthBounds bounds,
                                      const SolverOptions& options) {
  check_bounds(bounds);
  SolverOptions opts = options;
  opts.segments = bounded_segments(bounds.lo_mm, width_mm, substrate, options.segments);

  const auto sample_at = [&](double length) {
    const auto z = solve_dipole(strip(length, width_mm), substrate, target_hz, opts).impedance.z;
    return make_sample(target_hz, z, opts.z0);
  };
  const auto g = golden_section_minimize(
      [&](double length) { return sample_at(length).s11_db; }, bounds.lo_mm, bounds.hi_mm);

  ReturnLossOptimum out;
  out.length_mm = g.x;
  const auto s = sample_at(g.x);
  out.s11_db = s.s11_db;
  out.z_in = s.z_in;
  out.iterations = g.iterations;
  out.flag = g.flag;
  out.segments = opts.segments;
  return out;
}

}  // namespace pdipole
