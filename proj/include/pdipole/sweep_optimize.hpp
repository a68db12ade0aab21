#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pdipole/em_solver.hpp"

namespace pdipole {

struct StudyBand {
  double f_start_hz = 1.0e9;
  double f_stop_hz = 2.6e9;
  double f_step_hz = 10.0e6;
  double f_center_hz = 1.8e9;  // where the per-row impedance, VSWR, RL are read
};

/// One row of a length or width study. The emitted columns follow
/// param, Z (R, X), VSWR, RL, BW, directivity; the rest are diagnostics.
struct StudyRow {
  double param_mm = 0.0;
  cplx z_in{};
  double vswr = 0.0;
  double rl_db = 0.0;
  double bw_pct = 0.0;
  double directivity_dbi = 0.0;

  std::optional<double> resonant_hz;
  double best_rl_db = 0.0;  // deepest S11 over the band
  double f_best_rl_hz = 0.0;
  bool bw_edge_clipped = false;
  int segments = 0;
  std::optional<std::string> error;  // solver failure for this row; other fields unset
};

/// Mesh size shared by all rows of a study: the requested size, reduced to
/// the largest odd count every geometry in the study supports.
int study_segment_count(const std::vector<DipoleGeometry>& geometries, const Substrate& substrate,
                        int requested);

std::vector<StudyRow> length_study(double width_mm, const std::vector<double>& lengths_mm,
                                   const Substrate& substrate, const StudyBand& band,
                                   const SolverOptions& options = {});

std::vector<StudyRow> width_study(double length_mm, const std::vector<double>& widths_mm,
                                  const Substrate& substrate, const StudyBand& band,
                                  const SolverOptions& options = {});

inline constexpr int kMaxOptimizerIterations = 60;
inline constexpr double kLengthTolMm = 0.01;
inline constexpr double kReactanceTolOhm = 1.0;

struct LengthBounds {
  double lo_mm = 50.0;
  double hi_mm = 80.0;
};

struct LengthOptimum {
  double length_mm = 0.0;
  cplx z_in{};
  int iterations = 0;
  int segments = 0;
};

/// Bisection on the input reactance at `target_hz`.
/// Throws BracketError (with both endpoint reactances) when the bounds do not
/// straddle a sign change.
LengthOptimum optimize_length(double target_hz, const Substrate& substrate, double width_mm,
                              LengthBounds bounds, const SolverOptions& options = {});

enum class SearchFlag {
  kOk,
  kNonUnimodal,  // presample not unimodal: best grid point returned
  kDegenerate,   // flat objective: bracket midpoint returned
};

std::string to_string(SearchFlag flag);

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
  double final_width = 0.0;
  SearchFlag flag = SearchFlag::kOk;
};

inline constexpr int kPresamplePoints = 13;

/// Minimises `objective` on [lo, hi]: a coarse presample checks unimodality,
/// then golden-section search narrows the bracket around the best sample.
GoldenResult golden_section_minimize(const std::function<double(double)>& objective, double lo,
                                     double hi, double tol = kLengthTolMm,
                                     int max_iterations = kMaxOptimizerIterations,
                                     int presample_points = kPresamplePoints);

struct ReturnLossOptimum {
  double length_mm = 0.0;
  double s11_db = 0.0;
  cplx z_in{};
  int iterations = 0;
  SearchFlag flag = SearchFlag::kOk;
  int segments = 0;
};

/// Length minimising S11 (deepest return loss) at `target_hz`.
ReturnLossOptimum optimize_for_max_rl(double target_hz, const Substrate& substrate,
                                      double width_mm, LengthBounds bounds,
                                      const SolverOptions& options = {});

}  // namespace pdipole
