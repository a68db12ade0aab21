#pragma once

// Thin-wire method-of-moments model of a centre-fed strip dipole.
//
// The strip of width W is replaced by a round wire of radius W/4 embedded in a
// homogeneous medium of relative permittivity eps_e. Pocklington's equation is
// discretised with pulse basis functions and point matching at the n segment
// centres; the second derivative is carried by central differences of the
// scalar potential over half-offset charge cells (Harrington's thin-wire form).
// The n segments sit inside a wire of length L = (n + 1) * delta, so the
// current vanishes at both tips. A 1 V delta-gap drives the centre segment.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pdipole/design_equations.hpp"
#include "pdipole/metrics.hpp"
#include "pdipole/substrate.hpp"

namespace pdipole {

enum class KernelKind {
  kReduced,  // e^{-jkR}/(4 pi R), R = sqrt(dz^2 + a^2)
  kExact,    // the same Green's function averaged around the wire surface
};

std::string to_string(KernelKind kind);
KernelKind kernel_kind_from_string(const std::string& text);

struct WireModel {
  double total_length_mm = 0.0;
  double radius_mm = 0.0;
  double eps_eff = 1.0;

  /// radius > 0, length > 20 radius, eps_eff >= 1.
  void validate() const;
};

/// Flat-strip equivalent radius, W / 4.
double strip_to_wire(double width_mm);

/// Wire model of a strip dipole on `substrate`; eps_eff uses the fringing formula.
WireModel wire_model_for(const DipoleGeometry& geometry, const Substrate& substrate);

struct SegmentMesh {
  int n = 0;
  double delta_mm = 0.0;
  double total_length_mm = 0.0;
  double radius_mm = 0.0;
  std::vector<double> centers_mm;  // ascending, symmetric about 0
  int feed_index = 0;
};

inline constexpr int kMinSegments = 11;
inline constexpr int kDefaultSegments = 41;

/// Largest odd segment count whose segment length is still >= the radius.
int max_segments(const WireModel& model);

/// Throws UsageError for even or too-small n, and for meshes finer than the radius.
SegmentMesh build_mesh(const WireModel& model, int n);

struct SystemMatrix {
  Eigen::MatrixXcd z;   // ohm
  double freq_hz = 0.0;
  double wavenumber = 0.0;  // rad/m in the embedding medium
  KernelKind kernel = KernelKind::kExact;
};

SystemMatrix assemble_system(const SegmentMesh& mesh, double freq_hz, const WireModel& model,
                             KernelKind kernel = KernelKind::kExact);

struct CurrentDistribution {
  std::vector<cplx> currents;  // A, one per segment
  double feed_voltage = 1.0;   // V
  int feed_index = 0;
  double condition_estimate = 0.0;
  double relative_residual = 0.0;
  double wavenumber = 0.0;  // rad/m of the medium used in the solve; 0 if unknown

  bool solved() const noexcept { return !currents.empty(); }
};

inline constexpr double kMaxConditionNumber = 1e12;
inline constexpr double kMaxRelativeResidual = 1e-8;

/// Dense LU solve with a delta-gap source at the mesh feed segment.
CurrentDistribution solve_current(const SystemMatrix& system, const SegmentMesh& mesh,
                                  double feed_voltage = 1.0);

struct FeedImpedance {
  cplx z{};
  bool near_antiresonance = false;  // feed current is numerically negligible
};

FeedImpedance input_impedance(const CurrentDistribution& current);

struct SolverOptions {
  int segments = kDefaultSegments;
  KernelKind kernel = KernelKind::kExact;
  double z0 = 50.0;
  double bandwidth_threshold_db = kDefaultBandwidthThresholdDb;
};

/// Everything produced by one frequency point.
struct SolvedPoint {
  WireModel model;
  SegmentMesh mesh;
  CurrentDistribution current;
  FeedImpedance impedance;
};

SolvedPoint solve_dipole(const DipoleGeometry& geometry, const Substrate& substrate,
                         double freq_hz, const SolverOptions& options = {});

/// Frequencies start, start + step, ... up to stop (inclusive within half a step).
std::vector<double> frequency_grid(double f_start_hz, double f_stop_hz, double f_step_hz);

/// Impedance and derived metrics over a band. Checks the design restrictions
/// first; solver failures are rethrown annotated with the frequency.
SweepResult sweep(const DipoleGeometry& geometry, const Substrate& substrate, double f_start_hz,
                  double f_stop_hz, double f_step_hz, const SolverOptions& options = {});

}  // namespace pdipole
