#include "pdipole/em_solver.hpp"

#include <cmath>
#include <sstream>

#include "pdipole/constants.hpp"
#include "pdipole/errors.hpp"
#include "pdipole/kernel.hpp"

namespace pdipole {

namespace {

using constants::kMmPerMetre;
using constants::kPi;

constexpr double kThinWireRatio = 20.0;
constexpr double kAntiresonanceOhm = 1e6;

}  // namespace

std::string to_string(KernelKind kind) {
  return kind == KernelKind::kReduced ? "reduced" : "exact";
}

KernelKind kernel_kind_from_string(const std::string& text) {
  if (text == "reduced") return KernelKind::kReduced;
  if (text == "exact") return KernelKind::kExact;
  throw UsageError("unknown kernel '" + text + "' (expected reduced or exact)");
}

void WireModel::validate() const {
  if (!(radius_mm > 0.0)) throw DomainError("wire radius must be positive");
  if (!(total_length_mm > kThinWireRatio * radius_mm)) {
    std::ostringstream msg;
    msg << "thin-wire model needs length > " << kThinWireRatio << " x radius (length "
        << total_length_mm << " mm, radius " << radius_mm << " mm)";
    throw DomainError(msg.str());
  }
  if (!(eps_eff >= 1.0)) throw DomainError("embedding permittivity must be >= 1");
}

double strip_to_wire(double width_mm) {
  if (!(width_mm > 0.0)) throw DomainError("strip width must be positive");
  return width_mm / 4.0;
}

WireModel wire_model_for(const DipoleGeometry& geometry, const Substrate& substrate) {
  geometry.validate();
  substrate.validate();
  WireModel m;
  m.total_length_mm = geometry.length_mm;
  m.radius_mm = strip_to_wire(geometry.width_mm);
  m.eps_eff = eps_eff_microstrip(substrate.eps_r, geometry.width_mm, substrate.h_mm);
  return m;
}

int max_segments(const WireModel& model) {
  model.validate();
  int n = static_cast<int>(std::floor(model.total_length_mm / model.radius_mm)) - 1;
  if (n % 2 == 0) --n;
  return n;
}

SegmentMesh build_mesh(const WireModel& model, int n) {
  model.validate();
  if (n % 2 == 0) throw UsageError("segment count must be odd (got " + std::to_string(n) + ")");
  if (n < kMinSegments) {
    throw UsageError("segment count must be >= " + std::to_string(kMinSegments));
  }
  SegmentMesh mesh;
  mesh.n = n;
  mesh.total_length_mm = model.total_length_mm;
  mesh.radius_mm = model.radius_mm;
  mesh.delta_mm = model.total_length_mm / (n + 1);
  if (mesh.delta_mm < model.radius_mm) {
    std::ostringstream msg;
    msg << "mesh too fine: segment length " << mesh.delta_mm << " mm is below the wire radius "
        << model.radius_mm << " mm; use at most " << max_segments(model) << " segments";
    throw UsageError(msg.str());
  }
  mesh.centers_mm.resize(n);
  for (int i = 0; i < n; ++i) {
    mesh.centers_mm[i] = (i - (n - 1) / 2) * mesh.delta_mm;
  }
  mesh.feed_index = (n - 1) / 2;
  return mesh;
}

SystemMatrix assemble_system(const SegmentMesh& mesh, double freq_hz, const WireModel& model,
                             KernelKind kernel) {
  if (!(freq_hz > 0.0)) throw DomainError("frequency must be positive");
  const int n = mesh.n;
  const double delta = mesh.delta_mm / kMmPerMetre;
  const double a = mesh.radius_mm / kMmPerMetre;
  const double omega = 2.0 * kPi * freq_hz;
  const double eps = constants::kEps0 * model.eps_eff;
  const double k = omega * std::sqrt(constants::kMu0 * eps);

  // psi[i] is the cell potential at an offset of i segments; entries depend
  // only on |m - n|, so one row of potentials fills the whole matrix.
  std::vector<cplx> psi(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) psi[i] = cell_potential(i * delta, delta, a, k, kernel);

  const cplx j_omega_mu(0.0, omega * constants::kMu0);
  const cplx inv_j_omega_eps(0.0, -1.0 / (omega * eps));
  std::vector<cplx> row(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    const cplx lower = psi[static_cast<std::size_t>(std::abs(d - 1))];
    row[d] = j_omega_mu * delta * delta * psi[d] +
             inv_j_omega_eps * (2.0 * psi[d] - psi[d + 1] - lower);
  }

  SystemMatrix sys;
  sys.freq_hz = freq_hz;
  sys.wavenumber = k;
  sys.kernel = kernel;
  sys.z.resize(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) sys.z(r, c) = row[std::abs(r - c)];
  }
  return sys;
}

CurrentDistribution solve_current(const SystemMatrix& system, const SegmentMesh& mesh,
                                  double feed_voltage) {
  const auto n = system.z.rows();
  if (n != mesh.n || system.z.cols() != n) throw UsageError("system and mesh sizes differ");

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(system.z);
  const double rcond = lu.rcond();
  const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(cond < kMaxConditionNumber)) {
    std::ostringstream msg;
    msg << "impedance matrix is ill-conditioned (condition estimate " << cond << ")";
    throw SolverError(msg.str());
  }

  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  v(mesh.feed_index) = feed_voltage;
  const Eigen::VectorXcd i = lu.solve(v);
  const double residual = (system.z * i - v).norm() / v.norm();
  if (!(residual < kMaxRelativeResidual)) {
    std::ostringstream msg;
    msg << "linear solve residual " << residual << " exceeds " << kMaxRelativeResidual
        << " (condition estimate " << cond << ")";
    throw SolverError(msg.str());
  }

  CurrentDistribution out;
  out.currents.assign(i.data(), i.data() + n);
  out.feed_voltage = feed_voltage;
  out.feed_index = mesh.feed_index;
  out.condition_estimate = cond;
  out.relative_residual = residual;
  out.wavenumber = system.wavenumber;
  return out;
}

FeedImpedance input_impedance(const CurrentDistribution& current) {
  if (!current.solved()) throw UsageError("current distribution has not been solved");
  const cplx i_feed = current.currents.at(static_cast<std::size_t>(current.feed_index));
  FeedImpedance out;
  if (std::abs(i_feed) * kAntiresonanceOhm <= std::abs(current.feed_voltage)) {
    out.near_antiresonance = true;
  }
  out.z = current.feed_voltage / i_feed;
  return out;
}

SolvedPoint solve_dipole(const DipoleGeometry& geometry, const Substrate& substrate,
                         double freq_hz, const SolverOptions& options) {
  SolvedPoint p;
  p.model = wire_model_for(geometry, substrate);
  p.mesh = build_mesh(p.model, options.segments);
  const auto sys = assemble_system(p.mesh, freq_hz, p.model, options.kernel);
  p.current = solve_current(sys, p.mesh);
  p.impedance = input_impedance(p.current);
  return p;
}

std::vector<double> frequency_grid(double f_start_hz, double f_stop_hz, double f_step_hz) {
  if (!(f_start_hz > 0.0)) throw DomainError("start frequency must be positive");
  if (!(f_stop_hz >= f_start_hz)) throw DomainError("stop frequency must not precede start");
  if (f_stop_hz == f_start_hz) return {f_start_hz};
  if (!(f_step_hz > 0.0)) throw DomainError("frequency step must be positive");
  const auto count = static_cast<std::size_t>(std::floor((f_stop_hz - f_start_hz) / f_step_hz + 0.5)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = f_start_hz + static_cast<double>(i) * f_step_hz;
  return out;
}

SweepResult sweep(const DipoleGeometry& geometry, const Substrate& substrate, double f_start_hz,
                  double f_stop_hz, double f_step_hz, const SolverOptions& options) {
  geometry.validate();
  substrate.validate();
  require_restrictions(geometry, substrate);

  const auto model = wire_model_for(geometry, substrate);
  const auto mesh = build_mesh(model, options.segments);

  SweepResult out;
  out.z0 = options.z0;
  for (double f : frequency_grid(f_start_hz, f_stop_hz, f_step_hz)) {
    try {
      const auto sys = assemble_system(mesh, f, model, options.kernel);
      const auto current = solve_current(sys, mesh);
      out.samples.push_back(make_sample(f, input_impedance(current).z, options.z0));
    } catch (const SolverError& e) {
      std::ostringstream msg;
      msg << "at " << f / 1e6 << " MHz: " << e.what();
      throw SolverError(msg.str());
    } catch (const NonPassiveError& e) {
      std::ostringstream msg;
      msg << "at " << f / 1e6 << " MHz: " << e.what();
      throw SolverError(msg.str());
    }
  }
  annotate(out, options.bandwidth_threshold_db);
  return out;
}

}  // namespace pdipole
