#include "pdipole/design_equations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdipole/constants.hpp"
#include "pdipole/errors.hpp"

namespace pdipole {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Clause comparisons tolerate round-off on exact boundaries (e.g. h = 0.02 lambda).
constexpr double kBoundaryRelTol = 1e-12;

void require_positive_frequency(double freq_hz) {
  if (!(freq_hz > 0.0) || !std::isfinite(freq_hz)) {
    throw DomainError("frequency must be positive and finite");
  }
}

void require_positive_length(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

bool within(double value, double lower, double upper) {
  const bool lo_ok = lower == -kInf || value >= lower * (1.0 - kBoundaryRelTol);
  const bool hi_ok = upper == kInf || value <= upper * (1.0 + kBoundaryRelTol);
  return lo_ok && hi_ok;
}

RuleEntry make_rule(std::string id, std::string description, RuleKind kind, double measured,
                    double lower, double upper) {
  RuleEntry e;
  e.id = std::move(id);
  e.description = std::move(description);
  e.kind = kind;
  e.measured = measured;
  e.lower = lower;
  e.upper = upper;
  if (within(measured, lower, upper)) {
    e.status = RuleStatus::kPass;
  } else {
    e.status = kind == RuleKind::kRestriction ? RuleStatus::kViolate : RuleStatus::kWarn;
  }
  return e;
}

}  // namespace

std::string to_string(FeedStyle style) {
  switch (style) {
    case FeedStyle::kIdealCenter: return "ideal";
    case FeedStyle::kOpenStub: return "stub";
    case FeedStyle::kViaHole: return "via";
  }
  return "ideal";
}

FeedStyle feed_style_from_string(const std::string& text) {
  if (text == "ideal" || text == "ideal_center") return FeedStyle::kIdealCenter;
  if (text == "stub" || text == "open_stub") return FeedStyle::kOpenStub;
  if (text == "via" || text == "via_hole") return FeedStyle::kViaHole;
  throw UsageError("unknown feed style '" + text + "' (expected ideal, stub or via)");
}

std::string to_string(RuleStatus status) {
  switch (status) {
    case RuleStatus::kPass: return "pass";
    case RuleStatus::kWarn: return "warn";
    case RuleStatus::kViolate: return "violate";
  }
  return "pass";
}

void DipoleGeometry::validate() const {
  if (!(length_mm > 0.0)) throw DomainError("dipole length must be positive");
  if (!(width_mm > 0.0)) throw DomainError("dipole width must be positive");
  if (!(gap_mm >= 0.0)) throw DomainError("feed gap must be non-negative");
  if (!(thickness_mm >= 0.0)) throw DomainError("conductor thickness must be non-negative");
  if (!(gap_mm < length_mm)) throw DomainError("feed gap must be shorter than the dipole");
}

double free_space_wavelength(double freq_hz) {
  require_positive_frequency(freq_hz);
  return constants::kSpeedOfLight / freq_hz * constants::kMmPerMetre;
}

double eps_eff_average(double eps_r) {
  if (!(eps_r >= 1.0)) throw DomainError("eps_r must be >= 1");
  return 0.5 * (eps_r + 1.0);
}

double eps_eff_microstrip(double eps_r, double width_mm, double height_mm) {
  if (!(eps_r >= 1.0)) throw DomainError("eps_r must be >= 1");
  require_positive_length(width_mm, "strip width");
  require_positive_length(height_mm, "substrate height");
  return 0.5 * (eps_r + 1.0) + 0.5 * (eps_r - 1.0) / std::sqrt(1.0 + 12.0 * height_mm / width_mm);
}

double guided_wavelength(double freq_hz, double eps_eff) {
  if (!(eps_eff >= 1.0)) throw DomainError("effective permittivity must be >= 1");
  return free_space_wavelength(freq_hz) / std::sqrt(eps_eff);
}

double half_wave_length(double lambda_mm) {
  require_positive_length(lambda_mm, "wavelength");
  return lambda_mm / 2.0;
}

double stub_fed_length(double lambda_mm) {
  require_positive_length(lambda_mm, "wavelength");
  return 3.0 * lambda_mm / 4.0;
}

double via_fed_length(double lambda_mm) {
  require_positive_length(lambda_mm, "wavelength");
  return 2.0 * lambda_mm / 3.0;
}

SynthesizedDesign synthesize_geometry(const Substrate& substrate, double freq_hz, FeedStyle feed) {
  substrate.validate();
  require_positive_frequency(freq_hz);

  SynthesizedDesign d;
  d.eps_eff_average = eps_eff_average(substrate.eps_r);
  d.lambda_d_mm = guided_wavelength(freq_hz, d.eps_eff_average);
  d.recommended_h_mm = kHeightFraction * d.lambda_d_mm;

  auto& g = d.geometry;
  g.feed = feed;
  g.width_mm = kWidthFraction * d.lambda_d_mm;

  d.eps_eff_fringing = eps_eff_microstrip(substrate.eps_r, g.width_mm, substrate.h_mm);
  d.lambda_fringing_mm = guided_wavelength(freq_hz, d.eps_eff_fringing);

  switch (feed) {
    case FeedStyle::kIdealCenter: g.length_mm = half_wave_length(d.lambda_d_mm); break;
    case FeedStyle::kOpenStub: g.length_mm = stub_fed_length(d.lambda_fringing_mm); break;
    case FeedStyle::kViaHole: g.length_mm = via_fed_length(d.lambda_fringing_mm); break;
  }
  g.validate();
  require_restrictions(g, substrate);
  return d;
}

bool RuleCheckResult::has_violations() const { return first_violation() != nullptr; }

bool RuleCheckResult::has_warnings() const {
  for (const auto& e : entries) {
    if (e.status == RuleStatus::kWarn) return true;
  }
  return false;
}

const RuleEntry* RuleCheckResult::first_violation() const {
  for (const auto& e : entries) {
    if (e.status == RuleStatus::kViolate) return &e;
  }
  return nullptr;
}

RuleCheckResult check_design_rules_at_wavelength(const DipoleGeometry& geometry,
                                                 const Substrate& substrate, double lambda_mm) {
  require_positive_length(lambda_mm, "wavelength");
  const double lam = lambda_mm;
  const double w = geometry.width_mm;
  const double t = geometry.thickness_mm;
  const double h = substrate.h_mm;

  RuleCheckResult r;
  r.lambda_mm = lam;
  r.entries.reserve(8);
  // Recommendations
  r.entries.push_back(make_rule("W_band", "0.05 lambda <= W <= 0.1 lambda",
                                RuleKind::kRecommendation, w / lam, 0.05, 0.1));
  r.entries.push_back(make_rule("L_min", "L >= 0.48 lambda", RuleKind::kRecommendation,
                                geometry.length_mm / lam, 0.48, kInf));
  r.entries.push_back(make_rule("h_max", "h <= 0.02 lambda", RuleKind::kRecommendation, h / lam,
                                -kInf, 0.02));
  r.entries.push_back(make_rule("T_thin", "T << lambda (T <= 0.001 lambda)",
                                RuleKind::kRecommendation, t / lam, -kInf, 0.001));
  // Restrictions
  r.entries.push_back(make_rule("W/h", "0.05 <= W/h <= 20", RuleKind::kRestriction,
                                h > 0.0 ? w / h : kInf, 0.05, 20.0));
  r.entries.push_back(make_rule("T/W", "T/W <= 0.5", RuleKind::kRestriction,
                                w > 0.0 ? t / w : kInf, -kInf, 0.5));
  r.entries.push_back(make_rule("T/h", "T/h <= 0.5", RuleKind::kRestriction,
                                h > 0.0 ? t / h : kInf, -kInf, 0.5));
  r.entries.push_back(make_rule("eps_r", "eps_r >= 1", RuleKind::kRestriction, substrate.eps_r,
                                1.0, kInf));
  return r;
}

RuleCheckResult check_design_rules(const DipoleGeometry& geometry, const Substrate& substrate,
                                   double freq_hz) {
  const double lam = guided_wavelength(freq_hz, eps_eff_average(std::max(substrate.eps_r, 1.0)));
  return check_design_rules_at_wavelength(geometry, substrate, lam);
}

void require_restrictions(const DipoleGeometry& geometry, const Substrate& substrate) {
  // Restrictions do not depend on the wavelength; any positive value works here.
  const auto result = check_design_rules_at_wavelength(geometry, substrate, 1.0);
  if (const auto* v = result.first_violation()) {
    throw DesignRuleError(v->id, "design restriction '" + v->description +
                                     "' violated (measured " + std::to_string(v->measured) + ")");
  }
}

}  // namespace pdipole
