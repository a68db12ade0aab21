#pragma once

#include <string>
#include <vector>

#include "pdipole/substrate.hpp"

namespace pdipole {

enum class FeedStyle { kIdealCenter, kOpenStub, kViaHole };

std::string to_string(FeedStyle style);
FeedStyle feed_style_from_string(const std::string& text);

/// Printed strip dipole. All dimensions in millimetres.
struct DipoleGeometry {
  double length_mm = 0.0;
  double width_mm = 0.0;
  double gap_mm = 0.0;
  double thickness_mm = 0.035;
  FeedStyle feed = FeedStyle::kIdealCenter;

  void validate() const;
};

// Sizing formulas. Frequencies in Hz, lengths in mm.

double free_space_wavelength(double freq_hz);

/// Mean of substrate and air permittivity, (eps_r + 1) / 2.
double eps_eff_average(double eps_r);

/// Quasi-static strip permittivity with fringing:
/// (eps_r + 1)/2 + (eps_r - 1)/2 * (1 + 12 h / w)^(-1/2).
double eps_eff_microstrip(double eps_r, double width_mm, double height_mm);

double guided_wavelength(double freq_hz, double eps_eff);

double half_wave_length(double lambda_mm);
double stub_fed_length(double lambda_mm);  // 3/4 of lambda
double via_fed_length(double lambda_mm);   // 2/3 of lambda

/// Width rule used for synthesis, as a fraction of the guided wavelength.
inline constexpr double kWidthFraction = 0.06;
/// Recommended substrate height, as a fraction of the guided wavelength.
inline constexpr double kHeightFraction = 0.02;

struct SynthesizedDesign {
  DipoleGeometry geometry;
  double eps_eff_average = 1.0;     // used for lambda_d
  double lambda_d_mm = 0.0;         // guided wavelength with the averaged permittivity
  double eps_eff_fringing = 1.0;    // used for the stub/via length rules
  double lambda_fringing_mm = 0.0;
  double recommended_h_mm = 0.0;
};

/// Turns (substrate, frequency, feed style) into a candidate dipole.
/// Throws DesignRuleError naming the restriction if the result breaks one.
SynthesizedDesign synthesize_geometry(const Substrate& substrate, double freq_hz, FeedStyle feed);

enum class RuleKind { kRecommendation, kRestriction };
enum class RuleStatus { kPass, kWarn, kViolate };

std::string to_string(RuleStatus status);

struct RuleEntry {
  std::string id;           // e.g. "W/h", "L>=0.48lambda"
  std::string description;
  RuleKind kind = RuleKind::kRecommendation;
  double measured = 0.0;    // the ratio that was tested
  double lower = 0.0;       // -inf when unbounded
  double upper = 0.0;       // +inf when unbounded
  RuleStatus status = RuleStatus::kPass;
};

struct RuleCheckResult {
  double lambda_mm = 0.0;
  std::vector<RuleEntry> entries;

  bool has_violations() const;
  bool has_warnings() const;
  const RuleEntry* first_violation() const;
};

/// Evaluates the four recommendation and four restriction clauses.
/// Wavelength is the guided wavelength with the averaged permittivity.
RuleCheckResult check_design_rules(const DipoleGeometry& geometry, const Substrate& substrate,
                                   double freq_hz);

/// Same clauses against an explicitly supplied wavelength.
RuleCheckResult check_design_rules_at_wavelength(const DipoleGeometry& geometry,
                                                 const Substrate& substrate, double lambda_mm);

/// Throws DesignRuleError when any restriction fails. Recommendations are ignored.
void require_restrictions(const DipoleGeometry& geometry, const Substrate& substrate);

}  // namespace pdipole
