#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pdipole/farfield.hpp"
#include "pdipole/metrics.hpp"
#include "pdipole/sweep_optimize.hpp"

namespace pdipole {

inline constexpr const char* kSweepCsvHeader = "freq_hz,r_ohm,x_ohm,s11_db,vswr";
inline constexpr const char* kPatternCsvHeader = "plane,angle_deg,field_db";
inline constexpr const char* kStudyCsvHeader =
    "param_mm,r_ohm,x_ohm,vswr,rl_db,bw_pct,directivity_dbi";

/// Shortest decimal text that round-trips the double ('.' decimal point,
/// locale independent).
std::string format_number(double value);

void write_sweep_csv(const SweepResult& sweep, std::ostream& out);
void write_pattern_csv(const PatternCut& cut, std::ostream& out);
void write_study_table(const std::vector<StudyRow>& rows, std::ostream& out);

// File variants; unwritable paths raise IoError, empty inputs UsageError.
void emit_sweep_csv(const SweepResult& sweep, const std::string& path);
void emit_pattern_csv(const PatternCut& cut, const std::string& path);
void emit_study_table(const std::vector<StudyRow>& rows, const std::string& path);

/// Resonance, deepest return loss, bandwidth and VSWR at `center_hz` on one line.
std::string summary_line(const SweepResult& sweep, double center_hz, double vswr_at_center);

}  // namespace pdipole
