#include "pdipole/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pdipole/errors.hpp"

namespace pdipole {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

void write_sweep_csv(const SweepResult& sweep, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const auto& s : sweep.samples) {
    out << format_number(s.freq_hz) << ',' << format_number(s.z_in.real()) << ','
        << format_number(s.z_in.imag()) << ',' << format_number(s.s11_db) << ','
        << format_number(s.vswr) << '\n';
  }
}

void write_pattern_csv(const PatternCut& cut, std::ostream& out) {
  out << kPatternCsvHeader << '\n';
  const std::string plane = to_string(cut.plane);
  for (std::size_t i = 0; i < cut.angles_deg.size(); ++i) {
    out << plane << ',' << format_number(cut.angles_deg[i]) << ','
        << format_number(cut.field_db[i]) << '\n';
  }
  out << "# directivity_dbi=" << format_number(cut.directivity_dbi) << '\n';
  out << "# hpbw_deg=" << (cut.hpbw.full_width ? std::string("full") : format_number(cut.hpbw.degrees))
      << '\n';
}

void write_study_table(const std::vector<StudyRow>& rows, std::ostream& out) {
  out << kStudyCsvHeader << '\n';
  const std::string nan = "nan";
  for (const auto& r : rows) {
    if (r.error) {
      out << "# param_mm=" << format_number(r.param_mm) << " failed: " << *r.error << '\n';
      out << format_number(r.param_mm);
      for (int i = 0; i < 6; ++i) out << ',' << nan;
      out << '\n';
      continue;
    }
    out << format_number(r.param_mm) << ',' << format_number(r.z_in.real()) << ','
        << format_number(r.z_in.imag()) << ',' << format_number(r.vswr) << ','
        << format_number(r.rl_db) << ',' << format_number(r.bw_pct) << ','
        << format_number(r.directivity_dbi) << '\n';
  }
}

void emit_sweep_csv(const SweepResult& sweep, const std::string& path) {
  if (sweep.samples.empty()) throw UsageError("sweep has no samples");
  auto out = open_output(path);
  write_sweep_csv(sweep, out);
  finish(out, path);
}

void emit_pattern_csv(const PatternCut& cut, const std::string& path) {
  if (cut.angles_deg.empty() || cut.angles_deg.size() != cut.field_db.size()) {
    throw UsageError("pattern cut is empty or inconsistent");
  }
  auto out = open_output(path);
  write_pattern_csv(cut, out);
  finish(out, path);
}

void emit_study_table(const std::vector<StudyRow>& rows, const std::string& path) {
  if (rows.empty()) throw UsageError("study has no rows");
  auto out = open_output(path);
  write_study_table(rows, out);
  finish(out, path);
}

std::string summary_line(const SweepResult& sweep, double center_hz, double vswr_at_center) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << "resonance ";
  if (sweep.resonant_hz) {
    s << *sweep.resonant_hz / 1e6 << " MHz";
  } else {
    s << "none in band";
  }
  s << ", best S11 " << format_db(sweep.min_s11_db) << " at " << sweep.f_min_s11_hz / 1e6
    << " MHz, BW ";
  s.precision(2);
  s << sweep.bandwidth.percent << " %";
  if (sweep.bandwidth.edge_clipped) s << " (clipped at band edge)";
  s << ", VSWR@" << std::setprecision(1) << center_hz / 1e6 << " MHz ";
  s.precision(2);
  if (std::isinf(vswr_at_center)) {
    s << "inf";
  } else {
    s << vswr_at_center;
  }
  return s.str();
}

}  // namespace pdipole
