// pdipole: printed dipole design, analysis and optimisation from the command line.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdipole/config.hpp"
#include "pdipole/design_equations.hpp"
#include "pdipole/em_solver.hpp"
#include "pdipole/errors.hpp"
#include "pdipole/farfield.hpp"
#include "pdipole/metrics.hpp"
#include "pdipole/microstrip_feed.hpp"
#include "pdipole/report.hpp"
#include "pdipole/sweep_optimize.hpp"

using namespace pdipole;

namespace {

struct FlagSet {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config_path;
  std::string plane = "e";
};

// Flag name -> config key.
const std::vector<std::pair<std::string, std::string>> kFlagKeys = {
    {"--substrate", "substrate"},    {"--freq", "freq_mhz"},         {"--band", "band"},
    {"--length", "length_mm"},       {"--width", "width_mm"},        {"--gap", "gap_mm"},
    {"--thickness", "thickness_mm"}, {"--feed", "feed"},             {"--mesh", "mesh"},
    {"--kernel", "kernel"},          {"--bw-threshold", "bw_threshold_db"},
    {"--z0", "z0_ohm"},              {"--lengths", "lengths_mm"},    {"--widths", "widths_mm"},
    {"--bounds", "bounds_mm"},       {"--out", "out"},
};

const std::map<std::string, std::string> kFlagHelp = {
    {"--substrate", "catalog name or inline eps_r:h_mm:tan_delta"},
    {"--freq", "design frequency in MHz"},
    {"--band", "sweep band start:stop:step in MHz"},
    {"--length", "dipole length in mm"},
    {"--width", "strip width in mm"},
    {"--gap", "feed gap in mm"},
    {"--thickness", "metal thickness in mm"},
    {"--feed", "ideal | stub | via"},
    {"--mesh", "odd segment count"},
    {"--kernel", "exact | reduced"},
    {"--bw-threshold", "bandwidth threshold in dB (negative)"},
    {"--z0", "reference impedance in ohm"},
    {"--lengths", "comma-separated lengths for study-length (mm)"},
    {"--widths", "comma-separated widths for study-width (mm)"},
    {"--bounds", "optimiser length bounds lo:hi (mm)"},
    {"--out", "output path"},
};

void add_common(CLI::App* cmd, FlagSet& flags) {
  cmd->add_option("--config", flags.config_path, "key = value configuration file");
  for (const auto& [flag, key] : kFlagKeys) {
    const std::string& k = key;
    cmd->add_option_function<std::string>(
        flag, [&flags, k](const std::string& v) { flags.values[k] = v; }, kFlagHelp.at(flag));
  }
}

RunConfig resolve(const FlagSet& flags) {
  const auto catalog = SubstrateCatalog::from_environment();
  if (flags.config_path.empty()) return parse_config("", flags.values, catalog);
  return load_config(flags.config_path, flags.values, catalog);
}

std::string out_path(const RunConfig& cfg, const char* fallback) {
  return cfg.out.empty() ? std::string(fallback) : cfg.out;
}

std::string fixed(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double vswr_at(const RunConfig& cfg) {
  const auto point = solve_dipole(cfg.geometry, cfg.substrate, cfg.freq_hz, cfg.solver);
  return make_sample(cfg.freq_hz, point.impedance.z, cfg.solver.z0).vswr;
}

SweepResult run_sweep(const RunConfig& cfg) {
  return sweep(cfg.geometry, cfg.substrate, cfg.band.f_start_hz, cfg.band.f_stop_hz,
               cfg.band.f_step_hz, cfg.solver);
}

int cmd_design(const RunConfig& cfg) {
  const auto d = synthesize_geometry(cfg.substrate, cfg.freq_hz, cfg.geometry.feed);
  const auto& g = d.geometry;
  std::cout << "substrate " << cfg.substrate.name << " eps_r=" << format_number(cfg.substrate.eps_r)
            << " h=" << format_number(cfg.substrate.h_mm) << " mm\n";
  std::cout << "eps_eff(avg)=" << fixed(d.eps_eff_average, 3)
            << " lambda_d=" << fixed(d.lambda_d_mm, 2) << " mm"
            << "  eps_eff(fringing)=" << fixed(d.eps_eff_fringing, 3)
            << " lambda=" << fixed(d.lambda_fringing_mm, 2) << " mm\n";
  std::cout << "synthesized L=" << fixed(g.length_mm, 2) << " mm W=" << fixed(g.width_mm, 2)
            << " mm feed=" << to_string(g.feed) << " recommended h=" << fixed(d.recommended_h_mm, 2)
            << " mm\n";

  const auto feed = design_feed_line(cfg.substrate, cfg.freq_hz, cfg.solver.z0);
  std::cout << "feed line w=" << fixed(feed.w_mm, 3) << " mm Z0=" << fixed(feed.z0_ohm, 2)
            << " ohm eps_eff=" << fixed(feed.eps_eff, 3);
  if (feed.stub_length_mm) std::cout << " stub=" << fixed(*feed.stub_length_mm, 2) << " mm";
  std::cout << '\n';

  const auto rules = check_design_rules(cfg.geometry, cfg.substrate, cfg.freq_hz);
  std::cout << "rules for L=" << format_number(cfg.geometry.length_mm)
            << " W=" << format_number(cfg.geometry.width_mm) << " mm (lambda "
            << fixed(rules.lambda_mm, 2) << " mm):\n";
  for (const auto& e : rules.entries) {
    std::cout << "  " << to_string(e.status) << "  " << e.id << "  " << e.description
              << "  measured=" << format_number(e.measured) << '\n';
  }
  const auto sw = run_sweep(cfg);
  std::cout << "design: " << summary_line(sw, cfg.freq_hz, vswr_at(cfg)) << '\n';
  return 0;
}

int cmd_analyze(const RunConfig& cfg) {
  const auto sw = run_sweep(cfg);
  const auto path = out_path(cfg, "sweep.csv");
  emit_sweep_csv(sw, path);
  std::cout << "analyze: " << summary_line(sw, cfg.freq_hz, vswr_at(cfg)) << " -> " << path
            << '\n';
  return 0;
}

int cmd_pattern(const RunConfig& cfg, const std::string& plane) {
  const auto point = solve_dipole(cfg.geometry, cfg.substrate, cfg.freq_hz, cfg.solver);
  PatternCut cut;
  if (plane == "h") {
    cut = h_plane_cut(point.current, point.mesh, cfg.freq_hz);
  } else {
    cut = pattern_from_current(point.current, point.mesh, cfg.freq_hz, theta_grid());
  }
  const auto path = out_path(cfg, "pattern.csv");
  emit_pattern_csv(cut, path);
  const auto sw = run_sweep(cfg);
  const double v = make_sample(cfg.freq_hz, point.impedance.z, cfg.solver.z0).vswr;
  std::cout << "pattern: " << to_string(cut.plane) << "-plane D=" << fixed(cut.directivity_dbi, 2)
            << " dBi HPBW="
            << (cut.hpbw.full_width ? std::string("full") : fixed(cut.hpbw.degrees, 1) + " deg")
            << ", " << summary_line(sw, cfg.freq_hz, v) << " -> " << path << '\n';
  return 0;
}

std::string join_rows(const std::vector<StudyRow>& rows, double (*field)(const StudyRow&),
                      int digits) {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += '/';
    s += rows[i].error ? "nan" : fixed(field(rows[i]), digits);
  }
  return s;
}

int print_study(const char* name, const std::vector<StudyRow>& rows, const RunConfig& cfg,
                const std::string& path) {
  int failed = 0;
  for (const auto& r : rows) {
    if (r.error) {
      ++failed;
      std::cerr << name << ": " << format_number(r.param_mm) << " mm failed: " << *r.error << '\n';
    }
  }
  std::cout << name << " (n=" << (rows.empty() ? 0 : rows.front().segments) << "): resonance "
            << join_rows(rows, [](const StudyRow& r) { return r.resonant_hz ? *r.resonant_hz / 1e6 : NAN; }, 1)
            << " MHz, best S11 " << join_rows(rows, [](const StudyRow& r) { return r.best_rl_db; }, 2)
            << " dB, BW " << join_rows(rows, [](const StudyRow& r) { return r.bw_pct; }, 2)
            << " %, VSWR@" << fixed(cfg.band.f_center_hz / 1e6, 1) << " MHz "
            << join_rows(rows, [](const StudyRow& r) { return r.vswr; }, 2) << " -> " << path
            << '\n';
  return failed == static_cast<int>(rows.size()) ? static_cast<int>(ExitCode::kSolver) : 0;
}

int cmd_study_length(const RunConfig& cfg) {
  const auto rows =
      length_study(cfg.geometry.width_mm, cfg.lengths_mm, cfg.substrate, cfg.band, cfg.solver);
  const auto path = out_path(cfg, "study_length.csv");
  emit_study_table(rows, path);
  return print_study("study-length", rows, cfg, path);
}

int cmd_study_width(const RunConfig& cfg) {
  const auto rows =
      width_study(cfg.geometry.length_mm, cfg.widths_mm, cfg.substrate, cfg.band, cfg.solver);
  const auto path = out_path(cfg, "study_width.csv");
  emit_study_table(rows, path);
  return print_study("study-width", rows, cfg, path);
}

int cmd_optimize(const RunConfig& cfg) {
  const auto rl = optimize_for_max_rl(cfg.freq_hz, cfg.substrate, cfg.geometry.width_mm,
                                      cfg.bounds, cfg.solver);
  std::ostringstream line;
  line << "optimize: max-RL L=" << fixed(rl.length_mm, 2) << " mm S11=" << format_db(rl.s11_db)
       << " (" << to_string(rl.flag) << ", n=" << rl.segments << ")";
  int code = 0;
  try {
    const auto x0 = optimize_length(cfg.freq_hz, cfg.substrate, cfg.geometry.width_mm,
                                    cfg.bounds, cfg.solver);
    line << ", X=0 L=" << fixed(x0.length_mm, 2) << " mm Z=" << fixed(x0.z_in.real(), 2)
         << (x0.z_in.imag() < 0 ? "-j" : "+j") << fixed(std::abs(x0.z_in.imag()), 2)
         << " ohm in " << x0.iterations << " iterations";
  } catch (const BracketError& e) {
    std::cerr << "optimize: " << e.what() << '\n';
    line << ", X=0 L=none in bounds";
    code = static_cast<int>(ExitCode::kSolver);
  }
  std::cout << line.str() << " at " << fixed(cfg.freq_hz / 1e6, 1) << " MHz\n";
  return code;
}

int fail(const std::exception& e, ExitCode code) {
  std::cerr << "pdipole: " << e.what() << '\n';
  return static_cast<int>(code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Printed dipole antenna design, analysis and optimisation"};
  app.require_subcommand(1, 1);
  FlagSet flags;

  auto* design = app.add_subcommand("design", "synthesize dimensions and check design rules");
  auto* analyze = app.add_subcommand("analyze", "impedance sweep to CSV");
  auto* pattern = app.add_subcommand("pattern", "far-field cut to CSV");
  auto* study_len = app.add_subcommand("study-length", "sweep a set of lengths");
  auto* study_wid = app.add_subcommand("study-width", "sweep a set of widths");
  auto* optimize = app.add_subcommand("optimize", "length for resonance and for best match");
  for (auto* cmd : {design, analyze, pattern, study_len, study_wid, optimize}) {
    add_common(cmd, flags);
  }
  pattern->add_option("--plane", flags.plane, "e | h")
      ->check(CLI::IsMember({"e", "h"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::kConfig);
  }

  try {
    const RunConfig cfg = resolve(flags);
    if (design->parsed()) return cmd_design(cfg);
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (pattern->parsed()) return cmd_pattern(cfg, flags.plane);
    if (study_len->parsed()) return cmd_study_length(cfg);
    if (study_wid->parsed()) return cmd_study_width(cfg);
    if (optimize->parsed()) return cmd_optimize(cfg);
  } catch (const DesignRuleError& e) {
    return fail(e, ExitCode::kDesignRule);
  } catch (const IoError& e) {
    return fail(e, ExitCode::kIo);
  } catch (const ConfigError& e) {
    return fail(e, ExitCode::kConfig);
  } catch (const UsageError& e) {
    return fail(e, ExitCode::kConfig);
  } catch (const NonPassiveError& e) {
    return fail(e, ExitCode::kSolver);
  } catch (const DomainError& e) {
    return fail(e, ExitCode::kConfig);
  } catch (const RangeError& e) {
    return fail(e, ExitCode::kConfig);
  } catch (const std::exception& e) {
    return fail(e, ExitCode::kSolver);
  }
  return 0;
}
