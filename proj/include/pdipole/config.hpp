#pragma once

// Flat `key = value` run configuration with '#' comments.
//
// Keys (CLI flag in brackets):
//   substrate        catalog name or inline eps_r:h_mm:tan_delta   [--substrate]
//   eps_r, h_mm, tan_delta   override the selected substrate
//   freq_mhz         design / pattern frequency                     [--freq]
//   band             start:stop:step in MHz                         [--band]
//   length_mm, width_mm, gap_mm, thickness_mm                       [--length --width --gap --thickness]
//   feed             ideal | stub | via                             [--feed]
//   mesh             odd segment count                              [--mesh]
//   kernel           exact | reduced                                [--kernel]
//   bw_threshold_db  bandwidth criterion                            [--bw-threshold]
//   z0_ohm           reference impedance                            [--z0]
//   lengths_mm, widths_mm    comma-separated study values           [--lengths --widths]
//   bounds_mm        lo:hi optimiser bounds                         [--bounds]
//   out              output path                                    [--out]

#include <map>
#include <string>
#include <vector>

#include "pdipole/design_equations.hpp"
#include "pdipole/em_solver.hpp"
#include "pdipole/substrate.hpp"
#include "pdipole/sweep_optimize.hpp"

namespace pdipole {

enum class Provenance { kDefault, kFile, kFlag };

std::string to_string(Provenance p);

struct RunConfig {
  Substrate substrate;
  double freq_hz = 1.8e9;
  StudyBand band;
  DipoleGeometry geometry;
  SolverOptions solver;
  std::vector<double> lengths_mm{63.0, 65.0, 67.0};
  std::vector<double> widths_mm{5.0, 6.0, 7.0, 8.0};
  LengthBounds bounds;
  std::string out;  // empty: the subcommand picks a file name

  std::map<std::string, Provenance> provenance;  // one entry per known key

  Provenance source(const std::string& key) const;
};

/// Every key accepted in a config file or as a flag override.
const std::vector<std::string>& config_keys();

/// Resolves defaults, then `file_text` (may be empty), then `flag_overrides`
/// keyed like the file. Unknown keys and malformed values raise ConfigError
/// (with the line number for file entries); a restriction failure in the
/// resolved substrate or geometry raises DesignRuleError.
RunConfig parse_config(const std::string& file_text,
                       const std::map<std::string, std::string>& flag_overrides = {},
                       const SubstrateCatalog& catalog = SubstrateCatalog::builtin());

/// Reads `path` and forwards to parse_config. I/O failure raises IoError.
RunConfig load_config(const std::string& path,
                      const std::map<std::string, std::string>& flag_overrides = {},
                      const SubstrateCatalog& catalog = SubstrateCatalog::builtin());

}  // namespace pdipole
