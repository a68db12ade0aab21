#include "pdipole/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pdipole/errors.hpp"
#include "text_util.hpp"

namespace pdipole {

namespace {

struct Entry {
  std::string value;
  Provenance source = Provenance::kDefault;
  int line = 0;  // 0 for flag overrides
};

std::string where(const std::string& key, const Entry& e) {
  if (e.source == Provenance::kFile) return "config line " + std::to_string(e.line);
  return "override '" + key + "'";
}

std::vector<double> parse_list(std::string_view text, char sep) {
  std::vector<double> out;
  if (detail::trim(text).empty()) return out;
  for (auto part : detail::split(text, sep)) out.push_back(detail::parse_double(part));
  return out;
}

Substrate parse_inline_substrate(std::string_view text) {
  const auto parts = parse_list(text, ':');
  if (parts.size() != 3) throw std::invalid_argument("inline substrate must be eps_r:h_mm:tan_delta");
  Substrate s;
  s.name = "custom";
  s.eps_r = parts[0];
  s.h_mm = parts[1];
  s.tan_delta = parts[2];
  return s;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kDefault: return "default";
    case Provenance::kFile: return "file";
    case Provenance::kFlag: return "flag";
  }
  return "default";
}

Provenance RunConfig::source(const std::string& key) const {
  const auto it = provenance.find(key);
  return it == provenance.end() ? Provenance::kDefault : it->second;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "substrate", "eps_r",  "h_mm",   "tan_delta",       "freq_mhz",   "band",
      "length_mm", "width_mm", "gap_mm", "thickness_mm",  "feed",       "mesh",
      "kernel",    "bw_threshold_db",  "z0_ohm",          "lengths_mm", "widths_mm",
      "bounds_mm", "out"};
  return keys;
}

RunConfig parse_config(const std::string& file_text,
                       const std::map<std::string, std::string>& flag_overrides,
                       const SubstrateCatalog& catalog) {
  const auto& keys = config_keys();
  const auto known = [&](const std::string& k) {
    return std::find(keys.begin(), keys.end(), k) != keys.end();
  };

  std::map<std::string, Entry> entries;
  {
    std::istringstream in(file_text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto body = detail::trim(detail::strip_comment(line));
      if (body.empty()) continue;
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
      }
      const std::string key(detail::trim(body.substr(0, eq)));
      if (!known(key)) {
        throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      }
      entries[key] = {std::string(detail::trim(body.substr(eq + 1))), Provenance::kFile, line_no};
    }
  }
  for (const auto& [key, value] : flag_overrides) {
    if (!known(key)) throw ConfigError("unknown key '" + key + "'");
    entries[key] = {value, Provenance::kFlag, 0};
  }

  RunConfig cfg;
  cfg.geometry.length_mm = 67.0;
  cfg.geometry.width_mm = 6.0;
  cfg.geometry.gap_mm = 3.0;
  cfg.geometry.thickness_mm = 0.035;
  cfg.geometry.feed = FeedStyle::kOpenStub;
  for (const auto& k : keys) cfg.provenance[k] = Provenance::kDefault;

  const auto apply = [&](const std::string& key, auto&& fn) {
    const auto it = entries.find(key);
    if (it == entries.end()) return;
    try {
      fn(std::string_view(it->second.value));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(where(key, it->second) + ": bad value for '" + key + "': " + e.what());
    }
    cfg.provenance[key] = it->second.source;
  };

  // Substrate: catalog entry or inline triple, then per-field overrides.
  if (auto fr4 = catalog.find("FR4")) {
    cfg.substrate = *fr4;
  } else {
    cfg.substrate = *SubstrateCatalog::builtin().find("FR4");
  }
  apply("substrate", [&](std::string_view v) {
    if (v.find(':') != std::string_view::npos) {
      cfg.substrate = parse_inline_substrate(v);
    } else if (auto s = catalog.find(v)) {
      cfg.substrate = *s;
    } else {
      throw ConfigError(where("substrate", entries["substrate"]) + ": unknown substrate '" +
                        std::string(v) + "'");
    }
  });
  apply("eps_r", [&](std::string_view v) { cfg.substrate.eps_r = detail::parse_double(v); });
  apply("h_mm", [&](std::string_view v) { cfg.substrate.h_mm = detail::parse_double(v); });
  apply("tan_delta", [&](std::string_view v) { cfg.substrate.tan_delta = detail::parse_double(v); });

  apply("freq_mhz", [&](std::string_view v) {
    cfg.freq_hz = detail::parse_double(v) * 1e6;
    if (!(cfg.freq_hz > 0.0)) throw std::invalid_argument("frequency must be positive");
  });
  cfg.band.f_center_hz = cfg.freq_hz;
  apply("band", [&](std::string_view v) {
    const auto parts = parse_list(v, ':');
    if (parts.size() != 3) throw std::invalid_argument("band must be start:stop:step (MHz)");
    if (!(parts[0] > 0.0 && parts[1] >= parts[0] && parts[2] > 0.0)) {
      throw std::invalid_argument("band needs 0 < start <= stop and step > 0");
    }
    cfg.band.f_start_hz = parts[0] * 1e6;
    cfg.band.f_stop_hz = parts[1] * 1e6;
    cfg.band.f_step_hz = parts[2] * 1e6;
  });

  apply("length_mm", [&](std::string_view v) { cfg.geometry.length_mm = detail::parse_double(v); });
  apply("width_mm", [&](std::string_view v) { cfg.geometry.width_mm = detail::parse_double(v); });
  apply("gap_mm", [&](std::string_view v) { cfg.geometry.gap_mm = detail::parse_double(v); });
  apply("thickness_mm",
        [&](std::string_view v) { cfg.geometry.thickness_mm = detail::parse_double(v); });
  apply("feed", [&](std::string_view v) { cfg.geometry.feed = feed_style_from_string(std::string(v)); });

  apply("mesh", [&](std::string_view v) {
    const long n = detail::parse_long(v);
    if (n < kMinSegments || n % 2 == 0 || n > 100001) {
      throw std::invalid_argument("mesh must be an odd count >= " + std::to_string(kMinSegments));
    }
    cfg.solver.segments = static_cast<int>(n);
  });
  apply("kernel", [&](std::string_view v) { cfg.solver.kernel = kernel_kind_from_string(std::string(v)); });
  apply("bw_threshold_db", [&](std::string_view v) {
    cfg.solver.bandwidth_threshold_db = detail::parse_double(v);
    if (!(cfg.solver.bandwidth_threshold_db < 0.0)) {
      throw std::invalid_argument("bandwidth threshold must be negative");
    }
  });
  apply("z0_ohm", [&](std::string_view v) {
    cfg.solver.z0 = detail::parse_double(v);
    if (!(cfg.solver.z0 > 0.0)) throw std::invalid_argument("reference impedance must be positive");
  });
  apply("lengths_mm", [&](std::string_view v) { cfg.lengths_mm = parse_list(v, ','); });
  apply("widths_mm", [&](std::string_view v) { cfg.widths_mm = parse_list(v, ','); });
  apply("bounds_mm", [&](std::string_view v) {
    const auto parts = parse_list(v, ':');
    if (parts.size() != 2 || !(parts[0] > 0.0 && parts[1] > parts[0])) {
      throw std::invalid_argument("bounds must be lo:hi with 0 < lo < hi");
    }
    cfg.bounds = {parts[0], parts[1]};
  });
  apply("out", [&](std::string_view v) { cfg.out = std::string(v); });

  // The resolved configuration must satisfy the hard design restrictions.
  if (!(cfg.substrate.eps_r >= 1.0)) {
    throw DesignRuleError("eps_r", "design restriction 'eps_r >= 1' violated (eps_r = " +
                                       std::to_string(cfg.substrate.eps_r) + ")");
  }
  try {
    cfg.substrate.validate();
    cfg.geometry.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  require_restrictions(cfg.geometry, cfg.substrate);
  return cfg;
}

RunConfig load_config(const std::string& path,
                      const std::map<std::string, std::string>& flag_overrides,
                      const SubstrateCatalog& catalog) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), flag_overrides, catalog);
}

}  // namespace pdipole
