#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdipole {

/// Dielectric board description. Heights are in millimetres.
struct Substrate {
  std::string name;
  double eps_r = 1.0;
  double h_mm = 1.0;
  double tan_delta = 0.0;

  /// Throws DomainError when eps_r < 1, h <= 0 or tan_delta outside [0, 1).
  void validate() const;
};

/// Named substrates loaded from a `name,eps_r,h_mm,tan_delta` text file.
class SubstrateCatalog {
 public:
  SubstrateCatalog() = default;
  explicit SubstrateCatalog(std::vector<Substrate> entries);

  /// Parses catalog text. Blank lines and '#' comments are skipped;
  /// malformed records raise ConfigError with the line number.
  static SubstrateCatalog parse(std::istream& in);
  static SubstrateCatalog load(const std::string& path);

  /// FR4, Arlon AD300 and Rogers RT5880 at 1.6 mm.
  static SubstrateCatalog builtin();

  /// Catalog named by PDIPOLE_SUBSTRATES when set, otherwise builtin().
  static SubstrateCatalog from_environment();

  std::optional<Substrate> find(std::string_view name) const;
  const std::vector<Substrate>& entries() const noexcept { return entries_; }

 private:
  std::vector<Substrate> entries_;
};

inline constexpr const char* kCatalogEnvVar = "PDIPOLE_SUBSTRATES";

}  // namespace pdipole
