#include "pdipole/substrate.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pdipole/errors.hpp"
#include "text_util.hpp"

namespace pdipole {

void Substrate::validate() const {
  if (!(eps_r >= 1.0)) {
    throw DomainError("substrate '" + name + "': eps_r must be >= 1 (got " + std::to_string(eps_r) + ")");
  }
  if (!(h_mm > 0.0)) {
    throw DomainError("substrate '" + name + "': height must be positive");
  }
  if (!(tan_delta >= 0.0 && tan_delta < 1.0)) {
    throw DomainError("substrate '" + name + "': loss tangent must lie in [0, 1)");
  }
}

SubstrateCatalog::SubstrateCatalog(std::vector<Substrate> entries) : entries_(std::move(entries)) {
  for (const auto& s : entries_) s.validate();
}

SubstrateCatalog SubstrateCatalog::parse(std::istream& in) {
  std::vector<Substrate> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = detail::trim(detail::strip_comment(line));
    if (body.empty()) continue;
    const auto fields = detail::split(body, ',');
    if (fields.size() != 4) {
      throw ConfigError("substrate catalog line " + std::to_string(line_no) +
                        ": expected name,eps_r,h_mm,tan_delta");
    }
    Substrate s;
    s.name = std::string(detail::trim(fields[0]));
    try {
      s.eps_r = detail::parse_double(fields[1]);
      s.h_mm = detail::parse_double(fields[2]);
      s.tan_delta = detail::parse_double(fields[3]);
      s.validate();
    } catch (const std::exception& e) {
      throw ConfigError("substrate catalog line " + std::to_string(line_no) + ": " + e.what());
    }
    out.push_back(std::move(s));
  }
  return SubstrateCatalog(std::move(out));
}

SubstrateCatalog SubstrateCatalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open substrate catalog '" + path + "'");
  return parse(in);
}

SubstrateCatalog SubstrateCatalog::builtin() {
  // Keep in sync with data/substrates.csv.
  std::istringstream in(
      "FR4,4.3,1.6,0.002\n"
      "ArlonAD300,3.0,1.6,0.003\n"
      "RogersRT5880,2.2,1.6,0.0009\n");
  return parse(in);
}

SubstrateCatalog SubstrateCatalog::from_environment() {
  if (const char* path = std::getenv(kCatalogEnvVar); path != nullptr && *path != '\0') {
    return load(path);
  }
  return builtin();
}

std::optional<Substrate> SubstrateCatalog::find(std::string_view name) const {
  for (const auto& s : entries_) {
    if (detail::iequals(s.name, name)) return s;
  }
  return std::nullopt;
}

}  // namespace pdipole
