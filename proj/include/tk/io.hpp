// io.hpp -- file formats: single tournaments (.tk), catalogs (.tkc), and
// the JSON renderings of reports

#pragma once

#include <string>

#include "tk/families.hpp"
#include "tk/report.hpp"
#include "tk/tournament.hpp"

namespace tk {

/// Reads/writes the one-line "n=<N> bits=<HEX>" form.
Tournament read_tournament_file(const std::string& path);
void write_tournament_file(const std::string& path, const Tournament& t);

/// Catalog file: header "TKC1 n=<N> count=<C>", then one lowercase-hex code
/// per line in ascending order.
std::string catalog_to_text(const Catalog& catalog);
Catalog catalog_from_text(const std::string& text);
Catalog read_catalog_file(const std::string& path);
void write_catalog_file(const std::string& path, const Catalog& catalog);

std::string omega_to_json(const OmegaReport& report);

/// Serialized report.  When the TK_STABLE_OUTPUT environment variable is set
/// to a non-zero value, runtime_ms is emitted as 0 so that repeated runs
/// compare byte-identical.
std::string report_to_json(const Report& report);
std::string report_to_text(const Report& report);

}  // namespace tk
