#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aircov/config.hpp"

namespace aircov {

// One CSV cell. Doubles use the shortest round-trip decimal form, '.'
// decimal point; a missing value is an empty field.
std::string cell(double v);
std::string cell(const std::optional<double>& v);
std::string cell(std::uint64_t v);

// The resolved run configuration plus toolkit version as '# '-prefixed
// comment lines. Stripping the prefix yields a loadable config again.
std::string provenance_lines(const run_config& cfg);

// Full CSV artifact: provenance, column header, then the data rows
// (pre-joined with commas). LF endings throughout.
std::string csv_artifact(const run_config& cfg, const std::string& columns,
                         const std::vector<std::string>& rows);

// Full JSON artifact: version and resolved config, then the payload
// object's fields merged in. payload_json must serialize a JSON object.
std::string json_artifact(const run_config& cfg, const std::string& payload_json);

// Write to the path, or to stdout when the path is empty.
void write_artifact(const std::string& path, const std::string& content);

} // namespace aircov
