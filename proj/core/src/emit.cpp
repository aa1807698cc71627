#include "aircov/emit.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "aircov/errors.hpp"
#include "aircov/version.hpp"

namespace aircov {

std::string cell(double v) { return fmt_double(v); }

std::string cell(const std::optional<double>& v) {
    return v ? fmt_double(*v) : std::string();
}

std::string cell(std::uint64_t v) { return std::to_string(v); }

std::string provenance_lines(const run_config& cfg) {
    std::ostringstream out;
    out << "# aircov " << version() << "\n";
    std::istringstream kv(to_key_value(cfg));
    std::string line;
    while (std::getline(kv, line))
        out << "# " << line << "\n";
    return out.str();
}

std::string csv_artifact(const run_config& cfg, const std::string& columns,
                         const std::vector<std::string>& rows) {
    std::ostringstream out;
    out << provenance_lines(cfg);
    out << columns << "\n";
    for (const std::string& r : rows)
        out << r << "\n";
    return out.str();
}

std::string json_artifact(const run_config& cfg, const std::string& payload_json) {
    nlohmann::ordered_json payload;
    try {
        payload = nlohmann::ordered_json::parse(payload_json);
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("artifact payload is not valid JSON: ") + e.what());
    }
    if (!payload.is_object())
        throw error("artifact payload must be a JSON object");

    nlohmann::ordered_json doc;
    doc["aircov_version"] = version();
    doc["config"] = nlohmann::ordered_json::parse(to_json_text(cfg));
    for (const auto& [k, v] : payload.items())
        doc[k] = v;
    return doc.dump(2) + "\n";
}

void write_artifact(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw validation_error("cannot open output file: " + path);
    out << content;
    if (!out)
        throw error("failed writing output file: " + path);
}

} // namespace aircov
