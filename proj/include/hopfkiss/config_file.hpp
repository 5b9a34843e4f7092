#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hopfkiss/analysis.hpp"
#include "hopfkiss/configuration.hpp"
#include "hopfkiss/lattice.hpp"

namespace hopfkiss {

inline constexpr int kSchemaVersion = 1;

/// Maximum allowed |approx - coords| in a configuration file.
inline constexpr double kApproxTolerance = 1e-12;

struct LoadedConfig {
    Configuration config;
    /// Points appeared in canonical (lexicographic) order in the file.
    bool canonical_order = true;
};

nlohmann::json config_to_json(const Configuration& config);
/// Throws InputError on schema violations, unparseable coordinates, or
/// approx values that disagree with the exact coordinates.
LoadedConfig config_from_json(const nlohmann::json& doc);

void write_config_file(const std::filesystem::path& path, const Configuration& config);
LoadedConfig read_config_file(const std::filesystem::path& path);

nlohmann::json report_to_json(const AnalysisReport& report);
nlohmann::json lattice_to_json(const LatticeReport& report);

/// Header x0..x{d-1},fiber; coordinates with 17 significant digits.
std::string export_csv(const Configuration& config);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace hopfkiss
