#include "hopfkiss/config_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hopfkiss {

using nlohmann::json;

nlohmann::json config_to_json(const Configuration& config) {
    const auto& meta = config.meta();
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["meta"] = {{"name", meta.name},
                   {"method", meta.method},
                   {"level", meta.level},
                   {"ambient_dim", config.ambient_dim()},
                   {"antipodal", meta.antipodal},
                   {"offsets", meta.offsets}};
    json points = json::array();
    for (std::size_t i = 0; i < config.size(); ++i) {
        json coords = json::array();
        json approx = json::array();
        for (const auto& c : config.point(i)) {
            coords.push_back(c.to_string());
            approx.push_back(c.to_double());
        }
        points.push_back({{"coords", std::move(coords)}, {"approx", std::move(approx)},
                          {"fiber", config.label(i).to_string()}});
    }
    doc["points"] = std::move(points);
    return doc;
}

LoadedConfig config_from_json(const nlohmann::json& doc) {
    try {
        if (!doc.is_object()) throw InputError("configuration file must hold a JSON object");
        const int version = doc.at("schema_version").get<int>();
        if (version != kSchemaVersion) {
            throw InputError("unsupported schema_version " + std::to_string(version));
        }
        const auto& m = doc.at("meta");
        ConfigMeta meta;
        meta.name = m.at("name").get<std::string>();
        meta.method = m.at("method").get<std::string>();
        meta.level = m.at("level").get<int>();
        meta.antipodal = m.value("antipodal", true);
        meta.offsets = m.value("offsets", std::map<std::string, std::string>{});
        const auto dim = m.at("ambient_dim").get<std::size_t>();

        std::vector<Point> points;
        std::vector<FiberLabel> labels;
        for (const auto& entry : doc.at("points")) {
            const auto& coords = entry.at("coords");
            const auto& approx = entry.at("approx");
            if (coords.size() != dim || approx.size() != dim) {
                throw InputError("point " + std::to_string(points.size()) + " has wrong dimension");
            }
            Point p;
            p.reserve(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                p.push_back(ExactScalar::parse(coords[k].get<std::string>()));
                const double a = approx[k].get<double>();
                if (!(std::fabs(a - p.back().to_double()) <= kApproxTolerance)) {
                    throw InputError("approx value disagrees with exact coordinate at point " +
                                     std::to_string(points.size()) + ", axis " + std::to_string(k));
                }
            }
            labels.push_back(FiberLabel::parse(entry.at("fiber").get<std::string>()));
            points.push_back(std::move(p));
        }
        bool sorted = true;
        for (std::size_t i = 1; i < points.size(); ++i) {
            if (lex_compare(points[i - 1], points[i]) > 0) sorted = false;
        }
        return {Configuration(dim, std::move(points), std::move(labels), std::move(meta)), sorted};
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed configuration file: ") + e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_config_file(const std::filesystem::path& path, const Configuration& config) {
    write_text_file(path, config_to_json(config).dump(1) + "\n");
}

LoadedConfig read_config_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    return config_from_json(doc);
}

nlohmann::json report_to_json(const AnalysisReport& report) {
    json spectrum = json::array();
    for (std::size_t k = 0; k < report.values.size(); ++k) {
        spectrum.push_back({{"dot", report.values[k].to_string()},
                            {"approx", report.values[k].to_double()},
                            {"pairs", report.pair_counts[k]}});
    }
    json out = {{"point_count", report.point_count},
                {"dot_spectrum", std::move(spectrum)},
                {"max_offdiag_dot", report.max_offdiag_dot.to_string()},
                {"antipodal", report.antipodal}};
    if (auto n = report.uniform_neighbor_count()) {
        out["neighbor_count"] = *n;
    } else {
        out["neighbor_count"] = nullptr;
    }
    if (auto per_point = report.uniform_point_spectrum()) {
        json pp = json::array();
        for (const auto& [value, count] : *per_point) pp.push_back({{"dot", value.to_string()}, {"count", count}});
        out["per_point_spectrum"] = std::move(pp);
    } else {
        out["per_point_spectrum"] = nullptr;
    }
    return out;
}

nlohmann::json lattice_to_json(const LatticeReport& report) {
    json gram = json::array();
    for (const auto& row : report.gram) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        gram.push_back(std::move(r));
    }
    return {{"rank", report.rank},
            {"determinant", report.determinant.get_str()},
            {"even", report.even},
            {"gram", std::move(gram)}};
}

std::string export_csv(const Configuration& config) {
    std::string out;
    for (std::size_t k = 0; k < config.ambient_dim(); ++k) out += "x" + std::to_string(k) + ",";
    out += "fiber\n";
    char buf[64];
    for (std::size_t i = 0; i < config.size(); ++i) {
        for (const auto& c : config.point(i)) {
            std::snprintf(buf, sizeof buf, "%.17g", c.to_double());
            out += buf;
            out += ',';
        }
        out += config.label(i).to_string();
        out += '\n';
    }
    return out;
}

}  // namespace hopfkiss
