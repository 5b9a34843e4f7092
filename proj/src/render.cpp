#include "hopfkiss/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace hopfkiss {
namespace {

constexpr std::array<const char*, 18> kHues = {
    "#c91d1d", "#c9561d", "#c98f1d", "#c9c91d", "#8fc91d", "#56c91d", "#1dc91d", "#1dc956", "#1dc98f",
    "#1dc9c9", "#1d8fc9", "#1d56c9", "#1d1dc9", "#561dc9", "#8f1dc9", "#c91dc9", "#c91d8f", "#c91d56"};

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

struct Layout {
    std::size_t cols;
    std::size_t rows;
};

Layout grid_for(std::size_t frames) {
    auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(frames))));
    cols = std::max<std::size_t>(cols, 1);
    return {cols, (frames + cols - 1) / cols};
}

// Frame contents in local coordinates [0, w] x [0, h].
void write_frame(std::ostringstream& out, const Configuration& config, const std::vector<FloatPoint>& base,
                 const RenderSpec& spec, const std::map<FiberLabel, std::string>& palette, std::size_t index,
                 const std::string& indent) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(index) /
                         static_cast<double>(spec.frame_count);
    const auto projected = project_parallel(rotate_frame(base, spec.plane, angle), spec.projection_axes);
    const double cx = spec.frame_width / 2.0;
    const double cy = spec.frame_height / 2.0;
    const double radius = std::min(cx, cy) - 2.0 * spec.marker_radius;

    out << indent << "<rect x=\"0\" y=\"0\" width=\"" << fixed6(spec.frame_width) << "\" height=\""
        << fixed6(spec.frame_height) << "\" fill=\"white\" stroke=\"#999999\"/>\n";
    out << indent << "<circle cx=\"" << fixed6(cx) << "\" cy=\"" << fixed6(cy) << "\" r=\"" << fixed6(radius)
        << "\" fill=\"none\" stroke=\"#dddddd\"/>\n";
    out << indent << "<text x=\"4\" y=\"14\" font-size=\"11\" font-family=\"sans-serif\">" << index + 1
        << "</text>\n";
    for (std::size_t i = 0; i < projected.size(); ++i) {
        out << indent << "<circle class=\"marker\" cx=\"" << fixed6(cx + projected[i][0] * radius) << "\" cy=\""
            << fixed6(cy - projected[i][1] * radius) << "\" r=\"" << fixed6(spec.marker_radius)
            << "\" fill=\"" << palette.at(config.label(i)) << "\" fill-opacity=\"0.8\"/>\n";
    }
}

void open_svg(std::ostringstream& out, double width, double height) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed6(width)
        << "\" height=\"" << fixed6(height) << "\" viewBox=\"0 0 " << fixed6(width) << " " << fixed6(height)
        << "\">\n";
}

}  // namespace

void RenderSpec::validate(std::size_t ambient_dim) const {
    if (frame_count < 1) throw InputError("frame count must be at least 1");
    for (const auto& [a, b] : {plane, projection_axes}) {
        if (a >= ambient_dim || b >= ambient_dim) {
            throw InputError("axis index out of range for dimension " + std::to_string(ambient_dim));
        }
        if (a == b) throw InputError("axis pair must name two distinct axes");
    }
    if (!(frame_width > 0.0) || !(frame_height > 0.0) || !(marker_radius > 0.0)) {
        throw InputError("canvas sizes must be positive");
    }
}

std::vector<FloatPoint> to_float(const Configuration& config) {
    std::vector<FloatPoint> out;
    out.reserve(config.size());
    for (const auto& p : config.points()) {
        FloatPoint f;
        f.reserve(p.size());
        for (const auto& c : p) f.push_back(c.to_double());
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<FloatPoint> rotate_frame(const std::vector<FloatPoint>& points, AxisPair plane, double angle) {
    const auto [a, b] = plane;
    if (a == b) throw InputError("rotation plane needs two distinct axes");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    std::vector<FloatPoint> out = points;
    for (auto& p : out) {
        if (a >= p.size() || b >= p.size()) throw InputError("rotation axis out of range");
        const double x = p[a];
        const double y = p[b];
        p[a] = c * x - s * y;
        p[b] = s * x + c * y;
    }
    return out;
}

std::vector<FloatPoint> rotate_frame(const Configuration& config, AxisPair plane, double angle) {
    return rotate_frame(to_float(config), plane, angle);
}

std::vector<Point2> project_parallel(const std::vector<FloatPoint>& points, AxisPair axes) {
    std::vector<Point2> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        if (axes.first >= p.size() || axes.second >= p.size()) throw InputError("projection axis out of range");
        out.push_back({p[axes.first], p[axes.second]});
    }
    return out;
}

std::map<FiberLabel, std::string> fiber_palette(const std::vector<FiberLabel>& labels) {
    std::map<FiberLabel, std::size_t> slot;
    std::size_t next = 0;
    std::vector<FiberLabel> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& l : sorted) {
        if (slot.count(l) != 0) continue;
        const auto anti = slot.find(l.antipode());
        if (!l.is_none() && anti != slot.end()) {
            slot[l] = (anti->second + kHues.size() / 2) % kHues.size();
        } else {
            slot[l] = next++ % (kHues.size() / 2);
        }
    }
    std::map<FiberLabel, std::string> out;
    for (const auto& [l, s] : slot) out[l] = kHues[s];
    return out;
}

std::string render_svg(const Configuration& config, const RenderSpec& spec) {
    spec.validate(config.ambient_dim());
    const auto base = to_float(config);
    const auto palette = fiber_palette(config.labels());
    const auto layout = grid_for(spec.frame_count);

    std::ostringstream out;
    open_svg(out, spec.frame_width * static_cast<double>(layout.cols),
             spec.frame_height * static_cast<double>(layout.rows));
    out << "  <title>" << config.meta().name << " (" << config.meta().method << "), " << spec.frame_count
        << " views</title>\n";
    for (std::size_t f = 0; f < spec.frame_count; ++f) {
        const double x = spec.frame_width * static_cast<double>(f % layout.cols);
        const double y = spec.frame_height * static_cast<double>(f / layout.cols);
        char id[32];
        std::snprintf(id, sizeof id, "frame-%03zu", f);
        out << "  <g id=\"" << id << "\" class=\"frame\" transform=\"translate(" << fixed6(x) << "," << fixed6(y)
            << ")\">\n";
        write_frame(out, config, base, spec, palette, f, "    ");
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::vector<std::string> render_frames(const Configuration& config, const RenderSpec& spec) {
    spec.validate(config.ambient_dim());
    const auto base = to_float(config);
    const auto palette = fiber_palette(config.labels());
    std::vector<std::string> docs;
    for (std::size_t f = 0; f < spec.frame_count; ++f) {
        std::ostringstream out;
        open_svg(out, spec.frame_width, spec.frame_height);
        out << "  <g class=\"frame\">\n";
        write_frame(out, config, base, spec, palette, f, "    ");
        out << "  </g>\n</svg>\n";
        docs.push_back(out.str());
    }
    return docs;
}

}  // namespace hopfkiss
