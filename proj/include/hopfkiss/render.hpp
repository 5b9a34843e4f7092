#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfkiss/configuration.hpp"

namespace hopfkiss {

using AxisPair = std::pair<std::size_t, std::size_t>;
using FloatPoint = std::vector<double>;
using Point2 = std::array<double, 2>;

struct RenderSpec {
    AxisPair plane{0, 2};
    std::size_t frame_count = 1;
    AxisPair projection_axes{0, 1};
    double frame_width = 220.0;
    double frame_height = 220.0;
    double marker_radius = 4.0;

    /// Throws InputError for out-of-range or repeated axes or zero frames.
    void validate(std::size_t ambient_dim) const;
};

/// Exact coordinates converted to double.
std::vector<FloatPoint> to_float(const Configuration& config);

/// Rotation by `angle` in the coordinate plane, identity on the other axes.
std::vector<FloatPoint> rotate_frame(const std::vector<FloatPoint>& points, AxisPair plane, double angle);
std::vector<FloatPoint> rotate_frame(const Configuration& config, AxisPair plane, double angle);

/// Keeps only the two chosen coordinates.
std::vector<Point2> project_parallel(const std::vector<FloatPoint>& points, AxisPair axes);

/// Fill color per fiber label. Labels are taken in sorted order; a label
/// whose antipode already has hue k gets hue k + 9 of the 18-hue wheel.
std::map<FiberLabel, std::string> fiber_palette(const std::vector<FiberLabel>& labels);

/// Grid of frame_count projections, frame i rotated by i * 2 pi / frame_count.
std::string render_svg(const Configuration& config, const RenderSpec& spec);

/// One standalone SVG document per frame.
std::vector<std::string> render_frames(const Configuration& config, const RenderSpec& spec);

}  // namespace hopfkiss
