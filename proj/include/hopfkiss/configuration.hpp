#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopfkiss/exact_scalar.hpp"
#include "hopfkiss/hopf.hpp"

namespace hopfkiss {

using Point = std::vector<ExactScalar>;

ExactScalar dot(const Point& x, const Point& y);
std::strong_ordering lex_compare(const Point& x, const Point& y);

/// Identifies the base axis point a lifted point came from: "pole+", "pole-",
/// "e3+", "e3-", or "none" for configurations without a fiber structure.
class FiberLabel {
public:
    enum class Kind { Pole, Axis, None };

    FiberLabel() = default;
    static FiberLabel pole(int sign) { return FiberLabel(Kind::Pole, 0, sign); }
    static FiberLabel axis(int index, int sign) { return FiberLabel(Kind::Axis, index, sign); }
    static FiberLabel none() { return {}; }

    /// Axis label of a base point lying on a coordinate axis, else none().
    static FiberLabel of_base(const BasePoint& base);

    Kind kind() const { return kind_; }
    int index() const { return index_; }
    int sign() const { return sign_; }
    bool is_none() const { return kind_ == Kind::None; }

    FiberLabel antipode() const;
    bool is_antipode_of(const FiberLabel& o) const { return !is_none() && antipode() == o; }

    std::string to_string() const;
    static FiberLabel parse(std::string_view text);

    friend bool operator==(const FiberLabel&, const FiberLabel&) = default;
    /// Poles first, then axes by index, + before -, none last.
    friend std::strong_ordering operator<=>(const FiberLabel& a, const FiberLabel& b);

private:
    FiberLabel(Kind kind, int index, int sign) : kind_(kind), index_(index), sign_(sign) {}

    Kind kind_ = Kind::None;
    int index_ = 0;
    int sign_ = 1;
};

/// Construction failed an exactness gate; carries the offending pair.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, std::size_t first, std::size_t second,
                      ExactScalar value)
        : std::runtime_error(what), first_(first), second_(second), value_(std::move(value)) {}

    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }
    const ExactScalar& value() const { return value_; }

private:
    std::size_t first_;
    std::size_t second_;
    ExactScalar value_;
};

struct ConfigMeta {
    std::string name;
    std::string method;  // "hopf" or "canonical"
    int level = 0;
    bool antipodal = true;
    /// Fiber label -> multiplier applied to the fiber set (text form of a Hyper).
    std::map<std::string, std::string> offsets;
};

/**
 * Finite labeled point set on the unit sphere of R^ambient_dim.
 *
 * Points are kept in lexicographic order of their exact coordinates so that
 * any serialization of a configuration is canonical.
 */
class Configuration {
public:
    Configuration() = default;
    Configuration(std::size_t ambient_dim, std::vector<Point> points, std::vector<FiberLabel> labels,
                  ConfigMeta meta);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& point(std::size_t i) const { return points_[i]; }
    const std::vector<FiberLabel>& labels() const { return labels_; }
    const FiberLabel& label(std::size_t i) const { return labels_[i]; }
    const ConfigMeta& meta() const { return meta_; }

    /// Distinct labels in label order.
    std::vector<FiberLabel> distinct_labels() const;

    bool contains(const Point& p) const;

    /// First violated invariant (non-unit point, duplicate, missing negation),
    /// or nothing if the configuration is valid.
    std::optional<std::string> invariant_violation() const;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<Point> points_;
    std::vector<FiberLabel> labels_;
    ConfigMeta meta_;
};

/// Same point sets, ignoring labels and metadata.
bool same_point_set(const Configuration& a, const Configuration& b);

}  // namespace hopfkiss
