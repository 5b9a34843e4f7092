#include "hopfkiss/configuration.hpp"

#include <algorithm>
#include <numeric>

namespace hopfkiss {

ExactScalar dot(const Point& x, const Point& y) {
    if (x.size() != y.size()) throw InputError("dot: dimension mismatch");
    ExactScalar acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

std::strong_ordering lex_compare(const Point& x, const Point& y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == y[i]) continue;
        return x[i] <=> y[i];
    }
    return x.size() <=> y.size();
}

FiberLabel FiberLabel::of_base(const BasePoint& base) {
    const auto& a = base.a();
    if (a.is_zero()) {
        if (base.t() == ExactScalar(1)) return pole(1);
        if (base.t() == ExactScalar(-1)) return pole(-1);
        return none();
    }
    if (!base.t().is_zero()) return none();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] == ExactScalar(1)) return axis(static_cast<int>(i), 1);
        if (a[i] == ExactScalar(-1)) return axis(static_cast<int>(i), -1);
    }
    return none();
}

FiberLabel FiberLabel::antipode() const {
    if (is_none()) return *this;
    return FiberLabel(kind_, index_, -sign_);
}

std::string FiberLabel::to_string() const {
    const char s = sign_ > 0 ? '+' : '-';
    switch (kind_) {
        case Kind::Pole:
            return std::string("pole") + s;
        case Kind::Axis:
            return "e" + std::to_string(index_) + s;
        case Kind::None:
            break;
    }
    return "none";
}

FiberLabel FiberLabel::parse(std::string_view text) {
    if (text == "none") return none();
    if (text == "pole+") return pole(1);
    if (text == "pole-") return pole(-1);
    if (text.size() >= 3 && text.front() == 'e' && (text.back() == '+' || text.back() == '-')) {
        const auto digits = text.substr(1, text.size() - 2);
        if (!digits.empty() && digits.size() <= 2 &&
            std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
            !(digits.size() > 1 && digits[0] == '0')) {
            return axis(std::stoi(std::string(digits)), text.back() == '+' ? 1 : -1);
        }
    }
    throw InputError("unknown fiber label '" + std::string(text) + "'");
}

std::strong_ordering operator<=>(const FiberLabel& a, const FiberLabel& b) {
    if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
    if (auto c = a.index_ <=> b.index_; c != 0) return c;
    return b.sign_ <=> a.sign_;
}

Configuration::Configuration(std::size_t ambient_dim, std::vector<Point> points,
                             std::vector<FiberLabel> labels, ConfigMeta meta)
    : ambient_dim_(ambient_dim), meta_(std::move(meta)) {
    if (labels.empty()) labels.assign(points.size(), FiberLabel::none());
    if (labels.size() != points.size()) throw InputError("one fiber label per point required");
    for (const auto& p : points) {
        if (p.size() != ambient_dim) throw InputError("point dimension differs from ambient dimension");
    }
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return lex_compare(points[i], points[j]) < 0;
    });
    points_.reserve(points.size());
    labels_.reserve(points.size());
    for (auto i : order) {
        points_.push_back(std::move(points[i]));
        labels_.push_back(labels[i]);
    }
}

std::vector<FiberLabel> Configuration::distinct_labels() const {
    std::vector<FiberLabel> out = labels_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Configuration::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p,
                              [](const Point& x, const Point& y) { return lex_compare(x, y) < 0; });
}

std::optional<std::string> Configuration::invariant_violation() const {
    const ExactScalar one(1);
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto n = dot(points_[i], points_[i]);
        if (n != one) {
            return "point " + std::to_string(i) + " has squared norm " + n.to_string();
        }
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i - 1] == points_[i]) {
            return "points " + std::to_string(i - 1) + " and " + std::to_string(i) + " coincide";
        }
    }
    if (meta_.antipodal) {
        for (std::size_t i = 0; i < points_.size(); ++i) {
            Point neg = points_[i];
            for (auto& c : neg) c = -c;
            if (!contains(neg)) return "negation of point " + std::to_string(i) + " is missing";
        }
    }
    return std::nullopt;
}

bool same_point_set(const Configuration& a, const Configuration& b) {
    return a.ambient_dim() == b.ambient_dim() && a.points() == b.points();
}

}  // namespace hopfkiss
