#include "hopfkiss/constructions.hpp"

#include <algorithm>
#include <array>

#include "hopfkiss/analysis.hpp"
#include "parallel.hpp"

namespace hopfkiss {
namespace {

const ExactScalar kHalfSqrt2 = ExactScalar::sqrt2(1, 2);

Hyper scaled_basis_sum(int level, std::initializer_list<std::pair<int, ExactScalar>> terms) {
    Hyper x(level);
    for (const auto& [index, value] : terms) x += Hyper::basis(level, index) * value;
    return x;
}

std::map<FiberLabel, Hyper> pole_offsets(const Hyper& offset) {
    return {{FiberLabel::pole(1), offset}, {FiberLabel::pole(-1), offset}};
}

std::map<std::string, std::string> describe_offsets(const std::map<FiberLabel, Hyper>& offsets) {
    std::map<std::string, std::string> out;
    for (const auto& [label, value] : offsets) out[label.to_string()] = value.to_string();
    return out;
}

// Candidate pole offsets tried, in order, when the default fails the kissing gate.
std::vector<Hyper> offset_candidates(int level) {
    std::vector<Hyper> out;
    const int n = 1 << level;
    for (int i = 1; i < n; ++i) {
        out.push_back(scaled_basis_sum(level, {{0, kHalfSqrt2}, {i, kHalfSqrt2}}));
    }
    if (n >= 4) {
        const ExactScalar half = ExactScalar::fraction(1, 2);
        for (int mask = 0; mask < 8; ++mask) {
            std::vector<ExactScalar> c(static_cast<std::size_t>(n));
            c[0] = half;
            for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(k + 1)] = (mask >> k & 1) ? -half : half;
            out.emplace_back(level, std::move(c));
        }
    }
    return out;
}

// Lifts with the default pole offset; on a failed kissing gate, walks the
// candidate list and records which offset was used.
Configuration gated_lift(LiftPlan plan, ConfigMeta meta, const BuildOptions& options) {
    const int level = meta.level;
    std::vector<Hyper> tried{pole_offset(level)};
    for (auto& c : offset_candidates(level)) {
        if (std::find(tried.begin(), tried.end(), c) == tried.end()) tried.push_back(std::move(c));
    }
    std::optional<ConstructionError> first_failure;
    for (const auto& offset : tried) {
        plan.offsets = pole_offsets(offset);
        meta.offsets = describe_offsets(plan.offsets);
        Configuration config = lift(plan, meta, options);
        const auto check = assert_kissing(config, AnalysisOptions{options.workers});
        if (check.kissing) return config;
        if (!first_failure) {
            first_failure.emplace(meta.name + ": kissing gate failed for pole offset " +
                                      offset.to_string() + " (dot " + check.value->to_string() + ")",
                                  *check.first, *check.second, *check.value);
        }
    }
    throw *first_failure;
}

}  // namespace

std::vector<BasePoint> octahedron_base() {
    const Hyper zero = Hyper::zero(1);
    const Hyper one = Hyper::one(1);
    const Hyper i = Hyper::basis(1, 1);
    return {
        BasePoint(zero, ExactScalar(1)), BasePoint(zero, ExactScalar(-1)),
        BasePoint(one, ExactScalar(0)),  BasePoint(-one, ExactScalar(0)),
        BasePoint(i, ExactScalar(0)),    BasePoint(-i, ExactScalar(0)),
    };
}

std::vector<LabeledBase> axis_base(int level) {
    if (level < 1 || level > 3) throw InputError("axis_base: level must be 1..3");
    std::vector<LabeledBase> out;
    for (int s : {1, -1}) {
        out.push_back({BasePoint(Hyper::zero(level), ExactScalar(s)), FiberLabel::pole(s)});
    }
    for (int i = 0; i < (1 << level); ++i) {
        for (int s : {1, -1}) {
            out.push_back({BasePoint(Hyper::basis(level, i) * ExactScalar(s), ExactScalar(0)),
                           FiberLabel::axis(i, s)});
        }
    }
    return out;
}

Configuration lift(const LiftPlan& plan, ConfigMeta meta, const BuildOptions& options) {
    const std::size_t per_fiber = plan.fiber_set.size();
    std::vector<Point> points(plan.base.size() * per_fiber);
    std::vector<FiberLabel> labels(points.size());

    detail::parallel_for(plan.base.size(), options.workers, [&](std::size_t b) {
        const auto& [base, label] = plan.base[b];
        const auto it = plan.offsets.find(label);
        std::optional<Hyper> anchor;
        if (plan.anchored) {
            anchor = fiber_anchor(base);
            if (!anchor) throw FieldOverflow("no exact fiber anchor for base point " + label.to_string());
        }
        for (std::size_t k = 0; k < per_fiber; ++k) {
            Hyper q = plan.fiber_set[k];
            if (it != plan.offsets.end()) {
                q = plan.offset_side == OffsetSide::Left ? it->second * q : q * it->second;
            }
            const SpherePair p = anchor ? fiber_point_anchored(base, *anchor, q) : fiber_point(base, q);
            points[b * per_fiber + k] = p.ambient();
            labels[b * per_fiber + k] = label;
        }
    });

    const std::size_t dim = plan.base.empty() ? 0 : 2 * (std::size_t{1} << plan.base.front().point.level());
    Configuration config(dim, std::move(points), std::move(labels), std::move(meta));
    for (std::size_t i = 1; i < config.size(); ++i) {
        if (config.point(i - 1) == config.point(i)) {
            throw ConstructionError("lift produced duplicate points " + std::to_string(i - 1) + " and " +
                                        std::to_string(i),
                                    i - 1, i, ExactScalar(1));
        }
    }
    return config;
}

std::vector<Hyper> hurwitz_units() {
    std::vector<Hyper> out;
    for (int i = 0; i < 4; ++i) {
        for (int s : {1, -1}) out.push_back(Hyper::basis(2, i) * ExactScalar(s));
    }
    const ExactScalar half = ExactScalar::fraction(1, 2);
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<ExactScalar> c(4);
        for (int k = 0; k < 4; ++k) c[static_cast<std::size_t>(k)] = (mask >> k & 1) ? -half : half;
        out.emplace_back(2, std::move(c));
    }
    return out;
}

Hyper pole_offset(int level) {
    return scaled_basis_sum(level, {{0, kHalfSqrt2}, {1, kHalfSqrt2}});
}

Configuration cell24_standard() {
    std::vector<Point> points;
    std::vector<FiberLabel> labels;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    Point p(4);
                    p[i] = kHalfSqrt2 * ExactScalar(si);
                    p[j] = kHalfSqrt2 * ExactScalar(sj);
                    labels.push_back(FiberLabel::of_base(hopf_direct(SpherePair::from_ambient(1, p))));
                    points.push_back(std::move(p));
                }
            }
        }
    }
    return Configuration(4, std::move(points), std::move(labels),
                         ConfigMeta{"cell24", "canonical", 1, true, {}});
}

Configuration cell24_hopf(const BuildOptions& options) {
    LiftPlan plan;
    for (const auto& b : octahedron_base()) plan.base.push_back({b, FiberLabel::of_base(b)});
    plan.fiber_set = roots_of_unity(4, 1);
    plan.offsets = pole_offsets(pole_offset(1));
    return lift(plan, ConfigMeta{"cell24", "hopf", 1, true, describe_offsets(plan.offsets)}, options);
}

Configuration e8_hopf(const BuildOptions& options) {
    LiftPlan plan;
    plan.base = axis_base(2);
    plan.fiber_set = hurwitz_units();
    return gated_lift(std::move(plan), ConfigMeta{"e8", "hopf", 2, true, {}}, options);
}

Configuration lambda16_hopf(const BuildOptions& options) {
    const Configuration e8 = e8_hopf(options);
    LiftPlan plan;
    plan.base = axis_base(3);
    plan.fiber_set.reserve(e8.size());
    for (const auto& p : e8.points()) plan.fiber_set.emplace_back(3, p);
    return gated_lift(std::move(plan), ConfigMeta{"lambda16", "hopf", 3, true, {}}, options);
}

Configuration e8_canonical() {
    std::vector<Point> points;
    // (+-1, +-1, 0^6) / sqrt2
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i + 1; j < 8; ++j) {
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    Point p(8);
                    p[i] = kHalfSqrt2 * ExactScalar(si);
                    p[j] = kHalfSqrt2 * ExactScalar(sj);
                    points.push_back(std::move(p));
                }
            }
        }
    }
    // (+-1/2)^8 / sqrt2 with an even number of minus signs
    const ExactScalar quarter_sqrt2 = ExactScalar::sqrt2(1, 4);
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
        Point p(8);
        for (std::size_t k = 0; k < 8; ++k) p[k] = (mask >> k & 1) ? -quarter_sqrt2 : quarter_sqrt2;
        points.push_back(std::move(p));
    }
    return Configuration(8, std::move(points), {}, ConfigMeta{"e8", "canonical", 2, true, {}});
}

namespace {

// First-order Reed-Muller code RM(1,4): span of the all-ones word and the four
// coordinate functions on F_2^4.
std::vector<std::array<int, 16>> reed_muller_1_4() {
    std::vector<std::array<int, 16>> words;
    for (int msg = 0; msg < 32; ++msg) {
        std::array<int, 16> w{};
        for (int pos = 0; pos < 16; ++pos) {
            int bit = msg & 1;
            for (int k = 0; k < 4; ++k) bit ^= ((msg >> (k + 1)) & 1) & ((pos >> k) & 1);
            w[static_cast<std::size_t>(pos)] = bit;
        }
        words.push_back(w);
    }
    return words;
}

void enumerate_shell(const std::array<int, 16>& parity, std::array<int, 16>& current, std::size_t pos,
                     int norm_left, std::vector<std::array<int, 16>>& out) {
    if (pos == 16) {
        if (norm_left == 0) out.push_back(current);
        return;
    }
    for (int v = -2; v <= 2; ++v) {
        if ((v & 1) != parity[pos]) continue;
        if (v * v > norm_left) continue;
        current[pos] = v;
        enumerate_shell(parity, current, pos + 1, norm_left - v * v, out);
    }
}

}  // namespace

Configuration bw16_canonical() {
    // BW16 = {x in Z^16 : x mod 2 in RM(1,4), sum(x) = 0 mod 4}; minimal norm 8.
    constexpr int kMinNorm = 8;
    std::vector<std::array<int, 16>> shell;
    std::array<int, 16> current{};
    for (const auto& word : reed_muller_1_4()) enumerate_shell(word, current, 0, kMinNorm, shell);

    std::vector<Point> points;
    const ExactScalar scale = ExactScalar::sqrt2(1, 4);  // 1/sqrt(8)
    for (const auto& v : shell) {
        int sum = 0;
        for (int c : v) sum += c;
        if (((sum % 4) + 4) % 4 != 0) continue;
        Point p(16);
        for (std::size_t k = 0; k < 16; ++k) p[k] = scale * ExactScalar(v[k]);
        points.push_back(std::move(p));
    }
    if (points.size() != 4320) {
        throw ConstructionError("BW16 shell enumeration found " + std::to_string(points.size()) +
                                    " vectors, expected 4320",
                                0, 0, ExactScalar(0));
    }
    return Configuration(16, std::move(points), {}, ConfigMeta{"lambda16", "canonical", 3, true, {}});
}

std::vector<BasePoint> d5_kissing_40() {
    std::vector<BasePoint> out;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    std::vector<ExactScalar> v(5);
                    v[i] = kHalfSqrt2 * ExactScalar(si);
                    v[j] = kHalfSqrt2 * ExactScalar(sj);
                    ExactScalar t = v[4];
                    v.pop_back();
                    out.emplace_back(Hyper(2, std::move(v)), std::move(t));
                }
            }
        }
    }
    return out;
}

std::vector<Hyper> roots_of_unity(int m, int level) {
    if (m != 1 && m != 2 && m != 4 && m != 8) {
        throw InputError("exact roots of unity only for m in {1,2,4,8}, got " + std::to_string(m));
    }
    // cos/sin of k * pi/4
    const std::array<ExactScalar, 8> cosines{ExactScalar(1), kHalfSqrt2,  ExactScalar(0), -kHalfSqrt2,
                                             ExactScalar(-1), -kHalfSqrt2, ExactScalar(0), kHalfSqrt2};
    std::vector<Hyper> out;
    const int step = 8 / m;
    for (int k = 0; k < m; ++k) {
        const auto idx = static_cast<std::size_t>(k * step);
        Hyper q(level);
        q += Hyper::one(level) * cosines[idx];
        q += Hyper::basis(level, 1) * cosines[(idx + 6) % 8];
        out.push_back(std::move(q));
    }
    return out;
}

bool fibers_consistent(const Configuration& config) {
    const int level = config.meta().level;
    if (config.ambient_dim() != 2 * (std::size_t{1} << level)) return false;
    for (std::size_t i = 0; i < config.size(); ++i) {
        const auto base = hopf_direct(SpherePair::from_ambient(level, config.point(i)));
        if (FiberLabel::of_base(base) != config.label(i)) return false;
        if (config.label(i).is_none()) return false;
    }
    return true;
}

}  // namespace hopfkiss
