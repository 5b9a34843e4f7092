#pragma once

#include <map>
#include <vector>

#include "hopfkiss/configuration.hpp"
#include "hopfkiss/hopf.hpp"

namespace hopfkiss {

struct LabeledBase {
    BasePoint point;
    FiberLabel label;
};

/// Which side of the fiber element an offset multiplies. The two differ for
/// quaternions and octonions.
enum class OffsetSide { Left, Right };

/// Recipe for lifting base points through the Hopf map: every base point b
/// with label f receives the fiber points fiber_point(b, offsets[f] * q) for
/// q in fiber_set (offset defaults to 1; q * offsets[f] with OffsetSide::Right).
struct LiftPlan {
    std::vector<LabeledBase> base;
    std::vector<Hyper> fiber_set;
    std::map<FiberLabel, Hyper> offsets;
    OffsetSide offset_side = OffsetSide::Left;
    /// Use the radical-free fiber parameterization (needed when sqrt(2(1+t))
    /// leaves Q(sqrt 2)).
    bool anchored = false;
};

struct BuildOptions {
    unsigned workers = 0;  // 0 = hardware concurrency
};

/// The six octahedron vertices (0,+-1), (+-1,0), (+-i,0) on S^2.
std::vector<BasePoint> octahedron_base();

/// The 2 (2^level + 1) axis points of S^(2^level), labeled, poles first.
std::vector<LabeledBase> axis_base(int level);

/// Lifts a plan; throws ConstructionError if two emitted points coincide.
Configuration lift(const LiftPlan& plan, ConfigMeta meta, const BuildOptions& options = {});

/// 24 unit quaternions {+-e_i, (+-1 +-i +-j +-k)/2}.
std::vector<Hyper> hurwitz_units();

/// (e_0 + e_1)/sqrt 2 at the given level.
Hyper pole_offset(int level);

Configuration cell24_standard();
Configuration cell24_hopf(const BuildOptions& options = {});
Configuration e8_hopf(const BuildOptions& options = {});
Configuration lambda16_hopf(const BuildOptions& options = {});
Configuration e8_canonical();
Configuration bw16_canonical();

/// The 40 vectors (+-e_i +-e_j)/sqrt 2 of R^5 as level-2 base points.
std::vector<BasePoint> d5_kissing_40();

/// Exact m-th roots of unity e^(2 pi i k/m) as level-`level` elements, m in {1,2,4,8}.
std::vector<Hyper> roots_of_unity(int m, int level);

/// True iff hopf_direct sends every point to the axis base point named by its label.
bool fibers_consistent(const Configuration& config);

}  // namespace hopfkiss
