#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hopfkiss/hyper.hpp"

namespace hopfkiss {

/// Point (w, z) of S^(2^(n+1)-1) with w, z in A_n, n = 1..3.
/// Ambient coordinates are coords(w) followed by coords(z).
class SpherePair {
public:
    /// Throws InputError unless |w|^2 + |z|^2 = 1 exactly and levels agree.
    SpherePair(Hyper w, Hyper z);

    static SpherePair from_ambient(int level, const std::vector<ExactScalar>& coords);

    int level() const { return w_.level(); }
    const Hyper& w() const { return w_; }
    const Hyper& z() const { return z_; }
    std::vector<ExactScalar> ambient() const;

    friend bool operator==(const SpherePair&, const SpherePair&) = default;

private:
    Hyper w_;
    Hyper z_;
};

/// Point (a, t) of S^(2^n) in A_n x R.
class BasePoint {
public:
    /// Throws InputError unless |a|^2 + t^2 = 1 exactly.
    BasePoint(Hyper a, ExactScalar t);

    int level() const { return a_.level(); }
    const Hyper& a() const { return a_; }
    const ExactScalar& t() const { return t_; }
    /// coords(a) followed by t.
    std::vector<ExactScalar> ambient() const;

    friend bool operator==(const BasePoint&, const BasePoint&) = default;

private:
    Hyper a_;
    ExactScalar t_;
};

/// A_n with a point at infinity.
struct Infinity {
    friend bool operator==(Infinity, Infinity) { return true; }
};
using ExtendedValue = std::variant<Hyper, Infinity>;

inline bool is_infinite(const ExtendedValue& c) { return std::holds_alternative<Infinity>(c); }

/// (w, z) -> (2 w z*, |z|^2 - |w|^2).
BasePoint hopf_direct(const SpherePair& p);

/// (w, z) -> w z^-1, or infinity when z = 0.
ExtendedValue h1(const SpherePair& p);

/// Inverse stereographic projection c -> (2c, 1 - |c|^2) / (1 + |c|^2);
/// infinity -> south pole (0, -1).
BasePoint h2(const ExtendedValue& c, int level);

/**
 * Point of the fiber over `base` selected by the unit element q:
 *   ((a q) / sqrt(2(1+t)), q sqrt((1+t)/2))   for t != -1,
 *   (q, 0)                                   at the south pole.
 *
 * Throws InputError for non-unit q and FieldOverflow when the radicals are
 * not in Q(sqrt 2).
 */
SpherePair fiber_point(const BasePoint& base, const Hyper& q);

/**
 * Radical-free fiber parameterization: every point of the fiber over (a, t),
 * t != -1, is (a z / (1+t), z) with |z|^2 = (1+t)/2. This returns one such z
 * with Q(sqrt 2) coordinates, found by a bounded search when sqrt((1+t)/2) is
 * not itself in the field. Empty if the search finds nothing.
 */
std::optional<Hyper> fiber_anchor(const BasePoint& base);

/// (a (anchor q) / (1+t), anchor q) for unit q; anchor from fiber_anchor().
SpherePair fiber_point_anchored(const BasePoint& base, const Hyper& anchor, const Hyper& q);

}  // namespace hopfkiss
