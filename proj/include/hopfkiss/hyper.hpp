#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopfkiss/exact_scalar.hpp"

namespace hopfkiss {

inline constexpr int kMaxLevel = 4;

/**
 * Element of the Cayley-Dickson algebra A_level (R, C, H, O, sedenions for
 * level 0..4) with exact Q(sqrt 2) coordinates.
 *
 * A level-n element is the pair (a, b) of level n-1 elements formed by the
 * first and second halves of coords. Products follow
 *   (a,b)(c,d) = (ac - d b*, a* d + c b),   (a,b)* = (a*, -b),
 * so every basis multiplication sign is derived from that rule.
 */
class Hyper {
public:
    /// Zero element of the given level.
    explicit Hyper(int level = 0);
    Hyper(int level, std::vector<ExactScalar> coords);

    static Hyper zero(int level) { return Hyper(level); }
    static Hyper one(int level) { return basis(level, 0); }
    /// Unit coordinate vector e_index.
    static Hyper basis(int level, int index);
    static Hyper from_real(int level, ExactScalar value);

    int level() const { return level_; }
    std::size_t dim() const { return coords_.size(); }
    const std::vector<ExactScalar>& coords() const { return coords_; }
    const ExactScalar& operator[](std::size_t i) const { return coords_[i]; }
    const ExactScalar& real() const { return coords_.front(); }

    bool is_zero() const;

    /// (first half, second half) as level-1 elements.
    std::pair<Hyper, Hyper> halves() const;
    static Hyper join(const Hyper& lo, const Hyper& hi);

    Hyper operator-() const;
    Hyper& operator+=(const Hyper& o);
    Hyper& operator-=(const Hyper& o);
    Hyper& operator*=(const ExactScalar& s);
    Hyper& operator/=(const ExactScalar& s);

    friend Hyper operator+(Hyper a, const Hyper& b) { return a += b; }
    friend Hyper operator-(Hyper a, const Hyper& b) { return a -= b; }
    friend Hyper operator*(Hyper a, const ExactScalar& s) { return a *= s; }
    friend Hyper operator*(const ExactScalar& s, Hyper a) { return a *= s; }
    friend Hyper operator/(Hyper a, const ExactScalar& s) { return a /= s; }
    /// Cayley-Dickson product.
    friend Hyper operator*(const Hyper& x, const Hyper& y);

    friend bool operator==(const Hyper&, const Hyper&) = default;

    std::string to_string() const;

private:
    int level_;
    std::vector<ExactScalar> coords_;
};

Hyper cd_mul(const Hyper& x, const Hyper& y);
Hyper cd_conj(const Hyper& x);
ExactScalar cd_norm2(const Hyper& x);
/// Throws DomainError on zero or on level 4 (not a division algebra).
Hyper cd_inv(const Hyper& x);
Hyper basis_element(int level, int index);

/// Euclidean inner product of coordinate vectors.
ExactScalar cd_dot(const Hyper& x, const Hyper& y);

/**
 * Exhaustive search over (e_i +- e_j)(e_k +- e_l), i < j, k < l, for a pair of
 * nonzero elements with zero product. Empty for levels 0..3.
 */
std::optional<std::pair<Hyper, Hyper>> find_zero_divisor(int level);

}  // namespace hopfkiss
