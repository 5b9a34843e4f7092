#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "hopfkiss/hopf.hpp"

namespace testsupport {

using hopfkiss::ExactScalar;
using hopfkiss::Hyper;

inline ExactScalar random_rational(std::mt19937_64& rng, long bound = 9) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return ExactScalar::fraction(num(rng), den(rng));
}

inline ExactScalar random_scalar(std::mt19937_64& rng, long bound = 9) {
    return random_rational(rng, bound) + random_rational(rng, bound) * ExactScalar::sqrt2();
}

inline Hyper random_hyper(std::mt19937_64& rng, int level) {
    std::vector<ExactScalar> c;
    for (int i = 0; i < (1 << level); ++i) c.push_back(random_scalar(rng));
    return Hyper(level, std::move(c));
}

// Unit vector of R^dim: inverse stereographic image of a random rational
// point, then a few 45 degree plane rotations so sqrt 2 terms appear.
inline std::vector<ExactScalar> random_unit_vector(std::mt19937_64& rng, std::size_t dim) {
    std::vector<ExactScalar> v;
    ExactScalar n2 = 0;
    for (std::size_t i = 0; i + 1 < dim; ++i) {
        v.push_back(random_rational(rng, 5));
        n2 += v.back() * v.back();
    }
    const ExactScalar denom = n2 + 1;
    std::vector<ExactScalar> out;
    for (const auto& x : v) out.push_back(ExactScalar(2) * x / denom);
    out.push_back((n2 - 1) / denom);
    if (dim < 2) return out;
    const ExactScalar h = ExactScalar::sqrt2(1, 2);
    std::uniform_int_distribution<std::size_t> axis(0, dim - 1);
    std::uniform_int_distribution<int> rounds(0, 2);
    for (int r = rounds(rng); r > 0; --r) {
        const std::size_t a = axis(rng);
        std::size_t b = axis(rng);
        if (a == b) b = (a + 1) % dim;
        const ExactScalar x = out[a];
        const ExactScalar y = out[b];
        out[a] = h * (x - y);
        out[b] = h * (x + y);
    }
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

inline Hyper random_unit_hyper(std::mt19937_64& rng, int level) {
    return Hyper(level, random_unit_vector(rng, std::size_t{1} << level));
}

inline hopfkiss::SpherePair random_sphere_pair(std::mt19937_64& rng, int level) {
    return hopfkiss::SpherePair::from_ambient(level, random_unit_vector(rng, std::size_t{2} << level));
}

// Base point whose fiber radicals stay in Q(sqrt 2): (1+t)/2 = s^2 with
// s = 2mn/(m^2+n^2), so |a| = 2 s (m^2-n^2)/(m^2+n^2) is rational.
inline hopfkiss::BasePoint random_fiber_base(std::mt19937_64& rng, int level) {
    std::uniform_int_distribution<long> pick(1, 6);
    const long m = pick(rng);
    long n = pick(rng);
    const ExactScalar s = ExactScalar::fraction(2 * m * n, m * m + n * n);
    const ExactScalar c = ExactScalar::fraction(m * m - n * n, m * m + n * n);
    ExactScalar scale = ExactScalar(2) * s * c;
    if (scale.sign() < 0) scale = -scale;
    const ExactScalar t = ExactScalar(2) * s * s - 1;
    return hopfkiss::BasePoint(random_unit_hyper(rng, level) * scale, t);
}

}  // namespace testsupport
