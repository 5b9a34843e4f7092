#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hopfkiss/configuration.hpp"
#include "hopfkiss/constructions.hpp"

namespace hopfkiss {

/**
 * Exact all-pairs inner products over a shared denominator.
 *
 * Each coordinate is written as (p + q sqrt2) / D with integers p, q and one
 * common D for the whole configuration, so a dot product is an integer pair
 * (r, s) meaning (r + s sqrt2) / D^2. Construction fails with std::nullopt
 * if the integers could overflow 64-bit accumulation; callers then fall back
 * to ExactScalar arithmetic.
 */
class PackedPoints {
public:
    struct Key {
        std::int64_t rat;
        std::int64_t irr;
        friend bool operator==(const Key&, const Key&) = default;
    };

    static std::optional<PackedPoints> pack(const Configuration& config);

    std::size_t size() const { return count_; }
    Key dot(std::size_t i, std::size_t j) const;
    ExactScalar to_scalar(const Key& k) const;
    /// Key of an exact value, if it is representable over D^2.
    std::optional<Key> key_of(const ExactScalar& value) const;

private:
    std::size_t count_ = 0;
    std::size_t dim_ = 0;
    mpz_class denominator_;
    std::vector<std::int64_t> rat_;  // count x dim, row-major
    std::vector<std::int64_t> irr_;
};

struct AnalysisOptions {
    unsigned workers = 0;  // 0 = hardware concurrency
};

struct AnalysisReport {
    std::size_t point_count = 0;
    /// Distinct off-diagonal dot values, ascending.
    std::vector<ExactScalar> values;
    /// Unordered pair count per value (same order as `values`).
    std::vector<std::uint64_t> pair_counts;
    /// per_point[i][k]: number of j != i with <x_i, x_j> = values[k].
    std::vector<std::vector<std::uint32_t>> per_point;
    ExactScalar max_offdiag_dot;
    /// Neighbors of each point at max_offdiag_dot.
    std::vector<std::uint32_t> neighbor_counts;
    /// Neighbors of each point at max_offdiag_dot, grouped by the neighbor's fiber label.
    std::vector<std::map<FiberLabel, std::uint32_t>> decomposition;
    bool antipodal = false;

    std::map<ExactScalar, std::uint64_t> dot_spectrum() const;
    /// Common per-point multiplicities if every point has the same profile.
    std::optional<std::map<ExactScalar, std::uint32_t>> uniform_point_spectrum() const;
    std::optional<std::uint32_t> uniform_neighbor_count() const;
};

/// Exact all-pairs analysis. Result is identical for any worker count.
AnalysisReport analyze(const Configuration& config, const AnalysisOptions& options = {});

struct KissingResult {
    bool kissing = true;
    /// First pair (in index order) with dot > 1/2.
    std::optional<std::size_t> first;
    std::optional<std::size_t> second;
    std::optional<ExactScalar> value;
};

/// True iff every off-diagonal dot is <= 1/2 exactly (pairwise angle >= 60 degrees).
KissingResult assert_kissing(const Configuration& config, const AnalysisOptions& options = {});

/// Equal point counts and identical multisets of pairwise dots.
bool spectra_equal(const Configuration& a, const Configuration& b,
                   const AnalysisOptions& options = {});
bool spectra_equal(const AnalysisReport& a, const AnalysisReport& b);

/// Per-point neighbor counts restricted to the point's own fiber and to each
/// non-antipodal foreign fiber. Empty if the counts are not uniform.
struct FiberDecomposition {
    std::uint32_t total = 0;
    std::uint32_t own_fiber = 0;
    std::uint32_t antipodal_fiber = 0;
    std::uint32_t per_other_fiber = 0;
    std::uint32_t other_fiber_count = 0;
};
std::optional<FiberDecomposition> uniform_decomposition(const Configuration& config,
                                                        const AnalysisReport& report);

struct ExperimentReport {
    Configuration config;
    AnalysisReport analysis;
    KissingResult kissing;
};

/// Lifts the 40-point D5 kissing set with m fiber points per base point
/// (m in {1,2,4,8}) through the second Hopf map and analyzes the result.
ExperimentReport experiment_e5_lift(int fiber_size, const std::map<FiberLabel, Hyper>& offsets = {},
                                    const AnalysisOptions& options = {});

}  // namespace hopfkiss
