#include "hopfkiss/analysis.hpp"

#include <algorithm>
#include <unordered_map>

#include "parallel.hpp"

namespace hopfkiss {
namespace {

// Keeps |rat|, |irr| of every dot below 2^60 so sign tests fit in __int128.
constexpr int kPackBits = 60;

struct RowEntry {
    std::uint32_t count = 0;
    std::vector<std::uint32_t> by_label;
};

template <typename Key>
struct RowStats {
    std::vector<Key> keys;
    std::vector<RowEntry> entries;

    RowEntry& slot(const Key& key, std::size_t label_count) {
        for (std::size_t k = 0; k < keys.size(); ++k) {
            if (keys[k] == key) return entries[k];
        }
        keys.push_back(key);
        entries.push_back({0, std::vector<std::uint32_t>(label_count, 0)});
        return entries.back();
    }
};

std::vector<std::size_t> label_indices(const Configuration& config, const std::vector<FiberLabel>& labels) {
    std::vector<std::size_t> out(config.size());
    for (std::size_t i = 0; i < config.size(); ++i) {
        out[i] = static_cast<std::size_t>(
            std::lower_bound(labels.begin(), labels.end(), config.label(i)) - labels.begin());
    }
    return out;
}

template <typename Key, typename DotFn, typename ToScalar>
AnalysisReport analyze_with(const Configuration& config, const AnalysisOptions& options, DotFn&& dot_of,
                            ToScalar&& to_scalar) {
    const std::size_t n = config.size();
    const auto labels = config.distinct_labels();
    const auto label_of = label_indices(config, labels);

    std::vector<RowStats<Key>> rows(n);
    detail::parallel_for(n, options.workers, [&](std::size_t i) {
        auto& row = rows[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            auto& entry = row.slot(dot_of(i, j), labels.size());
            ++entry.count;
            ++entry.by_label[label_of[j]];
        }
    });

    // Ordered reduction: distinct values sorted by exact value.
    std::vector<std::pair<ExactScalar, Key>> distinct;
    for (const auto& row : rows) {
        for (const auto& key : row.keys) {
            if (std::none_of(distinct.begin(), distinct.end(),
                             [&](const auto& d) { return d.second == key; })) {
                distinct.emplace_back(to_scalar(key), key);
            }
        }
    }
    std::sort(distinct.begin(), distinct.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    AnalysisReport report;
    report.point_count = n;
    for (const auto& d : distinct) report.values.push_back(d.first);
    const std::size_t v = distinct.size();
    report.per_point.assign(n, std::vector<std::uint32_t>(v, 0));
    report.pair_counts.assign(v, 0);
    std::vector<std::vector<std::vector<std::uint32_t>>> label_counts(n);
    for (std::size_t i = 0; i < n; ++i) {
        label_counts[i].assign(v, {});
        for (std::size_t k = 0; k < rows[i].keys.size(); ++k) {
            const auto pos = static_cast<std::size_t>(
                std::find_if(distinct.begin(), distinct.end(),
                             [&](const auto& d) { return d.second == rows[i].keys[k]; }) -
                distinct.begin());
            report.per_point[i][pos] = rows[i].entries[k].count;
            label_counts[i][pos] = std::move(rows[i].entries[k].by_label);
            report.pair_counts[pos] += rows[i].entries[k].count;
        }
    }
    for (auto& c : report.pair_counts) c /= 2;

    report.neighbor_counts.assign(n, 0);
    report.decomposition.assign(n, {});
    if (v > 0) {
        report.max_offdiag_dot = report.values.back();
        for (std::size_t i = 0; i < n; ++i) {
            report.neighbor_counts[i] = report.per_point[i][v - 1];
            const auto& by_label = label_counts[i][v - 1];
            for (std::size_t l = 0; l < by_label.size(); ++l) {
                if (by_label[l] != 0) report.decomposition[i][labels[l]] = by_label[l];
            }
        }
    }

    const auto minus_one = std::find(report.values.begin(), report.values.end(), ExactScalar(-1));
    report.antipodal = n > 0 && minus_one != report.values.end();
    if (report.antipodal) {
        const auto idx = static_cast<std::size_t>(minus_one - report.values.begin());
        for (std::size_t i = 0; i < n; ++i) {
            if (report.per_point[i][idx] != 1) report.antipodal = false;
        }
    }
    return report;
}

// Sign of a + b sqrt2 with |a|, |b| < 2^62.
int sign_mixed(__int128 a, __int128 b) {
    if (a >= 0 && b >= 0) return (a > 0 || b > 0) ? 1 : 0;
    if (a <= 0 && b <= 0) return -1;
    const __int128 lhs = a * a;
    const __int128 rhs = 2 * b * b;
    const int c = lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
    return a > 0 ? c : -c;
}

}  // namespace

std::optional<PackedPoints> PackedPoints::pack(const Configuration& config) {
    PackedPoints packed;
    packed.count_ = config.size();
    packed.dim_ = config.ambient_dim();
    mpz_class den = 1;
    for (const auto& p : config.points()) {
        for (const auto& c : p) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rat().get_den_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.irr().get_den_mpz_t());
        }
    }
    packed.denominator_ = den;
    const mpz_class den2 = den * den;
    mpz_class max_rat = 0;
    mpz_class max_irr = 0;
    packed.rat_.reserve(packed.count_ * packed.dim_);
    packed.irr_.reserve(packed.count_ * packed.dim_);
    for (const auto& p : config.points()) {
        for (const auto& c : p) {
            const mpq_class r = c.rat() * den;
            const mpq_class s = c.irr() * den;
            const mpz_class ri = r.get_num();
            const mpz_class si = s.get_num();
            if (abs(ri) > max_rat) max_rat = abs(ri);
            if (abs(si) > max_irr) max_irr = abs(si);
            if (!ri.fits_slong_p() || !si.fits_slong_p()) return std::nullopt;
            packed.rat_.push_back(ri.get_si());
            packed.irr_.push_back(si.get_si());
        }
    }
    const mpz_class limit = mpz_class(1) << kPackBits;
    const mpz_class dim = static_cast<unsigned long>(std::max<std::size_t>(packed.dim_, 1));
    if (dim * (max_rat * max_rat + 2 * max_irr * max_irr) >= limit) return std::nullopt;
    if (dim * 2 * max_rat * max_irr >= limit) return std::nullopt;
    if (den2 >= limit) return std::nullopt;
    return packed;
}

PackedPoints::Key PackedPoints::dot(std::size_t i, std::size_t j) const {
    const std::int64_t* pr = &rat_[i * dim_];
    const std::int64_t* pi = &irr_[i * dim_];
    const std::int64_t* qr = &rat_[j * dim_];
    const std::int64_t* qi = &irr_[j * dim_];
    std::int64_t r = 0;
    std::int64_t s = 0;
    for (std::size_t k = 0; k < dim_; ++k) {
        r += pr[k] * qr[k] + 2 * pi[k] * qi[k];
        s += pr[k] * qi[k] + pi[k] * qr[k];
    }
    return {r, s};
}

ExactScalar PackedPoints::to_scalar(const Key& k) const {
    const mpz_class den2 = denominator_ * denominator_;
    return ExactScalar(mpq_class(mpz_class(static_cast<long>(k.rat)), den2),
                       mpq_class(mpz_class(static_cast<long>(k.irr)), den2));
}

std::optional<PackedPoints::Key> PackedPoints::key_of(const ExactScalar& value) const {
    const mpz_class den2 = denominator_ * denominator_;
    const mpq_class r = value.rat() * den2;
    const mpq_class s = value.irr() * den2;
    if (r.get_den() != 1 || s.get_den() != 1) return std::nullopt;
    if (!r.get_num().fits_slong_p() || !s.get_num().fits_slong_p()) return std::nullopt;
    return Key{r.get_num().get_si(), s.get_num().get_si()};
}

std::map<ExactScalar, std::uint64_t> AnalysisReport::dot_spectrum() const {
    std::map<ExactScalar, std::uint64_t> out;
    for (std::size_t k = 0; k < values.size(); ++k) out[values[k]] = pair_counts[k];
    return out;
}

std::optional<std::map<ExactScalar, std::uint32_t>> AnalysisReport::uniform_point_spectrum() const {
    if (per_point.empty()) return std::nullopt;
    for (const auto& row : per_point) {
        if (row != per_point.front()) return std::nullopt;
    }
    std::map<ExactScalar, std::uint32_t> out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (per_point.front()[k] != 0) out[values[k]] = per_point.front()[k];
    }
    return out;
}

std::optional<std::uint32_t> AnalysisReport::uniform_neighbor_count() const {
    if (neighbor_counts.empty()) return std::nullopt;
    for (auto c : neighbor_counts) {
        if (c != neighbor_counts.front()) return std::nullopt;
    }
    return neighbor_counts.front();
}

AnalysisReport analyze(const Configuration& config, const AnalysisOptions& options) {
    if (auto packed = PackedPoints::pack(config)) {
        return analyze_with<PackedPoints::Key>(
            config, options, [&](std::size_t i, std::size_t j) { return packed->dot(i, j); },
            [&](const PackedPoints::Key& k) { return packed->to_scalar(k); });
    }
    return analyze_with<ExactScalar>(
        config, options, [&](std::size_t i, std::size_t j) { return dot(config.point(i), config.point(j)); },
        [](const ExactScalar& x) { return x; });
}

KissingResult assert_kissing(const Configuration& config, const AnalysisOptions& options) {
    const std::size_t n = config.size();
    std::vector<std::optional<std::size_t>> first_bad(n);
    const auto packed = PackedPoints::pack(config);
    const ExactScalar half = ExactScalar::fraction(1, 2);

    if (packed) {
        // dot > 1/2  <=>  (2r - D^2) + 2s sqrt2 > 0
        const auto unit = packed->key_of(ExactScalar(1));
        const __int128 den2 = unit ? unit->rat : 0;
        detail::parallel_for(n, options.workers, [&](std::size_t i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const auto k = packed->dot(i, j);
                if (sign_mixed(2 * static_cast<__int128>(k.rat) - den2, 2 * static_cast<__int128>(k.irr)) > 0) {
                    first_bad[i] = j;
                    return;
                }
            }
        });
    } else {
        detail::parallel_for(n, options.workers, [&](std::size_t i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (dot(config.point(i), config.point(j)) > half) {
                    first_bad[i] = j;
                    return;
                }
            }
        });
    }

    KissingResult result;
    for (std::size_t i = 0; i < n; ++i) {
        if (!first_bad[i]) continue;
        result.kissing = false;
        result.first = i;
        result.second = *first_bad[i];
        result.value = dot(config.point(i), config.point(*first_bad[i]));
        break;
    }
    return result;
}

bool spectra_equal(const AnalysisReport& a, const AnalysisReport& b) {
    return a.point_count == b.point_count && a.values == b.values && a.pair_counts == b.pair_counts;
}

bool spectra_equal(const Configuration& a, const Configuration& b, const AnalysisOptions& options) {
    if (a.size() != b.size()) return false;
    return spectra_equal(analyze(a, options), analyze(b, options));
}

std::optional<FiberDecomposition> uniform_decomposition(const Configuration& config,
                                                        const AnalysisReport& report) {
    const auto labels = config.distinct_labels();
    if (labels.empty() || labels.back().is_none()) return std::nullopt;
    std::optional<FiberDecomposition> common;
    for (std::size_t i = 0; i < config.size(); ++i) {
        const auto& own = config.label(i);
        const auto& counts = report.decomposition[i];
        auto count_of = [&](const FiberLabel& l) -> std::uint32_t {
            const auto it = counts.find(l);
            return it == counts.end() ? 0 : it->second;
        };
        FiberDecomposition d;
        d.total = report.neighbor_counts[i];
        d.own_fiber = count_of(own);
        d.antipodal_fiber = count_of(own.antipode());
        std::optional<std::uint32_t> per_other;
        for (const auto& l : labels) {
            if (l == own || l.is_antipode_of(own)) continue;
            ++d.other_fiber_count;
            const auto c = count_of(l);
            if (per_other && *per_other != c) return std::nullopt;
            per_other = c;
        }
        d.per_other_fiber = per_other.value_or(0);
        if (!common) {
            common = d;
        } else if (common->total != d.total || common->own_fiber != d.own_fiber ||
                   common->antipodal_fiber != d.antipodal_fiber ||
                   common->per_other_fiber != d.per_other_fiber ||
                   common->other_fiber_count != d.other_fiber_count) {
            return std::nullopt;
        }
    }
    return common;
}

ExperimentReport experiment_e5_lift(int fiber_size, const std::map<FiberLabel, Hyper>& offsets,
                                    const AnalysisOptions& options) {
    LiftPlan plan;
    for (const auto& b : d5_kissing_40()) plan.base.push_back({b, FiberLabel::of_base(b)});
    plan.fiber_set = roots_of_unity(fiber_size, 2);
    plan.offsets = offsets;
    plan.anchored = true;

    ConfigMeta meta{"e5-lift", "hopf", 2, false, {}};
    for (const auto& [label, value] : offsets) meta.offsets[label.to_string()] = value.to_string();
    ExperimentReport out{lift(plan, std::move(meta), BuildOptions{options.workers}), {}, {}};
    out.analysis = analyze(out.config, options);
    out.kissing = assert_kissing(out.config, options);
    return out;
}

}  // namespace hopfkiss
