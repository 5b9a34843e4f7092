#include "hopfkiss/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hopfkiss {
namespace {

void check_hopf_level(int level) {
    if (level < 1 || level > 3) {
        throw InputError("Hopf maps exist for levels 1..3, got " + std::to_string(level));
    }
}

const ExactScalar kOne(1);
const ExactScalar kTwo(2);

// Searches x_i = (p_i + q_i sqrt2) / den over the first `slots` coordinates with
// sum x_i^2 = target. Integer sums: sum(p^2 + 2q^2) = den^2 rat, sum(2pq) = den^2 irr.
bool search_norm(std::vector<std::pair<long, long>>& picked, std::size_t slots, long rat_left,
                 long irr_left) {
    if (picked.size() == slots) return rat_left == 0 && irr_left == 0;
    const long bound = static_cast<long>(std::sqrt(static_cast<double>(rat_left))) + 1;
    for (long p = bound; p >= -bound; --p) {
        for (long q = bound; q >= -bound; --q) {
            const long r = p * p + 2 * q * q;
            if (r > rat_left) continue;
            picked.emplace_back(p, q);
            if (search_norm(picked, slots, rat_left - r, irr_left - 2 * p * q)) return true;
            picked.pop_back();
        }
    }
    return false;
}

}  // namespace

SpherePair::SpherePair(Hyper w, Hyper z) : w_(std::move(w)), z_(std::move(z)) {
    check_hopf_level(w_.level());
    if (w_.level() != z_.level()) throw InputError("SpherePair halves differ in level");
    if (cd_norm2(w_) + cd_norm2(z_) != kOne) {
        throw InputError("SpherePair is not on the unit sphere: |w|^2+|z|^2 = " +
                         (cd_norm2(w_) + cd_norm2(z_)).to_string());
    }
}

SpherePair SpherePair::from_ambient(int level, const std::vector<ExactScalar>& coords) {
    check_hopf_level(level);
    const std::size_t half = std::size_t{1} << level;
    if (coords.size() != 2 * half) {
        throw InputError("ambient vector has wrong dimension for level " + std::to_string(level));
    }
    return SpherePair(Hyper(level, {coords.begin(), coords.begin() + static_cast<long>(half)}),
                      Hyper(level, {coords.begin() + static_cast<long>(half), coords.end()}));
}

std::vector<ExactScalar> SpherePair::ambient() const {
    std::vector<ExactScalar> out = w_.coords();
    out.insert(out.end(), z_.coords().begin(), z_.coords().end());
    return out;
}

BasePoint::BasePoint(Hyper a, ExactScalar t) : a_(std::move(a)), t_(std::move(t)) {
    if (cd_norm2(a_) + t_ * t_ != kOne) {
        throw InputError("BasePoint is not on the unit sphere");
    }
}

std::vector<ExactScalar> BasePoint::ambient() const {
    std::vector<ExactScalar> out = a_.coords();
    out.push_back(t_);
    return out;
}

BasePoint hopf_direct(const SpherePair& p) {
    return BasePoint(kTwo * (p.w() * cd_conj(p.z())), cd_norm2(p.z()) - cd_norm2(p.w()));
}

ExtendedValue h1(const SpherePair& p) {
    if (p.z().is_zero()) return Infinity{};
    return p.w() * cd_inv(p.z());
}

BasePoint h2(const ExtendedValue& c, int level) {
    check_hopf_level(level);
    if (is_infinite(c)) return BasePoint(Hyper::zero(level), ExactScalar(-1));
    const auto& value = std::get<Hyper>(c);
    if (value.level() != level) throw InputError("h2: level mismatch");
    const ExactScalar n = cd_norm2(value);
    const ExactScalar denom = kOne + n;
    return BasePoint(value * (kTwo / denom), (kOne - n) / denom);
}

SpherePair fiber_point(const BasePoint& base, const Hyper& q) {
    const int level = base.level();
    check_hopf_level(level);
    if (q.level() != level) throw InputError("fiber parameter level mismatch");
    if (cd_norm2(q) != kOne) throw InputError("fiber parameter is not a unit element");

    const ExactScalar one_plus_t = kOne + base.t();
    if (one_plus_t.is_zero()) return SpherePair(q, Hyper::zero(level));

    const auto outer = (kTwo * one_plus_t).try_sqrt();
    const auto inner = (one_plus_t / kTwo).try_sqrt();
    if (!outer || !inner) {
        throw FieldOverflow("fiber radicals for t = " + base.t().to_string() +
                            " are not in Q(sqrt 2)");
    }
    return SpherePair((base.a() * q) / *outer, q * *inner);
}

std::optional<Hyper> fiber_anchor(const BasePoint& base) {
    const int level = base.level();
    check_hopf_level(level);
    const ExactScalar one_plus_t = kOne + base.t();
    if (one_plus_t.is_zero()) return Hyper::one(level);
    const ExactScalar target = one_plus_t / kTwo;
    if (auto root = target.try_sqrt()) return Hyper::from_real(level, *root);

    const std::size_t slots = std::min<std::size_t>(std::size_t{1} << level, 4);
    for (long den = 1; den <= 16; den *= 2) {
        const mpq_class rat = target.rat() * den * den;
        const mpq_class irr = target.irr() * den * den;
        if (rat.get_den() != 1 || irr.get_den() != 1) continue;
        if (!rat.get_num().fits_slong_p() || !irr.get_num().fits_slong_p()) continue;
        std::vector<std::pair<long, long>> picked;
        if (!search_norm(picked, slots, rat.get_num().get_si(), irr.get_num().get_si())) continue;
        std::vector<ExactScalar> coords(std::size_t{1} << level);
        for (std::size_t i = 0; i < picked.size(); ++i) {
            coords[i] = ExactScalar(mpq_class(picked[i].first, den), mpq_class(picked[i].second, den));
        }
        return Hyper(level, std::move(coords));
    }
    return std::nullopt;
}

SpherePair fiber_point_anchored(const BasePoint& base, const Hyper& anchor, const Hyper& q) {
    const int level = base.level();
    check_hopf_level(level);
    if (cd_norm2(q) != kOne) throw InputError("fiber parameter is not a unit element");
    const ExactScalar one_plus_t = kOne + base.t();
    const Hyper z = anchor * q;
    if (one_plus_t.is_zero()) return SpherePair(z, Hyper::zero(level));
    if (cd_norm2(anchor) * kTwo != one_plus_t) {
        throw InputError("fiber anchor has the wrong norm for this base point");
    }
    return SpherePair((base.a() * z) / one_plus_t, z);
}

}  // namespace hopfkiss
