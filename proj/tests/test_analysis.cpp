#include <doctest.h>

#include <algorithm>
#include <random>

#include "hopfkiss/analysis.hpp"
#include "hopfkiss/constructions.hpp"
#include "hopfkiss/lattice.hpp"

using namespace hopfkiss;

namespace {

const ExactScalar kHalf = ExactScalar::fraction(1, 2);

Configuration permuted(const Configuration& c, std::uint64_t seed, bool flip_signs = false) {
    std::vector<std::size_t> order(c.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Point> points;
    std::vector<FiberLabel> labels;
    for (auto i : order) {
        Point p = c.point(i);
        if (flip_signs && rng() % 2 == 0) {
            for (auto& x : p) x = -x;
        }
        points.push_back(std::move(p));
        labels.push_back(c.label(i));
    }
    return Configuration(c.ambient_dim(), std::move(points), std::move(labels), c.meta());
}

std::map<ExactScalar, std::uint32_t> spectrum(std::initializer_list<std::pair<ExactScalar, std::uint32_t>> l) {
    return {l.begin(), l.end()};
}

}  // namespace

TEST_CASE("24-cell analysis") {
    const auto r = analyze(cell24_hopf());
    CHECK(r.point_count == 24);
    CHECK(r.max_offdiag_dot == kHalf);
    CHECK(r.uniform_neighbor_count() == 8u);
    CHECK(r.antipodal);
    CHECK(*r.uniform_point_spectrum() ==
          spectrum({{kHalf, 8}, {ExactScalar(0), 6}, {-kHalf, 8}, {ExactScalar(-1), 1}}));
    std::uint64_t total = 0;
    for (auto n : r.pair_counts) total += n;
    CHECK(total == 24 * 23 / 2);
    const auto d = uniform_decomposition(cell24_hopf(), r);
    REQUIRE(d);
    CHECK(d->own_fiber == 0);
    CHECK(d->antipodal_fiber == 0);
    CHECK(d->per_other_fiber == 2);
    CHECK(d->other_fiber_count == 4);
}

TEST_CASE("E8 analysis and fiber decomposition") {
    const auto e8 = e8_hopf();
    const auto r = analyze(e8);
    CHECK(*r.uniform_point_spectrum() ==
          spectrum({{kHalf, 56}, {ExactScalar(0), 126}, {-kHalf, 56}, {ExactScalar(-1), 1}}));
    const auto d = uniform_decomposition(e8, r);
    REQUIRE(d);
    CHECK(d->total == 56);
    CHECK(d->own_fiber == 8);
    CHECK(d->per_other_fiber == 6);
    CHECK(d->other_fiber_count == 8);
    CHECK(!uniform_decomposition(e8_canonical(), analyze(e8_canonical())));
}

TEST_CASE("spectrum is symmetric for antipodal configurations") {
    const auto r = analyze(e8_canonical());
    const auto s = r.dot_spectrum();
    for (const auto& [v, n] : s) {
        if (v != ExactScalar(-1)) CHECK(s.at(-v) == n);
    }
}

TEST_CASE("analysis is independent of point order and worker count") {
    const auto e8 = e8_hopf();
    const auto base = analyze(e8, {1});
    for (unsigned workers : {2u, 3u, 8u}) {
        const auto r = analyze(permuted(e8, workers), {workers});
        CHECK(r.values == base.values);
        CHECK(r.pair_counts == base.pair_counts);
        CHECK(r.per_point == base.per_point);
        CHECK(r.neighbor_counts == base.neighbor_counts);
        CHECK(r.decomposition == base.decomposition);
    }
}

TEST_CASE("packed kernel agrees with exact arithmetic") {
    for (const auto& c : {cell24_hopf(), e8_hopf(), e8_canonical()}) {
        const auto packed = PackedPoints::pack(c);
        REQUIRE(packed);
        for (std::size_t i = 0; i < c.size(); i += 7) {
            for (std::size_t j = 0; j < c.size(); j += 5) {
                CHECK(packed->to_scalar(packed->dot(i, j)) == dot(c.point(i), c.point(j)));
            }
        }
        CHECK(packed->key_of(kHalf));
    }
}

TEST_CASE("kissing check and witness") {
    CHECK(assert_kissing(cell24_hopf()).kissing);
    CHECK(assert_kissing(e8_hopf(), {3}).kissing);
    const ExactScalar h = ExactScalar::sqrt2(1, 2);
    const ExactScalar q = ExactScalar::sqrt2(1, 4);
    // Unit vector at dot 3/4 with the vertex (h, h, 0, 0).
    const Point close{h, q, kHalf, q};
    REQUIRE(dot(close, close) == ExactScalar(1));
    REQUIRE(dot(close, Point{h, h, 0, 0}) == ExactScalar::fraction(3, 4));
    auto points = cell24_standard().points();
    points.push_back(close);
    const Configuration tampered(4, std::move(points), {}, ConfigMeta{"cell24", "canonical", 1, false, {}});
    const auto k = assert_kissing(tampered);
    CHECK(!k.kissing);
    REQUIRE(k.value);
    CHECK(*k.value > kHalf);
    CHECK(dot(tampered.point(*k.first), tampered.point(*k.second)) == *k.value);
    CHECK(*k.first < *k.second);
    CHECK(analyze(tampered).max_offdiag_dot >= *k.value);
    // Same witness for any worker count.
    const auto k3 = assert_kissing(tampered, {3});
    CHECK(k3.first == k.first);
    CHECK(k3.second == k.second);
}

TEST_CASE("spectra_equal") {
    CHECK(spectra_equal(cell24_hopf(), cell24_standard()));
    CHECK(spectra_equal(e8_hopf(), e8_canonical()));
    std::vector<Point> oct;
    for (const auto& b : octahedron_base()) oct.push_back(b.ambient());
    const Configuration octa(3, oct, {}, ConfigMeta{"octahedron", "canonical", 1, true, {}});
    CHECK(!spectra_equal(cell24_standard(), octa));
    CHECK(!spectra_equal(cell24_standard(), e8_canonical()));
}

TEST_CASE("E5 lift experiment") {
    const auto r4 = experiment_e5_lift(4);
    CHECK(r4.config.size() == 160);
    CHECK(r4.analysis.point_count == 160);
    CHECK(!r4.config.invariant_violation());
    for (int m : {1, 2, 8}) CHECK(experiment_e5_lift(m).config.size() == static_cast<std::size_t>(40 * m));
    CHECK_THROWS_AS(experiment_e5_lift(3), InputError);
    // The lifted points lie over the D5 base points.
    const auto base = d5_kissing_40();
    const auto r2 = experiment_e5_lift(2);
    for (const auto& p : r2.config.points()) {
        const auto b = hopf_direct(SpherePair::from_ambient(2, p));
        CHECK(std::find(base.begin(), base.end(), b) != base.end());
    }
}

TEST_CASE("Hermite normal form and Bareiss determinant") {
    const IntegerMatrix rows{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}, {0, 0, 0}};
    const auto hnf = hermite_normal_form(rows, 3);
    REQUIRE(hnf.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(hnf[i][i] > 0);
        for (std::size_t j = 0; j < i; ++j) CHECK(hnf[i][j] == 0);
        for (std::size_t k = 0; k < i; ++k) {
            CHECK(hnf[k][i] >= 0);
            CHECK(hnf[k][i] < hnf[i][i]);
        }
    }
    // |det| of the row lattice: gcd of the 3x3 minors is 144 here.
    mpz_class prod = 1;
    for (std::size_t i = 0; i < 3; ++i) prod *= hnf[i][i];
    CHECK(prod == 144);
    CHECK(bareiss_determinant({{2, 1}, {1, 2}}) == 3);
    CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(bareiss_determinant({{1, 2}, {2, 4}}) == 0);
    CHECK(bareiss_determinant({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
}

TEST_CASE("integral scale") {
    CHECK(integral_scale(analyze(cell24_standard()).values) == ExactScalar::sqrt2());
    CHECK(integral_scale(analyze(e8_canonical()).values) == ExactScalar::sqrt2());
    CHECK(integral_scale({ExactScalar::fraction(1, 4), ExactScalar::fraction(-1, 2)}) == ExactScalar(2));
    CHECK_THROWS_AS(integral_scale({ExactScalar::fraction(1, 3)}), FieldOverflow);
    CHECK_THROWS_AS(integral_scale({ExactScalar::sqrt2(1, 2)}), InputError);
}

TEST_CASE("lattice certificates") {
    const auto d4 = gram_and_basis(cell24_standard(), ExactScalar::sqrt2());
    CHECK(d4.rank == 4);
    CHECK(d4.determinant == 4);
    CHECK(d4.even);
    const auto e8 = gram_and_basis(e8_hopf(), ExactScalar::sqrt2());
    CHECK(e8.rank == 8);
    CHECK(e8.determinant == 1);
    CHECK(e8.even);
    const auto e8c = gram_and_basis(e8_canonical(), ExactScalar::sqrt2());
    CHECK(e8c.determinant == 1);
    // The basis Gram matrix matches the basis vectors.
    for (std::size_t i = 0; i < e8.rank; ++i) {
        for (std::size_t j = 0; j < e8.rank; ++j) {
            CHECK(dot(e8.basis[i], e8.basis[j]) == ExactScalar(mpq_class(e8.gram[i][j])));
        }
    }
    CHECK_THROWS_AS(gram_and_basis(cell24_standard(), ExactScalar(1)), InputError);
    std::vector<Point> flat{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}};
    CHECK_THROWS_AS(gram_and_basis(Configuration(3, flat, {}, {}), ExactScalar(1)), InputError);
}

TEST_CASE("lattice determinant ignores order and signs") {
    const auto e8 = e8_hopf();
    const auto d4 = cell24_standard();
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        CHECK(gram_and_basis(permuted(e8, seed, true), ExactScalar::sqrt2()).determinant == 1);
        CHECK(gram_and_basis(permuted(d4, seed, true), ExactScalar::sqrt2()).determinant == 4);
    }
}

TEST_CASE("right-multiplied pole offsets give a kissing set that is not BW16") {
    const auto e8 = e8_hopf();
    LiftPlan plan;
    plan.base = axis_base(3);
    for (const auto& p : e8.points()) plan.fiber_set.emplace_back(3, p);
    plan.offsets = {{FiberLabel::pole(1), pole_offset(3)}, {FiberLabel::pole(-1), pole_offset(3)}};
    plan.offset_side = OffsetSide::Right;
    const auto right = lift(plan, ConfigMeta{"lambda16", "hopf", 3, true, {}});
    const auto r = analyze(right);
    CHECK(assert_kissing(right).kissing);
    CHECK(spectra_equal(r, analyze(bw16_canonical())));
    const auto lattice = gram_and_basis(right, ExactScalar(2));
    CHECK(lattice.rank == 16);
    CHECK(lattice.determinant == 64);
}
