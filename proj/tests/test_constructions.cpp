#include <doctest.h>

#include <algorithm>
#include <set>

#include "hopfkiss/constructions.hpp"

using namespace hopfkiss;

namespace {

const ExactScalar kHalfRoot2 = ExactScalar::sqrt2(1, 2);

// Off-diagonal dots by plain exact arithmetic, independent of the analysis module.
std::map<ExactScalar, std::size_t> brute_spectrum(const Configuration& c) {
    std::map<ExactScalar, std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) ++out[dot(c.point(i), c.point(j))];
    }
    return out;
}

std::map<ExactScalar, std::size_t> row_spectrum(const Configuration& c, std::size_t i) {
    std::map<ExactScalar, std::size_t> out;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j != i) ++out[dot(c.point(i), c.point(j))];
    }
    return out;
}

}  // namespace

TEST_CASE("octahedron and axis bases") {
    const auto oct = octahedron_base();
    CHECK(oct.size() == 6);
    for (std::size_t i = 0; i < oct.size(); ++i) {
        for (std::size_t j = i + 1; j < oct.size(); ++j) {
            const auto d = dot(oct[i].ambient(), oct[j].ambient());
            CHECK((d == ExactScalar(0) || d == ExactScalar(-1)));
        }
    }
    CHECK(std::find(oct.begin(), oct.end(), BasePoint(Hyper::basis(1, 1), 0)) != oct.end());
    const auto a1 = axis_base(1);
    CHECK(a1.size() == 6);
    for (const auto& b : a1) CHECK(std::find(oct.begin(), oct.end(), b.point) != oct.end());
    CHECK(axis_base(2).size() == 10);
    CHECK(axis_base(3).size() == 18);
    CHECK(axis_base(3).front().label == FiberLabel::pole(1));
    CHECK_THROWS_AS(axis_base(0), InputError);
    CHECK_THROWS_AS(axis_base(4), InputError);
}

TEST_CASE("24-cell standard coordinates") {
    const auto c = cell24_standard();
    CHECK(c.size() == 24);
    CHECK(c.contains({kHalfRoot2, kHalfRoot2, 0, 0}));
    CHECK(!c.invariant_violation());
    const auto s = brute_spectrum(c);
    CHECK(s.rbegin()->first == ExactScalar::fraction(1, 2));
}

TEST_CASE("24-cell from the Hopf map equals the standard coordinates") {
    const auto h = cell24_hopf();
    CHECK(same_point_set(h, cell24_standard()));
    CHECK(h.distinct_labels().size() == 6);
    std::map<FiberLabel, int> per_label;
    for (const auto& l : h.labels()) ++per_label[l];
    for (const auto& [l, n] : per_label) CHECK(n == 4);
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            if (h.label(i) != h.label(j)) continue;
            const auto d = dot(h.point(i), h.point(j));
            CHECK((d == ExactScalar(0) || d == ExactScalar(-1)));
        }
    }
    CHECK(fibers_consistent(h));
}

TEST_CASE("pole offset matters already for the 24-cell") {
    LiftPlan plan;
    for (const auto& b : octahedron_base()) plan.base.push_back({b, FiberLabel::of_base(b)});
    plan.fiber_set = roots_of_unity(4, 1);
    const auto plain = lift(plan, ConfigMeta{"cell24", "hopf", 1, true, {}});
    CHECK(plain.size() == 24);
    CHECK(brute_spectrum(plain).rbegin()->first == kHalfRoot2);
}

TEST_CASE("Hurwitz units") {
    const auto u = hurwitz_units();
    CHECK(u.size() == 24);
    std::set<std::vector<ExactScalar>> set;
    for (const auto& x : u) {
        CHECK(cd_norm2(x) == ExactScalar(1));
        set.insert(x.coords());
    }
    CHECK(set.size() == 24);
    for (const auto& x : u) {
        CHECK(set.count((-x).coords()) == 1);
        for (const auto& y : u) CHECK(set.count((x * y).coords()) == 1);
    }
    std::set<ExactScalar> dots;
    for (const auto& x : u) {
        for (const auto& y : u) {
            if (x != y) dots.insert(cd_dot(x, y));
        }
    }
    CHECK(dots == std::set<ExactScalar>{-1, ExactScalar::fraction(-1, 2), 0, ExactScalar::fraction(1, 2)});
}

TEST_CASE("roots of unity") {
    CHECK(roots_of_unity(1, 2).size() == 1);
    const auto r8 = roots_of_unity(8, 1);
    CHECK(r8.size() == 8);
    const Hyper zeta = r8[1];
    Hyper power = Hyper::one(1);
    for (int k = 0; k < 8; ++k) {
        CHECK(power == r8[static_cast<std::size_t>(k)]);
        power = power * zeta;
    }
    CHECK(power == Hyper::one(1));
    CHECK_THROWS_AS(roots_of_unity(3, 1), InputError);
}

TEST_CASE("E8 from the Hopf map") {
    const auto e8 = e8_hopf();
    CHECK(e8.size() == 240);
    CHECK(!e8.invariant_violation());
    CHECK(fibers_consistent(e8));
    CHECK(e8.distinct_labels().size() == 10);
    const auto s = brute_spectrum(e8);
    CHECK(s.rbegin()->first == ExactScalar::fraction(1, 2));
    CHECK(s.size() == 4);
    CHECK(e8.meta().offsets.at("pole+") == pole_offset(2).to_string());
}

TEST_CASE("canonical E8") {
    const auto e8 = e8_canonical();
    CHECK(e8.size() == 240);
    CHECK(!e8.invariant_violation());
    const auto s = brute_spectrum(e8);
    CHECK(s.rbegin()->first == ExactScalar::fraction(1, 2));
    for (std::size_t i : {std::size_t{0}, std::size_t{100}, std::size_t{239}}) {
        CHECK(row_spectrum(e8, i)[ExactScalar::fraction(1, 2)] == 56);
    }
    CHECK(brute_spectrum(e8_hopf()) == s);
}

TEST_CASE("canonical BW16") {
    const auto bw = bw16_canonical();
    CHECK(bw.size() == 4320);
    CHECK(!bw.invariant_violation());
    // Scaled by sqrt 8 the points are integer vectors of norm 8.
    for (const auto& p : bw.points()) {
        for (const auto& c : p) {
            const auto v = c * ExactScalar::sqrt2(2);
            CHECK(v.is_integer());
        }
    }
    for (std::size_t i : {std::size_t{0}, std::size_t{1234}, std::size_t{4319}}) {
        const auto row = row_spectrum(bw, i);
        CHECK(row.rbegin()->first == ExactScalar::fraction(1, 2));
        CHECK(row.at(ExactScalar::fraction(1, 2)) == 280);
        CHECK(row.at(ExactScalar::fraction(1, 4)) == 1024);
        CHECK(row.at(ExactScalar(0)) == 1710);
    }
}

TEST_CASE("Lambda16 from the Hopf map") {
    const auto l16 = lambda16_hopf();
    CHECK(l16.size() == 4320);
    CHECK(!l16.invariant_violation());
    CHECK(fibers_consistent(l16));
    CHECK(l16.distinct_labels().size() == 18);
    for (std::size_t i : {std::size_t{0}, std::size_t{2000}, std::size_t{4319}}) {
        const auto row = row_spectrum(l16, i);
        CHECK(row.rbegin()->first == ExactScalar::fraction(1, 2));
        CHECK(row.at(ExactScalar::fraction(1, 2)) == 280);
    }
}

TEST_CASE("lift rejects duplicate points") {
    LiftPlan plan;
    plan.base = axis_base(1);
    plan.fiber_set = {Hyper::one(1), Hyper::one(1)};
    CHECK_THROWS_AS(lift(plan, ConfigMeta{"dup", "hopf", 1, true, {}}), ConstructionError);
}

TEST_CASE("D5 kissing base") {
    const auto d5 = d5_kissing_40();
    CHECK(d5.size() == 40);
    ExactScalar max_dot(-1);
    for (std::size_t i = 0; i < d5.size(); ++i) {
        for (std::size_t j = i + 1; j < d5.size(); ++j) {
            max_dot = std::max(max_dot, dot(d5[i].ambient(), d5[j].ambient()));
        }
    }
    CHECK(max_dot == ExactScalar::fraction(1, 2));
}

TEST_CASE("fibers_consistent detects a wrong label") {
    const auto h = cell24_hopf();
    std::vector<FiberLabel> labels = h.labels();
    const auto other = std::find_if(labels.begin(), labels.end(), [&](const FiberLabel& l) { return l != labels[0]; });
    REQUIRE(other != labels.end());
    std::swap(labels.front(), *other);
    const Configuration bad(h.ambient_dim(), h.points(), labels, h.meta());
    CHECK(!fibers_consistent(bad));
    CHECK(fibers_consistent(cell24_standard()));
    CHECK(!fibers_consistent(e8_canonical()));
}
