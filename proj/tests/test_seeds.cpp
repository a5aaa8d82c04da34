#include "cspoly/seeds.hpp"

#include <doctest.h>

#include <set>

using namespace cspoly;

namespace {

// 3^n q in [1, 3/2) for every point, tested from the rational definition.
bool lands_in_small_arc(const std::vector<CirclePoint>& pts, unsigned n) {
    for (const auto& p : pts) {
        Rational q = p.pi_fraction() * Rational(pow3(n));
        const Integer whole = numerator(q) / denominator(q);
        q -= Rational(whole - whole % 2);
        if (q < 1 || q >= Rational(3, 2)) return false;
    }
    return true;
}

SetFamily bit_slices() {
    SetFamily f;
    f.m = 8;
    for (unsigned j = 0; j < 3; ++j) {
        Subset s = 0;
        for (unsigned i = 0; i < 8; ++i)
            if ((i >> j) & 1U) s |= Subset{1} << i;
        f.members.push_back(s);
    }
    return f;
}

}  // namespace

TEST_SUITE("seeds") {

TEST_CASE("grid sets") {
    for (unsigned m = 1; m <= 4; ++m) {
        const SeedSet a = build_A(m);
        const auto n = static_cast<std::size_t>(2 * (pow3(m) - 1));
        CHECK(a.size() == n);
        CHECK(a.symmetric);
        for (std::size_t i = 0; i < n; ++i) {
            const auto j = a.antipode_index(i);
            REQUIRE(j);
            CHECK(*j == (i + n / 2) % n);
            CHECK(a.opposite_clusters(i, *j));
        }
        CHECK(half_set(a).size() == n / 2);
    }
    CHECK(build_A(1).angle(1).pi_fraction() == Rational(1, 2));
    CHECK_THROWS_AS(build_A(0), DomainError);
}

TEST_CASE("clustered grid sets") {
    const SeedSet a = build_A_clustered(2, 3);
    CHECK(a.size() == 48);
    CHECK(a.cluster_count() == 16);
    std::set<int> members;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto j = a.antipode_index(i);
        REQUIRE(j);
        CHECK(a.opposite_clusters(i, *j));
        const Rational off = circular_offset(a.cluster_centers[static_cast<std::size_t>(a.points[i].cluster_id)], a.angle(i));
        CHECK(abs(off) <= grid_cluster_width(2));
    }
    CHECK(half_set(a).size() == 24);
    CHECK_THROWS_AS(build_A_clustered(1, 2), DomainError);
    CHECK_THROWS_AS(build_A_clustered(2, 1), DomainError);
    CHECK_THROWS_AS(half_set(half_set(a)), DomainError);
}

TEST_CASE("binary sequences and seed angles") {
    CHECK(binary_seq(subset_of({1}), 0, 2) == std::vector<unsigned>{0, 1, 1});
    CHECK(binary_seq(0, 1, 3) == std::vector<unsigned>{1, 1, 0, 0});
    CHECK(seed_angle(subset_of({1}), 0, 2).pi_fraction() == Rational(4, 9));
    CHECK(epsilon_of(subset_of({1, 2}), 2) == Rational(11, 10000));
    CHECK_THROWS_AS(binary_seq(subset_of({4}), 0, 3), DomainError);
}

TEST_CASE("subset seeds pair up antipodally") {
    const SetFamily f = bit_slices();
    const SeedSet v = build_V(f, 8);
    REQUIRE(v.size() == 6);
    for (std::size_t i = 0; i < 6; i += 2) CHECK(v.antipodal(i, i + 1));
    CHECK(v.points[1].provenance.subset == complement(f.members[0], 8));
    CHECK(check_injectivity(v, 8));

    SetFamily bad = f;
    bad.members.push_back(complement(f.members[0], 8));
    CHECK_THROWS_AS(build_V(bad, 8), DomainError);
}

TEST_CASE("small-arc witnesses agree with a direct rational check") {
    const SeedSet v = build_V(bit_slices(), 8);
    std::size_t tuples = 0;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            for (std::size_t c = b + 1; c < v.size(); ++c) {
                if (v.antipodal(a, b) || v.antipodal(a, c) || v.antipodal(b, c)) continue;
                const std::vector<CirclePoint> pts{v.angle(a), v.angle(b), v.angle(c)};
                const auto w = small_arc_witness(v, pts, 8);
                REQUIRE(w);
                CHECK(lands_in_small_arc(pts, *w));
                for (unsigned n = 1; n < *w; ++n) CHECK_FALSE(lands_in_small_arc(pts, n));
                ++tuples;
            }
    CHECK(tuples == 8);
    const std::vector<CirclePoint> anti{v.angle(0), v.angle(1)};
    CHECK_THROWS_AS(small_arc_witness(v, anti, 8), DomainError);
    const std::vector<CirclePoint> stranger{CirclePoint::from_pi_fraction(1, 7)};
    CHECK_THROWS_AS(small_arc_witness(v, stranger, 8), DomainError);
}

TEST_CASE("injectivity detects collisions") {
    SeedSet s;
    s.m = 1;
    for (auto q : {Rational(0), Rational(2, 3)}) {
        SeedPoint p;
        p.point = CirclePoint::from_pi_fraction(q);
        s.points.push_back(p);
    }
    CHECK_FALSE(check_injectivity(s, 1));
    CHECK(check_injectivity(build_A(3), 2));
}

TEST_CASE("clustered subset seeds") {
    const SeedSet vc = build_V_clustered(bit_slices(), 8, 2);
    CHECK(vc.size() == 12);
    CHECK(check_injectivity(vc, 8));
    for (std::size_t i = 0; i < vc.size(); ++i) CHECK(vc.antipode_index(i));
}

TEST_CASE("json round trip") {
    const SeedSet a = build_A_clustered(2, 2);
    const SeedSet b = seed_set_from_json(to_json(a));
    REQUIRE(b.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.angle(i) == b.angle(i));
        CHECK(a.points[i].cluster_id == b.points[i].cluster_id);
        CHECK(a.points[i].provenance == b.points[i].provenance);
    }
    CHECK(b.opposite_cluster == a.opposite_cluster);
}

}
