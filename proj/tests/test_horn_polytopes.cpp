#include <doctest.h>

#include "horn/horn_polytopes.hpp"
#include "horn/hull.hpp"
#include "horn/lr_rule.hpp"
#include "oracles.hpp"

using namespace horn;

namespace {

std::vector<Partition> pts(std::initializer_list<Partition> list) { return {list}; }

// Exact point-in-triangle (or segment, point) test with rationals scaled
// to a common denominator: a planar point lies in the hull of a finite set
// iff it lies in a triangle spanned by three of the points.
bool in_hull_2d(const std::vector<std::array<long, 2>>& p, long x, long y, long den) {
    auto cross = [](long ax, long ay, long bx, long by) { return ax * by - ay * bx; };
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                const long ax = p[i][0] * den, ay = p[i][1] * den;
                const long bx = p[j][0] * den, by = p[j][1] * den;
                const long cx = p[k][0] * den, cy = p[k][1] * den;
                const long d1 = cross(bx - ax, by - ay, x - ax, y - ay);
                const long d2 = cross(cx - bx, cy - by, x - bx, y - by);
                const long d3 = cross(ax - cx, ay - cy, x - cx, y - cy);
                const long area = cross(bx - ax, by - ay, cx - ax, cy - ay);
                if (area != 0) {
                    if ((d1 >= 0 && d2 >= 0 && d3 >= 0) || (d1 <= 0 && d2 <= 0 && d3 <= 0)) return true;
                    continue;
                }
                // degenerate: check the segments
                auto on = [&](long ux, long uy, long vx, long vy) {
                    return cross(vx - ux, vy - uy, x - ux, y - uy) == 0 && std::min(ux, vx) <= x &&
                           x <= std::max(ux, vx) && std::min(uy, vy) <= y && y <= std::max(uy, vy);
                };
                if (on(ax, ay, bx, by) || on(bx, by, cx, cy) || on(ax, ay, cx, cy)) return true;
            }
    return false;
}

}  // namespace

TEST_CASE("P1 for sigma = (5,3,2,0)") {
    const Partition sigma{5, 3, 2, 0};
    CHECK(p1_points(sigma).points() == pts({{5, 5}, {6, 4}, {7, 3}, {8, 2}}));
    CHECK(p2_points(sigma).points() == p1_points(sigma).points());
    CHECK(p1_points(Partition{1, 1}).points() == pts({{2}}));
    CHECK(p_points(Partition{1, 0}).points() == pts({{1, 1}, {2, 0}}));
    CHECK_THROWS_AS(p1_points(Partition{5, 3, 2}), ShapeError);
}

TEST_CASE("lattice point sets") {
    LatticePointSet s(2);
    s.insert(Partition{3, 1});
    s.insert(Partition{2, 2});
    s.insert(Partition{3, 1});
    CHECK(s.size() == 2);
    CHECK(s.contains(Partition{2, 2}));
    CHECK_THROWS_AS(s.insert(Partition{4}), ShapeError);
    CHECK_THROWS_AS(s.insert(Partition{4, 1}), ShapeError);
}

TEST_CASE("membership matches the coefficient") {
    CHECK(horn_membership(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}));
    CHECK_FALSE(horn_membership(Partition{1}, Partition{1}, Partition{3}));
}

TEST_CASE("projection onto the hermitian spectra") {
    const auto h = projection_onto_delta(Partition{8, 6, 4, 2});
    CHECK(h.values() == std::vector<double>{7, 3});
    CHECK(projection_onto_delta(Partition{3, 2}).values() == std::vector<double>{2.5});
    CHECK_THROWS_AS(projection_onto_delta(Partition{3, 2, 1}), ShapeError);
}

TEST_CASE("verifiers on single inputs") {
    CHECK(verify_p1_equals_p2(Partition{0, 0, 0, 0}).passed());
    CHECK(verify_p1_equals_p2(Partition{7, 6, 4, 3}).passed());
    CHECK(verify_nonvanishing_implication(Partition{5, 3, 2, 0}).passed());
    CHECK(verify_projection_inclusion(Partition{5, 3, 2, 0}).passed());

    const auto f = verify_fflp_inequality(Partition{2, 1}, Partition{1, 1}, Partition{3, 2});
    REQUIRE(f.records.size() == 1);
    CHECK(f.records[0].lhs == lr_coefficient(Partition{2, 1}, Partition{1, 1}, Partition{3, 2}));
    CHECK(f.passed());
    CHECK_THROWS(verify_fflp_inequality(Partition{2}, Partition{1}, Partition{2}));

    const Partition sigma{5, 3, 2, 0};
    CHECK(sigma_splits(sigma).size() == 3);
    for (const auto& [l, m] : sigma_splits(sigma)) {
        CHECK(l[0] == 5);
        for (const auto& nu : partitions_of(10, 4, 8)) CHECK(verify_lpp_inequality(sigma, l, m, nu).passed());
    }
    CHECK_THROWS(verify_lpp_inequality(sigma, Partition{5, 4}, Partition{2, 0}, Partition{11}));
    CHECK_THROWS(verify_lpp_inequality(sigma, Partition{5, 3, 2}, Partition{0}, Partition{10}));

    const auto rec = prop2_record(Partition{7, 6, 4, 3}, Partition{10, 8, 2});
    CHECK(rec.lhs == 3);
    CHECK(rec.rhs == 17);
    CHECK(rec.ok);
}

TEST_CASE("exact hull membership against a triangle oracle") {
    std::uniform_int_distribution<long> coord(0, 6), den(1, 4), q(-2, 28);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::array<long, 2>> raw;
        std::vector<std::vector<std::int64_t>> points;
        const int count = 1 + trial % 6;
        for (int i = 0; i < count; ++i) {
            const long x = coord(oracle::rng()), y = coord(oracle::rng());
            raw.push_back({x, y});
            points.push_back({x, y});
        }
        const LatticeHull hull(points);
        for (int k = 0; k < 80; ++k) {
            const long d = den(oracle::rng());
            const std::int64_t x = q(oracle::rng()) % (7 * d), y = q(oracle::rng()) % (7 * d);
            const std::vector<std::int64_t> p{x, y};
            CHECK(hull.contains(p, d) == in_hull_2d(raw, x, y, d));
        }
        // every generator is inside, including in floating point
        for (const auto& p : points) {
            CHECK(hull.contains(p));
            const std::vector<double> f{static_cast<double>(p[0]), static_cast<double>(p[1])};
            CHECK(hull.contains_approx(f, 1e-9));
        }
    }
}

TEST_CASE("hull dimension and degenerate input") {
    const LatticeHull seg({{5, 5}, {8, 2}, {6, 4}});
    CHECK(seg.dimension() == 1);
    CHECK(seg.contains(std::vector<std::int64_t>{13, 7}, 2));
    CHECK_FALSE(seg.contains(std::vector<std::int64_t>{9, 1}));
    CHECK(seg.contains_approx(std::vector<double>{7.5 + 1e-9, 2.5 - 1e-9}, 1e-7));
    CHECK_FALSE(seg.contains_approx(std::vector<double>{8.001, 1.999}, 1e-7));
    CHECK_FALSE(seg.contains_approx(std::vector<double>{7.0, 3.01}, 1e-7));
    const LatticeHull empty({});
    CHECK(empty.dimension() == -1);
    CHECK_FALSE(empty.contains(std::vector<std::int64_t>{}));
}
