#include <catch2/catch_amalgamated.hpp>

#include "segscan/hull.hpp"
#include "support.hpp"

using namespace segscan;
using segtest::Rng;

namespace {

HullPoint P(double x, double y) { return {0, x, y}; }

LowerHull hull_of(std::initializer_list<HullPoint> pts, Stats* stats = nullptr) {
    LowerHull h;
    for (const HullPoint& p : pts) h.push_right(p, stats);
    return h;
}

}  // namespace

TEST_CASE("slope comparison is division free") {
    REQUIRE(slope_compare(P(0, 0), P(1, 2), P(0, 0), P(2, 2)) == std::strong_ordering::greater);
    REQUIRE(slope_compare(P(0, 0), P(1, 2), P(0, 0), P(1, 2)) == std::strong_ordering::equal);
    REQUIRE(slope_compare(P(0, 0), P(3, 5), P(2, -1), P(5, 4)) == std::strong_ordering::equal);
    REQUIRE_THROWS_AS(slope_compare(P(0, 0), P(0, 1), P(0, 0), P(1, 1)), DegenerateSpan);
}

TEST_CASE("pushing on the right keeps the lower hull") {
    SECTION("a lower point evicts the middle") {
        LowerHull h = hull_of({P(0, 0), P(1, 2)});
        h.push_right(P(2, -1));
        REQUIRE(h.size() == 2);
        REQUIRE(h[0].x == 0);
        REQUIRE(h[1].x == 2);
        REQUIRE(h[1].y == -1);
    }
    SECTION("two points always stand") {
        LowerHull h = hull_of({P(0, 0)});
        h.push_right(P(1, 5));
        REQUIRE(h.size() == 2);
    }
    SECTION("a longer feed") {
        LowerHull h = hull_of({P(0, 0), P(1, 2), P(2, -1), P(3, 3), P(4, 0)});
        REQUIRE(h.size() == 3);
        REQUIRE(h[0].x == 0);
        REQUIRE(h[1].x == 2);
        REQUIRE(h[2].x == 4);
    }
    SECTION("x must advance") {
        LowerHull h = hull_of({P(0, 0), P(1, 1)});
        REQUIRE_THROWS_AS(h.push_right(P(1, 2)), NonMonotoneX);
    }
}

TEST_CASE("pushing on the left mirrors the right") {
    SECTION("prepending keeps existing vertices when convex") {
        LowerHull h = hull_of({P(2, -1), P(4, 0)});
        h.push_left(P(0, 0));
        REQUIRE(h.size() == 3);
        REQUIRE(h[0].x == 0);
        REQUIRE(h[1].x == 2);
        REQUIRE(h[2].x == 4);
    }
    SECTION("two points") {
        LowerHull h = hull_of({P(1, 1)});
        h.push_left(P(0, 0));
        REQUIRE(h.size() == 2);
        REQUIRE(h[0].x == 0);
    }
    SECTION("prepend above the chord keeps all three") {
        LowerHull h = hull_of({P(1, 0), P(2, 3)});
        h.push_left(P(0, 2));
        REQUIRE(h.size() == 3);
        REQUIRE(h[0].y == 2);
        REQUIRE(h[1].y == 0);
        REQUIRE(h[2].y == 3);
    }
    SECTION("x must retreat") {
        LowerHull h = hull_of({P(1, 0), P(2, 3)});
        REQUIRE_THROWS_AS(h.push_left(P(1.5, 0)), NonMonotoneX);
    }
}

TEST_CASE("tangent from a point right of the hull") {
    SECTION("steepest slope wins") {
        const LowerHull h = hull_of({P(0, 0), P(2, -1), P(4, 0)});
        const TangentHit hit = max_slope_tangent(h, P(5, 4));
        REQUIRE(hit.contact == 2);
        REQUIRE(hit.slope == 4.0);
    }
    SECTION("single point hull") {
        const LowerHull h = hull_of({P(0, 0)});
        const TangentHit hit = max_slope_tangent(h, P(1, 7));
        REQUIRE(hit.contact == 0);
        REQUIRE(hit.slope == 7.0);
    }
    SECTION("flat beats downhill") {
        const LowerHull h = hull_of({P(0, 0), P(1, -2)});
        const TangentHit hit = max_slope_tangent(h, P(3, -2));
        REQUIRE(hit.contact == 1);
        REQUIRE(hit.slope == 0.0);
    }
    SECTION("empty hull") {
        const LowerHull h;
        REQUIRE_THROWS_AS(max_slope_tangent(h, P(1, 1)), EmptyHull);
    }
}

TEST_CASE("incremental hulls match gift wrapping") {
    Rng rng(2024);
    for (int round = 0; round < 200; ++round) {
        const int n = rng.iin(1, 100);
        std::vector<HullPoint> pts;
        double x = 0.0;
        for (int i = 0; i < n; ++i) {
            x += rng.iin(1, 3);  // integer grid provokes collinear chains
            pts.push_back({i, x, static_cast<double>(rng.iin(-6, 6))});
        }
        const auto expect = segtest::brute_lower_hull(pts);

        LowerHull right;
        for (const HullPoint& p : pts) right.push_right(p);
        REQUIRE(right.convex());
        REQUIRE(segtest::same_points(expect, right));

        LowerHull left;
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) left.push_left(*it);
        REQUIRE(left.convex());
        REQUIRE(segtest::same_points(expect, left));
    }
}

TEST_CASE("tangent scan finds the brute-force optimum with the leftmost tie") {
    Rng rng(512);
    for (int round = 0; round < 300; ++round) {
        const int n = rng.iin(1, 40);
        LowerHull h;
        double x = 0.0;
        for (int i = 0; i < n; ++i) {
            x += rng.iin(1, 3);
            h.push_right({i, x, static_cast<double>(rng.iin(-8, 8))});
        }
        const HullPoint q{n, x + rng.iin(1, 4), static_cast<double>(rng.iin(-8, 8))};
        const TangentHit hit = max_slope_tangent(h, q);

        std::size_t best = 0;
        for (std::size_t i = 1; i < h.size(); ++i)
            if (slope_compare(h[i], q, h[best], q) == std::strong_ordering::greater) best = i;
        REQUIRE(hit.contact == best);  // scan keeps the leftmost maximum
    }
}

TEST_CASE("pops never exceed pushes") {
    Rng rng(7);
    Stats stats;
    LowerHull h;
    double x = 0.0;
    for (int i = 0; i < 500; ++i) {
        x += 1.0;
        h.push_right({i, x, static_cast<double>(rng.iin(-20, 20))}, &stats);
    }
    REQUIRE(stats.hull_pushes == 500);
    REQUIRE(stats.hull_pops <= stats.hull_pushes);
    REQUIRE(stats.peak_hull <= 500);
}
