#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pinwheel/dynamics.hpp"
#include "pinwheel/random_polygon.hpp"

using namespace pinwheel;
using Q = Rational;
using P = Point2<Q>;

namespace {

NicePolygon<Q> triangle() { return NicePolygon<Q>::from_vertices({{0, 0}, {1, 3}, {4, 0}}); }

P random_point(Rng& rng, long r, long den) {
    auto c = [&] {
        return make_rational(Integer(static_cast<long>(rng.below(static_cast<std::uint64_t>(2 * r * den + 1)))) - r * den, den);
    };
    return {c(), c()};
}

}  // namespace

TEST_CASE("pinwheel map step rule") {
    PinwheelSystem<Q> sys(triangle());
    // (0, 13) is above strip 1: mu_1 moves it and the index stays.
    CHECK(pinwheel_step(sys, IndexedPoint<Q>{{0, 13}, 3}) == IndexedPoint<Q>{{-2, 7}, 3});
    // (0, 3) is inside strip 1: the index advances.
    CHECK(pinwheel_step(sys, IndexedPoint<Q>{{0, 3}, 3}) == IndexedPoint<Q>{{0, 3}, 1});
}

TEST_CASE("theorem step on the worked example") {
    Model<Q> m(triangle());
    TheoremStep<Q> r = pinwheel_theorem_step(m, P{8, -2});
    CHECK(r.q == P{10, 4});
    CHECK(r.k_used >= 1);
    CHECK(r.k_used <= 9);
    CHECK_THROWS_AS(pinwheel_theorem_step(m, P{1, 1}), UndefinedPoint);
}

TEST_CASE("accelerated strip-system return agrees with plain iteration") {
    Rng rng(21);
    for (int n = 3; n <= 7; ++n)
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            PinwheelSystem<Q> sys(random_nice_polygon(n, seed));
            long tried = 0;
            for (int i = 0; i < 400 && tried < 60; ++i) {
                P p = random_point(rng, 2000, 7);
                long k = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(n)));
                IndexedPoint<Q> x{p, k};
                if (!in_strip_union(sys, x)) continue;
                ++tried;
                // Oracle: one pinwheel step at a time.
                IndexedPoint<Q> y = x;
                long steps = 0;
                bool wall = false;
                try {
                    do {
                        y = pinwheel_step(sys, y);
                        ++steps;
                    } while (!in_strip_union(sys, y) && steps < 10000000);
                } catch (const OnStripBoundary&) {
                    wall = true;
                }
                if (wall) {
                    CHECK_THROWS_AS(strip_system_return(sys, x, Integer(1) << 40), OnStripBoundary);
                    continue;
                }
                IndexedLanding<Q> l = strip_system_return(sys, x, Integer(1) << 40);
                CHECK(l.x == y);
                CHECK(l.steps == steps);
                if (steps > 1) CHECK_THROWS_AS(strip_system_return(sys, x, Integer(steps - 1)), BudgetExceeded);
            }
            CHECK(tried > 0);
        }
}

TEST_CASE("strip-system return rejects starts outside the strip") {
    PinwheelSystem<Q> sys(triangle());
    CHECK_THROWS_AS(strip_system_return(sys, IndexedPoint<Q>{{0, 13}, 1}, Integer(10)), std::invalid_argument);
}

TEST_CASE("exit map leaves the tile and no earlier iterate does") {
    Rng rng(3);
    for (int n = 4; n <= 6; ++n) {
        Model<Q> m(random_nice_polygon(n, 9));
        long done = 0;
        for (int i = 0; i < 200 && done < 30; ++i) {
            P p = random_point(rng, 200, 5);
            try {
                TileLabel start = m.tile_of(p).label;
                Landing<Q> l = exit_map(m, p, 100000);
                ++done;
                P q = p;
                for (long k = 1; k < l.steps; ++k) {
                    q = square_map(m.poly, q).q;
                    CHECK(*square_map(m.poly, q).label == start);
                }
                CHECK(square_map(m.poly, q).q == l.q);
                CHECK_FALSE(*square_map(m.poly, l.q).label == start);
            } catch (const UndefinedPoint&) {
            }
        }
        CHECK(done > 0);
    }
}

TEST_CASE("orbit records") {
    Model<Q> m(triangle());
    auto rec = orbit(m, P{8, -2}, OrbitMap::psi, 5);
    REQUIRE(rec.entries.size() == 6);
    CHECK(rec.end == OrbitEvent::budget_exhausted);
    for (std::size_t i = 0; i < rec.entries.size(); ++i) CHECK(rec.entries[i].step == static_cast<long>(i));
    CHECK(rec.entries[1].p == P{10, 4});
    for (std::size_t i = 1; i < rec.entries.size(); ++i)
        CHECK(square_map(m.poly, rec.entries[i - 1].p).q == rec.entries[i].p);

    auto esc = orbit(m, P{8, -2}, OrbitMap::psi, 1000, std::optional<Q>(Q(9)));
    CHECK(esc.end == OrbitEvent::escaped);
    CHECK(esc.entries.size() == 2);

    auto bad = orbit(m, P{1, 1}, OrbitMap::psi_star, 3);
    CHECK(bad.end == OrbitEvent::undefined);
    CHECK(bad.entries.size() == 1);

    auto star = orbit(m, P{8, -2}, OrbitMap::psi_star, 40);
    CHECK(star.end == OrbitEvent::budget_exhausted);
    bool hit = false;
    for (const auto& e : star.entries) hit = hit || e.p == P{10, 4};
    CHECK(hit);

    auto ret = orbit(m, P{0, 3}, OrbitMap::strip_return, 4, std::optional<Q>(), 1);
    CHECK(ret.entries.size() == 5);
    for (const auto& e : ret.entries)
        if (e.event == OrbitEvent::returned) CHECK(m.sys.pair(e.k).locate(e.p) == Location::interior);

    auto fr = orbit(m, P{20, 3}, OrbitMap::first_return, 3);
    for (std::size_t i = 1; i < fr.entries.size(); ++i)
        CHECK(m.sys.pair(1).locate(fr.entries[i].p) == Location::interior);
    CHECK(std::string(to_string(OrbitMap::psi_star)) == "psistar");
}

TEST_CASE("far-field radius is beyond the polygon") {
    Model<Q> m(random_nice_polygon(5, 1));
    Q R = far_radius(m.sys, m.poly);
    for (const auto& v : m.poly.vertices()) CHECK(norm_inf(v) < R);
}

TEST_CASE("quadratic field dynamics") {
    using F = QuadExt;
    F r5(0, 1, 5);
    Model<F> m(NicePolygon<F>::from_vertices({{F(0), F(0)}, {r5, F(3)}, {F(4), F(0)}}));
    Point2<F> p{F(9), F(-2)};
    TheoremStep<F> r = pinwheel_theorem_step(m, p);
    CHECK(r.q == square_map(m.poly, p).q);
    CHECK(r.k_used <= 9);
}
