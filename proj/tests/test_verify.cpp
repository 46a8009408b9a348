#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pinwheel/verify.hpp"

using namespace pinwheel;
using Q = Rational;
using P = Point2<Q>;

namespace {

NicePolygon<Q> triangle() { return NicePolygon<Q>::from_vertices({{0, 0}, {1, 3}, {4, 0}}); }

long fact(const CheckReport& r, const std::string& key) {
    for (const auto& [k, v] : r.facts)
        if (k == key) return v;
    FAIL("missing fact " << key);
    return -1;
}

std::string summary(const std::vector<CheckReport>& rs) {
    std::string s;
    for (const auto& r : rs) {
        s += r.name + ":" + std::to_string(r.attempted) + "/" + std::to_string(r.valid) + "/" +
             std::to_string(r.wall_skipped) + "/" + std::to_string(r.violation_count());
        for (const auto& [k, v] : r.facts) s += "," + k + "=" + std::to_string(v);
        s += ";";
    }
    return s;
}

}  // namespace

TEST_CASE("report bookkeeping") {
    CheckReport r{"x", "", 1};
    r.attempted = 200;
    r.wall_skipped = 2;
    CHECK(r.passed());
    r.wall_skipped = 3;
    CHECK_FALSE(r.passed());
    r.wall_skipped = 0;
    for (int i = 0; i < 60; ++i) r.violate(static_cast<std::size_t>(i), "", "", "");
    CHECK(r.violations.size() == 50);
    CHECK(r.violation_count() == 60);
    CHECK_FALSE(r.passed());
}

TEST_CASE("triangle suite") {
    Model<Q> m(triangle());
    auto rs = run_all(m, SuiteOptions{});
    REQUIRE(rs.size() == 7);
    for (const auto& r : rs) {
        INFO(r.name);
        CHECK(r.passed());
    }
    CHECK(rs[0].name == "structure1");
    CHECK(fact(rs[0], "paths") == 3);
    CHECK(fact(rs[0], "unbounded_tiles") == 6);
    CHECK(fact(rs[0], "bounded_tiles") == 0);
    CHECK(fact(rs[1], "k_max") <= 9);
}

TEST_CASE("suite passes on random polygons") {
    for (int n = 3; n <= 7; ++n)
        for (std::uint64_t seed = 100; seed < 103; ++seed) {
            Model<Q> m(random_nice_polygon(n, seed));
            auto rs = run_all(m, SuiteOptions{Profile::quick, seed, 60});
            for (const auto& r : rs) {
                INFO(r.name << " n=" << n << " seed=" << seed);
                CHECK(r.passed());
                CHECK(r.violation_count() == 0);
            }
        }
}

TEST_CASE("reports are reproducible") {
    Model<Q> m(random_nice_polygon(6, 4));
    SuiteOptions opt{Profile::quick, 9, 40};
    CHECK(summary(run_all(m, opt)) == summary(run_all(m, opt)));
}

TEST_CASE("tile samples stay inside their tiles") {
    Model<Q> m(random_nice_polygon(5, 2));
    for (std::size_t i = 0; i < m.forward.tiles().size(); ++i) {
        const auto& t = m.forward.tiles()[i];
        auto pts = tile_samples(m, t, 12, Rng(1, i));
        CHECK(pts.size() == 12);
        for (const auto& p : pts) CHECK(t.region.locate(p) == Location::interior);
        if (!t.bounded) {
            // Three rings: the outermost samples lie beyond the polygon.
            Q far{0};
            for (const auto& p : pts) far = max_value(far, norm_inf(p));
            CHECK(m.poly.diameter() < far);
        }
    }
}

TEST_CASE("far field at an explicit radius") {
    Model<Q> m(random_nice_polygon(5, 7));
    Q R = Q(4) * far_radius(m.sys, m.poly);
    CheckReport r = check_far_field<Q>(m, R, 500, 3);
    CHECK(r.passed());
    CHECK(fact(r, "k_equals_1") + fact(r, "k_equals_2") == r.valid - fact(r, "premise_skips"));
    CHECK(fact(r, "k_equals_1") > 0);
    CHECK(fact(r, "k_equals_2") > 0);
}

TEST_CASE("conjugate polygon index relation") {
    for (int n = 3; n <= 8; ++n) {
        auto poly = random_nice_polygon(n, 31);
        PinwheelSystem<Q> sys(poly), bar(reflect_x(poly));
        std::string why;
        long s = conjugate_shift(sys, bar, &why);
        INFO(why);
        CHECK(s >= 0);
        // A system is not its own reflection in general, but reflecting twice is the identity.
        CHECK(conjugate_shift(bar, PinwheelSystem<Q>(reflect_x(reflect_x(poly)))) >= 0);
    }
}

TEST_CASE("negative controls fire") {
    for (int n = 3; n <= 7; ++n) {
        Model<Q> m(random_nice_polygon(n, 55));
        CHECK_FALSE(control_halved_strip(m, 120, 1).passed());
        CHECK_FALSE(control_flipped_last_step(m, 8, 1).passed());
        // The untouched model still passes the targeted checks.
        CHECK(check_pinwheel_theorem(m, 120, 1).passed());
        CHECK(check_pin1_pin2_move(m, 8, 1).passed());
    }
}

TEST_CASE("quadratic polygon suite") {
    using F = QuadExt;
    F r5(0, 1, 5);
    Model<F> m(NicePolygon<F>::from_vertices({{F(0), F(0)}, {F(1), r5}, {F(4), F(1)}, {F(3), F(-2)}}));
    auto rs = run_all(m, SuiteOptions{Profile::quick, 2, 40});
    for (const auto& r : rs) {
        INFO(r.name);
        CHECK(r.passed());
    }
}
