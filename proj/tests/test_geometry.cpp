#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pinwheel/geometry.hpp"

using namespace pinwheel;
using Q = Rational;
using P = Point2<Q>;

namespace {

ConvexRegion<Q> box_region(Q x0, Q y0, Q x1, Q y1, bool open = true) {
    return ConvexRegion<Q>::from_polygon({{x0, y1}, {x1, y1}, {x1, y0}, {x0, y0}}, open);
}

}  // namespace

TEST_CASE("lines are normalized and intersect exactly") {
    Line<Q> l = Line<Q>::through({0, 0}, {1, 3});
    CHECK(l.a() == 1);
    CHECK(l.b() == make_rational(-1, 3));
    CHECK(signed_offset(l, P{1, 3}) == 0);
    Line<Q> m(Q(0), Q(2), Q(4));  // y = 2
    auto x = intersect_lines(l, m);
    REQUIRE(x);
    CHECK(*x == P{make_rational(2, 3), 2});
    CHECK_FALSE(intersect_lines(l, l.parallel_through({5, 0})));
    CHECK(parallel(l, l.parallel_through({5, 0})));
    CHECK_THROWS_AS(Line<Q>(Q(0), Q(0), Q(1)), std::invalid_argument);
}

TEST_CASE("signed area and clipping") {
    std::vector<P> cw{{0, 0}, {1, 3}, {4, 0}};
    CHECK(signed_area(cw) == -6);
    // Keep x <= 1: the triangle (0,0), (1,3), (1,0).
    auto clipped = clip_polygon(cw, make_halfplane(Q(-1), Q(0), Q(-1), Sense::ge));
    CHECK(clipped.size() == 3);
    CHECK(abs_value(signed_area(clipped)) == make_rational(3, 2));
}

TEST_CASE("convex regions: bounded, unbounded, empty") {
    auto sq = box_region(0, 0, 2, 2);
    CHECK(sq.bounded());
    CHECK(region_area(sq) == 4);
    CHECK(sq.locate({1, 1}) == Location::interior);
    CHECK(sq.locate({0, 1}) == Location::boundary);
    CHECK(sq.locate({3, 1}) == Location::outside);
    CHECK(sq.closure().locate({0, 1}) == Location::boundary);

    auto wedge = ConvexRegion<Q>::from({make_halfplane(Q(1), Q(0), Q(0), Sense::gt),
                                        make_halfplane(Q(0), Q(1), Q(0), Sense::gt)});
    CHECK_FALSE(wedge.bounded());
    CHECK_THROWS_AS(wedge.vertices(), UnboundedRegion);
    CHECK_THROWS_AS(region_area(wedge), UnboundedRegion);
    CHECK(wedge.finite_vertices().size() == 1);

    // Touching squares share only an edge: empty interior is the empty region.
    auto touch = region_intersect(sq, box_region(2, 0, 4, 2));
    CHECK(touch.empty());
    CHECK(region_area(touch) == 0);
    CHECK(touch == ConvexRegion<Q>::empty_region());
}

TEST_CASE("intersection area matches the axis-aligned oracle") {
    Rng rng(3);
    auto coord = [&] { return make_rational(Integer(static_cast<long>(rng.below(41))) - 20, 4); };
    for (int i = 0; i < 300; ++i) {
        Q a0 = coord(), a1 = coord(), b0 = coord(), b1 = coord(), c0 = coord(), c1 = coord(), d0 = coord(), d1 = coord();
        if (!(a0 < a1) || !(b0 < b1) || !(c0 < c1) || !(d0 < d1)) continue;
        auto r = region_intersect(box_region(a0, b0, a1, b1), box_region(c0, d0, c1, d1));
        Q w = max_value(Q(0), Q(min_value(a1, c1) - max_value(a0, c0)));
        Q h = max_value(Q(0), Q(min_value(b1, d1) - max_value(b0, d0)));
        CHECK(region_area(r) == w * h);
    }
}

TEST_CASE("translation and slabs") {
    auto sq = box_region(0, 0, 1, 1);
    auto t = sq.translated({3, -1});
    CHECK(t.locate({make_rational(7, 2), make_rational(-1, 2)}) == Location::interior);
    auto s = slab(Line<Q>(Q(0), Q(1), Q(0)), Q(6));  // 0 <= y <= 6
    CHECK(s.locate({100, 6}) == Location::boundary);
    CHECK(s.locate({-100, 3}) == Location::interior);
    CHECK(slab(Line<Q>(Q(0), Q(1), Q(0)), Q(6), true).locate({0, 6}) == Location::boundary);
}

TEST_CASE("clipping an unbounded region to a box") {
    auto half = ConvexRegion<Q>::from({make_halfplane(Q(0), Q(1), Q(0), Sense::gt)});  // y > 0
    auto poly = half.clipped(Box<Q>::centered(Q(2)));
    CHECK(poly.size() == 4);
    CHECK(abs_value(signed_area(poly)) == 8);
}

TEST_CASE("polygon samples lie strictly inside") {
    std::vector<P> cw{{0, 0}, {1, 3}, {4, 0}};
    auto r = ConvexRegion<Q>::from_polygon(cw);
    auto pts = sample_polygon(cw, 500, Rng(4));
    CHECK(pts.size() == 500);
    for (const auto& p : pts) CHECK(r.locate(p) == Location::interior);
    CHECK(pts == sample_polygon(cw, 500, Rng(4)));
    CHECK_THROWS_AS(sample_polygon(std::vector<P>{{0, 0}, {1, 1}}, 1, Rng(1)), EmptyRegion);

    auto half = ConvexRegion<Q>::from({make_halfplane(Q(1), Q(1), Q(0), Sense::gt)});
    CHECK_THROWS_AS(region_sample_points(half, 5, 1), UnboundedRegion);
    for (const auto& p : region_sample_points(half, 50, 1, std::optional<Box<Q>>(Box<Q>::centered(Q(10)))))
        CHECK(half.locate(p) == Location::interior);
}

TEST_CASE("quadratic coordinates") {
    using F = QuadExt;
    F r2(0, 1, 2);
    std::vector<Point2<F>> cw{{F(0), F(0)}, {F(1), r2}, {F(3), F(0)}};
    auto reg = ConvexRegion<F>::from_polygon(cw);
    CHECK(region_area(reg) == F(0, make_rational(3, 2), 2));
    CHECK(reg.locate({F(1), F(make_rational(1, 2))}) == Location::interior);
    CHECK(reg.locate({F(1), F(make_rational(3, 2))}) == Location::outside);
}
