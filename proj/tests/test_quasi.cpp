#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pinwheel/quasi.hpp"

using namespace pinwheel;
using Q = Rational;
using P = Point2<Q>;

namespace {

NicePolygon<Q> triangle() { return NicePolygon<Q>::from_vertices({{0, 0}, {1, 3}, {4, 0}}); }

// Parallelogram area by shoelace over the four exact line intersections.
Q corner_area(const PinwheelPair<Q>& s, const PinwheelPair<Q>& t) {
    std::vector<P> c{*intersect_lines(s.L, t.L), *intersect_lines(s.L, t.L_prime), *intersect_lines(s.L_prime, t.L_prime),
                     *intersect_lines(s.L_prime, t.L)};
    return abs_value(signed_area(c));
}

}  // namespace

TEST_CASE("worked triangle areas") {
    PinwheelSystem<Q> sys(triangle());
    QuasiData<Q> q = quasi_analyze(sys);
    REQUIRE(q.areas.size() == 3);
    // Sigma_1 cap Sigma_2 = {0 <= y <= 6} cap {0 <= 3x - y <= 24}.
    CHECK(q.areas[0] == 48);
    CHECK(corner_area(sys.pair(1), sys.pair(2)) == 48);
    CHECK(q.quasirational);
    REQUIRE(q.D);
    CHECK(*q.D == 48);
    CHECK(q.D_j == std::vector<Integer>{1, 1, 1});
}

TEST_CASE("areas two ways and integrality of D / A_j") {
    for (int n = 3; n <= 8; ++n)
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            PinwheelSystem<Q> sys(random_nice_polygon(n, seed));
            QuasiData<Q> q = quasi_analyze(sys);
            CHECK(q.quasirational);
            for (long j = 1; j <= n; ++j) {
                const Q& a = q.areas[static_cast<std::size_t>(j - 1)];
                CHECK(sign(a) > 0);
                CHECK(a == parallelogram_area(sys.pair(j), sys.pair(j + 1)));
                CHECK(a == corner_area(sys.pair(j), sys.pair(j + 1)));
                Q ratio = *q.D / a;
                CHECK(ratio.get_den() == 1);
                CHECK(ratio.get_num() == q.D_j[static_cast<std::size_t>(j - 1)]);
                CHECK(sign(ratio) > 0);
            }
            // Least: the D_j share no common factor.
            Integer g = 0;
            for (const auto& d : q.D_j) g = gcd(g, d);
            CHECK(g == 1);
        }
}

TEST_CASE("least common rational multiple") {
    CHECK(rational_lcm({make_rational(1, 2), make_rational(1, 3)}) == 1);
    CHECK(rational_lcm({make_rational(3, 4), make_rational(5, 6)}) == make_rational(15, 2));
    CHECK(rational_lcm({Q(4), Q(6)}) == 12);
    // Brute-force oracle over small numerators and denominators.
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b)
            for (long c = 1; c <= 6; ++c)
                for (long d = 1; d <= 6; ++d) {
                    Q x = make_rational(a, b), y = make_rational(c, d);
                    Q l = rational_lcm({x, y});
                    CHECK(Q(l / x).get_den() == 1);
                    CHECK(Q(l / y).get_den() == 1);
                    // Nothing smaller of the form l / k works.
                    for (long k = 2; k <= 6; ++k) {
                        Q s = l / k;
                        CHECK_FALSE((Q(s / x).get_den() == 1 && Q(s / y).get_den() == 1));
                    }
                }
}

TEST_CASE("quadratic polygons") {
    using F = QuadExt;
    F r5(0, 1, 5);
    // Irrational area ratio.
    Model<F> mk(NicePolygon<F>::from_vertices({{F(0), F(0)}, {F(1), r5}, {F(4), F(1)}, {F(3), F(-2)}}));
    QuasiData<F> q = quasi_analyze(mk.sys);
    CHECK_FALSE(q.quasirational);
    CHECK_FALSE(q.D);
    bool irrational_ratio = false;
    for (const auto& a : q.areas) irrational_ratio = irrational_ratio || !F(a / q.areas[0]).is_rational();
    CHECK(irrational_ratio);
    CHECK_THROWS_AS(check_necklace_invariance(mk, 1, 10, 1), NotQuasirational);
    CHECK_THROWS_AS(boundedness_certificate(mk, Point2<F>{F(50), F(1)}, 1), NotQuasirational);

    // Every triangle is affinely regular: equal irrational areas, quasirational.
    PinwheelSystem<F> tri(NicePolygon<F>::from_vertices({{F(0), F(0)}, {r5, F(3)}, {F(4), F(0)}}));
    QuasiData<F> t = quasi_analyze(tri);
    CHECK(t.quasirational);
    CHECK(t.D_j == std::vector<Integer>{1, 1, 1});
}

TEST_CASE("necklace polygons") {
    Model<Q> m(random_nice_polygon(5, 3));
    for (long j = 1; j <= 5; ++j) {
        auto s0 = necklace(m.sys, m.poly, j, 0);
        CHECK(s0.P == m.poly.vertices());
        CHECK(s0.center == m.sys.vertex(m.sys.pair(j).w));
        CHECK(m.sys.pair(j).relative_offset(s0.center) == make_rational(1, 2));
        for (std::size_t i = 0; i < s0.Q.size(); ++i) CHECK(s0.Q[i] == reflect_through(s0.center, m.poly.vertex(i)));
        auto s3 = necklace(m.sys, m.poly, j, 3);
        CHECK(abs_value(signed_area(s3.P)) == m.poly.area());
        CHECK(abs_value(signed_area(s3.Q)) == m.poly.area());
        CHECK(sign(signed_area(s3.Q)) < 0);
        // N runs along e_j and spans Sigma_{j+1}.
        const Edge<Q>& e = m.poly.edge(m.sys.pair(j).edge);
        CHECK(sign(cross(s3.N, m.poly.vertex(e.head) - m.poly.vertex(e.tail))) == 0);
        CHECK(sign(dot(s3.N, m.poly.vertex(e.head) - m.poly.vertex(e.tail))) > 0);
        CHECK(abs_value(Q(m.sys.pair(j + 1).relative_offset(P{0, 0} + s3.N) - m.sys.pair(j + 1).relative_offset(P{0, 0}))) == 1);
    }
}

TEST_CASE("psi permutes the necklaces") {
    for (int n = 3; n <= 6; ++n) {
        Model<Q> m(random_nice_polygon(n, 12));
        for (long mult = 1; mult <= 3; ++mult) {
            CheckReport r = check_necklace_invariance(m, mult, 40, 5);
            INFO("n=" << n << " m=" << mult);
            CHECK(r.passed());
            CHECK(r.valid > 0);
        }
        CHECK_FALSE(control_bumped_exponent(m, 40, 5).passed());
    }
}

TEST_CASE("the ordinary-spoke sign flips the strip end") {
    // Exact vector identity behind the check: the image of the P-copy of R_j^{M}
    // is P + e M' N_{j+1} with M' = M A_j / A_{j+1}.
    Model<Q> m(random_nice_polygon(5, 8));
    QuasiData<Q> q = quasi_analyze(m.sys);
    for (long j = 1; j <= 5; ++j) {
        Integer M = q.D_j[static_cast<std::size_t>(j - 1)];
        auto here = necklace(m.sys, m.poly, j, M);
        auto pts = sample_polygon(here.P, 5, Rng(j));
        Integer M2 = q.D_j[static_cast<std::size_t>(wrap_index(j + 1, 5) - 1)];
        auto there = necklace(m.sys, m.poly, j + 1, necklace_sign(m.sys, j + 1) * M2);
        for (const auto& p : pts) {
            IndexedPoint<Q> x = necklace_step(m.sys, p, j);
            CHECK(x.k == wrap_index(j + 1, 5));
            CHECK(necklace_part(there, x.p) == NecklacePart::P);
            // The offset inside the copy is preserved: psi acts on R_j^M as a translation.
            Vec2<Q> d = x.p - p;
            CHECK(d == (there.P[0] - here.P[0]));
        }
    }
}

TEST_CASE("between the necklaces") {
    Model<Q> m(triangle());
    auto base = necklace(m.sys, m.poly, 1, 0);
    auto out = necklace(m.sys, m.poly, 1, 2);
    auto band = necklace_band(m.sys, base, out);
    auto pts = sample_polygon(band.vertices(), 200, Rng(2));
    long inside = 0;
    for (const auto& p : pts)
        if (between_necklaces(m.sys, base, out, p)) {
            ++inside;
            CHECK(necklace_part(base, p) == NecklacePart::none);
            CHECK(necklace_part(out, p) == NecklacePart::none);
            CHECK(m.sys.pair(1).locate(p) == Location::interior);
        }
    CHECK(inside > 0);
    CHECK_FALSE(between_necklaces(m.sys, base, out, P{0, 100}));
}

TEST_CASE("certificates") {
    Model<Q> m(triangle());
    Certificate<Q> c = find_certificate(m, P{make_rational(21, 2), make_rational(1, 3)});
    CHECK(c.bounded);
    CHECK(c.m >= 1);
    auto rec = orbit(m, P{make_rational(21, 2), make_rational(1, 3)}, OrbitMap::psi, 5000);
    for (const auto& e : rec.entries) CHECK_FALSE(c.radius < norm_inf(e.p));
    CHECK_THROWS_AS(boundedness_certificate(m, P{1000, 3}, 1), AnnulusNotFound);
    // Monotone in m.
    for (int n = 3; n <= 6; ++n) {
        Model<Q> r(random_nice_polygon(n, 4));
        QuasiData<Q> q = quasi_analyze(r.sys);
        Q prev{0};
        for (long k = 1; k <= 4; ++k) {
            Q rad = certified_radius(r, q, k);
            CHECK_FALSE(rad < prev);
            prev = rad;
        }
    }
}
