#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pinwheel/svg.hpp"

#include <regex>

using namespace pinwheel;
using Q = Rational;
using P = Point2<Q>;

namespace {

NicePolygon<Q> triangle() { return NicePolygon<Q>::from_vertices({{0, 0}, {1, 3}, {4, 0}}); }

long count(const std::string& s, const std::string& needle) {
    long c = 0;
    for (auto i = s.find(needle); i != std::string::npos; i = s.find(needle, i + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(svg_number(0.5) == "0.5");
    CHECK(svg_number(-0.0) == "0");
    CHECK(svg_number(1.0 / 3.0) == "0.333333333333");
    CHECK(svg_number(1e6) == "1000000");
}

TEST_CASE("a lone triangle") {
    Scene<Q> s;
    CHECK_THROWS_AS(s.render(), EmptyScene);
    s.add_polygon("polygon", triangle().vertices(), {});
    std::string svg = s.render(400);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count(svg, "<path ") == 1);
    CHECK(svg.find("id=\"polygon\"") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    // Viewport: the farthest coordinate is 4.
    Box<Q> b = s.effective_viewport();
    CHECK(b.xmax == 4);
    CHECK(b.xmin == -4);
}

TEST_CASE("forward partition of a pentagon") {
    Model<Q> m(NicePolygon<Q>::from_vertices({{0, 0}, {-1, 3}, {2, 5}, {5, 3}, {4, -1}}));
    Scene<Q> s = partition_scene(m);
    std::string svg = s.render();
    // One filled path per tile plus the polygon.
    CHECK(count(svg, "<path ") == static_cast<long>(m.forward.tiles().size()) + 1);
    for (const auto& t : m.forward.tiles())
        CHECK(svg.find("id=\"tile-" + std::to_string(t.label.v + 1) + "-" + std::to_string(t.label.w + 1) + "\"") !=
              std::string::npos);
    // Unbounded tiles are cut off at the viewport: all coordinates within [0, 800].
    std::regex path_data(R"re( d="([^"]*)")re"), num(R"re(-?[0-9.]+(e[-+]?[0-9]+)?)re");
    long coords = 0;
    for (std::sregex_iterator p(svg.begin(), svg.end(), path_data), end; p != end; ++p) {
        std::string d = (*p)[1].str();
        for (std::sregex_iterator it(d.begin(), d.end(), num); it != end; ++it) {
            double x = std::stod(it->str());
            ++coords;
            CHECK(x >= 0);
            CHECK(x <= 800);
        }
    }
    CHECK(coords > 0);
    CHECK(svg == partition_scene(m).render());
}

TEST_CASE("orbit traces and necklaces") {
    Model<Q> m(triangle());
    auto rec = orbit(m, P{8, -2}, OrbitMap::psi, 6);
    std::string svg = orbit_scene(m, rec).render();
    CHECK(count(svg, "<circle ") == 7);
    CHECK(svg.find("<polyline") != std::string::npos);

    Scene<Q> s;
    s.add_necklace(necklace(m.sys, m.poly, 1, 2));
    s.add_strip(m.sys.pair(1), {"#eeeeee", "#999999", 0.5, 0.5});
    std::string ns = s.render();
    CHECK(ns.find("id=\"necklace-1-2-P\"") != std::string::npos);
    CHECK(ns.find("id=\"necklace-1-2-Q\"") != std::string::npos);
    CHECK(ns.find("id=\"strip-1\"") != std::string::npos);
    CHECK(ns == s.render());
}

TEST_CASE("explicit viewport drops what lies outside") {
    Scene<Q> s;
    s.add_polygon("far", {{100, 101}, {101, 100}, {100, 100}}, {});
    s.add_polygon("near", triangle().vertices(), {});
    s.set_viewport(Box<Q>::centered(Q(10)));
    std::string svg = s.render();
    CHECK(svg.find("id=\"far\"") == std::string::npos);
    CHECK(svg.find("id=\"near\"") != std::string::npos);
}

TEST_CASE("quadratic coordinates render") {
    using F = QuadExt;
    F r5(0, 1, 5);
    Model<F> m(NicePolygon<F>::from_vertices({{F(0), F(0)}, {r5, F(3)}, {F(4), F(0)}}));
    std::string svg = partition_scene(m).render();
    CHECK(count(svg, "<path ") == 7);
}
