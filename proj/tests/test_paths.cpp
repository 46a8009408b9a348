#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pinwheel/model.hpp"
#include "pinwheel/random_polygon.hpp"

using namespace pinwheel;
using Q = Rational;
using P = Point2<Q>;

namespace {

NicePolygon<Q> triangle() { return NicePolygon<Q>::from_vertices({{0, 0}, {1, 3}, {4, 0}}); }

}  // namespace

TEST_CASE("triangle: three single-spoke paths and six unbounded tiles") {
    Model<Q> m(triangle());
    CHECK(m.paths.paths().size() == 3);
    for (const auto& p : m.paths.paths()) CHECK(p.length() == 1);
    CHECK(m.paths.labels().size() == 6);
    CHECK(m.unlinked == 0);
    CHECK(m.paths.duplicates() == 0);
    const auto& path = m.path_of(m.tile_of({8, -2}));
    CHECK(path.name(3) == "1->1");
    CHECK(displacement(path) == Vec2<Q>{2, 6});
}

TEST_CASE("paths match tiles and translations on random polygons") {
    for (int n = 3; n <= 8; ++n)
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            Model<Q> m(random_nice_polygon(n, seed));
            CHECK(m.unlinked == 0);
            // Exhaustive oracle: every nonempty tile label is covered and nothing else.
            std::vector<TileLabel> tiles;
            for (const auto& t : m.forward.tiles()) tiles.push_back(t.label);
            std::sort(tiles.begin(), tiles.end());
            CHECK(tiles == m.paths.labels());
            for (const auto& p : m.paths.paths()) {
                CHECK(p.length() % 2 == 1);
                CHECK(p.b - p.a < n);
                CHECK(p.W.size() == static_cast<std::size_t>(p.b - p.a + 1));
                CHECK(p.involves(p.a));
                CHECK(p.involves(p.b));
                // The displacement is the tile's translation 2(w - v).
                CHECK(displacement(p) == Q(2) * (m.sys.vertex(p.w) - m.sys.vertex(p.v)));
                for (long i = p.a; i <= p.b; ++i) {
                    const Vec2<Q>& w = p.W_at(i);
                    if (!p.involves(i)) {
                        CHECK(w.is_zero());
                        CHECK(m.sys.spoke(i).special);
                        continue;
                    }
                    const Vec2<Q>& V = m.sys.pair(i).V;
                    CHECK((Q(2) * w == V || Q(2) * w == -V));
                }
                auto apex = apex_sequence(m.sys, p);
                CHECK(apex.front() == m.sys.vertex(p.v));
                CHECK(apex.back() == m.sys.vertex(p.v) + displacement(p));
            }
        }
}

TEST_CASE("index checks on partial sums") {
    Model<Q> m(random_nice_polygon(6, 2));
    const auto& p = m.paths.paths().front();
    CHECK(partial_displacement(p, p.a - 1).is_zero());
    CHECK_THROWS_AS(partial_displacement(p, p.b + 1), IndexOutOfRange);
    CHECK_THROWS_AS(tile_translate(p, m.forward.tiles().front().region, p.a - 1), IndexOutOfRange);
    CHECK_THROWS_AS(m.paths.path_for_label(0, 0), NotAdmissiblePair);
}

TEST_CASE("quadratic polygon") {
    using F = QuadExt;
    F r5(0, 1, 5);
    Model<F> m(NicePolygon<F>::from_vertices({{F(0), F(0)}, {r5, F(3)}, {F(4), F(0)}}));
    CHECK(m.paths.paths().size() == 3);
    CHECK(m.forward.unbounded_count() == 6);
    CHECK(m.unlinked == 0);
}
