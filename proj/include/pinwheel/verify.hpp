#pragma once

// Sampled and exact checks of the structural statements about psi and the
// pinwheel map, with replayable violation reports.

#include "dynamics.hpp"
#include "random_polygon.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace pinwheel {

struct Violation {
    std::size_t index;  // sample index within the check, for replay with the seed
    std::string input, expected, actual;
};

struct CheckReport {
    CheckReport() = default;
    CheckReport(std::string n, std::string poly, std::uint64_t s) : name(std::move(n)), polygon(std::move(poly)), seed(s) {}

    std::string name;
    std::string polygon;
    std::uint64_t seed = 0;
    long attempted = 0, valid = 0, wall_skipped = 0;
    std::vector<Violation> violations;
    std::vector<std::pair<std::string, long>> facts;  // named counts, e.g. paths / tiles
    double runtime_ms = 0;

    // More than 1% of samples on walls means the sampler is not generic.
    bool wall_rate_ok() const { return wall_skipped * 100 <= attempted; }
    bool passed() const { return violations.empty() && wall_rate_ok(); }

    void violate(std::size_t i, std::string in, std::string exp, std::string act) {
        if (violations.size() < 50) violations.push_back({i, std::move(in), std::move(exp), std::move(act)});
        else ++overflow;
    }
    long violation_count() const { return static_cast<long>(violations.size()) + overflow; }
    long overflow = 0;
};

template <ordered_field F>
std::string str(const F& x) {
    if constexpr (std::is_same_v<F, Rational>) {
        return x.get_str();
    } else {
        std::string s = x.a().get_str();
        if (!x.is_rational()) s += (sign(x.b()) < 0 ? "-" : "+") + Rational(abs(x.b())).get_str() + "*sqrt(" + std::to_string(x.d()) + ")";
        return s;
    }
}

template <ordered_field F>
std::string str(const Point2<F>& p) { return "(" + str(p.x) + ", " + str(p.y) + ")"; }

template <ordered_field F>
std::string str(const Vec2<F>& v) { return "<" + str(v.x) + ", " + str(v.y) + ">"; }

template <ordered_field F>
std::string str(const NicePolygon<F>& poly) {
    std::string s;
    for (const auto& p : poly.vertices()) s += (s.empty() ? "" : " ") + str(p);
    return s;
}

inline std::string str(const TileLabel& l) {
    return "(" + std::to_string(l.v + 1) + ", " + std::to_string(l.w + 1) + ")";
}

inline bool is_wall_error(const std::exception& e) {
    return dynamic_cast<const OnStripBoundary*>(&e) || dynamic_cast<const UndefinedPoint*>(&e);
}

// Sample points inside one tile: lattice barycentric points for bounded tiles,
// and points of the tile cut off at three radii 1, 4, 16 times a base radius
// for unbounded ones.
template <ordered_field F>
std::vector<Point2<F>> tile_samples(const Model<F>& m, const Tile<F>& t, std::size_t count, Rng rng) {
    if (t.bounded) return sample_polygon(t.region.vertices(), count, rng);
    F base = F(F(2) * max_value(t.region.extent(), norm_inf(Point2<F>{m.poly.bounds().xmax, m.poly.bounds().ymax})) +
               F(2) * m.poly.diameter() + F(1));
    std::vector<Point2<F>> out;
    F r = base;
    for (int ring = 0; ring < 3; ++ring, r = F(r * F(4))) {
        std::size_t c = count / 3 + (static_cast<std::size_t>(ring) < count % 3 ? 1 : 0);
        if (c == 0) continue;
        auto poly = t.region.clipped(Box<F>::centered(r));
        auto pts = sample_polygon(poly, c, rng.split(static_cast<std::uint64_t>(ring)));
        out.insert(out.end(), pts.begin(), pts.end());
    }
    return out;
}

// Spread `total` samples over the tiles, at least `floor_per_tile` each.
template <ordered_field F>
std::vector<std::pair<std::size_t, Point2<F>>> spread_samples(const Model<F>& m, std::size_t total,
                                                               std::size_t floor_per_tile, std::uint64_t seed) {
    const auto& tiles = m.forward.tiles();
    std::size_t per = std::max(floor_per_tile, (total + tiles.size() - 1) / tiles.size());
    std::vector<std::pair<std::size_t, Point2<F>>> out;
    Rng rng(seed, 0x7117);
    for (std::size_t i = 0; i < tiles.size(); ++i)
        for (auto& p : tile_samples(m, tiles[i], per, rng.split(i))) out.emplace_back(i, std::move(p));
    return out;
}

namespace detail {
struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};
}  // namespace detail

template <ordered_field F>
CheckReport check_pinwheel_theorem(const Model<F>& m, std::size_t samples, std::uint64_t seed) {
    detail::Timer timer;
    CheckReport rep{"pinwheel_theorem", str(m.poly), seed};
    const long bound = 3 * m.n();
    long kmax = 0;
    auto pts = spread_samples(m, samples, 3, seed);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& [ti, p] = pts[i];
        ++rep.attempted;
        try {
            TheoremStep<F> r = pinwheel_theorem_step(m, p, bound);
            ++rep.valid;
            kmax = std::max(kmax, r.k_used);
        } catch (const BudgetExceeded&) {
            ++rep.valid;
            rep.violate(i, str(p), "k <= " + std::to_string(bound), "not reached");
        } catch (const std::exception& e) {
            if (!is_wall_error(e)) throw;
            ++rep.wall_skipped;
        }
    }
    rep.facts = {{"k_max", kmax}, {"k_bound", bound}};
    rep.runtime_ms = timer.ms();
    return rep;
}

// Largest sup norm of anything where the far-field picture can fail: bounded
// tiles, finite tile corners, and pairwise strip intersections.
template <ordered_field F>
F near_field_radius(const Model<F>& m) {
    F g = norm_inf(Point2<F>{m.poly.diameter(), m.poly.diameter()});
    for (const auto& t : m.forward.tiles()) g = max_value(g, t.region.extent());
    for (long i = 1; i <= m.n(); ++i)
        for (long j = i + 1; j <= m.n(); ++j) {
            ConvexRegion<F> r = region_intersect(m.sys.pair(i).strip(), m.sys.pair(j).strip());
            g = max_value(g, r.extent());
        }
    return g;
}

template <ordered_field F>
CheckReport check_far_field(const Model<F>& m, std::optional<F> radius, std::size_t samples, std::uint64_t seed) {
    detail::Timer timer;
    CheckReport rep{"far_field", str(m.poly), seed};
    F guard = near_field_radius(m);
    F R = radius ? *radius : far_radius(m.sys, m.poly);
    long premise_raised = 0;
    if (!(guard < R)) {
        R = F(F(2) * guard);
        premise_raised = 1;
    }
    Rng rng(seed, 0xfa4);
    long ones = 0, twos = 0, premise_skips = 0;
    constexpr std::uint64_t lattice = 1u << 16;
    for (std::size_t i = 0; i < samples; ++i) {
        // A point on the square of radius R (1 + 3u), at a lattice position.
        F rad = F(R * F(make_rational(Integer(static_cast<unsigned long>(lattice + 3 * rng.below(lattice))),
                                      Integer(static_cast<unsigned long>(lattice)))));
        F t = F(make_rational(Integer(static_cast<unsigned long>(2 * rng.below(lattice))),
                              Integer(static_cast<unsigned long>(lattice))) - 1);
        Point2<F> p;
        switch (rng.below(4)) {
            case 0: p = {rad, F(t * rad)}; break;
            case 1: p = {F(-rad), F(t * rad)}; break;
            case 2: p = {F(t * rad), rad}; break;
            default: p = {F(t * rad), F(-rad)}; break;
        }
        ++rep.attempted;
        try {
            TheoremStep<F> r = pinwheel_theorem_step(m, p, 3 * m.n());
            if (!(guard < norm_inf(r.q))) {
                ++premise_skips;
                ++rep.valid;
                continue;
            }
            bool in_strip = false;
            for (const auto& pr : m.sys.pairs())
                if (pr.locate(r.q) != Location::outside) in_strip = true;
            long expect = in_strip ? 2 : 1;
            ++rep.valid;
            (r.k_used == 1 ? ones : twos) += (r.k_used <= 2);
            if (r.k_used != expect)
                rep.violate(i, str(p), "k = " + std::to_string(expect), "k = " + std::to_string(r.k_used));
        } catch (const BudgetExceeded&) {
            ++rep.valid;
            rep.violate(i, str(p), "k in {1, 2}", "k > 3n");
        } catch (const std::exception& e) {
            if (!is_wall_error(e)) throw;
            ++rep.wall_skipped;
        }
    }
    rep.facts = {{"k_equals_1", ones}, {"k_equals_2", twos}, {"premise_skips", premise_skips},
                 {"radius_raised", premise_raised}};
    rep.runtime_ms = timer.ms();
    return rep;
}

template <ordered_field F>
CheckReport check_structure3(const Model<F>& m, std::size_t samples, std::uint64_t seed) {
    detail::Timer timer;
    CheckReport rep{"structure3", str(m.poly), seed};
    const long n = m.n();
    long longest = 0;
    auto pts = spread_samples(m, samples, 3, seed);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& [ti, p] = pts[i];
        const Tile<F>& t = m.forward.tiles()[ti];
        ++rep.attempted;
        try {
            Point2<F> q = square_map(m.poly, p).q;
            const Tile<F>& u = m.tile_of(q);
            long b = t.path_b, c = lift_index(b, u.path_a, n);
            ++rep.valid;
            for (long j = b; j < c; ++j)
                if (m.sys.pair(j).locate(q) == Location::outside)
                    rep.violate(i, str(p), "psi(p) in strip " + std::to_string(wrap_index(j, n)), str(q));
            // The index walks from b - 1 to c - 1 while the point stays put.
            IndexedPoint<F> x{q, wrap_index(b - 1, n)}, target{q, wrap_index(c - 1, n)};
            long k = 0;
            while (!(x == target) && k <= n) {
                x = pinwheel_step(m.sys, x);
                ++k;
            }
            longest = std::max(longest, k);
            if (!(x == target))
                rep.violate(i, str(p), "index shift to " + std::to_string(target.k) + " within n steps",
                            "reached " + str(x.p) + " index " + std::to_string(x.k));
        } catch (const std::exception& e) {
            if (!is_wall_error(e)) throw;
            ++rep.wall_skipped;
        }
    }
    rep.facts = {{"max_shift_steps", longest}};
    rep.runtime_ms = timer.ms();
    return rep;
}

// The path of a tile, reversed for the second unbounded tile of a spoke.
template <ordered_field F>
AdmissiblePath<F> oriented_path(const Model<F>& m, const Tile<F>& t) {
    AdmissiblePath<F> p = m.path_of(t);
    if (p.v != t.label.v) {
        std::swap(p.v, p.w);
        for (auto& w : p.W) w = -w;
        for (std::size_t i = 0; i < p.flipped.size(); ++i) p.flipped[i] = !p.flipped[i];
    }
    return p;
}

template <ordered_field F>
CheckReport check_pin1_pin2_move(const Model<F>& m, std::size_t per_tile, std::uint64_t seed) {
    detail::Timer timer;
    CheckReport rep{"pin1_pin2_move", str(m.poly), seed};
    Rng rng(seed, 0x9112);
    std::size_t idx = 0;
    long bounded = 0;
    for (std::size_t ti = 0; ti < m.forward.tiles().size(); ++ti) {
        const Tile<F>& t = m.forward.tiles()[ti];
        AdmissiblePath<F> path = oriented_path(m, t);
        Vec2<F> disp = displacement(path);
        // move: exact per tile.
        if (!(disp == t.translation))
            rep.violate(idx, "tile " + str(t.label), "displacement " + str(t.translation), str(disp));
        if (t.bounded) {
            ++bounded;
            // pin1 on the exact tile vertices.
            for (long k = path.a; k < path.b; ++k) {
                ConvexRegion<F> moved = tile_translate(path, t.region, k);
                for (const auto& v : moved.vertices())
                    if (m.sys.pair(k).locate(v) == Location::outside)
                        rep.violate(idx, "tile " + str(t.label) + " vertex " + str(v),
                                    "T(a->b;" + std::to_string(k) + ") in strip " + std::to_string(wrap_index(k, m.n())),
                                    "outside");
            }
        }
        auto pts = tile_samples(m, t, per_tile, rng.split(ti));
        for (const auto& p : pts) {
            ++idx;
            ++rep.attempted;
            try {
                Point2<F> q = square_map(m.poly, p).q;
                ++rep.valid;
                if (!(q - p == disp)) rep.violate(idx, str(p), "psi(p) - p = " + str(disp), str(Vec2<F>(q - p)));
                if (!t.bounded) continue;
                for (long k = path.a; k < path.b; ++k) {
                    Point2<F> pk = p + partial_displacement(path, k);
                    if (m.sys.pair(k).locate(pk) == Location::outside)
                        rep.violate(idx, str(p), "p_" + std::to_string(k) + " in strip", str(pk));
                }
                Point2<F> pb1 = p + partial_displacement(path, path.b - 1);
                Point2<F> expect = pb1 + F(2) * path.W_at(path.b);
                Point2<F> got = strip_map(m.sys.pair(path.b), pb1);
                if (!(got == expect)) rep.violate(idx, str(p), "mu_b = " + str(expect), str(got));
            } catch (const std::exception& e) {
                if (!is_wall_error(e)) throw;
                ++rep.wall_skipped;
            }
        }
    }
    rep.facts = {{"bounded_tiles", bounded}};
    rep.runtime_ms = timer.ms();
    return rep;
}

// For each start spoke, the apex points of its longest path lie in the closed strips.
template <ordered_field F>
CheckReport check_apex(const Model<F>& m) {
    detail::Timer timer;
    CheckReport rep{"apex", str(m.poly), 0};
    for (long a = 1; a <= m.n(); ++a) {
        const AdmissiblePath<F>* best = nullptr;
        for (const auto& p : m.paths.paths())
            if (p.a == a && (!best || p.b > best->b)) best = &p;
        if (!best) {
            rep.violate(static_cast<std::size_t>(a), "spoke " + std::to_string(a), "a path", "none");
            continue;
        }
        auto apex = apex_sequence(m.sys, *best);
        for (long k = best->a; k <= best->b; ++k) {
            const Point2<F>& pk = apex[static_cast<std::size_t>(k - best->a + 1)];
            ++rep.attempted;
            ++rep.valid;
            if (m.sys.pair(k).locate(pk) == Location::outside)
                rep.violate(static_cast<std::size_t>(a), "path " + best->name(m.n()) + " k=" + std::to_string(k),
                            "in closed strip " + std::to_string(wrap_index(k, m.n())), str(pk));
        }
    }
    rep.runtime_ms = timer.ms();
    return rep;
}

template <ordered_field F>
CheckReport check_structure1(const Model<F>& m) {
    detail::Timer timer;
    CheckReport rep{"structure1", str(m.poly), 0};
    std::vector<TileLabel> tiles;
    for (const auto& t : m.forward.tiles()) tiles.push_back(t.label);
    std::sort(tiles.begin(), tiles.end());
    std::vector<TileLabel> labels = m.paths.labels();
    if (tiles != labels) {
        std::string a, b;
        for (const auto& l : tiles) a += str(l);
        for (const auto& l : labels) b += str(l);
        rep.violate(0, "label sets", a, b);
    }
    if (m.paths.duplicates() != 0) rep.violate(0, "paths", "distinct endpoint pairs", "duplicates");
    if (m.forward.unbounded_count() != static_cast<std::size_t>(2 * m.n()))
        rep.violate(0, "unbounded tiles", std::to_string(2 * m.n()), std::to_string(m.forward.unbounded_count()));
    std::size_t idx = 0;
    for (const auto& p : m.paths.paths()) {
        ++idx;
        ++rep.attempted;
        ++rep.valid;
        std::string name = p.name(m.n());
        Vec2<F> tele = F(2) * (m.sys.vertex(p.w) - m.sys.vertex(p.v));
        if (!(displacement(p) == tele)) rep.violate(idx, name, "displacement 2(w - v)", str(displacement(p)));
        if (p.length() % 2 == 0) rep.violate(idx, name, "odd length", std::to_string(p.length()));
        if (p.b - p.a >= m.n()) rep.violate(idx, name, "no wrap", "span " + std::to_string(p.b - p.a));
        for (long i = p.a; i <= p.b; ++i) {
            bool inv = p.involves(i);
            bool interior = i != p.a && i != p.b;
            if (!inv && !m.sys.spoke(i).special) rep.violate(idx, name, "skipped spoke special", std::to_string(i));
            if (inv && interior && m.sys.spoke(i).special)
                rep.violate(idx, name, "interior spoke ordinary", std::to_string(i));
        }
        // Traversal agrees with the spoke orientation except possibly on the
        // last spoke, where it flips exactly for special spokes.
        if (p.length() >= 3) {
            for (std::size_t s = 0; s + 1 < p.length(); ++s)
                if (p.flipped[s]) rep.violate(idx, name, "orientation kept", "flipped at " + std::to_string(p.involved[s]));
            bool last_special = m.sys.spoke(p.b).special;
            if (p.flipped.back() != last_special)
                rep.violate(idx, name, last_special ? "last spoke flipped" : "last spoke kept", "mismatch");
            // Dropping the last two involved spokes leaves a path with the same start.
            AdmissiblePath<F> pre = p;
            pre.involved.resize(p.length() - 2);
            std::size_t w = p.v;
            for (long i : pre.involved) {
                const Spoke& s = m.sys.spoke(i);
                w = s.tail == w ? s.head : s.tail;
            }
            if (!m.paths.has_label(p.v, w)) rep.violate(idx, name, "prefix is admissible", "missing");
        }
        if (!m.forward.find({p.v, p.w})) rep.violate(idx, name, "tile with this label", "none");
    }
    rep.facts = {{"paths", static_cast<long>(m.paths.paths().size())},
                 {"unbounded_tiles", static_cast<long>(m.forward.unbounded_count())},
                 {"bounded_tiles", static_cast<long>(m.forward.bounded_count())}};
    rep.runtime_ms = timer.ms();
    return rep;
}

// Reflected polygon: find the index shift s with R(Sigma_k) = Sigma_{s-k}, then
// require R(S_k) = S_{s+1-k} as segments, with matching special flags. The
// vectors satisfy R(V_k) = -V_{s+1-k} on ordinary spokes and +V_{s+1-k} on
// special ones, which is R(W_k) = -W_{s+1-k} for the traversal vectors.
template <ordered_field F>
long conjugate_shift(const PinwheelSystem<F>& sys, const PinwheelSystem<F>& bar, std::string* why = nullptr) {
    const long n = sys.size();
    auto reflect_strip = [](const PinwheelPair<F>& pr) {
        Line<F> L(pr.L.a(), F(-pr.L.b()), pr.L.c());
        F sgn_fix = sign(pr.L.a()) != 0 ? F(1) : F(-1);
        return slab(L, F(pr.width_offset * sgn_fix));
    };
    auto R = [](const Point2<F>& p) { return Point2<F>{p.x, F(-p.y)}; };
    for (long s = 0; s < n; ++s) {
        bool ok = true;
        for (long k = 1; k <= n && ok; ++k) ok = reflect_strip(sys.pair(k)) == bar.pair(s - k).strip();
        if (!ok) continue;
        for (long k = 1; k <= n; ++k) {
            const Spoke& a = sys.spoke(k);
            const Spoke& b = bar.spoke(s + 1 - k);
            Point2<F> at = R(sys.vertex(a.tail)), ah = R(sys.vertex(a.head));
            Point2<F> bt = bar.vertex(b.tail), bh = bar.vertex(b.head);
            std::string at_k = " at k = " + std::to_string(k) + " with shift " + std::to_string(s);
            if (!((at == bt && ah == bh) || (at == bh && ah == bt))) {
                if (why) *why = "reflected spoke differs" + at_k;
                return -1;
            }
            if (a.special != b.special) {
                if (why) *why = "special flag differs" + at_k;
                return -1;
            }
            Vec2<F> rv{sys.pair(k).V.x, F(-sys.pair(k).V.y)};
            Vec2<F> want = a.special ? bar.pair(s + 1 - k).V : Vec2<F>(-bar.pair(s + 1 - k).V);
            if (!(rv == want)) {
                if (why) *why = "reflected V has the wrong sign" + at_k;
                return -1;
            }
        }
        return s;
    }
    if (why) *why = "no index shift matches the reflected strips";
    return -1;
}

template <ordered_field F>
CheckReport check_exit_reversal_conjugate(const Model<F>& m, std::size_t samples, std::uint64_t seed) {
    detail::Timer timer;
    CheckReport rep{"exit_reversal_conjugate", str(m.poly), seed};
    std::size_t idx = 0;
    // Exactly: psi(T) misses T iff T is bounded.
    for (const auto& t : m.forward.tiles()) {
        ++idx;
        bool overlap = !region_intersect(t.region, t.region.translated(t.translation)).empty();
        if (overlap == t.bounded)
            rep.violate(idx, "tile " + str(t.label), t.bounded ? "psi(T) disjoint from T" : "psi(T) meets T",
                        overlap ? "overlap" : "disjoint");
    }
    // Reversal: psi(T+(v, w)) lands in the backward tile (w, v).
    Partition<F> back = backward_partition(m.poly);
    auto pts = spread_samples(m, samples, 2, seed ^ 0x5eedULL);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& [ti, p] = pts[i];
        const Tile<F>& t = m.forward.tiles()[ti];
        ++rep.attempted;
        try {
            Point2<F> q = square_map(m.poly, p).q;
            SquareStep<F> b = inverse_square_map(m.poly, q);
            ++rep.valid;
            TileLabel want{t.label.w, t.label.v};
            const Tile<F>* bt = back.find(want);
            if (!b.label || !(*b.label == want) || !(b.q == p) || !bt || bt->region.locate(q) != Location::interior)
                rep.violate(i, str(p), "psi(p) in backward tile " + str(want),
                            b.label ? str(*b.label) : std::string("none"));
        } catch (const std::exception& e) {
            if (!is_wall_error(e)) throw;
            ++rep.wall_skipped;
        }
    }
    // Conjugate polygon.
    std::string why;
    NicePolygon<F> bar = reflect_x(m.poly);
    long s = conjugate_shift(m.sys, PinwheelSystem<F>(bar), &why);
    if (s < 0) rep.violate(0, "reflected polygon", "strip and spoke index relations", why);
    rep.facts = {{"conjugate_shift", s}, {"backward_tiles", static_cast<long>(back.tiles().size())}};
    rep.runtime_ms = timer.ms();
    return rep;
}

// Harness self-tests: each corrupts a copy of the model and must produce
// violations in the check it targets.
template <ordered_field F>
CheckReport control_halved_strip(const Model<F>& m, std::size_t samples, std::uint64_t seed, long j = 1) {
    Model<F> bad = m;
    auto& pr = bad.sys.mutable_pair(j);
    pr.width_offset = F(pr.width_offset / F(2));
    pr.L_prime = Line<F>(pr.L.a(), pr.L.b(), F(pr.L.c() + pr.width_offset));
    CheckReport r = check_pinwheel_theorem(bad, samples, seed);
    r.name = "control_halved_strip";
    return r;
}

template <ordered_field F>
CheckReport control_flipped_last_step(const Model<F>& m, std::size_t per_tile, std::uint64_t seed) {
    Model<F> bad = m;
    for (auto& p : bad.paths.paths()) p.W.back() = -p.W.back();
    CheckReport r = check_pin1_pin2_move(bad, per_tile, seed);
    r.name = "control_flipped_last_step";
    return r;
}

enum class Profile { quick, full };

struct SuiteOptions {
    Profile profile = Profile::quick;
    std::uint64_t seed = 1;
    std::size_t samples = 0;  // 0: profile default
};

inline std::size_t default_samples(Profile p) { return p == Profile::quick ? 60 : 240; }

// Checks run concurrently over the shared read-only model; the report order is fixed.
template <ordered_field F>
std::vector<CheckReport> run_all(const Model<F>& m, const SuiteOptions& opt) {
    std::size_t s = opt.samples ? opt.samples : default_samples(opt.profile);
    std::size_t per_tile = opt.profile == Profile::quick ? 8 : 20;
    std::vector<std::future<CheckReport>> jobs;
    auto launch = [&](auto f) { jobs.push_back(std::async(std::launch::async, f)); };
    launch([&] { return check_structure1(m); });
    launch([&] { return check_pinwheel_theorem(m, s, opt.seed); });
    launch([&] { return check_far_field<F>(m, std::nullopt, s, opt.seed); });
    launch([&] { return check_structure3(m, s, opt.seed); });
    launch([&] { return check_pin1_pin2_move(m, per_tile, opt.seed); });
    launch([&] { return check_apex(m); });
    launch([&] { return check_exit_reversal_conjugate(m, s, opt.seed); });
    std::vector<CheckReport> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

inline bool all_passed(const std::vector<CheckReport>& rs) {
    for (const auto& r : rs)
        if (!r.passed()) return false;
    return true;
}

}  // namespace pinwheel
