#pragma once

// Quasirational polygons: the parallelogram areas A_j, the integers D_j, the
// necklace polygons R_j^m, and the invariant annuli they bound.

#include "verify.hpp"

#include <limits>

namespace pinwheel {

struct NotQuasirational : std::runtime_error {
    NotQuasirational() : std::runtime_error("polygon is not quasirational") {}
};

struct AnnulusNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_rational_value(const Rational&) { return true; }
inline bool is_rational_value(const QuadExt& x) { return x.is_rational(); }

template <ordered_field F>
struct QuasiData {
    std::vector<F> areas;         // A_j = area(Sigma_j cap Sigma_{j+1}), j = 1..n
    bool quasirational = false;
    std::optional<F> D;           // least positive common multiple of the A_j
    std::vector<Integer> D_j;     // D / A_j
};

// Area of Sigma_i cap Sigma_j from the strip data alone.
template <ordered_field F>
F parallelogram_area(const PinwheelPair<F>& s, const PinwheelPair<F>& t) {
    F det = cross(s.L.normal(), t.L.normal());
    return abs_value(F(s.width_offset * t.width_offset / det));
}

// lcm of numerators over gcd of denominators.
inline Rational rational_lcm(const std::vector<Rational>& xs) {
    Integer num = 1, den = 0;
    for (const auto& x : xs) {
        num = lcm(num, Integer(abs(x.get_num())));
        den = gcd(den, x.get_den());
    }
    return make_rational(num, den);
}

template <ordered_field F>
QuasiData<F> quasi_analyze(const PinwheelSystem<F>& sys) {
    QuasiData<F> q;
    const long n = sys.size();
    for (long j = 1; j <= n; ++j)
        q.areas.push_back(region_area(region_intersect(sys.pair(j).strip(), sys.pair(j + 1).strip())));
    // Rational areas are their own base; otherwise measure against A_1.
    bool rational = true;
    for (const auto& a : q.areas) rational = rational && is_rational_value(a);
    F base = rational ? F(1) : q.areas[0];
    std::vector<Rational> ratios;
    for (const auto& a : q.areas) {
        F r = F(a / base);
        if (!is_rational_value(r)) return q;
        ratios.push_back(to_rational(r));
    }
    q.quasirational = true;
    q.D = F(base * F(rational_lcm(ratios)));
    for (const auto& a : q.areas) {
        Rational dj = to_rational(F(*q.D / a));
        q.D_j.push_back(dj.get_num());
    }
    return q;
}

template <ordered_field F>
struct NecklaceSpec {
    long j = 0;
    Integer m = 0;
    Vec2<F> N;           // along e_j, clockwise, spanning Sigma_{j+1}
    Point2<F> center;    // v_j, the vertex on the centerline of Sigma_j
    std::vector<Point2<F>> P, Q;  // P + m N and (2 v_j - P) + m N, clockwise
};

template <ordered_field F>
Vec2<F> necklace_shift(const PinwheelSystem<F>& sys, const NicePolygon<F>& poly, long j) {
    const Edge<F>& e = poly.edge(sys.pair(j).edge);
    Vec2<F> d = poly.vertex(e.head) - poly.vertex(e.tail);
    const auto& next = sys.pair(j + 1);
    F t = F(abs_value(next.width_offset) / abs_value(dot(next.L.normal(), d)));
    return t * d;
}

template <ordered_field F>
NecklaceSpec<F> necklace(const PinwheelSystem<F>& sys, const NicePolygon<F>& poly, long j, const Integer& m) {
    NecklaceSpec<F> s;
    s.j = wrap_index(j, sys.size());
    s.m = m;
    s.N = necklace_shift(sys, poly, s.j);
    s.center = sys.vertex(sys.pair(s.j).w);
    Vec2<F> shift = F(Rational(m)) * s.N;
    for (const auto& v : poly.vertices()) {
        s.P.push_back(v + shift);
        // Point reflection keeps the clockwise order.
        s.Q.push_back(reflect_through(s.center, v) + shift);
    }
    return s;
}

enum class NecklacePart { none, P, Q };

template <ordered_field F>
NecklacePart necklace_part(const NecklaceSpec<F>& s, const Point2<F>& p) {
    if (ConvexRegion<F>::from_polygon(s.P, true).locate(p) == Location::interior) return NecklacePart::P;
    if (ConvexRegion<F>::from_polygon(s.Q, true).locate(p) == Location::interior) return NecklacePart::Q;
    return NecklacePart::none;
}

namespace detail {
// Range of `tau` over the slice of a convex polygon by {level(p) = c}.
template <ordered_field F>
std::optional<std::pair<F, F>> slice_range(const std::vector<Point2<F>>& poly, const Line<F>& level, const F& c,
                                           const Line<F>& tau, int tau_sign) {
    std::optional<std::pair<F, F>> out;
    auto take = [&](const Point2<F>& x) {
        F t = F(F(tau_sign) * signed_offset(tau, x));
        if (!out) out = std::make_pair(t, t);
        else out = std::make_pair(min_value(out->first, t), max_value(out->second, t));
    };
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % poly.size()];
        F ga = F(signed_offset(level, a) - c), gb = F(signed_offset(level, b) - c);
        if (sign(ga) == 0) take(a);
        if (sign(ga) * sign(gb) < 0) take(a + F(ga / (ga - gb)) * (b - a));
    }
    return out;
}
}  // namespace detail

// p lies strictly inside Sigma_j, outside both necklaces, and on the segment
// parallel to L_j that runs from R_j^0 to R_j^M.
template <ordered_field F>
bool between_necklaces(const PinwheelSystem<F>& sys, const NecklaceSpec<F>& inner, const NecklaceSpec<F>& outer,
                       const Point2<F>& p) {
    const auto& pr = sys.pair(inner.j);
    if (pr.locate(p) != Location::interior) return false;
    const Line<F>& tau = sys.pair(inner.j + 1).L;
    int ts = sign(dot(tau.normal(), inner.N));
    F c = signed_offset(pr.L, p);
    F tp = F(F(ts) * signed_offset(tau, p));
    auto lo_hi = [&](const NecklaceSpec<F>& s) {
        auto a = detail::slice_range(s.P, pr.L, c, tau, ts);
        auto b = detail::slice_range(s.Q, pr.L, c, tau, ts);
        if (a && b) return std::make_pair(min_value(a->first, b->first), max_value(a->second, b->second));
        return a ? *a : *b;
    };
    auto [ilo, ihi] = lo_hi(inner);
    auto [olo, ohi] = lo_hi(outer);
    if (outer.m > inner.m) return ihi < tp && tp < olo;
    return ohi < tp && tp < ilo;
}

// The parallelogram of Sigma_j spanned by both necklaces; contains everything between them.
template <ordered_field F>
ConvexRegion<F> necklace_band(const PinwheelSystem<F>& sys, const NecklaceSpec<F>& inner, const NecklaceSpec<F>& outer) {
    const Line<F>& tau = sys.pair(inner.j + 1).L;
    F lo{}, hi{};
    bool first = true;
    for (const auto* s : {&inner, &outer})
        for (const auto* poly : {&s->P, &s->Q})
            for (const auto& v : *poly) {
                F t = signed_offset(tau, v);
                if (first) lo = hi = t;
                lo = min_value(lo, t);
                hi = max_value(hi, t);
                first = false;
            }
    Line<F> base(tau.a(), tau.b(), F(tau.c() + lo));
    return region_intersect(sys.pair(inner.j).open_strip(), slab(base, F(hi - lo), true));
}

template <ordered_field F>
F necklace_radius(const NecklaceSpec<F>& s) {
    F r{0};
    for (const auto* poly : {&s.P, &s.Q})
        for (const auto& v : *poly) r = max_value(r, norm_inf(v));
    return r;
}

// The return of the pinwheel map from Sigma_j x {j}; lands in Sigma_{j+1} x {j+1}.
template <ordered_field F>
IndexedPoint<F> necklace_step(const PinwheelSystem<F>& sys, const Point2<F>& p, long j) {
    IndexedLanding<F> l = strip_system_return(sys, IndexedPoint<F>{p, wrap_index(j, sys.size())},
                                                 Integer(1) << 256);
    return l.x;
}

inline const char* to_string(NecklacePart p) {
    return p == NecklacePart::P ? "P" : p == NecklacePart::Q ? "Q" : "none";
}

// psi carries R_j^{M} onto R_{j+1}^{e M'} with M' = M A_j / A_{j+1}, where e = -1
// when S_{j+1} is ordinary (the orbit crosses to the other end of the strip)
// and e = +1 when it is special.
template <ordered_field F>
int necklace_sign(const PinwheelSystem<F>& sys, long j) {
    return sys.spoke(j).special ? 1 : -1;
}

// M = m D_j on both ends of every strip. `bump` is added to the predicted
// exponent on the image side, for the harness self-test.
template <ordered_field F>
CheckReport check_necklace_invariance(const Model<F>& m, long mult, std::size_t samples, std::uint64_t seed,
                                      long bump = 0) {
    detail::Timer timer;
    CheckReport rep{"necklace_invariance", str(m.poly), seed};
    if (mult < 1) throw std::invalid_argument("necklace multiple must be at least 1");
    QuasiData<F> q = quasi_analyze(m.sys);
    if (!q.quasirational) throw NotQuasirational();
    const long n = m.n();
    auto exponent = [&](long j) -> Integer {
        return mult * q.D_j[static_cast<std::size_t>(wrap_index(j, n) - 1)];
    };
    Rng rng(seed, 0x9ec1);
    std::size_t idx = 0;
    long between_samples = 0;
    for (int side : {1, -1})
        for (long j = 1; j <= n; ++j) {
            const int next_side = side * necklace_sign(m.sys, j + 1);
            NecklaceSpec<F> here = necklace(m.sys, m.poly, j, side * exponent(j));
            NecklaceSpec<F> there = necklace(m.sys, m.poly, j + 1, next_side * (exponent(j + 1) + bump));
            NecklaceSpec<F> base_here = necklace(m.sys, m.poly, j, 0);
            NecklaceSpec<F> base_there = necklace(m.sys, m.poly, j + 1, 0);
            Rng r = rng.split(static_cast<std::uint64_t>(2 * j + (side > 0)));
            const std::string target = "R_" + std::to_string(there.j) + "^" + there.m.get_str();
            // The necklace itself: P goes to P and Q to Q.
            std::size_t half = samples / 2 + 1;
            std::vector<std::pair<NecklacePart, Point2<F>>> pts;
            for (auto& p : sample_polygon(here.P, half, r.split(1))) pts.emplace_back(NecklacePart::P, p);
            for (auto& p : sample_polygon(here.Q, half, r.split(2))) pts.emplace_back(NecklacePart::Q, p);
            for (const auto& [part, p] : pts) {
                ++idx;
                ++rep.attempted;
                try {
                    IndexedPoint<F> x = necklace_step(m.sys, p, j);
                    ++rep.valid;
                    NecklacePart got = x.k == there.j ? necklace_part(there, x.p) : NecklacePart::none;
                    if (got != part)
                        rep.violate(idx, "j=" + std::to_string(j) + " " + str(p),
                                    std::string("part ") + to_string(part) + " of " + target,
                                    str(x.p) + " index " + std::to_string(x.k) + " part " + to_string(got));
                } catch (const std::exception& e) {
                    if (!is_wall_error(e)) throw;
                    ++rep.wall_skipped;
                }
            }
            // The region between the necklaces maps between the next pair.
            ConvexRegion<F> band = necklace_band(m.sys, base_here, here);
            auto band_pts = sample_polygon(band.vertices(), 4 * samples, r.split(3));
            std::size_t taken = 0;
            for (const auto& p : band_pts) {
                if (taken >= samples) break;
                if (!between_necklaces(m.sys, base_here, here, p)) continue;
                ++taken;
                ++idx;
                ++rep.attempted;
                try {
                    IndexedPoint<F> x = necklace_step(m.sys, p, j);
                    ++rep.valid;
                    ++between_samples;
                    if (x.k != there.j || !between_necklaces(m.sys, base_there, there, x.p))
                        rep.violate(idx, "j=" + std::to_string(j) + " " + str(p),
                                    "between R_" + std::to_string(there.j) + " and " + target,
                                    str(x.p) + " index " + std::to_string(x.k));
                } catch (const std::exception& e) {
                    if (!is_wall_error(e)) throw;
                    ++rep.wall_skipped;
                }
            }
        }
    rep.facts = {{"multiple", mult}, {"between_samples", between_samples}};
    rep.runtime_ms = timer.ms();
    return rep;
}

template <ordered_field F>
struct Certificate {
    bool bounded = false;
    long m = 0;
    long strip = 0;  // j with p between R_j and R_j^{+-m D_j}
    int side = 0;    // which end of the strip
    F radius{0};     // sup norm bound for the orbit
};

// Largest sup norm over all necklaces R_j^0 and R_j^{+-m D_j}.
template <ordered_field F>
F certified_radius(const Model<F>& m, const QuasiData<F>& q, long mult) {
    F r{0};
    for (long j = 1; j <= m.n(); ++j) {
        Integer e = mult * q.D_j[static_cast<std::size_t>(j - 1)];
        r = max_value(r, necklace_radius(necklace(m.sys, m.poly, j, 0)));
        r = max_value(r, necklace_radius(necklace(m.sys, m.poly, j, e)));
        r = max_value(r, necklace_radius(necklace(m.sys, m.poly, j, Integer(-e))));
    }
    return r;
}

template <ordered_field F>
Certificate<F> boundedness_certificate(const Model<F>& m, const Point2<F>& p, long mult) {
    QuasiData<F> q = quasi_analyze(m.sys);
    if (!q.quasirational) throw NotQuasirational();
    if (mult < 1) throw std::invalid_argument("necklace multiple must be at least 1");
    for (long j = 1; j <= m.n(); ++j) {
        NecklaceSpec<F> base = necklace(m.sys, m.poly, j, 0);
        for (int side : {1, -1}) {
            Integer e = side * mult * q.D_j[static_cast<std::size_t>(j - 1)];
            if (between_necklaces(m.sys, base, necklace(m.sys, m.poly, j, e), p))
                return {true, mult, j, side, certified_radius(m, q, mult)};
        }
    }
    throw AnnulusNotFound("point is not between the necklaces for m = " + std::to_string(mult));
}

// Smallest m in 1..limit that certifies p.
template <ordered_field F>
Certificate<F> find_certificate(const Model<F>& m, const Point2<F>& p, long limit = 64) {
    for (long k = 1; k <= limit; ++k) {
        try {
            return boundedness_certificate(m, p, k);
        } catch (const AnnulusNotFound&) {
        }
    }
    throw AnnulusNotFound("no m up to " + std::to_string(limit) + " certifies the point");
}

template <ordered_field F>
CheckReport control_bumped_exponent(const Model<F>& m, std::size_t samples, std::uint64_t seed) {
    CheckReport r = check_necklace_invariance(m, 1, samples, seed, 1);
    r.name = "control_bumped_exponent";
    return r;
}

}  // namespace pinwheel
