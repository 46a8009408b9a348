#pragma once

// The pinwheel map on R^2 x {1..n}, the section, and the accelerated maps.

#include "model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pinwheel {

struct BudgetExceeded : std::runtime_error {
    Integer budget;
    explicit BudgetExceeded(const Integer& b) : std::runtime_error("step budget " + b.get_str() + " exhausted"), budget(b) {}
};

template <ordered_field F>
struct IndexedPoint {
    Point2<F> p;
    long k;  // 1..n
    friend bool operator==(const IndexedPoint&, const IndexedPoint&) = default;
};

// Try mu_{k+1}; a fixed point advances the index, a moved point keeps it.
template <ordered_field F>
IndexedPoint<F> pinwheel_step(const PinwheelSystem<F>& sys, const IndexedPoint<F>& x) {
    long j = wrap_index(x.k + 1, sys.size());
    Point2<F> q = strip_map(sys.pair(j), x.p);
    if (q == x.p) return {q, j};
    return {q, x.k};
}

// iota(p) = (p, a - 1) for p inside T(a -> b).
template <ordered_field F>
IndexedPoint<F> section(const Model<F>& m, const Point2<F>& p) {
    const Tile<F>& t = m.tile_of(p);
    return {p, wrap_index(t.path_a - 1, m.n())};
}

template <ordered_field F>
struct TheoremStep {
    Point2<F> q;      // psi(p)
    long k_used = 0;  // iterates of the pinwheel map
    long landing = 0; // c - 1 for psi(p) in T(c -> d)
};

// Iterate the pinwheel map from iota(p) until it reaches (psi(p), c - 1).
// Throws BudgetExceeded past `budget` iterates (3n by default) and lets wall
// hits (OnStripBoundary, UndefinedPoint) through.
template <ordered_field F>
TheoremStep<F> pinwheel_theorem_step(const Model<F>& m, const Point2<F>& p, long budget = 0) {
    if (budget <= 0) budget = 3 * m.n();
    SquareStep<F> s = square_map(m.poly, p);
    if (!s.label) throw UndefinedPoint(UndefinedKind::inside_polygon);
    IndexedPoint<F> x = section(m, p);
    const Tile<F>& next = m.tile_of(s.q);
    IndexedPoint<F> target{s.q, wrap_index(next.path_a - 1, m.n())};
    for (long k = 1; k <= budget; ++k) {
        x = pinwheel_step(m.sys, x);
        if (x == target) return {s.q, k, target.k};
    }
    throw BudgetExceeded(budget);
}

template <ordered_field F>
struct Landing {
    Point2<F> q;
    long steps = 0;
};

// First psi iterate that lies in a different forward tile.
template <ordered_field F>
Landing<F> exit_map(const Model<F>& m, const Point2<F>& p, long budget = 1000000) {
    TileLabel start = m.tile_of(p).label;
    Point2<F> q = p;
    for (long k = 1; k <= budget; ++k) {
        q = square_map(m.poly, q).q;
        SquareStep<F> probe = square_map(m.poly, q);
        if (!probe.label) throw UndefinedPoint(UndefinedKind::inside_polygon);
        if (!(*probe.label == start)) return {q, k};
    }
    throw BudgetExceeded(budget);
}

// First return of psi to the open strip Sigma_1.
template <ordered_field F>
Landing<F> first_return_psi(const Model<F>& m, const Point2<F>& p, long budget) {
    const auto& s1 = m.sys.pair(1);
    if (s1.locate(p) != Location::interior) throw std::invalid_argument("start point is not inside strip 1");
    Point2<F> q = p;
    for (long k = 1; k <= budget; ++k) {
        SquareStep<F> s = square_map(m.poly, q);
        q = s.q;
        if (s1.locate(q) == Location::interior) return {q, k};
    }
    throw BudgetExceeded(budget);
}

template <ordered_field F>
bool in_strip_union(const PinwheelSystem<F>& sys, const IndexedPoint<F>& x) {
    return sys.pair(x.k).locate(x.p) == Location::interior;
}

template <ordered_field F>
struct IndexedLanding {
    IndexedPoint<F> x;
    Integer steps = 0;  // may exceed any machine integer for far starts
};

namespace detail {
// Smallest integer i in [lo, hi] with 0 < t0 + i d < 1, if any.
template <ordered_field F>
std::optional<Integer> first_inside(const F& t0, const F& d, const Integer& lo, const Integer& hi) {
    if (hi < lo) return std::nullopt;
    if (sign(d) == 0) {
        if (sign(t0) > 0 && t0 < F(1)) return lo;
        return std::nullopt;
    }
    // Open interval of real i.
    F a = F(-t0 / d), b = F((F(1) - t0) / d);
    if (b < a) std::swap(a, b);
    Integer first = floor_value(a) + 1, last = ceil_value(b) - 1;
    if (first < lo) first = lo;
    if (hi < last) last = hi;
    if (last < first) return std::nullopt;
    return first;
}
}  // namespace detail

// First return of the pinwheel map to the union of Sigma_j x {j}. Runs of
// moves under one strip map are jumped over exactly when V spans its strip.
template <ordered_field F>
IndexedLanding<F> strip_system_return(const PinwheelSystem<F>& sys, const IndexedPoint<F>& x, const Integer& budget) {
    if (!in_strip_union(sys, x)) throw std::invalid_argument("start point is not inside its strip");
    IndexedPoint<F> y = x;
    Integer used = 0;
    while (used < budget) {
        const auto& next = sys.pair(y.k + 1);
        const auto& here = sys.pair(y.k);
        F t = next.relative_offset(y.p);
        if (sign(t) > 0 && t < F(1)) {
            y = {y.p, next.index};
            ++used;
            return {y, used};
        }
        if (F(dot(next.L.normal(), next.V)) != next.width_offset) {
            y = pinwheel_step(sys, y);
            ++used;
            if (in_strip_union(sys, y)) return {y, used};
            continue;
        }
        if (sign(t) == 0 || t == F(1)) throw OnStripBoundary(next.index);
        // Moves are p + i s V for i = 1..K, then the index advances.
        int s = sign(t) < 0 ? 1 : -1;
        Integer K = s > 0 ? ceil_value(F(-t)) : ceil_value(F(t - F(1)));
        Vec2<F> step = F(s) * next.V;
        F d = F(dot(here.L.normal(), step) / here.width_offset);
        auto hit = detail::first_inside(here.relative_offset(y.p), d, Integer(1), K);
        Integer i = hit ? *hit : K;
        if (budget - used < i) throw BudgetExceeded(budget);
        used += i;
        y = {y.p + F(Rational(i)) * step, y.k};
        if (hit) return {y, used};
        F landed = next.relative_offset(y.p);
        if (sign(landed) == 0 || landed == F(1)) throw OnStripBoundary(next.index);
        if (used >= budget) break;
        y = {y.p, next.index};
        ++used;
        return {y, used};
    }
    throw BudgetExceeded(budget);
}

// Default far-field radius (sup norm): 8 (diameter + max strip width) n.
// Strip widths are measured by offsets, which bound Euclidean widths from above.
template <ordered_field F>
F far_radius(const PinwheelSystem<F>& sys, const NicePolygon<F>& poly, long c = 8) {
    F wmax{0};
    for (const auto& pr : sys.pairs()) {
        F w = abs_value(pr.width_offset);
        F len = norm_inf(pr.V);
        wmax = max_value(wmax, max_value(w, len));
    }
    return F(F(c) * (poly.diameter() + wmax) * F(sys.size()));
}

enum class OrbitMap { psi, psi_star, exit, strip_return, first_return };

inline const char* to_string(OrbitMap m) {
    switch (m) {
        case OrbitMap::psi: return "psi";
        case OrbitMap::psi_star: return "psistar";
        case OrbitMap::exit: return "exit";
        case OrbitMap::strip_return: return "return";
        case OrbitMap::first_return: return "first-return";
    }
    return "?";
}

enum class OrbitEvent { start, translated, index_shifted, returned, undefined, budget_exhausted, escaped };

inline const char* to_string(OrbitEvent e) {
    switch (e) {
        case OrbitEvent::start: return "start";
        case OrbitEvent::translated: return "translated";
        case OrbitEvent::index_shifted: return "index-shifted";
        case OrbitEvent::returned: return "returned";
        case OrbitEvent::undefined: return "undefined";
        case OrbitEvent::budget_exhausted: return "budget-exhausted";
        case OrbitEvent::escaped: return "escaped";
    }
    return "?";
}

template <ordered_field F>
struct OrbitEntry {
    long step;
    Point2<F> p;
    long k = 0;                       // index for pinwheel-map orbits, else 0
    std::optional<TileLabel> label;   // tile of p when known
    long inner_steps = 1;             // underlying iterates for accelerated maps, -1 if huge
    OrbitEvent event;
    std::string detail;
};

// Consecutive entries are one map application apart; how the run stopped is
// kept separately.
template <ordered_field F>
struct OrbitRecord {
    OrbitMap map;
    std::vector<OrbitEntry<F>> entries;
    OrbitEvent end = OrbitEvent::budget_exhausted;
    std::string end_detail;
};

// Iterate one of the maps, logging every application. Never throws for
// undefined points; those stop the run with `end` set to undefined.
template <ordered_field F>
OrbitRecord<F> orbit(const Model<F>& m, const Point2<F>& start, OrbitMap map, long budget,
                     std::optional<F> escape_radius = std::nullopt, long start_index = 0) {
    OrbitRecord<F> rec{map, {}, OrbitEvent::budget_exhausted, ""};
    auto label_of = [&](const Point2<F>& p) -> std::optional<TileLabel> {
        try {
            return square_map(m.poly, p).label;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };
    IndexedPoint<F> x{start, start_index > 0 ? wrap_index(start_index, m.n()) : 0};
    try {
        if (map == OrbitMap::psi_star && x.k == 0) x = section(m, start);
        if (map == OrbitMap::strip_return && x.k == 0) {
            for (long j = 1; j <= m.n() && x.k == 0; ++j)
                if (m.sys.pair(j).locate(start) == Location::interior) x.k = j;
            if (x.k == 0) throw std::invalid_argument("start point lies in no open strip");
        }
    } catch (const std::exception& e) {
        rec.entries.push_back({0, start, 0, std::nullopt, 0, OrbitEvent::start, ""});
        rec.end = OrbitEvent::undefined;
        rec.end_detail = e.what();
        return rec;
    }
    rec.entries.push_back({0, start, x.k, label_of(start), 0, OrbitEvent::start, ""});
    Point2<F> p = start;
    for (long step = 1; step <= budget; ++step) {
        try {
            switch (map) {
                case OrbitMap::psi: {
                    p = square_map(m.poly, p).q;
                    rec.entries.push_back({step, p, 0, label_of(p), 1, OrbitEvent::translated, ""});
                    break;
                }
                case OrbitMap::psi_star: {
                    IndexedPoint<F> y = pinwheel_step(m.sys, x);
                    OrbitEvent ev = y.p == x.p ? OrbitEvent::index_shifted : OrbitEvent::translated;
                    x = y;
                    p = x.p;
                    rec.entries.push_back({step, p, x.k, std::nullopt, 1, ev, ""});
                    break;
                }
                case OrbitMap::exit: {
                    Landing<F> l = exit_map(m, p);
                    p = l.q;
                    rec.entries.push_back({step, p, 0, label_of(p), l.steps, OrbitEvent::translated, ""});
                    break;
                }
                case OrbitMap::strip_return: {
                    IndexedLanding<F> l = strip_system_return(m.sys, x, 1000000);
                    x = l.x;
                    p = x.p;
                    rec.entries.push_back({step, p, x.k, std::nullopt, l.steps.fits_slong_p() ? l.steps.get_si() : -1,
                                           OrbitEvent::returned, ""});
                    break;
                }
                case OrbitMap::first_return: {
                    Landing<F> l = first_return_psi(m, p, 1000000);
                    p = l.q;
                    rec.entries.push_back({step, p, 0, label_of(p), l.steps, OrbitEvent::returned, ""});
                    break;
                }
            }
        } catch (const BudgetExceeded& e) {
            rec.end = OrbitEvent::budget_exhausted;
            rec.end_detail = e.what();
            return rec;
        } catch (const std::exception& e) {
            rec.end = OrbitEvent::undefined;
            rec.end_detail = e.what();
            return rec;
        }
        if (escape_radius && *escape_radius < norm_inf(p)) {
            rec.end = OrbitEvent::escaped;
            return rec;
        }
    }
    return rec;
}

}  // namespace pinwheel
