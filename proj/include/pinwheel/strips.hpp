#pragma once

// Pinwheel pairs (strip, translation vector), spokes, strip maps.

#include "polygon.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace pinwheel {

struct OnStripBoundary : std::runtime_error {
    long stage;  // strip index (1-based) whose boundary was hit
    explicit OnStripBoundary(long j)
        : std::runtime_error("point lies on the boundary of strip " + std::to_string(j)), stage(j) {}
};

template <ordered_field F>
struct PinwheelPair {
    long index;            // 1..n
    std::size_t edge;      // vertex-order edge index
    std::size_t v, w;      // head vertex of the edge, farthest vertex
    Line<F> L, L_prime;
    Vec2<F> V;
    F width_offset;        // signed_offset(L, .) on L_prime

    ConvexRegion<F> strip() const { return slab(L, width_offset, false); }
    ConvexRegion<F> open_strip() const { return slab(L, width_offset, true); }

    // Offset measured in units where the strip is [0, 1].
    F relative_offset(const Point2<F>& p) const { return F(signed_offset(L, p) / width_offset); }
    Location locate(const Point2<F>& p) const {
        F t = relative_offset(p);
        if (sign(t) < 0 || F(1) < t) return Location::outside;
        if (sign(t) == 0 || t == F(1)) return Location::boundary;
        return Location::interior;
    }
};

struct Spoke {
    long index;
    std::size_t tail, head;  // vertex indices; head - tail = V / 2
    bool special = false;

    bool touches(std::size_t u) const { return tail == u || head == u; }
};

// Cyclic 1-based index reduction.
inline long wrap_index(long j, long n) { return ((j - 1) % n + n) % n + 1; }

template <ordered_field F>
class PinwheelSystem {
public:
    PinwheelSystem() = default;
    explicit PinwheelSystem(const NicePolygon<F>& poly) { build(poly); }

    long size() const { return static_cast<long>(pairs_.size()); }
    const PinwheelPair<F>& pair(long j) const { return pairs_[static_cast<std::size_t>(wrap_index(j, size()) - 1)]; }
    const Spoke& spoke(long j) const { return spokes_[static_cast<std::size_t>(wrap_index(j, size()) - 1)]; }
    const std::vector<PinwheelPair<F>>& pairs() const { return pairs_; }
    const std::vector<Spoke>& spokes() const { return spokes_; }
    const std::vector<Point2<F>>& vertices() const { return verts_; }
    const Point2<F>& vertex(std::size_t i) const { return verts_[i]; }
    long index_of_edge(std::size_t e) const { return by_edge_[e]; }

    // Test hooks for harness self-checks.
    PinwheelPair<F>& mutable_pair(long j) { return pairs_[static_cast<std::size_t>(wrap_index(j, size()) - 1)]; }
    Spoke& mutable_spoke(long j) { return spokes_[static_cast<std::size_t>(wrap_index(j, size()) - 1)]; }

private:
    void build(const NicePolygon<F>& poly) {
        const std::size_t n = poly.size();
        verts_ = poly.vertices();

        // Sort edges by direction angle folded into [0, pi).
        std::vector<Vec2<F>> dirs;
        for (std::size_t i = 0; i < n; ++i) {
            Vec2<F> d = poly.vertex(i + 1) - poly.vertex(i);
            if (sign(d.y) < 0 || (sign(d.y) == 0 && sign(d.x) < 0)) d = -d;
            dirs.push_back(d);
        }
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            bool ha = sign(dirs[a].y) == 0, hb = sign(dirs[b].y) == 0;
            if (ha != hb) return ha;
            return sign(cross(dirs[a], dirs[b])) > 0;
        });

        by_edge_.assign(n, 0);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t e = order[k];
            const Edge<F>& edge = poly.edge(e);
            std::size_t v = edge.head, w = v;
            F best{0};
            for (std::size_t u = 0; u < n; ++u) {
                F d = abs_value(signed_offset(edge.line, poly.vertex(u)));
                if (best < d) {
                    best = d;
                    w = u;
                }
            }
            F width = F(2 * signed_offset(edge.line, poly.vertex(w)));
            Line<F> far(edge.line.a(), edge.line.b(), F(edge.line.c() + width));
            Vec2<F> V = F(2) * (poly.vertex(w) - poly.vertex(v));
            long j = static_cast<long>(k) + 1;
            pairs_.push_back({j, e, v, w, edge.line, far, V, width});
            spokes_.push_back({j, v, w, false});
            by_edge_[e] = j;
        }
        const long m = static_cast<long>(n);
        for (long j = 1; j <= m; ++j) {
            const Spoke& a = spoke(j - 1);
            const Spoke& c = spoke(j + 1);
            Spoke& b = spokes_[static_cast<std::size_t>(j - 1)];
            b.special = (b.touches(a.tail) && c.touches(a.tail)) || (b.touches(a.head) && c.touches(a.head));
        }
    }

    std::vector<Point2<F>> verts_;
    std::vector<PinwheelPair<F>> pairs_;
    std::vector<Spoke> spokes_;
    std::vector<long> by_edge_;
};

template <ordered_field F>
PinwheelSystem<F> build_pinwheel_system(const NicePolygon<F>& poly) {
    return PinwheelSystem<F>(poly);
}

// Identity strictly inside the strip, otherwise one step of +-V toward it.
template <ordered_field F>
Point2<F> strip_map(const PinwheelPair<F>& pr, const Point2<F>& p) {
    F t = pr.relative_offset(p);
    if (sign(t) == 0 || t == F(1)) throw OnStripBoundary(pr.index);
    if (sign(t) < 0) return p + pr.V;
    if (F(1) < t) return p - pr.V;
    return p;
}

// Iterate one strip map until it fixes the point; `steps` receives the count.
// When V spans the strip exactly the count is computed in one shot.
template <ordered_field F>
Point2<F> strip_settle(const PinwheelPair<F>& pr, const Point2<F>& p, Integer* steps = nullptr, long budget = 1 << 20) {
    F t = pr.relative_offset(p);
    if (F(dot(pr.L.normal(), pr.V)) == pr.width_offset) {
        Integer k = 0;
        if (sign(t) < 0) k = ceil_value(F(-t));
        else if (F(1) < t) k = -ceil_value(F(t - F(1)));
        F landed = F(t + F(Rational(k)));
        if (sign(landed) == 0 || landed == F(1)) throw OnStripBoundary(pr.index);
        if (steps) *steps = abs(k);
        return p + F(Rational(k)) * pr.V;
    }
    Point2<F> q = p;
    for (long i = 0; i <= budget; ++i) {
        Point2<F> r = strip_map(pr, q);
        if (r == q) {
            if (steps) *steps = i;
            return q;
        }
        q = r;
    }
    throw std::runtime_error("strip map did not settle");
}

// Smallest b' >= a with b' = b mod n.
inline long lift_index(long a, long b, long n) { return a + ((b - a) % n + n) % n; }

template <ordered_field F>
Point2<F> compose_strip_maps(const PinwheelSystem<F>& sys, long a, long b, Point2<F> p) {
    long top = lift_index(a, b, sys.size());
    for (long j = a; j <= top; ++j) p = strip_map(sys.pair(j), p);
    return p;
}

template <ordered_field F>
ConvexRegion<F> sigma_range(const PinwheelSystem<F>& sys, long a, long b) {
    long top = lift_index(a, b, sys.size());
    ConvexRegion<F> r;
    for (long j = a; j < top; ++j) r = region_intersect(r, sys.pair(j).strip());
    return r;
}

}  // namespace pinwheel
