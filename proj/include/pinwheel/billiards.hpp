#pragma once

// Outer billiards, its square psi, primary cones and the forward/backward partitions.

#include "polygon.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pinwheel {

enum class UndefinedKind { on_primary_wall, inside_polygon, on_polygon_boundary, on_wall };

inline const char* to_string(UndefinedKind k) {
    switch (k) {
        case UndefinedKind::on_primary_wall: return "OnPrimaryWall";
        case UndefinedKind::inside_polygon: return "InsidePolygon";
        case UndefinedKind::on_polygon_boundary: return "OnPolygonBoundary";
        case UndefinedKind::on_wall: return "UndefinedOnWall";
    }
    return "?";
}

// The map is not defined at the requested point. `stage` is 1 or 2 for the two
// halves of psi, 0 when not applicable.
struct UndefinedPoint : std::runtime_error {
    UndefinedKind kind;
    int stage;
    UndefinedPoint(UndefinedKind k, int s = 0)
        : std::runtime_error(std::string(to_string(k)) + (s ? " (stage " + std::to_string(s) + ")" : "")),
          kind(k), stage(s) {}
};

enum class Chirality { right, left };

// The vertex v with every other vertex strictly on the chosen side of the ray p -> v.
template <ordered_field F>
std::size_t tangent_vertex(const NicePolygon<F>& poly, const Point2<F>& p, Chirality ch = Chirality::right) {
    PointLocation loc = point_location(poly, p);
    if (loc == PointLocation::inside) throw UndefinedPoint(UndefinedKind::inside_polygon);
    if (loc == PointLocation::boundary) throw UndefinedPoint(UndefinedKind::on_polygon_boundary);
    const int want = ch == Chirality::right ? -1 : 1;
    const std::size_t n = poly.size();
    std::size_t c = 0;
    for (std::size_t u = 1; u < n; ++u)
        if (sign(cross(poly.vertex(c) - p, poly.vertex(u) - p)) == -want) c = u;
    for (std::size_t u = 0; u < n; ++u) {
        if (u == c) continue;
        int s = sign(cross(poly.vertex(c) - p, poly.vertex(u) - p));
        if (s == 0) throw UndefinedPoint(UndefinedKind::on_primary_wall);
        if (s != want) throw std::logic_error("tangent search failed");
    }
    return c;
}

template <ordered_field F>
Point2<F> outer_step(const NicePolygon<F>& poly, const Point2<F>& p) {
    return reflect_through(poly.vertex(tangent_vertex(poly, p)), p);
}

struct TileLabel {
    std::size_t v, w;
    friend bool operator==(const TileLabel&, const TileLabel&) = default;
    friend auto operator<=>(const TileLabel&, const TileLabel&) = default;
};

template <ordered_field F>
struct SquareStep {
    Point2<F> q;
    std::optional<TileLabel> label;  // empty inside the polygon, where psi is the identity
};

namespace detail {
template <ordered_field F>
SquareStep<F> square_step(const NicePolygon<F>& poly, const Point2<F>& p, Chirality ch) {
    if (point_location(poly, p) == PointLocation::inside) return {p, std::nullopt};
    std::size_t v, w;
    try {
        v = tangent_vertex(poly, p, ch);
    } catch (const UndefinedPoint& e) {
        throw UndefinedPoint(e.kind == UndefinedKind::inside_polygon ? e.kind : UndefinedKind::on_wall, 1);
    }
    Point2<F> mid = reflect_through(poly.vertex(v), p);
    try {
        w = tangent_vertex(poly, mid, ch);
    } catch (const UndefinedPoint&) {
        throw UndefinedPoint(UndefinedKind::on_wall, 2);
    }
    return {reflect_through(poly.vertex(w), mid), TileLabel{v, w}};
}
}  // namespace detail

// psi(p) = p + 2(w - v).
template <ordered_field F>
SquareStep<F> square_map(const NicePolygon<F>& poly, const Point2<F>& p) {
    return detail::square_step(poly, p, Chirality::right);
}

// psi^{-1}; the label is the backward label, (w, v) for q = psi(p) with forward label (v, w).
template <ordered_field F>
SquareStep<F> inverse_square_map(const NicePolygon<F>& poly, const Point2<F>& p) {
    return detail::square_step(poly, p, Chirality::left);
}

template <ordered_field F>
ConvexRegion<F> primary_cone(const NicePolygon<F>& poly, std::size_t v, Chirality ch = Chirality::right) {
    const std::size_t n = poly.size();
    const Point2<F>& pv = poly.vertex(v);
    std::vector<HalfPlane<F>> hs;
    for (std::size_t u : {(v + n - 1) % n, (v + 1) % n}) {
        // cross(v - p, u - v) has the chosen sign.
        Vec2<F> d = poly.vertex(u) - pv;
        F c = F(-(pv.x * d.y - pv.y * d.x));
        hs.push_back(make_halfplane(F(-d.y), d.x, c, ch == Chirality::right ? Sense::lt : Sense::gt));
    }
    return ConvexRegion<F>::from(std::move(hs));
}

template <ordered_field F>
struct Tile {
    TileLabel label;
    ConvexRegion<F> region;  // open
    Vec2<F> translation;     // 2(w - v)
    bool bounded = false;
    long path_a = 0, path_b = 0;  // admissible path a -> b once linked, 1-based
};

template <ordered_field F>
class Partition {
public:
    Partition() = default;
    Partition(const NicePolygon<F>& poly, Chirality ch) : n_(poly.size()), ch_(ch) {
        std::vector<ConvexRegion<F>> cones;
        for (std::size_t v = 0; v < n_; ++v) cones.push_back(primary_cone(poly, v, ch));
        index_.assign(n_ * n_, -1);
        for (std::size_t v = 0; v < n_; ++v)
            for (std::size_t w = 0; w < n_; ++w) {
                if (v == w) continue;
                std::vector<HalfPlane<F>> hs = cones[v].constraints();
                for (const auto& h : cones[w].constraints()) hs.push_back(reflect_through(poly.vertex(v), h));
                ConvexRegion<F> r = ConvexRegion<F>::from(std::move(hs));
                if (r.empty()) continue;
                Tile<F> t{{v, w}, r, F(2) * (poly.vertex(w) - poly.vertex(v)), r.bounded()};
                index_[v * n_ + w] = static_cast<long>(tiles_.size());
                tiles_.push_back(std::move(t));
            }
    }

    const std::vector<Tile<F>>& tiles() const { return tiles_; }
    std::vector<Tile<F>>& tiles() { return tiles_; }
    Chirality chirality() const { return ch_; }

    const Tile<F>* find(const TileLabel& l) const {
        if (l.v >= n_ || l.w >= n_) return nullptr;
        long i = index_[l.v * n_ + l.w];
        return i < 0 ? nullptr : &tiles_[static_cast<std::size_t>(i)];
    }
    long find_index(const TileLabel& l) const { return index_[l.v * n_ + l.w]; }

    std::size_t bounded_count() const {
        std::size_t c = 0;
        for (const auto& t : tiles_) c += t.bounded;
        return c;
    }
    std::size_t unbounded_count() const { return tiles_.size() - bounded_count(); }

private:
    std::size_t n_ = 0;
    Chirality ch_ = Chirality::right;
    std::vector<Tile<F>> tiles_;
    std::vector<long> index_;
};

template <ordered_field F>
Partition<F> forward_partition(const NicePolygon<F>& poly) { return Partition<F>(poly, Chirality::right); }

template <ordered_field F>
Partition<F> backward_partition(const NicePolygon<F>& poly) { return Partition<F>(poly, Chirality::left); }

// Tile of p by the dynamically computed label; requires p off every wall.
template <ordered_field F>
const Tile<F>& classify(const NicePolygon<F>& poly, const Partition<F>& part, const Point2<F>& p) {
    SquareStep<F> s = detail::square_step(poly, p, part.chirality());
    if (!s.label) throw UndefinedPoint(UndefinedKind::inside_polygon);
    const Tile<F>* t = part.find(*s.label);
    if (!t || t->region.locate(p) != Location::interior)
        throw std::logic_error("dynamic label disagrees with the partition");
    return *t;
}

}  // namespace pinwheel
