#pragma once

// Nice polygons: strictly convex, clockwise, no two edges parallel.

#include "geometry.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace pinwheel {

enum class PolygonErrorKind { not_convex, parallel_edges, degenerate_vertices, parse_error };

inline const char* to_string(PolygonErrorKind k) {
    switch (k) {
        case PolygonErrorKind::not_convex: return "NotConvex";
        case PolygonErrorKind::parallel_edges: return "ParallelEdges";
        case PolygonErrorKind::degenerate_vertices: return "DegenerateVertices";
        case PolygonErrorKind::parse_error: return "ParseError";
    }
    return "?";
}

// Indices are 0-based here and rendered 1-based in the message.
struct PolygonError : std::runtime_error {
    PolygonErrorKind kind;
    std::vector<std::size_t> indices;

    PolygonError(PolygonErrorKind k, std::vector<std::size_t> idx, const std::string& what)
        : std::runtime_error(describe(k, idx, what)), kind(k), indices(std::move(idx)) {}

private:
    static std::string describe(PolygonErrorKind k, const std::vector<std::size_t>& idx, const std::string& what) {
        std::ostringstream os;
        os << to_string(k) << ": " << what;
        if (!idx.empty()) {
            os << " (";
            for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? ", " : "") << idx[i] + 1;
            os << ")";
        }
        return os.str();
    }
};

template <ordered_field F>
struct Edge {
    std::size_t tail, head;
    Line<F> line;
};

template <ordered_field F>
class NicePolygon {
public:
    using Scalar = F;
    using Point = Point2<F>;

    // Validates and reorients to clockwise. `reoriented` reports whether the
    // input came in counterclockwise.
    static NicePolygon from_vertices(std::vector<Point> vs, bool* reoriented = nullptr) {
        const std::size_t n = vs.size();
        if (n < 3) throw PolygonError(PolygonErrorKind::degenerate_vertices, {}, "fewer than 3 vertices");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (vs[i] == vs[j]) throw PolygonError(PolygonErrorKind::degenerate_vertices, {i, j}, "repeated vertex");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    if (sign(cross(vs[j] - vs[i], vs[k] - vs[i])) == 0)
                        throw PolygonError(PolygonErrorKind::degenerate_vertices, {i, j, k}, "collinear vertices");

        bool flip = sign(signed_area(vs)) > 0;
        if (flip) std::reverse(vs.begin(), vs.end());
        if (reoriented) *reoriented = flip;

        // A left turn names the reflex vertex; the global test below catches
        // polygons that turn right everywhere but wind more than once.
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = vs[(i + n - 1) % n];
            const Point& b = vs[i];
            const Point& c = vs[(i + 1) % n];
            if (sign(cross(b - a, c - b)) > 0)
                throw PolygonError(PolygonErrorKind::not_convex, {flip ? n - 1 - i : i}, "reflex vertex");
        }
        // Every other vertex strictly right of every directed edge.
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = vs[i];
            const Point& b = vs[(i + 1) % n];
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == (i + 1) % n) continue;
                if (sign(cross(b - a, vs[k] - a)) >= 0) {
                    std::size_t orig = flip ? n - 1 - k : k;
                    throw PolygonError(PolygonErrorKind::not_convex, {orig}, "vertex breaks strict convexity");
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Vec2<F> di = vs[(i + 1) % n] - vs[i];
                Vec2<F> dj = vs[(j + 1) % n] - vs[j];
                if (sign(cross(di, dj)) == 0)
                    throw PolygonError(PolygonErrorKind::parallel_edges, {i, j}, "parallel edges");
            }
        return NicePolygon(std::move(vs));
    }

    std::size_t size() const { return vs_.size(); }
    const std::vector<Point>& vertices() const { return vs_; }
    const Point& vertex(std::size_t i) const { return vs_[i % vs_.size()]; }
    const std::vector<Edge<F>>& edges() const { return edges_; }
    // Edge i runs clockwise from vertex i to vertex i+1.
    const Edge<F>& edge(std::size_t i) const { return edges_[i % edges_.size()]; }

    std::size_t index_of(const Point& p) const {
        for (std::size_t i = 0; i < vs_.size(); ++i)
            if (vs_[i] == p) return i;
        throw std::out_of_range("not a vertex");
    }

    F area() const { return abs_value(signed_area(vs_)); }

    // Axis-aligned bounds of the vertex set.
    Box<F> bounds() const {
        Box<F> b{vs_[0].x, vs_[0].y, vs_[0].x, vs_[0].y};
        for (const auto& p : vs_) {
            b.xmin = min_value(b.xmin, p.x);
            b.xmax = max_value(b.xmax, p.x);
            b.ymin = min_value(b.ymin, p.y);
            b.ymax = max_value(b.ymax, p.y);
        }
        return b;
    }

    // Upper bound for the diameter in the sup norm.
    F diameter() const {
        Box<F> b = bounds();
        return max_value(F(b.xmax - b.xmin), F(b.ymax - b.ymin));
    }

    friend bool operator==(const NicePolygon&, const NicePolygon&) = default;

private:
    explicit NicePolygon(std::vector<Point> vs) : vs_(std::move(vs)) {
        for (std::size_t i = 0; i < vs_.size(); ++i) {
            std::size_t j = (i + 1) % vs_.size();
            edges_.push_back({i, j, Line<F>::through(vs_[i], vs_[j])});
        }
    }

    std::vector<Point> vs_;
    std::vector<Edge<F>> edges_;
};

template <ordered_field F>
bool operator==(const Edge<F>& e, const Edge<F>& f) {
    return e.tail == f.tail && e.head == f.head && e.line == f.line;
}

enum class PointLocation { inside, boundary, outside };

inline const char* to_string(PointLocation l) {
    switch (l) {
        case PointLocation::inside: return "inside";
        case PointLocation::boundary: return "boundary";
        case PointLocation::outside: return "outside";
    }
    return "?";
}

template <ordered_field F>
PointLocation point_location(const NicePolygon<F>& poly, const Point2<F>& p) {
    bool on_edge = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = poly.vertex(i);
        const auto& b = poly.vertex(i + 1);
        int s = sign(cross(b - a, p - a));
        if (s > 0) return PointLocation::outside;
        if (s == 0) on_edge = true;
    }
    return on_edge ? PointLocation::boundary : PointLocation::inside;
}

// Mirror image in the x-axis, re-listed clockwise.
template <ordered_field F>
NicePolygon<F> reflect_x(const NicePolygon<F>& poly) {
    std::vector<Point2<F>> vs;
    for (const auto& p : poly.vertices()) vs.push_back({p.x, F(-p.y)});
    return NicePolygon<F>::from_vertices(std::move(vs));
}

}  // namespace pinwheel
