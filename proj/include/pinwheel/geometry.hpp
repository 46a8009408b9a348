#pragma once

// Points, lines, half-planes and convex regions over an exact ordered field.

#include "field.hpp"
#include "random.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace pinwheel {

template <ordered_field F>
struct Vec2 {
    F x{0}, y{0};

    friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
    friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
    friend Vec2 operator*(const F& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
    bool is_zero() const { return sign(x) == 0 && sign(y) == 0; }
};

template <ordered_field F>
struct Point2 {
    F x{0}, y{0};

    friend Point2 operator+(const Point2& p, const Vec2<F>& v) { return {p.x + v.x, p.y + v.y}; }
    friend Point2 operator-(const Point2& p, const Vec2<F>& v) { return {p.x - v.x, p.y - v.y}; }
    friend Vec2<F> operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
    friend bool operator==(const Point2&, const Point2&) = default;
};

template <ordered_field F>
F cross(const Vec2<F>& u, const Vec2<F>& v) { return F(u.x * v.y - u.y * v.x); }

template <ordered_field F>
F dot(const Vec2<F>& u, const Vec2<F>& v) { return F(u.x * v.x + u.y * v.y); }

// 2c - p, the point reflection of p through c.
template <ordered_field F>
Point2<F> reflect_through(const Point2<F>& c, const Point2<F>& p) {
    return {F(2 * c.x - p.x), F(2 * c.y - p.y)};
}

template <ordered_field F>
Vec2<F> as_vec(const Point2<F>& p) { return {p.x, p.y}; }

template <ordered_field F>
Point2<F> as_point(const Vec2<F>& v) { return {v.x, v.y}; }

// Lexicographic order, used only to canonicalize lists.
template <ordered_field F>
bool lex_less(const Point2<F>& p, const Point2<F>& q) {
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
}

// Sup norm; keeps every radius exact.
template <ordered_field F>
F norm_inf(const Point2<F>& p) { return max_value(abs_value(p.x), abs_value(p.y)); }

template <ordered_field F>
F norm_inf(const Vec2<F>& v) { return max_value(abs_value(v.x), abs_value(v.y)); }

// a x + b y = c with the leading nonzero coefficient of (a, b) equal to 1.
template <ordered_field F>
class Line {
public:
    Line(F a, F b, F c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        if (sign(a_) == 0 && sign(b_) == 0) throw std::invalid_argument("degenerate line");
        F lead = sign(a_) != 0 ? a_ : b_;
        a_ = a_ / lead;
        b_ = b_ / lead;
        c_ = c_ / lead;
    }

    static Line through(const Point2<F>& p, const Point2<F>& q) {
        Vec2<F> d = q - p;
        F a = -d.y, b = d.x;
        F c = a * p.x + b * p.y;
        return Line(a, b, c);
    }

    // Same normal, passing through p.
    Line parallel_through(const Point2<F>& p) const { return Line(a_, b_, F(a_ * p.x + b_ * p.y)); }

    const F& a() const { return a_; }
    const F& b() const { return b_; }
    const F& c() const { return c_; }
    Vec2<F> normal() const { return {a_, b_}; }
    Vec2<F> direction() const { return {-b_, a_}; }

    friend bool operator==(const Line&, const Line&) = default;

private:
    F a_, b_, c_;
};

template <ordered_field F>
F signed_offset(const Line<F>& l, const Point2<F>& p) {
    return F(l.a() * p.x + l.b() * p.y - l.c());
}

template <ordered_field F>
std::optional<Point2<F>> intersect_lines(const Line<F>& l, const Line<F>& m) {
    F det = l.a() * m.b() - l.b() * m.a();
    if (sign(det) == 0) return std::nullopt;
    return Point2<F>{F((l.c() * m.b() - l.b() * m.c()) / det), F((l.a() * m.c() - l.c() * m.a()) / det)};
}

template <ordered_field F>
bool parallel(const Line<F>& l, const Line<F>& m) {
    return sign(F(l.a() * m.b() - l.b() * m.a())) == 0;
}

enum class Sense { ge, gt, le, lt };

inline bool is_strict(Sense s) { return s == Sense::gt || s == Sense::lt; }
inline int side_of(Sense s) { return s == Sense::ge || s == Sense::gt ? 1 : -1; }
inline Sense make_sense(int side, bool strict) {
    if (side > 0) return strict ? Sense::gt : Sense::ge;
    return strict ? Sense::lt : Sense::le;
}

template <ordered_field F>
struct HalfPlane {
    Line<F> line;
    Sense sense;

    // Value of the constraint oriented so that nonnegative means "on the allowed side".
    F oriented(const Point2<F>& p) const {
        F o = signed_offset(line, p);
        return side_of(sense) > 0 ? o : F(-o);
    }
    bool contains(const Point2<F>& p) const {
        int s = sign(oriented(p));
        return is_strict(sense) ? s > 0 : s >= 0;
    }
    HalfPlane complement() const { return {line, make_sense(-side_of(sense), !is_strict(sense))}; }
    HalfPlane closure() const { return {line, make_sense(side_of(sense), false)}; }
    HalfPlane interior() const { return {line, make_sense(side_of(sense), true)}; }

    friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

// {a x + b y (sense) c}, with the sense corrected for the line normalization.
template <ordered_field F>
HalfPlane<F> make_halfplane(const F& a, const F& b, const F& c, Sense s) {
    const F& lead = sign(a) != 0 ? a : b;
    Line<F> l(a, b, c);
    if (sign(lead) < 0) s = make_sense(-side_of(s), is_strict(s));
    return {l, s};
}

// Affine image of a half-plane under p -> 2c - p.
template <ordered_field F>
HalfPlane<F> reflect_through(const Point2<F>& c, const HalfPlane<F>& h) {
    // a(2cx - x) + b(2cy - y) - k = -(a x + b y - (2 a cx + 2 b cy - k))
    const Line<F>& l = h.line;
    Line<F> m(l.a(), l.b(), F(2 * (l.a() * c.x + l.b() * c.y) - l.c()));
    return {m, make_sense(-side_of(h.sense), is_strict(h.sense))};
}

template <ordered_field F>
HalfPlane<F> translate(const HalfPlane<F>& h, const Vec2<F>& v) {
    const Line<F>& l = h.line;
    return {Line<F>(l.a(), l.b(), F(l.c() + l.a() * v.x + l.b() * v.y)), h.sense};
}

enum class Location { interior, boundary, outside };

inline const char* to_string(Location l) {
    switch (l) {
        case Location::interior: return "interior";
        case Location::boundary: return "boundary";
        case Location::outside: return "outside";
    }
    return "?";
}

struct UnboundedRegion : std::runtime_error {
    UnboundedRegion() : std::runtime_error("region is unbounded") {}
};

struct EmptyRegion : std::runtime_error {
    EmptyRegion() : std::runtime_error("region is empty") {}
};

template <ordered_field F>
struct Box {
    F xmin, ymin, xmax, ymax;

    static Box centered(const F& r) { return {F(-r), F(-r), r, r}; }
    bool contains(const Point2<F>& p) const {
        return !(p.x < xmin) && !(xmax < p.x) && !(p.y < ymin) && !(ymax < p.y);
    }
    // Clockwise under y-up.
    std::vector<Point2<F>> corners() const {
        return {{xmin, ymax}, {xmax, ymax}, {xmax, ymin}, {xmin, ymin}};
    }
};

template <ordered_field F>
F signed_area(const std::vector<Point2<F>>& poly) {
    F twice{0};
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return F(twice / 2);
}

// Keep the part of a convex polygon where h.oriented >= 0 (closed clip).
template <ordered_field F>
std::vector<Point2<F>> clip_polygon(const std::vector<Point2<F>>& poly, const HalfPlane<F>& h) {
    std::vector<Point2<F>> out;
    const std::size_t n = poly.size();
    if (n == 0) return out;
    std::vector<F> f;
    f.reserve(n);
    for (const auto& p : poly) f.push_back(h.oriented(p));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        int si = sign(f[i]), sj = sign(f[j]);
        if (si >= 0) out.push_back(poly[i]);
        if ((si > 0 && sj < 0) || (si < 0 && sj > 0)) {
            F t = f[i] / (f[i] - f[j]);
            out.push_back(poly[i] + t * (poly[j] - poly[i]));
        }
    }
    // Drop repeated and collinear vertices.
    std::vector<Point2<F>> clean;
    for (const auto& p : out)
        if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
    while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
    bool changed = true;
    while (changed && clean.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < clean.size(); ++i) {
            const auto& a = clean[(i + clean.size() - 1) % clean.size()];
            const auto& b = clean[i];
            const auto& c = clean[(i + 1) % clean.size()];
            if (sign(cross(b - a, c - b)) == 0) {
                clean.erase(clean.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return clean;
}

// Intersection of half-planes, stored in reduced canonical form. A region whose
// interior is empty is the canonical empty region.
template <ordered_field F>
class ConvexRegion {
public:
    ConvexRegion() = default;  // the whole plane

    static ConvexRegion whole_plane() { return ConvexRegion(); }
    static ConvexRegion empty_region() {
        ConvexRegion r;
        r.empty_ = true;
        r.bounded_ = true;
        return r;
    }
    static ConvexRegion from(std::vector<HalfPlane<F>> hs) {
        ConvexRegion r;
        r.reduce(std::move(hs));
        return r;
    }
    static ConvexRegion from_polygon(const std::vector<Point2<F>>& cw, bool open = true) {
        std::vector<HalfPlane<F>> hs;
        for (std::size_t i = 0; i < cw.size(); ++i) {
            const auto& p = cw[i];
            const auto& q = cw[(i + 1) % cw.size()];
            Line<F> l = Line<F>::through(p, q);
            const auto& inner = cw[(i + 2) % cw.size()];
            int side = sign(signed_offset(l, inner));
            hs.push_back({l, make_sense(side, open)});
        }
        return from(std::move(hs));
    }

    bool empty() const { return empty_; }
    bool bounded() const { return bounded_; }
    const std::vector<HalfPlane<F>>& constraints() const { return hs_; }
    const std::vector<Point2<F>>& vertices() const {
        if (!bounded_) throw UnboundedRegion();
        return verts_;
    }

    // Vertices of the region, also for unbounded regions (clockwise, possibly none).
    const std::vector<Point2<F>>& finite_vertices() const { return corners_; }

    // Sup norm of the farthest finite vertex; 0 when there is none.
    F extent() const {
        F e{0};
        for (const auto& p : corners_) e = max_value(e, norm_inf(p));
        return e;
    }

    Location locate(const Point2<F>& p) const {
        if (empty_) return Location::outside;
        bool on_boundary = false;
        for (const auto& h : hs_) {
            int s = sign(h.oriented(p));
            if (s < 0) return Location::outside;
            if (s == 0) on_boundary = true;
        }
        return on_boundary ? Location::boundary : Location::interior;
    }

    // The closure of the region cut down to a box, clockwise.
    std::vector<Point2<F>> clipped(const Box<F>& box) const {
        if (empty_) return {};
        std::vector<Point2<F>> poly = box.corners();
        for (const auto& h : hs_) {
            poly = clip_polygon(poly, h);
            if (poly.size() < 3) return {};
        }
        return poly;
    }

    ConvexRegion translated(const Vec2<F>& v) const {
        if (empty_) return *this;
        std::vector<HalfPlane<F>> hs;
        for (const auto& h : hs_) hs.push_back(translate(h, v));
        return from(std::move(hs));
    }

    ConvexRegion closure() const {
        if (empty_) return *this;
        std::vector<HalfPlane<F>> hs;
        for (const auto& h : hs_) hs.push_back(h.closure());
        return from(std::move(hs));
    }

    ConvexRegion interior() const {
        if (empty_) return *this;
        std::vector<HalfPlane<F>> hs;
        for (const auto& h : hs_) hs.push_back(h.interior());
        return from(std::move(hs));
    }

    friend bool operator==(const ConvexRegion& r, const ConvexRegion& s) {
        return r.empty_ == s.empty_ && r.hs_ == s.hs_;
    }

private:
    static bool constraint_less(const HalfPlane<F>& u, const HalfPlane<F>& v) {
        const auto& l = u.line;
        const auto& m = v.line;
        if (l.a() != m.a()) return l.a() < m.a();
        if (l.b() != m.b()) return l.b() < m.b();
        if (l.c() != m.c()) return l.c() < m.c();
        return static_cast<int>(u.sense) < static_cast<int>(v.sense);
    }

    void reduce(std::vector<HalfPlane<F>> hs) {
        hs_.clear();
        verts_.clear();
        corners_.clear();
        empty_ = false;
        bounded_ = false;
        if (hs.empty()) return;

        // Merge constraints on the same line.
        std::sort(hs.begin(), hs.end(), constraint_less);
        std::vector<HalfPlane<F>> merged;
        for (const auto& h : hs) {
            if (!merged.empty() && merged.back().line == h.line) {
                auto& g = merged.back();
                if (side_of(g.sense) == side_of(h.sense)) {
                    if (is_strict(h.sense)) g.sense = h.sense;
                    continue;
                }
                // Opposite sides of one line: no interior.
                *this = empty_region();
                return;
            }
            merged.push_back(h);
        }

        // A box strictly containing every vertex of the line arrangement.
        F m{1};
        for (const auto& h : merged) {
            const Line<F>& l = h.line;
            Point2<F> on = sign(l.a()) != 0 ? Point2<F>{F(l.c() / l.a()), F(0)} : Point2<F>{F(0), F(l.c() / l.b())};
            m = max_value(m, norm_inf(on));
        }
        for (std::size_t i = 0; i < merged.size(); ++i)
            for (std::size_t j = i + 1; j < merged.size(); ++j)
                if (auto p = intersect_lines(merged[i].line, merged[j].line)) m = max_value(m, norm_inf(*p));
        F big = F(2 * m + 1);
        Box<F> box = Box<F>::centered(big);

        std::vector<Point2<F>> poly = box.corners();
        for (const auto& h : merged) {
            poly = clip_polygon(poly, h);
            if (poly.size() < 3) break;
        }
        if (poly.size() < 3 || sign(signed_area(poly)) == 0) {
            *this = empty_region();
            return;
        }

        // Keep only constraints that support an edge of the clipped polygon.
        for (const auto& h : merged) {
            int on = 0;
            for (const auto& p : poly)
                if (sign(signed_offset(h.line, p)) == 0) ++on;
            if (on >= 2) hs_.push_back(h);
        }

        bounded_ = true;
        for (const auto& p : poly) {
            if (abs_value(p.x) == big || abs_value(p.y) == big)
                bounded_ = false;
            else
                corners_.push_back(p);
        }
        if (bounded_) verts_ = std::move(poly);
    }

    std::vector<HalfPlane<F>> hs_;
    std::vector<Point2<F>> verts_;
    std::vector<Point2<F>> corners_;
    bool empty_ = false;
    bool bounded_ = false;
};

template <ordered_field F>
ConvexRegion<F> region_intersect(const ConvexRegion<F>& r, const ConvexRegion<F>& s) {
    if (r.empty() || s.empty()) return ConvexRegion<F>::empty_region();
    std::vector<HalfPlane<F>> hs = r.constraints();
    hs.insert(hs.end(), s.constraints().begin(), s.constraints().end());
    return ConvexRegion<F>::from(std::move(hs));
}

template <ordered_field F>
F region_area(const ConvexRegion<F>& r) {
    if (r.empty()) return F(0);
    if (!r.bounded()) throw UnboundedRegion();
    return abs_value(signed_area(r.vertices()));
}

template <ordered_field F>
Location region_contains(const ConvexRegion<F>& r, const Point2<F>& p) {
    return r.locate(p);
}

// Closed slab between two parallel lines given by offsets 0 and w along l.
template <ordered_field F>
ConvexRegion<F> slab(const Line<F>& l, const F& w, bool open = false) {
    Line<F> far(l.a(), l.b(), F(l.c() + w));
    int s = sign(w);
    return ConvexRegion<F>::from({{l, make_sense(s, open)}, {far, make_sense(-s, open)}});
}

template <ordered_field F>
F triangle_twice_area(const Point2<F>& a, const Point2<F>& b, const Point2<F>& c) {
    return abs_value(cross(b - a, c - a));
}

// Rational points strictly inside a convex polygon (clockwise or not), by fan
// triangulation, area-weighted triangle choice and positive barycentric weights.
template <ordered_field F>
std::vector<Point2<F>> sample_polygon(const std::vector<Point2<F>>& poly, std::size_t count, Rng rng) {
    if (poly.size() < 3) throw EmptyRegion();
    std::vector<F> cum;
    F total{0};
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        total += triangle_twice_area(poly[0], poly[i], poly[i + 1]);
        cum.push_back(total);
    }
    if (sign(total) == 0) throw EmptyRegion();
    constexpr std::uint64_t lattice = 1u << 20;
    std::vector<Point2<F>> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        F u = total * F(make_rational(Integer(static_cast<unsigned long>(rng.below(lattice))), Integer(static_cast<unsigned long>(lattice))));
        std::size_t t = 0;
        while (t + 1 < cum.size() && !(u < cum[t])) ++t;
        const auto& a = poly[0];
        const auto& b = poly[t + 1];
        const auto& c = poly[t + 2];
        F wa(static_cast<long>(1 + rng.below(lattice)));
        F wb(static_cast<long>(1 + rng.below(lattice)));
        F wc(static_cast<long>(1 + rng.below(lattice)));
        F sum = wa + wb + wc;
        out.push_back({F((wa * a.x + wb * b.x + wc * c.x) / sum), F((wa * a.y + wb * b.y + wc * c.y) / sum)});
    }
    return out;
}

template <ordered_field F>
std::vector<Point2<F>> region_sample_points(const ConvexRegion<F>& r, std::size_t count, std::uint64_t seed,
                                            const std::optional<Box<F>>& clip = std::nullopt) {
    if (r.empty()) throw EmptyRegion();
    std::vector<Point2<F>> poly;
    if (r.bounded()) {
        poly = r.vertices();
    } else {
        if (!clip) throw UnboundedRegion();
        poly = r.clipped(*clip);
        if (poly.size() < 3 || sign(signed_area(poly)) == 0) throw EmptyRegion();
    }
    return sample_polygon(poly, count, Rng(seed));
}

}  // namespace pinwheel
