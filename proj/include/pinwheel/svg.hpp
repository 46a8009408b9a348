#pragma once

// Deterministic SVG scenes. Geometry stays exact until the final write; floats
// appear only in the output text.

#include "quasi.hpp"

#include <cstdio>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace pinwheel {

struct EmptyScene : std::runtime_error {
    EmptyScene() : std::runtime_error("nothing to render") {}
};

struct SvgStyle {
    std::string fill = "none";
    std::string stroke = "#000000";
    double stroke_width = 1;  // in pixels, independent of the viewport scale
    double opacity = 1;
};

inline std::string svg_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0 ? 0.0 : x);  // no "-0"
    return buf;
}

// Fixed palette, indexed cyclically.
inline std::string palette(std::size_t i) {
    static const char* colors[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
                                   "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295"};
    return colors[i % (sizeof colors / sizeof *colors)];
}

template <ordered_field F>
class Scene {
public:
    struct Shape {
        std::string id;
        std::variant<ConvexRegion<F>, std::vector<Point2<F>>> geom;  // region, or an open polyline
        SvgStyle style;
        bool markers = false;  // dots at polyline vertices
    };

    void set_viewport(const Box<F>& b) { viewport_ = b; }
    const std::optional<Box<F>>& viewport() const { return viewport_; }
    void set_margin(const F& m) { margin_ = m; }

    void add_region(std::string id, ConvexRegion<F> r, SvgStyle s) {
        grow(r);
        shapes_.push_back({std::move(id), std::move(r), std::move(s)});
    }

    void add_polygon(std::string id, const std::vector<Point2<F>>& cw, SvgStyle s) {
        add_region(std::move(id), ConvexRegion<F>::from_polygon(cw, false), std::move(s));
    }

    void add_polyline(std::string id, std::vector<Point2<F>> pts, SvgStyle s, bool markers = true) {
        for (const auto& p : pts) extend(norm_inf(p));
        shapes_.push_back({std::move(id), std::move(pts), std::move(s), markers});
    }

    void add_strip(const PinwheelPair<F>& pr, SvgStyle s) {
        extend(abs_value(pr.width_offset));
        shapes_.push_back({"strip-" + std::to_string(pr.index), pr.strip(), std::move(s)});
    }

    void add_partition(const Partition<F>& part, const std::string& prefix = "tile") {
        std::size_t i = 0;
        for (const auto& t : part.tiles()) {
            std::string id = prefix + "-" + std::to_string(t.label.v + 1) + "-" + std::to_string(t.label.w + 1);
            add_region(id, t.region, {palette(i++), "#333333", 0.5, t.bounded ? 0.8 : 0.45});
        }
    }

    void add_necklace(const NecklaceSpec<F>& s) {
        std::string id = "necklace-" + std::to_string(s.j) + "-" + s.m.get_str();
        add_polygon(id + "-P", s.P, {"#cccccc", "#555555", 0.8, 0.9});
        add_polygon(id + "-Q", s.Q, {"#555555", "#222222", 0.8, 0.9});
    }

    bool empty() const { return shapes_.empty(); }

    // Default viewport: everything finite plus two widths of margin.
    Box<F> effective_viewport() const {
        if (viewport_) return *viewport_;
        F r = F(reach_ + F(2) * margin_);
        if (sign(r) == 0) r = F(1);
        return Box<F>::centered(r);
    }

    std::string render(int pixels = 800) const {
        if (shapes_.empty()) throw EmptyScene();
        Box<F> box = effective_viewport();
        const double x0 = to_double(box.xmin), y1 = to_double(box.ymax);
        const double w = to_double(F(box.xmax - box.xmin)), h = to_double(F(box.ymax - box.ymin));
        const double scale = pixels / std::max(w, h);
        auto X = [&](const F& x) { return svg_number((to_double(x) - x0) * scale); };
        auto Y = [&](const F& y) { return svg_number((y1 - to_double(y)) * scale); };  // y up
        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << svg_number(w * scale)
           << "\" height=\"" << svg_number(h * scale) << "\" viewBox=\"0 0 " << svg_number(w * scale) << " "
           << svg_number(h * scale) << "\">\n";
        for (const auto& s : shapes_) {
            std::string style = "fill=\"" + s.style.fill + "\" stroke=\"" + s.style.stroke + "\" stroke-width=\"" +
                                svg_number(s.style.stroke_width) + "\"";
            if (s.style.opacity != 1) style += " fill-opacity=\"" + svg_number(s.style.opacity) + "\"";
            if (const auto* r = std::get_if<ConvexRegion<F>>(&s.geom)) {
                if (r->empty()) continue;
                std::vector<Point2<F>> poly;
                try {
                    poly = r->clipped(box);
                } catch (const EmptyRegion&) {
                    continue;
                }
                if (poly.size() < 3) continue;
                os << "  <path id=\"" << s.id << "\" d=\"";
                for (std::size_t i = 0; i < poly.size(); ++i)
                    os << (i ? " L " : "M ") << X(poly[i].x) << " " << Y(poly[i].y);
                os << " Z\" " << style << "/>\n";
            } else {
                const auto& pts = std::get<std::vector<Point2<F>>>(s.geom);
                os << "  <g id=\"" << s.id << "\">\n    <polyline points=\"";
                for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << X(pts[i].x) << "," << Y(pts[i].y);
                os << "\" fill=\"none\" stroke=\"" << s.style.stroke << "\" stroke-width=\""
                   << svg_number(s.style.stroke_width) << "\"/>\n";
                if (s.markers)
                    for (const auto& p : pts)
                        if (box.contains(p))
                            os << "    <circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"2\" fill=\""
                               << s.style.stroke << "\"/>\n";
                os << "  </g>\n";
            }
        }
        os << "</svg>\n";
        return os.str();
    }

private:
    void extend(const F& r) { reach_ = max_value(reach_, r); }
    void grow(const ConvexRegion<F>& r) {
        if (r.empty()) return;
        if (r.bounded()) {
            for (const auto& v : r.vertices()) extend(norm_inf(v));
        } else {
            extend(r.extent());
        }
    }

    std::vector<Shape> shapes_;
    std::optional<Box<F>> viewport_;
    F reach_{0};
    F margin_{0};
};

// Polygon, strips and forward partition, with the default margin of two strip widths.
template <ordered_field F>
Scene<F> partition_scene(const Model<F>& m) {
    Scene<F> s;
    F width{0};
    for (const auto& pr : m.sys.pairs()) width = max_value(width, norm_inf(pr.V));
    s.set_margin(width);
    s.add_partition(m.forward);
    s.add_polygon("polygon", m.poly.vertices(), {"#ffffff", "#000000", 1.5, 1});
    return s;
}

template <ordered_field F>
Scene<F> orbit_scene(const Model<F>& m, const OrbitRecord<F>& rec) {
    Scene<F> s;
    F width{0};
    for (const auto& pr : m.sys.pairs()) width = max_value(width, norm_inf(pr.V));
    s.set_margin(width);
    s.add_polygon("polygon", m.poly.vertices(), {"#dddddd", "#000000", 1.5, 1});
    std::vector<Point2<F>> pts;
    for (const auto& e : rec.entries) pts.push_back(e.p);
    s.add_polyline("orbit", pts, {"none", "#c0392b", 0.75, 1});
    return s;
}

}  // namespace pinwheel
