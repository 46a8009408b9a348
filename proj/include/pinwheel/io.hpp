#pragma once

// JSON for scalars, polygon files and reports. Scalars are a JSON integer, a
// string "p" or "p/q", or {"a": .., "b": .., "d": n} for a + b sqrt(d).

#include "quasi.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace pinwheel {

using json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "pinwheel.report/1";

inline json rational_to_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

inline json scalar_to_json(const Rational& q) { return rational_to_json(q); }

inline json scalar_to_json(const QuadExt& x) {
    if (x.is_rational()) return rational_to_json(x.a());
    return json{{"a", rational_to_json(x.a())}, {"b", rational_to_json(x.b())}, {"d", x.d()}};
}

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>()), 10));
        return Rational(Integer(std::to_string(j.get<std::int64_t>()), 10));
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float()) throw ScalarParseError("floating-point literal " + j.dump() + "; quote it as a string");
    throw ScalarParseError("expected a scalar, got " + j.dump());
}

// `d` is the radicand of the file's field, 0 for rational files.
template <ordered_field F>
F scalar_from_json(const json& j, long d = 0) {
    if (j.is_object()) {
        if (!j.contains("a") || !j.contains("b") || !j.contains("d"))
            throw ScalarParseError("quadratic scalar needs a, b and d: " + j.dump());
        long jd = j.at("d").get<long>();
        Rational a = rational_from_json(j.at("a")), b = rational_from_json(j.at("b"));
        if constexpr (std::is_same_v<F, Rational>) {
            if (b != 0) throw FieldMismatch("irrational scalar in a rational file: " + j.dump());
            return a;
        } else {
            if (b != 0 && jd != d) throw FieldMismatch("scalar over sqrt(" + std::to_string(jd) + ") in a sqrt(" +
                                                       std::to_string(d) + ") file");
            return QuadExt(a, b, jd);
        }
    }
    return F(rational_from_json(j));
}

struct FieldSpec {
    long d = 0;  // 0: rationals
    bool quadratic() const { return d != 0; }
};

inline FieldSpec parse_field(const json& doc) {
    if (!doc.contains("field")) return {};
    const json& f = doc.at("field");
    if (f.is_string()) {
        if (f.get<std::string>() != "rational")
            throw PolygonError(PolygonErrorKind::parse_error, {}, "unknown field " + f.dump());
        return {};
    }
    if (f.is_object() && f.contains("quad") && f.at("quad").is_number_integer()) {
        long d = f.at("quad").get<long>();
        if (!is_squarefree(d)) throw PolygonError(PolygonErrorKind::parse_error, {}, "radicand must be square-free and > 1");
        return {d};
    }
    throw PolygonError(PolygonErrorKind::parse_error, {}, "bad field " + f.dump());
}

inline json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw PolygonError(PolygonErrorKind::parse_error, {}, std::string("malformed JSON: ") + e.what());
    }
}

inline json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PolygonError(PolygonErrorKind::parse_error, {}, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

template <ordered_field F>
NicePolygon<F> parse_polygon(const json& doc, bool* reoriented = nullptr) {
    FieldSpec field = parse_field(doc);
    if constexpr (std::is_same_v<F, Rational>) {
        if (field.quadratic()) throw FieldMismatch("file declares Q(sqrt " + std::to_string(field.d) + "), rationals requested");
    }
    if (!doc.contains("vertices") || !doc.at("vertices").is_array())
        throw PolygonError(PolygonErrorKind::parse_error, {}, "missing vertex array");
    std::vector<Point2<F>> vs;
    const json& arr = doc.at("vertices");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& v = arr[i];
        if (!v.is_array() || v.size() != 2)
            throw PolygonError(PolygonErrorKind::parse_error, {i}, "vertex is not a pair");
        try {
            vs.push_back({scalar_from_json<F>(v[0], field.d), scalar_from_json<F>(v[1], field.d)});
        } catch (const ScalarParseError& e) {
            throw PolygonError(PolygonErrorKind::parse_error, {i}, e.what());
        }
    }
    return NicePolygon<F>::from_vertices(std::move(vs), reoriented);
}

template <ordered_field F>
json polygon_to_json(const NicePolygon<F>& poly) {
    json doc;
    long d = 0;
    if constexpr (std::is_same_v<F, QuadExt>)
        for (const auto& p : poly.vertices())
            for (const auto* c : {&p.x, &p.y})
                if (!c->is_rational()) d = c->d();
    doc["field"] = d ? json{{"quad", d}} : json("rational");
    json vs = json::array();
    for (const auto& p : poly.vertices()) vs.push_back({scalar_to_json(p.x), scalar_to_json(p.y)});
    doc["vertices"] = vs;
    return doc;
}

template <ordered_field F>
json point_to_json(const Point2<F>& p) { return json::array({scalar_to_json(p.x), scalar_to_json(p.y)}); }

template <ordered_field F>
json vec_to_json(const Vec2<F>& v) { return json::array({scalar_to_json(v.x), scalar_to_json(v.y)}); }

// "x,y" with each coordinate in the rational syntax.
template <ordered_field F>
Point2<F> parse_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ScalarParseError("point must be 'x,y': " + s);
    return {F(parse_rational(s.substr(0, comma))), F(parse_rational(s.substr(comma + 1)))};
}

inline json label_to_json(const TileLabel& l) { return json::array({l.v + 1, l.w + 1}); }

template <ordered_field F>
json system_to_json(const PinwheelSystem<F>& sys) {
    json strips = json::array(), spokes = json::array();
    for (const auto& pr : sys.pairs())
        strips.push_back({{"index", pr.index},
                          {"edge", pr.edge + 1},
                          {"line", {scalar_to_json(pr.L.a()), scalar_to_json(pr.L.b()), scalar_to_json(pr.L.c())}},
                          {"width_offset", scalar_to_json(pr.width_offset)},
                          {"V", vec_to_json(pr.V)}});
    for (const auto& s : sys.spokes())
        spokes.push_back({{"index", s.index}, {"tail", s.tail + 1}, {"head", s.head + 1}, {"special", s.special}});
    return {{"strips", strips}, {"spokes", spokes}};
}

template <ordered_field F>
json partition_to_json(const Partition<F>& part, long n) {
    json tiles = json::array();
    for (const auto& t : part.tiles()) {
        json verts = json::array();
        for (const auto& v : t.region.finite_vertices()) verts.push_back(point_to_json(v));
        json tile{{"label", label_to_json(t.label)},
                  {"bounded", t.bounded},
                  {"translation", vec_to_json(t.translation)},
                  {"vertices", verts}};
        if (t.path_a) tile["path"] = std::to_string(wrap_index(t.path_a, n)) + "->" + std::to_string(wrap_index(t.path_b, n));
        tiles.push_back(tile);
    }
    return {{"chirality", part.chirality() == Chirality::right ? "forward" : "backward"},
            {"bounded", part.bounded_count()},
            {"unbounded", part.unbounded_count()},
            {"tiles", tiles}};
}

template <ordered_field F>
json paths_to_json(const PathSet<F>& ps, long n) {
    json out = json::array();
    for (const auto& p : ps.paths()) {
        json inv = json::array(), W = json::array();
        for (long i : p.involved) inv.push_back(wrap_index(i, n));
        for (const auto& w : p.W) W.push_back(vec_to_json(w));
        out.push_back({{"name", p.name(n)}, {"v", p.v + 1}, {"w", p.w + 1}, {"spokes", inv}, {"W", W}});
    }
    return out;
}

// Runtimes are left out unless asked for, so reports are byte-stable.
inline json report_to_json(const CheckReport& r, bool with_runtime = false) {
    json viol = json::array();
    for (const auto& v : r.violations)
        viol.push_back({{"index", v.index}, {"input", v.input}, {"expected", v.expected}, {"actual", v.actual}});
    json facts = json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    json out{{"check", r.name},
             {"passed", r.passed()},
             {"seed", r.seed},
             {"attempted", r.attempted},
             {"valid", r.valid},
             {"wall_skipped", r.wall_skipped},
             {"violation_count", r.violation_count()},
             {"violations", viol},
             {"facts", facts}};
    if (with_runtime) out["runtime_ms"] = r.runtime_ms;
    return out;
}

template <ordered_field F>
json orbit_to_json(const OrbitRecord<F>& rec, long n) {
    json entries = json::array();
    for (const auto& e : rec.entries) {
        json j{{"step", e.step}, {"p", point_to_json(e.p)}, {"event", to_string(e.event)}};
        if (e.k) j["k"] = wrap_index(e.k, n);
        if (e.label) j["tile"] = label_to_json(*e.label);
        if (e.inner_steps != 1) j["inner_steps"] = e.inner_steps;
        entries.push_back(j);
    }
    json out{{"map", to_string(rec.map)}, {"end", to_string(rec.end)}, {"entries", entries}};
    if (!rec.end_detail.empty()) out["end_detail"] = rec.end_detail;
    return out;
}

template <ordered_field F>
json quasi_to_json(const QuasiData<F>& q) {
    json areas = json::array(), dj = json::array();
    for (const auto& a : q.areas) areas.push_back(scalar_to_json(a));
    for (const auto& d : q.D_j) dj.push_back(rational_to_json(Rational(d)));
    json out{{"areas", areas}, {"quasirational", q.quasirational}};
    if (q.D) out["D"] = scalar_to_json(*q.D);
    if (q.quasirational) out["D_j"] = dj;
    return out;
}

inline json envelope(const std::string& kind) { return json{{"schema", report_schema}, {"kind", kind}}; }

}  // namespace pinwheel
