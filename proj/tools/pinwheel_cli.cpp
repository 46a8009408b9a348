// pinwheel: outer billiards and the pinwheel map on nice polygons.
//
// Exit status: 0 pass, 1 verification violation (or invalid polygon for
// `validate`), 2 input error, 3 undefined point.

#include "pinwheel/pinwheel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>

using namespace pinwheel;

namespace {

namespace Exit {
constexpr int ok = 0, violation = 1, input_error = 2, undefined_point = 3;
}

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail(int code, const std::string& kind, const std::string& message) {
    json j = envelope("error");
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump(2) << "\n";
    return code;
}

// Runs `body` with the scalar field the file declares.
template <typename Body>
int with_polygon(const std::string& path, Body&& body) {
    json doc = read_document(path);
    FieldSpec field = parse_field(doc);
    bool reoriented = false;
    if (field.quadratic()) return body(parse_polygon<QuadExt>(doc, &reoriented), reoriented);
    return body(parse_polygon<Rational>(doc, &reoriented), reoriented);
}

int cmd_validate(const std::string& path) {
    json doc = read_document(path);
    FieldSpec field = parse_field(doc);
    json out = envelope("validate");
    auto report = [&](auto tag) {
        using F = decltype(tag);
        bool reoriented = false;
        try {
            NicePolygon<F> poly = parse_polygon<F>(doc, &reoriented);
            PinwheelSystem<F> sys(poly);
            out["valid"] = true;
            out["reoriented"] = reoriented;
            out["n"] = poly.size();
            out["polygon"] = polygon_to_json(poly);
            out["system"] = system_to_json(sys);
            emit(out);
            return Exit::ok;
        } catch (const PolygonError& e) {
            if (e.kind == PolygonErrorKind::parse_error) throw;
            out["valid"] = false;
            out["error"] = to_string(e.kind);
            json idx = json::array();
            for (auto i : e.indices) idx.push_back(i + 1);
            out["indices"] = idx;
            out["message"] = e.what();
            emit(out);
            return Exit::violation;
        }
    };
    return field.quadratic() ? report(QuadExt{}) : report(Rational{});
}

int cmd_partition(const std::string& path, const std::string& svg, const std::string& json_out, bool backward) {
    return with_polygon(path, [&](auto poly, bool) {
        using F = typename decltype(poly)::Scalar;
        Model<F> m(poly);
        json full = envelope("partition");
        full["polygon"] = polygon_to_json(m.poly);
        full["forward"] = partition_to_json(m.forward, m.n());
        full["paths"] = paths_to_json(m.paths, m.n());
        if (backward) full["backward"] = partition_to_json(backward_partition(m.poly), m.n());
        json summary = envelope("partition");
        summary["n"] = m.n();
        summary["bounded_tiles"] = m.forward.bounded_count();
        summary["unbounded_tiles"] = m.forward.unbounded_count();
        summary["paths"] = m.paths.paths().size();
        summary["unlinked_tiles"] = m.unlinked;
        if (!json_out.empty()) write_file(json_out, full.dump(2) + "\n");
        if (!svg.empty()) write_file(svg, partition_scene(m).render());
        emit(json_out.empty() ? full : summary);
        return Exit::ok;
    });
}

int cmd_classify(const std::string& path, const std::string& point) {
    return with_polygon(path, [&](auto poly, bool) {
        using F = typename decltype(poly)::Scalar;
        Model<F> m(poly);
        Point2<F> p = parse_point<F>(point);
        json out = envelope("classify");
        out["point"] = point_to_json(p);
        try {
            const Tile<F>& t = m.tile_of(p);
            out["tile"] = label_to_json(t.label);
            out["bounded"] = t.bounded;
            out["translation"] = vec_to_json(t.translation);
            out["image"] = point_to_json(p + t.translation);
            if (t.path_a) out["path"] = m.path_of(t).name(m.n());
        } catch (const UndefinedPoint& e) {
            return fail(Exit::undefined_point, "UndefinedPoint", e.what());
        }
        emit(out);
        return Exit::ok;
    });
}

OrbitMap parse_map(const std::string& s) {
    if (s == "psi") return OrbitMap::psi;
    if (s == "psistar") return OrbitMap::psi_star;
    if (s == "exit") return OrbitMap::exit;
    if (s == "return") return OrbitMap::strip_return;
    if (s == "first-return") return OrbitMap::first_return;
    throw InputError("unknown map '" + s + "'");
}

int cmd_orbit(const std::string& path, const std::string& point, const std::string& map, long steps,
              const std::string& escape, long index, const std::string& svg) {
    return with_polygon(path, [&](auto poly, bool) {
        using F = typename decltype(poly)::Scalar;
        Model<F> m(poly);
        Point2<F> p = parse_point<F>(point);
        std::optional<F> esc;
        if (!escape.empty()) esc = F(parse_rational(escape));
        OrbitRecord<F> rec = orbit(m, p, parse_map(map), steps, esc, index);
        json out = envelope("orbit");
        out["orbit"] = orbit_to_json(rec, m.n());
        if (!svg.empty()) write_file(svg, orbit_scene(m, rec).render());
        emit(out);
        if (rec.end == OrbitEvent::undefined && rec.entries.size() == 1) return Exit::undefined_point;
        return Exit::ok;
    });
}

template <ordered_field F>
json verify_one(const NicePolygon<F>& poly, const SuiteOptions& opt, bool controls, bool& passed) {
    Model<F> m(poly);
    std::vector<CheckReport> rs = run_all(m, opt);
    json reports = json::array();
    for (const auto& r : rs) {
        reports.push_back(report_to_json(r));
        passed = passed && r.passed();
    }
    json out{{"polygon", polygon_to_json(poly)}, {"reports", reports}};
    if (controls) {
        // Each control must fail; a passing control is a harness defect.
        json cs = json::array();
        std::size_t s = opt.samples ? opt.samples : default_samples(opt.profile);
        for (const auto& r : {control_halved_strip(m, s, opt.seed), control_flipped_last_step(m, 8, opt.seed)}) {
            cs.push_back({{"check", r.name}, {"detected", !r.passed()}, {"violation_count", r.violation_count()}});
            passed = passed && !r.passed();
        }
        out["controls"] = cs;
    }
    return out;
}

std::map<std::string, long> parse_pairs(const std::vector<std::string>& items) {
    std::map<std::string, long> out;
    for (const auto& s : items) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw InputError("expected key=value, got '" + s + "'");
        try {
            out[s.substr(0, eq)] = std::stol(s.substr(eq + 1));
        } catch (const std::exception&) {
            throw InputError("bad number in '" + s + "'");
        }
    }
    return out;
}

int cmd_verify(const std::string& path, const std::vector<std::string>& random, const std::string& profile,
               std::uint64_t seed, std::size_t samples, bool controls) {
    SuiteOptions opt;
    if (profile == "quick") opt.profile = Profile::quick;
    else if (profile == "full") opt.profile = Profile::full;
    else throw InputError("profile must be quick or full");
    opt.seed = seed;
    opt.samples = samples;
    json out = envelope("verify");
    json polys = json::array();
    bool passed = true;
    if (!random.empty()) {
        auto kv = parse_pairs(random);
        long n = kv.count("n") ? kv["n"] : 5, count = kv.count("count") ? kv["count"] : 1;
        if (n < 3 || n > 12) throw InputError("n must be in 3..12");
        if (count < 1) throw InputError("count must be positive");
        std::vector<std::future<std::pair<json, bool>>> jobs;
        for (long i = 0; i < count; ++i)
            jobs.push_back(std::async(std::launch::async, [=] {
                bool ok = true;
                json j = verify_one(random_nice_polygon(static_cast<int>(n), seed + static_cast<std::uint64_t>(i)), opt,
                                    controls, ok);
                return std::make_pair(j, ok);
            }));
        for (auto& j : jobs) {
            auto [doc, ok] = j.get();
            polys.push_back(doc);
            passed = passed && ok;
        }
        out["random"] = {{"n", n}, {"count", count}};
    } else {
        if (path.empty()) throw InputError("verify needs a polygon file or --random");
        with_polygon(path, [&](auto poly, bool) {
            polys.push_back(verify_one(poly, opt, controls, passed));
            return 0;
        });
    }
    out["profile"] = profile;
    out["seed"] = seed;
    out["polygons"] = polys;
    out["passed"] = passed;
    emit(out);
    return passed ? Exit::ok : Exit::violation;
}

int cmd_quasi(const std::string& path, long mult, const std::string& certify, std::size_t samples, std::uint64_t seed,
              long steps) {
    return with_polygon(path, [&](auto poly, bool) {
        using F = typename decltype(poly)::Scalar;
        Model<F> m(poly);
        QuasiData<F> q = quasi_analyze(m.sys);
        json out = envelope("quasi");
        out["quasi"] = quasi_to_json(q);
        bool passed = true;
        if (q.quasirational && mult > 0) {
            CheckReport r = check_necklace_invariance(m, mult, samples, seed);
            out["necklace"] = report_to_json(r);
            passed = r.passed();
        }
        if (!certify.empty()) {
            if (!q.quasirational) return fail(Exit::input_error, "NotQuasirational", "polygon is not quasirational");
            Point2<F> p = parse_point<F>(certify);
            try {
                Certificate<F> c = mult > 0 ? boundedness_certificate(m, p, mult) : find_certificate(m, p);
                json cj{{"bounded", c.bounded}, {"m", c.m}, {"strip", c.strip}, {"side", c.side},
                        {"radius", scalar_to_json(c.radius)}};
                if (steps > 0) {
                    OrbitRecord<F> rec = orbit(m, p, OrbitMap::psi, steps);
                    F seen{0};
                    for (const auto& e : rec.entries) seen = max_value(seen, norm_inf(e.p));
                    bool inside = !(c.radius < seen);
                    cj["orbit_steps"] = rec.entries.size() - 1;
                    cj["orbit_end"] = to_string(rec.end);
                    cj["orbit_max_norm"] = scalar_to_json(seen);
                    cj["orbit_inside"] = inside;
                    passed = passed && inside;
                }
                out["certificate"] = cj;
            } catch (const AnnulusNotFound& e) {
                return fail(Exit::input_error, "AnnulusNotFound", e.what());
            }
        }
        out["passed"] = passed;
        emit(out);
        return passed ? Exit::ok : Exit::violation;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Outer billiards and the pinwheel map on nice polygons"};
    app.require_subcommand(1);

    std::string file, svg, json_out, point, map = "psi", escape, profile = "quick", certify;
    long steps = 100, index = 0, mult = 0, orbit_steps = 0;
    std::uint64_t seed = 1;
    std::size_t samples = 0;
    bool backward = false, controls = false;
    std::vector<std::string> random;

    auto* validate = app.add_subcommand("validate", "Check a polygon file and print its pinwheel system");
    validate->add_option("polygon", file, "polygon file")->required();

    auto* partition = app.add_subcommand("partition", "Forward partition with path ids");
    partition->add_option("polygon", file, "polygon file")->required();
    partition->add_option("--svg", svg, "write an SVG rendering");
    partition->add_option("--json", json_out, "write the full partition as JSON");
    partition->add_flag("--backward", backward, "include the backward partition");

    auto* classify = app.add_subcommand("classify", "Tile, path and translation of a point");
    classify->add_option("polygon", file, "polygon file")->required();
    classify->add_option("--point", point, "x,y")->required();

    auto* orbit_cmd = app.add_subcommand("orbit", "Iterate psi, the pinwheel map or a return map");
    orbit_cmd->add_option("polygon", file, "polygon file")->required();
    orbit_cmd->add_option("--point", point, "x,y")->required();
    orbit_cmd->add_option("--map", map, "psi | psistar | exit | return | first-return");
    orbit_cmd->add_option("--steps", steps, "number of map applications")->check(CLI::NonNegativeNumber);
    orbit_cmd->add_option("--escape", escape, "stop once the sup norm exceeds this radius");
    orbit_cmd->add_option("--index", index, "starting strip index for psistar and return");
    orbit_cmd->add_option("--svg", svg, "write the trace as SVG");

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("polygon", file, "polygon file");
    verify->add_option("--random", random, "n=K count=M")->expected(1, 2);
    verify->add_option("--profile", profile, "quick | full");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--samples", samples, "samples per check (0: profile default)");
    verify->add_flag("--controls", controls, "also run the negative controls, which must fail");

    auto* quasi = app.add_subcommand("quasi", "Areas A_j, integers D_j, necklaces and certificates");
    quasi->add_option("polygon", file, "polygon file")->required();
    quasi->add_option("--m", mult, "necklace multiple for the invariance check")->check(CLI::NonNegativeNumber);
    quasi->add_option("--certify", certify, "x,y to certify");
    quasi->add_option("--orbit-steps", orbit_steps, "confirm the certificate with this many psi steps");
    quasi->add_option("--samples", samples, "samples per strip");
    quasi->add_option("--seed", seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), Exit::input_error);
    }

    try {
        if (*validate) return cmd_validate(file);
        if (*partition) return cmd_partition(file, svg, json_out, backward);
        if (*classify) return cmd_classify(file, point);
        if (*orbit_cmd) return cmd_orbit(file, point, map, steps, escape, index, svg);
        if (*verify) return cmd_verify(file, random, profile, seed, samples, controls);
        if (*quasi) return cmd_quasi(file, mult, certify, samples ? samples : 100, seed, orbit_steps);
    } catch (const UndefinedPoint& e) {
        return fail(Exit::undefined_point, "UndefinedPoint", e.what());
    } catch (const OnStripBoundary& e) {
        return fail(Exit::undefined_point, "OnStripBoundary", e.what());
    } catch (const PolygonError& e) {
        return fail(Exit::input_error, to_string(e.kind), e.what());
    } catch (const FieldMismatch& e) {
        return fail(Exit::input_error, "FieldMismatch", e.what());
    } catch (const ScalarParseError& e) {
        return fail(Exit::input_error, "ParseError", e.what());
    } catch (const InputError& e) {
        return fail(Exit::input_error, "InputError", e.what());
    } catch (const GenerationFailed& e) {
        return fail(Exit::input_error, "GenerationFailed", e.what());
    } catch (const EmptyScene& e) {
        return fail(Exit::input_error, "EmptyScene", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(Exit::input_error, "InputError", e.what());
    }
    return Exit::input_error;
}
