// hyperbridge: command-line front end for the hyperdeterminant / elliptic
// curve library. Machine output is JSON on stdout; diagnostics go to stderr
// as {"error": KIND, "message": ...}.
//
// Exit codes: 0 success, 1 domain error, 2 usage or malformed input (including
// a trilinear system with non-integer coefficients).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperbridge/bridge.hpp"
#include "hyperbridge/elliptic.hpp"
#include "hyperbridge/error.hpp"
#include "hyperbridge/invariants.hpp"
#include "hyperbridge/io.hpp"
#include "hyperbridge/selftest.hpp"
#include "hyperbridge/trilinear.hpp"

namespace hb = hyperbridge;
using nlohmann::json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) {
            throw UsageError("cannot open " + path);
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

hb::Rational rational_arg(const std::string& text) { return hb::Rational::parse(text); }

/// "x,y" or "O".
hb::CurvePoint point_arg(const std::string& text) {
    if (text == "O") {
        return hb::CurvePoint::infinity();
    }
    const auto parts = split(text, ',');
    if (parts.size() != 2) {
        throw UsageError("point must be \"x,y\" or \"O\", got '" + text + "'");
    }
    return {rational_arg(parts[0]), rational_arg(parts[1])};
}

hb::Vector2 vector_arg(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) {
        throw UsageError("vector must be \"a,b\", got '" + text + "'");
    }
    return {rational_arg(parts[0]), rational_arg(parts[1])};
}

hb::CubicCurve cubic_arg(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) {
        throw UsageError("cubic must be \"a,b,c,d\", got '" + text + "'");
    }
    return hb::CubicCurve(rational_arg(parts[0]), rational_arg(parts[1]), rational_arg(parts[2]),
                          rational_arg(parts[3]));
}

void emit(const json& payload) { std::cout << payload.dump(2) << '\n'; }

json cube_assignment_json(const hb::CubeAssignment& assignment) {
    json corners = json::object();
    constexpr std::string_view letters = "abcdefgh";
    for (std::size_t c = 0; c < 8; ++c) {
        corners[std::string(1, letters[c])] =
            std::string(hb::kSymbolNames[static_cast<std::size_t>(assignment.corner_symbol[c])]);
    }
    return {{"corners", corners}, {"sign", assignment.sign}};
}

struct CurveOptions {
    std::string alpha;
    std::string beta;
    std::string cubic;
    std::string p;
    std::string q;
};

hb::WeierstrassCurve weierstrass_from(const CurveOptions& o) {
    if (!o.cubic.empty()) {
        return hb::cubic_to_weierstrass(cubic_arg(o.cubic)).curve;
    }
    if (o.alpha.empty() || o.beta.empty()) {
        throw UsageError("give --alpha and --beta, or --cubic");
    }
    return hb::WeierstrassCurve(rational_arg(o.alpha), rational_arg(o.beta));
}

hb::CubicCurve cubic_from(const CurveOptions& o) {
    if (!o.cubic.empty()) {
        return cubic_arg(o.cubic);
    }
    if (o.alpha.empty() || o.beta.empty()) {
        throw UsageError("give --alpha and --beta, or --cubic");
    }
    return hb::CubicCurve(1, 0, rational_arg(o.alpha), rational_arg(o.beta));
}

int run(int argc, char** argv) {
    CLI::App app{"Exact hyperdeterminant and elliptic-curve toolkit"};
    app.require_subcommand(1);

    std::string file = "-";

    auto* cayley = app.add_subcommand("cayley-det", "Cayley's hyperdeterminant of a [2,2,2] hypermatrix");
    cayley->add_option("file", file, "hypermatrix JSON ('-' for stdin)");

    auto* invariants = app.add_subcommand("invariants", "quartic, S, T, delta and J of a [2,2,2,2] hypermatrix");
    invariants->add_option("file", file, "hypermatrix JSON ('-' for stdin)");

    std::array<std::string, 6> params;
    auto* bridge = app.add_subcommand("bridge", "uv-form and cubic of the bridge family");
    constexpr std::array<const char*, 6> param_flags{"-k", "-m", "-p", "-r", "-s", "-t"};
    for (std::size_t i = 0; i < 6; ++i) {
        bridge->add_option(param_flags[i], params[i])->required()->allow_extra_args(false);
    }

    CurveOptions curve_opts;
    auto* curve = app.add_subcommand("curve", "elliptic-curve operations");
    curve->require_subcommand(1);
    const auto add_curve_opts = [&](CLI::App* sub, bool with_p, bool with_q) {
        sub->add_option("--alpha", curve_opts.alpha, "Weierstrass alpha in y^2 = x^3 + alpha x + beta");
        sub->add_option("--beta", curve_opts.beta, "Weierstrass beta");
        sub->add_option("--cubic", curve_opts.cubic, "\"a,b,c,d\" for y^2 = a x^3 + b x^2 + c x + d");
        if (with_p) {
            sub->add_option("--p", curve_opts.p, "point \"x,y\" or O")->required();
        }
        if (with_q) {
            sub->add_option("--q", curve_opts.q, "point \"x,y\" or O")->required();
        }
    };
    auto* curve_add = curve->add_subcommand("add", "P + Q");
    add_curve_opts(curve_add, true, true);
    auto* curve_double = curve->add_subcommand("double", "2P");
    add_curve_opts(curve_double, true, false);
    auto* curve_torsion = curve->add_subcommand("torsion", "rational 2-torsion points");
    add_curve_opts(curve_torsion, false, false);
    auto* curve_shift = curve->add_subcommand("shift", "translate a point to x = 0");
    add_curve_opts(curve_shift, true, false);
    auto* curve_j = curve->add_subcommand("j", "j-invariant");
    add_curve_opts(curve_j, false, false);

    long bound = 0;
    std::string plant;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    auto* trilinear = app.add_subcommand("trilinear", "bounded search for trilinear solutions");
    trilinear->add_option("file", file, "hypermatrix JSON ('-' for stdin); ignored with --plant");
    trilinear->add_option("--bound", bound, "max |x0|, |x1| of the candidates")->required()->check(CLI::PositiveNumber);
    trilinear->add_option("--plant", plant, "plant a solution \"x0,x1;y0,y1;z0,z1\"");
    trilinear->add_option("--seed", seed, "seed for --plant");
    trilinear->add_option("--threads", threads, "search workers")->check(CLI::PositiveNumber);

    std::uint64_t iterations = 100;
    bool inject_fault = false;
    auto* selftest = app.add_subcommand("selftest", "randomized property suites");
    selftest->add_option("--iterations", iterations, "trials per suite")->check(CLI::PositiveNumber);
    selftest->add_option("--seed", seed, "random seed");
    selftest->add_flag("--inject-fault", inject_fault, "corrupt one comparison (negative control)")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cayley->parsed()) {
        std::cout << hb::cayley_det(hb::io::hypermatrix222_from_json(read_json(file))).str() << '\n';
        return 0;
    }
    if (invariants->parsed()) {
        const auto q = hb::quartic_from_hypermatrix(hb::io::hypermatrix2222_from_json(read_json(file)));
        const auto inv = hb::quartic_invariants(q);
        json out = hb::io::to_json(inv);
        out["quartic"] = hb::io::to_json(q);
        out["J"] = inv.delta.is_zero() ? json(nullptr) : hb::io::to_json(hb::j_invariant(q));
        emit(out);
        return 0;
    }
    if (bridge->parsed()) {
        const hb::BridgeParams bp{rational_arg(params[0]), rational_arg(params[1]), rational_arg(params[2]),
                                  rational_arg(params[3]), rational_arg(params[4]), rational_arg(params[5])};
        const hb::UVCurve uv = hb::params_to_uv(bp);
        const auto& assignment = hb::cube_assignment();
        emit({{"params", hb::io::to_json(bp)},
              {"uv", hb::io::to_json(uv)},
              {"cubic", hb::io::to_json(hb::uv_to_cubic(uv))},
              {"assignment", cube_assignment_json(assignment)},
              {"assignment_verified", hb::assignment_reproduces(assignment, bp)}});
        return 0;
    }
    if (curve->parsed()) {
        if (curve_add->parsed() || curve_double->parsed()) {
            const auto w = weierstrass_from(curve_opts);
            const auto p = point_arg(curve_opts.p);
            const auto q = curve_add->parsed() ? point_arg(curve_opts.q) : p;
            emit({{"curve", hb::io::to_json(w)}, {"result", hb::io::to_json(hb::add_points(w, p, q))}});
        } else if (curve_torsion->parsed()) {
            json points = json::array();
            for (const auto& p : hb::two_torsion(cubic_from(curve_opts))) {
                points.push_back(hb::io::to_json(p));
            }
            emit({{"two_torsion", points}});
        } else if (curve_shift->parsed()) {
            emit({{"cubic", hb::io::to_json(hb::shift_to_origin(cubic_from(curve_opts), point_arg(curve_opts.p)))}});
        } else if (curve_j->parsed()) {
            emit({{"j", hb::io::to_json(hb::weierstrass_j(weierstrass_from(curve_opts)))}});
        }
        return 0;
    }
    if (trilinear->parsed()) {
        std::optional<hb::TrilinearSystem> sys;
        json out;
        if (!plant.empty()) {
            const auto parts = split(plant, ';');
            if (parts.size() != 3) {
                throw UsageError("--plant must be \"x0,x1;y0,y1;z0,z1\"");
            }
            sys.emplace(hb::plant_solution(vector_arg(parts[0]), vector_arg(parts[1]), vector_arg(parts[2]), seed));
            out["seed"] = seed;
        } else {
            sys.emplace(hb::io::hypermatrix2222_from_json(read_json(file)));
        }
        const auto report = hb::search_solutions(*sys, bound, threads);
        out.update(hb::io::to_json(report));
        out["system"] = hb::io::to_json(sys->coefficients());
        emit(out);
        return 0;
    }
    if (selftest->parsed()) {
        const auto summary = hb::run_selftest(iterations, seed, inject_fault);
        json suites = json::object();
        for (const auto& s : summary.suites) {
            suites[s.name] = {{"passed", s.passed}, {"failed", s.failed}};
        }
        emit({{"iterations", summary.iterations}, {"seed", summary.seed}, {"suites", suites}, {"ok", summary.ok()}});
        return summary.ok() ? 0 : kExitDomain;
    }
    return kExitUsage;
}

void report_error(std::string_view kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        report_error("UsageError", e.what());
        return kExitUsage;
    } catch (const hb::Error& e) {
        report_error(hb::to_string(e.kind()), e.what());
        const bool usage = e.kind() == hb::ErrorKind::MalformedInput || e.kind() == hb::ErrorKind::NonIntegerEntry;
        return usage ? kExitUsage : kExitDomain;
    }
}
