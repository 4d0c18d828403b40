// projcong: command-line front end for rotation-congruence analysis of
// convex-body projections. Subcommands: gen, classify, radon, quartic, orbit.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "projcong/body_io.hpp"
#include "projcong/fixtures.hpp"
#include "projcong/quartic.hpp"
#include "projcong/radon.hpp"
#include "projcong/report_io.hpp"
#include "projcong/sphere_analysis.hpp"

namespace {

using namespace projcong;

unsigned worker_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("PROJCONG_THREADS")) {
        const long parsed = std::strtol(cap, nullptr, 10);
        if (parsed >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(parsed));
    }
    return n;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct GenOptions {
    std::string kind;
    int vertices = 30;
    double radius = 1.0;
    double eps = 0.05;
    std::string of_path;
    std::vector<double> axis{0.0, 0.0, 1.0};
    double fraction = 0.0;
    std::uint64_t seed = 0;
    std::string output;
};

int run_gen(const GenOptions& opt) {
    BodyPtr body;
    if (opt.kind == "polytope") {
        Rng rng(opt.seed);
        body = std::make_shared<PolytopeBody>(random_polytope(rng, opt.vertices, opt.radius));
    } else if (opt.kind == "ball") {
        body = std::make_shared<SupportSeriesBody>(SupportSeriesBody::ball(opt.radius));
    } else if (opt.kind == "cw-harmonic") {
        auto series = SupportSeriesBody::constant_width_p3(opt.eps);
        if (!sampled_convexity_ok(series)) {
            std::cerr << "gen: eps " << opt.eps << " fails the sampled convexity check\n";
            return 1;
        }
        body = std::make_shared<SupportSeriesBody>(std::move(series));
    } else if (opt.kind == "reflected") {
        if (opt.of_path.empty()) {
            std::cerr << "gen reflected: --of is required\n";
            return 1;
        }
        body = reflect(load_body(opt.of_path));
    } else if (opt.kind == "rotated") {
        if (opt.of_path.empty()) {
            std::cerr << "gen rotated: --of is required\n";
            return 1;
        }
        const UnitVector3 axis = UnitVector3::of({opt.axis[0], opt.axis[1], opt.axis[2]});
        body = rotated(load_body(opt.of_path), AxisRotation(axis, opt.fraction));
    } else {
        std::cerr << "gen: unknown kind \"" << opt.kind << "\"\n";
        return 1;
    }
    save_body(*body, opt.output);
    std::cout << "wrote " << opt.kind << " body to " << opt.output << "\n";
    return 0;
}

struct ClassifyOptions {
    std::string body_k;
    std::string body_l;
    int grid = 406;
    int circle_samples = 512;
    double match_tol = 1e-8;
    double spread_tol = 1e-7;
    std::uint64_t seed = 0;
    std::string output;
    std::string format = "json";
};

int run_classify(const ClassifyOptions& opt) {
    if (opt.circle_samples % 2 != 0) {
        std::cerr << "classify: --circle-samples must be even\n";
        return 1;
    }
    const BodyPtr K = load_body(opt.body_k);
    const BodyPtr L = load_body(opt.body_l);

    const SphereGrid& validation = default_validation_grid();
    for (const auto& [body, name] : {std::pair{K.get(), "K"}, std::pair{L.get(), "L"}}) {
        if (!validate_origin_interior(*body, validation, default_origin_margin(*body, validation))) {
            std::cerr << "classify: body " << name << " does not contain the origin\n";
            return 1;
        }
    }

    const SphereGrid grid = fibonacci_grid(static_cast<std::size_t>(opt.grid), true);
    DecompositionParams params;
    params.circle_samples = opt.circle_samples;
    params.match_tol = opt.match_tol;
    params.spread_tol = opt.spread_tol;
    params.threads = worker_threads();

    const DecompositionReport report = decompose_sphere(*K, *L, grid, params);
    const TheoremVerdict verdict = verify_theorem(report);

    std::cout << "directions: " << grid.size() << "\n";
    std::cout << "verdict: " << to_string(report.verdict) << "\n";
    std::cout << "theorem outcome: " << to_string(verdict.outcome) << "\n";
    std::cout << "coverage F0|F1|Disk|Sigma: " << (report.coverage_gol ? "yes" : "no") << "\n";
    std::cout << "coverage F0|F1|Disk|Lambda: " << (report.coverage_mod_gol ? "yes" : "no") << "\n";
    if (report.common_width)
        std::cout << "common width M: " << fmt(*report.common_width) << "\n";
    if (!verdict.poles.empty()) {
        std::cout << "offending poles: " << verdict.poles.size() << " (first: ";
        const auto& p = verdict.poles.front();
        std::cout << fmt(p.x()) << ", " << fmt(p.y()) << ", " << fmt(p.z()) << ")\n";
    }

    if (!opt.output.empty()) {
        write_text_file(opt.output, opt.format == "csv" ? report_to_csv_string(report)
                                                        : report_to_json_string(report));
        std::cout << "report written to " << opt.output << "\n";
    }

    const bool clean = verdict.outcome == TheoremOutcome::Equal ||
                       verdict.outcome == TheoremOutcome::ReflectedEqual;
    return clean ? 0 : 2;
}

struct RadonOptions {
    std::string function = "legendre2";
    std::string body_k;
    std::string body_l;
    int grid = 406;
    int nquad = 512;
    std::string output;
};

int run_radon(const RadonOptions& opt) {
    const SphereGrid grid = fibonacci_grid(static_cast<std::size_t>(opt.grid), true);

    if (!opt.body_k.empty() || !opt.body_l.empty()) {
        if (opt.body_k.empty() || opt.body_l.empty()) {
            std::cerr << "radon: --body-k and --body-l must be given together\n";
            return 1;
        }
        const BodyPtr K = load_body(opt.body_k);
        const BodyPtr L = load_body(opt.body_l);
        const TauDifferenceResult r = tau_difference_check(*K, *L, grid, opt.nquad);
        std::cout << "max |tau_K* - tau_L*|: " << fmt(r.max_tau_diff) << "\n";
        std::cout << "max |R(tau_K* - tau_L*)|: " << fmt(r.max_radon_residual) << "\n";
        if (!opt.output.empty()) {
            const RadonResult table = radon_transform(
                [&](const UnitVector3& u) { return tau_dual(*K, u) - tau_dual(*L, u); }, grid,
                opt.nquad);
            write_text_file(opt.output, radon_to_csv_string(table));
            std::cout << "table written to " << opt.output << "\n";
        }
        return 0;
    }

    DirectionFn f;
    if (opt.function == "const") {
        f = [](const UnitVector3&) { return 1.0; };
    } else if (opt.function == "uz") {
        f = [](const UnitVector3& u) { return u.z(); };
    } else if (opt.function == "legendre2") {
        f = [](const UnitVector3& u) { return u.z() * u.z() - 1.0 / 3.0; };
    } else {
        std::cerr << "radon: unknown function \"" << opt.function << "\"\n";
        return 1;
    }

    const RadonResult result = radon_transform(f, grid, opt.nquad);
    double max_abs = 0.0;
    for (double v : result.values) max_abs = std::max(max_abs, std::abs(v));
    std::cout << "max |Rf|: " << fmt(max_abs) << "\n";
    if (opt.function == "legendre2") {
        // Degree-2 harmonics are -1/2 eigenfunctions of the transform.
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            worst = std::max(worst, std::abs(result.values[i] + 0.5 * f(grid.directions[i])));
        std::cout << "max |Rf + f/2|: " << fmt(worst) << "\n";
    }
    if (!opt.output.empty()) {
        write_text_file(opt.output, radon_to_csv_string(result));
        std::cout << "table written to " << opt.output << "\n";
    }
    return 0;
}

struct QuarticOptions {
    double a = 0.0;
    double b = 0.0;
    std::string output;
    std::string format = "csv";
};

int run_quartic(const QuarticOptions& opt) {
    const QuarticSystemSolution sol = solve_width_tau_system(opt.a, opt.b);
    std::cout << "pairs: " << sol.pairs.size() << "\n";
    for (std::size_t i = 0; i < sol.pairs.size(); ++i) {
        std::cout << "  x=" << fmt(sol.pairs[i].first) << " y=" << fmt(sol.pairs[i].second)
                  << " residual=" << fmt(sol.residuals[i]) << "\n";
    }
    if (!opt.output.empty()) {
        if (opt.format == "json") {
            nlohmann::ordered_json j;
            j["a"] = sol.a;
            j["b"] = sol.b;
            j["pairs"] = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < sol.pairs.size(); ++i)
                j["pairs"].push_back({{"x", sol.pairs[i].first},
                                      {"y", sol.pairs[i].second},
                                      {"residual", sol.residuals[i]}});
            write_text_file(opt.output, j.dump(2) + "\n");
        } else {
            std::string csv = "x,y,residual\n";
            for (std::size_t i = 0; i < sol.pairs.size(); ++i)
                csv += fmt(sol.pairs[i].first) + "," + fmt(sol.pairs[i].second) + "," +
                       fmt(sol.residuals[i]) + "\n";
            write_text_file(opt.output, csv);
        }
        std::cout << "table written to " << opt.output << "\n";
    }
    return 0;
}

struct OrbitOptions {
    double r = 0.0;
    int n = 0;
    std::string output;
    std::string format = "json";
};

int run_orbit(const OrbitOptions& opt) {
    const OrbitReport report = orbit_covering_radius(opt.r, opt.n);
    std::cout << "fraction: " << fmt(report.fraction) << "\n";
    std::cout << "steps: " << report.steps << "\n";
    std::cout << "covering radius: " << fmt(report.covering_radius) << "\n";
    if (!opt.output.empty()) {
        if (opt.format == "csv") {
            std::string csv = "fraction,steps,covering_radius\n";
            csv += fmt(report.fraction) + "," + std::to_string(report.steps) + "," +
                   fmt(report.covering_radius) + "\n";
            write_text_file(opt.output, csv);
        } else {
            nlohmann::ordered_json j;
            j["fraction"] = report.fraction;
            j["steps"] = report.steps;
            j["covering_radius"] = report.covering_radius;
            write_text_file(opt.output, j.dump(2) + "\n");
        }
        std::cout << "table written to " << opt.output << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rotation-congruence analysis of convex-body projections"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "Generate a body file");
    cmd_gen->add_option("kind", gen.kind, "polytope|ball|cw-harmonic|reflected|rotated")
        ->required();
    cmd_gen->add_option("--vertices", gen.vertices, "Vertex count (polytope)")
        ->check(CLI::Range(4, 100000));
    cmd_gen->add_option("--radius", gen.radius, "Ball radius / sampling radius")
        ->check(CLI::PositiveNumber);
    cmd_gen->add_option("--eps", gen.eps, "Odd-harmonic amplitude (cw-harmonic)");
    cmd_gen->add_option("--of", gen.of_path, "Input body file (reflected, rotated)");
    cmd_gen->add_option("--axis", gen.axis, "Rotation axis x y z (rotated)")->expected(3);
    cmd_gen->add_option("--fraction", gen.fraction, "Rotation angle as a fraction of pi (rotated)");
    cmd_gen->add_option("--seed", gen.seed, "Random seed (polytope)");
    cmd_gen->add_option("--output", gen.output, "Output body file")->required();

    ClassifyOptions classify;
    CLI::App* cmd_classify =
        app.add_subcommand("classify", "Classify every sphere direction and verdict the pair");
    cmd_classify->add_option("--body-k", classify.body_k, "Body K file")->required();
    cmd_classify->add_option("--body-l", classify.body_l, "Body L file")->required();
    cmd_classify->add_option("--grid", classify.grid, "Fibonacci lattice size before symmetrization")
        ->check(CLI::Range(50, 1000000));
    cmd_classify->add_option("--circle-samples", classify.circle_samples,
                             "Samples per great circle (even, >= 16)")
        ->check(CLI::Range(16, 1 << 20));
    cmd_classify->add_option("--match-tol", classify.match_tol, "Relative profile match tolerance")
        ->check(CLI::PositiveNumber);
    cmd_classify->add_option("--spread-tol", classify.spread_tol,
                             "Relative width/tau constancy tolerance")
        ->check(CLI::PositiveNumber);
    cmd_classify->add_option("--seed", classify.seed, "Random seed (recorded only)");
    cmd_classify->add_option("--output", classify.output, "Report file");
    cmd_classify->add_option("--format", classify.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    RadonOptions radon;
    CLI::App* cmd_radon = app.add_subcommand("radon", "Forward Funk transform tables");
    cmd_radon->add_option("--f", radon.function, "Built-in function: const|uz|legendre2");
    cmd_radon->add_option("--body-k", radon.body_k, "Body K file (tau-difference mode)");
    cmd_radon->add_option("--body-l", radon.body_l, "Body L file (tau-difference mode)");
    cmd_radon->add_option("--grid", radon.grid, "Fibonacci lattice size before symmetrization")
        ->check(CLI::Range(50, 1000000));
    cmd_radon->add_option("--nquad", radon.nquad, "Quadrature points per great circle")
        ->check(CLI::Range(64, 1 << 22));
    cmd_radon->add_option("--output", radon.output, "CSV output file");

    QuarticOptions quartic;
    CLI::App* cmd_quartic = app.add_subcommand("quartic", "Solve x + y = a, x^-2 + y^-2 = b");
    cmd_quartic->add_option("--a", quartic.a, "Sum constraint")->required()->check(CLI::PositiveNumber);
    cmd_quartic->add_option("--b", quartic.b, "Inverse-square constraint")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_quartic->add_option("--output", quartic.output, "Table output file");
    cmd_quartic->add_option("--format", quartic.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    OrbitOptions orbit;
    CLI::App* cmd_orbit = app.add_subcommand("orbit", "Covering radius of a circle rotation orbit");
    cmd_orbit->add_option("--r", orbit.r, "Rotation as a fraction of pi")->required();
    cmd_orbit->add_option("--n", orbit.n, "Orbit length")->required()->check(CLI::Range(1, 100000000));
    cmd_orbit->add_option("--output", orbit.output, "Table output file");
    cmd_orbit->add_option("--format", orbit.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_classify->parsed()) return run_classify(classify);
        if (cmd_radon->parsed()) return run_radon(radon);
        if (cmd_quartic->parsed()) return run_quartic(quartic);
        if (cmd_orbit->parsed()) return run_orbit(orbit);
    } catch (const std::exception& e) {
        std::cerr << "projcong: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
