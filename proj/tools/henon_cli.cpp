// Command-line front end: builds fixed-point systems, runs the algebraic
// certificates, solves and classifies fixed points, scans the multiplier
// group bound, and evaluates/renders Green functions.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "henon/composition_io.hpp"
#include "henon/fixpoints.hpp"
#include "henon/green.hpp"
#include "henon/membership.hpp"
#include "henon/sampling.hpp"
#include "henon/span_check.hpp"

using json = nlohmann::ordered_json;
using namespace henon;

namespace {

constexpr std::uint64_t kDefaultSeed = 20250808;

std::shared_ptr<std::atomic<bool>> interrupt_flag = std::make_shared<std::atomic<bool>>(false);

void handle_interrupt(int) { interrupt_flag->store(true); }

CancelToken cancel_token() { return CancelToken(interrupt_flag); }

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit(const json& report, const std::string& output_path) {
    std::string text = report.dump(2) + "\n";
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw ValidationError(output_path + ": cannot open for writing");
    out << text;
}

json term_json(const ExactPoly::Term& term) {
    return json{{"monomial", monomial_to_string(term.monomial)},
                {"coefficient", term.coefficient.str()}};
}

json membership_json(const MembershipReport& report) {
    json out;
    out["is_member"] = report.is_member;
    out["basis_verified"] = report.basis_verified;
    out["target"] = report.target.str();
    if (!report.target.is_zero()) out["target_leading"] = term_json(report.target.leading());
    out["remainder"] = report.division.remainder.str();
    if (report.remainder_leading) out["remainder_leading"] = term_json(*report.remainder_leading);
    out["quotient_leading_bound_ok"] = report.quotient_leading_bound_ok;
    out["target_leading_outside_ideal"] = report.target_leading_outside_ideal;
    json quotients = json::array();
    for (const auto& q : report.division.quotients) quotients.push_back(q.str());
    out["quotients"] = quotients;
    return out;
}

json record_json(const FixedPointRecord& rec) {
    json out;
    json cycle = json::array();
    for (const auto& y : rec.y_cycle) cycle.push_back(json::array({y.real(), y.imag()}));
    out["y_cycle"] = cycle;
    out["point"] = json::array({json::array({rec.point.x.real(), rec.point.x.imag()}),
                                json::array({rec.point.y.real(), rec.point.y.imag()})});
    out["residual"] = rec.residual;
    out["multiplicity"] = rec.multiplicity;
    out["multipliers"] =
        json::array({json::array({rec.multiplier_small.real(), rec.multiplier_small.imag()}),
                     json::array({rec.multiplier_large.real(), rec.multiplier_large.imag()})});
    out["classification"] = to_string(rec.classification);
    out["unstable_multiplier_equals_degree"] = rec.unstable_multiplier_equals_degree;
    return out;
}

json group_report_json(const MultiplierGroupReport& report) {
    json out;
    out["applicable"] = report.applicable;
    out["verdict"] = report.verdict;
    out["degree"] = report.degree;
    if (report.applicable) {
        out["largest_group"] = report.largest_group;
        out["group_count"] = report.group_count;
        out["excluded_semi_neutral"] = report.excluded_semi_neutral;
        out["bound_violated"] = report.bound_violated;
    }
    return out;
}

json header(const std::string& command, const std::string& operation, std::uint64_t seed,
            size_t rotation, const HenonComposition* comp) {
    json out;
    out["command"] = command;
    out["operation"] = operation;
    out["seed"] = seed;
    out["rotation"] = rotation;
    if (comp) {
        out["degree"] = comp->degree();
        out["jacobian"] = comp->jacobian().str();
        json warnings = json::array();
        for (const auto& w : comp->warnings()) warnings.push_back(w);
        out["warnings"] = warnings;
    }
    return out;
}

std::vector<double> parse_reals(const std::string& text, size_t count, const std::string& what) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ValidationError(what + ": cannot parse '" + item + "'");
        }
    }
    if (values.size() != count)
        throw ValidationError(what + ": expected " + std::to_string(count) +
                              " comma-separated values");
    return values;
}

PointC2 parse_point(const std::string& text, const std::string& what) {
    auto v = parse_reals(text, 4, what);
    return {{v[0], v[1]}, {v[2], v[3]}};
}

// Repeats the factor list until at least three factors are present; the
// iterate shares the dynamics, so the bound check applies to it.
HenonComposition extend_to_three(const HenonComposition& comp, std::string& note) {
    if (comp.n() >= 3) return comp;
    std::vector<HenonFactor> fs;
    size_t copies = comp.n() == 1 ? 3 : 2;
    for (size_t c = 0; c < copies; ++c)
        for (const auto& f : comp.factors) fs.push_back(f);
    note = "input composition has " + std::to_string(comp.n()) +
           " factor(s); scanning its iterate with " + std::to_string(fs.size()) + " factors";
    return HenonComposition(std::move(fs));
}

int run(int argc, char** argv) {
    CLI::App app{"fixed-point algebra and escape-rate numerics for compositions of "
                 "generalized Henon maps of C^2"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --seed appear after the subcommand name

    std::string input_path, output_path;
    std::uint64_t seed = kDefaultSeed;
    size_t rotation = 0;
    app.add_option("--seed", seed, "seed for all randomized steps")->capture_default_str();
    app.add_option("--rotate", rotation,
                   "cyclically shift the factors by k before running (0 <= k < n)")
        ->capture_default_str();

    auto add_io = [&](CLI::App* cmd, bool need_input = true) {
        auto* opt = cmd->add_option("-i,--input", input_path, "composition file (JSON)");
        if (need_input) opt->required();
        cmd->add_option("-o,--output", output_path, "report file (default: stdout)");
    };

    auto* cmd_system = app.add_subcommand("system", "emit the fixed-point system");
    add_io(cmd_system);

    auto* cmd_groebner =
        app.add_subcommand("groebner", "verify the system satisfies the Buchberger criterion");
    add_io(cmd_groebner);

    std::string lambda_text;
    auto* cmd_phi = app.add_subcommand(
        "phi-check", "divide the multiplier polynomial by the system; expect a nonzero remainder");
    add_io(cmd_phi);
    cmd_phi->add_option("--lambda", lambda_text,
                        "multiplier value (exact: 'a/b' or 'a/b+c/d*i'); default d");

    std::string alpha_text = "0";
    auto* cmd_shifted = app.add_subcommand(
        "shifted-phi-check", "same for (y1 - alpha) times the multiplier polynomial");
    add_io(cmd_shifted);
    cmd_shifted->add_option("--lambda", lambda_text, "multiplier value; default d");
    cmd_shifted->add_option("--alpha", alpha_text, "shift (exact)")->capture_default_str();

    std::string set_text, alpha52_text = "0";
    size_t pivot_1based = 1;
    auto* cmd_lemma = app.add_subcommand(
        "lemma52",
        "verify the structured division identity for a pivot, shift, and random span element");
    add_io(cmd_lemma);
    cmd_lemma->add_option("--set", set_text, "index set J, comma-separated 1-based (default all)");
    cmd_lemma->add_option("--pivot", pivot_1based, "pivot index j in J (1-based)")
        ->capture_default_str();
    cmd_lemma->add_option("--alpha", alpha52_text, "shift (exact)")->capture_default_str();

    double tolerance = 1e-8, cluster_radius = 1e-6, multiplier_tol = 1e-6;
    auto* cmd_fix = app.add_subcommand("fixpoints", "enumerate and classify all fixed points");
    add_io(cmd_fix);
    cmd_fix->add_option("--tolerance", tolerance, "residual bound after polish")
        ->capture_default_str();
    cmd_fix->add_option("--cluster-radius", cluster_radius, "multiplicity clustering radius")
        ->capture_default_str();
    cmd_fix->add_option("--multiplier-tolerance", multiplier_tol,
                        "grouping tolerance for the multiplier bound verdict")
        ->capture_default_str();

    size_t samples = 100;
    double delta_bound = 1.0;
    std::string degrees_text = "2";
    size_t scan_n = 3;
    auto* cmd_scan = app.add_subcommand(
        "prop51-scan", "sample random compositions and check the multiplier group bound");
    add_io(cmd_scan, /*need_input=*/false);
    cmd_scan->add_option("--samples", samples, "number of random compositions")
        ->capture_default_str();
    cmd_scan->add_option("--delta-bound", delta_bound, "require |jacobian| < bound (<= 1)")
        ->capture_default_str();
    cmd_scan->add_option("--degrees", degrees_text, "factor degree menu, comma-separated")
        ->capture_default_str();
    cmd_scan->add_option("--n", scan_n, "factors per sampled composition (>= 3)")
        ->capture_default_str();
    cmd_scan->add_option("--multiplier-tolerance", multiplier_tol, "grouping tolerance")
        ->capture_default_str();

    std::string point_text;
    bool minus = false;
    int max_iterations = 200;
    double green_tol = 1e-10, escape_radius = 0.0;
    auto* cmd_green = app.add_subcommand("green", "evaluate the escape-rate potential at a point");
    add_io(cmd_green);
    cmd_green->add_option("--point", point_text, "point 're,im,re,im' for (x, y)")->required();
    cmd_green->add_flag("--minus", minus, "backward potential instead of forward");
    cmd_green->add_option("--max-iterations", max_iterations, "orbit cap")->capture_default_str();
    cmd_green->add_option("--green-tolerance", green_tol, "increment convergence tolerance")
        ->capture_default_str();
    cmd_green->add_option("--escape-radius", escape_radius,
                          "escape radius (0 = filtration radius)")
        ->capture_default_str();

    std::string slice_path, csv_path, origin_text, axis_u_text, axis_v_text, extent_text,
        resolution_text;
    unsigned threads = 0;
    auto* cmd_render = app.add_subcommand("render", "raster the forward potential over a slice");
    add_io(cmd_render);
    cmd_render->add_option("--slice", slice_path, "slice spec file (JSON)");
    cmd_render->add_option("--origin", origin_text, "slice origin 're,im,re,im'");
    cmd_render->add_option("--axis-u", axis_u_text, "u axis 're,im,re,im'");
    cmd_render->add_option("--axis-v", axis_v_text, "v axis 're,im,re,im'");
    cmd_render->add_option("--extent", extent_text, "'u_min,u_max,v_min,v_max'");
    cmd_render->add_option("--resolution", resolution_text, "'WIDTHxHEIGHT'");
    cmd_render->add_option("--csv", csv_path, "also write raw values as CSV");
    cmd_render->add_option("--threads", threads, "row-parallel workers (0 = auto)")
        ->capture_default_str();
    cmd_render->add_option("--max-iterations", max_iterations, "orbit cap")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    auto load_rotated = [&](const std::string& path) {
        auto comp = load_composition(path);
        if (rotation >= comp.n())
            throw ValidationError("--rotate must satisfy 0 <= k < " + std::to_string(comp.n()));
        return rotation == 0 ? comp : rotate(comp, rotation);
    };

    Timer timer;
    json report;

    if (cmd_system->parsed()) {
        auto comp = load_rotated(input_path);
        report = header("system", "fixed_point_system", seed, rotation, &comp);
        auto system = fixed_point_system<GaussianRational>(comp);
        json polys = json::array();
        for (const auto& phi : system) polys.push_back(phi.str());
        report["system"] = polys;
        std::cerr << "fixed_point_system: " << timer.ms() << " ms\n";
    } else if (cmd_groebner->parsed()) {
        auto comp = load_rotated(input_path);
        report = header("groebner", "verify_groebner_system", seed, rotation, &comp);
        auto result = verify_groebner_system(comp, cancel_token());
        report["is_groebner"] = result.is_groebner;
        if (result.failing_pair)
            report["failing_pair"] =
                json::array({result.failing_pair->first + 1, result.failing_pair->second + 1});
        if (result.witness_remainder) report["witness_remainder"] = result.witness_remainder->str();
        std::cerr << "verify_groebner_system: " << timer.ms() << " ms\n";
    } else if (cmd_phi->parsed() || cmd_shifted->parsed()) {
        auto comp = load_rotated(input_path);
        GaussianRational lambda = lambda_text.empty()
                                      ? GaussianRational(Rational(comp.degree()))
                                      : gaussian_from_string(lambda_text);
        if (cmd_phi->parsed()) {
            report = header("phi-check", "phi_membership", seed, rotation, &comp);
            report["lambda"] = lambda.str();
            report["result"] = membership_json(phi_membership(comp, lambda, cancel_token()));
            std::cerr << "phi_membership: " << timer.ms() << " ms\n";
        } else {
            GaussianRational alpha = gaussian_from_string(alpha_text);
            report = header("shifted-phi-check", "shifted_phi_membership", seed, rotation, &comp);
            report["lambda"] = lambda.str();
            report["alpha"] = alpha.str();
            report["result"] =
                membership_json(shifted_phi_membership(comp, lambda, alpha, cancel_token()));
            std::cerr << "shifted_phi_membership: " << timer.ms() << " ms\n";
        }
    } else if (cmd_lemma->parsed()) {
        auto comp = load_rotated(input_path);
        report = header("lemma52", "decomposition_identity_verify", seed, rotation, &comp);
        DecompositionInput input;
        if (set_text.empty()) {
            for (size_t i = 0; i < comp.n(); ++i) input.index_set.push_back(i);
        } else {
            std::stringstream stream(set_text);
            std::string item;
            while (std::getline(stream, item, ',')) {
                long v = std::stol(item);
                if (v < 1 || static_cast<size_t>(v) > comp.n())
                    throw ValidationError("--set indices must lie in 1.." +
                                          std::to_string(comp.n()));
                input.index_set.push_back(static_cast<size_t>(v - 1));
            }
        }
        if (pivot_1based < 1 || pivot_1based > comp.n())
            throw ValidationError("--pivot must lie in 1.." + std::to_string(comp.n()));
        input.pivot = pivot_1based - 1;
        input.alpha = gaussian_from_string(alpha52_text);

        // random span element over J drawn from the seed
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> coin(0, 2);
        size_t js = input.index_set.size();
        for (std::uint64_t mask = 0; mask < (1ull << js); ++mask) {
            std::vector<size_t> subset;
            for (size_t b = 0; b < js; ++b)
                if (mask & (1ull << b)) subset.push_back(input.index_set[b]);
            if (subset.size() + 2 > js || (js - subset.size()) % 2 != 0) continue;
            if (coin(rng) != 0) continue;
            input.h_terms.push_back({subset, GaussianRational(sample_rational(rng, 2))});
        }

        auto result = decomposition_identity_verify(comp, input);
        json jset = json::array();
        for (size_t i : input.index_set) jset.push_back(i + 1);
        report["index_set"] = jset;
        report["pivot"] = input.pivot + 1;
        report["alpha"] = input.alpha.str();
        json h = json::array();
        for (const auto& term : input.h_terms) {
            json indices = json::array();
            for (size_t i : term.indices) indices.push_back(i + 1);
            h.push_back(json{{"indices", indices}, {"coefficient", term.coeff.str()}});
        }
        report["h_terms"] = h;
        report["identity_ok"] = result.identity_ok;
        report["leading_match_ok"] = result.leading_match_ok;
        report["difference"] = result.difference.str();
        report["quotient"] = result.quotient.str();
        report["cofactor"] = result.cofactor.str();
        std::cerr << "decomposition_identity_verify: " << timer.ms() << " ms\n";
    } else if (cmd_fix->parsed()) {
        auto comp = load_rotated(input_path);
        report = header("fixpoints", "solve_fixed_points", seed, rotation, &comp);
        SolveOptions opts;
        opts.tolerance = tolerance;
        opts.cluster_radius = cluster_radius;
        opts.seed = seed;
        auto records = solve_fixed_points(comp, opts);
        json recs = json::array();
        for (const auto& rec : records) recs.push_back(record_json(rec));
        report["options"] = json{{"tolerance", tolerance},
                                 {"cluster_radius", cluster_radius},
                                 {"multiplier_tolerance", multiplier_tol}};
        report["fixed_points"] = recs;
        report["multiplier_group_bound"] =
            group_report_json(multiplier_group_bound_check(comp, records, multiplier_tol));
        std::cerr << "solve_fixed_points: " << timer.ms() << " ms\n";
    } else if (cmd_scan->parsed()) {
        if (delta_bound <= 0.0 || delta_bound > 1.0)
            throw ValidationError("--delta-bound must lie in (0, 1]");
        report = header("prop51-scan", "multiplier_group_bound_check", seed, rotation, nullptr);
        SampleOptions sample_opts;
        sample_opts.degree_menu.clear();
        {
            std::stringstream stream(degrees_text);
            std::string item;
            while (std::getline(stream, item, ',')) {
                int d = std::stoi(item);
                if (d < 2) throw ValidationError("--degrees entries must be >= 2");
                sample_opts.degree_menu.push_back(d);
            }
            if (sample_opts.degree_menu.empty())
                throw ValidationError("--degrees must list at least one degree");
        }
        sample_opts.n = scan_n;
        if (scan_n < 3 && input_path.empty())
            throw ValidationError("--n must be >= 3 (the bound needs three factors)");

        std::mt19937_64 rng(seed);
        SolveOptions solve_opts;
        solve_opts.seed = seed;

        json verdicts = json::array();
        size_t violations = 0, inapplicable = 0;
        int max_group = 0;
        std::string note;
        std::vector<HenonComposition> pool;
        if (!input_path.empty()) {
            pool.push_back(extend_to_three(load_rotated(input_path), note));
        } else {
            for (size_t s = 0; s < samples; ++s) {
                while (true) {
                    auto comp = sample_composition(rng, sample_opts);
                    if (std::abs(comp.jacobian_cd()) < delta_bound) {
                        pool.push_back(std::move(comp));
                        break;
                    }
                }
            }
        }
        for (size_t s = 0; s < pool.size(); ++s) {
            auto result = multiplier_group_bound_check(pool[s], multiplier_tol, solve_opts);
            json v;
            v["sample"] = s;
            v["applicable"] = result.applicable;
            v["verdict"] = result.verdict;
            if (result.applicable) {
                v["largest_group"] = result.largest_group;
                max_group = std::max(max_group, result.largest_group);
                if (result.bound_violated) ++violations;
            } else {
                ++inapplicable;
            }
            verdicts.push_back(std::move(v));
        }
        if (!note.empty()) report["note"] = note;
        report["samples"] = pool.size();
        report["violations"] = violations;
        report["inapplicable"] = inapplicable;
        report["max_largest_group"] = max_group;
        report["verdicts"] = verdicts;
        emit(report, output_path);
        std::cerr << "multiplier_group_bound_check: " << timer.ms() << " ms\n";
        return violations == 0 ? 0 : 1;
    } else if (cmd_green->parsed()) {
        auto comp = load_rotated(input_path);
        report = header("green", minus ? "green_minus" : "green_plus", seed, rotation, &comp);
        EscapeOptions opts;
        opts.max_iterations = max_iterations;
        opts.tolerance = green_tol;
        opts.escape_radius = escape_radius;
        PointC2 p = parse_point(point_text, "--point");
        GreenResult result = minus ? green_minus(comp, p, opts) : green_plus(comp, p, opts);
        report["options"] = json{{"max_iterations", opts.max_iterations},
                                 {"tolerance", opts.tolerance},
                                 {"escape_radius", opts.escape_radius}};
        report["filtration_radius"] = filtration_radius(comp);
        report["value"] = result.value;
        report["escaped"] = result.escaped;
        report["iterations"] = result.iterations;
        report["iteration_limited"] = result.iteration_limited;
        std::cerr << (minus ? "green_minus: " : "green_plus: ") << timer.ms() << " ms\n";
    } else if (cmd_render->parsed()) {
        auto comp = load_rotated(input_path);
        if (output_path.empty()) throw ValidationError("render requires -o for the graymap");
        report = header("render", "render_slice", seed, rotation, &comp);
        SliceSpec slice;
        if (!slice_path.empty()) slice = load_slice(slice_path);
        if (!origin_text.empty()) slice.origin = parse_point(origin_text, "--origin");
        if (!axis_u_text.empty()) slice.axis_u = parse_point(axis_u_text, "--axis-u");
        if (!axis_v_text.empty()) slice.axis_v = parse_point(axis_v_text, "--axis-v");
        if (!extent_text.empty()) {
            auto e = parse_reals(extent_text, 4, "--extent");
            slice.u_min = e[0];
            slice.u_max = e[1];
            slice.v_min = e[2];
            slice.v_max = e[3];
        }
        if (!resolution_text.empty()) {
            auto x = resolution_text.find('x');
            if (x == std::string::npos)
                throw ValidationError("--resolution must look like '256x256'");
            slice.width = std::stoi(resolution_text.substr(0, x));
            slice.height = std::stoi(resolution_text.substr(x + 1));
        }
        EscapeOptions opts;
        opts.max_iterations = max_iterations;
        Raster raster = render_slice(comp, slice, opts, threads);
        {
            std::ofstream out(output_path, std::ios::binary);
            if (!out) throw ValidationError(output_path + ": cannot open for writing");
            write_pgm(out, raster);
        }
        size_t zeros = 0;
        for (double v : raster.values)
            if (v == 0.0) ++zeros;
        json written = json::array({output_path});
        if (!csv_path.empty()) {
            std::ofstream out(csv_path, std::ios::binary);
            if (!out) throw ValidationError(csv_path + ": cannot open for writing");
            write_csv(out, raster);
            written.push_back(csv_path);
        }
        report["written"] = written;
        report["resolution"] = json::array({slice.width, slice.height});
        report["zero_pixels"] = zeros;
        report["positive_pixels"] = raster.values.size() - zeros;
        std::cout << report.dump(2) << "\n";
        std::cerr << "render_slice: " << timer.ms() << " ms\n";
        return 0;
    }

    emit(report, output_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_interrupt);
    try {
        return run(argc, argv);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CancelledError& e) {
        std::cerr << "cancelled: " << e.what() << "\n";
        return 130;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
