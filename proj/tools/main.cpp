#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hvmag/geometry.hpp"
#include "hvmag/indicators.hpp"
#include "hvmag/io.hpp"
#include "hvmag/optimizer.hpp"
#include "hvmag/problems.hpp"
#include "hvmag/subgradients.hpp"
#include "hvmag/types.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr double kVerifyTolerance = 1e-10;

std::vector<double> parse_number_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            out.push_back(std::stod(field));
        } catch (const std::exception&) {
            throw hvmag::InvalidArgument(std::string("cannot parse ") + what + ": '" + field + "'");
        }
    }
    if (out.empty()) throw hvmag::InvalidArgument(std::string("empty ") + what);
    return out;
}

std::string join_command(int argc, char** argv) {
    std::string cmd;
    for (int i = 0; i < argc; ++i) {
        if (i) cmd += ' ';
        cmd += argv[i];
    }
    return cmd;
}

void write_manifest(const std::string& out_path, const std::string& command, const json& config,
                    std::uint64_t seed, double wall_time_s,
                    const std::vector<std::string>& outputs) {
    json manifest;
    manifest["command"] = command;
    manifest["config"] = config;
    manifest["version"] = hvmag::kVersion;
    manifest["seed"] = seed;
    manifest["wall_time_s"] = wall_time_s;
    manifest["outputs"] = outputs;
    std::ofstream f(out_path + ".manifest.json");
    if (!f) throw hvmag::Error("cannot write manifest next to " + out_path);
    f << manifest.dump(2) << "\n";
}

hvmag::ProblemName problem_from_string(const std::string& name) {
    if (name == "parabola") return hvmag::ProblemName::parabola;
    if (name == "quadratic") return hvmag::ProblemName::quadratic;
    if (name == "simplex3d") return hvmag::ProblemName::simplex3d;
    throw hvmag::InvalidArgument("unknown problem: " + name);
}

hvmag::Indicator indicator_from_string(const std::string& name) {
    if (name == "hv") return hvmag::Indicator::hv;
    if (name == "mag") return hvmag::Indicator::mag;
    throw hvmag::InvalidArgument("unknown indicator: " + name);
}

// ---------------------------------------------------------------- indicator

struct IndicatorArgs {
    std::string points_file;
    std::string anchor;
    std::string indicator;
    std::string method = "auto";
    bool decompose = false;
    bool verify = false;
    std::string out;
    std::string format = "json";
};

double evaluate_indicator(const hvmag::ApproximationSet& set, hvmag::Indicator which,
                          const std::string& method, hvmag::Method* used) {
    using namespace hvmag;
    const std::size_t d = set.dimension();
    if (which == Indicator::hv) {
        if (method == "auto") {
            const auto r = hypervolume(set);
            if (used) *used = r.method;
            return r.value;
        }
        if (method == "sweep") {
            if (d > 3) throw InvalidArgument("sweep hypervolume supports d <= 3");
            if (used) *used = Method::sweep;
            return hypervolume(set).value;
        }
        if (method == "inclusion_exclusion") {
            if (used) *used = Method::inclusion_exclusion;
            return hv_incl_excl(set).value;
        }
        throw InvalidArgument("method '" + method + "' does not apply to hypervolume");
    }
    if (method == "auto" || method == "projection" || method == "sweep") {
        if (used) *used = Method::projection;
        return magnitude_projection(set).value;
    }
    if (method == "inclusion_exclusion") {
        if (used) *used = Method::inclusion_exclusion;
        return mag_incl_excl(set).value;
    }
    if (method == "closed_form") {
        if (d != 2) throw InvalidArgument("closed_form magnitude applies to d = 2");
        if (used) *used = Method::closed_form;
        return planar_zero_anchored_magnitude(set).value;
    }
    throw InvalidArgument("method '" + method + "' does not apply to magnitude");
}

int cmd_indicator(const IndicatorArgs& args, const std::string& command) {
    using namespace hvmag;
    const auto start = std::chrono::steady_clock::now();
    const ApproximationSet raw = read_points_csv(args.points_file);
    AnchorPoint anchor(raw.dimension(), 0.0);
    if (!args.anchor.empty()) anchor = parse_number_list(args.anchor, "anchor");
    const ApproximationSet set = translate_to_anchor(raw, anchor);
    const Indicator which = indicator_from_string(args.indicator);

    Method used = Method::sweep;
    const double value = evaluate_indicator(set, which, args.method, &used);
    std::cout << format_fixed12(value) << "\n";

    json result;
    result["indicator"] = args.indicator;
    result["value"] = value;
    result["dimension"] = set.dimension();
    result["points"] = set.size();

    if (args.decompose) {
        const auto dec = shadow_decomposition(set);
        json d;
        d["V"] = dec.terms;
        d["magnitude"] = dec.magnitude();
        d["hypervolume"] = dec.terms.back();
        std::cout << d.dump() << "\n";
        result["decomposition"] = d;
    }
    if (args.verify) {
        const double oracle =
            which == Indicator::hv ? hv_incl_excl(set).value : mag_incl_excl(set).value;
        if (std::fabs(oracle - value) > kVerifyTolerance) {
            std::cerr << "verification failed: value " << format_fixed12(value)
                      << " vs inclusion-exclusion " << format_fixed12(oracle) << "\n";
            return 1;
        }
        result["verified_against"] = "inclusion_exclusion";
    }
    if (!args.out.empty()) {
        std::ofstream f(args.out);
        if (!f) throw Error("cannot write " + args.out);
        if (args.format == "csv")
            f << "indicator,value,dimension,points\n"
              << args.indicator << "," << format_sig12(value) << "," << set.dimension() << ","
              << set.size() << "\n";
        else if (args.format == "json")
            f << result.dump(2) << "\n";
        else
            throw InvalidArgument("--format must be csv or json");
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json config;
        config["points_file"] = args.points_file;
        config["anchor"] = anchor;
        config["indicator"] = args.indicator;
        config["method"] = args.method;
        config["decompose"] = args.decompose;
        config["verify"] = args.verify;
        write_manifest(args.out, command, config, 0, wall, {args.out});
    }
    return 0;
}

// ------------------------------------------------------------------- ascent

struct AscentArgs {
    std::string problem;
    std::string config_file;
    std::string indicator;
    int mu = 0;
    std::string schedule;
    int iters = 5000;
    double step = 0.0;
    double decay = 0.9995;
    double shrink = 0.5;
    int max_halvings = 45;
    std::uint64_t seed = 0;
    double step_min = 0.0;
    double grad_min = 1e-12;
    std::string init;
    int normalize = -1;  // -1 = problem default
    std::string out;
    bool verify = false;
};

// the initial branch population of the reference execution
const std::vector<double> kReferenceStartX{0.2076, 0.3903, 0.7841, 1.0471,
                                       1.2343, 1.6137, 1.8890, 1.9537};

hvmag::Population make_population(const hvmag::ProblemHandle& problem, const std::string& init,
                                  int mu, std::uint64_t seed) {
    using namespace hvmag;
    Population pop;
    if (init == "paper") {
        if (problem.name != ProblemName::parabola)
            throw InvalidArgument("--init paper applies to the parabola problem");
        if (mu != 8) throw InvalidArgument("the reference start has mu = 8");
        for (double x : kReferenceStartX) pop.members.push_back({x, 0.0});
        return pop;
    }
    if (init.rfind("das-dennis:", 0) == 0) {
        if (problem.name != ProblemName::simplex3d)
            throw InvalidArgument("--init das-dennis applies to the simplex3d problem");
        const int level = std::stoi(init.substr(11));
        const ApproximationSet grid = das_dennis_grid(level);
        const std::size_t full = grid.size();
        if (mu != static_cast<int>(full) && mu != static_cast<int>(full) - 1)
            throw InvalidArgument("mu must be |G_H| or |G_H| - 1 (grid minus centroid), here " +
                                  std::to_string(full));
        const bool drop_centroid = mu == static_cast<int>(full) - 1;
        if (drop_centroid && level % 3 != 0)
            throw InvalidArgument("the centroid lies in G_H only when 3 divides H");
        const ObjectiveVector centroid{1.0 / 3, 1.0 / 3, 1.0 / 3};
        for (const auto& p : grid.points()) {
            if (drop_centroid && p == centroid) continue;
            pop.members.push_back(p);
        }
        return pop;
    }
    if (init != "random") throw InvalidArgument("unknown --init value: " + init);

    std::mt19937_64 rng(seed);
    if (problem.name == ProblemName::parabola) {
        std::uniform_real_distribution<double> xs(0.0, 2.0);
        for (int i = 0; i < mu; ++i) pop.members.push_back({xs(rng), 0.0});
        return pop;
    }
    if (problem.name == ProblemName::simplex3d) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < mu; ++i) {
            // sorted-uniform gaps give a uniform simplex sample
            double a = unit(rng), b = unit(rng);
            if (a > b) std::swap(a, b);
            pop.members.push_back({a, b - a, 1.0 - b});
        }
        return pop;
    }
    // quadratic: members above the anchor and mutually nondominated, so the
    // keep-and-freeze rule cannot strand a member at the start
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::vector<ObjectiveVector> objectives;
    ObjectiveVector f;
    Matrix jac;
    int attempts = 0;
    while (static_cast<int>(pop.members.size()) < mu) {
        if (++attempts > 100000)
            throw InvalidArgument("could not sample a mutually nondominated start");
        const std::vector<double> z{coord(rng), coord(rng)};
        problem.evaluate(z, f, jac);
        bool above = true;
        for (std::size_t c = 0; c < f.size(); ++c)
            if (f[c] < problem.anchor[c]) above = false;
        if (!above) continue;
        pop.members.push_back(z);
        objectives.push_back({f[0] - problem.anchor[0], f[1] - problem.anchor[1]});
        if (active_indices(objectives).size() != objectives.size()) {
            pop.members.pop_back();
            objectives.pop_back();
        }
    }
    return pop;
}

// Applies a JSON config file mirroring the AscentConfig fields; fields set
// explicitly on the command line win over the file.
void apply_config_file(const std::string& path, AscentArgs& args,
                       const std::function<bool(const std::string&)>& flag_given) {
    std::ifstream f(path);
    if (!f) throw hvmag::Error("cannot open config file: " + path);
    json cfg;
    try {
        f >> cfg;
    } catch (const std::exception& e) {
        throw hvmag::Error("cannot parse config file " + path + ": " + e.what());
    }
    if (cfg.contains("indicator") && !flag_given("--indicator"))
        args.indicator = cfg["indicator"].get<std::string>();
    if (cfg.contains("max_iters") && !flag_given("--iters"))
        args.iters = cfg["max_iters"].get<int>();
    if (cfg.contains("step_init") && !flag_given("--step"))
        args.step = cfg["step_init"].get<double>();
    if (cfg.contains("seed") && !flag_given("--seed"))
        args.seed = cfg["seed"].get<std::uint64_t>();
    if (cfg.contains("normalize") && !flag_given("--normalize"))
        args.normalize = cfg["normalize"].get<bool>() ? 1 : 0;
    if (cfg.contains("tolerances")) {
        const auto& tol = cfg["tolerances"];
        if (tol.contains("step_min")) args.step_min = tol["step_min"].get<double>();
        if (tol.contains("grad_min")) args.grad_min = tol["grad_min"].get<double>();
    }
    if (cfg.contains("schedule") && !flag_given("--schedule")) {
        const auto& sched = cfg["schedule"];
        if (sched.is_string()) {
            args.schedule = sched.get<std::string>();
        } else if (sched.contains("geometric")) {
            args.schedule = "geometric";
            if (sched["geometric"].contains("decay") && !flag_given("--decay"))
                args.decay = sched["geometric"]["decay"].get<double>();
        } else if (sched.contains("backtracking")) {
            args.schedule = "backtracking";
            if (sched["backtracking"].contains("shrink") && !flag_given("--shrink"))
                args.shrink = sched["backtracking"]["shrink"].get<double>();
            if (sched["backtracking"].contains("max_halvings") && !flag_given("--max-halvings"))
                args.max_halvings = sched["backtracking"]["max_halvings"].get<int>();
        }
    }
}

int cmd_ascent(const AscentArgs& args, const std::string& command) {
    using namespace hvmag;
    if (args.indicator.empty())
        throw InvalidArgument("--indicator (or a config file providing it) is required");
    const auto start_time = std::chrono::steady_clock::now();
    const ProblemHandle problem = ProblemHandle::make(problem_from_string(args.problem));

    AscentConfig config;
    config.indicator = indicator_from_string(args.indicator);
    config.max_iters = args.iters;
    config.decay = args.decay;
    config.shrink = args.shrink;
    config.max_halvings = args.max_halvings;
    config.seed = args.seed;
    config.step_min = args.step_min;
    config.grad_min = args.grad_min;

    std::string schedule = args.schedule;
    if (schedule.empty())
        schedule = problem.name == ProblemName::parabola ? "geometric" : "backtracking";
    if (schedule == "geometric")
        config.schedule = Schedule::geometric;
    else if (schedule == "backtracking")
        config.schedule = Schedule::backtracking;
    else
        throw InvalidArgument("unknown schedule: " + schedule);
    config.step_init =
        args.step > 0 ? args.step : (config.schedule == Schedule::geometric ? 0.08 : 0.1);
    // the reference parabola runs use the raw branch pull-back
    config.normalize =
        args.normalize >= 0 ? args.normalize != 0 : problem.name != ProblemName::parabola;

    std::string init = args.init;
    if (init.empty()) {
        if (problem.name == ProblemName::parabola)
            init = "paper";
        else if (problem.name == ProblemName::simplex3d)
            init = "das-dennis:3";
        else
            init = "random";
    }
    int mu = args.mu;
    if (mu == 0) {
        if (init.rfind("das-dennis:", 0) == 0)
            mu = static_cast<int>(das_dennis_grid(std::stoi(init.substr(11))).size());
        else
            mu = 8;
    }

    const Population population = make_population(problem, init, mu, args.seed);
    const AscentTrajectory trajectory = run_ascent(problem, population, config);

    std::cout << "terminal value " << format_fixed12(trajectory.terminal.value) << "\n";
    ObjectiveVector f;
    Matrix jac;
    for (const auto& member : trajectory.terminal.population) {
        problem.evaluate(member, f, jac);
        std::cout << "member";
        for (double z : member) std::cout << " " << format_sig12(z);
        std::cout << " -> objectives";
        for (double v : f) std::cout << " " << format_sig12(v);
        std::cout << "\n";
    }
    std::cout << "accepted_steps " << trajectory.accepted_steps << "\n";

    if (args.verify) {
        ApproximationSet terminal_set(problem.objective_dim);
        std::vector<ObjectiveVector> translated;
        for (const auto& member : trajectory.terminal.population) {
            problem.evaluate(member, f, jac);
            ObjectiveVector y(f.size());
            for (std::size_t c = 0; c < f.size(); ++c)
                y[c] = std::max(f[c] - problem.anchor[c], 0.0);
            translated.push_back(y);
        }
        ApproximationSet active_set(problem.objective_dim);
        for (std::size_t i : active_indices(translated)) active_set.add(translated[i]);
        const double oracle = config.indicator == Indicator::hv
                                  ? hv_incl_excl(active_set).value
                                  : mag_incl_excl(active_set).value;
        if (std::fabs(oracle - trajectory.terminal.value) > kVerifyTolerance) {
            std::cerr << "verification failed: terminal "
                      << format_fixed12(trajectory.terminal.value)
                      << " vs inclusion-exclusion " << format_fixed12(oracle) << "\n";
            return 1;
        }
    }

    if (!args.out.empty()) {
        write_trajectory_csv(args.out, problem, trajectory);
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
        json config_echo;
        config_echo["problem"] = args.problem;
        config_echo["indicator"] = args.indicator;
        config_echo["mu"] = mu;
        config_echo["schedule"] = schedule;
        config_echo["iters"] = args.iters;
        config_echo["step"] = config.step_init;
        config_echo["decay"] = config.decay;
        config_echo["shrink"] = config.shrink;
        config_echo["max_halvings"] = config.max_halvings;
        config_echo["init"] = init;
        config_echo["normalize"] = config.normalize;
        config_echo["verify"] = args.verify;
        write_manifest(args.out, command, config_echo, args.seed, wall, {args.out});
    }
    return 0;
}

// --------------------------------------------------------------------- grid

int cmd_grid(int level, const std::string& emit, const std::string& format,
             const std::string& out, bool verify, const std::string& command) {
    using namespace hvmag;
    const auto start = std::chrono::steady_clock::now();
    const ApproximationSet grid = das_dennis_grid(level);
    std::vector<std::string> outputs;
    if (emit == "points") {
        if (out.empty()) {
            for (const auto& p : grid.points())
                std::cout << format_sig12(p[0]) << "," << format_sig12(p[1]) << ","
                          << format_sig12(p[2]) << "\n";
        } else {
            write_points_csv(out, grid, "das-dennis level " + std::to_string(level));
            outputs.push_back(out);
        }
    } else if (emit == "values") {
        const double mag_computed = magnitude_projection(grid).value;
        const double mag_closed = das_dennis_closed_form_mag(level);
        json values;
        values["H"] = level;
        values["hv"] = hv_3d(grid).value;
        values["mag_closed_form"] = mag_closed;
        values["mag_computed"] = mag_computed;
        std::cout << values.dump() << "\n";
        if (verify && std::fabs(mag_computed - mag_closed) > kVerifyTolerance) {
            std::cerr << "verification failed: computed magnitude deviates from the closed form\n";
            return 1;
        }
        if (!out.empty()) {
            std::ofstream f(out);
            if (!f) throw Error("cannot write " + out);
            if (format == "csv")
                f << "H,hv,mag_closed_form,mag_computed\n"
                  << level << "," << format_sig12(values["hv"].get<double>()) << ","
                  << format_sig12(mag_closed) << "," << format_sig12(mag_computed) << "\n";
            else if (format == "json")
                f << values.dump(2) << "\n";
            else
                throw InvalidArgument("--format must be csv or json");
            outputs.push_back(out);
        }
    } else {
        throw InvalidArgument("--emit must be points or values");
    }
    if (!out.empty()) {
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json config;
        config["H"] = level;
        config["emit"] = emit;
        write_manifest(out, command, config, 0, wall, outputs);
    }
    return 0;
}

// ------------------------------------------------------------- stationarity

int cmd_stationarity(int level, const std::string& selector, std::string direction_text,
                     const std::string& eps_text, const std::string& out, bool verify,
                     const std::string& command) {
    using namespace hvmag;
    const auto start = std::chrono::steady_clock::now();
    const double h = static_cast<double>(level);
    ObjectiveVector point(3);
    if (selector == "centroid") {
        if (level % 3 != 0) throw InvalidArgument("the centroid lies in G_H only when 3 divides H");
        point = {1.0 / 3, 1.0 / 3, 1.0 / 3};
        if (direction_text.empty()) direction_text = "1,-1,0";
    } else if (selector.rfind("edge:", 0) == 0) {
        const auto ijk = parse_number_list(selector.substr(5), "edge selector");
        if (ijk.size() != 3 || ijk[0] + ijk[1] + ijk[2] != level)
            throw InvalidArgument("edge:i,j,k needs integers with i+j+k = H");
        point = {ijk[0] / h, ijk[1] / h, ijk[2] / h};
        if (direction_text.empty()) direction_text = "1,-1,0";
    } else if (selector.rfind("vertex:", 0) == 0) {
        const int axis = std::stoi(selector.substr(7));
        if (axis < 1 || axis > 3) throw InvalidArgument("vertex index must be 1, 2, or 3");
        point = {0, 0, 0};
        point[axis - 1] = 1.0;
        if (direction_text.empty()) {
            std::vector<double> d{0.5, 0.5, 0.5};
            d[axis - 1] = -1.0;
            direction_text =
                format_sig12(d[0]) + "," + format_sig12(d[1]) + "," + format_sig12(d[2]);
        }
    } else {
        throw InvalidArgument("point selector must be centroid, edge:i,j,k, or vertex:i");
    }

    const auto direction = parse_number_list(direction_text, "direction");
    const auto eps_list = eps_text.empty() ? std::vector<double>{1e-3, 1e-2, 5e-2}
                                           : parse_number_list(eps_text, "eps list");
    const ProbeReport report = stationarity_probe(level, point, direction, eps_list);

    json record;
    record["H"] = level;
    record["point"] = point;
    record["direction"] = direction;
    json eps_out = json::array();
    json delta_out = json::array();
    for (const auto& s : report.samples) {
        eps_out.push_back(s.eps);
        delta_out.push_back(s.delta_mag);
    }
    record["eps"] = eps_out;
    record["delta_mag"] = delta_out;
    record["fitted_order"] = report.fitted_order;
    record["fitted_coeff"] = report.fitted_coeff;
    std::cout << record.dump() << "\n";

    if (verify) {
        const ApproximationSet grid = das_dennis_grid(level);
        if (std::fabs(magnitude_projection(grid).value - mag_incl_excl(grid).value) >
            kVerifyTolerance) {
            std::cerr << "verification failed: projection and inclusion-exclusion disagree\n";
            return 1;
        }
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw Error("cannot write " + out);
        f << record.dump(2) << "\n";
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json config;
        config["H"] = level;
        config["point"] = selector;
        config["direction"] = direction;
        config["eps"] = eps_list;
        write_manifest(out, command, config, 0, wall, {out});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypervolume and magnitude indicators of anchored dominated sets"};
    app.require_subcommand(1);
    const std::string command = join_command(argc, argv);

    IndicatorArgs ind;
    auto* indicator_cmd =
        app.add_subcommand("indicator", "evaluate an indicator on a point-set CSV");
    indicator_cmd->add_option("--points", ind.points_file, "point-set CSV file")->required();
    indicator_cmd->add_option("--anchor", ind.anchor, "comma-separated anchor (default zeros)");
    indicator_cmd->add_option("--indicator", ind.indicator, "hv or mag")->required();
    indicator_cmd->add_option("--method", ind.method,
                              "auto, sweep, inclusion_exclusion, projection, closed_form");
    indicator_cmd->add_flag("--decompose", ind.decompose, "print the shadow decomposition");
    indicator_cmd->add_flag("--verify", ind.verify, "cross-check with inclusion-exclusion");
    indicator_cmd->add_option("--out", ind.out, "write a result file");
    indicator_cmd->add_option("--format", ind.format, "result file format: json or csv");

    AscentArgs asc;
    auto* ascent_cmd = app.add_subcommand("ascent", "projected set-gradient ascent");
    ascent_cmd->add_option("--problem", asc.problem, "parabola, quadratic, or simplex3d")
        ->required();
    ascent_cmd->add_option("--indicator", asc.indicator, "hv or mag");
    ascent_cmd->add_option("--config", asc.config_file,
                           "JSON file mirroring the ascent configuration fields");
    ascent_cmd->add_option("--mu", asc.mu, "population size");
    ascent_cmd->add_option("--schedule", asc.schedule, "geometric or backtracking");
    ascent_cmd->add_option("--iters", asc.iters, "iteration budget");
    ascent_cmd->add_option("--step", asc.step, "initial step size");
    ascent_cmd->add_option("--decay", asc.decay, "geometric decay factor");
    ascent_cmd->add_option("--shrink", asc.shrink, "backtracking shrink factor");
    ascent_cmd->add_option("--max-halvings", asc.max_halvings, "backtracking trial count");
    ascent_cmd->add_option("--seed", asc.seed, "random seed");
    ascent_cmd->add_option("--init", asc.init, "paper, random, or das-dennis:H");
    ascent_cmd->add_option("--normalize", asc.normalize,
                           "1 = unit pull-back directions, 0 = raw (default per problem)");
    ascent_cmd->add_option("--out", asc.out, "trajectory CSV path");
    ascent_cmd->add_flag("--verify", asc.verify, "cross-check the terminal value");

    int grid_level = 0;
    std::string grid_emit = "values";
    std::string grid_format = "json";
    std::string grid_out;
    bool grid_verify = false;
    auto* grid_cmd = app.add_subcommand("grid", "Das-Dennis simplex lattice");
    grid_cmd->add_option("--level", grid_level, "lattice level H")->required();
    grid_cmd->add_option("--emit", grid_emit, "points or values");
    grid_cmd->add_option("--format", grid_format, "values file format: json or csv");
    grid_cmd->add_option("--out", grid_out, "output path");
    grid_cmd->add_flag("--verify", grid_verify, "check computed magnitude vs closed form");

    int st_level = 3;
    std::string st_point = "centroid";
    std::string st_direction;
    std::string st_eps;
    std::string st_out;
    bool st_verify = false;
    auto* st_cmd = app.add_subcommand("stationarity", "tangent perturbation probe on G_H");
    st_cmd->add_option("--level", st_level, "lattice level H");
    st_cmd->add_option("--point", st_point, "centroid, edge:i,j,k, or vertex:i");
    st_cmd->add_option("--direction", st_direction, "tangent direction, comma-separated");
    st_cmd->add_option("--eps", st_eps, "comma-separated eps list");
    st_cmd->add_option("--out", st_out, "JSON report path");
    st_cmd->add_flag("--verify", st_verify, "cross-check the grid magnitude");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*indicator_cmd) return cmd_indicator(ind, command);
        if (*ascent_cmd) {
            if (!asc.config_file.empty())
                apply_config_file(asc.config_file, asc, [&](const std::string& name) {
                    return ascent_cmd->count(name) > 0;
                });
            return cmd_ascent(asc, command);
        }
        if (*grid_cmd)
            return cmd_grid(grid_level, grid_emit, grid_format, grid_out, grid_verify, command);
        if (*st_cmd)
            return cmd_stationarity(st_level, st_point, st_direction, st_eps, st_out, st_verify,
                                    command);
    } catch (const hvmag::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
