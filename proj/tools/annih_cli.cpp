// Command-line front end: joint/marginal probabilities, Bell-CH statistics,
// beta scans, verification oracles, angle searches and Monte Carlo runs.

#include "annih/bell.hpp"
#include "annih/closed_form.hpp"
#include "annih/error.hpp"
#include "annih/montecarlo.hpp"
#include "annih/oracles.hpp"
#include "annih/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double pi = std::numbers::pi;

// exit codes
constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kOracleFailure = 3;
constexpr int kConvergenceFailure = 4;

double deg2rad(double deg) { return deg * pi / 180.0; }

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string verdict_name(annih::Verdict v) {
    switch (v) {
        case annih::Verdict::ViolatesAbove: return "ViolatesAbove";
        case annih::Verdict::ViolatesBelow: return "ViolatesBelow";
        default: return "WithinLHV";
    }
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&tt, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Output {
    std::string format = "table";
    std::string path;

    void emit(const json& manifest, const json& results,
              const std::string& csv, const std::string& table) const {
        std::ostringstream os;
        if (format == "json") {
            os << json{{"manifest", manifest}, {"results", results}}.dump(2) << "\n";
        } else if (format == "csv") {
            for (auto& [k, v] : manifest.items())
                if (k != "parameters")
                    os << "# " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump())
                       << "\n";
            for (auto& [k, v] : manifest["parameters"].items())
                os << "# " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            os << csv;
        } else {
            os << table;
        }
        if (path.empty()) {
            std::cout << os.str();
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw annih::invalid_input("cannot open output file: " + path);
            f << os.str();
        }
    }
};

json make_manifest(const std::string& subcommand, json parameters) {
    return {{"version", kVersion},
            {"subcommand", subcommand},
            {"parameters", std::move(parameters)},
            {"timestamp", iso_timestamp()}};
}

annih::Process to_process(int p) {
    if (p == 1) return annih::Process::One;
    if (p == 2) return annih::Process::Two;
    throw annih::invalid_input("process must be 1 or 2");
}

void check_beta_arg(double beta) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw annih::invalid_input("beta must lie in [0, 1]");
}

annih::AngleQuad quad_from_degrees(const std::vector<double>& deg) {
    if (deg.size() != 4)
        throw annih::invalid_input("--angles requires exactly four comma-separated degrees");
    return {deg2rad(deg[0]), deg2rad(deg[1]), deg2rad(deg[2]), deg2rad(deg[3])};
}

json angles_json(const std::vector<double>& deg) {
    json j = json::array();
    for (double d : deg) j.push_back(d);
    return j;
}

int run_prob(int process, double beta, double chi1_deg, double chi2_deg, const Output& out) {
    check_beta_arg(beta);
    const auto proc = to_process(process);
    const double c1 = deg2rad(chi1_deg), c2 = deg2rad(chi2_deg);
    const auto j = annih::joint(proc, beta, c1, c2);
    const auto m1 = annih::marginal(proc, beta, c1, annih::Which::First);
    const auto m2 = annih::marginal(proc, beta, c2, annih::Which::Second);
    const double gap = annih::statistical_dependence_gap(proc, beta, c1, c2);
    const auto quad = annih::outcome_quadruple(proc, beta, c1, c2);

    json results = {{"joint", j.value},
                    {"marginal_first", m1.value},
                    {"marginal_second", m2.value},
                    {"dependence_gap", gap},
                    {"quadruple", {quad[0], quad[1], quad[2], quad[3]}}};
    std::ostringstream csv, tab;
    csv << "joint,marginal_first,marginal_second,dependence_gap,q00,q10,q01,q11\n"
        << num17(j.value) << ',' << num17(m1.value) << ',' << num17(m2.value) << ','
        << num17(gap) << ',' << num17(quad[0]) << ',' << num17(quad[1]) << ','
        << num17(quad[2]) << ',' << num17(quad[3]) << "\n";
    tab << "process " << process << "  beta " << beta << "  chi1 " << chi1_deg
        << " deg  chi2 " << chi2_deg << " deg\n"
        << "  joint probability    " << j.value << "\n"
        << "  marginal (first)     " << m1.value << "\n"
        << "  marginal (second)    " << m2.value << "\n"
        << "  dependence gap       " << gap << "\n"
        << "  outcome quadruple    " << quad[0] << "  " << quad[1] << "  " << quad[2]
        << "  " << quad[3] << "\n";
    out.emit(make_manifest("prob", {{"process", process},
                                    {"beta", beta},
                                    {"chi1_deg", chi1_deg},
                                    {"chi2_deg", chi2_deg},
                                    {"chi1_rad", c1},
                                    {"chi2_rad", c2}}),
             results, csv.str(), tab.str());
    return kOk;
}

int run_bell(int process, double beta, const std::vector<double>& angles_deg,
             const Output& out) {
    check_beta_arg(beta);
    const auto proc = to_process(process);
    const auto q = quad_from_degrees(angles_deg);
    const auto rep = annih::s_statistic(proc, beta, q);

    json results = {{"s", rep.s},
                    {"terms", rep.terms},
                    {"verdict", verdict_name(rep.verdict)}};
    std::ostringstream csv, tab;
    csv << "s,term1,term2,term3,term4,term5,term6,verdict\n" << num17(rep.s);
    for (double t : rep.terms) csv << ',' << num17(t);
    csv << ',' << verdict_name(rep.verdict) << "\n";
    tab << "S = " << rep.s << "   (" << verdict_name(rep.verdict) << ")\n"
        << "terms:";
    for (double t : rep.terms) tab << "  " << t;
    tab << "\n";
    out.emit(make_manifest("bell", {{"process", process},
                                    {"beta", beta},
                                    {"angles_deg", angles_json(angles_deg)}}),
             results, csv.str(), tab.str());
    return kOk;
}

int run_scan(int process, const std::vector<double>& angles_deg,
             std::vector<double> betas, const std::string& frontier, const Output& out) {
    if (betas.empty())
        throw annih::invalid_input("beta range is empty");
    for (double b : betas) check_beta_arg(b);
    const auto proc = to_process(process);
    const auto q = quad_from_degrees(angles_deg);
    const auto reports = annih::s_beta_scan(proc, q, betas);

    json rows = json::array();
    std::ostringstream csv, tab;
    csv << "beta,s,verdict\n";
    tab << "beta        S            verdict\n";
    for (const auto& r : reports) {
        rows.push_back({{"beta", r.beta}, {"s", r.s}, {"verdict", verdict_name(r.verdict)}});
        csv << num17(r.beta) << ',' << num17(r.s) << ',' << verdict_name(r.verdict) << "\n";
        tab << r.beta << "\t" << r.s << "\t" << verdict_name(r.verdict) << "\n";
    }
    json results = {{"rows", rows}};
    if (!frontier.empty()) {
        const auto side = frontier == "above" ? annih::ViolationSide::Above
                                              : annih::ViolationSide::Below;
        const auto f = annih::violation_frontier(proc, q, side);
        results["frontier_beta"] = f ? json(*f) : json(nullptr);
        csv << "# frontier_beta = " << (f ? num17(*f) : "none") << "\n";
        tab << "frontier beta (" << frontier << "): " << (f ? num17(*f) : "none") << "\n";
    }
    out.emit(make_manifest("scan", {{"process", process},
                                    {"angles_deg", angles_json(angles_deg)},
                                    {"betas", betas},
                                    {"frontier", frontier}}),
             results, csv.str(), tab.str());
    return kOk;
}

int run_oracle(const std::string& level, const Output& out) {
    std::vector<annih::CheckResult> checks;
    auto append = [&](std::vector<annih::CheckResult> v) {
        checks.insert(checks.end(), v.begin(), v.end());
    };
    if (level == "integrals" || level == "all") append(annih::oracle_integrals());
    if (level == "delta-limit" || level == "all") append(annih::oracle_delta_limit());
    if (level == "amplitude" || level == "all") append(annih::oracle_amplitude());
    if (level == "process2-angular" || level == "all")
        append(annih::oracle_process2_angular());
    if (checks.empty())
        throw annih::invalid_input(
            "unknown oracle level (integrals|delta-limit|amplitude|process2-angular|all)");

    json rows = json::array();
    std::ostringstream csv, tab;
    csv << "check,max_deviation,tolerance,pass\n";
    for (const auto& c : checks) {
        rows.push_back({{"check", c.name},
                        {"max_deviation", c.max_deviation},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
        csv << '"' << c.name << "\"," << num17(c.max_deviation) << ','
            << num17(c.tolerance) << ',' << (c.pass ? "true" : "false") << "\n";
        tab << (c.pass ? "PASS" : "FAIL") << "  " << c.name
            << "  (max dev " << c.max_deviation << ", tol " << c.tolerance << ")\n";
    }
    const bool ok = annih::all_pass(checks);
    out.emit(make_manifest("oracle", {{"level", level}}),
             {{"checks", rows}, {"all_pass", ok}}, csv.str(), tab.str());
    return ok ? kOk : kOracleFailure;
}

int run_search(int process, double beta, const std::string& objective, int grid,
               int iters, const Output& out) {
    check_beta_arg(beta);
    const auto proc = to_process(process);
    annih::SearchConfig cfg;
    cfg.grid_points_per_angle = grid;
    cfg.refine_iterations = iters;
    cfg.objective = objective == "max" ? annih::Objective::MaximizeS
                                       : annih::Objective::MinimizeS;
    const auto coarse = annih::grid_search(proc, beta, cfg);
    const auto fine = annih::refine(proc, beta, coarse.best_quad, cfg);
    const auto rep = annih::s_statistic(proc, beta, fine.best_quad);

    const double r2d = 180.0 / pi;
    json results = {{"best_s", fine.best_s},
                    {"verdict", verdict_name(rep.verdict)},
                    {"best_angles_deg",
                     {fine.best_quad.chi1 * r2d, fine.best_quad.chi2 * r2d,
                      fine.best_quad.chi1p * r2d, fine.best_quad.chi2p * r2d}},
                    {"grid_best_s", coarse.best_s},
                    {"refine_steps", fine.trace.size()}};
    std::ostringstream csv, tab;
    csv << "best_s,chi1_deg,chi2_deg,chi1p_deg,chi2p_deg,verdict\n"
        << num17(fine.best_s) << ',' << num17(fine.best_quad.chi1 * r2d) << ','
        << num17(fine.best_quad.chi2 * r2d) << ',' << num17(fine.best_quad.chi1p * r2d)
        << ',' << num17(fine.best_quad.chi2p * r2d) << ',' << verdict_name(rep.verdict)
        << "\n";
    tab << "best S = " << fine.best_s << "  (" << verdict_name(rep.verdict) << ")\n"
        << "angles (deg): " << fine.best_quad.chi1 * r2d << "  "
        << fine.best_quad.chi2 * r2d << "  " << fine.best_quad.chi1p * r2d << "  "
        << fine.best_quad.chi2p * r2d << "\n"
        << "grid best S = " << coarse.best_s << "\n";
    out.emit(make_manifest("search", {{"process", process},
                                      {"beta", beta},
                                      {"objective", objective},
                                      {"grid_points_per_angle", grid},
                                      {"refine_iterations", iters}}),
             results, csv.str(), tab.str());
    return kOk;
}

int run_simulate(int process, double beta, const std::vector<double>& angles_deg,
                 std::uint64_t n, std::uint64_t seed, const Output& out) {
    check_beta_arg(beta);
    if (n == 0) throw annih::invalid_input("sample count n must be positive");
    const auto proc = to_process(process);
    const auto q = quad_from_degrees(angles_deg);
    const auto est = annih::estimate_s(proc, beta, q, n, {seed});
    const double s_exact = annih::s_statistic(proc, beta, q).s;

    json results = {{"s_hat", est.s_hat},
                    {"se", est.se},
                    {"s_closed_form", s_exact},
                    {"deviation_in_se", est.se > 0 ? (est.s_hat - s_exact) / est.se : 0.0},
                    {"joint_hat", est.joint_hat},
                    {"marginal_hat", est.marginal_hat},
                    {"n_per_setting", est.n_per_setting},
                    {"seed", est.seed},
                    {"shards", est.shards}};
    std::ostringstream csv, tab;
    csv << "s_hat,se,s_closed_form,j1,j2,j3,j4,m1,m2\n"
        << num17(est.s_hat) << ',' << num17(est.se) << ',' << num17(s_exact);
    for (double v : est.joint_hat) csv << ',' << num17(v);
    for (double v : est.marginal_hat) csv << ',' << num17(v);
    csv << "\n";
    tab << "S_hat = " << est.s_hat << " +- " << est.se << "   (closed form " << s_exact
        << ")\n";
    out.emit(make_manifest("simulate", {{"process", process},
                                        {"beta", beta},
                                        {"angles_deg", angles_json(angles_deg)},
                                        {"n", n},
                                        {"seed", seed}}),
             results, csv.str(), tab.str());
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"QED photon-polarization correlations and Bell-CH statistics for "
                 "e+e- annihilation in flight"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough(); // let --format/--output appear after the subcommand

    Output out;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", out.path, "Write output to a file instead of stdout");

    int process = 1;
    double beta = 0.0;
    double chi1_deg = 0.0, chi2_deg = 0.0;
    std::vector<double> angles_deg;
    std::vector<double> betas;
    double beta_min = 0.0, beta_max = 0.0;
    int beta_steps = 0;
    std::string frontier;
    std::string level = "all";
    std::string objective = "min";
    int grid = 24, iters = 200;
    std::uint64_t n = 1000000, seed = 1;

    auto* prob = app.add_subcommand("prob", "Joint and marginal probabilities");
    prob->add_option("--process", process)->required();
    prob->add_option("--beta", beta)->required();
    prob->add_option("--chi1", chi1_deg, "First analyzer angle (deg)")->required();
    prob->add_option("--chi2", chi2_deg, "Second analyzer angle (deg)")->required();

    auto* bell = app.add_subcommand("bell", "Bell-CH statistic S and verdict");
    bell->add_option("--process", process)->required();
    bell->add_option("--beta", beta)->required();
    bell->add_option("--angles", angles_deg, "chi1,chi2,chi1',chi2' (deg)")
        ->required()
        ->delimiter(',');

    auto* scan = app.add_subcommand("scan", "S over a range of beta");
    scan->add_option("--process", process)->required();
    scan->add_option("--angles", angles_deg)->required()->delimiter(',');
    scan->add_option("--betas", betas, "Explicit beta list")->delimiter(',');
    scan->add_option("--beta-min", beta_min);
    scan->add_option("--beta-max", beta_max);
    scan->add_option("--beta-steps", beta_steps);
    scan->add_option("--frontier", frontier, "Also bisect the violation frontier")
        ->check(CLI::IsMember({"above", "below"}));

    auto* oracle = app.add_subcommand("oracle", "Run verification oracles");
    oracle->add_option("--level", level,
                       "integrals|delta-limit|amplitude|process2-angular|all");

    auto* search = app.add_subcommand("search", "Grid search plus local refinement");
    search->add_option("--process", process)->required();
    search->add_option("--beta", beta)->required();
    search->add_option("--objective", objective)->check(CLI::IsMember({"min", "max"}));
    search->add_option("--grid", grid, "Grid points per angle");
    search->add_option("--iters", iters, "Refinement iterations");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of S");
    simulate->add_option("--process", process)->required();
    simulate->add_option("--beta", beta)->required();
    simulate->add_option("--angles", angles_deg)->required()->delimiter(',');
    simulate->add_option("--n", n, "Samples per analyzer setting");
    simulate->add_option("--seed", seed, "Master RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (prob->parsed()) return run_prob(process, beta, chi1_deg, chi2_deg, out);
        if (bell->parsed()) return run_bell(process, beta, angles_deg, out);
        if (scan->parsed()) {
            if (betas.empty() && beta_steps > 0) {
                for (int i = 0; i < beta_steps; ++i)
                    betas.push_back(beta_min +
                                    (beta_max - beta_min) * i /
                                        std::max(1, beta_steps - 1));
            }
            return run_scan(process, angles_deg, betas, frontier, out);
        }
        if (oracle->parsed()) return run_oracle(level, out);
        if (search->parsed()) return run_search(process, beta, objective, grid, iters, out);
        if (simulate->parsed()) return run_simulate(process, beta, angles_deg, n, seed, out);
    } catch (const annih::invalid_input& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const annih::degenerate_kinematics& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const annih::convergence_failure& e) {
        std::cerr << "convergence failure: " << e.what()
                  << " (best estimate " << e.best_estimate << ")\n";
        return kConvergenceFailure;
    }
    return kInputError;
}
