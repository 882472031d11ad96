// Command-line surface for building, verifying, and analyzing unit-cube
// representations of hypercubes.
//
// Exit codes: 0 success / property satisfied, 1 property not satisfied,
// 2 build restarts exhausted, 64 usage or capacity error, 65 malformed
// input file, 70 internal inconsistency, 74 I/O failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "cubehd/builder.hpp"
#include "cubehd/errors.hpp"
#include "cubehd/experiment.hpp"
#include "cubehd/io.hpp"
#include "cubehd/oracle.hpp"
#include "cubehd/probability.hpp"

namespace {

constexpr int kExitSatisfied = 0;
constexpr int kExitUnsatisfied = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitUsage = 64;
constexpr int kExitDataErr = 65;
constexpr int kExitSoftware = 70;
constexpr int kExitIoErr = 74;

using nlohmann::json;
using namespace cubehd;

std::string positions_to_string(PositionSet mask) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < kMaxDimension; ++i) {
        if (!((mask >> i) & 1u)) continue;
        if (!first) out += ",";
        out += std::to_string(i + 1);  // 1-based string positions
        first = false;
    }
    return out + "}";
}

std::string pattern_to_string(const NonAdjacencyClass& cls) {
    int w = cls.distance();
    std::string s(static_cast<std::size_t>(w), '0');
    for (int i = 0; i < w; ++i)
        if ((cls.pattern >> (w - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

void print_report(const VerificationReport& report, int d) {
    const char* method = report.method == VerifyMethod::pairwise ? "pairwise" : "classwise";
    const char* unit = report.method == VerifyMethod::pairwise ? "pairs" : "classes";
    if (report.satisfied) {
        std::cout << "verdict: satisfied (" << method << ", " << report.checked << " "
                  << unit << ", " << report.elapsed.count() / 1000 << " ms)\n";
        return;
    }
    std::cout << "verdict: not satisfied (" << method << ")\n";
    if (report.counterexample) {
        auto [u, v] = *report.counterexample;
        std::cout << "counterexample pair: (" << vertex_to_string(u, d) << ", "
                  << vertex_to_string(v, d) << ")\n";
    }
    if (report.counterexample_class) {
        std::cout << "counterexample class: positions="
                  << positions_to_string(report.counterexample_class->positions)
                  << " pattern=" << pattern_to_string(*report.counterexample_class) << "\n";
    }
}

int cmd_build(int d, double c, bool find_c, double c_min, double c_max, double c_step,
              std::uint64_t seed, int max_restarts, const std::string& out_path) {
    BuildResult build;
    double c_used = c;
    if (find_c) {
        CSearchResult search = build_with_c_search(d, seed, c_min, c_max, c_step, max_restarts);
        build = std::move(search.build);
        c_used = search.c_used;
    } else {
        build = build_representation(d, c, seed, max_restarts);
    }

    if (!build.success) {
        std::cerr << "build: no verified representation after " << build.attempts
                  << " attempts at c=" << c_used << "\n";
        if (build.failing_class) {
            std::cerr << "last unseparated class: positions="
                      << positions_to_string(build.failing_class->positions) << " pattern="
                      << pattern_to_string(*build.failing_class) << "\n";
        }
        return kExitExhausted;
    }

    save_representation(out_path, make_representation_file(build.seeds, true));
    std::cout << "built: d=" << d << " c=" << c_used << " seeds=" << build.seeds.size()
              << " attempts=" << build.attempts
              << " duplicates=" << build.seeds.duplicate_count() << "\n";
    std::cout << "wrote " << out_path << " (verified)\n";
    return kExitSatisfied;
}

int cmd_verify(const std::string& path, const std::string& mode) {
    SeedSet s = to_seed_set(load_representation(path));

    if (mode == "pairwise" || mode == "classwise") {
        VerificationReport report = mode == "pairwise" ? verify_separation_pairwise(s)
                                                       : verify_separation_classwise(s);
        print_report(report, s.d);
        return report.satisfied ? kExitSatisfied : kExitUnsatisfied;
    }

    VerificationReport pairwise = verify_separation_pairwise(s);
    VerificationReport classwise = verify_separation_classwise(s);
    print_report(pairwise, s.d);
    print_report(classwise, s.d);
    if (pairwise.satisfied != classwise.satisfied) {
        std::cerr << "verifier disagreement: pairwise=" << pairwise.satisfied
                  << " classwise=" << classwise.satisfied << "\n";
        return kExitSoftware;
    }
    return pairwise.satisfied ? kExitSatisfied : kExitUnsatisfied;
}

int cmd_prob(int r, std::uint64_t mc_samples, std::uint64_t seed) {
    ExactProbability exact = layer_edge_prob_exact(r);
    json j;
    j["r"] = r;
    j["exact"] = exact.to_string();
    j["decimal"] = exact.to_double();
    if (mc_samples > 0) {
        SplitMix64 rng = derive_stream(seed, 0);
        MonteCarloEstimate est = layer_edge_prob_monte_carlo(r, r, mc_samples, rng);
        j["mc"] = {{"samples", est.samples},
                   {"estimate", est.estimate},
                   {"stderr", est.std_error},
                   {"seed", seed}};
    }
    std::cout << j.dump(2) << "\n";
    return kExitSatisfied;
}

int cmd_bounds(int d, double c, bool find_c, double c_min, double c_max, double c_step,
               bool csv, bool table) {
    if (table) {
        std::cout << kBoundCsvSchema << "\n";
        for (int e = 4; e <= 20; ++e) {
            int dd = 1 << e;
            auto req = required_c(dd, c_min, c_max, c_step);
            if (req)
                std::cout << bound_report_csv_row(failure_bound(dd, *req)) << "\n";
            else
                std::cout << "# d=" << dd << ": no c in [" << c_min << ", " << c_max
                          << "] brings the bound below 1\n";
        }
        return kExitSatisfied;
    }

    double c_report = c;
    std::optional<double> req;
    if (find_c) {
        req = required_c(d, c_min, c_max, c_step);
        if (req) c_report = *req;
    }
    BoundReport report = failure_bound(d, c_report);
    if (csv) {
        std::cout << kBoundCsvSchema << "\n" << bound_report_csv_row(report) << "\n";
        return kExitSatisfied;
    }
    json j = json::parse(bound_report_json(report));
    if (find_c) {
        if (req)
            j["required_c"] = *req;
        else
            j["required_c"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
    return kExitSatisfied;
}

int cmd_oracle(const std::string& path, int t_max, int max_n) {
    SmallGraph g = load_small_graph(path);
    CubicityResult result = exact_cubicity(g, t_max, max_n);

    json j;
    j["n"] = g.n;
    j["t_max"] = t_max;
    j["exceeds_t_max"] = result.exceeded;
    if (!result.exceeded) {
        j["cubicity"] = result.cubicity;
        json certs = json::array();
        for (const ProperOrderRep& rep : result.certificate) {
            UnitIntervalRep starts = rep.to_unit_interval_rep();
            certs.push_back({{"order", rep.order},
                             {"reach", rep.reach},
                             {"starts", starts.starts},
                             {"denominator", starts.denom}});
        }
        j["certificates"] = std::move(certs);
    }
    std::cout << j.dump(2) << "\n";
    return kExitSatisfied;
}

int cmd_experiment(int d_min, int d_max, int trials, std::uint64_t seed,
                   const std::string& out_path) {
    ExperimentConfig config;
    config.d_min = d_min;
    config.d_max = d_max;
    config.trials = trials;
    config.rng_seed = seed;
    std::vector<ExperimentRow> rows = run_experiment(config);
    write_text_file(out_path, experiment_csv(rows));
    std::cout << "wrote " << out_path << " (" << rows.size() << " rows)\n";
    return kExitSatisfied;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit-cube representations of hypercubes: construction, verification, analysis"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "sample seed sets until one verifies");
    int build_d = 0;
    double build_c = 3.0;
    bool build_find_c = false;
    double build_c_min = 1.0, build_c_max = 5.0, build_c_step = 0.5;
    std::uint64_t build_seed = 1;
    int build_restarts = 20;
    std::string build_out = "representation.json";
    build->add_option("-d,--dimension", build_d, "hypercube dimension (2..18)")->required();
    build->add_option("-c,--constant", build_c, "construction constant");
    build->add_flag("--find-c-empirically", build_find_c,
                    "climb the c grid and use the first value that verifies");
    build->add_option("--c-min", build_c_min, "grid start");
    build->add_option("--c-max", build_c_max, "grid end");
    build->add_option("--c-step", build_c_step, "grid step");
    build->add_option("--seed", build_seed, "rng seed");
    build->add_option("--max-restarts", build_restarts, "attempts per c value");
    build->add_option("-o,--out", build_out, "output representation file");

    // verify
    auto* verify = app.add_subcommand("verify", "check the separation property of a file");
    std::string verify_path;
    std::string verify_mode = "both";
    verify->add_option("path", verify_path, "representation JSON file")->required();
    verify->add_option("--mode", verify_mode, "pairwise|classwise|both")
        ->check(CLI::IsMember({"pairwise", "classwise", "both"}));

    // prob
    auto* prob = app.add_subcommand("prob", "survival probability of a pair at distance r");
    int prob_r = 0;
    std::uint64_t prob_mc = 0, prob_seed = 1;
    prob->add_option("-r,--distance", prob_r, "pair distance (>= 2)")->required();
    prob->add_option("--mc", prob_mc, "Monte Carlo sample count");
    prob->add_option("--seed", prob_seed, "rng seed for --mc");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "log-space failure-probability bounds");
    int bounds_d = 0;
    double bounds_c = 1.0;
    bool bounds_find_c = false, bounds_csv = false, bounds_table = false;
    double bounds_c_min = 0.1, bounds_c_max = 100.0, bounds_c_step = 0.1;
    bounds->add_option("-d,--dimension", bounds_d, "dimension (>= 4)");
    bounds->add_option("-c,--constant", bounds_c, "construction constant");
    bounds->add_flag("--find-c", bounds_find_c, "report the grid-minimal c with total < 1");
    bounds->add_option("--c-min", bounds_c_min, "grid start");
    bounds->add_option("--c-max", bounds_c_max, "grid end");
    bounds->add_option("--c-step", bounds_c_step, "grid step");
    bounds->add_flag("--csv", bounds_csv, "emit a CSV row instead of JSON");
    bounds->add_flag("--table", bounds_table, "required-c table for d = 2^4 .. 2^20");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact cubicity of a small graph");
    std::string oracle_path;
    int oracle_tmax = 4, oracle_maxn = 7;
    oracle->add_option("path", oracle_path, "graph JSON file")->required();
    oracle->add_option("--t-max", oracle_tmax, "search depth cap (1..4)");
    oracle->add_option("--max-n", oracle_maxn, "vertex guard (<= 8; 8 is slow)");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "scaling table over a d range");
    int exp_dmin = 4, exp_dmax = 10, exp_trials = 5;
    std::uint64_t exp_seed = 1;
    std::string exp_out = "experiment.csv";
    experiment->add_option("--d-min", exp_dmin, "smallest dimension (>= 2)");
    experiment->add_option("--d-max", exp_dmax, "largest dimension (<= 12)");
    experiment->add_option("--trials", exp_trials, "trials per dimension");
    experiment->add_option("--seed", exp_seed, "rng seed");
    experiment->add_option("-o,--out", exp_out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (build->parsed())
            return cmd_build(build_d, build_c, build_find_c, build_c_min, build_c_max,
                             build_c_step, build_seed, build_restarts, build_out);
        if (verify->parsed()) return cmd_verify(verify_path, verify_mode);
        if (prob->parsed()) return cmd_prob(prob_r, prob_mc, prob_seed);
        if (bounds->parsed()) {
            if (!bounds_table && bounds_d == 0)
                throw std::invalid_argument("bounds: -d is required without --table");
            return cmd_bounds(bounds_d, bounds_c, bounds_find_c, bounds_c_min, bounds_c_max,
                              bounds_c_step, bounds_csv, bounds_table);
        }
        if (oracle->parsed()) return cmd_oracle(oracle_path, oracle_tmax, oracle_maxn);
        if (experiment->parsed())
            return cmd_experiment(exp_dmin, exp_dmax, exp_trials, exp_seed, exp_out);
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataErr;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoErr;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitSoftware;
    }
    return kExitUsage;
}
