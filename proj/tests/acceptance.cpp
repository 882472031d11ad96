// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion. Exits with the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubehd/builder.hpp"
#include "cubehd/experiment.hpp"
#include "cubehd/io.hpp"
#include "cubehd/oracle.hpp"
#include "cubehd/probability.hpp"

namespace {

namespace fs = std::filesystem;
using namespace cubehd;

constexpr std::uint64_t kSeed = 20250808;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(CUBEHD_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path work_dir() {
    fs::path dir = fs::temp_directory_path() / "cubehd_acceptance";
    fs::create_directories(dir);
    return dir;
}

// ---- criterion bodies ----------------------------------------------------

// Constructive upper bound at desk scale: for every d in 4..10, the CLI
// grid climb (c in {1.0, 1.5, ..., 5.0}, <= 20 restarts each) must
// produce a representation that verifies under both modes. <= 5 minutes.
double criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    for (int d = 4; d <= 10; ++d) {
        fs::path rep = work_dir() / ("rep_d" + std::to_string(d) + ".json");
        std::ostringstream cmd;
        cmd << "build -d " << d << " --find-c-empirically --c-min 1.0 --c-max 5.0"
            << " --c-step 0.5 --max-restarts 20 --seed " << kSeed << " -o " << rep.string();
        require(run_cli(cmd.str()) == 0, "build failed for d=" + std::to_string(d));
        require(run_cli("verify " + rep.string() + " --mode both") == 0,
                "verify --mode both failed for d=" + std::to_string(d));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(secs <= 300.0, "runtime over 5 minutes");
    return secs;
}

// Exact maxima 1/2 and 3/4; Monte Carlo with 1e6 samples within 3
// standard errors for r in 2..10. <= 30 seconds.
double criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    require(layer_edge_prob_exact(2).to_string() == "1/2", "edge prob at r=2 is not 1/2");
    require(layer_edge_prob_exact(3).to_string() == "3/4", "edge prob at r=3 is not 3/4");
    for (int r = 2; r <= 10; ++r) {
        SplitMix64 rng = derive_stream(kSeed, 1000 + static_cast<std::uint64_t>(r));
        MonteCarloEstimate est = layer_edge_prob_monte_carlo(r, r, 1000000, rng);
        double exact = layer_edge_prob_exact(r).to_double();
        require(std::abs(est.estimate - exact) <= 3.0 * est.std_error,
                "Monte Carlo at r=" + std::to_string(r) + " off by more than 3 sigma");
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(secs <= 30.0, "runtime over 30 seconds");
    return secs;
}

// Monotonicity and bound suite, exact equalities only.
double criterion_3() {
    auto t0 = std::chrono::steady_clock::now();

    // strictly decreasing along each parity up to r = 200
    for (int r = 2; r + 2 <= 200; ++r)
        require(layer_edge_prob_exact(r + 2) < layer_edge_prob_exact(r),
                "survival probability not decreasing at r=" + std::to_string(r));

    // dominated by 3/4 and by c1/sqrt(r) with c1 from the 1e4 scan
    const ExactProbability cap{mpz_class(3), mpz_class(4)};
    const double c1 = sqrt_bound_constant(10000).c1;
    for (int r = 2; r <= 200; ++r) {
        ExactProbability p = layer_edge_prob_exact(r);
        require(p <= cap, "survival probability above 3/4");
        require(p.to_double() <= c1 / std::sqrt(static_cast<double>(r)),
                "survival probability above c1/sqrt(r) at r=" + std::to_string(r));
    }

    // exact class counts equal brute-force grouping of non-adjacent pairs
    for (int d = 2; d <= 6; ++d) {
        std::set<std::pair<PositionSet, std::uint32_t>> brute;
        std::map<int, std::uint64_t> brute_by_distance;
        for_each_nonadjacent_pair(d, [&](Vertex u, Vertex v) {
            PositionSet mask = diff_positions(u, v);
            if (brute.insert({mask, lex_pattern(u, mask)}).second)
                ++brute_by_distance[std::popcount(mask)];
            return true;
        });
        for (int t = 2; t <= d; ++t) {
            std::uint64_t brute_count = 0;
            for (int i = 2; i <= t; ++i) brute_count += brute_by_distance[i];
            ClassCountBounds bounds = class_count(d, t);
            require(bounds.exact == mpz_class(static_cast<unsigned long>(brute_count)),
                    "class_count mismatch at d=" + std::to_string(d));
            require(2 * bounds.exact <= bounds.coarse_bound, "class bound chain broken");
        }
    }

    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Oracle cross-validation. <= 2 minutes.
double criterion_4() {
    auto t0 = std::chrono::steady_clock::now();

    SmallGraph h2 = hypercube_graph(2);
    require(!is_unit_interval(h2).has_value(), "C_4 recognized as unit interval");
    CubicityResult res = exact_cubicity(h2, 4);
    require(!res.exceeded && res.cubicity == 2, "exact_cubicity(H_2) != 2");
    require(certify_representation(SeedSet{2, {0b00, 0b01}, 0}).ok,
            "certificate {00, 01} rejected");

    for (int n = 2; n <= 6; ++n) {
        SmallGraph k = SmallGraph::with_vertices(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) k.add_edge(i, j);
        CubicityResult kr = exact_cubicity(k, 4);
        require(!kr.exceeded && kr.cubicity == 1,
                "exact_cubicity(K_" + std::to_string(n) + ") != 1");
    }

    // enumeration completeness against the 64-graph universe at n = 4
    SupergraphSet all = unit_interval_supergraphs(SmallGraph::with_vertices(4));
    std::set<std::uint64_t> enumerated(all.edge_masks.begin(), all.edge_masks.end());
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        SmallGraph g = SmallGraph::with_vertices(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if ((mask >> SmallGraph::pair_index(4, i, j)) & 1) g.add_edge(i, j);
        require(enumerated.contains(mask) == is_unit_interval(g).has_value(),
                "enumeration completeness broken at mask " + std::to_string(mask));
    }

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(secs <= 120.0, "runtime over 2 minutes");
    return secs;
}

// Verifier oracle-equivalence on 100 random instances.
double criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng = derive_stream(kSeed, 5);
    int satisfied = 0, unsatisfied = 0;
    for (int i = 0; i < 100; ++i) {
        int d = 2 + static_cast<int>(rng.next() % 7);
        std::size_t k = 1 + rng.next() % 6;
        SeedSet s = sample_seed_set(d, k, rng, kSeed);
        bool pairwise = verify_separation_pairwise(s).satisfied;
        bool classwise = verify_separation_classwise(s).satisfied;
        require(pairwise == classwise,
                "verifier disagreement at instance " + std::to_string(i));
        (pairwise ? satisfied : unsatisfied)++;
    }
    require(satisfied + unsatisfied == 100, "instance count off");
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Lower-bound consistency: minimized sizes never undercut the known
// floor, and the experiment CSV contains no violating row.
double criterion_6(const std::vector<std::vector<double>>& csv_rows) {
    auto t0 = std::chrono::steady_clock::now();
    for (int d = 2; d <= 10; ++d) {
        CSearchResult search = build_with_c_search(d, kSeed);
        require(search.success, "no representation found for d=" + std::to_string(d));
        std::size_t minimized = minimize_seed_set(search.build.seeds).size();
        auto floor = static_cast<std::size_t>(std::ceil(cubicity_lower_bound(d)));
        require(minimized >= floor, "minimized size undercuts the floor at d=" + std::to_string(d));
    }
    for (const auto& row : csv_rows) {
        double minimized = row[3], floor = std::ceil(row[4]);
        require(minimized >= floor, "experiment CSV row violates the floor");
    }
    require(!csv_rows.empty(), "experiment CSV is empty");
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Scaling table over d in 4..12, 10 trials: the per-d minimum minimized
// count, normalized by d/log2(d), stays within a factor 4 band.
double criterion_7(std::vector<std::vector<double>>& csv_rows_out) {
    auto t0 = std::chrono::steady_clock::now();
    fs::path csv_path = work_dir() / "experiment.csv";
    std::ostringstream cmd;
    cmd << "experiment --d-min 4 --d-max 12 --trials 10 --seed " << kSeed << " -o "
        << csv_path.string();
    require(run_cli(cmd.str()) == 0, "experiment command failed");

    std::ifstream in(csv_path);
    require(in.good(), "cannot read experiment CSV");
    std::string line;
    std::map<int, double> min_minimized;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'd') continue;
        std::vector<double> fields;
        std::stringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(std::stod(field));
        require(fields.size() == 7, "experiment CSV row has wrong arity");
        csv_rows_out.push_back(fields);
        int d = static_cast<int>(fields[0]);
        double m = fields[3];
        auto [it, fresh] = min_minimized.emplace(d, m);
        if (!fresh) it->second = std::min(it->second, m);
    }
    require(min_minimized.size() == 9, "expected d = 4..12 in the CSV");

    double lo = 1e300, hi = 0;
    for (const auto& [d, m] : min_minimized) {
        double ratio = m * std::log2(static_cast<double>(d)) / static_cast<double>(d);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    require(hi / lo < 4.0, "normalized minimized counts spread beyond factor 4");
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// failure_bound self-consistency at d = 2^10.
double criterion_8() {
    auto t0 = std::chrono::steady_clock::now();
    auto req = required_c(1024, 0.1, 100.0, 0.1);
    require(req.has_value(), "no grid c brings the d=1024 bound below 1");
    require(failure_bound(1024, *req).total_lt_1, "bound at the grid-minimal c is not < 1");

    double prev = std::numeric_limits<double>::infinity();
    for (double c = 0.1; c <= 100.0 + 1e-9; c += 0.1) {
        double total = failure_bound(1024, c).log2_total;
        require(total < prev, "bound not monotone decreasing in c");
        prev = total;
    }
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    int failures = 0;
    std::vector<std::vector<double>> csv_rows;

    struct Criterion {
        int number;
        const char* label;
        std::function<double()> body;
    };
    const std::vector<Criterion> criteria{
        {1, "constructive upper bound, d = 4..10, grid c <= 5.0, verify both modes",
         [] { return criterion_1(); }},
        {2, "exact probabilities 1/2 and 3/4; Monte Carlo within 3 sigma, r = 2..10",
         [] { return criterion_2(); }},
        {3, "monotonicity and bound suite (exact)", [] { return criterion_3(); }},
        {4, "oracle cross-validation (H_2, K_n, 64-graph completeness)",
         [] { return criterion_4(); }},
        {5, "pairwise/classwise equivalence on 100 random instances",
         [] { return criterion_5(); }},
        {7, "scaling table d = 4..12, normalized spread < 4",
         [&] { return criterion_7(csv_rows); }},
        {6, "lower-bound floor for d = 2..10 and across the experiment CSV",
         [&] { return criterion_6(csv_rows); }},
        {8, "failure bound at d = 2^10: grid-minimal c, monotone in c",
         [] { return criterion_8(); }},
    };

    std::vector<std::string> lines(9);
    for (const Criterion& c : criteria) {
        std::ostringstream line;
        try {
            double secs = c.body();
            line << "criterion " << c.number << ": PASS — " << c.label << " ("
                 << std::fixed << std::setprecision(1) << secs << " s)";
        } catch (const std::exception& e) {
            line << "criterion " << c.number << ": FAIL — " << c.label << ": " << e.what();
            ++failures;
        }
        lines[static_cast<std::size_t>(c.number)] = line.str();
    }
    for (int i = 1; i <= 8; ++i) std::cout << lines[static_cast<std::size_t>(i)] << "\n";
    return failures;
}
