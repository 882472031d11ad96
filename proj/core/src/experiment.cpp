#include "cubehd/experiment.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cubehd/probability.hpp"

namespace cubehd {

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
    if (config.d_min < 2 || config.d_min > config.d_max || config.d_max > 12)
        throw std::invalid_argument("experiment: need 2 <= d_min <= d_max <= 12");
    if (config.trials < 1) throw std::invalid_argument("experiment: trials >= 1");

    std::vector<ExperimentRow> rows;
    rows.reserve(static_cast<std::size_t>((config.d_max - config.d_min + 1) * config.trials));

    for (int d = config.d_min; d <= config.d_max; ++d) {
        for (int trial = 0; trial < config.trials; ++trial) {
            // Fresh 64-bit seed per (d, trial) so trials are independent but
            // reproducible from the master seed.
            const std::uint64_t index =
                (static_cast<std::uint64_t>(d) << 32) | static_cast<std::uint64_t>(trial);
            const std::uint64_t trial_seed = derive_stream(config.rng_seed, index).next();

            CSearchResult search =
                build_with_c_search(d, trial_seed, config.c_min, config.c_max,
                                    config.c_step, config.restarts_per_c);
            if (!search.success) {
                std::ostringstream msg;
                msg << "experiment: no c in [" << config.c_min << ", " << config.c_max
                    << "] produced a verified representation for d=" << d;
                throw std::runtime_error(msg.str());
            }

            ExperimentRow row;
            row.d = d;
            row.c_used = search.c_used;
            row.seed_count = search.build.seeds.size();
            row.minimized_count = minimize_seed_set(search.build.seeds).size();
            row.cmo_floor = cubicity_lower_bound(d);
            row.attempts = search.build.attempts;
            row.verify_millis =
                verify_separation_classwise(search.build.seeds).elapsed.count() / 1000;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream out;
    out.precision(6);
    out << "# " << kExperimentCsvVersion << "\n" << kExperimentCsvColumns << "\n";
    for (const ExperimentRow& r : rows) {
        out << r.d << ',' << r.c_used << ',' << r.seed_count << ',' << r.minimized_count
            << ',' << r.cmo_floor << ',' << r.attempts << ',' << r.verify_millis << "\n";
    }

    std::map<int, std::vector<const ExperimentRow*>> by_d;
    for (const ExperimentRow& r : rows) by_d[r.d].push_back(&r);
    for (const auto& [d, group] : by_d) {
        std::size_t min_minimized = group.front()->minimized_count;
        double mean_minimized = 0, mean_attempts = 0;
        for (const ExperimentRow* r : group) {
            min_minimized = std::min(min_minimized, r->minimized_count);
            mean_minimized += static_cast<double>(r->minimized_count);
            mean_attempts += r->attempts;
        }
        mean_minimized /= static_cast<double>(group.size());
        mean_attempts /= static_cast<double>(group.size());
        out << "# summary d=" << d << " trials=" << group.size()
            << " min_minimized=" << min_minimized << " mean_minimized=" << mean_minimized
            << " mean_attempts=" << mean_attempts
            << " cmo_floor=" << group.front()->cmo_floor << "\n";
    }
    return out.str();
}

}  // namespace cubehd
