#include "cubehd/builder.hpp"

#include <algorithm>
#include <cmath>

namespace cubehd {

namespace {

using clock = std::chrono::steady_clock;

void validate_seed_set(const SeedSet& s) {
    Hypercube cube(s.d);
    if (s.seeds.empty())
        throw std::invalid_argument("seed set must contain at least one vertex");
    for (Vertex x : s.seeds)
        if (!cube.contains(x)) throw std::invalid_argument("seed vertex out of range");
}

}  // namespace

std::size_t SeedSet::duplicate_count() const {
    std::vector<Vertex> sorted = seeds;
    std::sort(sorted.begin(), sorted.end());
    std::size_t dup = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) ++dup;
    return dup;
}

SeedSet sample_seed_set(int d, std::size_t size, SplitMix64& rng,
                        std::uint64_t recorded_seed) {
    Hypercube cube(d);
    if (size == 0) throw std::invalid_argument("seed set size must be >= 1");
    SeedSet s{d, {}, recorded_seed};
    s.seeds.reserve(size);
    for (std::size_t i = 0; i < size; ++i)
        s.seeds.push_back(static_cast<Vertex>(rng.next_bits(d)));
    return s;
}

VerificationReport verify_separation_pairwise(const SeedSet& s) {
    validate_seed_set(s);
    if (s.d > kMaxPairwiseDim)
        throw CapacityError(
            "pairwise verification is guarded at d <= 14; use the classwise verifier");

    VerificationReport report;
    report.method = VerifyMethod::pairwise;
    auto t0 = clock::now();

    const std::uint64_t n = std::uint64_t{1} << s.d;
    for (Vertex a = 0; a + 1 < n && report.counterexample == std::nullopt; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (is_adjacent(a, b)) continue;
            ++report.checked;
            bool separated = false;
            for (Vertex x : s.seeds) {
                if (!layer_adjacent(x, a, b)) {
                    separated = true;
                    break;
                }
            }
            if (!separated) {
                report.counterexample = canonical_orientation(a, b);
                report.counterexample_class = make_class(a ^ b, a);
                break;
            }
        }
    }
    report.satisfied = !report.counterexample.has_value();
    report.elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0);
    return report;
}

VerificationReport verify_separation_classwise(const SeedSet& s) {
    validate_seed_set(s);
    if (s.d > kMaxClasswiseDim)
        throw CapacityError("classwise verification is guarded at d <= 18");

    VerificationReport report;
    report.method = VerifyMethod::classwise;
    auto t0 = clock::now();

    const std::uint32_t n = std::uint32_t{1} << s.d;
    const std::size_t k = s.seeds.size();
    std::vector<std::uint32_t> masked(k);

    for (std::uint32_t m = 3; m < n && !report.counterexample_class; ++m) {
        const int dist = std::popcount(m);
        if (dist < 2) continue;
        for (std::size_t j = 0; j < k; ++j) masked[j] = s.seeds[j] & m;

        const std::uint32_t body = m ^ (m & (0u - m));
        std::uint32_t sub = 0;
        do {
            ++report.checked;
            bool separated = false;
            for (std::size_t j = 0; j < k; ++j) {
                int side = std::popcount(masked[j] ^ sub);
                int gap = 2 * side - dist;
                if (gap >= 2 || gap <= -2) {
                    separated = true;
                    break;
                }
            }
            if (!separated) {
                report.counterexample_class = make_class(m, sub);
                report.counterexample = report.counterexample_class->representative_pair();
                break;
            }
            sub = (sub - body) & body;
        } while (sub != 0);
    }
    report.satisfied = !report.counterexample_class.has_value();
    report.elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0);
    return report;
}

ClassRange::ClassRange(int d, int max_dist) : n_(std::uint32_t{1} << d), max_dist_(max_dist) {}

ClassRange enumerate_classes(int d, int max_dist) {
    Hypercube cube(d);
    if (max_dist < 2 || max_dist > d)
        throw std::invalid_argument("enumerate_classes: need 2 <= max_dist <= d");
    return ClassRange(d, max_dist);
}

std::uint64_t class_count_up_to(int d, int max_dist) {
    if (d < 1 || d > kMaxDimension || max_dist < 2 || max_dist > d)
        throw std::invalid_argument("class_count_up_to: need 2 <= max_dist <= d <= 30");
    std::uint64_t total = 0;
    std::uint64_t binom = std::uint64_t(d) * (d - 1) / 2;  // C(d, 2)
    for (int i = 2; i <= max_dist; ++i) {
        total += binom << (i - 1);
        binom = binom * (d - i) / (i + 1);
    }
    return total;
}

std::size_t seed_count_for(int d, double c) {
    if (d < 2)
        throw std::invalid_argument(
            "seed_count_for: d must be >= 2 (the 1-cube is the trivial one-dimensional case)");
    if (d > kMaxDimension) throw std::invalid_argument("seed_count_for: d > 30");
    if (!(c > 0.0)) throw std::invalid_argument("seed_count_for: c must be positive");
    double raw = std::ceil(c * d / std::log(d));
    return std::max<std::size_t>(1, static_cast<std::size_t>(raw));
}

BuildResult build_representation(int d, double c, std::uint64_t rng_seed,
                                 int max_restarts) {
    if (d > kMaxClasswiseDim)
        throw CapacityError("build_representation verifies classwise and is guarded at d <= 18");
    if (max_restarts < 1) throw std::invalid_argument("max_restarts must be >= 1");
    const std::size_t size = seed_count_for(d, c);

    BuildResult result;
    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        SplitMix64 rng = derive_stream(rng_seed, static_cast<std::uint64_t>(attempt));
        SeedSet s = sample_seed_set(d, size, rng, rng_seed);
        VerificationReport report = verify_separation_classwise(s);
        result.attempts = attempt + 1;
        if (report.satisfied) {
            result.success = true;
            result.seeds = std::move(s);
            result.representation = cube_representation(result.seeds.seeds, d);
            return result;
        }
        result.failing_class = report.counterexample_class;
    }
    return result;
}

CSearchResult build_with_c_search(int d, std::uint64_t rng_seed, double c_min,
                                  double c_max, double c_step, int restarts_per_c) {
    if (!(c_min > 0.0) || !(c_step > 0.0) || c_max < c_min)
        throw std::invalid_argument("build_with_c_search: bad grid");
    CSearchResult result;
    const long points = static_cast<long>((c_max - c_min) / c_step + 1e-9);
    for (long i = 0; i <= points; ++i) {
        const double c = c_min + c_step * static_cast<double>(i);
        BuildResult build = build_representation(d, c, rng_seed, restarts_per_c);
        result.total_attempts += build.attempts;
        result.c_used = c;
        result.build = std::move(build);
        if (result.build.success) {
            result.success = true;
            return result;
        }
    }
    return result;
}

SeedSet minimize_seed_set(const SeedSet& s) {
    if (!verify_separation_classwise(s).satisfied)
        throw std::invalid_argument(
            "minimize_seed_set: input does not satisfy the separation property");
    SeedSet out = s;
    for (std::size_t i = out.seeds.size(); i-- > 0;) {
        if (out.seeds.size() == 1) break;
        SeedSet trial = out;
        trial.seeds.erase(trial.seeds.begin() + static_cast<std::ptrdiff_t>(i));
        if (verify_separation_classwise(trial).satisfied) out = std::move(trial);
    }
    return out;
}

MinSizeStats empirical_min_size(int d, std::uint64_t rng_seed, int trials) {
    Hypercube cube(d);
    if (d > kMaxClasswiseDim) throw CapacityError("empirical_min_size is guarded at d <= 18");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    MinSizeStats stats;
    stats.samples.reserve(static_cast<std::size_t>(trials));
    const std::size_t growth_cap = 64 * static_cast<std::size_t>(d) + 64;

    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng = derive_stream(rng_seed, static_cast<std::uint64_t>(t));
        SeedSet s{d, {}, rng_seed};
        for (;;) {
            s.seeds.push_back(static_cast<Vertex>(rng.next_bits(d)));
            if (verify_separation_classwise(s).satisfied) break;
            if (s.seeds.size() > growth_cap)
                throw std::logic_error("empirical_min_size: growth cap exceeded");
        }
        stats.samples.push_back(minimize_seed_set(s).size());
    }
    stats.min = *std::min_element(stats.samples.begin(), stats.samples.end());
    double sum = 0;
    for (std::size_t v : stats.samples) sum += static_cast<double>(v);
    stats.mean = sum / static_cast<double>(stats.samples.size());
    return stats;
}

}  // namespace cubehd
