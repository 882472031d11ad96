#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubehd/errors.hpp"
#include "cubehd/hypercube.hpp"
#include "cubehd/interval_model.hpp"
#include "cubehd/rng.hpp"

// Random seed sampling, the separation property, and its two independent
// verifiers.
//
// A seed multiset S has the separation property when every non-adjacent
// pair (u, v) of the hypercube is non-adjacent in the layer graph of at
// least one x in S; the edge intersection of the layer graphs then equals
// the hypercube exactly. The pairwise verifier walks all non-adjacent
// pairs. The classwise verifier walks equivalence classes instead: pairs
// with the same differing-position set and the same (canonicalized) bit
// pattern on it behave identically in every layer graph, so one
// representative decides the whole class. Both verifiers check every
// class distance from 2 to d and must agree wherever both run.

namespace cubehd {

inline constexpr int kMaxPairwiseDim = 14;   // ~1.3e8 pairs at d = 14
inline constexpr int kMaxClasswiseDim = 18;  // ~1.9e8 classes at d = 18

struct SeedSet {
    int d = 0;
    std::vector<Vertex> seeds;   // ordered multiset, duplicates kept
    std::uint64_t rng_seed = 0;  // generator seed that produced it, 0 if handmade

    std::size_t size() const { return seeds.size(); }
    /// Seeds that repeat an earlier element; they never add separation.
    std::size_t duplicate_count() const;
};

// One equivalence class of non-adjacent pairs: the common
// differing-position set plus the canonical packed bit pattern on it
// (lex_pattern packing; canonical means the bit at the lowest position is
// 0, i.e. the pattern is the lexicographically smaller of the
// pattern/complement pair).
struct NonAdjacencyClass {
    PositionSet positions = 0;
    std::uint32_t pattern = 0;

    int distance() const { return std::popcount(positions); }
    /// The member vertex whose bits vanish outside `positions`.
    Vertex representative() const { return expand_pattern(pattern, positions); }
    /// Canonically oriented representative pair of the class.
    std::pair<Vertex, Vertex> representative_pair() const {
        Vertex u = representative();
        return {u, u ^ positions};
    }
    bool operator==(const NonAdjacencyClass&) const = default;
};

inline NonAdjacencyClass make_class(PositionSet positions, Vertex member) {
    std::uint32_t width = static_cast<std::uint32_t>(std::popcount(positions));
    if (width < 2)
        throw std::invalid_argument("make_class: a class needs at least two positions");
    std::uint32_t p = lex_pattern(member, positions);
    std::uint32_t top = std::uint32_t{1} << (width - 1);
    if (p & top) p = ~p & (top | (top - 1));  // take the complement pattern
    return NonAdjacencyClass{positions, p};
}

enum class VerifyMethod { pairwise, classwise };

struct VerificationReport {
    bool satisfied = false;
    VerifyMethod method = VerifyMethod::pairwise;
    std::uint64_t checked = 0;  // pairs or classes examined
    std::optional<std::pair<Vertex, Vertex>> counterexample;
    std::optional<NonAdjacencyClass> counterexample_class;
    std::chrono::microseconds elapsed{0};
};

/// Draw `size` vertices, every bit independently uniform. Duplicates are
/// kept; same generator state gives an identical multiset.
SeedSet sample_seed_set(int d, std::size_t size, SplitMix64& rng,
                        std::uint64_t recorded_seed = 0);

/// Does the layer graph of x drop the non-adjacent pair (u, v)?
/// Equivalent to the side counts differing by at least 2.
inline bool separates(Vertex x, Vertex u, Vertex v) {
    if (u == v || is_adjacent(u, v))
        throw std::invalid_argument("separates: (u,v) must be a distinct non-adjacent pair");
    return !layer_adjacent(x, u, v);
}

/// Walks every non-adjacent pair in enumeration order; the counterexample
/// on failure is the first unseparated pair. Guarded at d <= 14; larger d
/// must use the classwise verifier.
VerificationReport verify_separation_pairwise(const SeedSet& s);

/// Walks every non-adjacency class (all distances 2..d), one
/// representative each. Agrees with the pairwise verifier wherever both
/// run. Guarded at d <= 18.
VerificationReport verify_separation_classwise(const SeedSet& s);

/// Raw class enumeration for hot loops: fn(mask, representative) is called
/// once per class in the fixed order (mask ascending, representative
/// ascending); return false to stop.
template <class F>
void for_each_class_raw(int d, int max_dist, F&& fn) {
    const std::uint32_t n = std::uint32_t{1} << d;
    for (std::uint32_t m = 3; m < n; ++m) {
        int dist = std::popcount(m);
        if (dist < 2 || dist > max_dist) continue;
        // Canonical representatives are exactly the submasks of m with the
        // lowest mask bit clear.
        std::uint32_t body = m ^ (m & (0u - m));
        std::uint32_t sub = 0;
        do {
            if (!fn(static_cast<PositionSet>(m), static_cast<Vertex>(sub))) return;
            sub = (sub - body) & body;
        } while (sub != 0);
    }
}

// Iterator form of the class enumeration, same order as for_each_class_raw.
class ClassRange {
public:
    ClassRange(int d, int max_dist);

    class iterator {
    public:
        using value_type = NonAdjacencyClass;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator(std::uint32_t n, int max_dist, std::uint32_t mask, std::uint32_t sub)
            : n_(n), max_dist_(max_dist), mask_(mask), sub_(sub) {
            settle();
        }

        value_type operator*() const { return make_class(mask_, sub_); }
        iterator& operator++() {
            advance();
            return *this;
        }
        iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator& o) const { return mask_ == o.mask_ && sub_ == o.sub_; }
        bool operator!=(const iterator& o) const { return !(*this == o); }

    private:
        bool mask_ok() const {
            int dist = std::popcount(mask_);
            return dist >= 2 && dist <= max_dist_;
        }
        void settle() {  // move mask_ forward to the next admissible one
            while (mask_ < n_ && !mask_ok()) ++mask_;
            if (mask_ >= n_) { mask_ = n_; sub_ = 0; }
        }
        void advance() {
            std::uint32_t body = mask_ ^ (mask_ & (0u - mask_));
            sub_ = (sub_ - body) & body;
            if (sub_ == 0) {
                ++mask_;
                settle();
            }
        }
        std::uint32_t n_;
        int max_dist_;
        std::uint32_t mask_, sub_;
    };

    iterator begin() const { return iterator(n_, max_dist_, 3, 0); }
    iterator end() const { return iterator(n_, max_dist_, n_, 0); }

private:
    std::uint32_t n_;
    int max_dist_;
};

/// Every class with distance in [2, max_dist], canonical pattern only.
ClassRange enumerate_classes(int d, int max_dist);

/// Number of classes with distance in [2, max_dist]: sum of C(d,i)*2^(i-1).
std::uint64_t class_count_up_to(int d, int max_dist);

/// Seeds per attempt for dimension d and construction constant c:
/// max(1, ceil(c*d/ln d)). Rejects d < 2 (the 1-cube is the trivial
/// one-dimensional case) and c <= 0.
std::size_t seed_count_for(int d, double c);

struct BuildResult {
    bool success = false;
    SeedSet seeds;
    CubeRepresentation representation;  // meaningful only on success
    int attempts = 0;
    std::optional<NonAdjacencyClass> failing_class;  // last counterexample on failure
};

/// Samples seed_count_for(d, c) seeds per attempt with a fresh derived
/// stream, runs the classwise verifier, and stops at the first success.
BuildResult build_representation(int d, double c, std::uint64_t rng_seed,
                                 int max_restarts);

struct CSearchResult {
    bool success = false;
    double c_used = 0.0;
    BuildResult build;     // result at c_used on success, last grid point otherwise
    int total_attempts = 0;
};

/// Climbs the c grid {c_min, c_min+c_step, ..., <= c_max}, giving each
/// value up to restarts_per_c attempts, and returns the first success.
CSearchResult build_with_c_search(int d, std::uint64_t rng_seed,
                                  double c_min = 1.0, double c_max = 5.0,
                                  double c_step = 0.5, int restarts_per_c = 20);

/// Greedily drops seeds in reverse sampling order while the separation
/// property survives. Input must already satisfy it. Idempotent; never
/// returns an empty set.
SeedSet minimize_seed_set(const SeedSet& s);

struct MinSizeStats {
    std::size_t min = 0;
    double mean = 0.0;
    std::vector<std::size_t> samples;  // one minimized size per trial
};

/// Per trial: grow a random seed list one vertex at a time until the
/// separation property holds, then minimize. Incremental growth is an
/// extension specific to this probe; build_representation always
/// resamples whole sets. Deterministic per (d, rng_seed, trials).
MinSizeStats empirical_min_size(int d, std::uint64_t rng_seed, int trials);

}  // namespace cubehd
