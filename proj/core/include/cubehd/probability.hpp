#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "cubehd/hypercube.hpp"
#include "cubehd/rng.hpp"

// Exact and Monte Carlo evaluation of the probabilities behind the
// randomized construction, plus log-space failure-probability bounds for
// dimensions far beyond enumeration range. Probabilities are dyadic
// rationals (power-of-two denominators) held exactly in GMP integers;
// the d-scale bounds are evaluated as base-2 logarithms because the raw
// quantities span hundreds of orders of magnitude.

namespace cubehd {

struct ExactProbability {
    mpz_class num;
    mpz_class den;  // a power of two (or 1) after reduction

    double to_double() const;
    std::string to_string() const;  // "num/den"

    friend bool operator==(const ExactProbability& a, const ExactProbability& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator<(const ExactProbability& a, const ExactProbability& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const ExactProbability& a, const ExactProbability& b) {
        return !(b < a);
    }
};

ExactProbability make_dyadic(mpz_class num, unsigned long twos_exponent);

/// Probability that a non-adjacent pair at distance r stays adjacent in
/// the layer graph of a uniformly random apex:
///   r even: C(r, r/2) / 2^r,  r odd: C(r, (r+1)/2) / 2^(r-1).
/// Strictly decreasing along each parity; maxima 1/2 (r=2) and 3/4 (r=3).
/// r < 2 is rejected: a pair at distance 1 is an edge and survives with
/// probability 1 in every layer graph.
ExactProbability layer_edge_prob_exact(int r);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

/// Samples random apexes for a fixed pair at distance r in an ambient
/// d-cube (d <= 64). The estimate depends only on r, never on which pair
/// realizes it.
MonteCarloEstimate layer_edge_prob_monte_carlo(int r, int d, std::uint64_t samples,
                                               SplitMix64& rng);
/// Same estimator for an explicit pair.
MonteCarloEstimate layer_edge_prob_monte_carlo(std::uint64_t u, std::uint64_t v, int d,
                                               std::uint64_t samples, SplitMix64& rng);

/// (3/4)^size: the worst-case probability that one non-adjacent pair
/// survives every layer graph of a seed set of the given size.
ExactProbability worst_case_survival(std::size_t size);

// Scan of the terms a(r) = layer_edge_prob_exact(r) * sqrt(r). The
// maximum over the scanned range is the smallest constant c1 with
// prob <= c1/sqrt(r) for every scanned r. The terms increase strictly
// along each parity toward the odd-limit supremum 2*sqrt(2/pi), so the
// scan maximum sits at the largest odd r and creeps toward the supremum
// as r_max grows; the flags record the monotonicity actually observed.
struct SqrtBoundScan {
    double c1 = 0.0;
    int argmax_r = 0;
    bool odd_terms_increasing = false;
    bool even_terms_increasing = false;
    double last_odd_term = 0.0;
    double last_even_term = 0.0;
};

/// Supremum of layer_edge_prob_exact(r)*sqrt(r) over all r >= 2; the
/// asymptotic limit of the odd-r terms, valid as c1 for every distance.
inline const double kSurvivalSqrtSup = 1.5957691216057308;  // 2*sqrt(2/pi)

SqrtBoundScan sqrt_bound_constant(int r_max);

struct ClassCountBounds {
    mpz_class exact;         // sum over i in [2, t] of C(d, i) * 2^(i-1)
    mpz_class coarse_bound;  // t * (2d)^t
};

/// Exact non-adjacency class count up to distance t, next to the coarse
/// closed-form bound it is dominated by (exact <= 2*exact <= coarse).
ClassCountBounds class_count(int d, int t);

// Log-space failure bound for a random seed set of (real) size
// c*d/log2(d). Non-adjacent pairs split at distance d/log2(d)^2: far
// pairs are union-bounded with the sqrt constant against the 2^(2d) pair
// count (bound A); near pairs are union-bounded classwise with the
// coarse class count against (3/4)^size (bound B). total < 1 certifies
// that a satisfying seed set of that size exists.
struct BoundReport {
    int d = 0;
    double c = 0.0;
    int t = 0;  // floor(d / log2(d)^2)
    double log2_bound_a = 0.0;
    double log2_bound_b = 0.0;  // -inf when the near side is empty (t < 2)
    double log2_total = 0.0;
    double c1 = 0.0;
    bool b_side_empty = false;
    bool total_lt_1 = false;
};

BoundReport failure_bound(int d, double c);

/// Smallest c on the grid {c_min, c_min+step, ...} <= c_max with
/// failure_bound total < 1; nullopt when no grid point qualifies.
std::optional<double> required_c(int d, double c_min = 0.1, double c_max = 100.0,
                                 double step = 0.1);

/// Known lower bound for the cubicity of the d-cube: (d-1)/log2(d).
double cubicity_lower_bound(int d);

}  // namespace cubehd
