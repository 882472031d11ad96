#include "cubehd/probability.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cubehd {

double ExactProbability::to_double() const {
    mpq_class q(num, den);
    q.canonicalize();
    return q.get_d();
}

std::string ExactProbability::to_string() const {
    return num.get_str() + "/" + den.get_str();
}

ExactProbability make_dyadic(mpz_class num, unsigned long twos_exponent) {
    // Reduce by the common power of two only; the denominator stays 2^k.
    unsigned long low = num == 0 ? twos_exponent : mpz_scan1(num.get_mpz_t(), 0);
    unsigned long shift = std::min(low, twos_exponent);
    mpz_class n = num >> shift;
    mpz_class d = mpz_class(1) << (twos_exponent - shift);
    return ExactProbability{std::move(n), std::move(d)};
}

ExactProbability layer_edge_prob_exact(int r) {
    if (r < 2)
        throw std::invalid_argument(
            "layer_edge_prob_exact: r >= 2 required (distance-1 pairs are edges and always survive)");
    mpz_class binom;
    if (r % 2 == 0) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(r),
                     static_cast<unsigned long>(r / 2));
        return make_dyadic(std::move(binom), static_cast<unsigned long>(r));
    }
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(r),
                 static_cast<unsigned long>((r + 1) / 2));
    return make_dyadic(std::move(binom), static_cast<unsigned long>(r - 1));
}

MonteCarloEstimate layer_edge_prob_monte_carlo(std::uint64_t u, std::uint64_t v, int d,
                                               std::uint64_t samples, SplitMix64& rng) {
    if (d < 2 || d > 64) throw std::invalid_argument("monte carlo: need 2 <= d <= 64");
    const std::uint64_t limit = d == 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << d) - 1;
    if (u > limit || v > limit) throw std::invalid_argument("monte carlo: vertex out of range");
    const std::uint64_t diff = u ^ v;
    const int r = std::popcount(diff);
    if (r < 2 || r > d) throw std::invalid_argument("monte carlo: need 2 <= dist(u,v) <= d");
    if (samples == 0) throw std::invalid_argument("monte carlo: samples >= 1");

    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::uint64_t x = rng.next_bits(d);
        int side = std::popcount((x ^ u) & diff);
        int gap = 2 * side - r;
        if (gap <= 1 && gap >= -1) ++hits;
    }
    MonteCarloEstimate est;
    est.samples = samples;
    est.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    est.std_error =
        std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
    return est;
}

MonteCarloEstimate layer_edge_prob_monte_carlo(int r, int d, std::uint64_t samples,
                                               SplitMix64& rng) {
    if (r < 2 || r > d) throw std::invalid_argument("monte carlo: need 2 <= r <= d");
    const std::uint64_t v = r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
    return layer_edge_prob_monte_carlo(0, v, d, samples, rng);
}

ExactProbability worst_case_survival(std::size_t size) {
    if (size == 0) throw std::invalid_argument("worst_case_survival: size >= 1");
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), 3, static_cast<unsigned long>(size));
    return make_dyadic(std::move(num), static_cast<unsigned long>(2 * size));
}

SqrtBoundScan sqrt_bound_constant(int r_max) {
    if (r_max < 3) throw std::invalid_argument("sqrt_bound_constant: r_max >= 3");

    // p(r+2)/p(r) is (r+1)/(r+2) for even r and (r+2)/(r+3) for odd r, so
    // the scan runs on a cheap recurrence from p(2) = 1/2 and p(3) = 3/4
    // (cross-checked against the exact dyadics in the tests).
    SqrtBoundScan scan;
    double p_even = 0.5, p_odd = 0.75;
    double prev_even = -1.0, prev_odd = -1.0;
    scan.even_terms_increasing = true;
    scan.odd_terms_increasing = true;

    for (int r = 2; r <= r_max; ++r) {
        const bool even = (r % 2 == 0);
        double p;
        if (even) {
            if (r > 2) p_even *= static_cast<double>(r - 1) / static_cast<double>(r);
            p = p_even;
        } else {
            if (r > 3) p_odd *= static_cast<double>(r) / static_cast<double>(r + 1);
            p = p_odd;
        }
        const double term = p * std::sqrt(static_cast<double>(r));
        if (term > scan.c1) {
            scan.c1 = term;
            scan.argmax_r = r;
        }
        if (even) {
            if (prev_even >= 0 && term <= prev_even) scan.even_terms_increasing = false;
            prev_even = term;
            scan.last_even_term = term;
        } else {
            if (prev_odd >= 0 && term <= prev_odd) scan.odd_terms_increasing = false;
            prev_odd = term;
            scan.last_odd_term = term;
        }
    }
    return scan;
}

ClassCountBounds class_count(int d, int t) {
    if (d < 2 || t < 2 || t > d) throw std::invalid_argument("class_count: need 2 <= t <= d");
    ClassCountBounds out;
    out.exact = 0;
    mpz_class binom;
    for (int i = 2; i <= t; ++i) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d),
                     static_cast<unsigned long>(i));
        out.exact += binom << (i - 1);
    }
    mpz_ui_pow_ui(out.coarse_bound.get_mpz_t(), static_cast<unsigned long>(2 * d),
                  static_cast<unsigned long>(t));
    out.coarse_bound *= t;
    return out;
}

BoundReport failure_bound(int d, double c) {
    if (d < 4) throw std::invalid_argument("failure_bound: d >= 4 (smaller d is analysis-exempt)");
    if (!(c > 0.0)) throw std::invalid_argument("failure_bound: c must be positive");

    BoundReport report;
    report.d = d;
    report.c = c;
    report.c1 = kSurvivalSqrtSup;

    const double log2d = std::log2(static_cast<double>(d));
    const double size_exp = c * d / log2d;  // the analysis size c*d/log2(d), real-valued
    report.t = static_cast<int>(d / (log2d * log2d));

    // Far pairs: at most 2^(2d) of them, each surviving one layer with
    // probability at most c1/sqrt(dist) <= c1*log2(d)/sqrt(d).
    report.log2_bound_a =
        2.0 * d + size_exp * std::log2(report.c1 * log2d / std::sqrt(static_cast<double>(d)));

    // Near pairs: at most t*(2d)^t classes, each surviving with
    // probability at most (3/4)^size.
    report.b_side_empty = report.t < 2;
    if (report.b_side_empty) {
        report.log2_bound_b = -std::numeric_limits<double>::infinity();
        report.log2_total = report.log2_bound_a;
    } else {
        report.log2_bound_b = std::log2(static_cast<double>(report.t)) +
                              report.t * std::log2(2.0 * d) +
                              size_exp * std::log2(0.75);
        const double hi = std::max(report.log2_bound_a, report.log2_bound_b);
        const double lo = std::min(report.log2_bound_a, report.log2_bound_b);
        report.log2_total = hi + std::log2(1.0 + std::exp2(lo - hi));
    }
    report.total_lt_1 = report.log2_total < 0.0;
    return report;
}

std::optional<double> required_c(int d, double c_min, double c_max, double step) {
    if (!(c_min > 0.0) || !(step > 0.0) || c_max < c_min)
        throw std::invalid_argument("required_c: bad grid");
    const long points = static_cast<long>((c_max - c_min) / step + 1e-9);
    for (long i = 0; i <= points; ++i) {
        const double c = c_min + step * static_cast<double>(i);
        if (failure_bound(d, c).total_lt_1) return c;
    }
    return std::nullopt;
}

double cubicity_lower_bound(int d) {
    if (d < 2) throw std::invalid_argument("cubicity_lower_bound: d >= 2");
    return static_cast<double>(d - 1) / std::log2(static_cast<double>(d));
}

}  // namespace cubehd
