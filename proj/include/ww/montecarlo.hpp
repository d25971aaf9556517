#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ww/spectrum.hpp"

namespace ww {

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

/// 95% Wilson score interval for a binomial proportion.
WilsonInterval wilson_ci(std::size_t successes, std::size_t trials);

struct SampleRecord {
    std::size_t index = 0;
    std::string f_hex;
    double norm = 0.0;
    int sweeps = 0;
    int restarts_used = 0;
    bool converged = true;
};

struct ScalingRow {
    int n = 0;
    std::size_t samples = 0;
    double median = 0.0;
    double mean = 0.0;
    double p95 = 0.0;
    double max = 0.0;
    double ratio_to_root_nlogn = 0.0; // median / sqrt(n ln n)
    double mk_ceiling = 0.0;          // sqrt(2^{n-1}) for reference
    std::vector<SampleRecord> records;
};

struct TailReport {
    int n = 0;
    std::size_t samples = 0;
    double threshold = 0.0;
    double empirical_probability = 0.0;
    WilsonInterval wilson_ci_95;
    std::string bound_kind; // "1/M^2", "1/(N^2 e^r)", "C sqrt(n log n) exceedance"
    double bound_param = 0.0; // M or C
    double bound_value = 0.0;
    std::string note;
};

/// Draws `samples` uniform facet functions, optimizes each, and aggregates.
/// Per-sample seeds are derived as hash(seed, index), so the result is
/// bit-identical at any worker count.
ScalingRow sample_max_norms(int n, std::size_t samples, std::uint64_t seed,
                            const OptimizeOptions& opts, int workers = 1);

/// Empirical exceedance of C sqrt(n ln n) per (C, n), with Wilson CIs. The
/// consistency check against the vanishing-tail claim is trend-based.
std::vector<TailReport> theorem1_exceedance(const std::vector<ScalingRow>& rows,
                                            const std::vector<double>& c_grid);

/// Chebyshev tail at fixed directions: draws one random AngleConfig and one
/// omega from `seed`, samples f, and compares P{|lambda_f| > M} to 1/M^2.
std::vector<TailReport> prop2_tail(int n, std::size_t samples,
                                   const std::vector<double>& m_grid, std::uint64_t seed);

/// Tail of the optimized sup-norm against C sqrt(2n ln n), reported next to
/// the theoretical ceiling 1/(n^2 e^{2n}). At desk scale the ceiling is
/// astronomically small, so this is a sanity report, not a sharp test.
std::vector<TailReport> szk_tail(int n, std::size_t samples, std::uint64_t seed,
                                 const OptimizeOptions& opts,
                                 const std::vector<double>& c_grid, int workers = 1);

struct SubnormalRow {
    double lambda = 0.0;
    double cosh_value = 0.0;
    double gaussian_bound = 0.0; // e^{lambda^2/2}
    bool analytic_ok = false;    // cosh(lambda) <= e^{lambda^2/2}
    double empirical_mean = 0.0; // mean of exp(lambda xi) over sampled f
    double four_sigma = 0.0;
    bool empirical_ok = false;
};

/// Subnormal-moment check: analytic cosh bound plus the empirical moment of
/// a fixed coordinate xi_eps of random sign functions.
std::vector<SubnormalRow> subnormal_check(const std::vector<double>& lambda_grid,
                                          int n, std::size_t samples, std::uint64_t seed);

} // namespace ww
