#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "ww/boolfn.hpp"
#include "ww/rng.hpp"

namespace ww {

/// The 2n measurement angles theta_s^j, one pair per party, giving the
/// directions a_s^j in the plane orthogonal to z_j. Normalized to [0, 2pi).
struct AngleConfig {
    int n = 0;
    std::vector<std::array<double, 2>> theta; // theta[j] = (theta_0^j, theta_1^j)

    static AngleConfig zeros(int n);
    static AngleConfig random(int n, Rng& rng);

    void normalize();
    void validate() const;
};

/// Basis label omega in {-1,+1}^n.
struct OmegaVector {
    std::vector<std::int8_t> omega;

    /// State index of |omega>: bit j is set iff omega_j = -1.
    std::size_t index() const;
    static OmegaVector from_index(int n, std::size_t idx);
};

struct SpectrumEntry {
    double magnitude = 0.0; // |lambda(omega)|
    double phase = 0.0;     // Theta(omega) in [0, 2pi), making lambda real >= 0
};

struct SpectrumResult {
    int n = 0;
    std::vector<SpectrumEntry> entries; // indexed by OmegaVector::index()
    double norm = 0.0;                  // max magnitude
    std::size_t argmax_index = 0;       // lexicographically smallest maximizer

    OmegaVector argmax_omega() const { return OmegaVector::from_index(n, argmax_index); }
};

/// The coefficient polynomials g_eps(t) = 2^{-n} prod_j (e^{i t0_j} + (-1)^{eps_j} e^{i t1_j}),
/// built as a tensor product in O(2^n). Satisfies sum_eps |g_eps|^2 = 1 for all t.
std::vector<std::complex<double>> g_vector(const AngleConfig& t);

/// sum_eps f(eps) g_eps(t), equal to sum_s beta(s) exp i(t_{s_1}^1+...+t_{s_n}^n).
std::complex<double> bell_polynomial(const SignFunction& f, const AngleConfig& t);

/// The same value through the direct beta-sum route; the two must agree to
/// 1e-12 and the tests hold them to it.
std::complex<double> bell_polynomial_beta(const WalshSpectrum& beta, const AngleConfig& t);

/// Magnitude and phase of the eigenvalue on the GHZ pair labeled by omega:
/// the bell polynomial at t_s^j = omega_j theta_s^j, with Theta = -arg so the
/// eigenvalue is real and non-negative. Exactly symmetric under omega -> -omega.
SpectrumEntry eigenvalue(const SignFunction& f, const AngleConfig& angles, const OmegaVector& omega);

/// All 2^n eigenvalue magnitudes and phases in O(n 2^n). Throws TooLarge for
/// n above the cap (default 14).
SpectrumResult full_spectrum(const SignFunction& f, const AngleConfig& angles, int n_cap = 14);

struct OptimizeOptions {
    int restarts = 32;
    double tol = 1e-12;
    int max_sweeps = 10000;
    std::uint64_t seed = 0;
    /// Extra deterministic starting point tried in addition to the random
    /// restarts (e.g. the (0, pi/2) schedule for Mermin-Klyshko facets).
    std::optional<AngleConfig> initial;
};

struct OptimizeReport {
    AngleConfig best_angles;
    double best_norm = 0.0;
    int restarts_used = 0;
    int sweeps = 0;       // sweeps of the best restart
    bool converged = true;
    std::vector<double> history; // per-sweep norms of the best restart, non-decreasing
};

/// Coordinate-ascent maximization of |bell_polynomial(f, t)| over the 2n
/// torus variables. Each single-angle subproblem |A e^{it} + B| is solved
/// exactly by t = arg(B) - arg(A), so sweeps are monotone; the result is a
/// certified lower bound on the true maximum over directions.
OptimizeReport maximize_norm(const SignFunction& f, const OptimizeOptions& opts = {});

/// sqrt(2^{n-1}), the largest norm any facet can reach.
double max_possible_norm(int n);

/// The Mermin-Klyshko facet for n parties, oracle-certified: the optimizer
/// must reach sqrt(2^{n-1}) within `tolerance` or ConstructionInvalid is
/// thrown. The certified report is returned through `report` when non-null.
SignFunction mermin_klyshko_f(int n, const OptimizeOptions& opts = {},
                              double tolerance = 1e-6, OptimizeReport* report = nullptr);

} // namespace ww
