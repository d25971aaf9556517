#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "ww/spectrum.hpp"

namespace ww {

/// Explicit 2^n x 2^n complex Hermitian matrix, the brute-force ground truth.
struct DenseHermitian {
    int n = 0;
    Eigen::MatrixXcd mat;

    std::size_t dim() const { return static_cast<std::size_t>(mat.rows()); }
    /// Throws InvalidInput unless the matrix is Hermitian to 1e-14 and the
    /// dimension is 2^n.
    void validate() const;
};

/// cos(theta) sigma_x + sin(theta) sigma_y in the z eigenbasis: zero diagonal,
/// off-diagonal e^{-i theta} / e^{+i theta}. Squares to the identity.
Eigen::Matrix2cd spin_operator(double theta);

/// The explicit sum of 2^n weighted tensor-product terms
/// sum_s beta(s) sigma(theta_{s_1}^1) x ... x sigma(theta_{s_n}^n),
/// with party j on index bit j. n <= 10.
DenseHermitian build_dense(const SignFunction& f, const AngleConfig& angles);

/// Multiset {|eigenvalue|} in descending order. Residuals ||Hv - lambda v||
/// are checked against 1e-10 ||H|| and NumericalFailure is thrown on miss.
std::vector<double> eigen_magnitudes(const DenseHermitian& h);

/// Assembles the GHZ pair (e^{i Theta}|omega> + |-omega>)/sqrt(2) for every
/// omega, with Theta from the analytic spectrum, and applies the dense matrix
/// to both eigenvalue branches. Returns the largest eigen-equation residual.
double verify_ghz_eigenvectors(const SignFunction& f, const AngleConfig& angles);

struct ProductState {
    std::vector<Eigen::Vector2cd> locals;
    Eigen::VectorXcd assembled;
};

/// Haar-uniform local states via normalized complex Gaussian pairs.
ProductState random_product_state(int n, Rng& rng);

Eigen::VectorXcd assemble_product(const std::vector<Eigen::Vector2cd>& locals);

/// Samples random product states and returns max |<Phi|W_f|Phi>|. The bound
/// |tr(rho W_f)| <= 1 on separable states is a theorem; exceeding 1 + 1e-9
/// throws BoundViolated because it can only mean an implementation bug.
double separable_bound_check(const SignFunction& f, const AngleConfig& angles,
                             int samples, std::uint64_t seed);

struct ProductNormReport {
    double value = 0.0;
    bool converged = true;
    int restarts_used = 0;
};

/// Lower bound on [[H]] = sup ||H |a_1>...|a_n>|| by alternating ascent: with
/// all sites but j frozen, ||H Phi||^2 is a 2x2 quadratic form at site j whose
/// principal eigenvector is the exact update.
ProductNormReport product_norm(const DenseHermitian& h, int restarts, std::uint64_t seed);

} // namespace ww
