#include "ww/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <string>

#include "ww/rng.hpp"

namespace ww {

namespace {

using C = std::complex<double>;

void check_dense_n(int n, const char* where) {
    if (n < 1 || n > 10) {
        throw TooLarge(std::string(where) + ": dense work limited to n <= 10");
    }
}

} // namespace

void DenseHermitian::validate() const {
    if (n < 1 || mat.rows() != mat.cols() ||
        static_cast<std::size_t>(mat.rows()) != (std::size_t{1} << n)) {
        throw InvalidInput("DenseHermitian: dimension is not 2^n");
    }
    const double scale = std::max(1.0, mat.cwiseAbs().maxCoeff());
    if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > 1e-14 * scale) {
        throw InvalidInput("DenseHermitian: matrix is not Hermitian");
    }
}

Eigen::Matrix2cd spin_operator(double theta) {
    if (!std::isfinite(theta)) throw InvalidInput("spin_operator: non-finite angle");
    Eigen::Matrix2cd m;
    m << C{0.0, 0.0}, std::polar(1.0, -theta),
         std::polar(1.0, theta), C{0.0, 0.0};
    return m;
}

DenseHermitian build_dense(const SignFunction& f, const AngleConfig& angles) {
    f.validate();
    angles.validate();
    if (f.n != angles.n) throw InvalidInput("build_dense: party count mismatch");
    check_dense_n(f.n, "build_dense");

    const int n = f.n;
    const std::size_t dim = std::size_t{1} << n;
    const WalshSpectrum beta = walsh_beta(f);

    DenseHermitian h;
    h.n = n;
    h.mat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));

    std::vector<Eigen::Matrix2cd> factors(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < dim; ++s) {
        if (beta.numer[s] == 0) continue;
        const double w = beta.beta(s);
        for (int j = 0; j < n; ++j) {
            factors[static_cast<std::size_t>(j)] = spin_operator(angles.theta[j][(s >> j) & 1u]);
        }
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                C prod{w, 0.0};
                for (int j = 0; j < n && prod != C{0.0, 0.0}; ++j) {
                    prod *= factors[static_cast<std::size_t>(j)]((r >> j) & 1u, (c >> j) & 1u);
                }
                if (prod != C{0.0, 0.0}) {
                    h.mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += prod;
                }
            }
        }
    }
    return h;
}

std::vector<double> eigen_magnitudes(const DenseHermitian& h) {
    h.validate();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.mat);
    if (solver.info() != Eigen::Success) {
        throw NumericalFailure("eigen_magnitudes: decomposition failed");
    }
    const Eigen::VectorXd vals = solver.eigenvalues();
    const double hnorm = std::max(vals.cwiseAbs().maxCoeff(), 1e-300);
    for (Eigen::Index k = 0; k < vals.size(); ++k) {
        const Eigen::VectorXcd v = solver.eigenvectors().col(k);
        const double residual = (h.mat * v - vals[k] * v).norm();
        if (residual > 1e-10 * hnorm) {
            throw NumericalFailure("eigen_magnitudes: residual " + std::to_string(residual) +
                                   " above 1e-10 * ||H||");
        }
    }
    std::vector<double> mags(static_cast<std::size_t>(vals.size()));
    for (Eigen::Index k = 0; k < vals.size(); ++k) mags[static_cast<std::size_t>(k)] = std::abs(vals[k]);
    std::sort(mags.begin(), mags.end(), std::greater<>());
    return mags;
}

double verify_ghz_eigenvectors(const SignFunction& f, const AngleConfig& angles) {
    check_dense_n(f.n, "verify_ghz_eigenvectors");
    const DenseHermitian h = build_dense(f, angles);
    const std::size_t dim = std::size_t{1} << f.n;
    const std::size_t full = dim - 1;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    double max_residual = 0.0;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        const OmegaVector omega = OmegaVector::from_index(f.n, idx);
        const SpectrumEntry e = eigenvalue(f, angles, omega);
        const std::size_t mirror = idx ^ full; // |-omega>
        for (int branch = 0; branch < 2; ++branch) {
            const double lam = branch == 0 ? e.magnitude : -e.magnitude;
            const C top = std::polar(inv_sqrt2, e.phase) * (branch == 0 ? 1.0 : -1.0);
            Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
            psi(static_cast<Eigen::Index>(idx)) = top;
            psi(static_cast<Eigen::Index>(mirror)) = C{inv_sqrt2, 0.0};
            const double residual = (h.mat * psi - lam * psi).norm();
            max_residual = std::max(max_residual, residual);
        }
    }
    return max_residual;
}

Eigen::VectorXcd assemble_product(const std::vector<Eigen::Vector2cd>& locals) {
    Eigen::VectorXcd v(1);
    v(0) = C{1.0, 0.0};
    for (const auto& loc : locals) {
        Eigen::VectorXcd next(2 * v.size());
        // Party j occupies index bit j: |b_n ... b_1> with b_1 least significant.
        next.head(v.size()) = loc(0) * v;
        next.tail(v.size()) = loc(1) * v;
        v.swap(next);
    }
    return v;
}

ProductState random_product_state(int n, Rng& rng) {
    ProductState st;
    st.locals.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const auto [a, b] = rng.normal2();
        const auto [c, d] = rng.normal2();
        Eigen::Vector2cd loc;
        loc << C{a, b}, C{c, d};
        const double norm = loc.norm();
        if (norm < 1e-12) {
            loc << C{1.0, 0.0}, C{0.0, 0.0};
        } else {
            loc /= norm;
        }
        st.locals.push_back(loc);
    }
    st.assembled = assemble_product(st.locals);
    return st;
}

double separable_bound_check(const SignFunction& f, const AngleConfig& angles,
                             int samples, std::uint64_t seed) {
    check_dense_n(f.n, "separable_bound_check");
    const DenseHermitian h = build_dense(f, angles);
    Rng rng(seed);
    double max_abs = 0.0;
    for (int k = 0; k < samples; ++k) {
        const ProductState st = random_product_state(f.n, rng);
        const double expectation = std::real(st.assembled.dot(h.mat * st.assembled));
        max_abs = std::max(max_abs, std::abs(expectation));
    }
    if (max_abs > 1.0 + 1e-9) {
        throw BoundViolated("separable_bound_check: product-state expectation " +
                            std::to_string(max_abs) + " exceeds 1");
    }
    return max_abs;
}

namespace {

struct LocalAscent {
    double value = 0.0;
    bool converged = false;
};

LocalAscent product_ascent(const Eigen::MatrixXcd& gram, int n,
                           std::vector<Eigen::Vector2cd> locals, int max_iters) {
    const std::size_t dim = std::size_t{1} << n;
    double cur = 0.0;
    {
        const Eigen::VectorXcd phi = assemble_product(locals);
        cur = std::sqrt(std::max(0.0, std::real(phi.dot(gram * phi))));
    }
    LocalAscent res;
    for (int iter = 0; iter < max_iters; ++iter) {
        const double before = cur;
        for (int j = 0; j < n; ++j) {
            // ||H Phi||^2 = <alpha_j| M |alpha_j> with M the 2x2 contraction of
            // H^dagger H over the other sites.
            std::array<Eigen::VectorXcd, 2> basis_vec;
            for (int a = 0; a < 2; ++a) {
                auto locs = locals;
                locs[static_cast<std::size_t>(j)] = Eigen::Vector2cd::Unit(a);
                basis_vec[static_cast<std::size_t>(a)] = assemble_product(locs);
            }
            Eigen::Matrix2cd m;
            for (int a = 0; a < 2; ++a) {
                const Eigen::VectorXcd ga = gram * basis_vec[static_cast<std::size_t>(a)];
                for (int b = 0; b < 2; ++b) {
                    m(b, a) = basis_vec[static_cast<std::size_t>(b)].dot(ga);
                }
            }
            m = 0.5 * (m + m.adjoint().eval());
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(m);
            const Eigen::Index top = solver.eigenvalues()(1) >= solver.eigenvalues()(0) ? 1 : 0;
            locals[static_cast<std::size_t>(j)] = solver.eigenvectors().col(top);
            cur = std::sqrt(std::max(0.0, solver.eigenvalues()(top)));
        }
        if (cur - before < 1e-12) {
            res.converged = true;
            break;
        }
    }
    res.value = cur;
    (void)dim;
    return res;
}

} // namespace

ProductNormReport product_norm(const DenseHermitian& h, int restarts, std::uint64_t seed) {
    h.validate();
    check_dense_n(h.n, "product_norm");
    if (restarts < 1) throw InvalidInput("product_norm: restarts >= 1 required");
    const Eigen::MatrixXcd gram = h.mat.adjoint() * h.mat;

    ProductNormReport rep;
    rep.restarts_used = restarts;
    bool all_converged = true;
    for (int r = 0; r < restarts; ++r) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        const ProductState st = random_product_state(h.n, rng);
        const LocalAscent res = product_ascent(gram, h.n, st.locals, 1000);
        all_converged = all_converged && res.converged;
        rep.value = std::max(rep.value, res.value);
    }
    rep.converged = all_converged;
    return rep;
}

} // namespace ww
