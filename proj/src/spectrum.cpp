#include "ww/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ww/rng.hpp"

namespace ww {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

void check_match(const SignFunction& f, const AngleConfig& t) {
    f.validate();
    t.validate();
    if (f.n != t.n) {
        throw InvalidInput("party count mismatch between f and angles");
    }
}

// Lexicographic rank of omega with -1 < +1 and omega_1 compared first.
// Index bit j is set iff omega_{j+1} = -1.
std::size_t lex_key(std::size_t idx, int n) {
    std::size_t key = 0;
    for (int j = 0; j < n; ++j) {
        const bool minus = (idx >> j) & 1u;
        if (!minus) key |= std::size_t{1} << (n - 1 - j);
    }
    return key;
}

} // namespace

AngleConfig AngleConfig::zeros(int n) {
    AngleConfig t;
    t.n = n;
    t.theta.assign(static_cast<std::size_t>(n), {0.0, 0.0});
    return t;
}

AngleConfig AngleConfig::random(int n, Rng& rng) {
    AngleConfig t;
    t.n = n;
    t.theta.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        t.theta.push_back({rng.angle(), rng.angle()});
    }
    return t;
}

void AngleConfig::normalize() {
    for (auto& pair : theta) {
        pair[0] = wrap_angle(pair[0]);
        pair[1] = wrap_angle(pair[1]);
    }
}

void AngleConfig::validate() const {
    if (n < 1) throw InvalidInput("AngleConfig: n < 1");
    if (theta.size() != static_cast<std::size_t>(n)) {
        throw InvalidInput("AngleConfig: expected exactly n angle pairs");
    }
    for (const auto& pair : theta) {
        if (!std::isfinite(pair[0]) || !std::isfinite(pair[1])) {
            throw InvalidInput("AngleConfig: non-finite angle");
        }
    }
}

std::size_t OmegaVector::index() const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < omega.size(); ++j) {
        if (omega[j] == -1) idx |= std::size_t{1} << j;
    }
    return idx;
}

OmegaVector OmegaVector::from_index(int n, std::size_t idx) {
    OmegaVector w;
    w.omega.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        w.omega.push_back(((idx >> j) & 1u) ? -1 : 1);
    }
    return w;
}

std::vector<std::complex<double>> g_vector(const AngleConfig& t) {
    t.validate();
    using C = std::complex<double>;
    std::vector<C> g{C{1.0, 0.0}};
    g.reserve(std::size_t{1} << t.n);
    for (int j = 0; j < t.n; ++j) {
        const C e0 = std::polar(1.0, t.theta[j][0]);
        const C e1 = std::polar(1.0, t.theta[j][1]);
        const C plus = 0.5 * (e0 + e1);
        const C minus = 0.5 * (e0 - e1);
        const std::size_t half = g.size();
        g.resize(2 * half);
        for (std::size_t idx = 0; idx < half; ++idx) {
            const C base = g[idx];
            g[idx] = base * plus;
            g[idx + half] = base * minus;
        }
    }
    return g;
}

std::complex<double> bell_polynomial(const SignFunction& f, const AngleConfig& t) {
    check_match(f, t);
    const auto g = g_vector(t);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t eps = 0; eps < g.size(); ++eps) {
        acc += static_cast<double>(f.values[eps]) * g[eps];
    }
    return acc;
}

std::complex<double> bell_polynomial_beta(const WalshSpectrum& beta, const AngleConfig& t) {
    beta.validate();
    t.validate();
    if (beta.n != t.n) throw InvalidInput("party count mismatch between beta and angles");
    const std::size_t m = std::size_t{1} << beta.n;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t s = 0; s < m; ++s) {
        if (beta.numer[s] == 0) continue;
        double phase = 0.0;
        for (int j = 0; j < beta.n; ++j) {
            phase += t.theta[j][(s >> j) & 1u];
        }
        acc += beta.beta(s) * std::polar(1.0, phase);
    }
    return acc;
}

SpectrumEntry eigenvalue(const SignFunction& f, const AngleConfig& angles, const OmegaVector& omega) {
    check_match(f, angles);
    if (omega.omega.size() != static_cast<std::size_t>(f.n)) {
        throw InvalidInput("eigenvalue: omega length mismatch");
    }
    // Canonicalize to omega_1 = +1 so the omega <-> -omega magnitudes are
    // bit-identical (the two values are exact complex conjugates).
    const bool flipped = omega.omega[0] == -1;
    AngleConfig t = angles;
    for (int j = 0; j < f.n; ++j) {
        const double w = static_cast<double>(omega.omega[j]) * (flipped ? -1.0 : 1.0);
        t.theta[j][0] = w * angles.theta[j][0];
        t.theta[j][1] = w * angles.theta[j][1];
    }
    std::complex<double> s = bell_polynomial_beta(walsh_beta(f), t);
    if (flipped) s = std::conj(s);
    SpectrumEntry e;
    e.magnitude = std::abs(s);
    e.phase = s == std::complex<double>{0.0, 0.0} ? 0.0 : wrap_angle(-std::arg(s));
    return e;
}

SpectrumResult full_spectrum(const SignFunction& f, const AngleConfig& angles, int n_cap) {
    check_match(f, angles);
    if (f.n > n_cap) {
        throw TooLarge("full_spectrum: n = " + std::to_string(f.n) + " above cap " +
                       std::to_string(n_cap));
    }
    const int n = f.n;
    const std::size_t m = std::size_t{1} << n;
    const WalshSpectrum beta = walsh_beta(f);

    // Contract the setting index of each party into its omega index in turn:
    // after step j, T is indexed by (omega_1..omega_j, s_{j+1}..s_n).
    using C = std::complex<double>;
    std::vector<C> T(m);
    for (std::size_t s = 0; s < m; ++s) T[s] = C{beta.beta(s), 0.0};
    for (int j = 0; j < n; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        const C p0 = std::polar(1.0, angles.theta[j][0]);  // omega_j = +1
        const C p1 = std::polar(1.0, angles.theta[j][1]);
        for (std::size_t idx = 0; idx < m; ++idx) {
            if (idx & bit) continue;
            const C a = T[idx];       // s_j = 0
            const C b = T[idx | bit]; // s_j = 1
            T[idx] = a * p0 + b * p1;
            T[idx | bit] = a * std::conj(p0) + b * std::conj(p1); // omega_j = -1
        }
    }

    SpectrumResult res;
    res.n = n;
    res.entries.resize(m);
    const std::size_t full = m - 1;
    for (std::size_t idx = 0; idx < m; ++idx) {
        // Mirror the omega_1 = -1 half from its conjugate partner so the
        // omega <-> -omega magnitude symmetry holds exactly.
        const C s = (idx & 1u) ? std::conj(T[idx ^ full]) : T[idx];
        res.entries[idx].magnitude = std::abs(s);
        res.entries[idx].phase = s == C{0.0, 0.0} ? 0.0 : wrap_angle(-std::arg(s));
    }

    res.norm = 0.0;
    std::size_t best_key = 0;
    for (std::size_t idx = 0; idx < m; ++idx) {
        const double mag = res.entries[idx].magnitude;
        const std::size_t key = lex_key(idx, n);
        if (mag > res.norm || (mag == res.norm && key < best_key)) {
            res.norm = mag;
            res.argmax_index = idx;
            best_key = key;
        }
    }
    return res;
}

double max_possible_norm(int n) {
    return std::sqrt(std::pow(2.0, n - 1));
}

namespace {

struct AscentResult {
    AngleConfig angles;
    double norm = 0.0;
    int sweeps = 0;
    bool converged = false;
    std::vector<double> history;
};

AscentResult ascend(const WalshSpectrum& beta, const AngleConfig& init,
                    const OptimizeOptions& opts) {
    const int n = beta.n;
    const std::size_t m = std::size_t{1} << n;

    std::vector<std::size_t> nz;
    for (std::size_t s = 0; s < m; ++s) {
        if (beta.numer[s] != 0) nz.push_back(s);
    }

    AscentResult r;
    r.angles = init;
    auto& t = r.angles.theta;

    // Phasor terms z[s] = beta(s) e^{i phi(s)}; a single-angle update rotates
    // one half of them, so no trig is needed in the inner loop.
    std::vector<std::complex<double>> z(nz.size());
    for (std::size_t k = 0; k < nz.size(); ++k) {
        const std::size_t s = nz[k];
        double p = 0.0;
        for (int j = 0; j < n; ++j) p += t[j][(s >> j) & 1u];
        z[k] = beta.beta(s) * std::polar(1.0, p);
    }

    double cur = 0.0;
    {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& v : z) acc += v;
        cur = std::abs(acc);
    }

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        const double before = cur;
        for (int j = 0; j < n; ++j) {
            const std::size_t bit = std::size_t{1} << j;
            for (int sv = 0; sv < 2; ++sv) {
                std::complex<double> a{0.0, 0.0};
                std::complex<double> b{0.0, 0.0};
                for (std::size_t k = 0; k < nz.size(); ++k) {
                    if (((nz[k] & bit) != 0) == (sv == 1)) {
                        a += z[k];
                    } else {
                        b += z[k];
                    }
                }
                const double amag = std::abs(a);
                if (amag < 1e-300) continue;
                // |A e^{i t} + B| is maximal at t = arg(B) - arg(A), where it
                // equals |A| + |B|.
                const double delta = std::arg(b) - std::arg(a);
                const std::complex<double> rot = std::polar(1.0, delta);
                for (std::size_t k = 0; k < nz.size(); ++k) {
                    if (((nz[k] & bit) != 0) == (sv == 1)) z[k] *= rot;
                }
                t[j][sv] += delta;
                const double next = amag + std::abs(b);
                if (next < cur - 1e-9) {
                    throw NumericalFailure("maximize_norm: coordinate update decreased the objective");
                }
                cur = next;
            }
        }
        r.sweeps = sweep + 1;
        r.history.push_back(cur);
        if (cur - before < opts.tol) {
            r.converged = true;
            break;
        }
    }
    r.norm = cur;
    r.angles.normalize();
    return r;
}

} // namespace

OptimizeReport maximize_norm(const SignFunction& f, const OptimizeOptions& opts) {
    f.validate();
    if (f.n > 20) {
        throw TooLarge("maximize_norm: n > 20");
    }
    if (opts.restarts < 1 || opts.tol <= 0.0) {
        throw InvalidInput("maximize_norm: restarts >= 1 and tol > 0 required");
    }

    OptimizeReport rep;
    const WalshSpectrum beta = walsh_beta(f);
    if (beta.support_size() == 1) {
        // Signed character: |bell polynomial| = 1 for every angle choice.
        rep.best_angles = opts.initial.value_or(AngleConfig::zeros(f.n));
        rep.best_angles.normalize();
        rep.best_norm = 1.0;
        rep.restarts_used = 0;
        rep.sweeps = 0;
        rep.converged = true;
        rep.history = {1.0};
        return rep;
    }

    bool have_best = false;
    AscentResult best;
    int starts = 0;
    auto consider = [&](const AngleConfig& init) {
        AscentResult res = ascend(beta, init, opts);
        ++starts;
        if (!have_best || res.norm > best.norm) {
            best = std::move(res);
            have_best = true;
        }
    };

    if (opts.initial.has_value()) {
        AngleConfig init = *opts.initial;
        init.validate();
        if (init.n != f.n) throw InvalidInput("maximize_norm: initial angle size mismatch");
        consider(init);
    }
    for (int r = 0; r < opts.restarts; ++r) {
        Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(r)));
        consider(AngleConfig::random(f.n, rng));
    }

    rep.best_angles = best.angles;
    rep.best_norm = best.norm;
    rep.restarts_used = starts;
    rep.sweeps = best.sweeps;
    rep.converged = best.converged;
    rep.history = best.history;
    return rep;
}

SignFunction mermin_klyshko_f(int n, const OptimizeOptions& opts, double tolerance,
                              OptimizeReport* report) {
    if (n < 2) throw InvalidInput("mermin_klyshko_f: n >= 2 required");
    SignFunction f = mermin_klyshko_pattern(n);

    OptimizeOptions o = opts;
    if (!o.initial.has_value()) {
        // The (0, pi/2) schedule attains sqrt(2^{n-1}) for this facet; random
        // restarts then only have to confirm it.
        AngleConfig sched = AngleConfig::zeros(n);
        for (auto& pair : sched.theta) pair[1] = std::numbers::pi / 2.0;
        o.initial = sched;
    }
    OptimizeReport rep = maximize_norm(f, o);
    const double target = max_possible_norm(n);
    if (std::abs(rep.best_norm - target) > tolerance) {
        throw ConstructionInvalid("mermin_klyshko_f: optimizer reached " +
                                  std::to_string(rep.best_norm) + ", expected " +
                                  std::to_string(target));
    }
    if (report != nullptr) *report = std::move(rep);
    return f;
}

} // namespace ww
