#include <doctest.h>

#include <cmath>

#include "ww/polytope.hpp"
#include "ww/rng.hpp"
#include "ww/spectrum.hpp"

using namespace ww;

TEST_CASE("enumerate_vertices counts assignments") {
    CHECK(enumerate_vertices(1).vertices.size() == 4);
    const auto n2 = enumerate_vertices(2);
    CHECK(n2.vertices.size() == 16);
    const auto n3 = enumerate_vertices(3);
    CHECK(n3.vertices.size() == 64);
    CHECK(n3.distinct_vectors <= 64);
    CHECK(n3.distinct_vectors >= 8);
    CHECK_THROWS_AS(enumerate_vertices(5), TooLarge);
}

TEST_CASE("vertex vectors are multiplicative sign patterns") {
    for (const auto& v : enumerate_vertices(2).vertices) {
        for (std::size_t s = 0; s < 4; ++s) {
            const int expect = v.x(0, s & 1) * v.x(1, (s >> 1) & 1);
            CHECK(v.vector[s] == expect);
        }
    }
}

TEST_CASE("facet_value on the CHSH facet at the all-plus vertex") {
    const SignFunction chsh = chsh_f();
    const ClassicalVertex v = make_vertex(2, 0); // all X = +1
    CHECK(facet_value(chsh, v) == 1); // 1/2 + 1/2 + 1/2 - 1/2
}

TEST_CASE("trivial facet value is a product of single-setting signs") {
    const SignFunction f = SignFunction::constant(2);
    for (const auto& v : enumerate_vertices(2).vertices) {
        CHECK(facet_value(f, v) == v.x(0, 0) * v.x(1, 0));
    }
}

TEST_CASE("hyper-octahedron property: every facet value is exactly +-1, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        const auto verts = enumerate_vertices(n);
        const std::size_t m = std::size_t{1} << n;
        SignFunction f;
        f.n = n;
        f.values.assign(m, 1);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
            for (std::size_t eps = 0; eps < m; ++eps) {
                f.values[eps] = (code >> eps) & 1u ? 1 : -1;
            }
            for (const auto& v : verts.vertices) {
                const int val = facet_value(f, v); // throws on anything but +-1
                CHECK((val == 1 || val == -1));
            }
        }
    }
}

TEST_CASE("membership: center, Tsirelson point, and all vertices") {
    CorrelationVector center{2, {0.0, 0.0, 0.0, 0.0}};
    CHECK(membership(center));

    const double r = 1.0 / std::sqrt(2.0);
    CorrelationVector tsirelson{2, {r, r, r, -r}};
    CHECK_FALSE(membership(tsirelson));
    const FacetCheck chk = first_violated_facet(tsirelson);
    CHECK_FALSE(chk.inside);
    CHECK(chk.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    for (const auto& v : enumerate_vertices(2).vertices) {
        CorrelationVector q;
        q.n = 2;
        q.q.assign(v.vector.begin(), v.vector.end());
        CHECK(membership(q));
        // At least one facet is tight at +-1: the vertex's own facet value.
        CHECK(std::abs(facet_value(chsh_f(), v)) == 1);
    }
}

TEST_CASE("membership rejects out-of-box points via trivial characters") {
    CorrelationVector q{2, {1.5, 0.0, 0.0, 0.0}};
    CHECK_FALSE(membership(q));
}

TEST_CASE("quantum point from optimized angles lies outside C_n when norm > 1") {
    OptimizeOptions opts;
    opts.restarts = 16;
    opts.seed = 3;
    for (std::uint64_t seed : {1ULL, 4ULL, 6ULL}) {
        const SignFunction f = random_f(2, seed);
        if (is_trivial_facet(f)) continue;
        const OptimizeReport rep = maximize_norm(f, opts);
        if (rep.best_norm <= 1.0 + 1e-9) continue;
        // q(s) = lambda-maximizing expectations: with the argmax omega, the
        // coordinates exp i(omega . theta_s) projected onto the eigenvector pair
        // give sum_s beta(s) q(s) = +-norm; equivalently take
        // q(s) = cos(sum_j omega_j theta_{s_j}^j + Theta).
        const SpectrumResult spec = full_spectrum(f, rep.best_angles);
        const OmegaVector w = spec.argmax_omega();
        const SpectrumEntry e = spec.entries[spec.argmax_index];
        CorrelationVector q;
        q.n = 2;
        for (std::size_t s = 0; s < 4; ++s) {
            double phase = e.phase;
            for (int j = 0; j < 2; ++j) {
                phase += w.omega[j] * rep.best_angles.theta[j][(s >> j) & 1u];
            }
            q.q.push_back(std::cos(phase));
        }
        CHECK_FALSE(membership(q));
    }
}

TEST_CASE("chsh_facets_n2 classification") {
    const ChshClassification cls = chsh_facets_n2();
    CHECK(cls.total == 16);
    CHECK(cls.trivial_count == 8);
    CHECK(cls.chsh_count == 8);
    CHECK(cls.orbit_match);
}
