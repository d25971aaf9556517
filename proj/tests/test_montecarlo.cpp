#include <doctest.h>

#include <cmath>

#include "ww/montecarlo.hpp"
#include "ww/rng.hpp"
#include "ww/serialize.hpp"

using namespace ww;

namespace {

OptimizeOptions fast_opts() {
    OptimizeOptions o;
    o.restarts = 4;
    o.tol = 1e-10;
    return o;
}

} // namespace

TEST_CASE("wilson_ci covers the empirical proportion and shrinks with samples") {
    const WilsonInterval a = wilson_ci(50, 100);
    CHECK(a.lo <= 0.5);
    CHECK(a.hi >= 0.5);
    const WilsonInterval b = wilson_ci(5000, 10000);
    CHECK(b.hi - b.lo < a.hi - a.lo);
    const WilsonInterval zero = wilson_ci(0, 100);
    CHECK(zero.lo == 0.0);
    CHECK(zero.hi > 0.0);
}

TEST_CASE("sample_max_norms respects the Cirel'son ceiling at n = 2") {
    const ScalingRow row = sample_max_norms(2, 100, 11, fast_opts());
    CHECK(row.max <= std::sqrt(2.0) + 1e-9);
    for (const auto& rec : row.records) {
        // Trivial characters give exactly 1; witnesses sit in (1, sqrt(2)].
        CHECK(rec.norm >= 1.0 - 1e-9);
        CHECK(rec.norm <= std::sqrt(2.0) + 1e-9);
    }
    CHECK(row.median <= row.p95);
    CHECK(row.p95 <= row.max);
}

TEST_CASE("sample_max_norms is bit-identical at any worker count") {
    const ScalingRow a = sample_max_norms(3, 40, 7, fast_opts(), 1);
    const ScalingRow b = sample_max_norms(3, 40, 7, fast_opts(), 4);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(records_csv(a.records) == records_csv(b.records));
}

TEST_CASE("trivial-f frequency at n = 2 matches 8/16 within CI") {
    std::size_t trivial = 0;
    const std::size_t samples = 2000;
    for (std::size_t i = 0; i < samples; ++i) {
        if (is_trivial_facet(random_f(2, derive_seed(55, i)))) ++trivial;
    }
    const WilsonInterval ci = wilson_ci(trivial, samples);
    CHECK(ci.lo <= 0.5);
    CHECK(ci.hi >= 0.5);
}

TEST_CASE("theorem1_exceedance: huge C gives zero, sub-1 threshold catches witnesses") {
    const ScalingRow row = sample_max_norms(2, 100, 13, fast_opts());
    const auto reports = theorem1_exceedance({row}, {100.0, 0.5});
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].empirical_probability == 0.0);

    // C sqrt(2 ln 2) < 1: every non-trivial witness exceeds the threshold.
    CHECK(reports[1].threshold < 1.0);
    std::size_t witnesses = 0;
    for (const auto& rec : row.records) {
        if (rec.norm > 1.0 + 1e-9) ++witnesses;
    }
    CHECK(reports[1].empirical_probability >=
          static_cast<double>(witnesses) / static_cast<double>(row.samples));
}

TEST_CASE("prop2_tail: empirical tail below 1/M^2 plus statistical slack") {
    const std::size_t samples = 4000;
    const auto reports = prop2_tail(6, samples, {2.0, 3.0, 5.0}, 21);
    REQUIRE(reports.size() == 3);
    for (const auto& rep : reports) {
        const double p = rep.bound_value;
        const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
        CHECK(rep.empirical_probability <= p + 4.0 * sigma);
        CHECK(rep.bound_kind == "1/M^2");
    }
    CHECK(reports[0].bound_value == doctest::Approx(0.25));
    CHECK(reports[2].bound_value == doctest::Approx(0.04));
}

TEST_CASE("prop2_tail is deterministic in the seed") {
    const auto a = prop2_tail(4, 500, {2.0}, 3);
    const auto b = prop2_tail(4, 500, {2.0}, 3);
    CHECK(to_json(a[0]).dump() == to_json(b[0]).dump());
}

TEST_CASE("szk_tail reports the theoretical ceiling and the identity route") {
    const auto reports = szk_tail(6, 30, 17, fast_opts(), {4.0});
    REQUIRE(reports.size() == 1);
    // 1/(36 e^12) ~ 1.7e-7.
    CHECK(reports[0].bound_value == doctest::Approx(1.0 / (36.0 * std::exp(12.0))).epsilon(1e-12));
    CHECK(reports[0].empirical_probability == 0.0); // norms stay far below 4 sqrt(12 ln 6)
    CHECK(reports[0].note.find("sanity") != std::string::npos);
}

TEST_CASE("optimized norm equals the sup-norm of the xi-g polynomial route") {
    // Eq-27-style two-route agreement: the optimizer maximizes the same
    // objective whether evaluated through beta or through f . g.
    const SignFunction f = random_f(3, 77);
    OptimizeOptions o = fast_opts();
    o.restarts = 8;
    const OptimizeReport rep = maximize_norm(f, o);
    CHECK(std::abs(bell_polynomial(f, rep.best_angles)) ==
          doctest::Approx(rep.best_norm).epsilon(1e-10));
}

TEST_CASE("subnormal_check: analytic bound and empirical moments") {
    const auto rows = subnormal_check({0.0, 1.0, 3.0}, 4, 4000, 31);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].cosh_value == 1.0);
    CHECK(rows[0].gaussian_bound == 1.0);
    CHECK(rows[1].cosh_value == doctest::Approx(std::cosh(1.0)));
    CHECK(rows[1].gaussian_bound == doctest::Approx(std::exp(0.5)));
    CHECK(rows[2].cosh_value == doctest::Approx(std::cosh(3.0)));
    CHECK(rows[2].gaussian_bound == doctest::Approx(std::exp(4.5)));
    for (const auto& row : rows) {
        CHECK(row.analytic_ok);
        CHECK(row.empirical_ok);
    }
}

TEST_CASE("no sampled optimized norm exceeds the global maximum") {
    for (int n : {3, 4}) {
        const ScalingRow row = sample_max_norms(n, 50, 23, fast_opts());
        CHECK(row.max <= max_possible_norm(n) + 1e-9);
    }
}
