#include <doctest.h>

#include <bit>
#include <cmath>
#include <set>

#include "ww/boolfn.hpp"
#include "ww/rng.hpp"

using namespace ww;

namespace {

// Independent O(4^n) oracle: beta(s) = 2^{-n} sum_eps (-1)^{eps.s} f(eps),
// evaluated term by term.
std::vector<std::int64_t> naive_walsh_numerators(const SignFunction& f) {
    const std::size_t m = f.size();
    std::vector<std::int64_t> out(m, 0);
    for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t eps = 0; eps < m; ++eps) {
            const int sign = std::popcount(eps & s) & 1 ? -1 : 1;
            out[s] += sign * f.values[eps];
        }
    }
    return out;
}

} // namespace

TEST_CASE("walsh_beta reproduces the CHSH coefficients") {
    SignFunction f{2, {1, 1, 1, -1}};
    const WalshSpectrum beta = walsh_beta(f);
    CHECK(beta.denominator() == 4);
    CHECK(beta.numer == std::vector<std::int64_t>{2, 2, 2, -2});
}

TEST_CASE("walsh_beta of a constant function is a delta at s = 0") {
    const WalshSpectrum beta = walsh_beta(SignFunction::constant(3));
    CHECK(beta.numer[0] == 8);
    for (std::size_t s = 1; s < 8; ++s) CHECK(beta.numer[s] == 0);
}

TEST_CASE("walsh_beta agrees with the naive double-sum oracle") {
    for (std::uint64_t seed : {7ULL, 8ULL, 9ULL}) {
        const SignFunction f = random_f(3, seed);
        CHECK(walsh_beta(f).numer == naive_walsh_numerators(f));
    }
    const SignFunction g = random_f(6, 7);
    CHECK(walsh_beta(g).numer == naive_walsh_numerators(g));
}

TEST_CASE("Plancherel and Parseval hold exactly") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SignFunction f = random_f(5, seed);
        const WalshSpectrum beta = walsh_beta(f);
        std::int64_t sum_sq = 0;
        for (const auto v : beta.numer) sum_sq += v * v;
        CHECK(sum_sq == beta.denominator() * beta.denominator()); // sum beta^2 = 1
        std::int64_t parseval = 0;
        for (const auto v : f.values) parseval += std::int64_t{v} * v;
        CHECK(parseval == std::int64_t{1} << f.n);
    }
}

TEST_CASE("inverse_walsh round trips exhaustively at n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        const std::size_t m = std::size_t{1} << n;
        SignFunction f;
        f.n = n;
        f.values.assign(m, 1);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
            for (std::size_t eps = 0; eps < m; ++eps) {
                f.values[eps] = (code >> eps) & 1u ? 1 : -1;
            }
            CHECK(inverse_walsh(walsh_beta(f)) == f);
        }
    }
}

TEST_CASE("inverse_walsh round trips on random f up to n = 12") {
    for (int n : {4, 8, 12}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const SignFunction f = random_f(n, seed);
            CHECK(inverse_walsh(walsh_beta(f)) == f);
        }
    }
}

TEST_CASE("inverse_walsh rejects spectra of non-sign functions") {
    WalshSpectrum bad;
    bad.n = 2;
    bad.numer = {2, 2, 2, 2}; // inversion gives 2 at eps = (0,0)
    CHECK_THROWS_AS(inverse_walsh(bad), NotASignFunction);

    WalshSpectrum delta;
    delta.n = 2;
    delta.numer = {4, 0, 0, 0};
    CHECK(inverse_walsh(delta) == SignFunction::constant(2));
}

TEST_CASE("is_trivial_facet detects exactly the signed characters") {
    CHECK(is_trivial_facet(SignFunction::constant(3)));
    CHECK_FALSE(is_trivial_facet(SignFunction{2, {1, 1, 1, -1}}));

    // Pure character f(eps) = (-1)^{eps_1} at n = 2.
    CHECK(is_trivial_facet(SignFunction{2, {1, -1, 1, -1}}));

    for (int n = 1; n <= 3; ++n) {
        const std::size_t m = std::size_t{1} << n;
        SignFunction f;
        f.n = n;
        f.values.assign(m, 1);
        int trivial = 0;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
            for (std::size_t eps = 0; eps < m; ++eps) {
                f.values[eps] = (code >> eps) & 1u ? 1 : -1;
            }
            if (is_trivial_facet(f)) ++trivial;
        }
        CHECK(trivial == (1 << (n + 1)));
    }
}

TEST_CASE("trivial facet counts report the literature discrepancy") {
    const TrivialFacetCounts c = trivial_facet_counts(3);
    CHECK(c.signed_characters == 16);
    CHECK(c.quoted_exceptional == 8);
    CHECK(c.discrepant);
}

TEST_CASE("apply_symmetry: identity, global sign, party swap") {
    const SignFunction chsh{2, {1, 1, 1, -1}};
    CHECK(apply_symmetry(SymmetryElement::identity(2), chsh) == chsh);

    SymmetryElement neg = SymmetryElement::identity(2);
    neg.global_negate = true;
    CHECK(apply_symmetry(neg, SignFunction::constant(2)) == SignFunction::constant(2, -1));

    SymmetryElement swap12 = SymmetryElement::identity(2);
    swap12.perm = {1, 0};
    const SignFunction swapped = apply_symmetry(swap12, chsh);
    CHECK_FALSE(is_trivial_facet(swapped));
    CHECK(walsh_beta(swapped).support_size() == 4);
    // Explicit index permutation: f'(e1,e2) = f(e2,e1).
    SignFunction expected{2, {chsh.values[0], chsh.values[2], chsh.values[1], chsh.values[3]}};
    CHECK(swapped == expected);
}

TEST_CASE("apply_symmetry preserves Walsh support and |beta| multiset") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const SignFunction f = random_f(3, seed);
        const WalshSpectrum before = walsh_beta(f);
        std::multiset<std::int64_t> mags_before;
        for (const auto v : before.numer) mags_before.insert(std::abs(v));
        Rng rng(seed);
        for (const auto& g : symmetry_group(3)) {
            if (rng.uniform01() > 0.02) continue; // sample the group
            const WalshSpectrum after = walsh_beta(apply_symmetry(g, f));
            std::multiset<std::int64_t> mags_after;
            for (const auto v : after.numer) mags_after.insert(std::abs(v));
            CHECK(mags_after == mags_before);
        }
    }
}

TEST_CASE("symmetry group has order n! 2^{2n+1}") {
    CHECK(symmetry_group(2).size() == 2 * 32);   // 2! * 2^5
    CHECK(symmetry_group(3).size() == 6 * 128);  // 3! * 2^7
    CHECK_THROWS_AS(symmetry_group(4), TooLarge);
}

TEST_CASE("orbits partition the 16 functions at n = 2") {
    const auto trivial_orbit = orbit(SignFunction::constant(2));
    CHECK(trivial_orbit.size() == 8); // the signed characters

    const auto chsh_orbit = orbit(SignFunction{2, {1, 1, 1, -1}});
    CHECK(chsh_orbit.size() == 8);

    std::set<std::vector<std::int8_t>> all;
    for (const auto& f : trivial_orbit) all.insert(f.values);
    for (const auto& f : chsh_orbit) all.insert(f.values);
    CHECK(all.size() == 16);

    CHECK_THROWS_AS(orbit(random_f(4, 0)), TooLarge);
}

TEST_CASE("random_f is deterministic in (n, seed)") {
    CHECK(random_f(6, 42) == random_f(6, 42));
    CHECK(random_f(6, 42) != random_f(6, 43));
}

TEST_CASE("random_f coordinate moments match independent uniform signs") {
    const int n = 8;
    const std::size_t samples = 10000;
    double mean0 = 0.0, mean1 = 0.0, corr = 0.0;
    std::vector<double> coord_means(std::size_t{1} << n, 0.0);
    for (std::size_t i = 0; i < samples; ++i) {
        const SignFunction f = random_f(n, derive_seed(123, i));
        for (std::size_t eps = 0; eps < f.size(); ++eps) coord_means[eps] += f.values[eps];
        mean0 += f.values[3];
        mean1 += f.values[200];
        corr += f.values[3] * f.values[200];
    }
    mean0 /= samples;
    mean1 /= samples;
    corr /= samples;
    // 4 sigma at 10^4 samples is 0.04.
    CHECK(std::abs(mean0) < 0.05);
    CHECK(std::abs(mean1) < 0.05);
    CHECK(std::abs(corr) < 0.05);
    for (auto& m : coord_means) {
        m /= samples;
        CHECK(std::abs(m) < 0.05);
    }
}

TEST_CASE("mermin_klyshko_pattern at n = 2 is the CHSH facet") {
    const SignFunction f = mermin_klyshko_pattern(2);
    CHECK(f == SignFunction{2, {1, 1, 1, -1}});
}

TEST_CASE("SignFunction validation rejects malformed input") {
    SignFunction bad{2, {1, 1, 1}};
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
    SignFunction zero{1, {0, 1}};
    CHECK_THROWS_AS(zero.validate(), InvalidInput);
}
