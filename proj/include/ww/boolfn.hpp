#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ww/errors.hpp"

namespace ww {

/// A function f: {0,1}^n -> {-1,+1} stored as a sign vector of length 2^n.
/// Index convention is little-endian throughout the library: bit j of the
/// index holds the argument of party j (0-based).
struct SignFunction {
    int n = 0;
    std::vector<std::int8_t> values; // entries in {-1,+1}, length 2^n

    static SignFunction constant(int n, int sign = +1);

    std::size_t size() const { return values.size(); }

    /// Throws InvalidInput unless length is exactly 2^n and all entries are +-1.
    void validate() const;

    bool operator==(const SignFunction&) const = default;
};

/// Walsh coefficients beta(s) of a sign function, stored exactly as integer
/// numerators over the common denominator 2^n.
struct WalshSpectrum {
    int n = 0;
    std::vector<std::int64_t> numer; // beta(s) = numer[s] / 2^n

    double beta(std::size_t s) const;
    std::int64_t denominator() const { return std::int64_t{1} << n; }
    int support_size() const;

    void validate() const;
};

/// beta(s) = 2^{-n} sum_eps (-1)^{eps.s} f(eps), via the fast Walsh-Hadamard
/// butterfly in exact integer arithmetic.
WalshSpectrum walsh_beta(const SignFunction& f);

/// f(eps) = sum_s (-1)^{eps.s} beta(s). Throws NotASignFunction if the
/// inversion leaves {-1,+1}, i.e. the input was not the spectrum of a sign
/// function.
SignFunction inverse_walsh(const WalshSpectrum& beta);

/// True iff the spectrum of f is supported on a single s (signed character);
/// such f give only the tautological facet and never a witness.
bool is_trivial_facet(const SignFunction& f);

/// One element of the hyper-octahedron symmetry group, of order n! 2^{2n+1}:
/// party relabeling, per-party setting exchange, per-party outcome flip, and
/// a global sign.
struct SymmetryElement {
    std::vector<int> perm;          // perm[j] = image position of party j
    std::uint32_t setting_swap = 0; // bit j: exchange the two settings at party j
    std::uint32_t outcome_flip = 0; // bit j: multiply beta(s) by (-1)^{s_j}
    bool global_negate = false;

    static SymmetryElement identity(int n);
};

/// Image of f under g, realized on the Walsh side and converted back.
SignFunction apply_symmetry(const SymmetryElement& g, const SignFunction& f);

/// All n! 2^{2n+1} group elements, enumerable for n <= 3. Throws TooLarge.
std::vector<SymmetryElement> symmetry_group(int n);

/// Full orbit of f under the symmetry group, deduplicated. n <= 3 only.
std::vector<SignFunction> orbit(const SignFunction& f);

/// Uniform random sign function; fully determined by (n, seed).
SignFunction random_f(int n, std::uint64_t seed);

/// Candidate Mermin-Klyshko facet: +1 where the Hamming weight of eps is
/// 0 or 1 mod 4. Uncertified; mermin_klyshko_f in spectrum.hpp validates
/// the achievable norm before handing it out.
SignFunction mermin_klyshko_pattern(int n);

/// The signed-character count 2^{n+1} alongside the count 2^n quoted in the
/// literature for the degenerate facets; the two disagree and we report both.
struct TrivialFacetCounts {
    long long signed_characters; // 2^{n+1}, what is_trivial_facet accepts
    long long quoted_exceptional; // 2^n
    bool discrepant;
};
TrivialFacetCounts trivial_facet_counts(int n);

} // namespace ww
