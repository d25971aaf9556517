#include "ww/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "ww/rng.hpp"

namespace ww {

namespace {

void check_n(int n, const char* where) {
    if (n < 1 || n > 30) {
        throw InvalidInput(std::string(where) + ": party count out of range");
    }
}

// In-place Walsh-Hadamard butterfly; computes out[s] = sum_eps (-1)^{eps.s} in[eps].
void wht(std::vector<std::int64_t>& a) {
    const std::size_t m = a.size();
    for (std::size_t len = 1; len < m; len <<= 1) {
        for (std::size_t block = 0; block < m; block += 2 * len) {
            for (std::size_t i = block; i < block + len; ++i) {
                const std::int64_t x = a[i];
                const std::int64_t y = a[i + len];
                a[i] = x + y;
                a[i + len] = x - y;
            }
        }
    }
}

} // namespace

SignFunction SignFunction::constant(int n, int sign) {
    check_n(n, "SignFunction::constant");
    SignFunction f;
    f.n = n;
    f.values.assign(std::size_t{1} << n, static_cast<std::int8_t>(sign));
    return f;
}

void SignFunction::validate() const {
    check_n(n, "SignFunction");
    if (values.size() != (std::size_t{1} << n)) {
        throw InvalidInput("SignFunction: length is not 2^n");
    }
    for (const auto v : values) {
        if (v != 1 && v != -1) {
            throw InvalidInput("SignFunction: entry not in {-1,+1}");
        }
    }
}

double WalshSpectrum::beta(std::size_t s) const {
    return static_cast<double>(numer[s]) / static_cast<double>(denominator());
}

int WalshSpectrum::support_size() const {
    return static_cast<int>(std::count_if(numer.begin(), numer.end(),
                                          [](std::int64_t v) { return v != 0; }));
}

void WalshSpectrum::validate() const {
    check_n(n, "WalshSpectrum");
    if (numer.size() != (std::size_t{1} << n)) {
        throw InvalidInput("WalshSpectrum: length is not 2^n");
    }
    const std::int64_t d = denominator();
    for (const auto v : numer) {
        if (v > d || v < -d) {
            throw InvalidInput("WalshSpectrum: |beta| > 1");
        }
    }
}

WalshSpectrum walsh_beta(const SignFunction& f) {
    f.validate();
    WalshSpectrum out;
    out.n = f.n;
    out.numer.assign(f.values.begin(), f.values.end());
    wht(out.numer);
    return out;
}

SignFunction inverse_walsh(const WalshSpectrum& beta) {
    beta.validate();
    std::vector<std::int64_t> a = beta.numer;
    wht(a);
    const std::int64_t d = beta.denominator();
    SignFunction f;
    f.n = beta.n;
    f.values.reserve(a.size());
    for (const auto v : a) {
        if (v == d) {
            f.values.push_back(1);
        } else if (v == -d) {
            f.values.push_back(-1);
        } else {
            throw NotASignFunction("inverse_walsh: value outside {-1,+1}");
        }
    }
    return f;
}

bool is_trivial_facet(const SignFunction& f) {
    return walsh_beta(f).support_size() == 1;
}

SymmetryElement SymmetryElement::identity(int n) {
    SymmetryElement g;
    g.perm.resize(n);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    return g;
}

SignFunction apply_symmetry(const SymmetryElement& g, const SignFunction& f) {
    f.validate();
    const int n = f.n;
    if (static_cast<int>(g.perm.size()) != n) {
        throw InvalidInput("apply_symmetry: permutation size mismatch");
    }
    const std::size_t m = std::size_t{1} << n;
    const WalshSpectrum in = walsh_beta(f);
    WalshSpectrum out;
    out.n = n;
    out.numer.assign(m, 0);

    const std::uint32_t swap_mask = g.setting_swap & ((1u << n) - 1u);
    for (std::size_t s = 0; s < m; ++s) {
        // Party relabeling acts by permuting the bits of s.
        std::size_t sp = 0;
        for (int j = 0; j < n; ++j) {
            if (s & (std::size_t{1} << j)) sp |= std::size_t{1} << g.perm[j];
        }
        std::int64_t v = in.numer[s];
        if (std::popcount(static_cast<std::uint32_t>(sp) & g.outcome_flip) & 1) v = -v;
        if (g.global_negate) v = -v;
        // Setting exchange at party j swaps the s_j = 0/1 halves.
        out.numer[sp ^ swap_mask] = v;
    }
    return inverse_walsh(out);
}

std::vector<SymmetryElement> symmetry_group(int n) {
    check_n(n, "symmetry_group");
    if (n > 3) {
        throw TooLarge("symmetry_group: exhaustive enumeration limited to n <= 3");
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SymmetryElement> group;
    const std::uint32_t top = 1u << n;
    do {
        for (std::uint32_t sw = 0; sw < top; ++sw) {
            for (std::uint32_t fl = 0; fl < top; ++fl) {
                for (int gs = 0; gs < 2; ++gs) {
                    SymmetryElement g;
                    g.perm = perm;
                    g.setting_swap = sw;
                    g.outcome_flip = fl;
                    g.global_negate = (gs == 1);
                    group.push_back(std::move(g));
                }
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return group;
}

std::vector<SignFunction> orbit(const SignFunction& f) {
    f.validate();
    if (f.n > 3) {
        throw TooLarge("orbit: exhaustive closure limited to n <= 3");
    }
    std::set<std::vector<std::int8_t>> seen;
    std::vector<SignFunction> out;
    for (const auto& g : symmetry_group(f.n)) {
        SignFunction img = apply_symmetry(g, f);
        if (seen.insert(img.values).second) {
            out.push_back(std::move(img));
        }
    }
    return out;
}

SignFunction random_f(int n, std::uint64_t seed) {
    check_n(n, "random_f");
    const std::size_t m = std::size_t{1} << n;
    SignFunction f;
    f.n = n;
    f.values.reserve(m);
    Rng rng(seed);
    for (std::size_t eps = 0; eps < m; ++eps) {
        f.values.push_back(static_cast<std::int8_t>(rng.sign()));
    }
    return f;
}

SignFunction mermin_klyshko_pattern(int n) {
    check_n(n, "mermin_klyshko_pattern");
    const std::size_t m = std::size_t{1} << n;
    SignFunction f;
    f.n = n;
    f.values.reserve(m);
    for (std::size_t eps = 0; eps < m; ++eps) {
        const int w = std::popcount(eps) & 3;
        f.values.push_back(w == 0 || w == 1 ? 1 : -1);
    }
    return f;
}

TrivialFacetCounts trivial_facet_counts(int n) {
    check_n(n, "trivial_facet_counts");
    TrivialFacetCounts c;
    c.signed_characters = 1LL << (n + 1);
    c.quoted_exceptional = 1LL << n;
    c.discrepant = true;
    return c;
}

} // namespace ww
