#include "ww/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace ww {

namespace {

void check_poly_n(int n, const char* where) {
    if (n < 1 || n > 4) {
        throw TooLarge(std::string(where) + ": exhaustive polytope work limited to n <= 4");
    }
}

} // namespace

ClassicalVertex make_vertex(int n, std::uint32_t assignment) {
    ClassicalVertex v;
    v.n = n;
    v.assignment = assignment;
    const std::size_t m = std::size_t{1} << n;
    v.vector.reserve(m);
    for (std::size_t s = 0; s < m; ++s) {
        int prod = 1;
        for (int j = 0; j < n; ++j) {
            prod *= v.x(j, (s >> j) & 1u);
        }
        v.vector.push_back(static_cast<std::int8_t>(prod));
    }
    return v;
}

VertexEnumeration enumerate_vertices(int n) {
    check_poly_n(n, "enumerate_vertices");
    VertexEnumeration out;
    const std::uint32_t count = 1u << (2 * n);
    out.vertices.reserve(count);
    std::set<std::vector<std::int8_t>> distinct;
    for (std::uint32_t a = 0; a < count; ++a) {
        ClassicalVertex v = make_vertex(n, a);
        distinct.insert(v.vector);
        out.vertices.push_back(std::move(v));
    }
    out.distinct_vectors = distinct.size();
    return out;
}

int facet_value(const SignFunction& f, const ClassicalVertex& v) {
    f.validate();
    if (f.n != v.n) throw InvalidInput("facet_value: party count mismatch");
    const WalshSpectrum beta = walsh_beta(f);
    std::int64_t acc = 0;
    for (std::size_t s = 0; s < beta.numer.size(); ++s) {
        acc += beta.numer[s] * v.vector[s];
    }
    const std::int64_t d = beta.denominator();
    if (acc == d) return 1;
    if (acc == -d) return -1;
    throw std::logic_error("facet_value: vertex value is not +-1, hyper-octahedron property broken");
}

void CorrelationVector::validate() const {
    if (n < 1) throw InvalidInput("CorrelationVector: n < 1");
    if (q.size() != (std::size_t{1} << n)) {
        throw InvalidInput("CorrelationVector: length is not 2^n");
    }
    for (const double v : q) {
        if (!std::isfinite(v)) throw InvalidInput("CorrelationVector: non-finite coordinate");
    }
}

FacetCheck first_violated_facet(const CorrelationVector& q) {
    q.validate();
    check_poly_n(q.n, "membership");
    const std::size_t m = std::size_t{1} << q.n;
    const double denom = static_cast<double>(std::int64_t{1} << q.n);

    FacetCheck out;
    SignFunction f;
    f.n = q.n;
    f.values.assign(m, 1);
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t code = 0; code < total; ++code) {
        for (std::size_t eps = 0; eps < m; ++eps) {
            f.values[eps] = (code >> eps) & 1u ? 1 : -1;
        }
        const WalshSpectrum beta = walsh_beta(f);
        double acc = 0.0;
        for (std::size_t s = 0; s < m; ++s) {
            acc += static_cast<double>(beta.numer[s]) * q.q[s];
        }
        acc /= denom;
        if (std::abs(acc) > 1.0 + 1e-12) {
            out.inside = false;
            out.violating_f = f;
            out.value = std::abs(acc);
            return out;
        }
    }
    return out;
}

bool membership(const CorrelationVector& q) {
    return first_violated_facet(q).inside;
}

SignFunction chsh_f() {
    SignFunction f;
    f.n = 2;
    f.values = {1, 1, 1, -1};
    return f;
}

ChshClassification chsh_facets_n2() {
    ChshClassification cls;
    std::vector<SignFunction> non_trivial;
    SignFunction f;
    f.n = 2;
    f.values.assign(4, 1);
    for (std::uint32_t code = 0; code < 16; ++code) {
        for (std::size_t eps = 0; eps < 4; ++eps) {
            f.values[eps] = (code >> eps) & 1u ? 1 : -1;
        }
        ++cls.total;
        if (is_trivial_facet(f)) {
            ++cls.trivial_count;
        } else {
            ++cls.chsh_count;
            non_trivial.push_back(f);
        }
    }

    // Every non-trivial n=2 facet must lie in the symmetry orbit of the
    // CHSH facet, and vice versa.
    const std::vector<SignFunction> chsh_orbit = orbit(chsh_f());
    std::set<std::vector<std::int8_t>> orbit_set;
    for (const auto& g : chsh_orbit) orbit_set.insert(g.values);
    cls.orbit_match = orbit_set.size() == non_trivial.size() &&
                      std::all_of(non_trivial.begin(), non_trivial.end(),
                                  [&](const SignFunction& h) { return orbit_set.count(h.values) > 0; });
    return cls;
}

} // namespace ww
