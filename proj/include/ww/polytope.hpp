#pragma once

#include <cstdint>
#include <vector>

#include "ww/boolfn.hpp"

namespace ww {

/// A deterministic local assignment X_s^j in {-1,+1} for every party and
/// setting, together with its correlation vector a(s) = prod_j X_{s_j}^j.
struct ClassicalVertex {
    int n = 0;
    std::uint32_t assignment = 0; // bit (2j + s) set  <=>  X_s^j = -1
    std::vector<std::int8_t> vector; // a(s), length 2^n

    int x(int party, int setting) const {
        return (assignment >> (2 * party + setting)) & 1u ? -1 : 1;
    }
};

ClassicalVertex make_vertex(int n, std::uint32_t assignment);

struct VertexEnumeration {
    std::vector<ClassicalVertex> vertices; // all 2^{2n} assignments
    std::size_t distinct_vectors = 0;      // deduplicated geometric vertex count
};

/// All 2^{2n} assignment vertices of C_n. n <= 4.
VertexEnumeration enumerate_vertices(int n);

/// sum_s beta_f(s) a(s) in exact integer arithmetic. Always exactly +1 or -1
/// (the polytope is a hyper-octahedron); anything else aborts via logic_error.
int facet_value(const SignFunction& f, const ClassicalVertex& v);

/// A point q in [-1,1]^{2^n} to be tested against all facets.
struct CorrelationVector {
    int n = 0;
    std::vector<double> q;

    void validate() const;
};

struct FacetCheck {
    bool inside = true;
    SignFunction violating_f; // first violated facet, valid only when !inside
    double value = 0.0;       // |sum beta q| at that facet
};

/// Exhaustive check of the 2^{2^n} facet inequalities |sum_s beta(s) q(s)| <= 1.
/// Tolerance 1e-12 for real-valued input. n <= 4.
FacetCheck first_violated_facet(const CorrelationVector& q);

bool membership(const CorrelationVector& q);

struct ChshClassification {
    int total = 0;         // 2^{2^2} = 16
    int trivial_count = 0; // signed characters
    int chsh_count = 0;    // everything else
    bool orbit_match = false; // non-trivial class = one symmetry orbit of the CHSH facet
};

/// Partition of the sixteen n=2 facet functions into trivial characters and
/// CHSH-type facets, with the orbit cross-check.
ChshClassification chsh_facets_n2();

/// The CHSH facet itself: f = [+1,+1,+1,-1].
SignFunction chsh_f();

} // namespace ww
