#pragma once

#include <random>

#include "qdf/geometry.hpp"

namespace qdf {

// Symmetric matrix of a quadric surface bundle in fiber coordinates
// (s,t,u,v) over the plane (x,y,z):
//   ( c  0  0  0  )
//   ( 0  F1 F2 G1 )
//   ( 0  F2 F3 G2 )
//   ( 0  G1 G2 H  )
// Entry degrees for a profile-respecting member: c:0, F1,F2,F3:2,
// G1,G2:3, H:4.
struct QuadricBundleForm {
    Ring base;  // coordinate ring of the plane
    Polynomial c, F1, F2, F3, G1, G2, H;

    static QuadricBundleForm from_entries(Polynomial c, Polynomial F1, Polynomial F2,
                                          Polynomial F3, Polynomial G1, Polynomial G2,
                                          Polynomial H);
    std::vector<std::vector<Polynomial>> matrix() const;
};

// Reads the entries off a form quadratic in (s,t,u,v); enforces the
// factor-of-2 conventions, no s-cross-terms, and the degree profile.
QuadricBundleForm extract_matrix(const Polynomial& F);

// c*s^2 + F1 t^2 + 2F2 tu + F3 u^2 + 2G1 tv + 2G2 uv + H v^2 in `target`,
// which must contain the fiber variables s,t,u,v and the base variables.
Polynomial reassemble(const QuadricBundleForm& Q, const Ring& target);

struct DegeneracyDivisor {
    Polynomial D;
    long degree = -1;
    bool matches_closed_form = false;  // D == c*((F1F3-F2^2)H - F3G1^2 + 2F2G1G2 - F1G2^2)
};

DegeneracyDivisor degeneracy_determinant(const QuadricBundleForm& Q);

// The two exact tangency identities behind "D is tangent to C at 16 points":
//   F1*D - c*F1*C*H + c*(F2G1-F1G2)^2 == -c*G1^2*C
//   F3*D - c*F3*C*H + c*(F3G1-F2G2)^2 == -c*G2^2*C
// where C = F1F3 - F2^2.
bool tangency_congruence(const QuadricBundleForm& Q);

// Intersection numbers of {C=0} and {D=0} over the projective plane, split
// over the strata x!=0, x=0,y!=0, x=y=0: total quotient length and the
// separated distinct-point count. Throws when the intersection is not
// zero-dimensional in some stratum.
CountReport tangency_count(const QuadricBundleForm& Q, std::mt19937_64& rng,
                           const GBConfig& cfg = {});

// Profile-respecting member with coefficients drawn from the field.
QuadricBundleForm random_instance(const FieldPtr& field, std::mt19937_64& rng);

struct ParamReport {
    long series_dim = 0;  // binom(8,4) - 5 - 12
    long moduli_dim = 0;  // 14 + 44 - 16 - 8
    bool ok = false;
};

ParamReport parameter_arithmetic();
long binomial(int n, int k);

}  // namespace qdf
