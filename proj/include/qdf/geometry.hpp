#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qdf/ideal_ops.hpp"

namespace qdf {

// Affine chart of a weighted / bigraded projective coordinate ring, obtained
// by setting the named variables to 1. Only degree-1 directions may be
// dehomogenized; in a bigraded ring a variable with both degrees positive
// (the section coordinate s) is rejected.
struct AmbientChart {
    std::string name;  // e.g. "x=1,v=1"
    Ring master;
    Ring ring;                       // chart coordinate ring
    std::vector<std::string> ones;   // variables set to 1
};

AmbientChart make_chart(const Ring& master, const std::vector<std::string>& ones);
Polynomial restrict_to_chart(const Polynomial& p, const AmbientChart& chart);

struct SubschemeClaim {
    std::string label;
    Ideal ideal;
    int expected_dim = 0;
};

// Ideal generated by F together with the maximal (|F| x |F|) minors of the
// Jacobian matrix of F.
Ideal singular_locus_ideal(const std::vector<Polynomial>& F);

struct DecompositionReport {
    bool ok = false;
    std::string witness;  // offending generator, when !ok
};

// V(sing) == union of V(component ideals), compared up to radical. The
// union is the iterated ideal intersection.
DecompositionReport verify_decomposition(const Ideal& sing,
                                         const std::vector<SubschemeClaim>& components,
                                         const GBConfig& cfg = {});

struct PointSetReport {
    bool ok = false;
    long length = 0;    // vector-space dimension of the quotient
    long distinct = 0;  // separated point count
    std::string witness;
};

// I must be zero-dimensional. Verifies every listed point is a zero of I and
// that the number of distinct points of V(I) equals points.size(), counted by
// the squarefree minimal-polynomial degree of a random separating linear form
// (best of a few draws).
PointSetReport verify_point_set(const Ideal& I,
                                const std::vector<std::vector<Value>>& points,
                                std::mt19937_64& rng, const GBConfig& cfg = {});

// One affine chart of the blowup along a center whose generators are single
// variables, variable-minus-constant shifts, or (at most one per center)
// a polynomial whose support avoids the other generators' variables.
struct BlowupChart {
    std::string name;  // "e=<generator>"
    int chart_index = 0;
    Ring ring;
    // old variable name -> image in the chart ring; identity entries omitted
    std::map<std::string, Polynomial> substitution;
    Polynomial exceptional;             // local equation of the exceptional divisor
    std::vector<Polynomial> relations;  // q - w*e for nonlinear non-chart generators
};

std::vector<BlowupChart> blowup_charts(const Ideal& center);

// Substituted equations plus the chart relations, without any cancellation.
std::vector<Polynomial> total_transform(const std::vector<Polynomial>& F,
                                        const BlowupChart& chart);

// Exact divisions by the exceptional first (cheap), then saturation.
Ideal strict_transform(const std::vector<Polynomial>& total, const Polynomial& exceptional,
                       const GBConfig& cfg = {});

// Quotient of exact polynomial division, when the division is exact.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

struct SmoothnessCertificate {
    enum class Verdict { Smooth, Singular, ResourceLimited };
    Verdict verdict = Verdict::ResourceLimited;
    Ideal singular_ideal;  // Groebner basis of the (saturated) Jacobian ideal
};

SmoothnessCertificate smoothness_certificate(const std::vector<Polynomial>& F,
                                             const std::optional<Polynomial>& excluded,
                                             const GBConfig& cfg = {});

struct HessianReport {
    long rank = 0;
    std::size_t local_vars = 0;  // variables of the reduced hypersurface germ
};

// Translates the point to the origin, eliminates (to quadratic order) every
// equation with a nonvanishing linear part, and reports the rank of the
// quadratic part of the one remaining equation. Throws when the reduction
// does not end with a single equation or the point is not singular on it.
HessianReport hessian_rank_at_point(const std::vector<Polynomial>& F,
                                    const std::vector<Value>& point);

// substitute(lhs, assignment) == multiplier * rhs, exactly. The assignment
// images and rhs live in rhs's ring.
bool verify_substitution_identity(const Polynomial& lhs,
                                  const std::map<std::string, Polynomial>& assignment,
                                  const Polynomial& multiplier, const Polynomial& rhs);

struct CountReport {
    long length = 0;    // vector-space dimension of R/I
    long distinct = 0;  // separated distinct-point count
};

// Point counting for a zero-dimensional ideal; throws when I is not
// zero-dimensional.
CountReport count_points(const Ideal& I, std::mt19937_64& rng, const GBConfig& cfg = {});

// Rank of a square symmetric matrix over the entries' field.
long matrix_rank(std::vector<std::vector<Value>> m, const Field& F);

// Determinant of a square matrix of polynomials (Laplace expansion).
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const Ring& r);

}  // namespace qdf
