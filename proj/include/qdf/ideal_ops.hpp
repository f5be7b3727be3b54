#pragma once

#include <string>
#include <vector>

#include "qdf/groebner.hpp"

namespace qdf {

// Adjoins fresh variables (weight 1, bigrade (0,0) when the ring is
// bigraded) after the existing ones.
Ring extend_ring(const Ring& r, const std::vector<std::string>& fresh);

// Drops the named variables; every polynomial moved across must have zero
// exponent on each of them.
Ring project_ring(const Ring& r, const std::vector<std::string>& dropped);
Polynomial project_poly(const Polynomial& p, const Ring& target);

bool ideal_membership(const Polynomial& f, const Ideal& I, const GBConfig& cfg = {});

// f vanishes on V(I), i.e. f is in the radical of I. Decided by adjoining
// y and testing 1 in I + <1 - y*f>.
bool radical_membership(const Polynomial& f, const Ideal& I, const GBConfig& cfg = {});

// Generators of the elimination ideal I ∩ k[remaining vars], presented in
// the projected ring.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars, const GBConfig& cfg = {});

// I : f^infinity, computed by adjoining t, adding 1 - t*f, and eliminating t.
Ideal saturate(const Ideal& I, const Polynomial& f, const GBConfig& cfg = {});

Ideal intersect(const Ideal& I, const Ideal& J, const GBConfig& cfg = {});

// Two ideals with the same radical: each generator of one is a radical
// member of the other.
bool same_radical(const Ideal& I, const Ideal& J, const GBConfig& cfg = {});

// Krull dimension of R/I (affine). The unit ideal reports -1.
int krull_dimension(const Ideal& I, const GBConfig& cfg = {});
int krull_dimension(const GroebnerBasis& G);

// k-vector-space dimension of R/I; throws Error when I is not
// zero-dimensional.
long quotient_dimension(const Ideal& I, const GBConfig& cfg = {});
long quotient_dimension(const GroebnerBasis& G);

}  // namespace qdf
