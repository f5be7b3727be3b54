#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdf/ring.hpp"

namespace qdf {

using Exps = std::vector<int>;

struct Term {
    Exps exp;
    Value coeff;
};

long total_degree(const Exps& e);
bool exp_divides(const Exps& a, const Exps& b);  // a | b componentwise
Exps exp_add(const Exps& a, const Exps& b);
Exps exp_sub(const Exps& a, const Exps& b);
Exps exp_lcm(const Exps& a, const Exps& b);

// Canonical internal comparison (graded reverse lexicographic on the
// variable order of the ring); returns <0, 0, >0.
int cmp_grevlex(const Exps& a, const Exps& b);

// Immutable sparse multivariate polynomial over a Ring. Terms are stored
// without zero coefficients, sorted descending in grevlex, so equality is
// structural.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(const Ring& r);
    static Polynomial constant(const Ring& r, Value c);
    static Polynomial from_int(const Ring& r, long n);
    static Polynomial variable(const Ring& r, int index);
    static Polynomial variable(const Ring& r, const std::string& name);
    static Polynomial monomial(const Ring& r, Exps e, Value c);
    // Terms: arbitrary order, may contain duplicates/zeros; canonicalized.
    static Polynomial from_terms(const Ring& r, std::vector<Term> terms);

    // ASCII grammar: variables, integer literals, + - * ^, parentheses.
    static Polynomial parse(const std::string& text, const Ring& r);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    long degree() const;  // total degree, -1 for zero

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned n) const;
    Polynomial scaled(const Value& c) const;
    Polynomial derivative(int var) const;
    Polynomial derivative(const std::string& var) const;

    // Ring homomorphism defined by `images` on a subset of variables; the
    // rest map to the variable of the same name in `target`.
    Polynomial substitute(const std::map<std::string, Polynomial>& images,
                          const Ring& target) const;
    // Same ring on both sides.
    Polynomial substitute(const std::map<std::string, Polynomial>& images) const;

    Value evaluate(const std::vector<Value>& point) const;
    // Evaluation at a point of a field extending (or canonically receiving)
    // the coefficient field.
    Value evaluate(const std::vector<Value>& point, const FieldPtr& point_field) const;

    // Common weighted degree of all terms, nullopt when inhomogeneous.
    // The zero polynomial reports the -infinity sentinel via zero_degree().
    std::optional<long> weighted_degree() const;
    std::optional<std::pair<long, long>> bidegree() const;
    static constexpr long zero_degree_sentinel = LONG_MIN;

    // Drops all terms of total degree > d.
    Polynomial truncated(long d) const;

    // Injects into a ring with a superset of variables (matched by name),
    // same coefficient field.
    Polynomial mapped_into(const Ring& target) const;
    // Coefficient conversion via Field::convert.
    Polynomial with_field(const FieldPtr& f) const;

    // Content-normalized copy: over the rationals, primitive with positive
    // leading (grevlex) coefficient; over other fields, monic in grevlex.
    Polynomial normalized() const;

    std::string str() const;

private:
    Ring ring_;
    std::vector<Term> terms_;
};

Polynomial operator*(const Value&, const Polynomial&) = delete;

}  // namespace qdf
