#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "qdf/util.hpp"

namespace qdf {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// A coefficient, tagged by the Field that created it. Rationals carry an
// mpq, prime-field elements a canonical residue, extension elements a dense
// coefficient vector over the base field (degree < extension degree).
class Value {
public:
    Value() : rep_(mpq_class(0)) {}

    const mpq_class& rat() const { return std::get<mpq_class>(rep_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(rep_); }
    const std::vector<Value>& ext() const { return std::get<std::vector<Value>>(rep_); }

private:
    friend class Field;
    explicit Value(mpq_class q) : rep_(std::move(q)) {}
    explicit Value(std::uint64_t r) : rep_(r) {}
    explicit Value(std::vector<Value> c) : rep_(std::move(c)) {}

    std::variant<mpq_class, std::uint64_t, std::vector<Value>> rep_;
};

// Exact coefficient field: rationals, a prime field, or a quotient
// extension base[w]/(minimal polynomial). Immutable and shareable.
class Field {
public:
    enum class Kind { Rationals, Prime, Extension };

    static FieldPtr rationals();
    static FieldPtr prime(std::uint64_t p);
    // Extension by a monic minimal polynomial w^d + m[d-1] w^{d-1} + ... + m[0]
    // over `base`; `tail` holds m[0..d-1] (values of `base`). Irreducibility is
    // asserted by the caller.
    static FieldPtr extension(FieldPtr base, std::vector<Value> tail,
                              std::string symbol = "w");
    // Convenience: base(i) with i^2 = -1.
    static FieldPtr with_imaginary_unit(FieldPtr base);

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    const FieldPtr& base() const { return base_; }
    std::size_t extension_degree() const { return tail_.size(); }
    const std::string& symbol() const { return symbol_; }
    // Characteristic of the field (0 for rationals and extensions of them).
    std::uint64_t characteristic() const;

    Value zero() const;
    Value one() const;
    Value from_int(long n) const;
    Value from_mpz(const mpz_class& n) const;
    Value from_mpq(const mpq_class& q) const;
    // Generator w of an extension field.
    Value generator() const;

    Value add(const Value& a, const Value& b) const;
    Value sub(const Value& a, const Value& b) const;
    Value mul(const Value& a, const Value& b) const;
    Value neg(const Value& a) const;
    Value inv(const Value& a) const;
    Value div(const Value& a, const Value& b) const;
    bool is_zero(const Value& a) const;
    bool is_one(const Value& a) const;
    bool equal(const Value& a, const Value& b) const;

    // Structural equality of field descriptions.
    bool same(const Field& other) const;

    // Injects a value of `src` into this field where a canonical map exists
    // (identity, base -> extension, rationals -> prime field / its extension).
    Value convert(const Field& src, const Value& v) const;

    Value random(std::mt19937_64& rng) const;
    std::string str(const Value& v) const;
    std::string name() const;

private:
    Field() = default;

    Kind kind_ = Kind::Rationals;
    std::uint64_t p_ = 0;
    FieldPtr base_;
    std::vector<Value> tail_;  // minimal polynomial minus leading term
    std::string symbol_;
};

// Dense univariate polynomials over a Field, used for extension-field
// arithmetic and for minimal/squarefree computations in point counting.
namespace upoly {
using UPoly = std::vector<Value>;  // coefficient of degree i at index i

void trim(const Field& F, UPoly& p);
int deg(const Field& F, const UPoly& p);  // -1 for zero
UPoly add(const Field& F, const UPoly& a, const UPoly& b);
UPoly sub(const Field& F, const UPoly& a, const UPoly& b);
UPoly mul(const Field& F, const UPoly& a, const UPoly& b);
UPoly scale(const Field& F, const UPoly& a, const Value& c);
// Remainder of a by b (b nonzero).
UPoly rem(const Field& F, UPoly a, const UPoly& b);
UPoly monic_gcd(const Field& F, UPoly a, UPoly b);
UPoly derivative(const Field& F, const UPoly& a);
// Degree of the squarefree part p / gcd(p, p'); equals the number of
// distinct roots over the algebraic closure when char = 0 or char > deg p.
int squarefree_degree(const Field& F, const UPoly& p);
}  // namespace upoly

}  // namespace qdf
