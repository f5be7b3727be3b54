#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qdf/poly.hpp"

using namespace qdf;

namespace {

Ring plain_ring(const FieldPtr& K, std::vector<std::string> names) {
    return make_ring(K, VariableSet::make(std::move(names)));
}

}  // namespace

TEST_CASE("rational field arithmetic") {
    FieldPtr Q = Field::rationals();
    Value a = Q->from_int(3), b = Q->from_int(-7);
    CHECK(Q->equal(Q->add(a, b), Q->from_int(-4)));
    CHECK(Q->equal(Q->mul(a, b), Q->from_int(-21)));
    CHECK(Q->equal(Q->mul(a, Q->inv(a)), Q->one()));
    CHECK(Q->is_zero(Q->sub(a, a)));
    CHECK_THROWS_AS((void)Q->inv(Q->zero()), Error);
}

TEST_CASE("prime field arithmetic and inverses") {
    FieldPtr F = Field::prime(10007);
    Value a = F->from_int(12345);
    CHECK(F->is_one(F->mul(a, F->inv(a))));
    // from_int reduces negative representatives canonically
    CHECK(F->equal(F->from_int(-1), F->from_int(10006)));
    for (long k = 1; k < 50; ++k) {
        Value v = F->from_int(k);
        CHECK(F->is_one(F->mul(v, F->inv(v))));
    }
}

TEST_CASE("quadratic extension holds a square root of -1") {
    FieldPtr Qi = Field::with_imaginary_unit(Field::rationals());
    Value i = Qi->generator();
    CHECK(Qi->equal(Qi->mul(i, i), Qi->from_int(-1)));
    // (1+i)(1-i) = 2
    Value onepi = Qi->add(Qi->one(), i);
    Value onemi = Qi->sub(Qi->one(), i);
    CHECK(Qi->equal(Qi->mul(onepi, onemi), Qi->from_int(2)));
    CHECK(Qi->is_one(Qi->mul(onepi, Qi->inv(onepi))));
    // conversion embeds the base field
    Value two = Qi->convert(*Field::rationals(), Field::rationals()->from_int(2));
    CHECK(Qi->equal(two, Qi->from_int(2)));
}

TEST_CASE("x^2+1 at x=5 vanishes mod 13") {
    FieldPtr F = Field::prime(13);
    Ring r = plain_ring(F, {"x"});
    Polynomial p = Polynomial::parse("x^2+1", r);
    CHECK(F->is_zero(p.evaluate({F->from_int(5)})));
}

TEST_CASE("univariate utilities: gcd and squarefree degree") {
    FieldPtr F = Field::prime(10007);
    // f = (x-1)^2 (x-2): squarefree part has degree 2
    upoly::UPoly f = {F->from_int(-2), F->from_int(5), F->from_int(-4), F->from_int(1)};
    CHECK(upoly::deg(*F, f) == 3);
    CHECK(upoly::squarefree_degree(*F, f) == 2);
    upoly::UPoly g = upoly::monic_gcd(*F, f, upoly::derivative(*F, f));
    CHECK(upoly::deg(*F, g) == 1);  // the repeated factor x-1
}

TEST_CASE("parse canonical forms") {
    Ring r = plain_ring(Field::rationals(), {"x", "y"});
    CHECK(Polynomial::parse("x - x", r).is_zero());
    Polynomial p = Polynomial::parse("s^2", plain_ring(Field::rationals(), {"s"}));
    CHECK(p.term_count() == 1);
    Polynomial q = Polynomial::parse("(x+y)*(x-y)", r);
    CHECK(q == Polynomial::parse("x^2-y^2", r));
    CHECK((q * Polynomial::zero(r)).is_zero());
    CHECK_THROWS_AS((void)Polynomial::parse("x+q", r), Error);
    // round-trip through printing
    Polynomial rt = Polynomial::parse(q.str(), r);
    CHECK(rt == q);
}

TEST_CASE("the special quartic: terms and degrees") {
    // Weighted model P(2,1,1,1,1,1): s has weight 2, the form has degree 4.
    FieldPtr Q = Field::rationals();
    Ring wr = make_ring(Q, VariableSet::make({"s", "x", "y", "z", "t", "u"}, {2, 1, 1, 1, 1, 1}));
    Polynomial affine = Polynomial::parse(
        "s^2+x*y*t^2+x*z*u^2+y*z*(x^2+y^2+z^2-2*(x*y+x*z+y*z))", wr);
    REQUIRE(affine.weighted_degree().has_value());
    CHECK(*affine.weighted_degree() == 4);

    // Bundle model: bigraded, v of bidegree (-1,1); the form is (2,2).
    Ring br = make_ring(Q, VariableSet::make(
                               {"x", "y", "z", "s", "t", "u", "v"}, {1, 1, 1, 1, 1, 1, 1},
                               {{1, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 1}, {-1, 1}}));
    Polynomial F = Polynomial::parse(
        "s^2+x*y*t^2+x*z*u^2+y*z*(x^2+y^2+z^2-2*(x*y+x*z+y*z))*v^2", br);
    // 3 displayed monomials plus 6 from expanding the degree-2 factor
    CHECK(F.term_count() == 9);
    REQUIRE(F.bidegree().has_value());
    CHECK(F.bidegree()->first == 2);
    CHECK(F.bidegree()->second == 2);
}

TEST_CASE("derivatives") {
    Ring r = plain_ring(Field::rationals(), {"s", "x", "y"});
    CHECK(Polynomial::parse("s^2+x*y", r).derivative("s") == Polynomial::parse("2*s", r));
    CHECK(Polynomial::parse("x^2*y", r).derivative("x") == Polynomial::parse("2*x*y", r));
    // gradient of a^2+b^2+c*d vanishes at the origin
    Ring r4 = plain_ring(Field::rationals(), {"a", "b", "c", "d"});
    Polynomial g = Polynomial::parse("a^2+b^2+c*d", r4);
    std::vector<Value> origin(4, Field::rationals()->zero());
    for (int v = 0; v < 4; ++v)
        CHECK(Field::rationals()->is_zero(g.derivative(v).evaluate(origin)));
}

TEST_CASE("substitution is a ring homomorphism (randomized)") {
    FieldPtr F = Field::prime(5);
    Ring r = plain_ring(F, {"x", "y", "z"});
    std::mt19937_64 rng(7);
    auto rand_poly = [&]() {
        std::vector<Term> ts;
        for (int k = 0; k < 4; ++k) {
            Exps e = {int(rng() % 3), int(rng() % 3), int(rng() % 3)};
            ts.push_back({e, F->random(rng)});
        }
        return Polynomial::from_terms(r, ts);
    };
    std::map<std::string, Polynomial> sigma = {
        {"x", Polynomial::parse("y+z^2", r)},
        {"y", Polynomial::parse("x*z-1", r)},
    };
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial p = rand_poly(), q = rand_poly();
        CHECK((p * q + p).substitute(sigma) ==
              p.substitute(sigma) * q.substitute(sigma) + p.substitute(sigma));
    }
}

TEST_CASE("ring axioms on random triples") {
    FieldPtr F = Field::prime(7);
    Ring r = plain_ring(F, {"x", "y"});
    std::mt19937_64 rng(11);
    auto rand_poly = [&]() {
        std::vector<Term> ts;
        for (int k = 0; k < 3; ++k)
            ts.push_back({{int(rng() % 4), int(rng() % 4)}, F->random(rng)});
        return Polynomial::from_terms(r, ts);
    };
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a - a == Polynomial::zero(r));
    }
}

TEST_CASE("identity substitution and evaluation consistency") {
    Ring r = plain_ring(Field::rationals(), {"x", "y"});
    Polynomial p = Polynomial::parse("x^3-2*x*y+5", r);
    CHECK(p.substitute({}) == p);
    FieldPtr Q = Field::rationals();
    // substitution by constants agrees with evaluation
    Polynomial at = p.substitute({{"x", Polynomial::from_int(r, 2)},
                                  {"y", Polynomial::from_int(r, 3)}});
    REQUIRE(at.is_constant());
    CHECK(Q->equal(p.evaluate({Q->from_int(2), Q->from_int(3)}),
                   at.is_zero() ? Q->zero() : at.terms()[0].coeff));
}

TEST_CASE("absorbing squares mod the quadratic relation") {
    Ring r = plain_ring(Field::rationals(), {"m", "n", "w"});
    Polynomial lhs = Polynomial::parse("(m-n*w)*(m+n*w)-(m^2-n^2-n^3)", r);
    Polynomial rel = Polynomial::parse("w^2-n-1", r);
    // the difference is exactly -n^2 times the relation
    CHECK(lhs == Polynomial::parse("-n^2", r) * rel);
}

TEST_CASE("truncation and field transport") {
    Ring r = plain_ring(Field::rationals(), {"x", "y"});
    Polynomial p = Polynomial::parse("1+x+x*y+x^2*y", r);
    CHECK(p.truncated(1) == Polynomial::parse("1+x", r));
    FieldPtr F = Field::prime(5);
    Polynomial q = Polynomial::parse("5*x+y", r).with_field(F);
    CHECK(q == Polynomial::parse("y", make_ring(F, *r.vars)));
}
