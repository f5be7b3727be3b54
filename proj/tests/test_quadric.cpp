#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qdf/quadric.hpp"

using namespace qdf;

namespace {

Ring bundle_ring(const FieldPtr& K) {
    return make_ring(K, VariableSet::make(
                            {"x", "y", "z", "s", "t", "u", "v"}, {1, 1, 1, 1, 1, 1, 1},
                            {{1, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 1}, {-1, 1}}));
}

const char* kSpecial =
    "s^2+x*y*t^2+x*z*u^2+y*z*(x^2+y^2+z^2-2*(x*y+x*z+y*z))*v^2";

}  // namespace

TEST_CASE("matrix extraction of the special member") {
    Ring br = bundle_ring(Field::rationals());
    QuadricBundleForm Q = extract_matrix(Polynomial::parse(kSpecial, br));
    Ring b = Q.base;
    CHECK(Q.c == Polynomial::from_int(b, 1));
    CHECK(Q.F1 == Polynomial::parse("x*y", b));
    CHECK(Q.F2.is_zero());
    CHECK(Q.F3 == Polynomial::parse("x*z", b));
    CHECK(Q.G1.is_zero());
    CHECK(Q.G2.is_zero());
    CHECK(Q.H == Polynomial::parse("y*z*(x^2+y^2+z^2-2*(x*y+x*z+y*z))", b));
    // reassembly reproduces the form
    CHECK(reassemble(Q, br) == Polynomial::parse(kSpecial, br));
}

TEST_CASE("extraction of a bare square and of malformed input") {
    Ring br = bundle_ring(Field::rationals());
    QuadricBundleForm Q = extract_matrix(Polynomial::parse("s^2", br));
    CHECK(Q.c == Polynomial::from_int(Q.base, 1));
    CHECK(Q.F1.is_zero());
    CHECK(Q.F2.is_zero());
    CHECK(Q.F3.is_zero());
    CHECK(Q.G1.is_zero());
    CHECK(Q.G2.is_zero());
    CHECK(Q.H.is_zero());
    // an s-cross term violates the shape
    CHECK_THROWS_AS((void)extract_matrix(Polynomial::parse("s*t*x+s^2", br)), Error);
}

TEST_CASE("extract/reassemble round-trip on random instances") {
    for (FieldPtr K : {Field::rationals(), Field::prime(10007)}) {
        Ring br = bundle_ring(K);
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 5; ++trial) {
            QuadricBundleForm Q = random_instance(K, rng);
            Polynomial F = reassemble(Q, br);
            QuadricBundleForm back = extract_matrix(F);
            CHECK(back.c == Q.c);
            CHECK(back.F1 == Q.F1);
            CHECK(back.F2 == Q.F2);
            CHECK(back.F3 == Q.F3);
            CHECK(back.G1 == Q.G1);
            CHECK(back.G2 == Q.G2);
            CHECK(back.H == Q.H);
        }
    }
}

TEST_CASE("determinant closed form, symbolically in the entries") {
    // treat the seven entries as indeterminates; the 4x4 determinant of the
    // block matrix equals c((F1F3-F2^2)H - F3G1^2 + 2F2G1G2 - F1G2^2)
    Ring r = make_ring(Field::rationals(),
                       VariableSet::make({"c", "f1", "f2", "f3", "g1", "g2", "h"}));
    auto P = [&](const char* s) { return Polynomial::parse(s, r); };
    std::vector<std::vector<Polynomial>> m = {
        {P("c"), P("0"), P("0"), P("0")},
        {P("0"), P("f1"), P("f2"), P("g1")},
        {P("0"), P("f2"), P("f3"), P("g2")},
        {P("0"), P("g1"), P("g2"), P("h")},
    };
    Polynomial det = poly_det(m, r);
    CHECK(det == P("c*((f1*f3-f2^2)*h-f3*g1^2+2*f2*g1*g2-f1*g2^2)"));
}

TEST_CASE("degeneracy divisor of the special member") {
    Ring br = bundle_ring(Field::rationals());
    QuadricBundleForm Q = extract_matrix(Polynomial::parse(kSpecial, br));
    DegeneracyDivisor D = degeneracy_determinant(Q);
    CHECK(D.matches_closed_form);
    CHECK(D.degree == 8);
    CHECK(D.D == Polynomial::parse(
                     "x^2*y*z*(x^2+y^2+z^2-2*(x*y+x*z+y*z))", Q.base) *
                     Polynomial::parse("y*z", Q.base));
}

TEST_CASE("degeneracy divisor has degree 8 generically") {
    FieldPtr K = Field::prime(10007);
    std::mt19937_64 rng(17);
    QuadricBundleForm Q = random_instance(K, rng);
    DegeneracyDivisor D = degeneracy_determinant(Q);
    CHECK(D.matches_closed_form);
    CHECK(D.degree == 8);
    // degree additivity of the closed form: deg(C) + deg(H) = 4 + 4 = 8
    Polynomial C = Q.F1 * Q.F3 - Q.F2 * Q.F2;
    REQUIRE(C.weighted_degree().has_value());
    CHECK(*C.weighted_degree() == 4);
}

TEST_CASE("tangency congruence") {
    Ring br = bundle_ring(Field::rationals());
    CHECK(tangency_congruence(extract_matrix(Polynomial::parse(kSpecial, br))));
    FieldPtr K = Field::prime(10007);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 3; ++trial)
        CHECK(tangency_congruence(random_instance(K, rng)));
}

TEST_CASE("tangency count is length 32 at 16 distinct points") {
    FieldPtr K = Field::prime(10007);
    std::mt19937_64 rng(2024);
    int done = 0;
    for (int attempt = 0; attempt < 5 && !done; ++attempt) {
        QuadricBundleForm Q = random_instance(K, rng);
        try {
            CountReport c = tangency_count(Q, rng);
            CHECK(c.length == 32);
            CHECK(c.distinct == 16);
            done = 1;
        } catch (const ResourceLimitError&) {
            throw;
        } catch (const Error&) {
            // degenerate draw; redraw
        }
    }
    CHECK(done == 1);
}

TEST_CASE("the special member is too degenerate to count") {
    Ring br = bundle_ring(Field::prime(10007));
    QuadricBundleForm Q = extract_matrix(Polynomial::parse(kSpecial, br));
    std::mt19937_64 rng(3);
    // C = x^2 y z is non-reduced and C, D share components
    CHECK_THROWS_AS((void)tangency_count(Q, rng), Error);
}

TEST_CASE("parameter arithmetic") {
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    ParamReport p = parameter_arithmetic();
    CHECK(p.ok);
    CHECK(p.series_dim == 53);
    CHECK(p.moduli_dim == 34);
}
