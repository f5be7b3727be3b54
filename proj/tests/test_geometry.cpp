#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "qdf/geometry.hpp"

using namespace qdf;

namespace {

Ring qring(std::vector<std::string> names) {
    return make_ring(Field::rationals(), VariableSet::make(std::move(names)));
}

// coordinate ring of the quadric-surface bundle model
Ring bundle_ring(const FieldPtr& K) {
    return make_ring(K, VariableSet::make(
                            {"x", "y", "z", "s", "t", "u", "v"}, {1, 1, 1, 1, 1, 1, 1},
                            {{1, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 1}, {-1, 1}}));
}

const char* kSpecial =
    "s^2+x*y*t^2+x*z*u^2+y*z*(x^2+y^2+z^2-2*(x*y+x*z+y*z))*v^2";

const std::vector<std::vector<std::string>> kComponents = {
    {"v^2*y*(y-x)^2+u^2*x", "z", "s", "t"},   // curve over the edge z = 0
    {"v^2*z*(z-x)^2+t^2*x", "y", "s", "u"},   // curve over the edge y = 0
    {"u^2-4*v^2+t^2", "x", "z-y", "s"},       // conic over the point x = 0, y = z
    {"z*u^2+y*t^2", "s", "v", "x"},           // section-direction curve over x = 0
};

std::vector<Polynomial> restrict_gens(const std::vector<std::string>& gens,
                                      const AmbientChart& ch) {
    std::vector<Polynomial> out;
    for (const auto& g : gens)
        out.push_back(restrict_to_chart(Polynomial::parse(g, ch.master), ch));
    return out;
}

Ideal parse_ideal(const Ring& r, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(Polynomial::parse(g, r));
    return Ideal::of(r, ps);
}

}  // namespace

TEST_CASE("chart construction accepts degree-1 directions only") {
    Ring br = bundle_ring(Field::rationals());
    AmbientChart ch = make_chart(br, {"x", "v"});
    CHECK(ch.ring.nvars() == 5);
    CHECK_THROWS_AS((void)make_chart(br, {"s", "t"}), Error);  // s is bidegree (1,1)
    Ring wr = make_ring(Field::rationals(),
                        VariableSet::make({"s", "x", "y"}, {2, 1, 1}));
    CHECK_THROWS_AS((void)make_chart(wr, {"s"}), Error);  // weight 2
    Polynomial F = restrict_to_chart(Polynomial::parse(kSpecial, br), ch);
    CHECK(F == Polynomial::parse(
                   "s^2+y*t^2+z*u^2+y*z*(1+y^2+z^2-2*(y+z+y*z))", ch.ring));
}

TEST_CASE("smooth hypersurface has unit singular ideal") {
    Ring r = qring({"x", "y"});
    Ideal sing = singular_locus_ideal({Polynomial::parse("x", r)});
    CHECK(groebner_basis(sing).is_unit());
    auto cert = smoothness_certificate({Polynomial::parse("x^2+y^2-1", r)}, std::nullopt);
    CHECK(cert.verdict == SmoothnessCertificate::Verdict::Smooth);
}

TEST_CASE("ordinary double point: singular exactly at the origin") {
    Ring r = qring({"a", "b", "c", "d"});
    Polynomial g = Polynomial::parse("a^2+b^2+c*d", r);
    Ideal sing = singular_locus_ideal({g});
    SubschemeClaim origin{"origin", parse_ideal(r, {"a", "b", "c", "d"}), 0};
    CHECK(verify_decomposition(sing, {origin}).ok);
    HessianReport h = hessian_rank_at_point({g}, std::vector<Value>(4, r.field->zero()));
    CHECK(h.rank == 4);
    CHECK(h.local_vars == 4);
    // a corank-2 quadratic part is not an ordinary double point
    HessianReport h2 = hessian_rank_at_point({Polynomial::parse("a^2+b^2", r)},
                                             std::vector<Value>(4, r.field->zero()));
    CHECK(h2.rank == 2);
}

TEST_CASE("hessian over an extension field on a blowup-chart equation") {
    FieldPtr Qi = Field::with_imaginary_unit(Field::rationals());
    Ring r = make_ring(Qi, VariableSet::make({"s2", "t2", "z2", "y1"}));
    Polynomial g = Polynomial::parse("s2^2+t2^2-4*z2^2+z2*(1+y1^2)", r);
    std::vector<Value> pt = {Qi->zero(), Qi->zero(), Qi->zero(), Qi->generator()};
    HessianReport h = hessian_rank_at_point({g}, pt);
    CHECK(h.rank == 4);
    CHECK(h.local_vars == 4);
}

TEST_CASE("singular points over F_5 match the claimed components pointwise") {
    FieldPtr F = Field::prime(5);
    Ring br = bundle_ring(F);
    Polynomial master = Polynomial::parse(kSpecial, br);
    auto value_of = [&](long k) { return F->from_int(k); };
    for (const char* b : {"x", "y", "z"})
        for (const char* f : {"t", "u", "v"}) {
            AmbientChart ch = make_chart(br, {b, f});
            Polynomial Fc = restrict_to_chart(master, ch);
            Ideal sing = singular_locus_ideal({Fc});
            std::vector<std::vector<Polynomial>> comps;
            for (const auto& c : kComponents) comps.push_back(restrict_gens(c, ch));
            // enumerate all 5^5 chart points
            std::vector<Value> pt(5, F->zero());
            std::vector<long> idx(5, 0);
            long mismatches = 0;
            for (long code = 0; code < 3125; ++code) {
                long rem = code;
                for (int k = 0; k < 5; ++k) {
                    pt[k] = value_of(rem % 5);
                    rem /= 5;
                }
                bool in_sing = true;
                for (const auto& g : sing.gens)
                    in_sing = in_sing && F->is_zero(g.evaluate(pt));
                bool in_union = false;
                for (const auto& comp : comps) {
                    bool all = true;
                    for (const auto& g : comp) all = all && F->is_zero(g.evaluate(pt));
                    in_union = in_union || all;
                }
                if (in_sing != in_union) ++mismatches;
            }
            CHECK(mismatches == 0);
        }
}

TEST_CASE("a decomposition that omits one component is rejected with a witness") {
    FieldPtr F = Field::prime(10007);
    Ring br = bundle_ring(F);
    AmbientChart ch = make_chart(br, {"y", "u"});
    Polynomial Fc = restrict_to_chart(Polynomial::parse(kSpecial, br), ch);
    Ideal sing = singular_locus_ideal({Fc});
    // the section-direction curve is visible in this chart; leave it out
    std::vector<SubschemeClaim> partial = {
        {"edge-z curve", Ideal::of(ch.ring, restrict_gens(kComponents[0], ch)), 1},
        {"conic", Ideal::of(ch.ring, restrict_gens(kComponents[2], ch)), 1},
    };
    DecompositionReport rep = verify_decomposition(sing, partial);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.witness.empty());
    // adding it back makes the decomposition pass
    partial.push_back({"section curve", Ideal::of(ch.ring, restrict_gens(kComponents[3], ch)), 1});
    CHECK(verify_decomposition(sing, partial).ok);
}

TEST_CASE("blowup charts of a node-type center") {
    Ring r = qring({"y", "z", "s", "t", "u"});
    Ideal center = parse_ideal(r, {"s", "t", "z", "y-1", "u"});
    auto charts = blowup_charts(center);
    REQUIRE(charts.size() == 5);
    // chart of t: s = s1 t, z = z1 t, y = 1 + y1 t, u = u1 t
    const BlowupChart* tch = nullptr;
    for (const auto& c : charts)
        if (c.name == "e=t") tch = &c;
    REQUIRE(tch != nullptr);
    CHECK(tch->substitution.at("s") == Polynomial::parse("s1*t", tch->ring));
    CHECK(tch->substitution.at("z") == Polynomial::parse("z1*t", tch->ring));
    CHECK(tch->substitution.at("y") == Polynomial::parse("1+y1*t", tch->ring));
    CHECK(tch->substitution.at("u") == Polynomial::parse("u1*t", tch->ring));
    CHECK(tch->relations.empty());
    // every center generator becomes divisible by the exceptional equation
    for (const auto& c : charts)
        for (const auto& g : center.gens) {
            Polynomial moved = g.substitute(c.substitution, c.ring);
            CHECK(divide_exact(moved, c.exceptional).has_value());
        }
}

TEST_CASE("blowup of a principal center is an isomorphism chart") {
    Ring r = qring({"x", "y"});
    Ideal center = parse_ideal(r, {"x^2+y"});
    auto charts = blowup_charts(center);
    REQUIRE(charts.size() == 1);
    CHECK(charts[0].substitution.empty());
    CHECK(charts[0].exceptional == Polynomial::parse("x^2+y", charts[0].ring));
}

TEST_CASE("strict transform of the first normal form resolves in one step") {
    // a^2 + b^2 + c^2 - p^2 q^2: blow up one of the two singular lines
    Ring r = qring({"a", "b", "c", "p", "q"});
    Polynomial g = Polynomial::parse("a^2+b^2+c^2-p^2*q^2", r);
    Ideal sing = singular_locus_ideal({g});
    std::vector<SubschemeClaim> lines = {
        {"p-line", parse_ideal(r, {"a", "b", "c", "q"}), 1},
        {"q-line", parse_ideal(r, {"a", "b", "c", "p"}), 1},
    };
    CHECK(verify_decomposition(sing, lines).ok);
    Ideal center = parse_ideal(r, {"a", "b", "c", "q"});
    auto charts = blowup_charts(center);
    REQUIRE(charts.size() == 4);
    int singular_charts = 0;
    for (const auto& c : charts) {
        auto total = total_transform({g}, c);
        Ideal st = strict_transform(total, c.exceptional);
        // saturation is already done: a second pass changes nothing
        Ideal st2 = saturate(st, c.exceptional);
        for (const auto& h : st2.gens) CHECK(ideal_membership(h, st));
        auto cert = smoothness_certificate(st.gens, c.exceptional);
        if (cert.verdict != SmoothnessCertificate::Verdict::Smooth) ++singular_charts;
    }
    // the other line still meets exactly one chart's strict transform
    CHECK(singular_charts == 1);
}

TEST_CASE("strict transform divides out the exceptional") {
    Ring r = qring({"x", "e"});
    Ideal st = strict_transform({Polynomial::parse("x*e", r)}, Polynomial::parse("e", r));
    CHECK(ideal_membership(Polynomial::parse("x", r), st));
    CHECK_FALSE(ideal_membership(Polynomial::parse("e", r), st));
}

TEST_CASE("point sets: membership plus separated count") {
    Ring r = qring({"x", "y"});
    std::mt19937_64 rng(99);
    FieldPtr Q = Field::rationals();
    Ideal I = parse_ideal(r, {"x^2-1", "y"});
    PointSetReport rep = verify_point_set(
        I, {{Q->from_int(1), Q->zero()}, {Q->from_int(-1), Q->zero()}}, rng);
    CHECK(rep.ok);
    CHECK(rep.length == 2);
    CHECK(rep.distinct == 2);
    // a wrong point is flagged
    PointSetReport bad = verify_point_set(
        I, {{Q->from_int(2), Q->zero()}, {Q->from_int(-1), Q->zero()}}, rng);
    CHECK_FALSE(bad.ok);
    // non-reduced structure: length exceeds the distinct count
    CountReport c = count_points(parse_ideal(r, {"x^2", "y^2"}), rng);
    CHECK(c.length == 4);
    CHECK(c.distinct == 1);
}

TEST_CASE("chart overlap: singularity is independent of the chart") {
    FieldPtr F = Field::prime(10007);
    Ring br = bundle_ring(F);
    Polynomial master = Polynomial::parse(kSpecial, br);
    AmbientChart cxv = make_chart(br, {"x", "v"});
    AmbientChart cyt = make_chart(br, {"y", "t"});
    Polynomial Fxv = restrict_to_chart(master, cxv);
    Polynomial Fyt = restrict_to_chart(master, cyt);
    Ideal sxv = singular_locus_ideal({Fxv});
    Ideal syt = singular_locus_ideal({Fyt});
    std::mt19937_64 rng(2026);
    auto eval_all = [&](const Ideal& I, const AmbientChart& ch,
                        const std::map<std::string, Value>& coords) {
        std::vector<Value> pt;
        for (const auto& n : ch.ring.vars->names) pt.push_back(coords.at(n));
        bool all = true;
        for (const auto& g : I.gens) all = all && F->is_zero(g.evaluate(pt));
        return all;
    };
    for (int trial = 0; trial < 24; ++trial) {
        // a master point with invertible coordinates, scaled into each chart
        // by the (lambda, mu) torus action fixing the bidegrees
        std::map<std::string, Value> m;
        for (const auto& n : br.vars->names) {
            Value v = F->zero();
            while (F->is_zero(v)) v = F->random(rng);
            m[n] = v;
        }
        auto scaled = [&](const Value& lam, const Value& mu) {
            std::map<std::string, Value> out;
            out["x"] = F->mul(lam, m["x"]);
            out["y"] = F->mul(lam, m["y"]);
            out["z"] = F->mul(lam, m["z"]);
            out["s"] = F->mul(F->mul(lam, mu), m["s"]);
            out["t"] = F->mul(mu, m["t"]);
            out["u"] = F->mul(mu, m["u"]);
            out["v"] = F->mul(F->mul(F->inv(lam), mu), m["v"]);
            return out;
        };
        // chart x=1, v=1: lambda = 1/x, mu = lambda^... solve v' = 1
        Value lam1 = F->inv(m["x"]);
        Value mu1 = F->inv(F->mul(F->inv(m["x"]), m["v"]));
        // chart y=1, t=1
        Value lam2 = F->inv(m["y"]);
        Value mu2 = F->inv(m["t"]);
        CHECK(eval_all(sxv, cxv, scaled(lam1, mu1)) ==
              eval_all(syt, cyt, scaled(lam2, mu2)));
    }
}

TEST_CASE("substitution identities checked exactly") {
    Ring r = qring({"s1", "y1", "z1", "t1", "u1", "y", "z"});
    // completing the square in the first incidence chart:
    // s1^2 + y1 z1 - t1^2 u1^2 with y1 = y + u1^2, z1 = z + t1^2
    Polynomial lhs = Polynomial::parse("s1^2+y1*z1-t1^2*u1^2", r);
    Polynomial rhs = Polynomial::parse("s1^2+y*t1^2+z*u1^2+y*z", r);
    std::map<std::string, Polynomial> sigma = {
        {"y1", Polynomial::parse("y+u1^2", r)},
        {"z1", Polynomial::parse("z+t1^2", r)},
    };
    CHECK(verify_substitution_identity(lhs, sigma, Polynomial::from_int(r, 1), rhs));
    CHECK_FALSE(verify_substitution_identity(
        lhs, sigma, Polynomial::from_int(r, 1),
        rhs + Polynomial::parse("y", r)));
}
