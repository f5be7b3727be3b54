#include "qdf/quadric.hpp"

#include <algorithm>

namespace qdf {

namespace {

const char* kFiber[] = {"s", "t", "u", "v"};

bool is_fiber_var(const std::string& n) {
    for (const char* f : kFiber)
        if (n == f) return true;
    return false;
}

}  // namespace

QuadricBundleForm QuadricBundleForm::from_entries(Polynomial c, Polynomial F1, Polynomial F2,
                                                  Polynomial F3, Polynomial G1, Polynomial G2,
                                                  Polynomial H) {
    const Ring& r = c.ring();
    for (const Polynomial* p : {&F1, &F2, &F3, &G1, &G2, &H})
        if (!p->ring().same(r)) throw Error("QuadricBundleForm: entries in different rings");
    return QuadricBundleForm{r, std::move(c), std::move(F1), std::move(F2), std::move(F3),
                             std::move(G1), std::move(G2), std::move(H)};
}

std::vector<std::vector<Polynomial>> QuadricBundleForm::matrix() const {
    Polynomial z = Polynomial::zero(base);
    return {{c, z, z, z}, {z, F1, F2, G1}, {z, F2, F3, G2}, {z, G1, G2, H}};
}

QuadricBundleForm extract_matrix(const Polynomial& F) {
    const Ring& r = F.ring();
    const Field& K = *r.field;
    if (K.characteristic() == 2) throw Error("extract_matrix: characteristic 2 unsupported");
    int fi[4];
    for (int k = 0; k < 4; ++k) {
        fi[k] = r.vars->index_of(kFiber[k]);
        if (fi[k] < 0) throw Error(std::string("extract_matrix: missing fiber variable ") + kFiber[k]);
    }
    VariableSet vs;
    std::vector<int> bpos;
    for (std::size_t i = 0; i < r.nvars(); ++i) {
        if (is_fiber_var(r.vars->names[i])) continue;
        vs.names.push_back(r.vars->names[i]);
        vs.weights.push_back(1);
        bpos.push_back(static_cast<int>(i));
    }
    Ring base = make_ring(r.field, std::move(vs));

    // entry index by fiber monomial: ss, tt, tu, uu, tv, uv, vv
    std::vector<Term> acc[7];
    for (const auto& t : F.terms()) {
        int e[4] = {t.exp[fi[0]], t.exp[fi[1]], t.exp[fi[2]], t.exp[fi[3]]};
        int fdeg = e[0] + e[1] + e[2] + e[3];
        if (fdeg != 2) throw Error("extract_matrix: term not quadratic in the fiber");
        int slot;
        if (e[0] == 2) slot = 0;
        else if (e[0] == 1) throw Error("extract_matrix: cross term involving s");
        else if (e[1] == 2) slot = 1;
        else if (e[1] == 1 && e[2] == 1) slot = 2;
        else if (e[2] == 2) slot = 3;
        else if (e[1] == 1 && e[3] == 1) slot = 4;
        else if (e[2] == 1 && e[3] == 1) slot = 5;
        else slot = 6;  // vv
        Exps be(base.nvars(), 0);
        for (std::size_t k = 0; k < bpos.size(); ++k) be[k] = t.exp[bpos[k]];
        acc[slot].push_back({std::move(be), t.coeff});
    }
    Polynomial entry[7];
    Value half = K.inv(K.from_int(2));
    for (int k = 0; k < 7; ++k) {
        entry[k] = Polynomial::from_terms(base, std::move(acc[k]));
        if (k == 2 || k == 4 || k == 5) entry[k] = entry[k].scaled(half);
    }
    const long profile[7] = {0, 2, 2, 2, 3, 3, 4};
    const char* names[7] = {"c", "F1", "F2", "F3", "G1", "G2", "H"};
    for (int k = 0; k < 7; ++k) {
        if (entry[k].is_zero()) continue;
        auto wd = entry[k].weighted_degree();
        if (!wd || *wd != profile[k])
            throw Error(std::string("extract_matrix: degree profile violated at ") + names[k]);
    }
    return QuadricBundleForm{base, entry[0], entry[1], entry[2],
                             entry[3], entry[4], entry[5], entry[6]};
}

Polynomial reassemble(const QuadricBundleForm& Q, const Ring& target) {
    auto var = [&](const char* n) { return Polynomial::variable(target, n); };
    auto lift = [&](const Polynomial& p) { return p.mapped_into(target); };
    Polynomial s = var("s"), t = var("t"), u = var("u"), v = var("v");
    Polynomial two = Polynomial::from_int(target, 2);
    return lift(Q.c) * s * s + lift(Q.F1) * t * t + two * lift(Q.F2) * t * u +
           lift(Q.F3) * u * u + two * lift(Q.G1) * t * v + two * lift(Q.G2) * u * v +
           lift(Q.H) * v * v;
}

DegeneracyDivisor degeneracy_determinant(const QuadricBundleForm& Q) {
    DegeneracyDivisor d;
    d.D = poly_det(Q.matrix(), Q.base);
    d.degree = d.D.degree();
    Polynomial two = Polynomial::from_int(Q.base, 2);
    Polynomial closed =
        Q.c * ((Q.F1 * Q.F3 - Q.F2 * Q.F2) * Q.H - Q.F3 * Q.G1 * Q.G1 +
               two * Q.F2 * Q.G1 * Q.G2 - Q.F1 * Q.G2 * Q.G2);
    d.matches_closed_form = (d.D == closed);
    return d;
}

bool tangency_congruence(const QuadricBundleForm& Q) {
    Polynomial C = Q.F1 * Q.F3 - Q.F2 * Q.F2;
    Polynomial D = degeneracy_determinant(Q).D;
    Polynomial t1 = Q.F2 * Q.G1 - Q.F1 * Q.G2;
    Polynomial t3 = Q.F3 * Q.G1 - Q.F2 * Q.G2;
    bool first = Q.F1 * D - Q.c * Q.F1 * C * Q.H + Q.c * t1 * t1 == -(Q.c * Q.G1 * Q.G1 * C);
    bool second = Q.F3 * D - Q.c * Q.F3 * C * Q.H + Q.c * t3 * t3 == -(Q.c * Q.G2 * Q.G2 * C);
    return first && second;
}

CountReport tangency_count(const QuadricBundleForm& Q, std::mt19937_64& rng,
                           const GBConfig& cfg) {
    Polynomial C = Q.F1 * Q.F3 - Q.F2 * Q.F2;
    Polynomial D = degeneracy_determinant(Q).D;
    if (C.is_zero() || D.is_zero()) throw Error("tangency_count: degenerate input");

    const auto& names = Q.base.vars->names;
    if (names.size() != 3) throw Error("tangency_count: base is not a plane");
    CountReport total;
    // Strata: first chart variable nonzero; then =0 with the next nonzero; etc.
    for (std::size_t k = 0; k < 3; ++k) {
        AmbientChart chart = make_chart(Q.base, {names[k]});
        std::vector<Polynomial> gens = {restrict_to_chart(C, chart),
                                        restrict_to_chart(D, chart)};
        for (std::size_t j = 0; j < k; ++j)
            gens.push_back(Polynomial::variable(chart.ring, names[j]));
        CountReport part = count_points(Ideal::of(chart.ring, std::move(gens)), rng, cfg);
        total.length += part.length;
        total.distinct += part.distinct;
    }
    return total;
}

QuadricBundleForm random_instance(const FieldPtr& field, std::mt19937_64& rng) {
    Ring base = make_ring(field, VariableSet::make({"x", "y", "z"}));
    auto random_form = [&](int deg) {
        std::vector<Term> terms;
        for (int a = 0; a <= deg; ++a)
            for (int b = 0; a + b <= deg; ++b) {
                Exps e = {a, b, deg - a - b};
                terms.push_back({std::move(e), field->random(rng)});
            }
        return Polynomial::from_terms(base, std::move(terms));
    };
    Value c = field->random(rng);
    while (field->is_zero(c)) c = field->random(rng);
    return QuadricBundleForm{base,
                             Polynomial::constant(base, c),
                             random_form(2),
                             random_form(2),
                             random_form(2),
                             random_form(3),
                             random_form(3),
                             random_form(4)};
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ParamReport parameter_arithmetic() {
    ParamReport rep;
    rep.series_dim = binomial(8, 4) - 5 - 12;
    rep.moduli_dim = 14 + 44 - 16 - 8;
    rep.ok = rep.series_dim == 53 && rep.moduli_dim == 34;
    return rep;
}

}  // namespace qdf
