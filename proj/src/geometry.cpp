#include "qdf/geometry.hpp"

#include <algorithm>
#include <functional>
#include <cctype>
#include <set>

namespace qdf {

AmbientChart make_chart(const Ring& master, const std::vector<std::string>& ones) {
    std::string name;
    for (const auto& v : ones) {
        int idx = master.vars->index_of(v);
        if (idx < 0) throw Error("make_chart: unknown variable " + v);
        if (master.vars->weights[idx] != 1)
            throw Error("make_chart: variable " + v + " has weight > 1");
        if (!master.vars->bigrade.empty()) {
            auto [a, b] = master.vars->bigrade[idx];
            if (a > 0 && b > 0)
                throw Error("make_chart: variable " + v + " is not a chart direction");
        }
        if (!name.empty()) name += ",";
        name += v + "=1";
    }
    VariableSet vs;
    for (std::size_t i = 0; i < master.nvars(); ++i) {
        const std::string& n = master.vars->names[i];
        if (std::find(ones.begin(), ones.end(), n) != ones.end()) continue;
        vs.names.push_back(n);
        vs.weights.push_back(1);
    }
    return AmbientChart{name, master, make_ring(master.field, std::move(vs)), ones};
}

Polynomial restrict_to_chart(const Polynomial& p, const AmbientChart& chart) {
    std::map<std::string, Polynomial> images;
    for (const auto& v : chart.ones) images.emplace(v, Polynomial::from_int(chart.ring, 1));
    return p.substitute(images, chart.ring);
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const Ring& r) {
    std::size_t n = m.size();
    if (n == 0) return Polynomial::from_int(r, 1);
    if (n == 1) return m[0][0];
    Polynomial acc = Polynomial::zero(r);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * poly_det(minor, r);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Ideal singular_locus_ideal(const std::vector<Polynomial>& F) {
    if (F.empty()) throw Error("singular_locus_ideal: no equations");
    const Ring& r = F[0].ring();
    std::size_t k = F.size(), n = r.nvars();
    if (k > n) throw Error("singular_locus_ideal: more equations than variables");
    std::vector<std::vector<Polynomial>> jac(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t v = 0; v < n; ++v) jac[i].push_back(F[i].derivative(static_cast<int>(v)));

    std::vector<Polynomial> gens = F;
    std::vector<std::size_t> cols(k);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t from) {
        if (pos == k) {
            std::vector<std::vector<Polynomial>> sub(k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = 0; c < k; ++c) sub[i].push_back(jac[i][cols[c]]);
            gens.push_back(poly_det(sub, r));
            return;
        }
        for (std::size_t c = from; c + (k - pos) <= n; ++c) {
            cols[pos] = c;
            choose(pos + 1, c + 1);
        }
    };
    choose(0, 0);
    return Ideal::of(r, std::move(gens));
}

DecompositionReport verify_decomposition(const Ideal& sing,
                                         const std::vector<SubschemeClaim>& components,
                                         const GBConfig& cfg) {
    if (components.empty()) throw Error("verify_decomposition: no components");
    Ideal uni = components[0].ideal;
    for (std::size_t i = 1; i < components.size(); ++i)
        uni = intersect(uni, components[i].ideal, cfg);
    for (const auto& g : uni.gens)
        if (!radical_membership(g, sing, cfg))
            return {false, "union generator not in radical of singular ideal: " + g.str()};
    for (const auto& g : sing.gens)
        if (!radical_membership(g, uni, cfg))
            return {false, "singular-ideal generator not in radical of union: " + g.str()};
    return {true, ""};
}

namespace {

// Standard monomial basis of R/I from the leading-term data; throws when I
// is not zero-dimensional.
std::vector<Exps> standard_monomials(const GroebnerBasis& G) {
    std::size_t n = G.ring().nvars();
    if (G.is_unit()) return {};
    std::vector<Exps> leads;
    for (std::size_t i = 0; i < G.elements().size(); ++i) leads.push_back(G.leading_exp(i));
    std::vector<long> cap(n, -1);
    for (const auto& L : leads) {
        int support = -1;
        bool pure = true;
        for (std::size_t k = 0; k < n; ++k)
            if (L[k] > 0) {
                if (support >= 0) { pure = false; break; }
                support = static_cast<int>(k);
            }
        if (pure && support >= 0 && (cap[support] < 0 || L[support] < cap[support]))
            cap[support] = L[support];
    }
    for (std::size_t k = 0; k < n; ++k)
        if (cap[k] < 0) throw Error("standard_monomials: ideal is not zero-dimensional");
    std::vector<Exps> basis;
    Exps e(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == n) {
            for (const auto& L : leads)
                if (exp_divides(L, e)) return;
            basis.push_back(e);
            return;
        }
        for (e[v] = 0; e[v] < cap[v]; ++e[v]) rec(v + 1);
        e[v] = 0;
    };
    rec(0);
    return basis;
}

std::vector<Value> coords_of(const Polynomial& p, const std::map<Exps, int>& index,
                             std::size_t dim, const Field& F) {
    std::vector<Value> v(dim, F.zero());
    for (const auto& t : p.terms()) {
        auto it = index.find(t.exp);
        if (it == index.end()) throw Error("coords_of: unreduced monomial");
        v[it->second] = t.coeff;
    }
    return v;
}

// Minimal polynomial of multiplication by ell on R/I: iterate powers,
// Gauss-eliminate with an augmented combination block, return the first
// dependency.
upoly::UPoly minimal_polynomial(const Polynomial& ell, const GroebnerBasis& G,
                                const std::vector<Exps>& basis, const GBConfig& cfg) {
    const Field& F = *G.ring().field;
    std::map<Exps, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    std::size_t D = basis.size();

    struct Row {
        std::vector<Value> vec;
        std::vector<Value> comb;
        std::size_t pivot;
    };
    std::vector<Row> rows;

    Polynomial power = Polynomial::from_int(G.ring(), 1);
    for (std::size_t k = 0; k <= D; ++k) {
        if (k > 0) power = normal_form(ell * power, G, cfg);
        std::vector<Value> vec = coords_of(power, index, D, F);
        std::vector<Value> comb(D + 2, F.zero());
        comb[k] = F.one();
        for (const auto& row : rows) {
            if (F.is_zero(vec[row.pivot])) continue;
            Value c = vec[row.pivot];
            for (std::size_t j = 0; j < D; ++j) vec[j] = F.sub(vec[j], F.mul(c, row.vec[j]));
            for (std::size_t j = 0; j < comb.size(); ++j)
                comb[j] = F.sub(comb[j], F.mul(c, row.comb[j]));
        }
        std::size_t piv = D;
        for (std::size_t j = 0; j < D; ++j)
            if (!F.is_zero(vec[j])) { piv = j; break; }
        if (piv == D) {
            comb.resize(k + 1);
            upoly::trim(F, comb);
            return comb;
        }
        Value inv = F.inv(vec[piv]);
        for (std::size_t j = 0; j < D; ++j) vec[j] = F.mul(inv, vec[j]);
        for (std::size_t j = 0; j < comb.size(); ++j) comb[j] = F.mul(inv, comb[j]);
        rows.push_back({std::move(vec), std::move(comb), piv});
    }
    throw Error("minimal_polynomial: no dependency found");
}

}  // namespace

PointSetReport verify_point_set(const Ideal& I, const std::vector<std::vector<Value>>& points,
                                std::mt19937_64& rng, const GBConfig& cfg) {
    const Field& F = *I.ring.field;
    GroebnerBasis G = groebner_basis(I, TermOrder::grevlex(), cfg);
    std::vector<Exps> basis = standard_monomials(G);
    PointSetReport rep;
    rep.length = static_cast<long>(basis.size());

    for (const auto& pt : points) {
        if (pt.size() != I.ring.nvars()) throw Error("verify_point_set: point arity mismatch");
        for (const auto& g : I.gens) {
            Value v = g.evaluate(pt);
            if (!F.is_zero(v)) {
                rep.witness = "listed point is not a zero of generator " + g.str();
                return rep;
            }
        }
    }
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            bool eq = true;
            for (std::size_t k = 0; k < points[a].size(); ++k)
                if (!F.equal(points[a][k], points[b][k])) { eq = false; break; }
            if (eq) {
                rep.witness = "listed points are not pairwise distinct";
                return rep;
            }
        }

    long distinct = 0;
    if (!basis.empty()) {
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Term> terms;
            for (std::size_t v = 0; v < I.ring.nvars(); ++v) {
                Exps e(I.ring.nvars(), 0);
                e[v] = 1;
                terms.push_back({std::move(e), F.random(rng)});
            }
            Polynomial ell = Polynomial::from_terms(I.ring, std::move(terms));
            upoly::UPoly m = minimal_polynomial(ell, G, basis, cfg);
            distinct = std::max(distinct, static_cast<long>(upoly::squarefree_degree(F, m)));
            if (distinct == rep.length) break;  // cannot exceed the length
        }
    }
    rep.distinct = distinct;
    if (distinct != static_cast<long>(points.size())) {
        rep.witness = "separated point count " + std::to_string(distinct) + " != listed " +
                      std::to_string(points.size());
        return rep;
    }
    rep.ok = true;
    return rep;
}

CountReport count_points(const Ideal& I, std::mt19937_64& rng, const GBConfig& cfg) {
    const Field& F = *I.ring.field;
    GroebnerBasis G = groebner_basis(I, TermOrder::grevlex(), cfg);
    std::vector<Exps> basis = standard_monomials(G);
    CountReport rep;
    rep.length = static_cast<long>(basis.size());
    if (basis.empty()) return rep;
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Term> terms;
        for (std::size_t v = 0; v < I.ring.nvars(); ++v) {
            Exps e(I.ring.nvars(), 0);
            e[v] = 1;
            terms.push_back({std::move(e), F.random(rng)});
        }
        Polynomial ell = Polynomial::from_terms(I.ring, std::move(terms));
        upoly::UPoly m = minimal_polynomial(ell, G, basis, cfg);
        rep.distinct =
            std::max(rep.distinct, static_cast<long>(upoly::squarefree_degree(F, m)));
        if (rep.distinct == rep.length) break;
    }
    return rep;
}

namespace {

enum class GenKind { Var, VarShift, General };

struct CenterGen {
    GenKind kind;
    int var = -1;        // Var / VarShift
    Value shift;         // VarShift: generator vanishes at var == shift
    Polynomial general;  // General
};

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
    std::size_t cut = base.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(base[cut - 1]))) --cut;
    std::string stem = base.substr(0, cut);
    long n = cut < base.size() ? std::stol(base.substr(cut)) + 1 : 1;
    for (;; ++n) {
        std::string cand = stem + std::to_string(n);
        if (!taken.count(cand)) return cand;
    }
}

CenterGen classify(const Polynomial& g, const Ring& r) {
    const Field& F = *r.field;
    if (g.term_count() == 1 && g.degree() == 1) {
        for (std::size_t v = 0; v < r.nvars(); ++v)
            if (g.terms()[0].exp[v] == 1) return {GenKind::Var, static_cast<int>(v), F.zero(), {}};
    }
    if (g.term_count() == 2) {
        const Term* lin = nullptr;
        const Term* cst = nullptr;
        for (const auto& t : g.terms()) {
            if (total_degree(t.exp) == 1) lin = &t;
            if (total_degree(t.exp) == 0) cst = &t;
        }
        if (lin && cst) {
            for (std::size_t v = 0; v < r.nvars(); ++v)
                if (lin->exp[v] == 1) {
                    // c*v + k = 0  at  v = -k/c
                    Value shift = F.neg(F.div(cst->coeff, lin->coeff));
                    return {GenKind::VarShift, static_cast<int>(v), std::move(shift), {}};
                }
        }
    }
    return {GenKind::General, -1, F.zero(), g};
}

}  // namespace

std::vector<BlowupChart> blowup_charts(const Ideal& center) {
    const Ring& r = center.ring;
    if (center.gens.empty()) throw Error("blowup_charts: empty center");
    std::vector<CenterGen> gens;
    std::set<int> linear_vars;
    for (const auto& g : center.gens) {
        gens.push_back(classify(g, r));
        if (gens.back().kind != GenKind::General) linear_vars.insert(gens.back().var);
    }
    if (linear_vars.size() !=
        static_cast<std::size_t>(std::count_if(gens.begin(), gens.end(), [](const CenterGen& c) {
            return c.kind != GenKind::General;
        })))
        throw Error("blowup_charts: repeated center variable");
    for (const auto& cg : gens) {
        if (cg.kind != GenKind::General) continue;
        for (const auto& t : cg.general.terms())
            for (int lv : linear_vars)
                if (t.exp[lv] != 0)
                    throw Error("blowup_charts: nonlinear generator meets a center variable");
    }

    std::vector<BlowupChart> charts;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const CenterGen& cj = gens[j];
        std::set<std::string> taken(r.vars->names.begin(), r.vars->names.end());

        // Chart ring: rename every linear center variable except a Var
        // chart's own; nonlinear non-chart generators contribute a fresh w.
        std::vector<std::string> names = r.vars->names;
        std::vector<std::string> fresh_of(r.nvars());
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const CenterGen& ck = gens[k];
            if (ck.kind == GenKind::General) continue;
            if (k == j && ck.kind == GenKind::Var) continue;
            std::string f = fresh_name(r.vars->names[ck.var], taken);
            taken.insert(f);
            names[ck.var] = f;
            fresh_of[ck.var] = f;
        }
        std::vector<std::string> wnames;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (gens[k].kind != GenKind::General || k == j) {
                wnames.push_back("");
                continue;
            }
            std::string f = fresh_name("w", taken);
            taken.insert(f);
            names.push_back(f);
            wnames.push_back(f);
        }
        VariableSet vs;
        vs.names = names;
        vs.weights.assign(names.size(), 1);
        Ring nr = make_ring(r.field, std::move(vs));

        BlowupChart ch;
        ch.chart_index = static_cast<int>(j);
        ch.name = "e=" + center.gens[j].str();
        ch.ring = nr;

        Polynomial e;
        switch (cj.kind) {
            case GenKind::Var: e = Polynomial::variable(nr, r.vars->names[cj.var]); break;
            case GenKind::VarShift: e = Polynomial::variable(nr, fresh_of[cj.var]); break;
            case GenKind::General: e = cj.general.mapped_into(nr); break;
        }
        ch.exceptional = e;

        for (std::size_t k = 0; k < gens.size(); ++k) {
            const CenterGen& ck = gens[k];
            if (ck.kind == GenKind::General) {
                if (k != j) {
                    // q = w * e on this chart
                    ch.relations.push_back(ck.general.mapped_into(nr) -
                                           Polynomial::variable(nr, wnames[k]) * e);
                }
                continue;
            }
            const std::string& old = r.vars->names[ck.var];
            if (k == j) {
                if (ck.kind == GenKind::VarShift)
                    ch.substitution.emplace(
                        old, Polynomial::constant(nr, ck.shift) + e);
                // Var chart: the chart variable keeps its name and meaning.
            } else {
                Polynomial img = Polynomial::variable(nr, fresh_of[ck.var]) * e;
                if (ck.kind == GenKind::VarShift)
                    img = Polynomial::constant(nr, ck.shift) + img;
                ch.substitution.emplace(old, std::move(img));
            }
        }
        charts.push_back(std::move(ch));
    }
    return charts;
}

std::vector<Polynomial> total_transform(const std::vector<Polynomial>& F,
                                        const BlowupChart& chart) {
    std::vector<Polynomial> out;
    for (const auto& f : F) out.push_back(f.substitute(chart.substitution, chart.ring));
    for (const auto& rel : chart.relations) out.push_back(rel);
    return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw Error("divide_exact: zero divisor");
    if (!p.ring().same(d.ring())) throw Error("divide_exact: ring mismatch");
    const Ring& r = p.ring();
    const Field& F = *r.field;
    const Term& lead = d.terms().front();
    Polynomial rem = p;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Term& lt = rem.terms().front();
        if (!exp_divides(lead.exp, lt.exp)) return std::nullopt;
        Term q{exp_sub(lt.exp, lead.exp), F.div(lt.coeff, lead.coeff)};
        rem = rem - Polynomial::monomial(r, q.exp, q.coeff) * d;
        quot.push_back(std::move(q));
    }
    return Polynomial::from_terms(r, std::move(quot));
}

Ideal strict_transform(const std::vector<Polynomial>& total, const Polynomial& exceptional,
                       const GBConfig& cfg) {
    if (exceptional.is_zero()) throw Error("strict_transform: zero exceptional");
    const Ring& r = exceptional.ring();
    std::vector<Polynomial> gens;
    for (auto f : total) {
        if (!exceptional.is_constant()) {
            while (!f.is_zero()) {
                auto q = divide_exact(f, exceptional);
                if (!q) break;
                f = *q;
            }
        }
        gens.push_back(f.normalized());
    }
    return saturate(Ideal::of(r, std::move(gens)), exceptional, cfg);
}

SmoothnessCertificate smoothness_certificate(const std::vector<Polynomial>& F,
                                             const std::optional<Polynomial>& excluded,
                                             const GBConfig& cfg) {
    SmoothnessCertificate cert;
    try {
        Ideal J = singular_locus_ideal(F);
        if (excluded) J = saturate(J, *excluded, cfg);
        GroebnerBasis G = groebner_basis(J, TermOrder::grevlex(), cfg);
        cert.verdict = G.is_unit() ? SmoothnessCertificate::Verdict::Smooth
                                   : SmoothnessCertificate::Verdict::Singular;
        cert.singular_ideal = Ideal::of(J.ring, G.elements());
    } catch (const ResourceLimitError&) {
        cert.verdict = SmoothnessCertificate::Verdict::ResourceLimited;
    }
    return cert;
}

namespace {

Polynomial linear_part(const Polynomial& p) {
    std::vector<Term> keep;
    for (const auto& t : p.terms())
        if (total_degree(t.exp) == 1) keep.push_back(t);
    return Polynomial::from_terms(p.ring(), std::move(keep));
}

Value constant_term(const Polynomial& p, const Field& F) {
    for (const auto& t : p.terms())
        if (total_degree(t.exp) == 0) return t.coeff;
    return F.zero();
}

}  // namespace

HessianReport hessian_rank_at_point(const std::vector<Polynomial>& F,
                                    const std::vector<Value>& point) {
    if (F.empty()) throw Error("hessian_rank_at_point: no equations");
    const Ring& r = F[0].ring();
    const Field& K = *r.field;
    if (point.size() != r.nvars()) throw Error("hessian_rank_at_point: point arity mismatch");

    std::map<std::string, Polynomial> translate;
    for (std::size_t v = 0; v < r.nvars(); ++v)
        translate.emplace(r.vars->names[v],
                          Polynomial::variable(r, static_cast<int>(v)) +
                              Polynomial::constant(r, point[v]));
    std::vector<Polynomial> eqs;
    for (const auto& f : F) {
        Polynomial g = f.substitute(translate);
        if (!K.is_zero(constant_term(g, K)))
            throw Error("hessian_rank_at_point: point is not on the scheme");
        eqs.push_back(std::move(g));
    }

    std::size_t eliminated = 0;
    for (;;) {
        // Find an equation with a nonvanishing linear part and solve it for
        // one of its linear variables to quadratic order.
        std::size_t which = eqs.size();
        int var = -1;
        Value c = K.zero();
        for (std::size_t i = 0; i < eqs.size() && var < 0; ++i) {
            Polynomial lin = linear_part(eqs[i]);
            for (const auto& t : lin.terms()) {
                for (std::size_t v = 0; v < r.nvars(); ++v)
                    if (t.exp[v] == 1) {
                        which = i;
                        var = static_cast<int>(v);
                        c = t.coeff;
                        break;
                    }
                if (var >= 0) break;
            }
        }
        if (var < 0) break;

        Polynomial vpoly = Polynomial::variable(r, var);
        Polynomial g = eqs[which] - vpoly.scaled(c);  // E = c*v + g, solve v = -g/c
        Value minv = K.neg(K.inv(c));
        Polynomial v_expr = Polynomial::zero(r);
        for (int it = 0; it < 2; ++it) {
            std::map<std::string, Polynomial> sub{{r.vars->names[var], v_expr}};
            v_expr = g.substitute(sub).truncated(2).scaled(minv);
        }
        std::map<std::string, Polynomial> sub{{r.vars->names[var], v_expr}};
        std::vector<Polynomial> next;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (i == which) continue;
            next.push_back(eqs[i].substitute(sub).truncated(2));
        }
        eqs = std::move(next);
        ++eliminated;
        if (eqs.empty()) throw Error("hessian_rank_at_point: all equations eliminated");
    }

    if (eqs.size() != 1)
        throw Error("hessian_rank_at_point: reduction left " + std::to_string(eqs.size()) +
                    " equations");
    const Polynomial& E = eqs[0];
    if (!linear_part(E).is_zero() || !K.is_zero(constant_term(E, K)))
        throw Error("hessian_rank_at_point: point is not a singular point");

    std::size_t n = r.nvars();
    std::vector<std::vector<Value>> A(n, std::vector<Value>(n, K.zero()));
    Value half = K.inv(K.from_int(2));
    for (const auto& t : E.terms()) {
        if (total_degree(t.exp) != 2) continue;
        int a = -1, b = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (t.exp[v] == 2) { a = b = static_cast<int>(v); }
            if (t.exp[v] == 1) { (a < 0 ? a : b) = static_cast<int>(v); }
        }
        if (a == b) {
            A[a][a] = t.coeff;
        } else {
            Value h = K.mul(half, t.coeff);
            A[a][b] = h;
            A[b][a] = h;
        }
    }
    HessianReport rep;
    rep.rank = matrix_rank(std::move(A), K);
    rep.local_vars = n - eliminated;
    return rep;
}

bool verify_substitution_identity(const Polynomial& lhs,
                                  const std::map<std::string, Polynomial>& assignment,
                                  const Polynomial& multiplier, const Polynomial& rhs) {
    return lhs.substitute(assignment, rhs.ring()) == multiplier * rhs;
}

long matrix_rank(std::vector<std::vector<Value>> m, const Field& F) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = row; i < rows; ++i)
            if (!F.is_zero(m[i][col])) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);
        Value inv = F.inv(m[row][col]);
        for (std::size_t j = col; j < cols; ++j) m[row][j] = F.mul(inv, m[row][j]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || F.is_zero(m[i][col])) continue;
            Value c = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(c, m[row][j]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace qdf
