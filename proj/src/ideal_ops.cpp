#include "qdf/ideal_ops.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qdf {

Ring extend_ring(const Ring& r, const std::vector<std::string>& fresh) {
    VariableSet vs = *r.vars;
    for (const auto& name : fresh) {
        if (vs.index_of(name) >= 0) throw Error("extend_ring: variable already present: " + name);
        vs.names.push_back(name);
        vs.weights.push_back(1);
        if (!vs.bigrade.empty()) vs.bigrade.push_back({0, 0});
    }
    return make_ring(r.field, std::move(vs));
}

Ring project_ring(const Ring& r, const std::vector<std::string>& dropped) {
    VariableSet vs;
    for (std::size_t i = 0; i < r.nvars(); ++i) {
        const std::string& n = r.vars->names[i];
        if (std::find(dropped.begin(), dropped.end(), n) != dropped.end()) continue;
        vs.names.push_back(n);
        vs.weights.push_back(r.vars->weights[i]);
        if (!r.vars->bigrade.empty()) vs.bigrade.push_back(r.vars->bigrade[i]);
    }
    if (vs.names.size() + dropped.size() != r.nvars())
        throw Error("project_ring: unknown variable in drop list");
    return make_ring(r.field, std::move(vs));
}

Polynomial project_poly(const Polynomial& p, const Ring& target) {
    const Ring& src = p.ring();
    std::vector<int> where(src.nvars(), -1);
    for (std::size_t i = 0; i < src.nvars(); ++i)
        where[i] = target.vars->index_of(src.vars->names[i]);
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        Exps e(target.nvars(), 0);
        for (std::size_t i = 0; i < src.nvars(); ++i) {
            if (t.exp[i] == 0) continue;
            if (where[i] < 0) throw Error("project_poly: dropped variable occurs");
            e[where[i]] = t.exp[i];
        }
        out.push_back({std::move(e), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(out));
}

bool ideal_membership(const Polynomial& f, const Ideal& I, const GBConfig& cfg) {
    GroebnerBasis G = groebner_basis(I, TermOrder::grevlex(), cfg);
    return normal_form(f, G, cfg).is_zero();
}

namespace {

std::string fresh_name(const Ring& r, const std::string& stem) {
    if (r.vars->index_of(stem) < 0) return stem;
    for (int k = 0;; ++k) {
        std::string cand = stem + "_" + std::to_string(k);
        if (r.vars->index_of(cand) < 0) return cand;
    }
}

}  // namespace

bool radical_membership(const Polynomial& f, const Ideal& I, const GBConfig& cfg) {
    if (f.is_zero()) return true;
    std::string y = fresh_name(I.ring, "rab");
    Ring ext = extend_ring(I.ring, {y});
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens) gens.push_back(g.mapped_into(ext));
    gens.push_back(Polynomial::from_int(ext, 1) -
                   Polynomial::variable(ext, y) * f.mapped_into(ext));
    GroebnerBasis G = groebner_basis(Ideal::of(ext, std::move(gens)), TermOrder::grevlex(), cfg);
    return G.is_unit();
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars, const GBConfig& cfg) {
    std::vector<char> block(I.ring.nvars(), 0);
    for (const auto& v : vars) {
        int idx = I.ring.vars->index_of(v);
        if (idx < 0) throw Error("eliminate: unknown variable " + v);
        block[idx] = 1;
    }
    GroebnerBasis G = groebner_basis(I, TermOrder::block_elim(block), cfg);
    Ring target = project_ring(I.ring, vars);
    std::vector<Polynomial> kept;
    for (const auto& g : G.elements()) {
        bool pure = true;
        for (const auto& t : g.terms()) {
            for (std::size_t v = 0; v < block.size(); ++v)
                if (block[v] && t.exp[v] != 0) { pure = false; break; }
            if (!pure) break;
        }
        if (pure) kept.push_back(project_poly(g, target));
    }
    return Ideal::of(target, std::move(kept));
}

Ideal saturate(const Ideal& I, const Polynomial& f, const GBConfig& cfg) {
    if (f.is_zero()) throw Error("saturate: zero divisor");
    std::string t = fresh_name(I.ring, "sat");
    Ring ext = extend_ring(I.ring, {t});
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens) gens.push_back(g.mapped_into(ext));
    gens.push_back(Polynomial::from_int(ext, 1) -
                   Polynomial::variable(ext, t) * f.mapped_into(ext));
    Ideal E = eliminate(Ideal::of(ext, std::move(gens)), {t}, cfg);
    // Projected ring has the same variables in the same positions; move back.
    std::vector<Polynomial> back;
    for (const auto& g : E.gens) back.push_back(g.mapped_into(I.ring));
    return Ideal::of(I.ring, std::move(back));
}

Ideal intersect(const Ideal& I, const Ideal& J, const GBConfig& cfg) {
    if (!I.ring.same(J.ring)) throw Error("intersect: ring mismatch");
    std::string t = fresh_name(I.ring, "mix");
    Ring ext = extend_ring(I.ring, {t});
    Polynomial tv = Polynomial::variable(ext, t);
    Polynomial one_minus_t = Polynomial::from_int(ext, 1) - tv;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens) gens.push_back(tv * g.mapped_into(ext));
    for (const auto& g : J.gens) gens.push_back(one_minus_t * g.mapped_into(ext));
    Ideal E = eliminate(Ideal::of(ext, std::move(gens)), {t}, cfg);
    std::vector<Polynomial> back;
    for (const auto& g : E.gens) back.push_back(g.mapped_into(I.ring));
    return Ideal::of(I.ring, std::move(back));
}

bool same_radical(const Ideal& I, const Ideal& J, const GBConfig& cfg) {
    for (const auto& g : J.gens)
        if (!radical_membership(g, I, cfg)) return false;
    for (const auto& g : I.gens)
        if (!radical_membership(g, J, cfg)) return false;
    return true;
}

int krull_dimension(const GroebnerBasis& G) {
    if (G.is_unit()) return -1;
    std::size_t n = G.ring().nvars();
    std::vector<Exps> leads;
    for (std::size_t i = 0; i < G.elements().size(); ++i) leads.push_back(G.leading_exp(i));

    // Largest subset S of variables with no leading monomial supported
    // inside S; for a monomial ideal that is exactly dim R/I.
    int best = 0;
    std::function<void(std::size_t, std::vector<char>&, int)> rec =
        [&](std::size_t v, std::vector<char>& in, int count) {
            if (count + static_cast<int>(n - v) <= best) return;
            if (v == n) {
                best = std::max(best, count);
                return;
            }
            in[v] = 1;
            bool ok = true;
            for (const auto& L : leads) {
                bool inside = true;
                for (std::size_t k = 0; k < n; ++k)
                    if (L[k] > 0 && !(k <= v && in[k])) { inside = false; break; }
                if (inside) { ok = false; break; }
            }
            if (ok) rec(v + 1, in, count + 1);
            in[v] = 0;
            rec(v + 1, in, count);
        };
    std::vector<char> in(n, 0);
    rec(0, in, 0);
    return best;
}

int krull_dimension(const Ideal& I, const GBConfig& cfg) {
    return krull_dimension(groebner_basis(I, TermOrder::grevlex(), cfg));
}

long quotient_dimension(const GroebnerBasis& G) {
    if (G.is_unit()) return 0;
    std::size_t n = G.ring().nvars();
    std::vector<Exps> leads;
    for (std::size_t i = 0; i < G.elements().size(); ++i) leads.push_back(G.leading_exp(i));

    // Zero-dimensional iff every variable has a pure-power leading monomial.
    std::vector<long> cap(n, -1);
    for (const auto& L : leads) {
        int support = -1;
        bool pure = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (L[k] > 0) {
                if (support >= 0) { pure = false; break; }
                support = static_cast<int>(k);
            }
        }
        if (pure && support >= 0 && (cap[support] < 0 || L[support] < cap[support]))
            cap[support] = L[support];
        if (pure && support < 0) return 0;  // constant lead: unit ideal
    }
    for (std::size_t k = 0; k < n; ++k)
        if (cap[k] < 0) throw Error("quotient_dimension: ideal is not zero-dimensional");

    // Count standard monomials below the pure-power box.
    long count = 0;
    Exps e(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == n) {
            for (const auto& L : leads)
                if (exp_divides(L, e)) return;
            ++count;
            return;
        }
        for (e[v] = 0; e[v] < cap[v]; ++e[v]) rec(v + 1);
        e[v] = 0;
    };
    rec(0);
    return count;
}

long quotient_dimension(const Ideal& I, const GBConfig& cfg) {
    return quotient_dimension(groebner_basis(I, TermOrder::grevlex(), cfg));
}

}  // namespace qdf
