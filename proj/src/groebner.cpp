#include "qdf/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace qdf {
namespace {

// Internal representation: terms sorted descending under the basis order.
struct OPoly {
    std::vector<Term> terms;  // order-descending
    bool zero() const { return terms.empty(); }
    const Exps& lexp() const { return terms.front().exp; }
    const Value& lc() const { return terms.front().coeff; }
};

struct Ctx {
    Ring ring;
    TermOrder ord;
    GBConfig cfg;
    std::size_t step_budget;

    void charge(std::size_t n) {
        if (n > step_budget) throw ResourceLimitError("reduction step budget exhausted");
        step_budget -= n;
    }
};

OPoly to_opoly(const Polynomial& p, const TermOrder& ord) {
    OPoly r;
    r.terms = p.terms();
    std::sort(r.terms.begin(), r.terms.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.exp, b.exp) > 0; });
    return r;
}

Polynomial from_opoly(const Ring& ring, const OPoly& p) {
    return Polynomial::from_terms(ring, p.terms);
}

OPoly op_sub_scaled(Ctx& cx, const OPoly& a, const Value& c, const Exps& shift, const OPoly& b) {
    // a - c * x^shift * b, merged under the order.
    const Field& F = *cx.ring.field;
    cx.charge(a.terms.size() + b.terms.size());
    OPoly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j >= b.terms.size()) {
            r.terms.push_back(a.terms[i++]);
            continue;
        }
        Exps be = exp_add(b.terms[j].exp, shift);
        if (i >= a.terms.size()) {
            Value v = F.neg(F.mul(c, b.terms[j].coeff));
            if (!F.is_zero(v)) r.terms.push_back({std::move(be), std::move(v)});
            ++j;
            continue;
        }
        int cmp = cx.ord.cmp(a.terms[i].exp, be);
        if (cmp > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (cmp < 0) {
            Value v = F.neg(F.mul(c, b.terms[j].coeff));
            if (!F.is_zero(v)) r.terms.push_back({std::move(be), std::move(v)});
            ++j;
        } else {
            Value v = F.sub(a.terms[i].coeff, F.mul(c, b.terms[j].coeff));
            if (!F.is_zero(v)) r.terms.push_back({std::move(be), std::move(v)});
            ++i;
            ++j;
        }
    }
    return r;
}

void make_monic(const Field& F, OPoly& p) {
    if (p.zero() || F.is_one(p.lc())) return;
    Value inv = F.inv(p.lc());
    for (auto& t : p.terms) t.coeff = F.mul(inv, t.coeff);
}

// Full reduction of p modulo basis; every surviving term is reduced.
OPoly reduce_full(Ctx& cx, OPoly p, const std::vector<OPoly>& basis) {
    const Field& F = *cx.ring.field;
    OPoly tail;
    while (!p.zero()) {
        bool hit = false;
        for (const auto& g : basis) {
            if (g.zero()) continue;
            if (exp_divides(g.lexp(), p.lexp())) {
                Exps shift = exp_sub(p.lexp(), g.lexp());
                Value c = F.div(p.lc(), g.lc());
                p = op_sub_scaled(cx, p, c, shift, g);
                hit = true;
                break;
            }
        }
        if (!hit) {
            tail.terms.push_back(p.terms.front());
            p.terms.erase(p.terms.begin());
            cx.charge(1);
        }
    }
    return tail;
}

OPoly spoly(Ctx& cx, const OPoly& f, const OPoly& g) {
    const Field& F = *cx.ring.field;
    Exps L = exp_lcm(f.lexp(), g.lexp());
    Exps sf = exp_sub(L, f.lexp());
    Exps sg = exp_sub(L, g.lexp());
    // (x^sf/lc(f)) f - (x^sg/lc(g)) g
    OPoly a;
    a.terms.reserve(f.terms.size());
    Value cf = F.inv(f.lc());
    for (const auto& t : f.terms) a.terms.push_back({exp_add(t.exp, sf), F.mul(cf, t.coeff)});
    return op_sub_scaled(cx, a, F.inv(g.lc()), sg, g);
}

struct Pair {
    std::size_t i, j;
    Exps lcm;
    long deg;
};

}  // namespace

GroebnerBasis::GroebnerBasis(Ring ring, TermOrder ord, std::vector<Polynomial> reduced_elements)
    : ring_(std::move(ring)), ord_(std::move(ord)), elems_(std::move(reduced_elements)) {
    for (const auto& e : elems_) {
        const Term* lead = nullptr;
        for (const auto& t : e.terms())
            if (!lead || ord_.cmp(t.exp, lead->exp) > 0) lead = &t;
        if (!lead) throw Error("zero element in basis");
        lead_exps_.push_back(lead->exp);
        lead_coeffs_.push_back(lead->coeff);
    }
}

bool GroebnerBasis::is_unit() const {
    return elems_.size() == 1 && elems_[0].is_constant() && !elems_[0].is_zero();
}

GroebnerBasis groebner_basis(const Ideal& I, const TermOrder& ord, const GBConfig& cfg) {
    Ctx cx{I.ring, ord, cfg, cfg.max_reduction_steps};
    const Field& F = *I.ring.field;

    std::vector<OPoly> basis;
    for (const auto& g : I.gens) {
        OPoly og = to_opoly(g.normalized(), ord);
        if (!og.zero()) {
            make_monic(F, og);
            basis.push_back(std::move(og));
        }
    }

    std::vector<Pair> pairs;
    auto add_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (basis[i].zero()) continue;
            Exps L = exp_lcm(basis[i].lexp(), basis[k].lexp());
            pairs.push_back({i, k, L, total_degree(L)});
        }
    };
    for (std::size_t k = 1; k < basis.size(); ++k) add_pairs_for(k);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > cfg.max_pairs) throw ResourceLimitError("pair budget exhausted");
        // Normal selection: minimal lcm under the order.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            if (ord.cmp(pairs[k].lcm, pairs[best].lcm) < 0) best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);
        if (basis[pr.i].zero() || basis[pr.j].zero()) continue;

        // Product criterion: coprime leading terms.
        const Exps& ei = basis[pr.i].lexp();
        const Exps& ej = basis[pr.j].lexp();
        bool coprime = true;
        for (std::size_t v = 0; v < ei.size(); ++v)
            if (ei[v] > 0 && ej[v] > 0) { coprime = false; break; }
        if (coprime) continue;

        // Chain criterion: some other basis element divides the lcm and both
        // companion pairs are no longer pending.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == pr.i || k == pr.j || basis[k].zero()) continue;
            if (!exp_divides(basis[k].lexp(), pr.lcm)) continue;
            bool pending = false;
            for (const auto& q : pairs) {
                if ((q.i == std::min(pr.i, k) && q.j == std::max(pr.i, k)) ||
                    (q.i == std::min(pr.j, k) && q.j == std::max(pr.j, k))) {
                    pending = true;
                    break;
                }
            }
            if (!pending) { skip = true; break; }
        }
        if (skip) continue;

        OPoly s = spoly(cx, basis[pr.i], basis[pr.j]);
        OPoly r = reduce_full(cx, std::move(s), basis);
        if (r.zero()) continue;
        make_monic(F, r);
        // A unit short-circuits everything: the basis is {1}.
        if (total_degree(r.lexp()) == 0)
            return GroebnerBasis(I.ring, ord, {Polynomial::from_int(I.ring, 1)});
        basis.push_back(std::move(r));
        add_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].zero()) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || basis[j].zero()) continue;
            if (exp_divides(basis[j].lexp(), basis[i].lexp())) {
                basis[i].terms.clear();
                break;
            }
        }
    }
    std::vector<OPoly> minimal;
    for (auto& b : basis)
        if (!b.zero()) minimal.push_back(std::move(b));

    // Auto-reduce tails.
    std::vector<OPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        OPoly r = reduce_full(cx, minimal[i], others);
        make_monic(F, r);
        if (!r.zero()) reduced.push_back(std::move(r));
    }

    std::sort(reduced.begin(), reduced.end(),
              [&](const OPoly& a, const OPoly& b) { return ord.cmp(a.lexp(), b.lexp()) < 0; });

    std::vector<Polynomial> out;
    out.reserve(reduced.size());
    for (const auto& r : reduced) out.push_back(from_opoly(I.ring, r));
    return GroebnerBasis(I.ring, ord, std::move(out));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, const GBConfig& cfg) {
    if (!f.ring().same(G.ring())) throw Error("normal_form: ring mismatch");
    Ctx cx{G.ring(), G.order(), cfg, cfg.max_reduction_steps};
    std::vector<OPoly> basis;
    basis.reserve(G.elements().size());
    for (const auto& e : G.elements()) basis.push_back(to_opoly(e, G.order()));
    OPoly r = reduce_full(cx, to_opoly(f, G.order()), basis);
    return from_opoly(G.ring(), r);
}

bool buchberger_certificate(const GroebnerBasis& G, const GBConfig& cfg) {
    Ctx cx{G.ring(), G.order(), cfg, cfg.max_reduction_steps};
    std::vector<OPoly> basis;
    for (const auto& e : G.elements()) basis.push_back(to_opoly(e, G.order()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            OPoly s = spoly(cx, basis[i], basis[j]);
            OPoly r = reduce_full(cx, std::move(s), basis);
            if (!r.zero()) return false;
        }
    }
    return true;
}

}  // namespace qdf
