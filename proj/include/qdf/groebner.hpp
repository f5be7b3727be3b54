#pragma once

#include <cstddef>
#include <vector>

#include "qdf/order.hpp"
#include "qdf/poly.hpp"

namespace qdf {

struct Ideal {
    Ring ring;
    std::vector<Polynomial> gens;

    static Ideal of(const Ring& r, std::vector<Polynomial> gens) {
        for (const auto& g : gens)
            if (!g.ring().same(r)) throw Error("ideal generator in wrong ring");
        std::vector<Polynomial> kept;
        for (auto& g : gens)
            if (!g.is_zero()) kept.push_back(std::move(g));
        return Ideal{r, std::move(kept)};
    }
};

// Hard budgets for basis computations. Exhaustion raises ResourceLimitError;
// it is never converted into an answer.
struct GBConfig {
    std::size_t max_pairs = 200000;
    std::size_t max_reduction_steps = 200000000;
};

// Reduced Groebner basis: monic, auto-reduced, elements sorted by leading
// term ascending, unique for (ideal, order).
class GroebnerBasis {
public:
    GroebnerBasis(Ring ring, TermOrder ord, std::vector<Polynomial> reduced_elements);

    const Ring& ring() const { return ring_; }
    const TermOrder& order() const { return ord_; }
    const std::vector<Polynomial>& elements() const { return elems_; }
    bool is_unit() const;  // basis == {1}
    bool is_zero_ideal() const { return elems_.empty(); }

    // Leading exponent of element i under the basis order.
    const Exps& leading_exp(std::size_t i) const { return lead_exps_[i]; }
    const Value& leading_coeff(std::size_t i) const { return lead_coeffs_[i]; }

private:
    Ring ring_;
    TermOrder ord_;
    std::vector<Polynomial> elems_;
    std::vector<Exps> lead_exps_;
    std::vector<Value> lead_coeffs_;
};

GroebnerBasis groebner_basis(const Ideal& I, const TermOrder& ord = TermOrder::grevlex(),
                             const GBConfig& cfg = {});

// Fully reduced remainder; no term of the result is divisible by any
// leading term of G, and f - normal_form(f, G) lies in <G>.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G,
                       const GBConfig& cfg = {});

// Post-hoc Buchberger certificate: every S-polynomial of the basis reduces
// to zero.
bool buchberger_certificate(const GroebnerBasis& G, const GBConfig& cfg = {});

}  // namespace qdf
