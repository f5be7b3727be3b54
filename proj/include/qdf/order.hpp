#pragma once

#include <vector>

#include "qdf/poly.hpp"

namespace qdf {

// Monomial order: lex, grevlex, or a block elimination order whose first
// block is compared (grevlex) before the rest (grevlex). 1 is minimal in
// all three and each is compatible with multiplication.
struct TermOrder {
    enum class Kind { Lex, Grevlex, Block };
    Kind kind = Kind::Grevlex;
    std::vector<char> block;  // for Block: 1 = variable in the leading block

    static TermOrder lex() { return {Kind::Lex, {}}; }
    static TermOrder grevlex() { return {Kind::Grevlex, {}}; }
    static TermOrder block_elim(std::vector<char> leading_block) {
        return {Kind::Block, std::move(leading_block)};
    }

    // <0, 0, >0 as a is smaller, equal, greater than b.
    int cmp(const Exps& a, const Exps& b) const;
    const char* name() const;
};

}  // namespace qdf
