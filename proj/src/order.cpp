#include "qdf/order.hpp"

namespace qdf {

namespace {

int cmp_lex(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int cmp_grevlex_masked(const Exps& a, const Exps& b, const std::vector<char>& mask, char bit) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (mask[i] == bit) {
            da += a[i];
            db += b[i];
        }
    if (da != db) return da < db ? -1 : 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (mask[i] == bit && a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

}  // namespace

int TermOrder::cmp(const Exps& a, const Exps& b) const {
    switch (kind) {
        case Kind::Lex: return cmp_lex(a, b);
        case Kind::Grevlex: return cmp_grevlex(a, b);
        case Kind::Block: {
            if (block.size() != a.size()) throw Error("block order mask length mismatch");
            int c = cmp_grevlex_masked(a, b, block, 1);
            if (c != 0) return c;
            return cmp_grevlex_masked(a, b, block, 0);
        }
    }
    throw Error("bad term order kind");
}

const char* TermOrder::name() const {
    switch (kind) {
        case Kind::Lex: return "lex";
        case Kind::Grevlex: return "grevlex";
        case Kind::Block: return "block";
    }
    return "?";
}

}  // namespace qdf
