#include "qdf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <numeric>
#include <sstream>

namespace qdf {

long total_degree(const Exps& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

bool exp_divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps exp_add(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exps exp_sub(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exps exp_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

int cmp_grevlex(const Exps& a, const Exps& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

namespace {
struct GrevlexDesc {
    bool operator()(const Exps& a, const Exps& b) const { return cmp_grevlex(a, b) > 0; }
};
}  // namespace

Polynomial Polynomial::zero(const Ring& r) {
    Polynomial p;
    p.ring_ = r;
    return p;
}

Polynomial Polynomial::constant(const Ring& r, Value c) {
    return monomial(r, Exps(r.nvars(), 0), std::move(c));
}

Polynomial Polynomial::from_int(const Ring& r, long n) {
    return constant(r, r.field->from_int(n));
}

Polynomial Polynomial::variable(const Ring& r, int index) {
    if (index < 0 || index >= static_cast<int>(r.nvars()))
        throw Error("variable index out of range");
    Exps e(r.nvars(), 0);
    e[index] = 1;
    return monomial(r, std::move(e), r.field->one());
}

Polynomial Polynomial::variable(const Ring& r, const std::string& name) {
    int i = r.vars->index_of(name);
    if (i < 0) throw Error("unknown variable name: " + name);
    return variable(r, i);
}

Polynomial Polynomial::monomial(const Ring& r, Exps e, Value c) {
    Polynomial p;
    p.ring_ = r;
    if (e.size() != r.nvars()) throw Error("exponent vector length mismatch");
    if (!r.field->is_zero(c)) p.terms_.push_back({std::move(e), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(const Ring& r, std::vector<Term> terms) {
    std::map<Exps, Value, GrevlexDesc> acc;
    for (auto& t : terms) {
        if (t.exp.size() != r.nvars()) throw Error("exponent vector length mismatch");
        auto it = acc.find(t.exp);
        if (it == acc.end())
            acc.emplace(std::move(t.exp), std::move(t.coeff));
        else
            it->second = r.field->add(it->second, t.coeff);
    }
    Polynomial p;
    p.ring_ = r;
    for (auto& [e, c] : acc)
        if (!r.field->is_zero(c)) p.terms_.push_back({e, c});
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && total_degree(terms_[0].exp) == 0 &&
           ring_.field->is_one(terms_[0].coeff);
}

long Polynomial::degree() const {
    long d = -1;
    for (const Term& t : terms_) d = std::max(d, total_degree(t.exp));
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!ring_.same(o.ring_)) throw Error("ring mismatch in addition");
    Polynomial r;
    r.ring_ = ring_;
    const Field& F = *ring_.field;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = cmp_grevlex(terms_[i].exp, o.terms_[j].exp);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            Value s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!F.is_zero(s)) r.terms_.push_back({terms_[i].exp, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    r.ring_ = ring_;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.exp, ring_.field->neg(t.coeff)});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!ring_.same(o.ring_)) throw Error("ring mismatch in multiplication");
    const Field& F = *ring_.field;
    std::map<Exps, Value, GrevlexDesc> acc;
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) {
            Exps e = exp_add(a.exp, b.exp);
            Value p = F.mul(a.coeff, b.coeff);
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), std::move(p));
            else
                it->second = F.add(it->second, p);
        }
    Polynomial r;
    r.ring_ = ring_;
    for (auto& [e, c] : acc)
        if (!F.is_zero(c)) r.terms_.push_back({e, c});
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_.same(o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exp != o.terms_[i].exp) return false;
        if (!ring_.field->equal(terms_[i].coeff, o.terms_[i].coeff)) return false;
    }
    return true;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial base = *this;
    Polynomial r = from_int(ring_, 1);
    while (n) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return r;
}

Polynomial Polynomial::scaled(const Value& c) const {
    const Field& F = *ring_.field;
    if (F.is_zero(c)) return zero(ring_);
    Polynomial r;
    r.ring_ = ring_;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.exp, F.mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= static_cast<int>(ring_.nvars()))
        throw Error("derivative variable out of range");
    const Field& F = *ring_.field;
    Polynomial r;
    r.ring_ = ring_;
    for (const Term& t : terms_) {
        if (t.exp[var] == 0) continue;
        Value c = F.mul(t.coeff, F.from_int(t.exp[var]));
        if (F.is_zero(c)) continue;  // can happen in positive characteristic
        Exps e = t.exp;
        e[var] -= 1;
        r.terms_.push_back({std::move(e), std::move(c)});
    }
    return r;
}

Polynomial Polynomial::derivative(const std::string& var) const {
    return derivative(ring_.vars->index_of(var));
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images,
                                  const Ring& target) const {
    const std::size_t n = ring_.nvars();
    for (const auto& [name, img] : images) {
        if (ring_.vars->index_of(name) < 0) throw Error("substituted variable not in ring: " + name);
        if (!img.ring().same(target)) throw Error("substitution image in incompatible ring");
    }
    // Per-variable image; identity variables must exist in the target.
    std::vector<Polynomial> image(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = images.find(ring_.vars->names[i]);
        if (it != images.end())
            image[i] = it->second;
        else
            image[i] = variable(target, ring_.vars->names[i]);
    }
    std::vector<std::vector<Polynomial>> powers(n);  // powers[i][k] = image[i]^k
    auto power = [&](std::size_t i, int k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(from_int(target, 1));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * image[i]);
        return cache[k];
    };
    Polynomial result = zero(target);
    for (const Term& t : terms_) {
        Polynomial m = constant(target, target.field->convert(*ring_.field, t.coeff));
        for (std::size_t i = 0; i < n; ++i)
            if (t.exp[i] > 0) m = m * power(i, t.exp[i]);
        result = result + m;
    }
    return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images) const {
    return substitute(images, ring_);
}

Value Polynomial::evaluate(const std::vector<Value>& point) const {
    return evaluate(point, ring_.field);
}

Value Polynomial::evaluate(const std::vector<Value>& point, const FieldPtr& pf) const {
    if (point.size() != ring_.nvars()) throw Error("evaluation point length mismatch");
    const Field& F = *pf;
    Value acc = F.zero();
    for (const Term& t : terms_) {
        Value m = F.convert(*ring_.field, t.coeff);
        for (std::size_t i = 0; i < point.size(); ++i)
            for (int k = 0; k < t.exp[i]; ++k) m = F.mul(m, point[i]);
        acc = F.add(acc, m);
    }
    return acc;
}

std::optional<long> Polynomial::weighted_degree() const {
    if (terms_.empty()) return zero_degree_sentinel;
    const auto& w = ring_.vars->weights;
    std::optional<long> d;
    for (const Term& t : terms_) {
        long td = 0;
        for (std::size_t i = 0; i < w.size(); ++i) td += static_cast<long>(w[i]) * t.exp[i];
        if (!d)
            d = td;
        else if (*d != td)
            return std::nullopt;
    }
    return d;
}

std::optional<std::pair<long, long>> Polynomial::bidegree() const {
    const auto& g = ring_.vars->bigrade;
    if (g.empty()) throw Error("ring has no bigrading");
    if (terms_.empty()) return std::make_pair(zero_degree_sentinel, zero_degree_sentinel);
    std::optional<std::pair<long, long>> d;
    for (const Term& t : terms_) {
        long a = 0, b = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            a += static_cast<long>(g[i].first) * t.exp[i];
            b += static_cast<long>(g[i].second) * t.exp[i];
        }
        if (!d)
            d = std::make_pair(a, b);
        else if (*d != std::make_pair(a, b))
            return std::nullopt;
    }
    return d;
}

Polynomial Polynomial::truncated(long d) const {
    Polynomial r;
    r.ring_ = ring_;
    for (const Term& t : terms_)
        if (total_degree(t.exp) <= d) r.terms_.push_back(t);
    return r;
}

Polynomial Polynomial::mapped_into(const Ring& target) const {
    // Only variables that actually occur need a counterpart in the target.
    std::vector<int> where(ring_.nvars());
    for (std::size_t i = 0; i < ring_.nvars(); ++i)
        where[i] = target.vars->index_of(ring_.vars->names[i]);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Exps e(target.nvars(), 0);
        for (std::size_t i = 0; i < ring_.nvars(); ++i) {
            if (t.exp[i] == 0) continue;
            if (where[i] < 0)
                throw Error("target ring is missing variable " + ring_.vars->names[i]);
            e[where[i]] = t.exp[i];
        }
        out.push_back({std::move(e), target.field->convert(*ring_.field, t.coeff)});
    }
    return from_terms(target, std::move(out));
}

Polynomial Polynomial::with_field(const FieldPtr& f) const {
    Ring target{f, ring_.vars};
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back({t.exp, f->convert(*ring_.field, t.coeff)});
    return from_terms(target, std::move(out));
}

Polynomial Polynomial::normalized() const {
    if (terms_.empty()) return *this;
    const Field& F = *ring_.field;
    if (F.kind() == Field::Kind::Rationals) {
        mpz_class num_gcd = 0;
        mpz_class den_lcm = 1;
        for (const Term& t : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.rat().get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.rat().get_den().get_mpz_t());
        }
        mpq_class scale(den_lcm, num_gcd);
        scale.canonicalize();
        if (terms_[0].coeff.rat() < 0) scale = -scale;
        return scaled(F.from_mpq(scale));
    }
    return scaled(F.inv(terms_[0].coeff));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
    const std::string& s;
    const Ring& ring;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("parse error at position " + std::to_string(pos) + ": " + msg);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial a = atom();
        if (eat('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            a = a.pow(static_cast<unsigned>(e));
        }
        return a;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    Polynomial atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            mpz_class n(s.substr(start, pos - start));
            return Polynomial::constant(ring, ring.field->from_mpz(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = ring.vars->index_of(name);
            if (idx < 0) {
                pos = start;
                fail("unknown variable name '" + name + "'");
            }
            return Polynomial::variable(ring, idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, const Ring& r) {
    Parser p{text, r};
    Polynomial result = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return result;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    const Field& F = *ring_.field;
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        std::string cs = F.str(t.coeff);
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool has_vars = total_degree(t.exp) > 0;
        bool coeff_is_one = (cs == "1");
        if (!has_vars || !coeff_is_one) os << cs;
        bool printed = !has_vars || !coeff_is_one;
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] == 0) continue;
            if (printed) os << "*";
            os << ring_.vars->names[i];
            if (t.exp[i] > 1) os << "^" << t.exp[i];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace qdf
