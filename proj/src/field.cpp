#include "qdf/field.hpp"

#include <algorithm>
#include <sstream>

namespace qdf {

namespace {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // p < 2^31, operands reduced
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw Error("division by zero in prime field");
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
    while (newr != 0) {
        long long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw Error("element not invertible mod p");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

FieldPtr Field::rationals() {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Rationals;
    return f;
}

FieldPtr Field::prime(std::uint64_t p) {
    if (p >= (1ull << 31)) throw Error("prime modulus must fit in 31 bits");
    if (!is_prime_u64(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Prime;
    f->p_ = p;
    return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<Value> tail, std::string symbol) {
    if (!base) throw Error("extension requires a base field");
    if (tail.size() < 2) throw Error("extension degree must be at least 2");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Extension;
    f->base_ = std::move(base);
    f->tail_ = std::move(tail);
    f->symbol_ = std::move(symbol);
    f->p_ = f->base_->characteristic();
    return f;
}

FieldPtr Field::with_imaginary_unit(FieldPtr base) {
    std::vector<Value> tail = {base->one(), base->zero()};  // w^2 + 1
    return extension(std::move(base), std::move(tail), "i");
}

std::uint64_t Field::characteristic() const {
    switch (kind_) {
        case Kind::Rationals: return 0;
        case Kind::Prime: return p_;
        case Kind::Extension: return base_->characteristic();
    }
    return 0;
}

Value Field::zero() const { return from_int(0); }
Value Field::one() const { return from_int(1); }

Value Field::from_int(long n) const {
    switch (kind_) {
        case Kind::Rationals: return Value(mpq_class(n));
        case Kind::Prime: {
            long long r = static_cast<long long>(n) % static_cast<long long>(p_);
            if (r < 0) r += static_cast<long long>(p_);
            return Value(static_cast<std::uint64_t>(r));
        }
        case Kind::Extension: {
            std::vector<Value> c(tail_.size(), base_->zero());
            c[0] = base_->from_int(n);
            return Value(std::move(c));
        }
    }
    throw Error("bad field kind");
}

Value Field::from_mpz(const mpz_class& n) const {
    switch (kind_) {
        case Kind::Rationals: return Value(mpq_class(n));
        case Kind::Prime: {
            mpz_class r = n % mpz_class(static_cast<unsigned long>(p_));
            if (r < 0) r += mpz_class(static_cast<unsigned long>(p_));
            return Value(static_cast<std::uint64_t>(r.get_ui()));
        }
        case Kind::Extension: {
            std::vector<Value> c(tail_.size(), base_->zero());
            c[0] = base_->from_mpz(n);
            return Value(std::move(c));
        }
    }
    throw Error("bad field kind");
}

Value Field::from_mpq(const mpq_class& q) const {
    if (kind_ == Kind::Rationals) {
        mpq_class r = q;
        r.canonicalize();
        return Value(std::move(r));
    }
    Value num = from_mpz(q.get_num());
    Value den = from_mpz(q.get_den());
    return div(num, den);
}

Value Field::generator() const {
    if (kind_ != Kind::Extension) throw Error("generator only defined for extensions");
    std::vector<Value> c(tail_.size(), base_->zero());
    c[1] = base_->one();
    return Value(std::move(c));
}

Value Field::add(const Value& a, const Value& b) const {
    switch (kind_) {
        case Kind::Rationals: return Value(mpq_class(a.rat() + b.rat()));
        case Kind::Prime: return Value(mod_add(a.residue(), b.residue(), p_));
        case Kind::Extension: {
            std::vector<Value> c(tail_.size());
            for (std::size_t i = 0; i < tail_.size(); ++i)
                c[i] = base_->add(a.ext()[i], b.ext()[i]);
            return Value(std::move(c));
        }
    }
    throw Error("bad field kind");
}

Value Field::sub(const Value& a, const Value& b) const {
    switch (kind_) {
        case Kind::Rationals: return Value(mpq_class(a.rat() - b.rat()));
        case Kind::Prime: return Value(mod_sub(a.residue(), b.residue(), p_));
        case Kind::Extension: {
            std::vector<Value> c(tail_.size());
            for (std::size_t i = 0; i < tail_.size(); ++i)
                c[i] = base_->sub(a.ext()[i], b.ext()[i]);
            return Value(std::move(c));
        }
    }
    throw Error("bad field kind");
}

Value Field::mul(const Value& a, const Value& b) const {
    switch (kind_) {
        case Kind::Rationals: return Value(mpq_class(a.rat() * b.rat()));
        case Kind::Prime: return Value(mod_mul(a.residue(), b.residue(), p_));
        case Kind::Extension: {
            const std::size_t d = tail_.size();
            std::vector<Value> prod(2 * d - 1, base_->zero());
            for (std::size_t i = 0; i < d; ++i) {
                if (base_->is_zero(a.ext()[i])) continue;
                for (std::size_t j = 0; j < d; ++j)
                    prod[i + j] = base_->add(prod[i + j], base_->mul(a.ext()[i], b.ext()[j]));
            }
            // Fold w^k for k >= d using w^d = -tail.
            for (std::size_t k = 2 * d - 2; k >= d; --k) {
                if (base_->is_zero(prod[k])) continue;
                for (std::size_t i = 0; i < d; ++i) {
                    Value t = base_->mul(prod[k], tail_[i]);
                    prod[k - d + i] = base_->sub(prod[k - d + i], t);
                }
                prod[k] = base_->zero();
            }
            prod.resize(d);
            return Value(std::move(prod));
        }
    }
    throw Error("bad field kind");
}

Value Field::neg(const Value& a) const {
    switch (kind_) {
        case Kind::Rationals: return Value(mpq_class(-a.rat()));
        case Kind::Prime: return a.residue() == 0 ? a : Value(p_ - a.residue());
        case Kind::Extension: {
            std::vector<Value> c(tail_.size());
            for (std::size_t i = 0; i < tail_.size(); ++i) c[i] = base_->neg(a.ext()[i]);
            return Value(std::move(c));
        }
    }
    throw Error("bad field kind");
}

Value Field::inv(const Value& a) const {
    switch (kind_) {
        case Kind::Rationals: {
            if (a.rat() == 0) throw Error("division by zero over the rationals");
            return Value(mpq_class(1 / a.rat()));
        }
        case Kind::Prime: return Value(mod_inv(a.residue(), p_));
        case Kind::Extension: {
            if (is_zero(a)) throw Error("division by zero in extension field");
            // Extended Euclid against the minimal polynomial over the base.
            const Field& B = *base_;
            upoly::UPoly m = tail_;
            m.push_back(B.one());
            upoly::UPoly r0 = m, r1 = a.ext();
            upoly::trim(B, r1);
            upoly::UPoly s0 = {B.zero()}, s1 = {B.one()};
            while (upoly::deg(B, r1) > 0) {
                // r0 = q*r1 + r2, track the cofactor of `a` only.
                upoly::UPoly q;
                {
                    upoly::UPoly rem = r0;
                    int db = upoly::deg(B, r1);
                    Value lead_inv = B.inv(r1[db]);
                    q.assign(std::max(0, upoly::deg(B, rem) - db + 1), B.zero());
                    while (upoly::deg(B, rem) >= db) {
                        int dr = upoly::deg(B, rem);
                        Value c = B.mul(rem[dr], lead_inv);
                        q[dr - db] = c;
                        for (int i = 0; i <= db; ++i)
                            rem[dr - db + i] = B.sub(rem[dr - db + i], B.mul(c, r1[i]));
                        upoly::trim(B, rem);
                    }
                    r0.swap(rem);
                }
                upoly::UPoly s2 = upoly::sub(B, s0, upoly::mul(B, q, s1));
                s0.swap(s1);
                s1.swap(s2);
                r0.swap(r1);
            }
            if (upoly::deg(B, r1) != 0)
                throw Error("minimal polynomial is not irreducible: non-invertible element");
            upoly::UPoly res = upoly::scale(B, s1, B.inv(r1[0]));
            res.resize(tail_.size(), B.zero());
            return Value(std::move(res));
        }
    }
    throw Error("bad field kind");
}

Value Field::div(const Value& a, const Value& b) const { return mul(a, inv(b)); }

bool Field::is_zero(const Value& a) const {
    switch (kind_) {
        case Kind::Rationals: return a.rat() == 0;
        case Kind::Prime: return a.residue() == 0;
        case Kind::Extension:
            for (const Value& c : a.ext())
                if (!base_->is_zero(c)) return false;
            return true;
    }
    throw Error("bad field kind");
}

bool Field::is_one(const Value& a) const { return equal(a, one()); }

bool Field::equal(const Value& a, const Value& b) const {
    switch (kind_) {
        case Kind::Rationals: return a.rat() == b.rat();
        case Kind::Prime: return a.residue() == b.residue();
        case Kind::Extension:
            for (std::size_t i = 0; i < tail_.size(); ++i)
                if (!base_->equal(a.ext()[i], b.ext()[i])) return false;
            return true;
    }
    throw Error("bad field kind");
}

bool Field::same(const Field& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::Rationals: return true;
        case Kind::Prime: return p_ == o.p_;
        case Kind::Extension: {
            if (!base_->same(*o.base_)) return false;
            if (tail_.size() != o.tail_.size()) return false;
            for (std::size_t i = 0; i < tail_.size(); ++i)
                if (!base_->equal(tail_[i], o.tail_[i])) return false;
            return true;
        }
    }
    return false;
}

Value Field::convert(const Field& src, const Value& v) const {
    if (same(src)) return v;
    if (kind_ == Kind::Extension) {
        Value c0 = base_->convert(src, v);
        std::vector<Value> c(tail_.size(), base_->zero());
        c[0] = std::move(c0);
        return Value(std::move(c));
    }
    if (kind_ == Kind::Prime && src.kind() == Kind::Rationals) {
        Value num = from_mpz(v.rat().get_num());
        Value den = from_mpz(v.rat().get_den());
        return div(num, den);
    }
    throw Error("no canonical embedding between these fields");
}

Value Field::random(std::mt19937_64& rng) const {
    switch (kind_) {
        case Kind::Rationals: {
            std::uniform_int_distribution<long> d(-999, 999);
            return from_int(d(rng));
        }
        case Kind::Prime: {
            std::uniform_int_distribution<std::uint64_t> d(0, p_ - 1);
            return Value(d(rng));
        }
        case Kind::Extension: {
            std::vector<Value> c(tail_.size());
            for (auto& x : c) x = base_->random(rng);
            return Value(std::move(c));
        }
    }
    throw Error("bad field kind");
}

std::string Field::str(const Value& v) const {
    switch (kind_) {
        case Kind::Rationals: return v.rat().get_str();
        case Kind::Prime: return std::to_string(v.residue());
        case Kind::Extension: {
            std::ostringstream os;
            bool first = true;
            for (std::size_t i = 0; i < tail_.size(); ++i) {
                if (base_->is_zero(v.ext()[i])) continue;
                if (!first) os << "+";
                os << base_->str(v.ext()[i]);
                if (i >= 1) os << "*" << symbol_;
                if (i >= 2) os << "^" << i;
                first = false;
            }
            if (first) return "0";
            return "(" + os.str() + ")";
        }
    }
    throw Error("bad field kind");
}

std::string Field::name() const {
    switch (kind_) {
        case Kind::Rationals: return "qq";
        case Kind::Prime: return "fp:" + std::to_string(p_);
        case Kind::Extension:
            return base_->name() + "(" + symbol_ + ";deg" + std::to_string(tail_.size()) + ")";
    }
    return "?";
}

namespace upoly {

void trim(const Field& F, UPoly& p) {
    while (!p.empty() && F.is_zero(p.back())) p.pop_back();
}

int deg(const Field& F, const UPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!F.is_zero(p[i])) return i;
    return -1;
}

UPoly add(const Field& F, const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(F, r);
    return r;
}

UPoly sub(const Field& F, const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(F, r);
    return r;
}

UPoly mul(const Field& F, const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(F, r);
    return r;
}

UPoly scale(const Field& F, const UPoly& a, const Value& c) {
    UPoly r(a.size(), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    trim(F, r);
    return r;
}

UPoly rem(const Field& F, UPoly a, const UPoly& b) {
    int db = deg(F, b);
    if (db < 0) throw Error("univariate remainder by zero");
    Value lead_inv = F.inv(b[db]);
    while (deg(F, a) >= db) {
        int da = deg(F, a);
        Value c = F.mul(a[da], lead_inv);
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = F.sub(a[da - db + i], F.mul(c, b[i]));
        trim(F, a);
    }
    return a;
}

UPoly monic_gcd(const Field& F, UPoly a, UPoly b) {
    trim(F, a);
    trim(F, b);
    while (deg(F, b) >= 0) {
        UPoly r = rem(F, a, b);
        a.swap(b);
        b.swap(r);
    }
    int da = deg(F, a);
    if (da < 0) return a;
    return scale(F, a, F.inv(a[da]));
}

UPoly derivative(const Field& F, const UPoly& a) {
    if (a.size() <= 1) return {};
    UPoly r(a.size() - 1, F.zero());
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = F.mul(a[i], F.from_int(static_cast<long>(i)));
    trim(F, r);
    return r;
}

int squarefree_degree(const Field& F, const UPoly& p) {
    int d = deg(F, p);
    if (d <= 0) return 0;
    UPoly g = monic_gcd(F, p, derivative(F, p));
    return d - deg(F, g);
}

}  // namespace upoly

}  // namespace qdf
