#include "vsym/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vsym {

namespace {

mpz_class mod_reduce(const mpz_class& v, const mpz_class& n) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::shared_ptr<const PolyData> make_poly(std::map<Monomial, RingElement, MonomialCmp> terms) {
    auto p = std::make_shared<PolyData>();
    p->terms = std::move(terms);
    return p;
}

}  // namespace

bool MonomialCmp::operator()(const Monomial& a, const Monomial& b) const {
    unsigned long da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    return a < b;
}

// ---------------------------------------------------------------------------
// RingSpec

Ring RingSpec::integers() {
    auto r = std::shared_ptr<RingSpec>(new RingSpec());
    r->family = ring_family::integers;
    return r;
}

Ring RingSpec::rationals() {
    auto r = std::shared_ptr<RingSpec>(new RingSpec());
    r->family = ring_family::rationals;
    return r;
}

Ring RingSpec::mod_n(const mpz_class& n) {
    if (n < 2) throw domain_error("Z/n requires modulus >= 2, got " + n.get_str());
    auto r = std::shared_ptr<RingSpec>(new RingSpec());
    r->family = ring_family::mod_n;
    r->modulus = n;
    return r;
}

Ring RingSpec::prime_field(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw domain_error("F_p requires a prime, got " + p.get_str());
    auto r = std::shared_ptr<RingSpec>(new RingSpec());
    r->family = ring_family::prime_field;
    r->modulus = p;
    return r;
}

Ring RingSpec::polynomial(Ring base, std::vector<std::string> vars) {
    if (!base) throw domain_error("polynomial ring requires a base ring");
    if (vars.empty()) throw domain_error("polynomial ring requires at least one variable");
    for (const auto& v : vars) {
        if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
            throw domain_error("bad variable name '" + v + "'");
        if (std::count(vars.begin(), vars.end(), v) != 1)
            throw domain_error("duplicate variable name '" + v + "'");
    }
    auto r = std::shared_ptr<RingSpec>(new RingSpec());
    r->family = ring_family::polynomial;
    r->base = std::move(base);
    r->vars = std::move(vars);
    return r;
}

std::string RingSpec::text() const {
    switch (family) {
        case ring_family::integers: return "Z";
        case ring_family::rationals: return "Q";
        case ring_family::mod_n: return "Z/" + modulus.get_str();
        case ring_family::prime_field: return "F_" + modulus.get_str();
        case ring_family::polynomial: {
            std::string s = base->text() + "[";
            for (size_t i = 0; i < vars.size(); ++i) {
                if (i) s += ",";
                s += vars[i];
            }
            return s + "]";
        }
    }
    return "?";
}

mpz_class RingSpec::size() const {
    if (!finite()) throw domain_error("ring " + text() + " is not finite");
    return modulus;
}

bool RingSpec::two_is_unit() const {
    switch (family) {
        case ring_family::integers: return false;
        case ring_family::rationals: return true;
        case ring_family::mod_n:
        case ring_family::prime_field: return mpz_odd_p(modulus.get_mpz_t()) != 0;
        case ring_family::polynomial: return base->two_is_unit();
    }
    return false;
}

bool RingSpec::equals(const RingSpec& o) const {
    if (family != o.family) return false;
    switch (family) {
        case ring_family::integers:
        case ring_family::rationals: return true;
        case ring_family::mod_n:
        case ring_family::prime_field: return modulus == o.modulus;
        case ring_family::polynomial: return vars == o.vars && base->equals(*o.base);
    }
    return false;
}

bool same_ring(const Ring& a, const Ring& b) {
    return a == b || (a && b && a->equals(*b));
}

RingElement RingSpec::from_mpz(const mpz_class& v) const {
    Ring self = shared_from_this();
    switch (family) {
        case ring_family::integers: return RingElement(self, v);
        case ring_family::rationals: return RingElement(self, mpq_class(v));
        case ring_family::mod_n:
        case ring_family::prime_field: return RingElement(self, mod_reduce(v, modulus));
        case ring_family::polynomial: {
            RingElement c = base->from_mpz(v);
            std::map<Monomial, RingElement, MonomialCmp> terms;
            if (!c.is_zero()) terms.emplace(Monomial(vars.size(), 0), c);
            return RingElement(self, make_poly(std::move(terms)));
        }
    }
    throw domain_error("bad ring family");
}

RingElement RingSpec::zero() const { return from_mpz(0); }
RingElement RingSpec::one() const { return from_mpz(1); }
RingElement RingSpec::from_int(long v) const { return from_mpz(mpz_class(v)); }

RingElement RingSpec::element_at(const mpz_class& index) const {
    if (!finite()) throw domain_error("element_at requires a finite ring");
    if (index < 0 || index >= modulus) throw domain_error("element index out of range");
    return from_mpz(index);
}

// ---------------------------------------------------------------------------
// ring_parse

namespace {

struct SpecParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    mpz_class number() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw domain_error("expected number in ring spec");
        return mpz_class(std::string(s.substr(start, pos - start)));
    }

    std::string ident() {
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
        }
        if (start == pos) throw domain_error("expected variable name in ring spec");
        return std::string(s.substr(start, pos - start));
    }

    Ring parse() {
        skip_ws();
        Ring r = base();
        skip_ws();
        while (eat('[')) {
            std::vector<std::string> vars;
            skip_ws();
            vars.push_back(ident());
            skip_ws();
            while (eat(',')) {
                skip_ws();
                vars.push_back(ident());
                skip_ws();
            }
            if (!eat(']')) throw domain_error("expected ']' in ring spec");
            r = RingSpec::polynomial(r, std::move(vars));
            skip_ws();
        }
        skip_ws();
        if (pos != s.size()) throw domain_error("trailing characters in ring spec");
        return r;
    }

    Ring base() {
        if (eat('Z')) {
            if (eat('/')) return RingSpec::mod_n(number());
            return RingSpec::integers();
        }
        if (eat('Q')) return RingSpec::rationals();
        if (eat('F')) {
            if (!eat('_')) throw domain_error("expected 'F_<p>' in ring spec");
            return RingSpec::prime_field(number());
        }
        throw domain_error("unrecognized ring spec");
    }
};

}  // namespace

Ring ring_parse(std::string_view text) {
    SpecParser p{text};
    return p.parse();
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(Ring ring, mpz_class v) : ring_(std::move(ring)), v_(std::move(v)) {}
RingElement::RingElement(Ring ring, mpq_class v) : ring_(std::move(ring)), v_(std::move(v)) {}
RingElement::RingElement(Ring ring, std::shared_ptr<const PolyData> p)
    : ring_(std::move(ring)), v_(std::move(p)) {}

const mpz_class& RingElement::as_mpz() const { return std::get<mpz_class>(v_); }
const mpq_class& RingElement::as_mpq() const { return std::get<mpq_class>(v_); }
const PolyData& RingElement::as_poly() const {
    return *std::get<std::shared_ptr<const PolyData>>(v_);
}

bool RingElement::is_zero() const {
    switch (ring_->family) {
        case ring_family::rationals: return as_mpq() == 0;
        case ring_family::polynomial: return as_poly().terms.empty();
        default: return as_mpz() == 0;
    }
}

bool RingElement::is_one() const {
    switch (ring_->family) {
        case ring_family::rationals: return as_mpq() == 1;
        case ring_family::polynomial: {
            const auto& t = as_poly().terms;
            return t.size() == 1 && t.begin()->first == Monomial(ring_->vars.size(), 0) &&
                   t.begin()->second.is_one();
        }
        default: return as_mpz() == 1;
    }
}

namespace {

void require_same_ring(const RingElement& a, const RingElement& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw domain_error("ring mismatch: " + a.ring()->text() + " vs " + b.ring()->text());
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    const Ring& R = a.ring();
    switch (R->family) {
        case ring_family::integers: return RingElement(R, mpz_class(a.as_mpz() + b.as_mpz()));
        case ring_family::rationals: return RingElement(R, mpq_class(a.as_mpq() + b.as_mpq()));
        case ring_family::mod_n:
        case ring_family::prime_field:
            return RingElement(R, mod_reduce(a.as_mpz() + b.as_mpz(), R->modulus));
        case ring_family::polynomial: {
            auto terms = a.as_poly().terms;
            for (const auto& [m, c] : b.as_poly().terms) {
                auto it = terms.find(m);
                if (it == terms.end()) {
                    terms.emplace(m, c);
                } else {
                    RingElement s = it->second + c;
                    if (s.is_zero())
                        terms.erase(it);
                    else
                        it->second = s;
                }
            }
            return RingElement(R, make_poly(std::move(terms)));
        }
    }
    throw domain_error("bad ring family");
}

RingElement RingElement::operator-() const {
    const Ring& R = ring_;
    switch (R->family) {
        case ring_family::integers: return RingElement(R, mpz_class(-as_mpz()));
        case ring_family::rationals: return RingElement(R, mpq_class(-as_mpq()));
        case ring_family::mod_n:
        case ring_family::prime_field: return RingElement(R, mod_reduce(-as_mpz(), R->modulus));
        case ring_family::polynomial: {
            std::map<Monomial, RingElement, MonomialCmp> terms;
            for (const auto& [m, c] : as_poly().terms) terms.emplace(m, -c);
            return RingElement(R, make_poly(std::move(terms)));
        }
    }
    throw domain_error("bad ring family");
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    const Ring& R = a.ring();
    switch (R->family) {
        case ring_family::integers: return RingElement(R, mpz_class(a.as_mpz() * b.as_mpz()));
        case ring_family::rationals: return RingElement(R, mpq_class(a.as_mpq() * b.as_mpq()));
        case ring_family::mod_n:
        case ring_family::prime_field:
            return RingElement(R, mod_reduce(a.as_mpz() * b.as_mpz(), R->modulus));
        case ring_family::polynomial: {
            std::map<Monomial, RingElement, MonomialCmp> terms;
            for (const auto& [ma, ca] : a.as_poly().terms) {
                for (const auto& [mb, cb] : b.as_poly().terms) {
                    Monomial m(ma.size());
                    for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                    RingElement c = ca * cb;
                    auto it = terms.find(m);
                    if (it == terms.end()) {
                        if (!c.is_zero()) terms.emplace(std::move(m), c);
                    } else {
                        RingElement s = it->second + c;
                        if (s.is_zero())
                            terms.erase(it);
                        else
                            it->second = s;
                    }
                }
            }
            return RingElement(R, make_poly(std::move(terms)));
        }
    }
    throw domain_error("bad ring family");
}

bool operator==(const RingElement& a, const RingElement& b) {
    return same_ring(a.ring(), b.ring()) && RingElement::cmp(a, b) == 0;
}

RingElement RingElement::pow(unsigned long e) const {
    RingElement acc = ring_->one();
    RingElement base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int RingElement::cmp(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    switch (a.ring()->family) {
        case ring_family::rationals: return ::cmp(a.as_mpq(), b.as_mpq());
        case ring_family::polynomial: {
            const auto& ta = a.as_poly().terms;
            const auto& tb = b.as_poly().terms;
            auto ia = ta.begin();
            auto ib = tb.begin();
            MonomialCmp less;
            for (; ia != ta.end() && ib != tb.end(); ++ia, ++ib) {
                if (less(ia->first, ib->first)) return -1;
                if (less(ib->first, ia->first)) return 1;
                int c = cmp(ia->second, ib->second);
                if (c != 0) return c;
            }
            if (ia != ta.end()) return 1;
            if (ib != tb.end()) return -1;
            return 0;
        }
        default: return ::cmp(a.as_mpz(), b.as_mpz());
    }
}

// ---------------------------------------------------------------------------
// element text form

namespace {

bool coeff_is_negative_literal(const RingElement& c) {
    switch (c.ring()->family) {
        case ring_family::integers: return c.as_mpz() < 0;
        case ring_family::rationals: return c.as_mpq() < 0;
        default: return false;
    }
}

std::string monomial_text(const std::vector<std::string>& vars, const Monomial& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace

std::string RingElement::text() const {
    switch (ring_->family) {
        case ring_family::integers: return as_mpz().get_str();
        case ring_family::rationals: return as_mpq().get_str();
        case ring_family::mod_n:
        case ring_family::prime_field: return as_mpz().get_str();
        case ring_family::polynomial: {
            const auto& terms = as_poly().terms;
            if (terms.empty()) return "0";
            std::string out;
            // highest-degree terms first
            for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
                RingElement c = it->second;
                bool neg = coeff_is_negative_literal(c);
                if (out.empty()) {
                    if (neg) {
                        out += "-";
                        c = -c;
                    }
                } else {
                    out += neg ? "-" : "+";
                    if (neg) c = -c;
                }
                std::string mono = monomial_text(ring_->vars, it->first);
                bool composite = ring_->base->family == ring_family::polynomial;
                std::string ct = c.text();
                if (composite && ct.size() > 1) ct = "(" + ct + ")";
                if (mono.empty()) {
                    out += ct;
                } else if (c.is_one()) {
                    out += mono;
                } else {
                    out += ct + "*" + mono;
                }
            }
            return out;
        }
    }
    throw domain_error("bad ring family");
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.text(); }

namespace {

// Parser for the compact element encoding. Whitespace is stripped first.
struct ElemParser {
    const Ring& ring;
    std::string s;
    size_t pos = 0;

    explicit ElemParser(const Ring& r, std::string_view text) : ring(r) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        }
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw domain_error("cannot parse '" + s + "' as element of " + ring->text() + ": " + why);
    }

    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    mpz_class number() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return mpz_class(s.substr(start, pos - start));
    }

    RingElement parse() {
        RingElement v = expr();
        if (pos != s.size()) fail("trailing characters");
        return v;
    }

    RingElement expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        RingElement v = term();
        if (neg) v = -v;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            bool minus = s[pos] == '-';
            ++pos;
            RingElement t = term();
            v = minus ? v - t : v + t;
        }
        return v;
    }

    RingElement term() {
        RingElement v = factor();
        while (eat('*')) v = v * factor();
        return v;
    }

    RingElement factor() {
        if (ring->family != ring_family::polynomial) return scalar();
        if (pos < s.size() && s[pos] == '(') {
            size_t depth = 0, start = pos;
            for (; pos < s.size(); ++pos) {
                if (s[pos] == '(') ++depth;
                if (s[pos] == ')' && --depth == 0) break;
            }
            if (pos == s.size()) fail("unbalanced parentheses");
            std::string inner = s.substr(start + 1, pos - start - 1);
            ++pos;
            return promote(RingElement::parse(ring->base, inner));
        }
        if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                ++pos;
            }
            std::string name = s.substr(start, pos - start);
            auto it = std::find(ring->vars.begin(), ring->vars.end(), name);
            if (it == ring->vars.end()) fail("unknown variable '" + name + "'");
            unsigned long e = 1;
            if (eat('^')) e = number().get_ui();
            Monomial m(ring->vars.size(), 0);
            m[static_cast<size_t>(it - ring->vars.begin())] = static_cast<unsigned>(e);
            std::map<Monomial, RingElement, MonomialCmp> terms;
            terms.emplace(std::move(m), ring->base->one());
            return RingElement(ring, std::make_shared<PolyData>(PolyData{std::move(terms)}));
        }
        return scalar();
    }

    RingElement promote(const RingElement& base_elem) {
        std::map<Monomial, RingElement, MonomialCmp> terms;
        if (!base_elem.is_zero()) terms.emplace(Monomial(ring->vars.size(), 0), base_elem);
        return RingElement(ring, std::make_shared<PolyData>(PolyData{std::move(terms)}));
    }

    RingElement scalar() {
        mpz_class num = number();
        if (ring->family == ring_family::rationals || (ring->family == ring_family::polynomial &&
                                                       ring->base->family == ring_family::rationals)) {
            if (eat('/')) {
                mpz_class den = number();
                if (den == 0) fail("zero denominator");
                mpq_class q(num, den);
                q.canonicalize();
                RingElement v(ring->family == ring_family::rationals ? ring : ring->base, q);
                return ring->family == ring_family::polynomial ? promote(v) : v;
            }
        }
        RingElement v = (ring->family == ring_family::polynomial ? ring->base : ring)->from_mpz(num);
        return ring->family == ring_family::polynomial ? promote(v) : v;
    }
};

}  // namespace

RingElement RingElement::parse(const Ring& ring, std::string_view text) {
    ElemParser p(ring, text);
    return p.parse();
}

// ---------------------------------------------------------------------------
// units

std::optional<RingElement> is_unit(const RingElement& x) {
    const Ring& R = x.ring();
    std::optional<RingElement> inv;
    switch (R->family) {
        case ring_family::integers: {
            if (x.as_mpz() == 1 || x.as_mpz() == -1) inv = x;
            break;
        }
        case ring_family::rationals: {
            if (x.as_mpq() != 0) inv = RingElement(R, mpq_class(1 / x.as_mpq()));
            break;
        }
        case ring_family::mod_n:
        case ring_family::prime_field: {
            mpz_class r;
            if (mpz_invert(r.get_mpz_t(), x.as_mpz().get_mpz_t(), R->modulus.get_mpz_t()) != 0)
                inv = RingElement(R, std::move(r));
            break;
        }
        case ring_family::polynomial: {
            // constant term must be a unit; the tail must be nilpotent.
            // Newton iteration squares the residual, so convergence within
            // the iteration cap certifies the inverse (verified below anyway).
            Monomial constant(R->vars.size(), 0);
            auto it = x.as_poly().terms.find(constant);
            if (it == x.as_poly().terms.end()) break;
            auto c_inv = is_unit(it->second);
            if (!c_inv) break;
            RingElement h = RingElement(R, make_poly({})) + RingElement(R, make_poly({}));
            {
                std::map<Monomial, RingElement, MonomialCmp> terms;
                terms.emplace(constant, *c_inv);
                h = RingElement(R, make_poly(std::move(terms)));
            }
            RingElement one = R->one();
            for (int iter = 0; iter < 64; ++iter) {
                RingElement r = one - x * h;
                if (r.is_zero()) {
                    inv = h;
                    break;
                }
                h = h * (one + r);
            }
            break;
        }
    }
    if (inv && !((*inv) * x).is_one()) throw verify_error("internal: computed inverse fails check");
    return inv;
}

// ---------------------------------------------------------------------------
// Bezout witnesses

namespace {

// Fold of the extended Euclidean algorithm over an integer vector: returns
// (g, c) with g = gcd >= 0 and sum c_i a_i = g.
std::pair<mpz_class, std::vector<mpz_class>> integer_xgcd_fold(const std::vector<mpz_class>& a) {
    std::vector<mpz_class> c(a.size(), 0);
    mpz_class g = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (g == 0) {
            if (a[i] == 0) continue;
            g = abs(a[i]);
            c[i] = a[i] > 0 ? 1 : -1;
            continue;
        }
        mpz_class g2, s, t;
        mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), a[i].get_mpz_t());
        for (size_t j = 0; j < i; ++j) c[j] *= s;
        c[i] = t;
        g = g2;
    }
    return {g, c};
}

// Univariate polynomial helpers over a field base ring.
long poly_degree(const RingElement& f) {
    const auto& t = f.as_poly().terms;
    if (t.empty()) return -1;
    return static_cast<long>(t.rbegin()->first[0]);
}

RingElement poly_coeff(const RingElement& f, unsigned d) {
    Monomial m(1, d);
    auto it = f.as_poly().terms.find(m);
    return it == f.as_poly().terms.end() ? f.ring()->base->zero() : it->second;
}

RingElement poly_monomial(const Ring& R, unsigned d, const RingElement& c) {
    std::map<Monomial, RingElement, MonomialCmp> terms;
    if (!c.is_zero()) terms.emplace(Monomial(1, d), c);
    return RingElement(R, make_poly(std::move(terms)));
}

// Division with remainder by a polynomial with unit leading coefficient.
std::pair<RingElement, RingElement> poly_divmod(const RingElement& a, const RingElement& b) {
    const Ring& R = a.ring();
    long db = poly_degree(b);
    if (db < 0) throw domain_error("polynomial division by zero");
    RingElement lead_inv = *is_unit(poly_coeff(b, static_cast<unsigned>(db)));
    RingElement q = R->zero();
    RingElement r = a;
    while (poly_degree(r) >= db) {
        unsigned d = static_cast<unsigned>(poly_degree(r) - db);
        RingElement c = poly_coeff(r, static_cast<unsigned>(poly_degree(r))) * lead_inv;
        RingElement shift = poly_monomial(R, d, c);
        q += shift;
        r -= shift * b;
    }
    return {q, r};
}

}  // namespace

std::vector<RingElement> bezout_witness(const std::vector<RingElement>& row) {
    if (row.empty()) throw not_unimodular{};
    const Ring& R = row.front().ring();
    for (const auto& x : row) require_same_ring(row.front(), x);

    switch (R->family) {
        case ring_family::integers: {
            std::vector<mpz_class> a;
            a.reserve(row.size());
            for (const auto& x : row) a.push_back(x.as_mpz());
            auto [g, c] = integer_xgcd_fold(a);
            if (g != 1) throw not_unimodular{};
            std::vector<RingElement> out;
            out.reserve(c.size());
            for (auto& v : c) out.push_back(R->from_mpz(v));
            return out;
        }
        case ring_family::rationals:
        case ring_family::prime_field: {
            for (size_t i = 0; i < row.size(); ++i) {
                if (auto inv = is_unit(row[i])) {
                    std::vector<RingElement> out(row.size(), R->zero());
                    out[i] = *inv;
                    return out;
                }
            }
            throw not_unimodular{};
        }
        case ring_family::mod_n: {
            std::vector<mpz_class> a;
            a.reserve(row.size() + 1);
            for (const auto& x : row) a.push_back(x.as_mpz());
            a.push_back(R->modulus);
            auto [g, c] = integer_xgcd_fold(a);
            if (g != 1) throw not_unimodular{};
            std::vector<RingElement> out;
            out.reserve(row.size());
            for (size_t i = 0; i < row.size(); ++i) out.push_back(R->from_mpz(c[i]));
            return out;
        }
        case ring_family::polynomial: {
            bool base_is_field = R->base->family == ring_family::rationals ||
                                 R->base->family == ring_family::prime_field;
            if (R->vars.size() != 1 || !base_is_field)
                throw unsupported_ring(
                    "Bezout solving is supported for univariate polynomials over a field only; "
                    "callers must supply witnesses for " +
                    R->text());
            // xgcd fold, keeping g = sum c_i row_i as an invariant.
            RingElement g = R->zero();
            std::vector<RingElement> c(row.size(), R->zero());
            for (size_t i = 0; i < row.size(); ++i) {
                if (g.is_zero()) {
                    if (row[i].is_zero()) continue;
                    g = row[i];
                    c[i] = R->one();
                    continue;
                }
                RingElement x = g, y = row[i];
                // (sx, tx) track x, (sy, ty) track y as combinations of (g, row[i])
                RingElement sx = R->one(), tx = R->zero();
                RingElement sy = R->zero(), ty = R->one();
                while (!y.is_zero()) {
                    auto [q, r] = poly_divmod(x, y);
                    RingElement sr = sx - q * sy, tr = tx - q * ty;
                    x = y;
                    sx = sy;
                    tx = ty;
                    y = r;
                    sy = sr;
                    ty = tr;
                }
                for (size_t j = 0; j < i; ++j) c[j] *= sx;
                c[i] = tx;
                g = x;
            }
            if (g.is_zero() || poly_degree(g) != 0) throw not_unimodular{};
            auto u = is_unit(g);
            if (!u) throw not_unimodular{};
            for (auto& x : c) x *= *u;
            return c;
        }
    }
    throw domain_error("bad ring family");
}

}  // namespace vsym
