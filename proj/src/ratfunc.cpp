#include "brauer/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace brauer {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require(!den_.is_zero(), errc::division_by_zero_polynomial, "zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(den_.field().one());
        return;
    }
    Poly g = gcd_poly(num_, den_);
    if (g.deg() > 0 || !g.is_one()) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    FFElem lead = den_.lead();
    if (!lead.is_one()) {
        const FiniteField& k = num_.field();
        FFElem li{&k, k.inv(lead.v)};
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

RatFunc RatFunc::from_poly(Poly p) {
    const FiniteField& k = p.field();
    return RatFunc(std::move(p), Poly::constant(k.one()));
}

RatFunc RatFunc::operator+(const RatFunc& o) const { return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    require(!o.is_zero(), errc::division_by_zero_polynomial, "division by the zero function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    require(!is_zero(), errc::zero_function, "inverse of the zero function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    RatFunc r = RatFunc::constant(field().one());
    RatFunc base = *this;
    auto e = static_cast<unsigned long long>(k);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_.is_one()) {
        if (num_.deg() <= 0) return num_.to_string(var);
        std::string n = num_.to_string(var);
        return n.find(' ') == std::string::npos ? n : "(" + n + ")";
    }
    auto wrap = [&](const Poly& p) {
        std::string s = p.to_string(var);
        return (p.deg() > 0) ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

Place Place::infinity(const FiniteField& k) {
    Place v;
    v.k_ = &k;
    return v;
}

Place Place::finite(Poly f) {
    require(f.deg() >= 1, errc::invalid_input, "a finite place needs a polynomial of degree >= 1");
    require(f.monic(), errc::invalid_input, "place polynomial must be monic");
    require(is_irreducible(f), errc::invalid_input, "place polynomial must be irreducible");
    Place v;
    v.k_ = &f.field();
    v.f_ = std::move(f);
    return v;
}

const Poly& Place::poly() const {
    require(f_.has_value(), errc::invalid_input, "the place at infinity has no polynomial");
    return *f_;
}

bool Place::canonical_less(const Place& a, const Place& b) {
    if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
    if (a.is_infinity()) return false;
    if (!(a.poly() == b.poly())) return Poly::canonical_less(a.poly(), b.poly());
    return false;
}

std::string Place::to_string(const std::string& var) const {
    if (is_infinity()) return "inf";
    return f_->to_string(var);
}

namespace {

// multiplicity of the irreducible p in f
unsigned multiplicity(Poly f, const Poly& p) {
    unsigned m = 0;
    while (f.deg() >= p.deg()) {
        auto [q, r] = f.divmod(p);
        if (!r.is_zero()) break;
        ++m;
        f = q;
    }
    return m;
}

struct Parser {
    const std::string& s;
    const FiniteField& k;
    std::string var;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void err(const std::string& what) { throw error(errc::syntax_error, what, pos); }

    std::uint64_t integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) err("expected an integer");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (1ull << 62)) err("integer literal too large");
            ++pos;
        }
        return v;
    }

    bool at_ident(const std::string& name) {
        skip_ws();
        if (s.compare(pos, name.size(), name) != 0) return false;
        std::size_t end = pos + name.size();
        if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_')) return false;
        return true;
    }

    RatFunc base() {
        skip_ws();
        if (eat('(')) {
            RatFunc e = expr();
            if (!eat(')')) err("expected ')'");
            return e;
        }
        if (at_ident(var)) {
            pos += var.size();
            return RatFunc::from_poly(Poly::x(k));
        }
        if (at_ident("g")) {
            pos += 1;
            return RatFunc::constant(k.generator());
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            return RatFunc::constant(k.from_int(static_cast<long long>(integer())));
        err("expected '" + var + "', 'g', an integer, or '('");
    }

    RatFunc factor() {
        RatFunc b = base();
        skip_ws();
        if (eat('^')) {
            std::uint64_t e = integer();
            if (e > 4096) err("exponent too large");
            return b.pow(static_cast<long long>(e));
        }
        return b;
    }

    RatFunc unary() {
        if (eat('-')) return -factor_chain();
        return factor_chain();
    }

    // the grammar's unary binds the sign to a single factor; products handled in term()
    RatFunc factor_chain() { return factor(); }

    RatFunc term() {
        RatFunc r = unary();
        while (true) {
            skip_ws();
            if (eat('*')) {
                r = r * unary();
            } else if (peek() == '/') {
                ++pos;
                RatFunc d = unary();
                if (d.is_zero()) throw error(errc::division_by_zero_polynomial, "division by zero expression", pos);
                r = r / d;
            } else {
                break;
            }
        }
        return r;
    }

    RatFunc expr() {
        RatFunc r = term();
        while (true) {
            skip_ws();
            if (eat('+')) {
                r = r + term();
            } else if (peek() == '-') {
                ++pos;
                r = r - term();
            } else {
                break;
            }
        }
        return r;
    }

    RatFunc run() {
        RatFunc r = expr();
        skip_ws();
        if (pos != s.size()) err("unexpected trailing input");
        return r;
    }
};

}  // namespace

RatFunc parse_rat(const std::string& src, const FiniteField& k, const std::string& var) {
    Parser p{src, k, var};
    return p.run();
}

RatFunc parse(const std::string& src, const FiniteField& k) { return parse_rat(src, k, "t"); }

long valuation(const RatFunc& f, const Place& v) {
    require(!f.is_zero(), errc::zero_function, "valuation of the zero function");
    if (v.is_infinity()) return static_cast<long>(f.den().deg()) - static_cast<long>(f.num().deg());
    const Poly& p = v.poly();
    return static_cast<long>(multiplicity(f.num(), p)) - static_cast<long>(multiplicity(f.den(), p));
}

Poly residue_at(const RatFunc& f, const Place& v) {
    require(!f.is_zero(), errc::zero_function, "residue of the zero function");
    require(valuation(f, v) == 0, errc::not_a_unit,
            "residue requires a unit at the place " + v.to_string());
    const FiniteField& k = f.field();
    if (v.is_infinity()) {
        FFElem c{&k, k.mul(f.num().lead().v, k.inv(f.den().lead().v))};
        return Poly::constant(c);
    }
    const Poly& m = v.poly();
    Poly n = poly_mod(f.num(), m);
    Poly d = poly_mod(f.den(), m);
    return poly_mulmod(n, poly_inv_mod(d, m), m);
}

std::uint64_t class_order_global(const RatFunc& f, std::uint64_t n) {
    require(!f.is_zero(), errc::zero_function, "class order of the zero function");
    const FiniteField& k = f.field();
    require(n >= 1 && (k.q() - 1) % n == 0, errc::roots_of_unity_missing,
            "mu_" + std::to_string(n) + " not contained in " + k.name());
    if (n == 1) return 1;

    // part forced by valuations, infinity included
    std::uint64_t m0 = 1;
    auto fold = [&](long val) {
        if (val == 0) return;
        std::uint64_t g = std::gcd(n, static_cast<std::uint64_t>(std::llabs(val)) % n);
        if (g == 0) g = n;
        m0 = std::lcm(m0, n / g);
    };
    for (const auto& [p, mult] : factor(f.num()).factors) fold(static_cast<long>(mult));
    for (const auto& [p, mult] : factor(f.den()).factors) fold(-static_cast<long>(mult));
    fold(static_cast<long>(f.den().deg()) - static_cast<long>(f.num().deg()));

    // f^{m0} = c * h^n exactly, with c the leading-unit part
    FFElem c{&k, k.pow(f.num().lead().v, m0)};
    return m0 * power_class_order(k, c, n);
}

RatFunc substitute(const RatFunc& f, const RatFunc& r) {
    const FiniteField& k = r.field();
    auto eval_poly = [&](const Poly& p) {
        RatFunc acc(k);
        for (std::size_t i = static_cast<std::size_t>(p.deg()) + 1; i-- > 0;) {
            acc = acc * r + RatFunc::constant(p.coeff(i));
            if (i == 0) break;
        }
        return acc;
    };
    if (f.is_zero()) return RatFunc(k);
    return eval_poly(f.num()) / eval_poly(f.den());
}

}  // namespace brauer
