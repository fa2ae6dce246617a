#include "brauer/tower.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace brauer {

namespace {

constexpr int kMaxExp = 100000;

void check_mu_n(const FiniteField& k, std::uint64_t n) {
    require(n >= 1 && (k.q() - 1) % n == 0, errc::roots_of_unity_missing,
            "mu_" + std::to_string(n) + " not contained in " + k.name());
}

long long emod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// order of a root of unity y in mu_n
std::uint64_t mu_order(const FiniteField& k, std::uint64_t y, std::uint64_t n) {
    require(y != 0, errc::internal, "mu_order of zero");
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0 && k.pow(y, d) == 1) return d;
    fail(errc::internal, "element is not an n-th root of unity");
}

// ---- arithmetic in E = F_q[w]/(h) ------------------------------------------

std::uint64_t ext_size(const FiniteField& k, const Poly& h) {
    unsigned f = static_cast<unsigned>(h.deg());
    require(static_cast<double>(f) * std::log2(static_cast<double>(k.q())) < 63.0, errc::bound_exceeded,
            "residue extension too large for exact arithmetic");
    std::uint64_t s = 1;
    for (unsigned i = 0; i < f; ++i) s *= k.q();
    return s;
}

Poly ext_pow_signed(const FiniteField& k, const Poly& h, const Poly& a, long long e) {
    std::uint64_t Qm1 = ext_size(k, h) - 1;
    return poly_powmod(a, static_cast<std::uint64_t>(emod(e, static_cast<long long>(Qm1))), h);
}

// order of the class of the unit y in E*/E*^n
std::uint64_t ext_class_order(const FiniteField& k, const Poly& h, const Poly& y, std::uint64_t n) {
    require(!y.is_zero(), errc::internal, "class order of zero");
    if (n == 1) return 1;
    std::uint64_t Q = ext_size(k, h);
    Poly z = poly_powmod(y, (Q - 1) / n, h);
    require(z.deg() <= 0 && !z.is_zero(), errc::internal, "n-th power map left the scalar field");
    return mu_order(k, z.coeff(0).v, n);
}

// symbols over E((s)), entries c * s^e
struct ExtMono {
    Poly c;
    long long e = 0;
};

// residue class of the combined symbol list at the s-adic valuation
Poly ext_peel_residue(const FiniteField& k, const Poly& h, const std::vector<std::pair<ExtMono, ExtMono>>& syms) {
    Poly gamma = Poly::constant(k.one());
    for (const auto& [a, b] : syms) {
        Poly ga = ext_pow_signed(k, h, a.c, b.e);
        Poly gb = ext_pow_signed(k, h, b.c, -a.e);
        gamma = poly_mulmod(gamma, poly_mulmod(ga, gb, h), h);
        if ((a.e % 2 != 0) && (b.e % 2 != 0)) gamma = poly_mulmod(gamma, Poly::constant(k.from_int(-1)), h);
    }
    require(!gamma.is_zero(), errc::internal, "zero residue in tower peel");
    return gamma;
}

// order of the class of the monomial c * u^e in F_q((u))* / (F_q((u))*)^n
std::uint64_t monomial_class_order(const FiniteField& k, std::uint64_t c, long long e, std::uint64_t n) {
    std::uint64_t g = std::gcd(n, static_cast<std::uint64_t>(emod(e, static_cast<long long>(n))));
    if (g == 0) g = n;
    std::uint64_t e_r = n / g;
    FFElem cpart{&k, k.pow(c, e_r)};
    return e_r * power_class_order(k, cpart, n);
}

// Kummer extension data for K(gamma^{1/n}), K = F_q((t)), gamma = c * t^e:
// the extension has ramification index e_ram, residue field F_q[w]/(h) of
// degree f, and t = omega^{-a} * s^{e_ram} modulo n-th powers, where omega is
// the class of w and s the new parameter.
struct KummerExt {
    Poly h;
    std::uint64_t e_ram = 1;
    std::uint64_t f = 1;
    std::uint64_t a = 0;
};

KummerExt build_kummer(const FiniteField& k, std::uint64_t c, long long e, std::uint64_t n) {
    std::uint64_t g = std::gcd(n, static_cast<std::uint64_t>(std::llabs(e)));
    if (g == 0) g = n;
    std::uint64_t e_r = n / g;
    long long e_prime = e / static_cast<long long>(g);

    // w^g - c, factored into conjugate irreducibles of equal degree
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(g) + 1, 0);
    coeffs[0] = k.neg(c);
    coeffs[static_cast<std::size_t>(g)] = 1;
    Factorization fac = factor(Poly(k, std::move(coeffs)));
    require(!fac.factors.empty(), errc::internal, "kummer modulus did not factor");
    Poly h = fac.factors.front().first;

    std::uint64_t f = static_cast<std::uint64_t>(h.deg());
    std::uint64_t f_check = power_class_order(k, {&k, k.pow(c, e_r)}, n);
    require(f == f_check, errc::internal, "residue degree mismatch in kummer extension");

    // a * e' + b * e_ram = 1 with 0 <= a < e_ram
    std::uint64_t a = 0;
    if (e_r > 1) {
        long long ep = emod(e_prime, static_cast<long long>(e_r));
        long long old_r = static_cast<long long>(e_r), r = ep;
        long long old_t = 0, t = 1;
        while (r != 0) {
            long long quot = old_r / r;
            long long tmp_r = old_r - quot * r;
            old_r = r;
            r = tmp_r;
            long long tmp_t = old_t - quot * t;
            old_t = t;
            t = tmp_t;
        }
        require(old_r == 1, errc::internal, "e' not invertible mod e_ram");
        a = static_cast<std::uint64_t>(emod(old_t, static_cast<long long>(e_r)));
    }
    return KummerExt{std::move(h), e_r, f, a};
}

struct PeelOutcome {
    Monomial gamma;
    std::uint64_t order = 1;
    std::vector<std::pair<Monomial, Monomial>> unram;  // outer exponents cleared
};

PeelOutcome peel_outer(const TowerClass& A) {
    const FiniteField& k = *A.field.base;
    unsigned outer = A.field.depth() - 1;
    PeelOutcome out;
    out.gamma.c = 1;
    for (const auto& [a, b] : A.symbols) {
        long long alpha = a.e[outer], beta = b.e[outer];
        Monomial ua = a, ub = b;
        ua.e[outer] = 0;
        ub.e[outer] = 0;

        std::uint64_t gc = k.mul(k.pow_signed(a.c, beta), k.pow_signed(b.c, -alpha));
        if ((alpha % 2 != 0) && (beta % 2 != 0)) gc = k.mul(gc, k.from_int(-1).v);
        out.gamma.c = k.mul(out.gamma.c, gc);
        for (unsigned i = 0; i < outer; ++i) {
            long long ge = static_cast<long long>(out.gamma.e[i]) + beta * a.e[i] - alpha * b.e[i];
            require(std::llabs(ge) <= kMaxExp, errc::bound_exceeded, "exponent overflow in tower peel");
            out.gamma.e[i] = static_cast<int>(ge);
        }
        out.unram.emplace_back(ua, ub);
    }
    long long e_inner = (outer >= 1) ? out.gamma.e[0] : 0;
    out.order = monomial_class_order(k, out.gamma.c, e_inner, A.n);
    return out;
}

}  // namespace

TowerField make_tower(const FiniteField& k, std::vector<std::string> params) {
    require(params.size() <= 2, errc::invalid_input, "tower depth is capped at two parameters");
    for (std::size_t i = 0; i < params.size(); ++i) {
        require(!params[i].empty(), errc::invalid_input, "empty parameter name");
        for (std::size_t j = i + 1; j < params.size(); ++j)
            require(params[i] != params[j], errc::invalid_input, "parameter names must be distinct");
    }
    return TowerField{&k, std::move(params)};
}

TowerClass::TowerClass(TowerField f, std::uint64_t n_) : field(std::move(f)), n(n_) {
    check_mu_n(*field.base, n);
}

void TowerClass::push(Monomial a, Monomial b) {
    require(a.c != 0 && b.c != 0, errc::zero_element, "monomial coefficients must be nonzero");
    for (unsigned i = field.depth(); i < 2; ++i)
        require(a.e[i] == 0 && b.e[i] == 0, errc::invalid_input, "exponent on a missing parameter");
    symbols.emplace_back(a, b);
}

TowerNormalForm canonicalize(const TowerClass& A) {
    const FiniteField& k = *A.field.base;
    TowerNormalForm nf;
    long long r = 0;
    for (const auto& [a, b] : A.symbols) {
        long long a1 = a.e[0], a2 = a.e[1], b1 = b.e[0], b2 = b.e[1];
        std::uint64_t c1 = k.mul(k.pow_signed(a.c, b1), k.pow_signed(b.c, -a1));
        if ((a1 % 2 != 0) && (b1 % 2 != 0)) c1 = k.mul(c1, k.from_int(-1).v);
        std::uint64_t c2 = k.mul(k.pow_signed(a.c, b2), k.pow_signed(b.c, -a2));
        if ((a2 % 2 != 0) && (b2 % 2 != 0)) c2 = k.mul(c2, k.from_int(-1).v);
        nf.a1 = k.mul(nf.a1, c1);
        nf.a2 = k.mul(nf.a2, c2);
        r += a1 * b2 - a2 * b1;
    }
    nf.r = static_cast<std::uint64_t>(emod(r, static_cast<long long>(A.n)));
    return nf;
}

TowerResidue tower_residue(const TowerClass& A, unsigned param_index) {
    require(A.field.depth() >= 1, errc::invalid_input, "tower has no parameters");
    require(param_index == A.field.depth() - 1, errc::precondition_violated,
            "residue is taken at the outermost parameter");
    PeelOutcome p = peel_outer(A);
    return TowerResidue{p.gamma, p.order};
}

std::uint64_t complete_index(const TowerClass& A) {
    require(A.field.depth() == 1, errc::precondition_violated, "complete_index expects a one-parameter field");
    PeelOutcome p = peel_outer(A);
    return p.order;
}

namespace {

// index over E_f((s)) of the rewritten unramified part, plus trace data
std::uint64_t inner_index_after_extension(const FiniteField& k, const KummerExt& ext,
                                          const std::vector<std::pair<Monomial, Monomial>>& unram,
                                          std::uint64_t n, std::string* gamma_str) {
    Poly omega = poly_mod(Poly::x(k), ext.h);
    std::vector<std::pair<ExtMono, ExtMono>> syms;
    auto rewrite = [&](const Monomial& m) {
        long long j = m.e[0];
        Poly c = poly_mulmod(Poly::constant({&k, m.c}),
                             ext_pow_signed(k, ext.h, omega, -static_cast<long long>(ext.a) * j), ext.h);
        require(!c.is_zero(), errc::internal, "zero coefficient after extension rewrite");
        return ExtMono{std::move(c), static_cast<long long>(ext.e_ram) * j};
    };
    for (const auto& [a, b] : unram) syms.emplace_back(rewrite(a), rewrite(b));
    Poly gamma = ext_peel_residue(k, ext.h, syms);
    if (gamma_str) *gamma_str = gamma.to_string("w");
    return ext_class_order(k, ext.h, gamma, n);
}

}  // namespace

std::uint64_t index_with_cyclic_twist(const TowerClass& A_unram, const Monomial& kummer_u,
                                      unsigned param_index) {
    const FiniteField& k = *A_unram.field.base;
    unsigned depth = A_unram.field.depth();
    require(depth >= 1, errc::invalid_input, "tower has no parameters");
    require(param_index == depth - 1, errc::precondition_violated,
            "the twist parameter must be the outermost one");
    require(kummer_u.c != 0, errc::zero_element, "kummer generator must be nonzero");
    require(depth < 2 || kummer_u.e[1] == 0, errc::precondition_violated,
            "kummer generator has to be a unit at the twist parameter");

    PeelOutcome p = peel_outer(A_unram);
    require(p.order == 1, errc::precondition_violated,
            "class is ramified at the twist parameter");

    long long u_inner = (depth >= 2) ? kummer_u.e[0] : 0;
    std::uint64_t d = monomial_class_order(k, kummer_u.c, u_inner, A_unram.n);
    if (depth == 1) return d;  // the reduced class lives over a finite field

    KummerExt ext = build_kummer(k, kummer_u.c, u_inner, A_unram.n);
    std::uint64_t inner = inner_index_after_extension(k, ext, p.unram, A_unram.n, nullptr);
    return d * inner;
}

TowerIndexResult tower_index(const TowerClass& A) {
    const FiniteField& k = *A.field.base;
    check_mu_n(k, A.n);
    TowerIndexResult out;
    unsigned depth = A.field.depth();
    if (depth == 0) return out;  // Br of a finite field is trivial

    PeelOutcome p = peel_outer(A);
    if (depth == 1) {
        PeelStep step;
        step.param = A.field.params[0];
        step.gamma = print_monomial(A, p.gamma);
        step.order = p.order;
        step.e_ram = 1;  // a constant residue class gives an unramified extension
        step.f_res = p.order;
        out.trace.push_back(std::move(step));
        out.index = p.order;
        return out;
    }

    KummerExt ext = build_kummer(k, p.gamma.c, p.gamma.e[0], A.n);
    require(ext.e_ram * ext.f == p.order, errc::internal, "extension degree disagrees with class order");

    PeelStep step1;
    step1.param = A.field.params[1];
    step1.gamma = print_monomial(A, p.gamma);
    step1.e_ram = ext.e_ram;
    step1.f_res = ext.f;
    step1.order = p.order;
    step1.ext_modulus = ext.h.to_string("w");
    {
        Poly omega = poly_mod(Poly::x(k), ext.h);
        Poly c0 = ext_pow_signed(k, ext.h, omega, -static_cast<long long>(ext.a));
        std::string cs = c0.to_string("w");
        std::string pw = ext.e_ram == 1 ? "s" : "s^" + std::to_string(ext.e_ram);
        step1.substitution = A.field.params[0] + " -> " + (c0.is_one() ? pw : "(" + cs + ")*" + pw);
    }
    out.trace.push_back(step1);

    std::string gamma2;
    std::uint64_t inner = inner_index_after_extension(k, ext, p.unram, A.n, &gamma2);
    PeelStep step2;
    step2.param = "s";
    step2.gamma = gamma2;
    step2.order = inner;
    step2.e_ram = inner;
    step2.f_res = 1;
    out.trace.push_back(std::move(step2));

    out.index = p.order * inner;
    return out;
}

// ---- text form --------------------------------------------------------------

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Monomial parse_monomial(const std::string& src, const TowerField& tf) {
    const FiniteField& k = *tf.base;
    Monomial m;
    m.c = 1;
    std::string body = strip(src);
    require(!body.empty(), errc::syntax_error, "empty monomial");
    bool negate = false;
    if (body.front() == '-') {
        negate = true;
        body = strip(body.substr(1));
    }
    for (std::string tok : split(body, '*')) {
        tok = strip(tok);
        require(!tok.empty(), errc::syntax_error, "empty factor in monomial");
        int which = -1;
        for (std::size_t i = 0; i < tf.params.size(); ++i)
            if (tok == tf.params[i] || tok.rfind(tf.params[i] + "^", 0) == 0) which = static_cast<int>(i);
        if (which >= 0) {
            const std::string& name = tf.params[static_cast<std::size_t>(which)];
            long long e = 1;
            if (tok.size() > name.size()) {
                std::string es = tok.substr(name.size() + 1);
                try {
                    e = std::stoll(es);
                } catch (const std::exception&) {
                    fail(errc::syntax_error, "bad exponent '" + es + "'");
                }
            }
            require(std::llabs(e) <= kMaxExp, errc::syntax_error, "exponent out of range");
            m.e[static_cast<std::size_t>(which)] += static_cast<int>(e);
        } else {
            FFElem c = k.parse_elem(tok);
            require(!c.is_zero(), errc::zero_element, "monomial coefficient must be nonzero");
            m.c = k.mul(m.c, c.v);
        }
    }
    if (negate) m.c = k.neg(m.c);
    require(m.c != 0, errc::zero_element, "monomial coefficient must be nonzero");
    return m;
}

}  // namespace

TowerClass parse_tower_class(const std::string& src) {
    auto parts = split(src, ';');
    require(parts.size() >= 3, errc::syntax_error, "tower class needs 'n; base=...; params=...'");
    std::uint64_t n = 0;
    try {
        n = std::stoull(strip(parts[0]));
    } catch (const std::exception&) {
        fail(errc::syntax_error, "bad modulus '" + strip(parts[0]) + "'");
    }
    std::string base_part = strip(parts[1]);
    require(base_part.rfind("base=", 0) == 0, errc::syntax_error, "expected 'base=GF(q)'");
    const FiniteField& k = parse_field(strip(base_part.substr(5)));
    std::string params_part = strip(parts[2]);
    require(params_part.rfind("params=", 0) == 0, errc::syntax_error, "expected 'params=t1,t2'");
    std::vector<std::string> params;
    for (const auto& p : split(params_part.substr(7), ',')) {
        std::string name = strip(p);
        if (!name.empty()) params.push_back(name);
    }
    TowerClass A(make_tower(k, params), n);
    for (std::size_t i = 3; i < parts.size(); ++i) {
        std::string p = strip(parts[i]);
        if (p.empty()) continue;
        require(p.front() == '(' && p.back() == ')', errc::syntax_error, "expected '(a , b)'");
        auto entries = split(p.substr(1, p.size() - 2), ',');
        require(entries.size() == 2, errc::syntax_error, "a symbol has exactly two entries");
        A.push(parse_monomial(entries[0], A.field), parse_monomial(entries[1], A.field));
    }
    return A;
}

std::string print_monomial(const TowerClass& A, const Monomial& m) {
    const FiniteField& k = *A.field.base;
    std::string out;
    for (std::size_t i = 0; i < A.field.params.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += A.field.params[i];
        if (m.e[i] != 1) out += "^" + std::to_string(m.e[i]);
    }
    std::string cs = k.to_string({&k, m.c});
    if (out.empty()) return cs;
    if (cs == "1") return out;
    return cs + "*" + out;
}

std::string print_tower_class(const TowerClass& A) {
    std::string out = std::to_string(A.n) + "; base=" + A.field.base->name() + "; params=";
    for (std::size_t i = 0; i < A.field.params.size(); ++i) {
        if (i) out += ",";
        out += A.field.params[i];
    }
    for (const auto& [a, b] : A.symbols)
        out += "; (" + print_monomial(A, a) + " , " + print_monomial(A, b) + ")";
    return out;
}

}  // namespace brauer
