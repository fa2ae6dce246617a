#include "brauer/certificate.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace brauer {

// ---- bivariate helpers ------------------------------------------------------

bool BiPoly::is_zero() const {
    for (const auto& p : c)
        if (!p.is_zero()) return false;
    return true;
}

void BiPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

namespace {

BiPoly bp_const(const FiniteField& k, Poly p) {
    BiPoly r{&k, {std::move(p)}};
    r.trim();
    return r;
}

BiPoly bp_outer(const FiniteField& k) { return BiPoly{&k, {Poly::zero(k), Poly::constant(k.one())}}; }

BiPoly bp_add(const BiPoly& a, const BiPoly& b) {
    const FiniteField& k = *a.k;
    BiPoly r{&k, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), Poly::zero(k));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        Poly s = Poly::zero(k);
        if (i < a.c.size()) s = s + a.c[i];
        if (i < b.c.size()) s = s + b.c[i];
        r.c[i] = s;
    }
    r.trim();
    return r;
}

BiPoly bp_neg(const BiPoly& a) {
    BiPoly r = a;
    for (auto& p : r.c) p = -p;
    return r;
}

BiPoly bp_mul(const BiPoly& a, const BiPoly& b) {
    const FiniteField& k = *a.k;
    BiPoly r{&k, {}};
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Poly::zero(k));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
}

BiRat br_make(BiPoly num, BiPoly den) {
    require(!den.is_zero(), errc::division_by_zero_polynomial, "zero denominator in bivariate expression");
    return BiRat{std::move(num), std::move(den)};
}

BiRat br_const(const FiniteField& k, Poly p) { return br_make(bp_const(k, std::move(p)), bp_const(k, Poly::constant(k.one()))); }
BiRat br_add(const BiRat& x, const BiRat& y) { return br_make(bp_add(bp_mul(x.num, y.den), bp_mul(y.num, x.den)), bp_mul(x.den, y.den)); }
BiRat br_neg(const BiRat& x) { return BiRat{bp_neg(x.num), x.den}; }
BiRat br_sub(const BiRat& x, const BiRat& y) { return br_add(x, br_neg(y)); }
BiRat br_mul(const BiRat& x, const BiRat& y) { return br_make(bp_mul(x.num, y.num), bp_mul(x.den, y.den)); }

BiRat br_div(const BiRat& x, const BiRat& y) {
    require(!y.num.is_zero(), errc::division_by_zero_polynomial, "division by a zero bivariate expression");
    return br_make(bp_mul(x.num, y.den), bp_mul(x.den, y.num));
}

BiRat br_pow(BiRat base, std::uint64_t e) {
    const FiniteField& k = *base.num.k;
    BiRat r = br_const(k, Poly::constant(k.one()));
    while (e > 0) {
        if (e & 1) r = br_mul(r, base);
        base = br_mul(base, base);
        e >>= 1;
    }
    return r;
}

long bp_val(const BiPoly& p) {
    for (std::size_t i = 0; i < p.c.size(); ++i)
        if (!p.c[i].is_zero()) return static_cast<long>(i);
    fail(errc::zero_function, "outer valuation of zero");
}

std::string wrap_if(const std::string& s, bool need) { return need ? "(" + s + ")" : s; }

std::string bp_to_string(const BiPoly& p, const std::string& outer, const std::string& inner) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i].is_zero()) continue;
        std::string term;
        std::string cs = p.c[i].to_string(inner);
        if (i == 0) {
            term = cs;
        } else {
            std::string os = (i == 1) ? outer : outer + "^" + std::to_string(i);
            term = (cs == "1") ? os : wrap_if(cs, cs.find(' ') != std::string::npos || p.c[i].deg() > 0) + "*" + os;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

}  // namespace

std::string BiRat::to_string(const std::string& outer, const std::string& inner) const {
    std::string ns = bp_to_string(num, outer, inner);
    bool den_one = den.c.size() == 1 && den.c[0].is_one();
    if (den_one) return ns;
    std::string ds = bp_to_string(den, outer, inner);
    return wrap_if(ns, true) + "/" + wrap_if(ds, true);
}

long val_outer(const BiRat& f) {
    require(!f.num.is_zero(), errc::zero_function, "outer valuation of the zero function");
    return bp_val(f.num) - bp_val(f.den);
}

RatFunc residue_outer(const BiRat& f) {
    require(val_outer(f) == 0, errc::not_a_unit, "outer residue of a non-unit");
    return RatFunc(f.num.c[static_cast<std::size_t>(bp_val(f.num))],
                   f.den.c[static_cast<std::size_t>(bp_val(f.den))]);
}

// ---- bivariate parser -------------------------------------------------------

namespace {

struct BiParser {
    const std::string& s;
    const FiniteField& k;
    std::string outer, inner;
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
            if (v > (1ull << 40)) err("integer literal too large");
            ++pos;
        }
        return v;
    }

    bool at_ident(const std::string& name) {
        skip_ws();
        if (name.empty() || s.compare(pos, name.size(), name) != 0) return false;
        std::size_t end = pos + name.size();
        if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_')) return false;
        return true;
    }

    BiRat base() {
        skip_ws();
        if (eat('(')) {
            BiRat e = expr();
            if (!eat(')')) err("expected ')'");
            return e;
        }
        if (at_ident(inner)) {
            pos += inner.size();
            return br_const(k, Poly::x(k));
        }
        if (at_ident(outer)) {
            pos += outer.size();
            return br_make(bp_outer(k), bp_const(k, Poly::constant(k.one())));
        }
        if (at_ident("g")) {
            pos += 1;
            return br_const(k, Poly::constant(k.generator()));
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            return br_const(k, Poly::constant(k.from_int(static_cast<long long>(integer()))));
        err("expected '" + inner + "', '" + outer + "', 'g', an integer, or '('");
    }

    BiRat factor() {
        BiRat b = base();
        skip_ws();
        if (eat('^')) return br_pow(b, integer());
        return b;
    }

    BiRat unary() {
        if (eat('-')) return br_neg(factor());
        return factor();
    }

    BiRat term() {
        BiRat r = unary();
        while (true) {
            skip_ws();
            if (eat('*')) {
                r = br_mul(r, unary());
            } else if (peek() == '/') {
                ++pos;
                r = br_div(r, unary());
            } else {
                break;
            }
        }
        return r;
    }

    BiRat expr() {
        BiRat r = term();
        while (true) {
            skip_ws();
            if (eat('+')) {
                r = br_add(r, term());
            } else if (peek() == '-') {
                ++pos;
                r = br_sub(r, term());
            } else {
                break;
            }
        }
        return r;
    }

    BiRat run() {
        BiRat r = expr();
        skip_ws();
        if (pos != s.size()) err("unexpected trailing input");
        return r;
    }
};

}  // namespace

BiRat parse_birat(const std::string& src, const FiniteField& k, const std::string& outer,
                  const std::string& inner) {
    BiParser p{src, k, outer, inner};
    return p.run();
}

// ---- construction -----------------------------------------------------------

namespace {

void check_mu(const FiniteField& k, std::uint64_t n) {
    require(n >= 1 && (k.q() - 1) % n == 0, errc::roots_of_unity_missing,
            "mu_" + std::to_string(n) + " not contained in " + k.name());
}

std::string relations_text(const FiniteField& k, std::uint64_t n, const std::string& a, const std::string& b) {
    std::string zeta = k.to_string({&k, k.pow(k.generator().v, (k.q() - 1) / n)});
    return "x^" + std::to_string(n) + " = " + a + ", y^" + std::to_string(n) + " = " + b +
           ", x*y = " + zeta + "*y*x";
}

CertStep unit_step(std::string elem) {
    CertStep s;
    s.kind = StepKind::unit_check;
    s.elem = std::move(elem);
    s.expect = 0;
    return s;
}

CertStep deg_step(std::string elem, std::uint64_t n, std::uint64_t expect) {
    CertStep s;
    s.kind = StepKind::degree_check;
    s.elem = std::move(elem);
    s.n = n;
    s.expect = expect;
    return s;
}

CertStep twist_step(std::string param, std::string elem, std::uint64_t d) {
    CertStep s;
    s.kind = StepKind::twist;
    s.param = std::move(param);
    s.elem = std::move(elem);
    s.expect = d;
    return s;
}

CertStep red_step(std::string var, std::string expr) {
    CertStep s;
    s.kind = StepKind::reduction;
    s.subst_var = std::move(var);
    s.subst_expr = std::move(expr);
    return s;
}

CertStep base_step(std::string cls, std::uint64_t expect) {
    CertStep s;
    s.kind = StepKind::base_index;
    s.base_class = std::move(cls);
    s.expect = expect;
    return s;
}

CertStep total_step(std::uint64_t degree, std::uint64_t expect) {
    CertStep s;
    s.kind = StepKind::total;
    s.n = degree;
    s.expect = expect;
    return s;
}

SubfieldPresentation make_subfield(const FiniteField& k, std::uint64_t total_degree,
                                   std::vector<std::tuple<std::string, std::uint64_t, std::string>> gens) {
    SubfieldPresentation sub;
    std::vector<std::uint64_t> factors;
    for (auto& [var, exp, rhs] : gens) {
        factors.push_back(exp);
        if (exp <= 1) continue;
        sub.generators.push_back(SubfieldPresentation::RadicalGen{var, exp, rhs});
        sub.galois_action.push_back(CyclicCharacter{&k, total_degree, total_degree / exp});
    }
    sub.galois_group = AbelianGroup::from_factors(factors);
    return sub;
}

}  // namespace

BuildResult build_thm45(const ConstructionSpec& spec) {
    require(spec.kind == "thm45", errc::invalid_input, "spec kind mismatch");
    const FiniteField& k = *spec.k;
    auto [l1, l2, l3, l4] = spec.orders;
    std::uint64_t n1 = l1 * l2, m = l3 * l4, n = n1 * m;
    check_mu(k, n);
    require(!spec.lambda.is_zero(), errc::order_condition_failed, "lambda must be a unit");
    if (n1 > 1)
        require(root_degree(k, spec.lambda, n1) == n1, errc::order_condition_failed,
                "lambda does not generate a degree-" + std::to_string(n1) + " radical extension");

    std::string ls = k.to_string(spec.lambda);

    DivisionCertificate cert;
    cert.kind = "thm45";
    cert.field = &k;
    cert.degree = n;
    cert.orders = spec.orders;
    cert.lambda = spec.lambda.v;
    cert.a = 0;
    cert.outer_var = "p";
    cert.inner_var = "t";
    cert.base_var = "s";

    auto parse2 = [&](const std::string& src) { return parse_birat(src, k, "p", "t"); };
    cert.factors.push_back({parse2("t"), parse2("p - " + ls + "*t"), n1});
    cert.factors.push_back({parse2("t + 1"), parse2("p"), m});
    cert.twist_factor = 2;
    cert.reduce_factor = 1;

    std::string subst = (m == 1) ? "s - 1" : "s^" + std::to_string(m) + " - 1";
    RatFunc base_a = parse_rat(subst, k, "s");
    std::string base_class;
    if (n1 == 1) {
        base_class = "1";
    } else {
        base_class = std::to_string(n1) + "; (" + base_a.to_string("s") + ", " + ls + ")";
    }

    cert.steps.push_back(unit_step("t"));
    cert.steps.push_back(unit_step(cert.factors[0].b.to_string("p", "t")));
    cert.steps.push_back(deg_step("t + 1", m, m));
    cert.steps.push_back(twist_step("p", "t + 1", m));
    cert.steps.push_back(red_step("t", base_a.to_string("s")));
    cert.steps.push_back(base_step(base_class, n1));
    cert.steps.push_back(total_step(n, n));

    AlgebraPresentation alg;
    alg.field_line = k.name() + "((p))(t)";
    alg.degree = n;
    if (n1 > 1)
        alg.factors.push_back({"t", "p - " + ls + "*t", n1, relations_text(k, n1, "t", "p - " + ls + "*t")});
    if (m > 1) alg.factors.push_back({"t + 1", "p", m, relations_text(k, m, "t + 1", "p")});

    SubfieldPresentation sub = make_subfield(
        k, n,
        {{"y", l1, "t"}, {"z", l2, "p - " + ls + "*t"}, {"r", l3, "t + 1"}, {"s", l4, "p"}});

    return BuildResult{std::move(alg), std::move(sub), std::move(cert)};
}

BuildResult build_thm42(const ConstructionSpec& spec) {
    require(spec.kind == "thm42", errc::invalid_input, "spec kind mismatch");
    const FiniteField& k = *spec.k;
    auto [o1, o2, o3, o4] = spec.orders;
    std::uint64_t m1 = o1 * o2, m2 = o3 * o4, n = m1 * m2;
    check_mu(k, n);
    if (m1 > 1) {
        require(!spec.a.is_zero(), errc::order_condition_failed, "a must be a unit");
        require(k.pow(spec.a.v, m1) != 1, errc::order_condition_failed,
                "a^(n1*n2) = 1 collapses the degree check");
    }
    if (m2 > 1) {
        require(!spec.lambda.is_zero(), errc::order_condition_failed, "lambda must be a unit");
        require(power_class_order(k, spec.lambda, m2) == m2, errc::order_condition_failed,
                "lambda has order < " + std::to_string(m2) + " modulo " + std::to_string(m2) + "-th powers");
    }

    std::string ls = k.to_string(spec.lambda);
    std::string am = k.to_string({&k, k.pow(spec.a.v, m1)});

    DivisionCertificate cert;
    cert.kind = "thm42";
    cert.field = &k;
    cert.degree = n;
    cert.orders = spec.orders;
    cert.lambda = spec.lambda.v;
    cert.a = spec.a.v;
    cert.outer_var = "t";
    cert.inner_var = "x";
    cert.base_var = "y";

    auto parse2 = [&](const std::string& src) { return parse_birat(src, k, "t", "x"); };
    std::string unit1 = "(x - 1)/(x - " + am + ")";
    cert.factors.push_back({parse2("t*x/(t*x - 1)"), parse2(unit1), m1});
    cert.factors.push_back({parse2("x/(x - 1)"), parse2("(x - " + ls + ")/(x - 1)"), m2});
    cert.twist_factor = 1;
    cert.reduce_factor = 2;

    // x = (a^{m1} y^{m1} - 1)/(y^{m1} - 1); degenerates to a renaming for m1 = 1
    RatFunc y = RatFunc::from_poly(Poly::x(k));
    RatFunc subst = (m1 == 1) ? y
                              : (RatFunc::constant({&k, k.pow(spec.a.v, m1)}) * y.pow(static_cast<long long>(m1)) -
                                 RatFunc::constant(k.one())) /
                                    (y.pow(static_cast<long long>(m1)) - RatFunc::constant(k.one()));

    // image of the reduced factor over F_q(y)
    RatFunc r1 = substitute(parse_rat("x/(x - 1)", k, "x"), subst);
    RatFunc r2 = substitute(parse_rat("(x - " + ls + ")/(x - 1)", k, "x"), subst);
    std::string base_class;
    if (m2 == 1) {
        base_class = "1";
    } else {
        base_class = std::to_string(m2) + "; (" + r1.to_string("y") + ", " + r2.to_string("y") + ")";
    }

    cert.steps.push_back(unit_step("x/(x - 1)"));
    cert.steps.push_back(unit_step("(x - " + ls + ")/(x - 1)"));
    cert.steps.push_back(unit_step(unit1));
    cert.steps.push_back(deg_step(unit1, m1, m1));
    cert.steps.push_back(twist_step("t*x/(t*x - 1)", unit1, m1));
    cert.steps.push_back(red_step("x", subst.to_string("y")));
    cert.steps.push_back(base_step(base_class, m2));
    cert.steps.push_back(total_step(n, n));

    AlgebraPresentation alg;
    alg.field_line = "fraction field of " + k.name() + "[[s, t]], presented in the chart s = t^2*x";
    alg.degree = n;
    std::string d1a = "s/(s - t)", d1b = "(s - t^2)/(s - " + am + "*t^2)";
    std::string d2a = "s/(s - t^2)", d2b = "(s - " + ls + "*t^2)/(s - t^2)";
    if (m1 > 1) alg.factors.push_back({d1a, d1b, m1, relations_text(k, m1, d1a, d1b)});
    if (m2 > 1) alg.factors.push_back({d2a, d2b, m2, relations_text(k, m2, d2a, d2b)});

    SubfieldPresentation sub = make_subfield(k, n,
                                             {{"u", o2, d1a}, {"v", o1, d1b}, {"w", o4, d2a}, {"z", o3, d2b}});

    return BuildResult{std::move(alg), std::move(sub), std::move(cert)};
}

// ---- verification -----------------------------------------------------------

namespace {

[[noreturn]] void step_fail(std::size_t idx, const std::string& what, std::uint64_t got, std::uint64_t want) {
    throw error(errc::step_failed, "step " + std::to_string(idx + 1) + ": " + what + " (recomputed " +
                                       std::to_string(got) + ", certificate says " + std::to_string(want) + ")");
}

}  // namespace

VerifiedIndex verify_certificate(const DivisionCertificate& cert) {
    const FiniteField& k = *cert.field;
    require(!cert.factors.empty(), errc::invalid_input, "certificate has no algebra factors");
    require(cert.twist_factor >= 1 && cert.twist_factor <= cert.factors.size() &&
                cert.reduce_factor >= 1 && cert.reduce_factor <= cert.factors.size() &&
                cert.twist_factor != cert.reduce_factor,
            errc::invalid_input, "certificate factor roles are inconsistent");
    std::uint64_t deg_product = 1;
    for (const auto& f : cert.factors) {
        check_mu(k, f.n);
        require(!f.a.num.is_zero() && !f.b.num.is_zero(), errc::zero_function, "zero entry in a factor");
        deg_product *= f.n;
    }
    require(deg_product == cert.degree, errc::invalid_input, "factor degrees do not multiply to the algebra degree");

    const auto& twist = cert.factors[cert.twist_factor - 1];
    const auto& reduce = cert.factors[cert.reduce_factor - 1];

    VerifiedIndex out;
    unsigned units_checked = 0;
    bool deg_checked = false;
    std::uint64_t deg_checked_value = 0;
    std::uint64_t twist_product = 1;
    bool twisted = false, reduced = false;
    std::uint64_t base_index = 1;
    bool base_done = false;
    GlobalClass reduced_class(k, 1);
    auto trace = [&](const std::string& line) { out.trace.push_back(line); };

    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const CertStep& st = cert.steps[i];
        switch (st.kind) {
            case StepKind::unit_check: {
                BiRat e = parse_birat(st.elem, k, cert.outer_var, cert.inner_var);
                long v = val_outer(e);
                if (v != static_cast<long>(st.expect))
                    step_fail(i, "unit check on " + st.elem, static_cast<std::uint64_t>(v), st.expect);
                ++units_checked;
                trace("unit-check " + st.elem + " : valuation 0 at (" + cert.outer_var + ")");
                break;
            }
            case StepKind::degree_check: {
                RatFunc e = parse_rat(st.elem, k, cert.inner_var);
                std::uint64_t got = class_order_global(e, st.n);
                if (got != st.expect) step_fail(i, "radical degree of " + st.elem, got, st.expect);
                deg_checked = true;
                deg_checked_value = got;
                trace("degree-check " + st.elem + " : order " + std::to_string(got) + " mod " +
                      std::to_string(st.n) + "-th powers over the residue field");
                break;
            }
            case StepKind::twist: {
                require(units_checked >= 2, errc::step_failed,
                        "step " + std::to_string(i + 1) + ": twist before its unit checks");
                require(deg_checked, errc::step_failed,
                        "step " + std::to_string(i + 1) + ": twist before its degree check");
                BiRat param = parse_birat(st.param, k, cert.outer_var, cert.inner_var);
                long pv = val_outer(param);
                if (pv != 1) step_fail(i, "twist parameter valuation", static_cast<std::uint64_t>(pv), 1);
                BiRat u = parse_birat(st.elem, k, cert.outer_var, cert.inner_var);
                if (val_outer(u) != 0) step_fail(i, "twist unit valuation", static_cast<std::uint64_t>(val_outer(u)), 0);
                std::uint64_t d = class_order_global(residue_outer(u), twist.n);
                if (d != st.expect) step_fail(i, "cyclic twist degree", d, st.expect);
                if (d != deg_checked_value) step_fail(i, "twist degree vs degree check", d, deg_checked_value);
                // the factor being reduced must be unramified at the parameter
                for (const BiRat* entry : {&reduce.a, &reduce.b})
                    if (val_outer(*entry) != 0)
                        step_fail(i, "reduced factor is ramified at the twist parameter",
                                  static_cast<std::uint64_t>(val_outer(*entry)), 0);
                twist_product *= d;
                twisted = true;
                trace("twist by degree-" + std::to_string(d) + " cyclic extension at parameter " + st.param);
                break;
            }
            case StepKind::reduction: {
                require(st.subst_var == cert.inner_var, errc::invalid_input,
                        "reduction substitutes the wrong variable");
                RatFunc subst = parse_rat(st.subst_expr, k, cert.base_var);
                GlobalClass img(k, reduce.n);
                if (reduce.n > 1) {
                    RatFunc ra = substitute(residue_outer(reduce.a), subst);
                    RatFunc rb = substitute(residue_outer(reduce.b), subst);
                    img.push(ra, rb);
                }
                reduced_class = img;
                reduced = true;
                trace("reduce to the residue field, " + st.subst_var + " -> " + st.subst_expr);
                break;
            }
            case StepKind::base_index: {
                require(reduced, errc::step_failed,
                        "step " + std::to_string(i + 1) + ": base index before the reduction step");
                GlobalClass stored = parse_global_class(st.base_class, k, cert.base_var);
                if (stored.n != reduced_class.n)
                    step_fail(i, "base class degree", stored.n, reduced_class.n);
                if (!same_class(reduced_class, stored))
                    throw error(errc::step_failed,
                                "step " + std::to_string(i + 1) + ": stored base class differs from the reduction");
                std::uint64_t got = global_index(stored);
                if (got != st.expect) step_fail(i, "base index", got, st.expect);
                base_index = got;
                base_done = true;
                trace("base index over " + k.name() + "(" + cert.base_var + ") = " + std::to_string(got));
                break;
            }
            case StepKind::total: {
                require(twisted && base_done, errc::step_failed,
                        "step " + std::to_string(i + 1) + ": total before twist and base steps");
                std::uint64_t idx = twist_product * base_index;
                if (st.n != cert.degree) step_fail(i, "total degree", st.n, cert.degree);
                if (idx != st.expect) step_fail(i, "total index", idx, st.expect);
                out.index = idx;
                out.division = (idx == cert.degree);
                trace("index " + std::to_string(idx) + " of degree " + std::to_string(cert.degree) +
                      (out.division ? " : division" : " : not division"));
                break;
            }
        }
    }
    require(twisted && reduced && base_done, errc::invalid_input, "certificate is missing mandatory steps");
    if (out.index == 1 && !out.division) {
        out.index = twist_product * base_index;
        out.division = (out.index == cert.degree);
    }
    return out;
}

// ---- serialization ----------------------------------------------------------

namespace {

std::string strip_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_bar(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == '|') {
            out.push_back(strip_copy(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip_copy(cur));
    return out;
}

std::string kv_value(const std::string& field, const std::string& key) {
    require(field.rfind(key + "=", 0) == 0, errc::syntax_error,
            "expected '" + key + "=...', got '" + field + "'");
    return strip_copy(field.substr(key.size() + 1));
}

std::uint64_t to_u64(const std::string& s) {
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        fail(errc::syntax_error, "bad integer '" + s + "'");
    }
}

std::uint64_t kv_u64(const std::string& field, const std::string& key) {
    return to_u64(kv_value(field, key));
}

std::string step_kind_tag(StepKind k) {
    switch (k) {
        case StepKind::unit_check: return "UNIT";
        case StepKind::degree_check: return "DEG";
        case StepKind::twist: return "TWIST";
        case StepKind::reduction: return "RED";
        case StepKind::base_index: return "BASE";
        case StepKind::total: return "TOTAL";
    }
    return "?";
}

}  // namespace

std::string serialize_certificate(const DivisionCertificate& cert) {
    std::ostringstream out;
    out << "CERT/1\n";
    out << "kind=" << cert.kind << "\n";
    out << "field=" << cert.field->name() << "\n";
    out << "degree=" << cert.degree << "\n";
    out << "orders=" << cert.orders[0] << "," << cert.orders[1] << "," << cert.orders[2] << ","
        << cert.orders[3] << "\n";
    out << "lambda=" << cert.field->to_string({cert.field, cert.lambda}) << "\n";
    out << "a=" << cert.field->to_string({cert.field, cert.a}) << "\n";
    out << "vars=" << cert.outer_var << "," << cert.inner_var << "," << cert.base_var << "\n";
    for (const auto& f : cert.factors)
        out << "factor=" << f.a.to_string(cert.outer_var, cert.inner_var) << " | "
            << f.b.to_string(cert.outer_var, cert.inner_var) << " | " << f.n << "\n";
    out << "twist=" << cert.twist_factor << "\n";
    out << "reduce=" << cert.reduce_factor << "\n";
    for (const auto& st : cert.steps) {
        out << "step=" << step_kind_tag(st.kind);
        switch (st.kind) {
            case StepKind::unit_check:
                out << " | elem=" << st.elem << " | expect=" << st.expect;
                break;
            case StepKind::degree_check:
                out << " | n=" << st.n << " | expect=" << st.expect << " | elem=" << st.elem;
                break;
            case StepKind::twist:
                out << " | expect=" << st.expect << " | param=" << st.param << " | elem=" << st.elem;
                break;
            case StepKind::reduction:
                out << " | var=" << st.subst_var << " | expr=" << st.subst_expr;
                break;
            case StepKind::base_index:
                out << " | expect=" << st.expect << " | class=" << st.base_class;
                break;
            case StepKind::total:
                out << " | degree=" << st.n << " | expect=" << st.expect;
                break;
        }
        out << "\n";
    }
    return out.str();
}

DivisionCertificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        std::string t = strip_copy(line);
        if (!t.empty()) lines.push_back(t);
    }
    require(!lines.empty() && lines[0] == "CERT/1", errc::syntax_error, "missing CERT/1 header");
    DivisionCertificate cert;
    std::size_t i = 1;
    auto expect_kv = [&](const std::string& key) {
        require(i < lines.size(), errc::syntax_error, "truncated certificate");
        return kv_value(lines[i++], key);
    };
    cert.kind = expect_kv("kind");
    cert.field = &parse_field(expect_kv("field"));
    const FiniteField& k = *cert.field;
    cert.degree = to_u64(expect_kv("degree"));
    {
        std::istringstream os(expect_kv("orders"));
        std::string item;
        std::size_t j = 0;
        while (std::getline(os, item, ',') && j < 4) cert.orders[j++] = to_u64(strip_copy(item));
        require(j == 4, errc::syntax_error, "orders needs four entries");
    }
    cert.lambda = k.parse_elem(expect_kv("lambda")).v;
    cert.a = k.parse_elem(expect_kv("a")).v;
    {
        std::istringstream vs(expect_kv("vars"));
        std::string item;
        std::vector<std::string> vars;
        while (std::getline(vs, item, ',')) vars.push_back(strip_copy(item));
        require(vars.size() == 3, errc::syntax_error, "vars needs outer,inner,base");
        cert.outer_var = vars[0];
        cert.inner_var = vars[1];
        cert.base_var = vars[2];
    }
    while (i < lines.size() && lines[i].rfind("factor=", 0) == 0) {
        auto fields = split_bar(lines[i].substr(7));
        require(fields.size() == 3, errc::syntax_error, "factor line needs 'a | b | n'");
        DivisionCertificate::Factor f{parse_birat(fields[0], k, cert.outer_var, cert.inner_var),
                                      parse_birat(fields[1], k, cert.outer_var, cert.inner_var),
                                      to_u64(fields[2])};
        cert.factors.push_back(std::move(f));
        ++i;
    }
    cert.twist_factor = static_cast<unsigned>(to_u64(expect_kv("twist")));
    cert.reduce_factor = static_cast<unsigned>(to_u64(expect_kv("reduce")));
    while (i < lines.size()) {
        require(lines[i].rfind("step=", 0) == 0, errc::syntax_error, "expected a step line");
        auto fields = split_bar(lines[i].substr(5));
        require(!fields.empty(), errc::syntax_error, "empty step");
        CertStep st;
        const std::string& tag = fields[0];
        if (tag == "UNIT") {
            st.kind = StepKind::unit_check;
            st.elem = kv_value(fields.at(1), "elem");
            st.expect = kv_u64(fields.at(2), "expect");
        } else if (tag == "DEG") {
            st.kind = StepKind::degree_check;
            st.n = kv_u64(fields.at(1), "n");
            st.expect = kv_u64(fields.at(2), "expect");
            st.elem = kv_value(fields.at(3), "elem");
        } else if (tag == "TWIST") {
            st.kind = StepKind::twist;
            st.expect = kv_u64(fields.at(1), "expect");
            st.param = kv_value(fields.at(2), "param");
            st.elem = kv_value(fields.at(3), "elem");
        } else if (tag == "RED") {
            st.kind = StepKind::reduction;
            st.subst_var = kv_value(fields.at(1), "var");
            st.subst_expr = kv_value(fields.at(2), "expr");
        } else if (tag == "BASE") {
            st.kind = StepKind::base_index;
            st.expect = kv_u64(fields.at(1), "expect");
            st.base_class = kv_value(fields.at(2), "class");
        } else if (tag == "TOTAL") {
            st.kind = StepKind::total;
            st.n = kv_u64(fields.at(1), "degree");
            st.expect = kv_u64(fields.at(2), "expect");
        } else {
            fail(errc::syntax_error, "unknown step tag '" + tag + "'");
        }
        cert.steps.push_back(std::move(st));
        ++i;
    }
    return cert;
}

std::string render_presentation(const AlgebraPresentation& alg, const SubfieldPresentation& sub) {
    std::ostringstream out;
    out << "algebra over " << alg.field_line << ", degree " << alg.degree << "\n";
    for (std::size_t i = 0; i < alg.factors.size(); ++i) {
        const auto& f = alg.factors[i];
        out << "  D" << (i + 1) << " = (" << f.a << " , " << f.b << ")_" << f.n << "\n";
        out << "       " << f.relations << "\n";
    }
    if (alg.factors.empty()) out << "  trivial algebra\n";
    out << "maximal subfield generators:\n";
    for (const auto& g : sub.generators)
        out << "  " << g.var << "^" << g.exp << " = " << g.rhs << "\n";
    if (sub.generators.empty()) out << "  (trivial extension)\n";
    out << "galois group: ";
    if (sub.galois_group.invariant_factors.empty()) {
        out << "trivial\n";
    } else {
        for (std::size_t i = 0; i < sub.galois_group.invariant_factors.size(); ++i) {
            if (i) out << " x ";
            out << "C" << sub.galois_group.invariant_factors[i];
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace brauer
