#include "brauer/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace brauer {

namespace {

void check_mu_n(const FiniteField& k, std::uint64_t n) {
    require(n >= 1 && (k.q() - 1) % n == 0, errc::roots_of_unity_missing,
            "mu_" + std::to_string(n) + " not contained in " + k.name());
}

// |kappa(v)| as u64, guarded
std::uint64_t residue_field_size(const Place& v) {
    const FiniteField& k = v.field();
    unsigned d = v.degree();
    require(static_cast<double>(d) * std::log2(static_cast<double>(k.q())) < 63.0, errc::bound_exceeded,
            "residue field too large for exact index arithmetic");
    std::uint64_t s = 1;
    for (unsigned i = 0; i < d; ++i) s *= k.q();
    return s;
}

Poly one_mod(const Place& v) {
    return Poly::constant(v.field().one());
}

// residue^((Q-1)/n) lies in mu_n of the base field; return its exponent j
// with residue^((Q-1)/n) = zeta^j for zeta = g^((q-1)/n).
std::uint64_t invariant_of_residue(const Poly& r, const Place& v, std::uint64_t n) {
    const FiniteField& k = v.field();
    check_mu_n(k, n);
    if (n == 1) return 0;
    std::uint64_t Q = residue_field_size(v);
    Poly y = v.is_infinity() ? Poly::constant({&k, k.pow(r.coeff(0).v, (Q - 1) / n)})
                             : poly_powmod(r, (Q - 1) / n, v.poly());
    require(y.deg() <= 0, errc::internal, "n-th power residue did not land in the base field");
    require(!y.is_zero(), errc::internal, "residue class of a non-unit");
    std::uint64_t c = y.coeff(0).v;
    std::uint64_t d = k.dlog(c);
    std::uint64_t step = (k.q() - 1) / n;
    require(d % step == 0, errc::internal, "value not an n-th root of unity");
    return (d / step) % n;
}

}  // namespace

SymbolAlg::SymbolAlg(RatFunc a_, RatFunc b_, std::uint64_t n_) : a(std::move(a_)), b(std::move(b_)), n(n_) {
    require(!a.is_zero() && !b.is_zero(), errc::zero_function, "symbol entries must be nonzero");
    check_mu_n(a.field(), n);
}

GlobalClass::GlobalClass(const FiniteField& k, std::uint64_t n_) : field(&k), n(n_) { check_mu_n(k, n_); }

void GlobalClass::push(RatFunc a, RatFunc b) { symbols.emplace_back(std::move(a), std::move(b), n); }

GlobalClass GlobalClass::opposite() const {
    GlobalClass out(*field, n);
    for (const auto& s : symbols) out.push(s.b, s.a);
    return out;
}

Poly residue_symbol(const SymbolAlg& s, const Place& v, TameSign sign) {
    long va = valuation(s.a, v);
    long vb = valuation(s.b, v);
    RatFunc u = s.a.pow(vb) / s.b.pow(va);
    if (sign == TameSign::signed_tame && (va % 2 != 0) && (vb % 2 != 0))
        u = -u;
    return residue_at(u, v);
}

Poly class_residue(const GlobalClass& A, const Place& v, TameSign sign) {
    const FiniteField& k = *A.field;
    Poly r = one_mod(v);
    for (const auto& s : A.symbols) {
        Poly rs = residue_symbol(s, v, sign);
        r = v.is_infinity() ? Poly::constant(k.mul(r.coeff(0), rs.coeff(0)))
                            : poly_mulmod(r, rs, v.poly());
    }
    return r;
}

namespace {

std::vector<Place> support(const GlobalClass& A) {
    std::vector<Place> places;
    auto add_factors = [&](const Poly& p) {
        for (const auto& [f, mult] : factor(p).factors) {
            Place v = Place::finite(f);
            if (std::find(places.begin(), places.end(), v) == places.end()) places.push_back(v);
        }
    };
    for (const auto& s : A.symbols) {
        add_factors(s.a.num());
        add_factors(s.a.den());
        add_factors(s.b.num());
        add_factors(s.b.den());
    }
    places.push_back(Place::infinity(*A.field));
    std::sort(places.begin(), places.end(), Place::canonical_less);
    return places;
}

}  // namespace

std::vector<LocalDatum> ramification_divisor(const GlobalClass& A) {
    std::vector<LocalDatum> out;
    for (const Place& v : support(A)) {
        Poly r = class_residue(A, v);
        std::uint64_t inv = invariant_of_residue(r, v, A.n);
        if (inv == 0) continue;
        std::uint64_t idx = A.n / std::gcd(A.n, inv);
        out.push_back(LocalDatum{v, r, inv, idx});
    }
    return out;
}

std::uint64_t local_invariant(const GlobalClass& A, const Place& v) {
    return invariant_of_residue(class_residue(A, v), v, A.n);
}

std::uint64_t local_index(const GlobalClass& A, const Place& v) {
    std::uint64_t inv = local_invariant(A, v);
    return A.n / std::gcd(A.n, inv);
}

std::uint64_t global_index(const GlobalClass& A) {
    std::uint64_t g = 1;
    for (const auto& d : ramification_divisor(A)) g = std::lcm(g, d.index);
    return g;
}

bool reciprocity_check(const GlobalClass& A, TameSign sign) {
    check_mu_n(*A.field, A.n);
    std::uint64_t sum = 0;
    for (const Place& v : support(A)) {
        Poly r = class_residue(A, v, sign);
        sum = (sum + invariant_of_residue(r, v, A.n)) % A.n;
    }
    return sum % A.n == 0;
}

Place hasse_witness(const GlobalClass& A) {
    std::uint64_t n = A.n;
    bool prime_power = false;
    for (std::uint64_t l = 2; l <= n; ++l) {
        if (n % l == 0) {
            std::uint64_t t = n;
            while (t % l == 0) t /= l;
            prime_power = (t == 1);
            break;
        }
    }
    require(prime_power, errc::not_prime_power,
            "hasse witness requires a prime-power degree, got n = " + std::to_string(n));
    auto ram = ramification_divisor(A);
    std::uint64_t g = 1;
    for (const auto& d : ram) g = std::lcm(g, d.index);
    if (g == 1) return Place::infinity(*A.field);
    for (const auto& d : ram)
        if (d.index == g) return d.place;
    fail(errc::internal, "no place attains the global index");
}

bool same_class(const GlobalClass& A, const GlobalClass& B) {
    require(A.field == B.field && A.n == B.n, errc::invalid_input, "class comparison needs matching degree and field");
    GlobalClass diff = A;
    for (const auto& s : B.symbols) diff.push(s.b, s.a);
    return ramification_divisor(diff).empty();
}

GlobalClass parse_global_class(const std::string& src, const FiniteField& k, const std::string& var) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : src) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    auto strip = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return std::string();
        std::size_t e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    };
    require(!parts.empty(), errc::syntax_error, "empty class description");
    std::string head = strip(parts[0]);
    std::uint64_t n = 0;
    try {
        std::size_t used = 0;
        n = std::stoull(head, &used);
        require(used == head.size(), errc::syntax_error, "bad modulus '" + head + "'");
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::syntax_error, "bad modulus '" + head + "'");
    }
    GlobalClass A(k, n);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::string p = strip(parts[i]);
        if (p.empty()) continue;
        require(p.front() == '(' && p.back() == ')', errc::syntax_error, "expected '(a, b)', got '" + p + "'");
        std::string body = p.substr(1, p.size() - 2);
        int depth = 0;
        std::size_t comma = std::string::npos;
        for (std::size_t j = 0; j < body.size(); ++j) {
            if (body[j] == '(') ++depth;
            if (body[j] == ')') --depth;
            if (body[j] == ',' && depth == 0) {
                comma = j;
                break;
            }
        }
        require(comma != std::string::npos, errc::syntax_error, "expected ',' separating symbol entries");
        RatFunc a = parse_rat(strip(body.substr(0, comma)), k, var);
        RatFunc b = parse_rat(strip(body.substr(comma + 1)), k, var);
        require(!a.is_zero() && !b.is_zero(), errc::zero_function, "symbol entries must be nonzero");
        A.push(std::move(a), std::move(b));
    }
    return A;
}

std::string print_global_class(const GlobalClass& A, const std::string& var) {
    std::string out = std::to_string(A.n);
    for (const auto& s : A.symbols) out += "; (" + s.a.to_string(var) + ", " + s.b.to_string(var) + ")";
    return out;
}

}  // namespace brauer
