#include "brauer/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace brauer {

Poly::Poly(const FiniteField& k, std::vector<std::uint64_t> coeffs) : k_(&k), c_(std::move(coeffs)) {
    for (auto c : c_) require(c < k.q(), errc::invalid_input, "coefficient out of range");
    trim();
}

Poly Poly::constant(FFElem c) {
    Poly r(*c.field);
    if (!c.is_zero()) r.c_ = {c.v};
    return r;
}

const FiniteField& Poly::field() const {
    require(k_ != nullptr, errc::internal, "polynomial without a field");
    return *k_;
}

FFElem Poly::coeff(std::size_t i) const {
    if (i < c_.size()) return {k_, c_[i]};
    return {k_, 0};
}

FFElem Poly::lead() const {
    require(!c_.empty(), errc::zero_polynomial, "leading coefficient of zero");
    return {k_, c_.back()};
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*k_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = k_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(*k_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = k_->neg(c_[i]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r(*k_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = k_->add(r.c_[i + j], k_->mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::scaled(FFElem c) const {
    Poly r(*k_);
    if (c.is_zero()) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = k_->mul(c_[i], c.v);
    return r;
}

Poly Poly::shifted(unsigned k) const {
    if (is_zero()) return *this;
    Poly r(*k_);
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    require(!d.is_zero(), errc::division_by_zero_polynomial, "polynomial division by zero");
    Poly q(*k_), r = *this;
    if (deg() < d.deg()) return {q, r};
    q.c_.assign(deg() - d.deg() + 1, 0);
    std::uint64_t dlead_inv = k_->inv(d.c_.back());
    while (!r.is_zero() && r.deg() >= d.deg()) {
        std::uint64_t c = k_->mul(r.c_.back(), dlead_inv);
        int sh = r.deg() - d.deg();
        q.c_[sh] = c;
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            r.c_[sh + j] = k_->sub(r.c_[sh + j], k_->mul(c, d.c_[j]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::make_monic() const {
    require(!is_zero(), errc::zero_polynomial, "cannot normalize zero polynomial");
    return scaled({k_, k_->inv(c_.back())});
}

Poly Poly::derivative() const {
    Poly r(*k_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        FFElem term = k_->mul(coeff(i), k_->from_int(static_cast<long long>(i)));
        r.c_[i - 1] = term.v;
    }
    r.trim();
    return r;
}

FFElem Poly::eval(FFElem x) const {
    const FiniteField& k = field();
    FFElem acc{&k, 0};
    for (std::size_t i = c_.size(); i-- > 0;) acc = k.add(k.mul(acc, x), {&k, c_[i]});
    return acc;
}

bool Poly::canonical_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return a.c_ < b.c_;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string cs = k_->to_string({k_, c_[i]});
        if (i == 0) {
            out += cs;
        } else {
            std::string xs = (i == 1) ? var : var + "^" + std::to_string(i);
            out += (cs == "1") ? xs : cs + "*" + xs;
        }
    }
    return out;
}

Poly gcd_poly(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.make_monic();
}

Poly poly_mod(const Poly& a, const Poly& m) { return a.divmod(m).second; }

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) { return poly_mod(a * b, m); }

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m) {
    Poly r = Poly::constant(m.field().one());
    base = poly_mod(base, m);
    while (k > 0) {
        if (k & 1) r = poly_mulmod(r, base, m);
        base = poly_mulmod(base, base, m);
        k >>= 1;
    }
    return r;
}

Poly poly_pow(Poly base, unsigned k) {
    Poly r = Poly::constant(base.field().one());
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Poly poly_inv_mod(const Poly& a, const Poly& m) {
    // extended Euclid
    const FiniteField& k = m.field();
    Poly r0 = m, r1 = poly_mod(a, m);
    Poly s0 = Poly::zero(k), s1 = Poly::constant(k.one());
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Poly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    require(r0.deg() == 0, errc::not_a_unit, "element not invertible modulo the given polynomial");
    return poly_mod(s0.scaled(k.inv(r0.lead())), m);
}

namespace {

// x^q mod f via repeated Frobenius, avoiding q^d overflow
Poly frobenius_step(const Poly& h, const Poly& f) { return poly_powmod(h, f.field().q(), f); }

struct FactorLcg {
    std::uint64_t s;
    std::uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s;
    }
    std::uint64_t bounded(std::uint64_t m) { return m == 0 ? 0 : (next() >> 11) % m; }
};

Poly random_poly(const FiniteField& k, int deg, FactorLcg& rng) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1);
    for (auto& ci : c) ci = rng.bounded(k.q());
    return Poly(k, std::move(c));
}

void equal_degree_split(const Poly& f, unsigned d, std::vector<Poly>& out, FactorLcg& rng) {
    const FiniteField& k = f.field();
    if (f.deg() == static_cast<int>(d)) {
        out.push_back(f.make_monic());
        return;
    }
    require(static_cast<double>(d) * std::log2(static_cast<double>(k.q())) < 62.0, errc::bound_exceeded,
            "equal-degree splitting exponent exceeds 64-bit range");
    std::uint64_t qd = 1;
    for (unsigned i = 0; i < d; ++i) qd *= k.q();
    Poly split = f;
    for (int attempt = 0; attempt < 256; ++attempt) {
        Poly r = random_poly(k, f.deg() - 1, rng);
        if (r.deg() < 1) continue;
        Poly g;
        if (k.p() == 2) {
            // trace map over F_2
            unsigned bits = 0;
            std::uint64_t t = qd;
            while (t > 1) {
                t >>= 1;
                ++bits;
            }
            Poly acc = poly_mod(r, f), cur = acc;
            for (unsigned i = 1; i < bits; ++i) {
                cur = poly_mulmod(cur, cur, f);
                acc = acc + cur;
            }
            g = gcd_poly(acc, f);
        } else {
            Poly e = poly_powmod(r, (qd - 1) / 2, f);
            g = gcd_poly(e - Poly::constant(k.one()), f);
        }
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, out, rng);
            equal_degree_split(f.divmod(g).first.make_monic(), d, out, rng);
            return;
        }
    }
    fail(errc::internal, "equal-degree splitting did not converge");
}

// monic squarefree input -> irreducible monic factors
std::vector<Poly> factor_squarefree(const Poly& f) {
    const FiniteField& k = f.field();
    std::vector<Poly> out;
    Poly rem = f;
    Poly h = Poly::x(k);
    unsigned d = 0;
    FactorLcg rng{0x5eed0000ull ^ (static_cast<std::uint64_t>(f.deg()) << 32) ^ k.q()};
    while (rem.deg() > 0) {
        ++d;
        if (2 * d > static_cast<unsigned>(rem.deg())) {
            out.push_back(rem.make_monic());
            break;
        }
        h = frobenius_step(h, rem.is_zero() ? f : rem);
        h = poly_mod(h, rem);
        Poly g = gcd_poly(h - Poly::x(k), rem);
        if (g.deg() > 0) {
            equal_degree_split(g, d, out, rng);
            rem = rem.divmod(g).first;
        }
    }
    return out;
}

// p-th root of f = g(x^p): coefficientwise a -> a^{q/p}
Poly pth_root(const Poly& f) {
    const FiniteField& k = f.field();
    std::uint64_t p = k.p();
    std::vector<std::uint64_t> c;
    for (int i = 0; i <= f.deg(); i += static_cast<int>(p))
        c.push_back(k.pow(f.coeff(static_cast<std::size_t>(i)).v, k.q() / p));
    return Poly(k, std::move(c));
}

void squarefree_decompose(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
    const FiniteField& k = f.field();
    if (f.deg() <= 0) return;
    Poly df = f.derivative();
    if (df.is_zero()) {
        squarefree_decompose(pth_root(f), mult * static_cast<unsigned>(k.p()), out);
        return;
    }
    Poly c = gcd_poly(f, df);
    Poly w = f.divmod(c).first;  // product of squarefree part
    unsigned i = 1;
    while (w.deg() > 0) {
        Poly y = gcd_poly(w, c);
        Poly part = w.divmod(y).first;
        if (part.deg() > 0) out.emplace_back(part.make_monic(), mult * i);
        w = y;
        c = c.divmod(y).first;
        ++i;
    }
    if (c.deg() > 0) squarefree_decompose(pth_root(c), mult * static_cast<unsigned>(k.p()), out);
}

std::vector<Poly> factor_by_trial_division(const Poly& f) {
    const FiniteField& k = f.field();
    std::vector<Poly> out;
    Poly rem = f.make_monic();
    for (int d = 1; rem.deg() > 0 && 2 * d <= rem.deg(); ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= k.q();
        for (std::uint64_t code = 0; code < count && rem.deg() >= d; ++code) {
            std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t cc = code;
            for (int i = 0; i < d; ++i) {
                c[static_cast<std::size_t>(i)] = cc % k.q();
                cc /= k.q();
            }
            c[static_cast<std::size_t>(d)] = 1;
            Poly cand(k, std::move(c));
            while (true) {
                auto [q, r] = rem.divmod(cand);
                if (!r.is_zero()) break;
                out.push_back(cand);
                rem = q;
            }
        }
    }
    if (rem.deg() > 0) out.push_back(rem);
    return out;
}

}  // namespace

bool is_irreducible(const Poly& f) {
    require(!f.is_zero(), errc::zero_polynomial, "irreducibility of zero");
    if (f.deg() == 0) return false;
    if (f.deg() == 1) return true;
    auto fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

Factorization factor(const Poly& f) {
    require(!f.is_zero(), errc::zero_polynomial, "factorization of zero");
    const FiniteField& k = f.field();
    Factorization out{f.lead(), {}};
    if (f.deg() <= 0) return out;
    Poly monic = f.make_monic();

    std::vector<Poly> irreducibles;
    std::vector<unsigned> mults;
    if (f.deg() <= 8 && k.q() <= 32) {
        auto fs = factor_by_trial_division(monic);
        for (const auto& g : fs) {
            auto it = std::find(irreducibles.begin(), irreducibles.end(), g);
            if (it == irreducibles.end()) {
                irreducibles.push_back(g);
                mults.push_back(1);
            } else {
                ++mults[static_cast<std::size_t>(it - irreducibles.begin())];
            }
        }
    } else {
        std::vector<std::pair<Poly, unsigned>> sqf;
        squarefree_decompose(monic, 1, sqf);
        for (const auto& [part, mult] : sqf) {
            for (const auto& g : factor_squarefree(part)) {
                irreducibles.push_back(g);
                mults.push_back(mult);
            }
        }
    }
    for (std::size_t i = 0; i < irreducibles.size(); ++i)
        out.factors.emplace_back(irreducibles[i], mults[i]);
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return Poly::canonical_less(a.first, b.first);
        return a.second < b.second;
    });
    return out;
}

}  // namespace brauer
