#include "brauer/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace brauer {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// dense polynomial arithmetic over F_p, used only during field construction
using PVec = std::vector<std::uint64_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& mod, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // reduce mod the monic modulus
    const std::size_t m = mod.size() - 1;
    for (std::size_t d = prod.size(); d-- > m;) {
        std::uint64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::size_t j = 0; j < m; ++j) {
            std::uint64_t t = (c * mod[j]) % p;
            prod[d - m + j] = (prod[d - m + j] + p - t) % p;
        }
    }
    prod.resize(m, 0);
    ptrim(prod);
    return prod;
}

// remainder of a by monic b over F_p
PVec premainder(PVec a, const PVec& b, std::uint64_t p) {
    ptrim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint64_t c = a.back();
        std::size_t sh = a.size() - 1 - db;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t t = (c * b[j]) % p;
                a[sh + j] = (a[sh + j] + p - t) % p;
            }
        a.pop_back();
        ptrim(a);
        if (a.size() <= db) break;
    }
    return a;
}

bool irreducible_over_prime_field(const PVec& f, std::uint64_t p) {
    // trial division by all monic polynomials of degree 1..deg/2
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            PVec div(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = c % p;
                c /= p;
            }
            div[d] = 1;
            if (premainder(f, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FFElem FiniteField::elem(std::uint64_t index) const {
    require(index < q_, errc::invalid_input, "element index out of range for " + name());
    return {this, index};
}

FFElem FiniteField::from_int(long long value) const {
    long long m = static_cast<long long>(p_);
    long long r = value % m;
    if (r < 0) r += m;
    return {this, static_cast<std::uint64_t>(r)};
}

std::vector<std::uint64_t> FiniteField::to_digits(std::uint64_t idx) const {
    std::vector<std::uint64_t> d(e_, 0);
    for (unsigned i = 0; i < e_; ++i) {
        d[i] = idx % p_;
        idx /= p_;
    }
    return d;
}

std::uint64_t FiniteField::from_digits(const std::vector<std::uint64_t>& d) const {
    std::uint64_t idx = 0;
    for (unsigned i = e_; i-- > 0;) idx = idx * p_ + (i < d.size() ? d[i] : 0);
    return idx;
}

std::uint64_t FiniteField::add(std::uint64_t a, std::uint64_t b) const {
    if (e_ == 1) return (a + b) % p_;
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

std::uint64_t FiniteField::neg(std::uint64_t a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
        std::uint64_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

std::uint64_t FiniteField::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FiniteField::mul_generic(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return (a * b) % p_;
    PVec pa = to_digits(a), pb = to_digits(b);
    ptrim(pa);
    ptrim(pb);
    return from_digits(pmulmod(pa, pb, modulus_, p_));
}

std::uint64_t FiniteField::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    return mul_generic(a, b);
}

std::uint64_t FiniteField::pow(std::uint64_t a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    if (!log_.empty()) {
        std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) % (q_ - 1)) * (k % (q_ - 1)) % (q_ - 1);
        return exp_[l];
    }
    std::uint64_t r = 1, base = a;
    k %= (q_ - 1);
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

std::uint64_t FiniteField::pow_signed(std::uint64_t a, long long k) const {
    require(a != 0 || k >= 0, errc::zero_element, "zero to a negative power");
    long long m = static_cast<long long>(q_ - 1);
    long long r = k % m;
    if (r < 0) r += m;
    return pow(a, static_cast<std::uint64_t>(r));
}

std::uint64_t FiniteField::inv(std::uint64_t a) const {
    require(a != 0, errc::zero_element, "inverse of zero in " + name());
    return pow(a, q_ - 2);
}

std::uint64_t FiniteField::dlog(std::uint64_t a) const {
    require(a != 0, errc::zero_element, "dlog of zero in " + name());
    if (!log_.empty()) return log_[a];
    // baby-step giant-step
    std::uint64_t m = 1;
    while (m * m < q_ - 1) ++m;
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(m);
    std::uint64_t cur = 1;
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        cur = mul(cur, gen_);
    }
    std::uint64_t giant = inv(cur == 0 ? 1 : cur);  // g^{-m}, cur = g^m here
    std::uint64_t y = a;
    for (std::uint64_t i = 0; i <= m; ++i) {
        auto it = baby.find(y);
        if (it != baby.end()) return (i * m + it->second) % (q_ - 1);
        y = mul(y, giant);
    }
    fail(errc::internal, "dlog: generator does not generate " + name());
}

FiniteField::FiniteField(std::uint64_t p, unsigned e, std::uint64_t bound) : p_(p), e_(e) {
    require(e >= 1, errc::degree_zero, "extension degree must be >= 1");
    require(is_prime_u64(p), errc::not_prime, std::to_string(p) + " is not prime");
    long double size = 1.0L;
    for (unsigned i = 0; i < e; ++i) size *= static_cast<long double>(p);
    require(size <= static_cast<long double>(bound), errc::bound_exceeded,
            "field size exceeds configured bound");
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) q_ *= p;

    if (e == 1) {
        modulus_ = {0, 1};  // x
    } else {
        // first irreducible monic polynomial in base-p enumeration of low coefficients
        std::uint64_t count = q_;
        bool found = false;
        for (std::uint64_t code = 0; code < count; ++code) {
            PVec f(e + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < e; ++i) {
                f[i] = c % p;
                c /= p;
            }
            f[e] = 1;
            if (irreducible_over_prime_field(f, p)) {
                modulus_ = f;
                found = true;
                break;
            }
        }
        require(found, errc::internal, "no irreducible modulus found");
    }

    // smallest-index element of full multiplicative order
    auto factors = prime_factors(q_ - 1);
    gen_ = 0;
    for (std::uint64_t cand = q_ >= 2 ? 2 : 1; cand < q_; ++cand) {
        bool full = true;
        for (std::uint64_t r : factors) {
            std::uint64_t x = cand, res = 1, k = (q_ - 1) / r;
            while (k > 0) {
                if (k & 1) res = mul_generic(res, x);
                x = mul_generic(x, x);
                k >>= 1;
            }
            if (res == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            gen_ = cand;
            break;
        }
    }
    if (q_ == 2) gen_ = 1;
    require(gen_ != 0, errc::internal, "no multiplicative generator found");

    if (q_ <= (1u << 16)) {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        std::uint64_t cur = 1;
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = static_cast<std::uint32_t>(cur);
            log_[cur] = static_cast<std::uint32_t>(i);
            cur = mul_generic(cur, gen_);
        }
        require(cur == 1, errc::internal, "generator order check failed");
    }
}

const FiniteField& FiniteField::get(std::uint64_t p, unsigned e, std::uint64_t bound) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FiniteField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto field = std::unique_ptr<FiniteField>(new FiniteField(p, e, bound));
        it = cache.emplace(key, std::move(field)).first;
    }
    return *it->second;
}

const FiniteField& ff_make(std::uint64_t p, unsigned e, std::uint64_t bound) {
    return FiniteField::get(p, e, bound);
}

std::string FiniteField::name() const {
    if (e_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(e_) + ")";
}

std::string FiniteField::to_string(FFElem a) const {
    if (a.v == 0) return "0";
    if (a.v == 1) return "1";
    if (e_ == 1) return std::to_string(a.v);
    return "g^" + std::to_string(dlog(a.v));
}

FFElem FiniteField::parse_elem(const std::string& s) const {
    if (s.empty()) fail(errc::syntax_error, "empty field element");
    if (s == "g") return generator();
    if (s.rfind("g^", 0) == 0) {
        std::uint64_t k = std::stoull(s.substr(2));
        return {this, pow(gen_, k)};
    }
    try {
        return from_int(std::stoll(s));
    } catch (const std::exception&) {
        fail(errc::syntax_error, "bad field element '" + s + "'");
    }
}

const FiniteField& parse_field(const std::string& s) {
    auto bad = [&]() -> const FiniteField& { fail(errc::syntax_error, "bad field spec '" + s + "'"); };
    if (s.size() < 5 || s.rfind("GF(", 0) != 0 || s.back() != ')') return bad();
    std::string body = s.substr(3, s.size() - 4);
    auto caret = body.find('^');
    try {
        if (caret != std::string::npos) {
            std::uint64_t p = std::stoull(body.substr(0, caret));
            unsigned e = static_cast<unsigned>(std::stoul(body.substr(caret + 1)));
            return FiniteField::get(p, e);
        }
        std::uint64_t q = std::stoull(body);
        // detect p^e
        require(q >= 2, errc::invalid_input, "field size must be >= 2");
        std::uint64_t p = q;
        for (std::uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        unsigned e = 0;
        std::uint64_t t = q;
        while (t % p == 0 && t > 1) {
            t /= p;
            ++e;
        }
        require(t == 1, errc::invalid_input, std::to_string(q) + " is not a prime power");
        return FiniteField::get(p, e);
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        return bad();
    }
}

std::uint64_t dlog(const FiniteField& k, FFElem x) {
    require(x.field == &k, errc::invalid_input, "element not in " + k.name());
    return k.dlog(x.v);
}

std::uint64_t power_class_order(const FiniteField& k, FFElem a, std::uint64_t n) {
    require(!a.is_zero(), errc::zero_element, "power_class_order of zero");
    require(n >= 1, errc::invalid_input, "modulus must be >= 1");
    std::uint64_t d = std::gcd(n, k.q() - 1);
    if (d == 1) return 1;
    std::uint64_t x = k.dlog(a.v) % d;
    return d / std::gcd(d, x);
}

std::uint64_t root_degree(const FiniteField& k, FFElem a, std::uint64_t n) {
    require(n >= 1 && (k.q() - 1) % n == 0, errc::roots_of_unity_missing,
            "mu_" + std::to_string(n) + " not contained in " + k.name());
    return power_class_order(k, a, n);
}

std::uint64_t CyclicCharacter::degree() const {
    if (n == 0) return 1;
    std::uint64_t cc = c % n;
    if (cc == 0) return 1;
    return n / std::gcd(n, cc);
}

CyclicCharacter character_power(const CyclicCharacter& chi, std::uint64_t m) {
    CyclicCharacter out = chi;
    if (chi.n != 0) out.c = (chi.c % chi.n) * (m % chi.n) % chi.n;
    return out;
}

}  // namespace brauer
