#ifndef BRAUER_FINITE_FIELD_HPP
#define BRAUER_FINITE_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

class FiniteField;

/// Element of a finite field, stored as an index in [0, q).
/// The index encodes the coefficient vector over the prime field in base p
/// (constant coefficient is the least significant digit).
struct FFElem {
    const FiniteField* field = nullptr;
    std::uint64_t v = 0;

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    friend bool operator==(const FFElem& x, const FFElem& y) = default;
};

/// F_q, q = p^e, with a canonical modulus and a fixed multiplicative generator.
///
/// Canonical choices: the modulus is the first irreducible monic polynomial of
/// degree e in the base-p integer enumeration of the non-leading coefficients,
/// and the generator is the element of smallest index with multiplicative
/// order q-1.  Both are verified at construction (trial division for the
/// modulus, prime-factor order checks for the generator).
class FiniteField {
  public:
    static constexpr std::uint64_t default_bound = 1ull << 20;

    /// Interned access; instances live for the whole process.
    static const FiniteField& get(std::uint64_t p, unsigned e, std::uint64_t bound = default_bound);

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint64_t q() const { return q_; }
    bool prime_field() const { return e_ == 1; }

    /// Modulus coefficients over F_p, degree e, monic (length e+1).
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    FFElem zero() const { return {this, 0}; }
    FFElem one() const { return {this, 1}; }
    FFElem generator() const { return {this, gen_}; }
    FFElem elem(std::uint64_t index) const;
    FFElem from_int(long long value) const;  // reduces into the prime subfield

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t k) const;
    std::uint64_t pow_signed(std::uint64_t a, long long k) const;

    FFElem add(FFElem a, FFElem b) const { return {this, add(a.v, b.v)}; }
    FFElem sub(FFElem a, FFElem b) const { return {this, sub(a.v, b.v)}; }
    FFElem neg(FFElem a) const { return {this, neg(a.v)}; }
    FFElem mul(FFElem a, FFElem b) const { return {this, mul(a.v, b.v)}; }
    FFElem inv(FFElem a) const { return {this, inv(a.v)}; }
    FFElem pow(FFElem a, std::uint64_t k) const { return {this, pow(a.v, k)}; }

    /// Discrete log base the fixed generator; table lookup for q <= 2^16,
    /// baby-step/giant-step above.
    std::uint64_t dlog(std::uint64_t a) const;

    std::string name() const;                 // "GF(5)", "GF(3^2)"
    std::string to_string(FFElem a) const;    // integer literal or "g^k"
    FFElem parse_elem(const std::string& s) const;

  private:
    FiniteField(std::uint64_t p, unsigned e, std::uint64_t bound);

    std::uint64_t p_ = 0;
    unsigned e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t gen_ = 0;

    std::vector<std::uint32_t> log_;  // q entries, only for q <= 2^16
    std::vector<std::uint32_t> exp_;  // q-1 entries, only for q <= 2^16

    std::vector<std::uint64_t> to_digits(std::uint64_t idx) const;
    std::uint64_t from_digits(const std::vector<std::uint64_t>& d) const;
    std::uint64_t mul_generic(std::uint64_t a, std::uint64_t b) const;
};

/// ff_make: canonical field with verified modulus and generator.
const FiniteField& ff_make(std::uint64_t p, unsigned e, std::uint64_t bound = FiniteField::default_bound);

/// Parse "GF(9)", "GF(3^2)"; the argument must be a prime power.
const FiniteField& parse_field(const std::string& s);

std::uint64_t dlog(const FiniteField& k, FFElem x);

/// Order of the class of a in k*/k*^n; equals d/gcd(d, dlog a) for d = gcd(n, q-1).
std::uint64_t power_class_order(const FiniteField& k, FFElem a, std::uint64_t n);

/// [k(a^{1/n}) : k]; requires n | q-1.
std::uint64_t root_degree(const FiniteField& k, FFElem a, std::uint64_t n);

/// Pair (E, sigma) over a finite field, encoded as c in Z/n; the degree of
/// the pair is the order of c.
struct CyclicCharacter {
    const FiniteField* base = nullptr;
    std::uint64_t n = 1;
    std::uint64_t c = 0;

    std::uint64_t degree() const;
    bool trivial() const { return c == 0; }

    friend bool operator==(const CyclicCharacter&, const CyclicCharacter&) = default;
};

CyclicCharacter character_power(const CyclicCharacter& chi, std::uint64_t m);

}  // namespace brauer

#endif
