#ifndef BRAUER_POLY_HPP
#define BRAUER_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brauer/finite_field.hpp"

namespace brauer {

/// Dense univariate polynomial over a finite field.  Coefficients are element
/// indices, constant term first, no trailing zeros; the zero polynomial has an
/// empty coefficient vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const FiniteField& k) : k_(&k) {}
    Poly(const FiniteField& k, std::vector<std::uint64_t> coeffs);

    static Poly zero(const FiniteField& k) { return Poly(k); }
    static Poly constant(FFElem c);
    static Poly x(const FiniteField& k) { return Poly(k, {0, 1}); }

    const FiniteField& field() const;
    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    FFElem coeff(std::size_t i) const;
    FFElem lead() const;
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(FFElem c) const;
    Poly shifted(unsigned k) const;  // multiply by x^k

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// (quotient, remainder); divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly make_monic() const;
    Poly derivative() const;
    FFElem eval(FFElem x) const;

    /// Lexicographic on (degree, coefficient vector from the constant term).
    static bool canonical_less(const Poly& a, const Poly& b);

    std::string to_string(const std::string& var = "t") const;

  private:
    const FiniteField* k_ = nullptr;
    std::vector<std::uint64_t> c_;
    void trim();
};

Poly gcd_poly(Poly a, Poly b);  // monic gcd; gcd(0,0) = 0
Poly poly_mod(const Poly& a, const Poly& m);
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m);
Poly poly_inv_mod(const Poly& a, const Poly& m);  // a invertible mod m
Poly poly_pow(Poly base, unsigned k);

bool is_irreducible(const Poly& f);

struct Factorization {
    FFElem unit;
    std::vector<std::pair<Poly, unsigned>> factors;  // monic irreducible, sorted
};

/// Squarefree decomposition + distinct-degree + equal-degree splitting,
/// deterministic; trial division for degree <= 8 over small fields.
Factorization factor(const Poly& f);

}  // namespace brauer

#endif
