#ifndef BRAUER_RATFUNC_HPP
#define BRAUER_RATFUNC_HPP

#include <optional>
#include <string>

#include "brauer/poly.hpp"

namespace brauer {

/// Element of F_q(t) in canonical form: gcd(num, den) = 1, den monic; the
/// zero function is 0/1.
class RatFunc {
  public:
    RatFunc() = default;
    explicit RatFunc(const FiniteField& k) : num_(Poly::zero(k)), den_(Poly::constant(k.one())) {}
    RatFunc(Poly num, Poly den);
    static RatFunc from_poly(Poly p);
    static RatFunc constant(FFElem c) { return from_poly(Poly::constant(c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FiniteField& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc inverse() const;
    RatFunc pow(long long k) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "t") const;

  private:
    Poly num_, den_;
};

/// Closed point of the projective line: a monic irreducible polynomial, or
/// the place at infinity.  The residue field has degree deg(f) (1 at infinity).
class Place {
  public:
    static Place infinity(const FiniteField& k);
    static Place finite(Poly f);  // verified monic irreducible

    bool is_infinity() const { return !f_.has_value(); }
    const Poly& poly() const;
    const FiniteField& field() const { return *k_; }
    unsigned degree() const { return is_infinity() ? 1 : static_cast<unsigned>(f_->deg()); }

    /// Canonical order: finite places by (degree, coefficients), infinity last.
    static bool canonical_less(const Place& a, const Place& b);
    friend bool operator==(const Place& a, const Place& b) {
        return a.is_infinity() == b.is_infinity() && (a.is_infinity() || a.poly() == b.poly());
    }

    std::string to_string(const std::string& var = "t") const;

  private:
    const FiniteField* k_ = nullptr;
    std::optional<Poly> f_;
};

/// Recursive-descent parser for the expression grammar
///   expr := term (("+"|"-") term)* ; term := unary (("*"|"/") unary)* ;
///   unary := "-"? factor ; factor := base ("^" integer)? ;
///   base := var | "g" | integer | "(" expr ")" .
RatFunc parse(const std::string& src, const FiniteField& k);
RatFunc parse_rat(const std::string& src, const FiniteField& k, const std::string& var);

long valuation(const RatFunc& f, const Place& v);

/// Image of a v-unit in the residue field, as a polynomial of degree < deg(v)
/// (a constant at infinity).
Poly residue_at(const RatFunc& f, const Place& v);

/// Order of the class of f in F_q(t)*/(F_q(t)*)^n; requires n | q-1.
std::uint64_t class_order_global(const RatFunc& f, std::uint64_t n);

/// Substitute var -> r into f, producing an element of the field of r.
RatFunc substitute(const RatFunc& f, const RatFunc& r);

}  // namespace brauer

#endif
