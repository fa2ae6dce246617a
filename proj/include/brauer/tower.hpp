#ifndef BRAUER_TOWER_HPP
#define BRAUER_TOWER_HPP

#include <array>
#include <string>
#include <vector>

#include "brauer/poly.hpp"

namespace brauer {

/// F_q, F_q((t1)), or F_q((t1))((t2)).
struct TowerField {
    const FiniteField* base = nullptr;
    std::vector<std::string> params;  // innermost first, at most two

    unsigned depth() const { return static_cast<unsigned>(params.size()); }
};

TowerField make_tower(const FiniteField& k, std::vector<std::string> params);

/// c * t1^{e1} * t2^{e2} with c nonzero.
struct Monomial {
    std::uint64_t c = 1;  // element index in the base field
    std::array<int, 2> e{0, 0};
};

struct TowerClass {
    TowerField field;
    std::uint64_t n = 1;
    std::vector<std::pair<Monomial, Monomial>> symbols;

    TowerClass(TowerField f, std::uint64_t n_);
    void push(Monomial a, Monomial b);
};

/// A = (a1, t1) x (a2, t2) x (t1, t2)^r with unit-unit parts dropped.
struct TowerNormalForm {
    std::uint64_t a1 = 1;  // element index
    std::uint64_t a2 = 1;
    std::uint64_t r = 0;   // element of Z/n
};

TowerNormalForm canonicalize(const TowerClass& A);

struct TowerResidue {
    Monomial gamma;       // class in the residue tower, as a monomial over the inner parameters
    std::uint64_t order;  // order of the class mod n-th powers
};

/// Residue data at the outermost parameter (index = depth-1).
TowerResidue tower_residue(const TowerClass& A, unsigned param_index);

/// Index over F_q((t)): the order of the residue class.
std::uint64_t complete_index(const TowerClass& A);

/// index(A x (E, sigma, pi)) = index(A x E) * [E : K] for E = K(u^{1/n})
/// unramified at pi; A must be unramified at the pi-adic valuation.
std::uint64_t index_with_cyclic_twist(const TowerClass& A_unram, const Monomial& kummer_u,
                                      unsigned param_index);

struct PeelStep {
    std::string param;
    std::string gamma;        // residue class at this level
    std::uint64_t e_ram = 1;  // ramification index of the radical extension
    std::uint64_t f_res = 1;  // residue-field extension degree
    std::uint64_t order = 1;  // e_ram * f_res
    std::string ext_modulus;  // modulus of the residue-field extension, in w
    std::string substitution; // inner parameter rewritten in the extension
};

struct TowerIndexResult {
    std::uint64_t index = 1;
    std::vector<PeelStep> trace;
};

/// Exact index over the full tower by peeling parameters outermost first.
TowerIndexResult tower_index(const TowerClass& A);

/// Text form "n; base=GF(q); params=t1,t2; (a , b); ..." with monomials
/// written as products like 2*t1^3*t2^-1 or g^2*t1.
TowerClass parse_tower_class(const std::string& src);
std::string print_tower_class(const TowerClass& A);
std::string print_monomial(const TowerClass& A, const Monomial& m);

}  // namespace brauer

#endif
