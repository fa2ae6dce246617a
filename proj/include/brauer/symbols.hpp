#ifndef BRAUER_SYMBOLS_HPP
#define BRAUER_SYMBOLS_HPP

#include <string>
#include <vector>

#include "brauer/ratfunc.hpp"

namespace brauer {

/// Degree-n symbol (a, b)_n over F_q(t); requires a, b nonzero and n | q-1.
struct SymbolAlg {
    RatFunc a, b;
    std::uint64_t n = 1;

    SymbolAlg(RatFunc a_, RatFunc b_, std::uint64_t n_);
    const FiniteField& field() const { return a.field(); }
};

/// Formal product of symbols of a common degree n; the empty list is the
/// trivial class.
struct GlobalClass {
    const FiniteField* field = nullptr;
    std::uint64_t n = 1;
    std::vector<SymbolAlg> symbols;

    GlobalClass(const FiniteField& k, std::uint64_t n_);
    void push(RatFunc a, RatFunc b);
    GlobalClass opposite() const;  // every symbol flipped
};

enum class TameSign {
    signed_tame,   // (-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)}
    unsigned_raw,  // a^{v(b)} / b^{v(a)}, for comparison only
};

/// Tame residue of one symbol at a place, as an element of kappa(v).
Poly residue_symbol(const SymbolAlg& s, const Place& v, TameSign sign = TameSign::signed_tame);

/// Combined residue of a class at a place (product over the symbol list).
Poly class_residue(const GlobalClass& A, const Place& v, TameSign sign = TameSign::signed_tame);

struct LocalDatum {
    Place place;
    Poly residue_class;       // representative in kappa(v)
    std::uint64_t invariant;  // element of Z/n
    std::uint64_t index;      // order of the invariant in Z/n
};

/// Places with nontrivial combined residue, in canonical order.
std::vector<LocalDatum> ramification_divisor(const GlobalClass& A);

std::uint64_t local_invariant(const GlobalClass& A, const Place& v);
std::uint64_t local_index(const GlobalClass& A, const Place& v);
std::uint64_t global_index(const GlobalClass& A);

/// Sum of invariants over all places vanishes mod n.
bool reciprocity_check(const GlobalClass& A, TameSign sign = TameSign::signed_tame);

/// First place in canonical order whose local index equals the global index;
/// infinity for the trivial class.  Requires n to be a prime power.
Place hasse_witness(const GlobalClass& A);

/// Class equality test over F_q(t): residues agree at every place.
bool same_class(const GlobalClass& A, const GlobalClass& B);

/// Input form "n; (a1,b1); (a2,b2); ..."
GlobalClass parse_global_class(const std::string& src, const FiniteField& k,
                               const std::string& var = "t");
std::string print_global_class(const GlobalClass& A, const std::string& var = "t");

}  // namespace brauer

#endif
