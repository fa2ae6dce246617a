#ifndef BRAUER_GROUP_HPP
#define BRAUER_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

/// Finite group given by its multiplication table, identity at index 0.
/// The group axioms are verified at construction.
class CayleyGroup {
  public:
    static constexpr unsigned default_bound = 512;

    static CayleyGroup from_table(std::vector<std::vector<unsigned>> table, unsigned bound = default_bound);
    static CayleyGroup cyclic(unsigned n);
    static CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b);

    unsigned order() const { return n_; }
    unsigned mul(unsigned a, unsigned b) const { return t_[a * n_ + b]; }
    unsigned inv(unsigned a) const { return inv_[a]; }
    unsigned order_of(unsigned a) const;
    bool abelian() const;

  private:
    CayleyGroup() = default;
    unsigned n_ = 0;
    std::vector<std::uint16_t> t_;
    std::vector<std::uint16_t> inv_;
};

/// Subset of a CayleyGroup closed under the table, with the identity.
struct Subgroup {
    const CayleyGroup* parent = nullptr;
    std::vector<unsigned> elems;       // sorted
    std::vector<unsigned> generators;  // a small generating set

    unsigned size() const { return static_cast<unsigned>(elems.size()); }
    bool contains(unsigned x) const;
    bool cyclic() const;
    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elems == b.elems; }
};

Subgroup trivial_subgroup(const CayleyGroup& g);
Subgroup full_subgroup(const CayleyGroup& g);
Subgroup generated_subgroup(const CayleyGroup& g, const std::vector<unsigned>& gens);

/// Complete subgroup list: closures of cyclic subgroups, then joins to a
/// fixed point.  Sorted by (size, elements).
std::vector<Subgroup> subgroups(const CayleyGroup& g);

bool is_normal(const Subgroup& h);                       // in the parent group
bool is_normal_in(const Subgroup& h, const Subgroup& g); // h <= g required
CayleyGroup quotient(const CayleyGroup& g, const Subgroup& n, std::vector<unsigned>* coset_of = nullptr);

bool is_metacyclic(const CayleyGroup& g);
Subgroup sylow(const CayleyGroup& g, std::uint64_t p);

/// P >= P1 >= P2 with P/P1 and P2 cyclic, P1 normal in P, P2 normal in P1,
/// and P1/P2 metacyclic.
struct NormalSeries {
    Subgroup p1, p2;
};

/// Witnessing series for a p-group, if one exists; the returned series
/// minimizes (|P2|, [P:P1], P2 elements, P1 elements).
std::optional<NormalSeries> obstruction_series(const CayleyGroup& p_group);

/// Finite abelian group in invariant-factor form d1 | d2 | ... | dr.
struct AbelianGroup {
    std::vector<std::uint64_t> invariant_factors;

    /// Normalizes an arbitrary list of cyclic factors.
    static AbelianGroup from_factors(std::vector<std::uint64_t> factors);
    std::uint64_t order() const;
    /// Exponents of p in the factors, largest first; empty if p does not divide the order.
    std::vector<unsigned> sylow_exponents(std::uint64_t p) const;
    std::vector<std::uint64_t> primes() const;
};

unsigned abelian_rank(const AbelianGroup& a);

/// Obstruction-series existence for an abelian p-group given by its exponent
/// partition: a series exists exactly when the rank is at most four.
bool abelian_series_exists(const std::vector<unsigned>& exponents);

enum class ResidueKind { finite, local, global, other };

/// Coarse model of the base field hypotheses: F is the function field of a
/// curve over a complete discretely valued field K with residue field k.
struct FieldModel {
    std::uint64_t residue_char = 0;            // prime or 0
    ResidueKind residue_kind = ResidueKind::finite;
    std::uint64_t roots_of_unity_bound = 1;    // largest n with mu_n assumed in K
    bool two_dim_local = false;                // F = K(X) as above
};

enum class VerdictKind { not_admissible, admissible, unknown };

struct SylowSummary {
    std::uint64_t prime = 0;
    bool abelian = false;
    unsigned rank = 0;        // meaningful for abelian Sylows
    bool series_exists = false;
};

struct Verdict {
    VerdictKind kind = VerdictKind::unknown;
    std::uint64_t witness_prime = 0;               // for not_admissible
    std::vector<std::string> reason_codes;
    std::vector<std::string> reasons;
    std::vector<SylowSummary> sylow;
};

Verdict classify(const CayleyGroup& g, const FieldModel& model);
Verdict classify(const AbelianGroup& g, const FieldModel& model);

/// Group file: "abelian: [d1,...,dr]" or "table:" followed by N rows.
struct GroupInput {
    std::optional<AbelianGroup> abelian;
    std::optional<CayleyGroup> table;
};
GroupInput parse_group(const std::string& text);

std::string verdict_kind_name(VerdictKind k);

}  // namespace brauer

#endif
