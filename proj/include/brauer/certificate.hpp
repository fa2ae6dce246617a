#ifndef BRAUER_CERTIFICATE_HPP
#define BRAUER_CERTIFICATE_HPP

#include <array>
#include <string>
#include <vector>

#include "brauer/group.hpp"
#include "brauer/symbols.hpp"

namespace brauer {

/// Polynomial in the outer uniformizer with coefficients in F_q[inner].
struct BiPoly {
    const FiniteField* k = nullptr;
    std::vector<Poly> c;  // c[i] is the coefficient of outer^i

    bool is_zero() const;
    void trim();
};

/// Quotient of two bivariate polynomials; only valuation and residue at the
/// outer uniformizer are needed, so no canonical form is kept.
struct BiRat {
    BiPoly num, den;

    std::string to_string(const std::string& outer, const std::string& inner) const;
};

BiRat parse_birat(const std::string& src, const FiniteField& k, const std::string& outer,
                  const std::string& inner);
long val_outer(const BiRat& f);
RatFunc residue_outer(const BiRat& f);  // element of F_q(inner)

struct ConstructionSpec {
    std::string kind;  // "thm45" or "thm42"
    std::array<std::uint64_t, 4> orders{1, 1, 1, 1};
    const FiniteField* k = nullptr;
    FFElem lambda;
    FFElem a;  // used by thm42 only
};

struct AlgebraPresentation {
    std::string field_line;                   // ambient field description
    struct Factor {
        std::string a, b;                     // entries as printed expressions
        std::uint64_t n = 1;
        std::string relations;                // "x^n = a, y^n = b, xy = zeta yx"
    };
    std::vector<Factor> factors;
    std::uint64_t degree = 1;
};

struct SubfieldPresentation {
    struct RadicalGen {
        std::string var;
        std::uint64_t exp = 1;
        std::string rhs;
    };
    std::vector<RadicalGen> generators;
    AbelianGroup galois_group;
    std::vector<CyclicCharacter> galois_action;  // one character per generator
};

enum class StepKind { unit_check, degree_check, twist, reduction, base_index, total };

struct CertStep {
    StepKind kind = StepKind::total;
    std::string elem;         // UNIT/DEG/TWIST unit entry
    std::string param;        // TWIST parameter
    std::string subst_var;    // RED: variable being replaced
    std::string subst_expr;   // RED: replacement in the base variable
    std::uint64_t n = 1;      // DEG modulus
    std::uint64_t expect = 0; // DEG/BASE/TWIST(d)/TOTAL expected value
    std::string base_class;   // BASE: stored class "n; (a,b); ..."
};

struct DivisionCertificate {
    std::string kind;
    const FiniteField* field = nullptr;
    std::uint64_t degree = 1;
    std::array<std::uint64_t, 4> orders{1, 1, 1, 1};
    std::uint64_t lambda = 1;  // element index
    std::uint64_t a = 0;       // element index, 0 when unused
    std::string outer_var, inner_var, base_var;
    struct Factor {
        BiRat a, b;
        std::uint64_t n = 1;
    };
    std::vector<Factor> factors;
    unsigned twist_factor = 0;   // 1-based indices into factors
    unsigned reduce_factor = 0;
    std::vector<CertStep> steps;
};

struct BuildResult {
    AlgebraPresentation algebra;
    SubfieldPresentation subfield;
    DivisionCertificate certificate;
};

BuildResult build_thm45(const ConstructionSpec& spec);
BuildResult build_thm42(const ConstructionSpec& spec);

struct VerifiedIndex {
    std::uint64_t index = 1;
    bool division = false;
    std::vector<std::string> trace;
};

/// Recomputes every step from scratch; throws step_failed on any mismatch
/// between a recomputation and the recorded expectation.
VerifiedIndex verify_certificate(const DivisionCertificate& cert);

std::string serialize_certificate(const DivisionCertificate& cert);
DivisionCertificate parse_certificate(const std::string& text);

std::string render_presentation(const AlgebraPresentation& alg, const SubfieldPresentation& sub);

}  // namespace brauer

#endif
