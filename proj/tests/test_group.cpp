#include <doctest.h>

#include <functional>
#include <map>

#include "brauer/group.hpp"
#include "oracles.hpp"

using namespace brauer;
using namespace oracles;

namespace {

template <typename F>
errc thrown_kind(F&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.kind();
    }
    return errc::internal;
}

FieldModel qp_model(std::uint64_t p, std::uint64_t mu = 1) {
    FieldModel m;
    m.residue_char = p;
    m.residue_kind = ResidueKind::finite;
    m.roots_of_unity_bound = mu;
    m.two_dim_local = true;
    return m;
}

std::vector<CayleyGroup> fixture_corpus_64() {
    std::vector<CayleyGroup> out;
    // abelian
    for (auto f : std::vector<std::vector<unsigned>>{{1},
                                                     {2},
                                                     {3},
                                                     {4},
                                                     {2, 2},
                                                     {5},
                                                     {6},
                                                     {8},
                                                     {2, 4},
                                                     {2, 2, 2},
                                                     {9},
                                                     {3, 3},
                                                     {12},
                                                     {16},
                                                     {4, 4},
                                                     {2, 2, 4},
                                                     {2, 2, 2, 2},
                                                     {27},
                                                     {3, 9},
                                                     {3, 3, 3},
                                                     {2, 2, 2, 2, 2},
                                                     {4, 2, 2, 2},
                                                     {2, 2, 2, 2, 2, 2},
                                                     {25},
                                                     {5, 5},
                                                     {49},
                                                     {7, 7},
                                                     {2, 30},
                                                     {3, 3, 3, 3}})
        out.push_back(abelian_table(f));
    // dihedral and quaternion families
    for (unsigned m : {3, 4, 5, 6, 8, 12, 16}) out.push_back(dihedral(m));
    for (unsigned o : {8, 16, 32}) out.push_back(quaternion(o));
    // symmetric, alternating, and a few semidirect products
    out.push_back(symmetric(3));
    out.push_back(symmetric(4));
    out.push_back(alternating4());
    out.push_back(semidirect(7, 3, 2));    // 2^3 = 1 mod 7
    out.push_back(semidirect(8, 2, 3));    // modular group of order 16
    out.push_back(semidirect(8, 2, 5));
    out.push_back(semidirect(8, 2, 7));    // dihedral again, different encoding
    out.push_back(semidirect(9, 3, 4));    // 4^3 = 64 = 1 mod 9
    out.push_back(semidirect(5, 4, 2));    // order 20, faithful action
    out.push_back(semidirect(3, 4, 2));    // dicyclic order 12
    out.push_back(CayleyGroup::direct_product(symmetric(3), CayleyGroup::cyclic(4)));
    out.push_back(CayleyGroup::direct_product(quaternion(8), CayleyGroup::cyclic(2)));
    out.push_back(CayleyGroup::direct_product(dihedral(4), CayleyGroup::cyclic(2)));
    return out;
}

bool table_group_cyclic(const CayleyGroup& g) {
    for (unsigned x = 0; x < g.order(); ++x)
        if (g.order_of(x) == g.order()) return true;
    return false;
}

// checks all NormalSeries invariants from scratch
void require_valid_series(const CayleyGroup& p, const NormalSeries& s) {
    REQUIRE(std::includes(s.p1.elems.begin(), s.p1.elems.end(), s.p2.elems.begin(), s.p2.elems.end()));
    REQUIRE(is_normal(s.p1));
    REQUIRE(is_normal_in(s.p2, s.p1));
    REQUIRE(table_group_cyclic(quotient(p, s.p1)));
    REQUIRE(s.p2.cyclic());
    // middle built explicitly
    std::vector<unsigned> index_of(p.order(), 0);
    for (std::size_t j = 0; j < s.p1.elems.size(); ++j) index_of[s.p1.elems[j]] = static_cast<unsigned>(j);
    std::vector<std::vector<unsigned>> t(s.p1.size(), std::vector<unsigned>(s.p1.size()));
    for (unsigned x = 0; x < s.p1.size(); ++x)
        for (unsigned y = 0; y < s.p1.size(); ++y) t[x][y] = index_of[p.mul(s.p1.elems[x], s.p1.elems[y])];
    CayleyGroup p1g = CayleyGroup::from_table(std::move(t));
    std::vector<unsigned> p2_in;
    for (std::size_t j = 0; j < s.p1.elems.size(); ++j)
        if (s.p2.contains(s.p1.elems[j])) p2_in.push_back(static_cast<unsigned>(j));
    Subgroup p2rel = generated_subgroup(p1g, p2_in);
    REQUIRE(brute_is_metacyclic(quotient(p1g, p2rel)));
}

}  // namespace

TEST_CASE("table validation") {
    CHECK(thrown_kind([] { CayleyGroup::from_table({{0, 1}, {1, 1}}); }) == errc::invalid_input);
    CHECK(thrown_kind([] { CayleyGroup::from_table({{1, 0}, {0, 1}}); }) == errc::invalid_input);
    CayleyGroup z4 = CayleyGroup::cyclic(4);
    CHECK(z4.order_of(1) == 4);
    CHECK(z4.order_of(2) == 2);
    CHECK(z4.abelian());
    CHECK_FALSE(symmetric(3).abelian());
}

TEST_CASE("subgroups") {
    CHECK(subgroups(CayleyGroup::cyclic(1)).size() == 1);
    CHECK(subgroups(CayleyGroup::cyclic(4)).size() == 3);
    CHECK(subgroups(symmetric(3)).size() == 6);

    // closure re-verified for every subgroup of every fixture group
    for (const CayleyGroup& g : fixture_corpus_64()) {
        for (const Subgroup& h : subgroups(g)) {
            CHECK(h.contains(0));
            for (unsigned a : h.elems)
                for (unsigned b : h.elems) CHECK(h.contains(g.mul(a, b)));
            for (unsigned a : h.elems) CHECK(h.contains(g.inv(a)));
        }
    }
}

TEST_CASE("metacyclic predicate") {
    CHECK(is_metacyclic(abelian_table({2, 2})));
    CHECK_FALSE(is_metacyclic(abelian_table({2, 2, 2})));
    CHECK(is_metacyclic(CayleyGroup::cyclic(6)));
    CHECK(is_metacyclic(quaternion(8)));
    CHECK(is_metacyclic(dihedral(6)));
}

TEST_CASE("metacyclic agrees with definitional brute force on the corpus") {
    for (const CayleyGroup& g : fixture_corpus_64()) REQUIRE(is_metacyclic(g) == brute_is_metacyclic(g));
}

TEST_CASE("quotients of metacyclic groups are metacyclic") {
    for (const CayleyGroup& g : fixture_corpus_64()) {
        if (g.order() > 32 || !is_metacyclic(g)) continue;
        for (const Subgroup& h : subgroups(g)) {
            if (!is_normal(h)) continue;
            CHECK(is_metacyclic(quotient(g, h)));
        }
    }
}

TEST_CASE("sylow subgroups") {
    CayleyGroup z12 = CayleyGroup::cyclic(12);
    CHECK(sylow(z12, 2).size() == 4);
    CHECK(sylow(z12, 3).size() == 3);
    CayleyGroup s3 = symmetric(3);
    Subgroup a3 = sylow(s3, 3);
    CHECK(a3.size() == 3);
    for (unsigned x : a3.elems) CHECK(s3.order_of(x) % 3 == (x == 0 ? 1 : 0));
    CHECK(sylow(CayleyGroup::cyclic(5), 2).size() == 1);

    for (const CayleyGroup& g : fixture_corpus_64()) {
        for (std::uint64_t p : {2, 3, 5, 7}) {
            if (g.order() % p != 0) continue;
            Subgroup s = sylow(g, p);
            unsigned expect = 1;
            unsigned m = g.order();
            while (m % p == 0) {
                m /= static_cast<unsigned>(p);
                expect *= static_cast<unsigned>(p);
            }
            REQUIRE(s.size() == expect);
        }
    }
}

TEST_CASE("obstruction series on tables") {
    // elementary abelian rank four: series with |P2| = l, |P1| = l^3
    for (unsigned l : {2, 3}) {
        CayleyGroup p = abelian_table({l, l, l, l});
        auto s = obstruction_series(p);
        REQUIRE(s.has_value());
        CHECK(s->p2.size() == l);
        CHECK(s->p1.size() == l * l * l);
        require_valid_series(p, *s);
    }
    // rank five at l = 2 has no series
    CHECK_FALSE(obstruction_series(abelian_table({2, 2, 2, 2, 2})).has_value());
    // cyclic: P1 = P, P2 trivial
    CayleyGroup z8 = CayleyGroup::cyclic(8);
    auto s8 = obstruction_series(z8);
    REQUIRE(s8.has_value());
    CHECK(s8->p1.size() == 8);
    CHECK(s8->p2.size() == 1);
    require_valid_series(z8, *s8);

    CHECK(thrown_kind([] { obstruction_series(CayleyGroup::cyclic(6)); }) == errc::not_prime_power);

    // nonabelian p-groups
    for (const CayleyGroup& g : {quaternion(8), quaternion(16), dihedral(4), dihedral(8),
                                 semidirect(8, 2, 3), abelian_table({4, 2, 2, 2})}) {
        auto s = obstruction_series(g);
        REQUIRE(s.has_value() == brute_series_exists(g));
        if (s) require_valid_series(g, *s);
    }
}

TEST_CASE("abelian fast path matches the table search") {
    // all abelian p-groups of order <= 64
    std::vector<std::vector<unsigned>> shapes;
    for (unsigned p : {2, 3, 5, 7}) {
        std::vector<std::vector<unsigned>> parts{{}};
        // partitions with p^total <= 64
        std::function<void(unsigned, unsigned, std::vector<unsigned>&)> rec =
            [&](unsigned remaining, unsigned max_part, std::vector<unsigned>& acc) {
                if (!acc.empty()) {
                    std::vector<unsigned> factors;
                    for (unsigned e : acc) {
                        unsigned f = 1;
                        for (unsigned i = 0; i < e; ++i) f *= p;
                        factors.push_back(f);
                    }
                    shapes.push_back(factors);
                }
                for (unsigned part = 1; part <= std::min(remaining, max_part); ++part) {
                    acc.push_back(part);
                    rec(remaining - part, part, acc);
                    acc.pop_back();
                }
            };
        unsigned budget = 0;
        unsigned v = 1;
        while (v * p <= 64) {
            v *= p;
            ++budget;
        }
        std::vector<unsigned> acc;
        rec(budget, budget, acc);
    }
    for (const auto& factors : shapes) {
        CayleyGroup table = abelian_table(factors);
        AbelianGroup a = AbelianGroup::from_factors(std::vector<std::uint64_t>(factors.begin(), factors.end()));
        std::uint64_t p = a.primes().empty() ? 2 : a.primes()[0];
        bool fast = abelian_series_exists(a.sylow_exponents(p));
        auto table_result = obstruction_series(table);
        REQUIRE(fast == table_result.has_value());
        if (table_result) require_valid_series(table, *table_result);
    }
}

TEST_CASE("abelian invariants") {
    CHECK(abelian_rank(AbelianGroup::from_factors({2, 2, 2, 2, 2})) == 5);
    CHECK(abelian_rank(AbelianGroup::from_factors({3, 9})) == 2);
    CHECK(abelian_rank(AbelianGroup::from_factors({})) == 0);
    AbelianGroup g = AbelianGroup::from_factors({6, 4});
    CHECK(g.invariant_factors == std::vector<std::uint64_t>{2, 12});
    CHECK(g.order() == 24);
    CHECK(g.sylow_exponents(2) == std::vector<unsigned>{2, 1});
    CHECK(g.sylow_exponents(3) == std::vector<unsigned>{1});
}

TEST_CASE("classify") {
    // rank five elementary abelian over a conforming model
    Verdict v1 = classify(AbelianGroup::from_factors({3, 3, 3, 3, 3}), qp_model(2));
    CHECK(v1.kind == VerdictKind::not_admissible);
    CHECK(v1.witness_prime == 3);

    // all Sylow ranks <= 4 with enough roots of unity
    AbelianGroup g2 = AbelianGroup::from_factors({3, 3, 12, 12});
    Verdict v2 = classify(g2, qp_model(5, g2.order()));
    CHECK(v2.kind == VerdictKind::admissible);

    // missing roots of unity: necessity passes, sufficiency unmet
    Verdict v3 = classify(AbelianGroup::from_factors({3, 3, 3, 3}), qp_model(2, 1));
    CHECK(v3.kind == VerdictKind::unknown);

    // coprimality failure
    Verdict v4 = classify(AbelianGroup::from_factors({6}), qp_model(2, 6));
    CHECK(v4.kind == VerdictKind::unknown);
    CHECK(v4.reason_codes[0] == "coprimality_fails");

    // cyclic group over a conforming model
    Verdict v5 = classify(AbelianGroup::from_factors({6}), qp_model(5, 6));
    CHECK(v5.kind == VerdictKind::admissible);

    // non-finite residue field: the necessity criterion does not apply
    FieldModel local = qp_model(2);
    local.residue_kind = ResidueKind::local;
    Verdict v6 = classify(AbelianGroup::from_factors({3, 3, 3, 3, 3}), local);
    CHECK(v6.kind == VerdictKind::unknown);

    // table input goes through sylow computation
    Verdict v7 = classify(abelian_table({2, 2, 2, 2, 2}), qp_model(3));
    CHECK(v7.kind == VerdictKind::not_admissible);
    CHECK(v7.witness_prime == 2);
    Verdict v8 = classify(symmetric(3), qp_model(5, 6));
    CHECK(v8.kind == VerdictKind::admissible);  // both Sylows cyclic
    Verdict v9 = classify(quaternion(8), qp_model(3, 8));
    CHECK(v9.kind == VerdictKind::unknown);  // Q8 has a series but is not abelian rank <= 4
    for (const auto& code : v9.reason_codes) CHECK(code != "no_obstruction_series");
}

TEST_CASE("classify is consistent with the obstruction search") {
    // no Admissible verdict may coexist with a missing series: exhaustive over
    // abelian 3-groups of order <= 3^5
    std::function<void(unsigned, unsigned, std::vector<unsigned>&)> rec =
        [&](unsigned remaining, unsigned max_part, std::vector<unsigned>& acc) {
            if (!acc.empty()) {
                std::vector<std::uint64_t> factors;
                for (unsigned e : acc) {
                    std::uint64_t f = 1;
                    for (unsigned i = 0; i < e; ++i) f *= 3;
                    factors.push_back(f);
                }
                AbelianGroup g = AbelianGroup::from_factors(factors);
                Verdict v = classify(g, qp_model(2, g.order()));
                bool series = abelian_series_exists(g.sylow_exponents(3));
                if (v.kind == VerdictKind::admissible) CHECK(series);
                CHECK(v.kind == (series ? VerdictKind::admissible : VerdictKind::not_admissible));
            }
            for (unsigned part = 1; part <= std::min(remaining, max_part); ++part) {
                acc.push_back(part);
                rec(remaining - part, part, acc);
                acc.pop_back();
            }
        };
    std::vector<unsigned> acc;
    rec(5, 5, acc);
}

TEST_CASE("group input format") {
    GroupInput a = parse_group("abelian: [3, 3, 12, 12]\n");
    REQUIRE(a.abelian.has_value());
    CHECK(a.abelian->order() == 3 * 3 * 12 * 12);

    GroupInput t = parse_group("table:\n0 1\n1 0\n");
    REQUIRE(t.table.has_value());
    CHECK(t.table->order() == 2);

    CHECK(thrown_kind([] { parse_group("nonsense"); }) == errc::syntax_error);
    CHECK(thrown_kind([] { parse_group("table:\n0 1\n1 1\n"); }) == errc::invalid_input);
}
