#include "brauer/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace brauer {

namespace {

std::vector<std::uint64_t> prime_factors_of(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_prime_power_of(std::uint64_t n, std::uint64_t& p_out) {
    if (n < 2) return false;
    auto ps = prime_factors_of(n);
    if (ps.size() != 1) return false;
    p_out = ps[0];
    return true;
}

}  // namespace

CayleyGroup CayleyGroup::from_table(std::vector<std::vector<unsigned>> table, unsigned bound) {
    CayleyGroup g;
    unsigned n = static_cast<unsigned>(table.size());
    require(n >= 1, errc::invalid_input, "empty multiplication table");
    require(n <= bound, errc::bound_exceeded,
            "group order " + std::to_string(n) + " exceeds the table bound " + std::to_string(bound));
    g.n_ = n;
    g.t_.resize(static_cast<std::size_t>(n) * n);
    for (unsigned i = 0; i < n; ++i) {
        require(table[i].size() == n, errc::invalid_input, "table is not square");
        for (unsigned j = 0; j < n; ++j) {
            require(table[i][j] < n, errc::invalid_input, "table entry out of range");
            g.t_[i * n + j] = static_cast<std::uint16_t>(table[i][j]);
        }
    }
    for (unsigned i = 0; i < n; ++i)
        require(g.mul(0, i) == i && g.mul(i, 0) == i, errc::invalid_input, "index 0 is not an identity");
    // rows and columns are permutations
    for (unsigned i = 0; i < n; ++i) {
        std::vector<bool> row(n, false), col(n, false);
        for (unsigned j = 0; j < n; ++j) {
            unsigned r = g.mul(i, j), c = g.mul(j, i);
            require(!row[r] && !col[c], errc::invalid_input, "table row or column is not a permutation");
            row[r] = col[c] = true;
        }
    }
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                require(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), errc::invalid_input,
                        "multiplication table is not associative");
    g.inv_.assign(n, 0);
    for (unsigned a = 0; a < n; ++a) {
        bool found = false;
        for (unsigned b = 0; b < n; ++b)
            if (g.mul(a, b) == 0) {
                require(g.mul(b, a) == 0, errc::invalid_input, "one-sided inverse");
                g.inv_[a] = static_cast<std::uint16_t>(b);
                found = true;
                break;
            }
        require(found, errc::invalid_input, "element without inverse");
    }
    return g;
}

CayleyGroup CayleyGroup::cyclic(unsigned n) {
    std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return from_table(std::move(t));
}

CayleyGroup CayleyGroup::direct_product(const CayleyGroup& a, const CayleyGroup& b) {
    unsigned n = a.order() * b.order();
    std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
    auto enc = [&](unsigned x, unsigned y) { return x * b.order() + y; };
    for (unsigned x1 = 0; x1 < a.order(); ++x1)
        for (unsigned y1 = 0; y1 < b.order(); ++y1)
            for (unsigned x2 = 0; x2 < a.order(); ++x2)
                for (unsigned y2 = 0; y2 < b.order(); ++y2)
                    t[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
    return from_table(std::move(t));
}

unsigned CayleyGroup::order_of(unsigned a) const {
    unsigned o = 1, x = a;
    while (x != 0) {
        x = mul(x, a);
        ++o;
    }
    return o;
}

bool CayleyGroup::abelian() const {
    for (unsigned a = 0; a < n_; ++a)
        for (unsigned b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool Subgroup::contains(unsigned x) const { return std::binary_search(elems.begin(), elems.end(), x); }

bool Subgroup::cyclic() const {
    for (unsigned x : elems)
        if (parent->order_of(x) == size()) return true;
    return false;
}

namespace {

std::vector<unsigned> close_under(const CayleyGroup& g, const std::vector<unsigned>& gens) {
    std::vector<char> in(g.order(), 0);
    std::vector<unsigned> list{0};
    in[0] = 1;
    for (std::size_t i = 0; i < list.size(); ++i)
        for (unsigned gen : gens) {
            unsigned y = g.mul(list[i], gen);
            if (!in[y]) {
                in[y] = 1;
                list.push_back(y);
            }
        }
    std::sort(list.begin(), list.end());
    return list;
}

std::vector<unsigned> reduce_generators(const CayleyGroup& g, const std::vector<unsigned>& elems) {
    std::vector<unsigned> gens;
    std::vector<unsigned> closed{0};
    for (unsigned x : elems) {
        if (std::binary_search(closed.begin(), closed.end(), x)) continue;
        gens.push_back(x);
        closed = close_under(g, gens);
        if (closed.size() == elems.size()) break;
    }
    return gens;
}

}  // namespace

Subgroup trivial_subgroup(const CayleyGroup& g) { return Subgroup{&g, {0}, {}}; }

Subgroup full_subgroup(const CayleyGroup& g) {
    std::vector<unsigned> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{&g, all, reduce_generators(g, all)};
}

Subgroup generated_subgroup(const CayleyGroup& g, const std::vector<unsigned>& gens) {
    auto elems = close_under(g, gens);
    return Subgroup{&g, elems, reduce_generators(g, elems)};
}

std::vector<Subgroup> subgroups(const CayleyGroup& g) {
    require(g.order() <= CayleyGroup::default_bound, errc::bound_exceeded,
            "subgroup enumeration bound exceeded");
    // atoms: distinct cyclic subgroups
    std::set<std::vector<unsigned>> seen;
    std::vector<Subgroup> atoms;
    for (unsigned x = 0; x < g.order(); ++x) {
        auto elems = close_under(g, {x});
        if (seen.insert(elems).second)
            atoms.push_back(Subgroup{&g, elems, x == 0 ? std::vector<unsigned>{} : std::vector<unsigned>{x}});
    }
    std::vector<Subgroup> all = atoms;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (const Subgroup& c : atoms) {
            if (c.size() == 1) continue;
            // join
            std::vector<unsigned> gens = all[i].generators;
            gens.insert(gens.end(), c.generators.begin(), c.generators.end());
            auto elems = close_under(g, gens);
            if (seen.insert(elems).second) {
                all.push_back(Subgroup{&g, elems, reduce_generators(g, elems)});
            }
        }
    }
    std::sort(all.begin(), all.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.size() != b.size() ? a.size() < b.size() : a.elems < b.elems; });
    return all;
}

bool is_normal(const Subgroup& h) {
    const CayleyGroup& g = *h.parent;
    for (unsigned x = 0; x < g.order(); ++x)
        for (unsigned gen : h.generators)
            if (!h.contains(g.mul(g.mul(x, gen), g.inv(x)))) return false;
    return true;
}

bool is_normal_in(const Subgroup& h, const Subgroup& g) {
    const CayleyGroup& gg = *h.parent;
    for (unsigned x : g.elems)
        for (unsigned gen : h.generators)
            if (!h.contains(gg.mul(gg.mul(x, gen), gg.inv(x)))) return false;
    return true;
}

CayleyGroup quotient(const CayleyGroup& g, const Subgroup& n, std::vector<unsigned>* coset_of) {
    require(is_normal(n), errc::precondition_violated, "quotient by a non-normal subgroup");
    std::vector<unsigned> rep(g.order(), g.order());
    std::vector<unsigned> reps;
    for (unsigned x = 0; x < g.order(); ++x) {
        if (rep[x] != g.order()) continue;
        unsigned least = g.order();
        std::vector<unsigned> coset;
        for (unsigned h : n.elems) {
            unsigned y = g.mul(x, h);
            coset.push_back(y);
            least = std::min(least, y);
        }
        for (unsigned y : coset) rep[y] = least;
    }
    std::set<unsigned> uniq(rep.begin(), rep.end());
    reps.assign(uniq.begin(), uniq.end());
    std::vector<unsigned> idx(g.order(), 0);
    for (std::size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<unsigned>(i);
    auto coset_index = [&](unsigned x) { return idx[rep[x]]; };

    unsigned m = static_cast<unsigned>(reps.size());
    std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) t[i][j] = coset_index(g.mul(reps[i], reps[j]));
    if (coset_of) {
        coset_of->assign(g.order(), 0);
        for (unsigned x = 0; x < g.order(); ++x) (*coset_of)[x] = coset_index(x);
    }
    return CayleyGroup::from_table(std::move(t));
}

namespace {

bool group_cyclic(const CayleyGroup& g) {
    for (unsigned x = 0; x < g.order(); ++x)
        if (g.order_of(x) == g.order()) return true;
    return false;
}

std::vector<Subgroup> cyclic_subgroups(const CayleyGroup& g) {
    std::set<std::vector<unsigned>> seen;
    std::vector<Subgroup> out;
    for (unsigned x = 0; x < g.order(); ++x) {
        auto elems = close_under(g, {x});
        if (seen.insert(elems).second)
            out.push_back(Subgroup{&g, elems, x == 0 ? std::vector<unsigned>{} : std::vector<unsigned>{x}});
    }
    std::sort(out.begin(), out.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.size() != b.size() ? a.size() < b.size() : a.elems < b.elems; });
    return out;
}

}  // namespace

bool is_metacyclic(const CayleyGroup& g) {
    for (const Subgroup& h : cyclic_subgroups(g)) {
        if (!is_normal(h)) continue;
        if (group_cyclic(quotient(g, h))) return true;
    }
    return false;
}

Subgroup sylow(const CayleyGroup& g, std::uint64_t p) {
    unsigned n = g.order();
    if (p < 2 || n % p != 0) return trivial_subgroup(g);
    unsigned target = 1;
    {
        unsigned m = n;
        while (m % p == 0) {
            m /= static_cast<unsigned>(p);
            target *= static_cast<unsigned>(p);
        }
    }
    Subgroup h = trivial_subgroup(g);
    while (h.size() < target) {
        // normalizer of h
        std::vector<unsigned> norm;
        for (unsigned x = 0; x < n; ++x) {
            bool ok = true;
            for (unsigned gen : h.generators)
                if (!h.contains(g.mul(g.mul(x, gen), g.inv(x)))) {
                    ok = false;
                    break;
                }
            if (ok) norm.push_back(x);
        }
        bool grew = false;
        for (unsigned y : norm) {
            if (h.contains(y)) continue;
            // order of the coset of y in N(h)/h
            unsigned c = 1;
            unsigned z = y;
            while (!h.contains(z)) {
                z = g.mul(z, y);
                ++c;
            }
            if (c % p == 0) {
                unsigned yp = y;
                for (std::uint64_t i = 1; i < c / p; ++i) yp = g.mul(yp, y);
                std::vector<unsigned> gens = h.generators;
                gens.push_back(yp);
                Subgroup hh = generated_subgroup(g, gens);
                if (hh.size() == h.size() * p) {
                    h = hh;
                    grew = true;
                    break;
                }
            }
        }
        require(grew, errc::internal, "sylow growth step failed");
    }
    return h;
}

std::optional<NormalSeries> obstruction_series(const CayleyGroup& p_group) {
    std::uint64_t p = 0;
    require(is_prime_power_of(p_group.order(), p) || p_group.order() == 1, errc::not_prime_power,
            "obstruction series is defined for p-groups");
    if (p_group.order() == 1) {
        Subgroup t = trivial_subgroup(p_group);
        return NormalSeries{full_subgroup(p_group), t};
    }
    auto subs = subgroups(p_group);

    // P1 candidates: normal with cyclic quotient, precomputed
    std::vector<char> p1_ok(subs.size(), 0);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!is_normal(subs[i])) continue;
        if (group_cyclic(quotient(p_group, subs[i]))) p1_ok[i] = 1;
    }

    std::vector<unsigned> sizes;
    for (const auto& s : subs)
        if (sizes.empty() || sizes.back() != s.size()) sizes.push_back(s.size());

    for (unsigned s2 : sizes) {
        for (auto it1 = sizes.rbegin(); it1 != sizes.rend(); ++it1) {
            unsigned s1 = *it1;
            if (s1 < s2) continue;
            for (const Subgroup& p2 : subs) {
                if (p2.size() != s2 || !p2.cyclic()) continue;
                for (std::size_t i = 0; i < subs.size(); ++i) {
                    const Subgroup& p1 = subs[i];
                    if (p1.size() != s1 || !p1_ok[i]) continue;
                    if (!std::includes(p1.elems.begin(), p1.elems.end(), p2.elems.begin(), p2.elems.end()))
                        continue;
                    if (!is_normal_in(p2, p1)) continue;
                    // middle quotient on the explicit table
                    CayleyGroup p1_table = [&] {
                        std::vector<unsigned> index_of(p_group.order(), 0);
                        for (std::size_t j = 0; j < p1.elems.size(); ++j) index_of[p1.elems[j]] = static_cast<unsigned>(j);
                        std::vector<std::vector<unsigned>> t(p1.size(), std::vector<unsigned>(p1.size()));
                        for (unsigned x = 0; x < p1.size(); ++x)
                            for (unsigned y = 0; y < p1.size(); ++y)
                                t[x][y] = index_of[p_group.mul(p1.elems[x], p1.elems[y])];
                        return CayleyGroup::from_table(std::move(t));
                    }();
                    std::vector<unsigned> p2_in_p1;
                    for (std::size_t j = 0; j < p1.elems.size(); ++j)
                        if (p2.contains(p1.elems[j])) p2_in_p1.push_back(static_cast<unsigned>(j));
                    Subgroup p2_rel{&p1_table, p2_in_p1, reduce_generators(p1_table, p2_in_p1)};
                    if (is_metacyclic(quotient(p1_table, p2_rel))) return NormalSeries{p1, p2};
                }
            }
        }
    }
    return std::nullopt;
}

AbelianGroup AbelianGroup::from_factors(std::vector<std::uint64_t> factors) {
    std::map<std::uint64_t, std::vector<unsigned>> exps;  // prime -> exponents, descending
    for (std::uint64_t d : factors) {
        require(d >= 1, errc::invalid_input, "cyclic factor must be >= 1");
        std::uint64_t m = d;
        for (std::uint64_t p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                unsigned e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                exps[p].push_back(e);
            }
        if (m > 1) exps[m].push_back(1);
    }
    std::size_t rank = 0;
    for (auto& [p, es] : exps) {
        std::sort(es.begin(), es.end(), std::greater<>());
        rank = std::max(rank, es.size());
    }
    std::vector<std::uint64_t> inv(rank, 1);
    for (auto& [p, es] : exps)
        for (std::size_t i = 0; i < es.size(); ++i) {
            std::uint64_t pe = 1;
            for (unsigned j = 0; j < es[i]; ++j) pe *= p;
            inv[i] *= pe;  // inv[0] gets the largest exponent
        }
    std::reverse(inv.begin(), inv.end());  // ascending divisibility chain
    AbelianGroup g;
    g.invariant_factors = std::move(inv);
    return g;
}

std::uint64_t AbelianGroup::order() const {
    std::uint64_t n = 1;
    for (auto d : invariant_factors) n *= d;
    return n;
}

std::vector<unsigned> AbelianGroup::sylow_exponents(std::uint64_t p) const {
    std::vector<unsigned> out;
    for (auto d : invariant_factors) {
        unsigned e = 0;
        while (d % p == 0) {
            d /= p;
            ++e;
        }
        if (e > 0) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<std::uint64_t> AbelianGroup::primes() const { return prime_factors_of(order()); }

unsigned abelian_rank(const AbelianGroup& a) { return static_cast<unsigned>(a.invariant_factors.size()); }

bool abelian_series_exists(const std::vector<unsigned>& exponents) {
    // P2 and P/P1 absorb one cyclic factor each; the middle must have rank <= 2.
    // Rank subadditivity makes rank >= 5 impossible regardless of exponents.
    return exponents.size() <= 4;
}

namespace {

struct SylowFacts {
    std::uint64_t prime;
    bool abelian;
    unsigned rank;
    bool series_exists;
};

Verdict classify_from_facts(std::uint64_t order, const std::vector<SylowFacts>& facts, const FieldModel& model) {
    Verdict v;
    for (const auto& f : facts) v.sylow.push_back(SylowSummary{f.prime, f.abelian, f.rank, f.series_exists});

    if (model.residue_char != 0 && order % model.residue_char == 0) {
        v.kind = VerdictKind::unknown;
        v.reason_codes.push_back("coprimality_fails");
        v.reasons.push_back("the group order shares the residue characteristic " +
                            std::to_string(model.residue_char));
        return v;
    }

    bool some_without_series = false;
    std::uint64_t witness = 0;
    for (const auto& f : facts)
        if (!f.series_exists && witness == 0) {
            some_without_series = true;
            witness = f.prime;
        }

    if (some_without_series && model.two_dim_local && model.residue_kind == ResidueKind::finite) {
        v.kind = VerdictKind::not_admissible;
        v.witness_prime = witness;
        v.reason_codes.push_back("no_obstruction_series");
        v.reasons.push_back("the " + std::to_string(witness) +
                            "-Sylow subgroup admits no series with cyclic ends and metacyclic middle");
        return v;
    }

    bool all_rank4 = true;
    for (const auto& f : facts)
        if (!f.abelian || f.rank > 4) all_rank4 = false;

    if (all_rank4 && model.two_dim_local && model.residue_kind == ResidueKind::finite &&
        model.roots_of_unity_bound >= order) {
        v.kind = VerdictKind::admissible;
        v.reason_codes.push_back("sylow_rank_at_most_4");
        v.reasons.push_back("every Sylow subgroup is abelian of rank <= 4 and the model provides mu_" +
                            std::to_string(order));
        return v;
    }

    v.kind = VerdictKind::unknown;
    if (!model.two_dim_local) {
        v.reason_codes.push_back("model_not_two_dim_local");
        v.reasons.push_back("the model is not a function field of a curve over a complete discretely valued field");
    }
    if (model.residue_kind != ResidueKind::finite) {
        v.reason_codes.push_back("residue_kind_not_finite");
        v.reasons.push_back("the necessity and sufficiency criteria implemented here need a finite residue field");
    }
    if (some_without_series) {
        v.reason_codes.push_back("obstruction_found_but_model_inconclusive");
        v.reasons.push_back("a Sylow subgroup lacks the series, but the model hypotheses do not support the conclusion");
    } else if (!all_rank4) {
        v.reason_codes.push_back("necessity_holds_sufficiency_unmet");
        v.reasons.push_back("every Sylow subgroup has a series, but some is not an abelian group of rank <= 4");
    } else if (model.roots_of_unity_bound < order) {
        v.reason_codes.push_back("mu_bound_insufficient");
        v.reasons.push_back("the model guarantees only mu_" + std::to_string(model.roots_of_unity_bound) +
                            ", mu_" + std::to_string(order) + " is needed");
    }
    if (v.reasons.empty()) {
        v.reason_codes.push_back("out_of_scope");
        v.reasons.push_back("no implemented criterion applies");
    }
    return v;
}

unsigned table_p_rank(const CayleyGroup& p_grp, std::uint64_t p) {
    // rank = log_p of |P| / |<x^p>|
    std::vector<unsigned> pth;
    for (unsigned x = 0; x < p_grp.order(); ++x) {
        unsigned y = x;
        for (std::uint64_t i = 1; i < p; ++i) y = p_grp.mul(y, x);
        pth.push_back(y);
    }
    Subgroup frat = generated_subgroup(p_grp, pth);
    unsigned idx = p_grp.order() / frat.size();
    unsigned r = 0;
    while (idx > 1) {
        idx /= static_cast<unsigned>(p);
        ++r;
    }
    return r;
}

}  // namespace

Verdict classify(const CayleyGroup& g, const FieldModel& model) {
    std::vector<SylowFacts> facts;
    for (std::uint64_t p : prime_factors_of(g.order())) {
        Subgroup s = sylow(g, p);
        std::vector<unsigned> index_of(g.order(), 0);
        for (std::size_t j = 0; j < s.elems.size(); ++j) index_of[s.elems[j]] = static_cast<unsigned>(j);
        std::vector<std::vector<unsigned>> t(s.size(), std::vector<unsigned>(s.size()));
        for (unsigned x = 0; x < s.size(); ++x)
            for (unsigned y = 0; y < s.size(); ++y) t[x][y] = index_of[g.mul(s.elems[x], s.elems[y])];
        CayleyGroup p_grp = CayleyGroup::from_table(std::move(t));

        SylowFacts f{p, p_grp.abelian(), 0, false};
        if (f.abelian) {
            f.rank = table_p_rank(p_grp, p);
            f.series_exists = f.rank <= 4;
        } else {
            f.series_exists = obstruction_series(p_grp).has_value();
        }
        facts.push_back(f);
    }
    return classify_from_facts(g.order(), facts, model);
}

Verdict classify(const AbelianGroup& g, const FieldModel& model) {
    std::vector<SylowFacts> facts;
    for (std::uint64_t p : g.primes()) {
        auto exps = g.sylow_exponents(p);
        facts.push_back(SylowFacts{p, true, static_cast<unsigned>(exps.size()), abelian_series_exists(exps)});
    }
    return classify_from_facts(g.order(), facts, model);
}

GroupInput parse_group(const std::string& text) {
    GroupInput out;
    std::istringstream in(text);
    std::string line;
    std::string first;
    while (std::getline(in, line)) {
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        first = line.substr(b);
        break;
    }
    require(!first.empty(), errc::syntax_error, "empty group description");
    if (first.rfind("abelian:", 0) == 0) {
        std::string body = first.substr(8);
        std::size_t l = body.find('['), r = body.find(']');
        require(l != std::string::npos && r != std::string::npos && r > l, errc::syntax_error,
                "expected 'abelian: [d1,...,dr]'");
        std::vector<std::uint64_t> factors;
        std::string item;
        std::istringstream items(body.substr(l + 1, r - l - 1));
        while (std::getline(items, item, ',')) {
            std::size_t bb = item.find_first_not_of(" \t");
            if (bb == std::string::npos) continue;
            try {
                factors.push_back(std::stoull(item.substr(bb)));
            } catch (const std::exception&) {
                fail(errc::syntax_error, "bad cyclic factor '" + item + "'");
            }
        }
        out.abelian = AbelianGroup::from_factors(std::move(factors));
        return out;
    }
    if (first.rfind("table:", 0) == 0) {
        std::vector<std::vector<unsigned>> rows;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::vector<unsigned> row;
            unsigned x;
            while (ls >> x) row.push_back(x);
            if (!row.empty()) rows.push_back(std::move(row));
        }
        out.table = CayleyGroup::from_table(std::move(rows));
        return out;
    }
    fail(errc::syntax_error, "group file must start with 'abelian:' or 'table:'");
}

std::string verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::not_admissible: return "not_admissible";
        case VerdictKind::admissible: return "admissible";
        case VerdictKind::unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace brauer
