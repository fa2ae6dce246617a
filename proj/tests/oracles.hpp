// Shared brute-force oracles and fixtures.  Everything here recomputes the
// library's claims from definitions, by exhaustive search where possible, and
// must stay independent of the implementation paths it checks.
#ifndef BRAUER_TESTS_ORACLES_HPP
#define BRAUER_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "brauer/group.hpp"
#include "brauer/poly.hpp"
#include "brauer/ratfunc.hpp"
#include "brauer/report.hpp"

namespace oracles {

using namespace brauer;

// ---- finite fields ----------------------------------------------------------

// order of the class of a in k*/k*^n by enumerating n-th powers
inline std::uint64_t brute_power_class_order(const FiniteField& k, FFElem a, std::uint64_t n) {
    std::set<std::uint64_t> nth_powers;
    for (std::uint64_t x = 1; x < k.q(); ++x) nth_powers.insert(k.pow(x, n));
    std::uint64_t cur = a.v;
    for (std::uint64_t m = 1;; ++m) {
        if (nth_powers.count(cur)) return m;
        cur = k.mul(cur, a.v);
    }
}

// ---- rational functions -----------------------------------------------------

inline RatFunc random_ratfunc(const FiniteField& k, Lcg& rng, int max_deg = 2) {
    auto random_poly = [&](int deg) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1);
        for (auto& ci : c) ci = rng.bounded(k.q());
        c.back() = 1 + rng.bounded(k.q() - 1);
        return Poly(k, std::move(c));
    };
    Poly num = random_poly(static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_deg) + 1)));
    if (rng.bounded(3) == 0)
        return RatFunc(num, random_poly(static_cast<int>(1 + rng.bounded(static_cast<std::uint64_t>(max_deg)))));
    return RatFunc::from_poly(num);
}

// all places in the combined support of the given functions, plus infinity
inline std::vector<Place> support_places(const std::vector<RatFunc>& fs) {
    std::vector<Place> out;
    for (const auto& f : fs) {
        for (const Poly& p : {f.num(), f.den()})
            for (const auto& [g, m] : factor(p).factors) {
                Place v = Place::finite(g);
                if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
            }
    }
    out.push_back(Place::infinity(fs.front().field()));
    return out;
}

// smallest m dividing n with residue^{m (Q-1)/n} = 1: the residue-order route,
// powering in kappa(v) rather than through invariants
inline std::uint64_t residue_order_at(const Poly& residue, const Place& v, std::uint64_t n) {
    const FiniteField& k = v.field();
    std::uint64_t Q = 1;
    for (unsigned i = 0; i < v.degree(); ++i) Q *= k.q();
    for (std::uint64_t m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        bool is_one;
        if (v.is_infinity()) {
            is_one = k.pow(residue.coeff(0).v, m * ((Q - 1) / n)) == 1;
        } else {
            Poly y = poly_powmod(residue, m * ((Q - 1) / n), v.poly());
            is_one = y.is_one();
        }
        if (is_one) return m;
    }
    return n;
}

// ---- groups -----------------------------------------------------------------

inline CayleyGroup dihedral(unsigned m) {
    // 2m elements: r^i s^j, encoded i + m*j
    unsigned n = 2 * m;
    std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
    auto enc = [&](unsigned i, unsigned j) { return i + m * j; };
    for (unsigned i1 = 0; i1 < m; ++i1)
        for (unsigned j1 = 0; j1 < 2; ++j1)
            for (unsigned i2 = 0; i2 < m; ++i2)
                for (unsigned j2 = 0; j2 < 2; ++j2) {
                    unsigned i = j1 ? (i1 + m - i2) % m : (i1 + i2) % m;
                    t[enc(i1, j1)][enc(i2, j2)] = enc(i, (j1 + j2) % 2);
                }
    return CayleyGroup::from_table(std::move(t));
}

// generalized quaternion group of order 2^k (k >= 3), from its standard
// faithful presentation inside units of the group ring; built by words
inline CayleyGroup quaternion(unsigned order) {
    // x of order order/1... presentation: a^{order/2} = 1 implicitly via
    // a^{order/4} = b^2, b a b^{-1} = a^{-1}; elements a^i b^j, i < order/2, j < 2
    unsigned m = order / 2;
    std::vector<std::vector<unsigned>> t(order, std::vector<unsigned>(order));
    auto enc = [&](unsigned i, unsigned j) { return i + m * j; };
    for (unsigned i1 = 0; i1 < m; ++i1)
        for (unsigned j1 = 0; j1 < 2; ++j1)
            for (unsigned i2 = 0; i2 < m; ++i2)
                for (unsigned j2 = 0; j2 < 2; ++j2) {
                    unsigned i, j;
                    if (j1 == 0) {
                        i = (i1 + i2) % m;
                        j = j2;
                    } else {
                        // b a^i2 = a^{-i2} b ; b b = a^{m/2}
                        i = (i1 + m - i2) % m;
                        j = 1 + j2;
                        if (j == 2) {
                            i = (i + m / 2) % m;
                            j = 0;
                        }
                    }
                    t[enc(i1, j1)][enc(i2, j2)] = enc(i, j);
                }
    return CayleyGroup::from_table(std::move(t));
}

// symmetric group on m letters (m small), elements = permutations in lex order
inline CayleyGroup symmetric(unsigned m) {
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // identity must sit at index 0: lex order puts it there
    unsigned n = static_cast<unsigned>(perms.size());
    std::map<std::vector<unsigned>, unsigned> idx;
    for (unsigned i = 0; i < n; ++i) idx[perms[i]] = i;
    std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            std::vector<unsigned> c(m);
            for (unsigned i = 0; i < m; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = idx[c];
        }
    return CayleyGroup::from_table(std::move(t));
}

inline CayleyGroup alternating4() {
    // even permutations of 4 letters
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> p{0, 1, 2, 3};
    do {
        unsigned inv = 0;
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inv;
        if (inv % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    unsigned n = static_cast<unsigned>(perms.size());
    std::map<std::vector<unsigned>, unsigned> idx;
    for (unsigned i = 0; i < n; ++i) idx[perms[i]] = i;
    std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            std::vector<unsigned> c(4);
            for (unsigned i = 0; i < 4; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = idx[c];
        }
    return CayleyGroup::from_table(std::move(t));
}

// semidirect product C_m x| C_k with the action a -> a^s (s^k = 1 mod m)
inline CayleyGroup semidirect(unsigned m, unsigned k, unsigned s) {
    unsigned n = m * k;
    std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
    auto enc = [&](unsigned i, unsigned j) { return i + m * j; };
    auto act = [&](unsigned i, unsigned j) {  // a^i twisted by b^j
        unsigned r = i;
        for (unsigned step = 0; step < j; ++step) r = (r * s) % m;
        return r;
    };
    for (unsigned i1 = 0; i1 < m; ++i1)
        for (unsigned j1 = 0; j1 < k; ++j1)
            for (unsigned i2 = 0; i2 < m; ++i2)
                for (unsigned j2 = 0; j2 < k; ++j2)
                    t[enc(i1, j1)][enc(i2, j2)] = enc((i1 + act(i2, j1)) % m, (j1 + j2) % k);
    return CayleyGroup::from_table(std::move(t));
}

inline CayleyGroup abelian_table(const std::vector<unsigned>& factors) {
    CayleyGroup g = CayleyGroup::cyclic(factors.empty() ? 1 : factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i)
        g = CayleyGroup::direct_product(g, CayleyGroup::cyclic(factors[i]));
    return g;
}

// definitional metacyclic test: enumerate every subgroup, full-set normality,
// explicit quotient cyclicity
inline bool brute_is_metacyclic(const CayleyGroup& g) {
    for (const Subgroup& h : subgroups(g)) {
        bool cyclic = false;
        for (unsigned x : h.elems)
            if (g.order_of(x) == h.size()) cyclic = true;
        if (!cyclic) continue;
        bool normal = true;
        for (unsigned x = 0; x < g.order() && normal; ++x)
            for (unsigned e : h.elems)
                if (!h.contains(g.mul(g.mul(x, e), g.inv(x)))) {
                    normal = false;
                    break;
                }
        if (!normal) continue;
        CayleyGroup q = quotient(g, h);
        for (unsigned x = 0; x < q.order(); ++x)
            if (q.order_of(x) == q.order()) return true;
    }
    return false;
}

// definitional obstruction-series existence over the full subgroup lattice
inline bool brute_series_exists(const CayleyGroup& p_group) {
    auto subs = subgroups(p_group);
    for (const Subgroup& p1 : subs) {
        bool p1_normal = true;
        for (unsigned x = 0; x < p_group.order() && p1_normal; ++x)
            for (unsigned e : p1.elems)
                if (!p1.contains(p_group.mul(p_group.mul(x, e), p_group.inv(x)))) {
                    p1_normal = false;
                    break;
                }
        if (!p1_normal) continue;
        CayleyGroup top = quotient(p_group, p1);
        bool top_cyclic = false;
        for (unsigned x = 0; x < top.order(); ++x)
            if (top.order_of(x) == top.order()) top_cyclic = true;
        if (!top_cyclic) continue;
        // p1 as its own table
        std::vector<unsigned> index_of(p_group.order(), 0);
        for (std::size_t j = 0; j < p1.elems.size(); ++j) index_of[p1.elems[j]] = static_cast<unsigned>(j);
        std::vector<std::vector<unsigned>> t(p1.size(), std::vector<unsigned>(p1.size()));
        for (unsigned x = 0; x < p1.size(); ++x)
            for (unsigned y = 0; y < p1.size(); ++y)
                t[x][y] = index_of[p_group.mul(p1.elems[x], p1.elems[y])];
        CayleyGroup p1g = CayleyGroup::from_table(std::move(t));
        for (const Subgroup& p2 : subgroups(p1g)) {
            bool cyclic = false;
            for (unsigned x : p2.elems)
                if (p1g.order_of(x) == p2.size()) cyclic = true;
            if (!cyclic) continue;
            bool p2_normal = true;
            for (unsigned x = 0; x < p1g.order() && p2_normal; ++x)
                for (unsigned e : p2.elems)
                    if (!p2.contains(p1g.mul(p1g.mul(x, e), p1g.inv(x)))) {
                        p2_normal = false;
                        break;
                    }
            if (!p2_normal) continue;
            if (brute_is_metacyclic(quotient(p1g, p2))) return true;
        }
    }
    return false;
}

// definitional series existence for an abelian group given by cyclic factors,
// enumerating the subgroups with cyclic quotient as kernels of characters and
// testing middles on explicit quotient tables; metacyclic results are memoized
// by the element-order profile, which determines abelian groups up to
// isomorphism
inline bool coord_series_exists_abelian(const std::vector<unsigned>& factors) {
    CayleyGroup g = abelian_table(factors);
    unsigned N = g.order();
    unsigned M = 1;
    for (unsigned f : factors) M = static_cast<unsigned>(std::lcm(M, f));
    auto coords = [&](unsigned x) {
        std::vector<unsigned> c(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            c[i] = x % factors[i];
            x /= factors[i];
        }
        return c;
    };
    std::set<std::vector<unsigned>> kernels;
    for (unsigned ch = 0; ch < N; ++ch) {
        auto cc = coords(ch);
        std::vector<unsigned> ker;
        for (unsigned x = 0; x < N; ++x) {
            auto cx = coords(x);
            unsigned long long s = 0;
            for (std::size_t i = 0; i < factors.size(); ++i)
                s += static_cast<unsigned long long>(cc[i]) * cx[i] * (M / factors[i]);
            if (s % M == 0) ker.push_back(x);
        }
        kernels.insert(ker);
    }

    std::map<std::vector<unsigned>, bool> memo;
    auto metacyclic_on_table = [&](const CayleyGroup& q) {
        std::vector<unsigned> key{q.order()};
        for (unsigned x = 0; x < q.order(); ++x) key.push_back(q.order_of(x));
        std::sort(key.begin() + 1, key.end());
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool res = false;
        std::set<std::vector<unsigned>> seen;
        for (unsigned x = 0; x < q.order() && !res; ++x) {
            Subgroup h = generated_subgroup(q, {x});
            if (!seen.insert(h.elems).second) continue;
            CayleyGroup qq = quotient(q, h);
            for (unsigned y = 0; y < qq.order(); ++y)
                if (qq.order_of(y) == qq.order()) {
                    res = true;
                    break;
                }
        }
        memo[key] = res;
        return res;
    };

    for (const auto& ker : kernels) {
        Subgroup p1 = generated_subgroup(g, ker);
        std::vector<unsigned> index_of(N, 0);
        for (std::size_t j = 0; j < p1.elems.size(); ++j) index_of[p1.elems[j]] = static_cast<unsigned>(j);
        std::vector<std::vector<unsigned>> t(p1.size(), std::vector<unsigned>(p1.size()));
        for (unsigned x = 0; x < p1.size(); ++x)
            for (unsigned y = 0; y < p1.size(); ++y)
                t[x][y] = index_of[g.mul(p1.elems[x], p1.elems[y])];
        CayleyGroup p1g = CayleyGroup::from_table(std::move(t));
        std::set<std::vector<unsigned>> p2_seen;
        for (unsigned y = 0; y < p1g.order(); ++y) {
            Subgroup p2 = generated_subgroup(p1g, {y});
            if (!p2_seen.insert(p2.elems).second) continue;
            if (metacyclic_on_table(quotient(p1g, p2))) return true;
        }
    }
    return false;
}

}  // namespace oracles

#endif
