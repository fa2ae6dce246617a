#include <doctest.h>

#include "brauer/ratfunc.hpp"
#include "oracles.hpp"

using namespace brauer;

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

}  // namespace

TEST_CASE("parser") {
    const FiniteField& f3 = ff_make(3, 1);
    RatFunc f = parse("t^2 + 1", f3);
    CHECK(f.num() == Poly(f3, {1, 0, 1}));
    CHECK(f.den().is_one());

    CHECK(parse("(t-1)/(t-1)", f3).is_one());
    CHECK(thrown_kind([&] { parse("1/(t-t)", f3); }) == errc::division_by_zero_polynomial);
    CHECK(thrown_kind([&] { parse("t +", f3); }) == errc::syntax_error);
    CHECK(thrown_kind([&] { parse("q + 1", f3); }) == errc::syntax_error);

    // grammar pieces: unary minus, powers, products, g
    const FiniteField& f9 = ff_make(3, 2);
    RatFunc g = parse("-g^3*t^2/(t + g)", f9);
    CHECK(!g.is_zero());
    CHECK(parse("2*3", f3) == RatFunc::constant(f3.zero()));
}

TEST_CASE("parse after print is the identity") {
    Lcg rng(11);
    for (auto [p, e] : {std::pair<int, int>{3, 1}, {5, 1}, {3, 2}, {13, 1}}) {
        const FiniteField& k = ff_make(static_cast<std::uint64_t>(p), static_cast<unsigned>(e));
        for (int i = 0; i < 50; ++i) {
            RatFunc f = oracles::random_ratfunc(k, rng, 3);
            CHECK(parse(f.to_string(), k) == f);
        }
    }
}

TEST_CASE("valuation examples") {
    const FiniteField& f5 = ff_make(5, 1);
    RatFunc f = parse("t^2/(t-1)", f5);
    CHECK(valuation(f, Place::finite(Poly::x(f5))) == 2);
    CHECK(valuation(f, Place::infinity(f5)) == -1);
    CHECK(valuation(f, Place::finite(Poly(f5, {4, 1}))) == -1);
    CHECK(thrown_kind([&] { valuation(RatFunc(f5), Place::infinity(f5)); }) == errc::zero_function);
}

TEST_CASE("valuation is a valuation") {
    Lcg rng(23);
    const FiniteField& k = ff_make(5, 1);
    std::vector<Place> places{Place::finite(Poly::x(k)), Place::finite(Poly(k, {1, 1})),
                              Place::finite(Poly(k, {2, 0, 1})), Place::infinity(k)};
    REQUIRE(is_irreducible(Poly(k, {2, 0, 1})));
    for (int i = 0; i < 200; ++i) {
        RatFunc f = oracles::random_ratfunc(k, rng);
        RatFunc g = oracles::random_ratfunc(k, rng);
        if (f.is_zero() || g.is_zero()) continue;
        for (const Place& v : places) {
            CHECK(valuation(f * g, v) == valuation(f, v) + valuation(g, v));
            RatFunc s = f + g;
            if (s.is_zero()) continue;
            long vs = valuation(s, v), vf = valuation(f, v), vg = valuation(g, v);
            CHECK(vs >= std::min(vf, vg));
            if (vf != vg) CHECK(vs == std::min(vf, vg));
        }
    }
}

TEST_CASE("degree formula") {
    Lcg rng(31);
    for (auto [p, e] : {std::pair<int, int>{3, 1}, {5, 1}, {3, 2}, {13, 1}}) {
        const FiniteField& k = ff_make(static_cast<std::uint64_t>(p), static_cast<unsigned>(e));
        for (int i = 0; i < 250; ++i) {
            RatFunc f = oracles::random_ratfunc(k, rng, 3);
            if (f.is_zero()) continue;
            long sum = 0;
            for (const Place& v : oracles::support_places({f}))
                sum += valuation(f, v) * static_cast<long>(v.degree());
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("residues") {
    const FiniteField& f3 = ff_make(3, 1);
    Place at_zero = Place::finite(Poly::x(f3));
    CHECK(residue_at(parse("t - 1", f3), at_zero) == Poly::constant(f3.elem(2)));
    CHECK(residue_at(parse("(t+1)/t", f3), Place::infinity(f3)) == Poly::constant(f3.one()));
    CHECK(thrown_kind([&] { residue_at(parse("t", f3), at_zero); }) == errc::not_a_unit);

    // residues in a residue field of degree two
    Place quad = Place::finite(Poly(f3, {2, 1, 1}));  // t^2 + t + 2, irreducible
    Poly r = residue_at(parse("1/t", f3), quad);
    CHECK(poly_mulmod(r, Poly::x(f3), quad.poly()).is_one());
}

TEST_CASE("class_order_global examples") {
    const FiniteField& f5 = ff_make(5, 1);
    for (std::uint64_t m : {1, 2, 4}) CHECK(class_order_global(parse("t + 1", f5), m) == m);
    const FiniteField& f13 = ff_make(13, 1);
    for (std::uint64_t m : {3, 6, 12}) CHECK(class_order_global(parse("t + 1", f13), m) == m);
    CHECK(class_order_global(parse("t^2", f5), 2) == 1);
    CHECK(class_order_global(parse("2*t", f5), 4) == 4);
    CHECK(thrown_kind([&] { class_order_global(parse("t", f5), 3); }) == errc::roots_of_unity_missing);
    // the constant class matters even when every valuation is divisible by n
    CHECK(class_order_global(parse("2*t^2", f5), 2) == 2);
    CHECK(class_order_global(parse("2*t^2", f5), 4) == 4);
    CHECK(class_order_global(parse("4*t^2", f5), 4) == 2);
}

TEST_CASE("class_order_global properties") {
    Lcg rng(47);
    for (auto [q, e] : {std::pair<int, int>{5, 1}, {13, 1}, {3, 2}}) {
        const FiniteField& k = ff_make(static_cast<std::uint64_t>(q), static_cast<unsigned>(e));
        std::vector<std::uint64_t> divisors;
        for (std::uint64_t d = 1; d <= k.q() - 1; ++d)
            if ((k.q() - 1) % d == 0) divisors.push_back(d);
        for (int i = 0; i < 120; ++i) {
            RatFunc f = oracles::random_ratfunc(k, rng);
            if (f.is_zero()) continue;
            std::uint64_t n = divisors[rng.bounded(divisors.size())];
            std::uint64_t ord = class_order_global(f, n);
            CHECK(n % ord == 0);
            if (ord == 1) {
                // explicit n-th root extraction: valuations all divisible by n
                // and the leading unit an n-th power
                for (const Place& v : oracles::support_places({f}))
                    CHECK(valuation(f, v) % static_cast<long>(n) == 0);
                CHECK(power_class_order(k, f.num().lead(), n) == 1);
            }
            // order of f^2 divides order of f
            CHECK(ord % class_order_global(f * f, n) == 0);
        }
    }
}

TEST_CASE("substitution composes") {
    const FiniteField& f5 = ff_make(5, 1);
    RatFunc f = parse("(t^2 + 1)/(t - 2)", f5);
    RatFunc s = parse("t^2 - 1", f5);  // viewed in the new variable
    RatFunc composed = substitute(f, s);
    // evaluate both sides at a few points
    for (std::uint64_t x = 0; x < 5; ++x) {
        FFElem xs{&f5, x};
        FFElem sx = s.num().eval(xs);
        Poly den = f.den();
        if (den.eval(sx).is_zero() || composed.den().eval(xs).is_zero()) continue;
        FFElem lhs{&f5, f5.mul(f.num().eval(sx).v, f5.inv(f.den().eval(sx).v))};
        FFElem rhs{&f5, f5.mul(composed.num().eval(xs).v, f5.inv(composed.den().eval(xs).v))};
        CHECK(lhs == rhs);
    }
}
