#include <doctest.h>

#include "brauer/certificate.hpp"

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

ConstructionSpec spec45(std::array<std::uint64_t, 4> orders, std::uint64_t q, long long lambda) {
    std::uint64_t p = q, e = 1;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    e = 0;
    std::uint64_t m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    const FiniteField& k = ff_make(p, static_cast<unsigned>(e));
    ConstructionSpec s;
    s.kind = "thm45";
    s.orders = orders;
    s.k = &k;
    s.lambda = k.from_int(lambda);
    s.a = k.zero();
    return s;
}

ConstructionSpec spec42(std::array<std::uint64_t, 4> orders, std::uint64_t q, long long a, long long lambda) {
    ConstructionSpec s = spec45(orders, q, lambda);
    s.kind = "thm42";
    s.a = s.k->from_int(a);
    return s;
}

std::uint64_t smallest_q(std::uint64_t n) {
    for (std::uint64_t q = 2;; ++q) {
        std::uint64_t m = q, p = 0;
        for (std::uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                p = d;
                break;
            }
        if (p == 0) p = m;
        while (m % p == 0) m /= p;
        if (m == 1 && (q - 1) % n == 0) return q;
    }
}

}  // namespace

TEST_CASE("thm45 build and replay") {
    BuildResult res = build_thm45(spec45({2, 2, 1, 1}, 5, 2));
    VerifiedIndex v = verify_certificate(res.certificate);
    CHECK(v.index == 4);
    CHECK(v.division);
    CHECK(res.certificate.degree == 4);

    // trivial tuple
    BuildResult triv = build_thm45(spec45({1, 1, 1, 1}, 5, 2));
    VerifiedIndex vt = verify_certificate(triv.certificate);
    CHECK(vt.index == 1);
    CHECK(vt.division);

    // pure twist side
    BuildResult mside = build_thm45(spec45({1, 1, 2, 2}, 5, 2));
    VerifiedIndex vm = verify_certificate(mside.certificate);
    CHECK(vm.index == 4);
    CHECK(vm.division);

    CHECK(thrown_kind([] { build_thm45(spec45({2, 2, 1, 1}, 5, 1)); }) == errc::order_condition_failed);
    CHECK(thrown_kind([] { build_thm45(spec45({2, 2, 1, 1}, 7, 2)); }) == errc::roots_of_unity_missing);
}

TEST_CASE("thm45 galois group") {
    BuildResult res = build_thm45(spec45({2, 2, 3, 1}, 13, 2));
    AbelianGroup expected = AbelianGroup::from_factors({2, 2, 3, 1});
    CHECK(res.subfield.galois_group.invariant_factors == expected.invariant_factors);
    CHECK(res.subfield.generators.size() == 3);
    for (const auto& chi : res.subfield.galois_action) CHECK(chi.n == 12);
    VerifiedIndex v = verify_certificate(res.certificate);
    CHECK(v.division);
    CHECK(v.index == 12);
}

TEST_CASE("thm42 build and replay") {
    BuildResult res = build_thm42(spec42({2, 1, 2, 1}, 5, 2, 2));
    VerifiedIndex v = verify_certificate(res.certificate);
    CHECK(v.index == 4);
    CHECK(v.division);

    // degenerate first factor
    BuildResult deg1 = build_thm42(spec42({1, 1, 2, 1}, 5, 2, 2));
    VerifiedIndex vd = verify_certificate(deg1.certificate);
    CHECK(vd.index == 2);
    CHECK(vd.division);

    // a^(n1 n2) = 1 breaks the degree check
    CHECK(thrown_kind([] { build_thm42(spec42({2, 1, 2, 1}, 5, 4, 2)); }) == errc::order_condition_failed);
    CHECK(thrown_kind([] { build_thm42(spec42({2, 1, 2, 1}, 5, 2, 1)); }) == errc::order_condition_failed);
}

TEST_CASE("serialization round trip replays identically") {
    for (BuildResult res : {build_thm45(spec45({2, 2, 1, 1}, 5, 2)), build_thm42(spec42({2, 1, 2, 1}, 5, 2, 2)),
                            build_thm45(spec45({2, 1, 3, 1}, 13, 2))}) {
        std::string text = serialize_certificate(res.certificate);
        DivisionCertificate parsed = parse_certificate(text);
        CHECK(serialize_certificate(parsed) == text);
        VerifiedIndex v1 = verify_certificate(res.certificate);
        VerifiedIndex v2 = verify_certificate(parsed);
        CHECK(v1.index == v2.index);
        CHECK(v1.division == v2.division);
        CHECK(v1.trace == v2.trace);
    }
}

TEST_CASE("tampering fails the replay") {
    BuildResult res = build_thm45(spec45({2, 2, 1, 1}, 5, 2));
    std::string text = serialize_certificate(res.certificate);

    // inflate the recorded base index
    std::string bad = text;
    auto pos = bad.find("step=BASE | expect=4");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 20, "step=BASE | expect=2");
    CHECK(thrown_kind([&] { verify_certificate(parse_certificate(bad)); }) == errc::step_failed);

    // swap lambda for an element of deficient order: 4 = 2^2 is a square
    std::string bad2 = text;
    while (bad2.find(", 2)") != std::string::npos) bad2.replace(bad2.find(", 2)"), 4, ", 4)");
    CHECK(thrown_kind([&] { verify_certificate(parse_certificate(bad2)); }) == errc::step_failed);

    // tamper with the total
    std::string bad3 = text;
    pos = bad3.find("step=TOTAL | degree=4 | expect=4");
    REQUIRE(pos != std::string::npos);
    bad3.replace(pos, 32, "step=TOTAL | degree=4 | expect=2");
    CHECK(thrown_kind([&] { verify_certificate(parse_certificate(bad3)); }) == errc::step_failed);
}

TEST_CASE("monotone failure under a weak lambda") {
    // construct with a valid lambda, then forge lambda := 1 everywhere the
    // base class mentions it; verification must fail, never report division
    BuildResult res = build_thm45(spec45({2, 2, 1, 1}, 5, 2));
    std::string text = serialize_certificate(res.certificate);
    std::string forged = text;
    auto pos = forged.find("class=4; ((s + 4), 2)");
    REQUIRE(pos != std::string::npos);
    forged.replace(pos, 21, "class=4; ((s + 4), 1)");
    bool division_reported = false;
    try {
        VerifiedIndex v = verify_certificate(parse_certificate(forged));
        division_reported = v.division;
    } catch (const error& e) {
        CHECK(e.kind() == errc::step_failed);
    }
    CHECK_FALSE(division_reported);
}

TEST_CASE("all order tuples up to degree 12 are division") {
    for (std::uint64_t l1 = 1; l1 <= 12; ++l1)
        for (std::uint64_t l2 = 1; l1 * l2 <= 12; ++l2)
            for (std::uint64_t l3 = 1; l1 * l2 * l3 <= 12; ++l3)
                for (std::uint64_t l4 = 1; l1 * l2 * l3 * l4 <= 12; ++l4) {
                    std::uint64_t n = l1 * l2 * l3 * l4;
                    std::uint64_t q = smallest_q(n);
                    std::uint64_t p = q, e = 0;
                    for (std::uint64_t d = 2; d * d <= q; ++d)
                        if (q % d == 0) {
                            p = d;
                            break;
                        }
                    std::uint64_t m = q;
                    while (m % p == 0) {
                        m /= p;
                        ++e;
                    }
                    const FiniteField& k = ff_make(p, static_cast<unsigned>(e));
                    ConstructionSpec s;
                    s.kind = "thm45";
                    s.orders = {l1, l2, l3, l4};
                    s.k = &k;
                    s.lambda = k.generator();
                    s.a = k.zero();
                    VerifiedIndex v = verify_certificate(build_thm45(s).certificate);
                    REQUIRE(v.division);
                    REQUIRE(v.index == n);
                }
}

TEST_CASE("presentation text") {
    BuildResult res = build_thm45(spec45({2, 2, 1, 1}, 5, 2));
    std::string text = render_presentation(res.algebra, res.subfield);
    CHECK(text.find("degree 4") != std::string::npos);
    CHECK(text.find("C2 x C2") != std::string::npos);
    CHECK(text.find("y^2 = t") != std::string::npos);
}
