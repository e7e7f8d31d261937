#include <doctest.h>

#include "binpart/error.hpp"
#include "binpart/gf2poly.hpp"
#include "oracles.hpp"

using namespace binpart;
using namespace binpart::gf2;

namespace {

Poly2 P(const char* text) { return parse_poly(text); }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvariantViolation;
}

}  // namespace

TEST_CASE("degree marker for the zero polynomial") {
    CHECK(Poly2().degree().is_neg_inf());
    CHECK(Poly2().degree() < Poly2::one().degree());
    CHECK(code_of([] { (void)Poly2().degree().value(); }) == ErrorCode::InvariantViolation);
    CHECK(P("1+x^70").degree().value() == 70);
    CHECK(to_string(Poly2().degree()) == "-inf");
}

TEST_CASE("text round trips") {
    CHECK(to_caret(P("1+x+x^4+x^9")) == "1+x+x^4+x^9");
    CHECK(to_hex(P("1+x+x^4+x^9")) == "0x213");
    CHECK(P("0x213") == P("1+x+x^4+x^9"));
    CHECK(to_caret(Poly2()) == "0");
    CHECK(to_hex(Poly2()) == "0x0");
    CHECK(P("x^3 + 1 + x^3") == Poly2::one());
    CHECK(P(" x^2 + x ") == P("x+x^2"));
    CHECK(P("0") == Poly2());
    CHECK(code_of([] { P("1+y"); }) == ErrorCode::Parse);
    CHECK(code_of([] { P(""); }) == ErrorCode::Parse);
    CHECK(code_of([] { P("0xZ"); }) == ErrorCode::Parse);
    oracle::Gen g(11);
    for (int i = 0; i < 200; ++i) {
        const Poly2 p = g.poly(300);
        CHECK(P(to_caret(p).c_str()) == p);
        CHECK(P(to_hex(p).c_str()) == p);
    }
}

TEST_CASE("small products and quotients") {
    CHECK(mul(P("1+x"), P("1+x")) == P("1+x^2"));
    CHECK(mul(P("1+x+x^2"), P("1+x")) == P("1+x^3"));
    CHECK(mul(P("1+x"), Poly2()) == Poly2());
    const auto [q, r] = divrem(P("1+x^7"), P("1+x+x^3"));
    CHECK(q == P("1+x+x^2+x^4"));
    CHECK(r.is_zero());
    CHECK(gcd(P("1+x+x^2"), P("1+x+x^3")) == Poly2::one());
    CHECK(gcd(Poly2(), P("1+x")) == P("1+x"));
    CHECK(powmod(Poly2::x(), std::uint64_t{3}, P("1+x+x^2")) == Poly2::one());
    CHECK(powmod(Poly2::x(), mpz_class(7), P("1+x+x^3")) == Poly2::one());
    CHECK(derivative(P("1+x+x^2+x^3")) == P("1+x^2"));
    CHECK(square_root(P("1+x^2+x^8")) == P("1+x+x^4"));
}

TEST_CASE("structured errors") {
    CHECK(code_of([] { divrem(P("1+x"), Poly2()); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { gcd(Poly2(), Poly2()); }) == ErrorCode::BothZero);
    CHECK(code_of([] { powmod(Poly2::x(), std::uint64_t{3}, Poly2::one()); }) == ErrorCode::ModulusDegree);
    CHECK(code_of([] { square_root(P("x")); }) == ErrorCode::InvariantViolation);
    const std::size_t saved = max_degree();
    set_max_degree(100);
    CHECK(code_of([] { (void)Poly2::monomial(101); }) == ErrorCode::DegreeLimit);
    CHECK(code_of([] { mul(Poly2::monomial(60), Poly2::monomial(60)); }) == ErrorCode::DegreeLimit);
    set_max_degree(saved);
    CHECK(Poly2::monomial(1 << 20).degree().value() == std::size_t{1} << 20);
}

TEST_CASE("multiplication paths agree with the exponent-list oracle") {
    oracle::Gen g(1);
    for (int i = 0; i < 60; ++i) {
        const Poly2 a = g.poly(400), b = g.poly(400);
        const Poly2 expected = oracle::naive_mul(a, b);
        CHECK(detail::mul_schoolbook(a, b) == expected);
        CHECK(detail::mul_schoolbook_portable(a, b) == expected);
        CHECK(detail::mul_karatsuba(a, b) == expected);
    }
    for (int i = 0; i < 4; ++i) {
        const Poly2 a = g.poly(9000), b = g.poly(9000);
        const Poly2 expected = detail::mul_schoolbook_portable(a, b);
        CHECK(mul(a, b) == expected);
        CHECK(detail::mul_karatsuba(a, b) == expected);
    }
}

TEST_CASE("property: ring laws up to degree 512") {
    oracle::Gen g(2);
    for (int i = 0; i < 200; ++i) {
        const Poly2 a = g.poly(512), b = g.poly(512), c = g.poly(512);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(add(add(a, b), b) == a);
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    }
}

TEST_CASE("property: square equals self product up to degree 1024") {
    oracle::Gen g(3);
    for (int i = 0; i < 200; ++i) {
        const Poly2 a = g.poly(1024);
        CHECK(square(a) == mul(a, a));
        CHECK(square_root(square(a)) == a);
    }
    const Poly2 big = g.poly(20000);
    CHECK(square(big) == detail::mul_schoolbook_portable(big, big));
}

TEST_CASE("property: divrem postcondition") {
    oracle::Gen g(4);
    for (int i = 0; i < 300; ++i) {
        const Poly2 a = g.poly(700), b = g.poly(300);
        const auto [q, r] = divrem(a, b);
        CHECK(add(mul(q, b), r) == a);
        CHECK(r.degree() < b.degree());
        CHECK(rem(a, b) == r);
    }
}

TEST_CASE("property: gcd divides both arguments") {
    oracle::Gen g(5);
    for (int i = 0; i < 200; ++i) {
        const Poly2 common = g.poly(40), a = g.poly(200), b = g.poly(200);
        const Poly2 d = gcd(mul(common, a), mul(common, b));
        CHECK(divides(d, mul(common, a)));
        CHECK(divides(d, mul(common, b)));
        CHECK(divides(common, d));
    }
}

TEST_CASE("property: powmod order matches a linear scan") {
    oracle::Gen g(6);
    for (int i = 0; i < 300; ++i) {
        const oracle::Mask h = (g.below(1 << 12) << 1) | 1U;
        if (oracle::deg(h) < 1) continue;
        const std::uint64_t t = oracle::lfsr_period(h, 1 << 14);
        if (t == 0) continue;
        const Poly2 hp = oracle::from_mask(h);
        CHECK(powmod(Poly2::x(), t, hp) == Poly2::one());
        Poly2 step = rem(Poly2::x(), hp);
        for (std::uint64_t s = 1; s < t; ++s) {
            if (step.is_one()) {
                FAIL_CHECK("smaller exponent " << s << " for " << to_caret(hp));
                break;
            }
            step = mulmod(step, Poly2::x(), hp);
        }
        CHECK(step.is_one());
    }
}

TEST_CASE("mulmod agrees with mul then rem") {
    oracle::Gen g(7);
    for (int i = 0; i < 100; ++i) {
        const Poly2 a = g.poly(300), b = g.poly(300), m = g.poly(200);
        if (m.degree() < Degree(1)) continue;
        CHECK(mulmod(a, b, m) == rem(mul(a, b), m));
    }
}
