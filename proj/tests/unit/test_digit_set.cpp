#include <algorithm>

#include <doctest.h>

#include "binpart/digit_set.hpp"
#include "binpart/error.hpp"
#include "oracles.hpp"

using namespace binpart;

namespace {

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

TEST_CASE("finite sets") {
    const DigitSet a = parse_digit_set("0,1,4,9");
    CHECK(a.is_finite());
    CHECK(a.size() == 4);
    CHECK(a.max_member() == 9);
    CHECK(a.contains(4));
    CHECK(!a.contains(5));
    CHECK(to_string(a) == "0,1,4,9");
    CHECK(parse_digit_set("9, 4,1,0,4") == a);
    CHECK(a.members_congruent(1, 2, 100) == std::vector<std::uint64_t>{1, 9});
    CHECK(a.members_congruent(1, 2, 8) == std::vector<std::uint64_t>{1});
    CHECK(a.members_up_to(4) == std::vector<std::uint64_t>{0, 1, 4});
    CHECK(DigitSet::first_n(3) == parse_digit_set("0,1,2"));
}

TEST_CASE("eventually periodic sets") {
    const DigitSet odds = parse_digit_set("0|mod=2,res=1|from=1");
    CHECK(!odds.is_finite());
    CHECK(odds.contains(0));
    CHECK(!odds.contains(2));
    CHECK(odds.contains(1001));
    CHECK(odds.members_up_to(7) == std::vector<std::uint64_t>{0, 1, 3, 5, 7});
    CHECK(odds.members_congruent(1, 4, 20) == std::vector<std::uint64_t>{1, 5, 9, 13, 17});
    CHECK(odds.members_congruent(0, 4, 20) == std::vector<std::uint64_t>{0});

    CHECK(DigitSet::naturals() == parse_digit_set("0|mod=1,res=0|from=1"));
    // Same set written two ways canonicalizes to one form.
    CHECK(parse_digit_set("0,1|mod=2,res=0,1|from=2") == DigitSet::naturals());
    CHECK(parse_digit_set("0,1|mod=4,res=1,3|from=2") == parse_digit_set("0,1|mod=2,res=1|from=2"));
    CHECK(parse_digit_set("0,1|mod=2,res=1|from=3").contains(5));
    CHECK(!parse_digit_set("0,1|mod=2,res=1|from=3").contains(2));
    // An empty tail collapses to a finite set.
    CHECK(DigitSet::eventually_periodic({0, 3}, 5, Tail{4, {}}) == DigitSet::finite({0, 3}));
    const DigitSet no_one = parse_digit_set("0|mod=1,res=0|from=2");
    CHECK(to_string(no_one) == "0|mod=1,res=0|from=2");
    CHECK(parse_digit_set(to_string(no_one)) == no_one);
}

TEST_CASE("rejections") {
    CHECK(code_of([] { DigitSet::finite({1, 2}); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { parse_digit_set("1,2|mod=2,res=1|from=3"); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { parse_digit_set("0,a"); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_digit_set("0|mod=0,res=0|from=1"); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_digit_set("0|mod=2,res=5|from=1"); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { parse_digit_set("0|mod=2,res=1|from=1|x"); }) == ErrorCode::Parse);
    CHECK(code_of([] { (void)DigitSet::naturals().size(); }) == ErrorCode::InfiniteSet);
    CHECK(code_of([] { (void)DigitSet::naturals().max_member(); }) == ErrorCode::InfiniteSet);
}

TEST_CASE("property: membership queries agree with contains") {
    oracle::Gen g(31);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t modulus = 1 + g.below(6);
        std::vector<std::uint64_t> residues;
        for (std::uint64_t r = 0; r < modulus; ++r) {
            if (g.below(2)) residues.push_back(r);
        }
        const std::uint64_t cutoff = 1 + g.below(8);
        std::vector<std::uint64_t> explicit_members{0};
        for (std::uint64_t a = 1; a < cutoff; ++a) {
            if (g.below(2)) explicit_members.push_back(a);
        }
        const DigitSet s = DigitSet::eventually_periodic(explicit_members, cutoff, Tail{modulus, residues});
        CHECK(parse_digit_set(to_string(s)) == s);
        const std::uint64_t limit = 60;
        std::vector<std::uint64_t> expected;
        for (std::uint64_t n = 0; n <= limit; ++n) {
            const bool in = n < cutoff ? std::find(explicit_members.begin(), explicit_members.end(), n) !=
                                             explicit_members.end()
                                       : std::find(residues.begin(), residues.end(), n % modulus) != residues.end();
            CHECK(s.contains(n) == in);
            if (in) expected.push_back(n);
        }
        CHECK(s.members_up_to(limit) == expected);
        const std::uint64_t base = 2 + g.below(4), r = g.below(base);
        std::vector<std::uint64_t> congruent;
        for (auto n : expected) {
            if (n % base == r) congruent.push_back(n);
        }
        CHECK(s.members_congruent(r, base, limit) == congruent);
    }
}
