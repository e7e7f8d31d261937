#include <doctest.h>

#include "binpart/error.hpp"
#include "binpart/partitions.hpp"
#include "oracles.hpp"

using namespace binpart;
using namespace binpart::partitions;

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

std::vector<std::string> first_values(const DigitSet& set, std::uint64_t base, std::uint64_t count) {
    CountSession f(set, base);
    std::vector<std::string> out;
    for (std::uint64_t n = 0; n < count; ++n) out.push_back(f.at(n).get_str());
    return out;
}

}  // namespace

TEST_CASE("small counts") {
    CHECK(first_values(DigitSet::finite({0, 1, 2}), 2, 8) ==
          std::vector<std::string>{"1", "1", "2", "1", "3", "2", "3", "1"});
    CHECK(first_values(DigitSet::naturals(), 2, 7) == std::vector<std::string>{"1", "1", "2", "2", "4", "4", "6"});
    CHECK(first_values(DigitSet::naturals(), 2, 12) ==
          std::vector<std::string>{"1", "1", "2", "2", "4", "4", "6", "6", "10", "10", "14", "14"});
    CHECK(count(DigitSet::finite({0, 1, 2, 3}), 2, 7) == 4);
    CHECK(count(DigitSet::finite({0, 1}), 2, 12345) == 1);
    CHECK(count(DigitSet::finite({0, 2}), 2, 7) == 0);
    CHECK(count_mod(DigitSet::naturals(), 2, 8, 4) == 2);
    CHECK(code_of([] { count(DigitSet::finite({0, 1}), 1, 3); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { count_mod(DigitSet::finite({0, 1}), 2, 3, 1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("series oracle on a fixture") {
    const auto s = count_series_oracle(DigitSet::finite({0, 1, 2}), 2, 7);
    std::vector<std::string> text;
    for (const auto& v : s) text.push_back(v.get_str());
    CHECK(text == std::vector<std::string>{"1", "1", "2", "1", "3", "2", "3", "1"});
}

TEST_CASE("recurrence agrees with brute-force enumeration") {
    oracle::Gen g(41);
    for (int i = 0; i < 40; ++i) {
        const auto members = g.digit_set(10);
        const std::uint64_t base = 2 + g.below(3);
        CountSession f(DigitSet::finite(members), base);
        for (std::uint64_t n = 0; n <= 120; ++n) CHECK(f.at(n) == oracle::brute_count(members, base, n));
    }
    // An eventually periodic set, enumerated through its members up to n.
    const DigitSet odds = parse_digit_set("0|mod=2,res=1|from=1");
    CountSession f(odds, 2);
    for (std::uint64_t n = 0; n <= 80; ++n) CHECK(f.at(n) == oracle::brute_count(odds.members_up_to(n), 2, n));
}

TEST_CASE("property: recurrence equals series product for every A in {0..10}, b in {2,3,4}") {
    for (std::uint64_t mask = 0; mask < (1U << 10); mask += 7) {
        const DigitSet set = DigitSet::finite(oracle::subset_with_zero(mask));
        for (std::uint64_t base : {2, 3, 4}) {
            const auto series = count_series_oracle(set, base, 500);
            CountSession f(set, base);
            bool same = true;
            for (std::uint64_t n = 0; n <= 500 && same; ++n) same = f.at(n) == series[n];
            CHECK_MESSAGE(same, to_string(set) << " base " << base);
        }
    }
}

TEST_CASE("property: reduced path matches exact values") {
    oracle::Gen g(42);
    for (int i = 0; i < 60; ++i) {
        const DigitSet set = DigitSet::finite(g.digit_set(12));
        const std::uint64_t base = 2 + g.below(4), d = 2 + g.below(30);
        CountSession exact(set, base);
        ModCountSession reduced(set, base, d);
        for (std::uint64_t n = 0; n <= 400; n += 1 + g.below(5)) {
            CHECK(reduced.at(n) == mpz_class(exact.at(n) % d).get_ui());
        }
    }
    ModCountSession big(DigitSet::naturals(), 2, ~std::uint64_t{0} - 58);
    CountSession exact(DigitSet::naturals(), 2);
    CHECK(big.at(3000) == mpz_class(exact.at(3000) % (~std::uint64_t{0} - 58)).get_ui());
}

TEST_CASE("property: sets containing 0 and 1 represent everything in base 2") {
    for (const char* text : {"0,1,2", "0,1,3", "0,1,4,9", "0,1,5,9,10", "0,1,2,3", "0|mod=2,res=1|from=1"}) {
        CountSession exact(parse_digit_set(text), 2);
        for (std::uint64_t n = 0; n <= 2000; ++n) CHECK(exact.at(n) >= 1);
    }
    CountSession evens(DigitSet::finite({0, 2, 4}), 2);
    for (std::uint64_t n = 1; n <= 200; n += 2) CHECK(evens.at(n) == 0);
}

TEST_CASE("large n stays off the call stack") {
    ModCountSession f(DigitSet::finite({0, 1, 2}), 2, 2);
    const std::uint64_t n = 123456789012ULL;
    CHECK(f.at(n) == mpz_class(stern(n + 1) % 2).get_ui());
    CountSession exact(DigitSet::finite({0, 1, 2}), 2);
    CHECK(exact.at(n) == stern(n + 1));
    ModCountSession wide(DigitSet::finite({0, 1, 3, 7}), 2, 1000);
    CHECK(wide.at(5000000) < 1000);
}

TEST_CASE("theta") {
    CHECK(theta(DigitSet::finite({0, 1, 2}), 0) == 1);
    CHECK(theta(DigitSet::finite({0, 1, 2}), -3) == 0);
    CHECK(code_of([] { theta(DigitSet::naturals(), 4); }) == ErrorCode::InfiniteSet);
}

TEST_CASE("property: theta is even for n >= 1") {
    oracle::Gen g(43);
    for (int i = 0; i < 50; ++i) {
        CountSession f(DigitSet::finite(g.digit_set(12)), 2);
        for (std::int64_t n = 1; n <= 300; ++n) CHECK(mpz_even_p(theta(f, n).get_mpz_t()));
    }
}

TEST_CASE("stern sequence") {
    std::vector<std::string> text;
    for (std::uint64_t n = 0; n <= 8; ++n) text.push_back(stern(n).get_str());
    CHECK(text == std::vector<std::string>{"0", "1", "1", "2", "1", "3", "2", "3", "1"});
    CountSession f(DigitSet::finite({0, 1, 2}), 2);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        const mpz_class s = stern(n);
        CHECK(s == oracle::stern(n));
        CHECK(s == f.at(n - 1));
        CHECK((mpz_even_p(s.get_mpz_t()) != 0) == (n % 3 == 0));
    }
}

TEST_CASE("2-adic valuation") {
    CHECK(nu2(mpz_class(1)) == 0);
    CHECK(nu2(mpz_class(96)) == 5);
    CHECK(nu2(mpz_class(-8)) == 3);
    CHECK(nu2(mpz_class(1) << 200) == 200);
    CHECK(code_of([] { nu2(mpz_class(0)); }) == ErrorCode::ZeroInput);
}

TEST_CASE("churchhouse report") {
    const auto report = churchhouse_report(1024);
    CHECK(report.congruences_hold());
    CHECK(report.table.size() == 128);
    CHECK(report.table.front().m == 2);
    CHECK(report.table.back().m == 256);
    // Frozen from an independent exhaustive computation for even m <= 32.
    const std::vector<std::uint64_t> difference_valuations{3, 5, 3, 6, 3, 5, 3, 8, 3, 5, 3, 6, 3, 5, 3, 9};
    for (std::size_t i = 0; i < difference_valuations.size(); ++i) {
        CHECK(report.table[i].nu2_difference == difference_valuations[i]);
        CHECK(report.table[i].valuation_gap == 0);
    }
    REQUIRE(report.readings.size() == 4);
    CHECK(report.readings[2].name == "difference");
    CHECK(report.readings[2].disagreements == 0);
    CHECK(report.readings[0].agreements == 0);
    CHECK(code_of([] { churchhouse_report(8); }) == ErrorCode::OutOfRange);
}
