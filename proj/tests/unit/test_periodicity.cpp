#include <algorithm>

#include <doctest.h>

#include "binpart/error.hpp"
#include "binpart/factor2.hpp"
#include "binpart/partitions.hpp"
#include "binpart/periodicity.hpp"
#include "oracles.hpp"

using namespace binpart;
using namespace binpart::periodicity;
using gf2::parse_poly;
using gf2::Poly2;

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

bool odd_iff_residue(const DigitSet& set, std::uint64_t t, const std::vector<std::uint64_t>& residues,
                     std::uint64_t limit) {
    partitions::ModCountSession f(set, 2, 2);
    for (std::uint64_t n = 0; n < limit; ++n) {
        const bool listed = std::find(residues.begin(), residues.end(), n % t) != residues.end();
        if ((f.at(n) == 1) != listed) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("phi and ratios") {
    CHECK(phi_poly(DigitSet::finite({0, 1, 4, 9})) == parse_poly("0x213"));
    CHECK(to_string(Ratio(82, 168)) == "41/84");
    CHECK(Ratio(0, 5) == Ratio(0, 1));
    CHECK(code_of([] { phi_poly(DigitSet::naturals()); }) == ErrorCode::InfiniteSet);
}

TEST_CASE("parity periods and complements") {
    CHECK(parity_period(DigitSet::finite({0, 1, 4, 9})) == 84);
    CHECK(parity_period(DigitSet::finite({0, 1, 3})) == 7);
    CHECK(parity_period(DigitSet::finite({0, 2, 3})) == 7);
    CHECK(parity_period(DigitSet::finite({0, 1, 5, 9, 10})) == 33);
    CHECK(complement(DigitSet::finite({0, 2, 3})).complement == std::vector<std::uint64_t>{0, 2, 3, 4});
    CHECK(complement(DigitSet::finite({0, 1, 3})).complement == std::vector<std::uint64_t>{0, 1, 2, 4});
    const auto p = complement(DigitSet::finite({0, 1, 4, 9}));
    CHECK(p.complement.size() == 41);
    CHECK(p.complement.front() == 0);
    CHECK(p.complement.back() == 75);
    CHECK(to_string(p.odd_density) == "41/84");
    const auto q = complement(DigitSet::finite({0, 1, 5, 9, 10}));
    CHECK(q.period == 33);
    CHECK(q.complement.size() == 18);
    for (std::uint64_t d = 3; d <= 10; ++d) {
        CHECK(complement(DigitSet::first_n(d)).complement == std::vector<std::uint64_t>{0, 1});
    }
    CHECK(code_of([] { parity_period(DigitSet::finite({0})); }) == ErrorCode::DegenerateSet);
    CHECK(code_of([] { complement(DigitSet::naturals()); }) == ErrorCode::InfiniteSet);
}

TEST_CASE("property: parity period is exact and minimal against brute-force parities") {
    oracle::Gen g(51);
    for (int i = 0; i < 60; ++i) {
        const auto members = g.digit_set(12);
        const DigitSet set = DigitSet::finite(members);
        const std::uint64_t t = parity_period(set);
        const auto parity = oracle::brute_parities(members, std::min<std::uint64_t>(4 * t + 1, 150));
        partitions::ModCountSession f(set, 2, 2);
        std::vector<int> seq;
        for (std::uint64_t n = 0; n <= 4 * t + t; ++n) seq.push_back(static_cast<int>(f.at(n)));
        for (std::size_t n = 0; n < parity.size(); ++n) REQUIRE(seq[n] == parity[n]);
        for (std::uint64_t n = 0; n + t < seq.size(); ++n) CHECK(seq[n] == seq[n + t]);
        for (std::uint64_t d = 1; d < t; ++d) {
            if (t % d != 0) continue;
            bool periodic = true;
            for (std::uint64_t n = 0; n + d < seq.size() && periodic; ++n) periodic = seq[n] == seq[n + d];
            CHECK_MESSAGE(!periodic, to_string(set) << " has smaller period " << d);
        }
    }
}

TEST_CASE("property: complementarity in both directions") {
    oracle::Gen g(52);
    int second_half_checked = 0;
    for (int i = 0; i < 60; ++i) {
        const DigitSet set = DigitSet::finite(g.digit_set(12));
        const auto p = complement(set);
        CHECK(odd_iff_residue(set, p.period, p.complement, 3 * p.period + 5));
        if (p.complement.size() < 2) continue;
        const DigitSet dual = DigitSet::finite(p.complement);
        if (parity_period(dual) != p.period) continue;
        ++second_half_checked;
        CHECK(odd_iff_residue(dual, p.period, set.explicit_members(), 3 * p.period + 5));
        CHECK(complement(dual).complement == set.explicit_members());
    }
    CHECK(second_half_checked > 10);
}

TEST_CASE("initial segments are the documented exception to double complement") {
    for (std::uint64_t d = 3; d <= 10; ++d) {
        const auto p = complement(DigitSet::first_n(d));
        CHECK(p.period == d);
        CHECK(parity_period(DigitSet::finite(p.complement)) == 1);
    }
}

TEST_CASE("primitive density") {
    for (const auto& members : {std::vector<std::uint64_t>{0, 1, 2}, std::vector<std::uint64_t>{0, 1, 3}}) {
        const DigitSet set = DigitSet::finite(members);
        REQUIRE(factor2::is_primitive(phi_poly(set)));
        const auto p = complement(set);
        CHECK(p.complement.size() == (p.period + 1) / 2);
    }
}

TEST_CASE("series identities") {
    CHECK(verify_main_theorem(DigitSet::finite({0, 1, 4, 9}), 500).holds);
    CHECK(verify_prime_theorem(DigitSet::finite({0, 1, 2}), 3, 200).holds);
    CHECK(verify_main_theorem(DigitSet::naturals(), 300).holds);
    CHECK(verify_main_theorem(parse_digit_set("0|mod=2,res=1|from=1"), 300).holds);
    CHECK(code_of([] { verify_prime_theorem(DigitSet::finite({0, 1}), 4, 10); }) == ErrorCode::NotPrime);
    const auto exact = power_product_exact(DigitSet::finite({0, 1}), 4, 5);
    CHECK(exact[0] == 1);
    CHECK(exact[2] == 6);
    const auto reduced = power_product_mod(DigitSet::finite({0, 1}), 4, 4, 5);
    CHECK(reduced[2] == 2);
    for (std::size_t i = 0; i < exact.size(); ++i) CHECK(reduced[i] == mpz_class(exact[i] % 4).get_ui());
}

TEST_CASE("property: the mod 2 identity holds for every A in {0..10}") {
    for (std::uint64_t mask = 0; mask < (1U << 10); ++mask) {
        const DigitSet set = DigitSet::finite(oracle::subset_with_zero(mask));
        const auto check = verify_main_theorem(set, 512);
        CHECK_MESSAGE(check.holds, to_string(set));
    }
}

TEST_CASE("rational phi for eventually periodic sets") {
    const auto r = rational_phi(parse_digit_set("0|mod=2,res=1|from=1"));
    CHECK(r.tail_period == 2);
    for (std::uint64_t n = 0; n < 40; ++n) CHECK(r.coefficient(n) == (n == 0 || n % 2 == 1));
    const auto nat = rational_phi(DigitSet::naturals());
    CHECK(nat.denominator == parse_poly("1+x"));
    const auto fin = rational_phi(DigitSet::finite({0, 1, 4}));
    CHECK(fin.polynomial_part == parse_poly("1+x+x^4"));
    CHECK(fin.numerator.is_zero());
    oracle::Gen g(53);
    for (int i = 0; i < 80; ++i) {
        const std::uint64_t modulus = 1 + g.below(6), cutoff = 1 + g.below(7);
        std::vector<std::uint64_t> residues, head{0};
        for (std::uint64_t k = 0; k < modulus; ++k) {
            if (g.below(2)) residues.push_back(k);
        }
        for (std::uint64_t a = 1; a < cutoff; ++a) {
            if (g.below(2)) head.push_back(a);
        }
        const DigitSet set = DigitSet::eventually_periodic(head, cutoff, Tail{modulus, residues});
        const auto rp = rational_phi(set);
        for (std::uint64_t n = 0; n < 80; ++n) CHECK(rp.coefficient(n) == set.contains(n));
    }
}

TEST_CASE("eventual parity of infinite sets") {
    const auto odds = parity_profile_infinite(parse_digit_set("0|mod=2,res=1|from=1"));
    const auto no_one = parity_profile_infinite(parse_digit_set("0|mod=1,res=0|from=2"));
    const auto nat = parity_profile_infinite(DigitSet::naturals());
    CHECK(odds.period == 3);
    CHECK(no_one.period == 3);
    CHECK(no_one.transient == 0);
    CHECK(no_one.periodic_odd_residues == std::vector<std::uint64_t>{0, 2});
    CHECK(nat.period == 1);
    partitions::ModCountSession fo(parse_digit_set("0|mod=2,res=1|from=1"), 2, 2);
    partitions::ModCountSession fn(DigitSet::naturals(), 2, 2);
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        CHECK(odds.is_odd(n) == (n == 0 || n % 3 != 0));
        CHECK(odds.is_odd(n) == (fo.at(n) == 1));
        CHECK(no_one.is_odd(n) == (n % 3 != 1));
        CHECK(nat.is_odd(n) == (fn.at(n) == 1));
    }
    CHECK(parity_profile_infinite(DigitSet::finite({0, 1, 3})).period == 7);
}

TEST_CASE("property: eventual parity matches direct parities for random periodic tails") {
    oracle::Gen g(54);
    for (int i = 0; i < 40; ++i) {
        const std::uint64_t modulus = 1 + g.below(5), cutoff = 1 + g.below(6);
        std::vector<std::uint64_t> residues{g.below(modulus)}, head{0};
        for (std::uint64_t a = 1; a < cutoff; ++a) {
            if (g.below(2)) head.push_back(a);
        }
        const DigitSet set = DigitSet::eventually_periodic(head, cutoff, Tail{modulus, residues});
        if (set.is_finite()) continue;
        const auto e = parity_profile_infinite(set);
        partitions::ModCountSession f(set, 2, 2);
        for (std::uint64_t n = 0; n <= 600; ++n) CHECK(e.is_odd(n) == (f.at(n) == 1));
    }
}

TEST_CASE("period search") {
    const auto stern = period_search({DigitSet::finite({0, 1, 2}), 2, 2, 300, 300});
    REQUIRE(stern.found);
    CHECK(stern.found->transient == 0);
    CHECK(stern.found->period == 3);
    CHECK(stern.found->window_begin == 0);
    CHECK(!period_search({DigitSet::finite({0, 1, 2}), 2, 3, 100, 100}).found);
    const auto putnam = period_search({DigitSet::finite({0, 1, 2, 3}), 2, 5, 50, 50});
    REQUIRE(putnam.found);
    CHECK(putnam.found->period == 10);
    const auto no_one = period_search({parse_digit_set("0|mod=1,res=0|from=2"), 2, 2, 20, 20});
    REQUIRE(no_one.found);
    CHECK(no_one.found->period == 3);
    CHECK(code_of([] { period_search({DigitSet::finite({0, 1}), 2, 2, 5, 0}); }) == ErrorCode::OutOfRange);
}

TEST_CASE("property: search agrees with the parity period for finite sets") {
    oracle::Gen g(55);
    for (int i = 0; i < 25; ++i) {
        const DigitSet set = DigitSet::finite(g.digit_set(9));
        const std::uint64_t t = parity_period(set);
        if (t > 120) continue;
        const auto r = period_search({set, 2, 2, 20, 120});
        REQUIRE(r.found);
        CHECK(r.found->period == t);
        CHECK(r.found->transient == 0);
    }
}

TEST_CASE("search grids keep input order") {
    std::vector<SearchParams> grid;
    for (std::uint64_t d = 2; d <= 6; ++d) grid.push_back({DigitSet::finite({0, 1, 2, 3}), 2, d, 30, 30});
    const auto reports = period_search_grid(grid, 3);
    REQUIRE(reports.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(reports[i].params.modulus == grid[i].modulus);
        REQUIRE(reports[i].found);
        CHECK(reports[i].found->period == 2 * grid[i].modulus);
    }
}

TEST_CASE("worked families") {
    for (std::uint64_t b = 2; b <= 5; ++b) CHECK(check_putnam_family(b, 500).holds());
    for (unsigned r = 2; r <= 12; ++r) {
        const auto c = check_ar_br_family(r);
        CHECK(c.holds());
        CHECK(c.expected_period == (std::uint64_t{1} << (r + 1)) - 1);
    }
    const auto r3 = check_ar_br_family(3);
    CHECK(r3.period_a == 15);
    CHECK(r3.period_b == 15);
    CHECK(code_of([] { check_ar_br_family(1); }) == ErrorCode::OutOfRange);
}
