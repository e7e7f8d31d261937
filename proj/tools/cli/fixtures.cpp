#include <sstream>
#include <string>
#include <vector>

#include "binpart/digit_set.hpp"
#include "binpart/factor2.hpp"
#include "binpart/gf2poly.hpp"
#include "binpart/partitions.hpp"
#include "binpart/periodicity.hpp"
#include "cli.hpp"

namespace binpart::cli {

namespace {

using gf2::Poly2;
using periodicity::complement;

std::string join(const std::vector<std::uint64_t>& v) {
    std::ostringstream s;
    s << '{';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << '}';
    return s.str();
}

FixtureResult complement_is(const std::vector<std::uint64_t>& set, std::uint64_t period,
                            const std::vector<std::uint64_t>& expected) {
    const auto p = complement(DigitSet::finite(set));
    const bool ok = p.period == period && p.complement == expected;
    return {ok, join(set) + "' = " + join(p.complement) + ", T = " + std::to_string(p.period)};
}

FixtureResult stern_parity() {
    partitions::CountSession f(DigitSet::finite({0, 1, 2}), 2);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        const mpz_class s = partitions::stern(n);
        if (s != f.at(n - 1)) return {false, "s(n) != f_{0,1,2}(n-1) at n = " + std::to_string(n)};
        if ((mpz_even_p(s.get_mpz_t()) != 0) != (n % 3 == 0)) {
            return {false, "parity of s(n) wrong at n = " + std::to_string(n)};
        }
    }
    return {true, "s(n) = f_{0,1,2}(n-1) and s(n) even iff 3 | n for 1 <= n <= 10000"};
}

FixtureResult initial_segments() {
    for (std::uint64_t d = 2; d <= 10; ++d) {
        // For d = 2 every value is odd and the minimal period drops to 1, so compare residues mod d.
        const auto q = complement(DigitSet::first_n(d));
        std::vector<std::uint64_t> residues;
        for (std::uint64_t r = 0; r < d && d % q.period == 0; ++r) {
            for (std::uint64_t c : q.complement) {
                if (r % q.period == c) residues.push_back(r);
            }
        }
        if (residues != std::vector<std::uint64_t>{0, 1}) {
            return {false, "A_" + std::to_string(d) + "' = " + join(q.complement) + " mod " + std::to_string(q.period)};
        }
        if (d > 2 && q.period != d) return {false, "A_" + std::to_string(d) + " has period " + std::to_string(q.period)};
    }
    return {true, "{0,...,d-1}' = {0,1} mod d for d = 2..10 (T = d for d >= 3, T = 1 for d = 2)"};
}

FixtureResult three_element_sets() {
    const auto a = complement_is({0, 2, 3}, 7, {0, 2, 3, 4});
    const auto b = complement_is({0, 1, 3}, 7, {0, 1, 2, 4});
    return {a.pass && b.pass, a.detail + "; " + b.detail};
}

FixtureResult ar_br_family() {
    for (unsigned r = 2; r <= 8; ++r) {
        const auto c = periodicity::check_ar_br_family(r);
        if (!c.holds()) return {false, "family fails at r = " + std::to_string(r)};
    }
    return {true, "g_r h_r = 1 + x^(2^(r+1)-1), both periods 2^(r+1)-1, complementary, r = 2..8"};
}

FixtureResult factor_0149() {
    const Poly2 h = gf2::parse_poly("1+x+x^4+x^9");
    const auto f = factor2::factor(h);
    const std::vector<factor2::FactorPower> expected{{gf2::parse_poly("1+x"), 4},
                                                     {gf2::parse_poly("1+x+x^2"), 1},
                                                     {gf2::parse_poly("1+x^2+x^3"), 1}};
    bool ok = f.factors.size() == expected.size();
    std::string detail;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (ok && (f.factors[i].factor != expected[i].factor || f.factors[i].exponent != expected[i].exponent)) {
            ok = false;
        }
        detail += (i ? " * " : "") + std::string("(") + gf2::to_caret(f.factors[i].factor) + ")^" +
                  std::to_string(f.factors[i].exponent);
    }
    return {ok, detail};
}

FixtureResult period_0149() {
    const auto cert = factor2::period(gf2::parse_poly("1+x+x^4+x^9"));
    const bool ok = cert.period == 84 && cert.m_bound == 84;
    return {ok, "period " + std::to_string(cert.period) + ", bound " + std::to_string(cert.m_bound)};
}

FixtureResult complement_0149() {
    const auto p = complement(DigitSet::finite({0, 1, 4, 9}));
    const bool ok = p.period == 84 && p.complement.size() == 41 && p.complement.front() == 0 &&
                    p.complement.back() == 75 && p.odd_density == periodicity::Ratio(41, 84);
    return {ok, "|A'| = " + std::to_string(p.complement.size()) + ", range " +
                    std::to_string(p.complement.front()) + ".." + std::to_string(p.complement.back()) +
                    ", odd density " + periodicity::to_string(p.odd_density)};
}

FixtureResult density_counterexample() {
    const auto p = complement(DigitSet::finite({0, 1, 5, 9, 10}));
    const std::uint64_t bound = (p.period + 1) / 2;
    const bool ok = p.period == 33 && p.complement.size() == 18 && p.complement.size() > bound;
    return {ok, "T = " + std::to_string(p.period) + ", |A'| = " + std::to_string(p.complement.size()) + " > " +
                    std::to_string(bound)};
}

FixtureResult putnam() {
    for (std::uint64_t b = 2; b <= 5; ++b) {
        const auto c = periodicity::check_putnam_family(b, 500);
        if (!c.holds()) return {false, "fails for b = " + std::to_string(b)};
    }
    partitions::CountSession f(DigitSet::finite({0, 1, 2, 3}), 2);
    for (std::uint64_t n = 0; n <= 500; ++n) {
        if (f.at(n) != n / 2 + 1) return {false, "{0,1,2,3} fails at n = " + std::to_string(n)};
    }
    return {true, "f(n) = floor(n/b) + 1 and f(n + bd) = f(n) + d for b = 2..5, n <= 500"};
}

FixtureResult parity_rule(const char* text, bool (*odd)(std::uint64_t), std::uint64_t limit) {
    const DigitSet set = parse_digit_set(text);
    partitions::ModCountSession f(set, 2, 2);
    const auto profile = periodicity::parity_profile_infinite(set);
    for (std::uint64_t n = 0; n <= limit; ++n) {
        const bool actual = f.at(n) == 1;
        if (actual != odd(n) || profile.is_odd(n) != odd(n)) {
            return {false, std::string(text) + ": mismatch at n = " + std::to_string(n)};
        }
    }
    return {true, std::string(text) + ": rule holds for n <= " + std::to_string(limit) + ", eventual period " +
                      std::to_string(profile.period)};
}

FixtureResult odd_digits() {
    return parity_rule("0|mod=2,res=1|from=1", [](std::uint64_t n) { return n == 0 || n % 3 != 0; }, 3000);
}

FixtureResult naturals_without_one() {
    return parity_rule("0|mod=1,res=0|from=2", [](std::uint64_t n) { return n % 3 != 1; }, 3000);
}

FixtureResult binary_partitions_even() {
    return parity_rule("0|mod=1,res=0|from=1", [](std::uint64_t n) { return n < 2; }, 10000);
}

FixtureResult prime_identity() {
    const std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> cases{
        {{0, 1, 2}, 3}, {{0, 1, 3}, 3}, {{0, 1}, 5}};
    for (const auto& [members, p] : cases) {
        const auto c = periodicity::verify_prime_theorem(DigitSet::finite(members), p, 300);
        if (!c.holds) return {false, join(members) + " fails for p = " + std::to_string(p)};
    }
    const auto exact = periodicity::power_product_exact(DigitSet::finite({0, 1}), 4, 2);
    const bool witness = exact[2] == 6;
    return {witness, "holds for p = 3, 3, 5; base 4 witness: coefficient of x^2 in F^3 phi is " +
                         exact[2].get_str() + " (mod 4 = " + mpz_class(exact[2] % 4).get_str() + ")"};
}

FixtureResult nonperiodic_searches() {
    struct Case {
        std::vector<std::uint64_t> set;
        std::uint64_t base, d;
        bool expect_found;
    };
    const std::vector<Case> cases{{{0, 1, 2}, 2, 2, true}, {{0, 1, 2}, 2, 3, false}, {{0, 1, 2}, 2, 4, false},
                                  {{0, 1, 2}, 2, 5, false}, {{0, 1}, 3, 2, false},   {{0, 1}, 4, 2, false},
                                  {{0, 1}, 4, 3, false}};
    std::vector<periodicity::SearchParams> grid;
    for (const auto& c : cases) grid.push_back({DigitSet::finite(c.set), c.base, c.d, 300, 300});
    const auto reports = periodicity::period_search_grid(grid);
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& r = reports[i];
        if (r.found.has_value() != cases[i].expect_found) {
            return {false, join(cases[i].set) + " b=" + std::to_string(cases[i].base) +
                               " d=" + std::to_string(cases[i].d) + ": unexpected search outcome"};
        }
    }
    const auto& stern = *reports[0].found;
    const bool ok = stern.transient == 0 && stern.period == 3;
    return {ok, "(N,T) = (" + std::to_string(stern.transient) + "," + std::to_string(stern.period) +
                    ") for {0,1,2} mod 2; no period within 300/300 for the six other cases"};
}

FixtureResult four_nine_bound() {
    const auto h = gf2::parse_poly("1+x+x^4+x^9");
    for (std::uint64_t p : {2, 3, 7}) {
        const auto one_plus = Poly2::one() + Poly2::monomial(84 / p);
        if (gf2::divides(h, one_plus)) return {false, "phi divides 1 + x^" + std::to_string(84 / p)};
    }
    const bool ok = gf2::divides(h, Poly2::one() + Poly2::monomial(84));
    return {ok, "phi | 1 + x^84 and phi does not divide 1 + x^(84/p) for p = 2, 3, 7"};
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all{
        {"stern-parity", "Stern sequence equals f_{0,1,2}(n-1) and is even iff n is a multiple of three",
         stern_parity},
        {"initial-segments", "{0,...,d-1} has parity period d and complement {0,1}", initial_segments},
        {"three-element-sets", "{0,2,3}' = {0,2,3,4} and {0,1,3}' = {0,1,2,4}, period 7", three_element_sets},
        {"ar-br-family", "A_r and B_r are complementary with period 2^(r+1)-1", ar_br_family},
        {"factor-0149", "1+x+x^4+x^9 = (1+x)^4 (1+x+x^2) (1+x^2+x^3)", factor_0149},
        {"period-0149", "period of 1+x+x^4+x^9 is 84", period_0149},
        {"period-0149-maximal", "84 is not reduced by 2, 3 or 7", four_nine_bound},
        {"complement-0149", "{0,1,4,9}' has 41 elements from 0 to 75, odd density 41/84", complement_0149},
        {"density-counterexample", "{0,1,5,9,10} has T = 33 and |A'| = 18 > 17", density_counterexample},
        {"putnam-family", "f(n) = floor(n/b) + 1 for {0,...,b^2-1} in base b", putnam},
        {"odd-digits", "A = {0} and the odd numbers: f odd iff n = 0 or 3 does not divide n", odd_digits},
        {"naturals-without-one", "A = N minus {1}: f odd iff n = 0, 2 mod 3", naturals_without_one},
        {"binary-partitions-even", "A = N: f(n) even for n >= 2", binary_partitions_even},
        {"prime-identity", "F^(p-1) phi = 1 mod p, and the base 4 witness fails mod 4", prime_identity},
        {"nonperiodic-searches", "only (b,d) = (2,2) yields a period in the bounded searches",
         nonperiodic_searches},
    };
    return all;
}

}  // namespace binpart::cli
