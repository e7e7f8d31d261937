#pragma once

// Parity structure of f_{A,2}: the characteristic polynomial phi_A over
// GF(2), the parity period and complementary set of a finite digit set,
// rational phi for eventually periodic sets, series checks of F * phi = 1,
// and bounded searches for eventual periodicity mod d.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "binpart/digit_set.hpp"
#include "binpart/gf2poly.hpp"

namespace binpart::periodicity {

using gf2::Poly2;

/// Non-negative fraction kept in lowest terms.
class Ratio {
public:
    Ratio(std::uint64_t numerator, std::uint64_t denominator);
    std::uint64_t numerator() const noexcept { return num_; }
    std::uint64_t denominator() const noexcept { return den_; }
    friend bool operator==(const Ratio&, const Ratio&) = default;

private:
    std::uint64_t num_;
    std::uint64_t den_;
};

std::string to_string(const Ratio& r);

/// Sum of x^a over a in A. A must be finite.
Poly2 phi_poly(const DigitSet& set);

/// Least T with f_{A,2}(n + T) == f_{A,2}(n) (mod 2) for all n; |A| >= 2.
std::uint64_t parity_period(const DigitSet& set);

/// f_{A,2}(n) is odd exactly when n mod period lies in `complement`.
struct ParityProfile {
    DigitSet set = DigitSet::finite({0});
    std::uint64_t period = 0;
    std::vector<std::uint64_t> complement;
    Ratio odd_density{0, 1};
};

ParityProfile complement(const DigitSet& set);

struct SeriesCheck {
    bool holds = true;
    std::optional<std::uint64_t> first_failure;
};

/// Checks F_{A,2} * phi_A == 1 in GF(2)[[x]] through x^truncation.
SeriesCheck verify_main_theorem(const DigitSet& set, std::uint64_t truncation);

/// Checks F_{A,p}^(p-1) * phi_A == 1 in GF(p)[[x]] through x^truncation.
SeriesCheck verify_prime_theorem(const DigitSet& set, std::uint64_t prime, std::uint64_t truncation);

/// Coefficients 0..truncation of F_{A,b}^(b-1) * phi_A reduced mod d.
std::vector<std::uint64_t> power_product_mod(const DigitSet& set, std::uint64_t base, std::uint64_t modulus,
                                             std::uint64_t truncation);
/// Same product over the integers.
std::vector<mpz_class> power_product_exact(const DigitSet& set, std::uint64_t base, std::uint64_t truncation);

/// phi_A = polynomial_part + numerator / denominator in GF(2)(x), with
/// denominator = 1 + x^tail_period and deg numerator < tail_period.
struct RationalPhi {
    Poly2 polynomial_part;
    Poly2 numerator;
    Poly2 denominator;
    std::uint64_t tail_period = 1;

    bool coefficient(std::uint64_t n) const;
    /// polynomial_part * denominator + numerator
    Poly2 combined_numerator() const;
};

RationalPhi rational_phi(const DigitSet& set);

/// Parity of f_{A,2}(n) for an eventually periodic A: odd iff n is listed in
/// transient_odd (n < transient) or (n >= transient and n mod period is in
/// periodic_odd_residues). Transient and period are both minimal.
struct EventualParity {
    std::uint64_t transient = 0;
    std::uint64_t period = 1;
    std::vector<std::uint64_t> transient_odd;
    std::vector<std::uint64_t> periodic_odd_residues;
    /// F_{A,2} = generating_numerator / generating_denominator over GF(2), reduced.
    Poly2 generating_numerator;
    Poly2 generating_denominator;

    bool is_odd(std::uint64_t n) const;
};

EventualParity parity_profile_infinite(const DigitSet& set);

struct SearchParams {
    DigitSet set = DigitSet::finite({0});
    std::uint64_t base = 2;
    std::uint64_t modulus = 2;
    std::uint64_t max_transient = 0;
    std::uint64_t max_period = 1;
};

struct FoundPeriod {
    std::uint64_t transient = 0;
    std::uint64_t period = 0;
    /// Inclusive range of n on which u_{n+T} == u_n was confirmed.
    std::uint64_t window_begin = 0;
    std::uint64_t window_end = 0;
};

struct PeriodSearchReport {
    SearchParams params;
    std::optional<FoundPeriod> found;
    /// Number of sequence terms inspected.
    std::uint64_t terms = 0;
};

/// Smallest period T <= max_period (then smallest transient N <= max_transient)
/// with u_{n+T} == u_n on [N, N + 4T + max_period], u_n = f_{A,b}(n) mod d.
PeriodSearchReport period_search(const SearchParams& params);
/// Runs independent searches on worker threads; results follow input order.
std::vector<PeriodSearchReport> period_search_grid(std::span<const SearchParams> grid, unsigned threads = 0);

struct PutnamCheck {
    std::uint64_t base = 0;
    std::uint64_t range = 0;
    bool floor_formula = true;
    bool progression = true;
    bool periodic_mod_d = true;
    std::optional<std::uint64_t> first_failure;

    bool holds() const noexcept { return floor_formula && progression && periodic_mod_d; }
};

/// For A_b = {0, ..., b^2 - 1}: f(n) = floor(n/b) + 1, f(n + bd) = f(n) + d,
/// and f mod d has period bd (d = 2..8), all for n <= range.
PutnamCheck check_putnam_family(std::uint64_t base, std::uint64_t range);

struct ArBrCheck {
    unsigned r = 0;
    DigitSet a_set = DigitSet::finite({0});
    DigitSet b_set = DigitSet::finite({0});
    Poly2 product;
    std::uint64_t expected_period = 0;
    std::uint64_t period_a = 0;
    std::uint64_t period_b = 0;
    bool product_ok = false;
    bool periods_ok = false;
    bool complementary = false;

    bool holds() const noexcept { return product_ok && periods_ok && complementary; }
};

/// A_r = {0, 1, 2, 4, ..., 2^r} and B_r = {0, 1, 3, 7, ..., 2^r - 1}, 2 <= r <= 12.
ArBrCheck check_ar_br_family(unsigned r);

}  // namespace binpart::periodicity
