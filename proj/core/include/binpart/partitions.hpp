#pragma once

// Counting base-b representations n = sum e_k b^k with digits e_k drawn from
// a DigitSet, exactly and modulo d.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "binpart/digit_set.hpp"

namespace binpart::partitions {

/// Exact evaluation session for f_{A,b}. Values are memoized for the
/// lifetime of the session; distinct sessions share nothing.
class CountSession {
public:
    CountSession(DigitSet set, std::uint64_t base);

    /// The returned reference stays valid for the lifetime of the session.
    const mpz_class& at(std::uint64_t n);

    const DigitSet& set() const noexcept { return set_; }
    std::uint64_t base() const noexcept { return base_; }

private:
    DigitSet set_;
    std::uint64_t base_;
    std::unordered_map<std::uint64_t, mpz_class> memo_;
};

/// Same recurrence with every value reduced mod d; never widens.
class ModCountSession {
public:
    ModCountSession(DigitSet set, std::uint64_t base, std::uint64_t modulus);

    std::uint64_t at(std::uint64_t n);

    const DigitSet& set() const noexcept { return set_; }
    std::uint64_t base() const noexcept { return base_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

private:
    DigitSet set_;
    std::uint64_t base_;
    std::uint64_t modulus_;
    std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

mpz_class count(const DigitSet& set, std::uint64_t base, std::uint64_t n);
std::uint64_t count_mod(const DigitSet& set, std::uint64_t base, std::uint64_t n, std::uint64_t modulus);

/// Coefficients 0..N of prod_k phi_A(x^(b^k)), computed by truncated series
/// multiplication rather than the recurrence.
std::vector<mpz_class> count_series_oracle(const DigitSet& set, std::uint64_t base, std::uint64_t truncation);

/// Sum over a in A of f_{A,2}(n - a). A must be finite.
mpz_class theta(const DigitSet& set, std::int64_t n);
mpz_class theta(CountSession& base2_session, std::int64_t n);

/// Stern's diatomic sequence, s(0) = 0, s(1) = 1.
mpz_class stern(std::uint64_t n);

/// 2-adic valuation; throws ZeroInput for m = 0.
std::uint64_t nu2(const mpz_class& m);

struct ValuationRow {
    std::uint64_t m = 0;
    std::uint64_t nu2_m = 0;
    /// nu2(f(4m)) - nu2(f(m))
    std::int64_t valuation_gap = 0;
    /// nu2(f(4m) - f(m))
    std::uint64_t nu2_difference = 0;
    /// floor(3/2 * (3 nu2(m) + 4))
    std::uint64_t rhs_three_halves = 0;
    /// floor((3 nu2(m) + 4) / 2)
    std::uint64_t rhs_half = 0;
};

struct FormulaReading {
    std::string name;
    std::string formula;
    std::size_t agreements = 0;
    std::size_t disagreements = 0;
    std::vector<std::uint64_t> disagreeing_m;
};

/// Empirical checks on the binary partition function f_{N,2}(n) for n <= max_n.
struct ChurchhouseReport {
    std::uint64_t max_n = 0;
    /// n >= 2 where f(n) is odd.
    std::vector<std::uint64_t> odd_violations;
    /// n >= 2 where "4 | f(n)" disagrees with "nu2(n-1) or nu2(n) is a positive even integer".
    std::vector<std::uint64_t> mod4_violations;
    /// n where 8 | f(n).
    std::vector<std::uint64_t> mod8_violations;
    /// Even m with 4m <= max_n.
    std::vector<ValuationRow> table;
    /// Candidate readings of the 4m-versus-m valuation formula and how often each matches.
    std::vector<FormulaReading> readings;

    bool congruences_hold() const noexcept {
        return odd_violations.empty() && mod4_violations.empty() && mod8_violations.empty();
    }
};

ChurchhouseReport churchhouse_report(std::uint64_t max_n);

}  // namespace binpart::partitions
