#include <bit>

#include "binpart/error.hpp"
#include "binpart/partitions.hpp"

namespace binpart::partitions {

namespace {

bool positive_even(std::uint64_t v) { return v > 0 && v % 2 == 0; }

std::uint64_t nu2_u64(std::uint64_t v) { return static_cast<std::uint64_t>(std::countr_zero(v)); }

void tally(FormulaReading& reading, std::uint64_t m, bool agrees) {
    if (agrees) {
        ++reading.agreements;
    } else {
        ++reading.disagreements;
        reading.disagreeing_m.push_back(m);
    }
}

}  // namespace

ChurchhouseReport churchhouse_report(std::uint64_t max_n) {
    if (max_n < 16) throw Error(ErrorCode::OutOfRange, "churchhouse_report needs max_n >= 16");
    CountSession f(DigitSet::naturals(), 2);
    ChurchhouseReport report;
    report.max_n = max_n;

    for (std::uint64_t n = 0; n <= max_n; ++n) {
        const mpz_class& value = f.at(n);
        if (n >= 2 && mpz_odd_p(value.get_mpz_t())) report.odd_violations.push_back(n);
        if (mpz_divisible_2exp_p(value.get_mpz_t(), 3)) report.mod8_violations.push_back(n);
        if (n >= 2) {
            const bool predicted = positive_even(nu2_u64(n - 1)) || positive_even(nu2_u64(n));
            const bool actual = mpz_divisible_2exp_p(value.get_mpz_t(), 2) != 0;
            if (predicted != actual) report.mod4_violations.push_back(n);
        }
    }

    FormulaReading printed{"printed", "nu2(f(4m)) - nu2(f(m)) = floor(3/2 * (3 nu2(m) + 4))", 0, 0, {}};
    FormulaReading halved{"printed-halved", "nu2(f(4m)) - nu2(f(m)) = floor((3 nu2(m) + 4) / 2)", 0, 0, {}};
    FormulaReading difference{"difference", "nu2(f(4m) - f(m)) = floor((3 nu2(m) + 4) / 2)", 0, 0, {}};
    FormulaReading difference_printed{
        "difference-three-halves", "nu2(f(4m) - f(m)) = floor(3/2 * (3 nu2(m) + 4))", 0, 0, {}};

    for (std::uint64_t m = 2; 4 * m <= max_n; m += 2) {
        const mpz_class& fm = f.at(m);
        const mpz_class& f4m = f.at(4 * m);
        ValuationRow row;
        row.m = m;
        row.nu2_m = nu2_u64(m);
        row.valuation_gap = static_cast<std::int64_t>(nu2(f4m)) - static_cast<std::int64_t>(nu2(fm));
        row.nu2_difference = nu2(f4m - fm);
        row.rhs_three_halves = 3 * (3 * row.nu2_m + 4) / 2;
        row.rhs_half = (3 * row.nu2_m + 4) / 2;
        tally(printed, m, row.valuation_gap == static_cast<std::int64_t>(row.rhs_three_halves));
        tally(halved, m, row.valuation_gap == static_cast<std::int64_t>(row.rhs_half));
        tally(difference, m, row.nu2_difference == row.rhs_half);
        tally(difference_printed, m, row.nu2_difference == row.rhs_three_halves);
        report.table.push_back(row);
    }
    report.readings = {std::move(printed), std::move(halved), std::move(difference),
                       std::move(difference_printed)};
    return report;
}

}  // namespace binpart::partitions
