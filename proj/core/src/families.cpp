#include "binpart/error.hpp"
#include "binpart/factor2.hpp"
#include "binpart/partitions.hpp"
#include "binpart/periodicity.hpp"

namespace binpart::periodicity {

PutnamCheck check_putnam_family(std::uint64_t base, std::uint64_t range) {
    if (base < 2) throw Error(ErrorCode::OutOfRange, "base must be >= 2");
    PutnamCheck out;
    out.base = base;
    out.range = range;
    const DigitSet digits = DigitSet::first_n(base * base);
    partitions::CountSession f(digits, base);
    auto fail = [&out](bool& flag, std::uint64_t n) {
        flag = false;
        if (!out.first_failure || n < *out.first_failure) out.first_failure = n;
    };

    for (std::uint64_t n = 0; n <= range; ++n) {
        if (f.at(n) != n / base + 1) fail(out.floor_formula, n);
    }
    for (std::uint64_t d = 1; base * d <= range; ++d) {
        for (std::uint64_t n = 0; n + base * d <= range; ++n) {
            if (f.at(n + base * d) != f.at(n) + d) fail(out.progression, n);
        }
    }
    for (std::uint64_t d = 2; d <= 8; ++d) {
        partitions::ModCountSession g(digits, base, d);
        for (std::uint64_t n = 0; n + base * d <= range; ++n) {
            if (g.at(n + base * d) != g.at(n)) fail(out.periodic_mod_d, n);
        }
    }
    return out;
}

ArBrCheck check_ar_br_family(unsigned r) {
    if (r < 2 || r > 12) throw Error(ErrorCode::OutOfRange, "r must lie in [2, 12]");
    std::vector<std::uint64_t> a{0}, b{0};
    for (unsigned l = 0; l <= r; ++l) a.push_back(std::uint64_t{1} << l);
    for (unsigned l = 1; l <= r; ++l) b.push_back((std::uint64_t{1} << l) - 1);

    ArBrCheck out;
    out.r = r;
    out.a_set = DigitSet::finite(a);
    out.b_set = DigitSet::finite(b);
    out.expected_period = (std::uint64_t{1} << (r + 1)) - 1;
    out.product = mul(phi_poly(out.a_set), phi_poly(out.b_set));
    out.product_ok = out.product == add(Poly2::one(), Poly2::monomial(out.expected_period));
    out.period_a = parity_period(out.a_set);
    out.period_b = parity_period(out.b_set);
    out.periods_ok = out.period_a == out.expected_period && out.period_b == out.expected_period;
    out.complementary = complement(out.a_set).complement == out.b_set.explicit_members() &&
                        complement(out.b_set).complement == out.a_set.explicit_members();
    return out;
}

}  // namespace binpart::periodicity
