#include <algorithm>

#include "binpart/error.hpp"
#include "binpart/factor2.hpp"
#include "binpart/partitions.hpp"
#include "binpart/periodicity.hpp"

namespace binpart::periodicity {

namespace {

Poly2 one_plus_x_to(std::uint64_t t) { return add(Poly2::one(), Poly2::monomial(t)); }

std::size_t degree_or_zero(const Poly2& p) { return p.is_zero() ? 0 : p.degree().value(); }

}  // namespace

bool RationalPhi::coefficient(std::uint64_t n) const {
    return polynomial_part.coeff(n) != numerator.coeff(n % tail_period);
}

Poly2 RationalPhi::combined_numerator() const { return add(mul(polynomial_part, denominator), numerator); }

RationalPhi rational_phi(const DigitSet& set) {
    RationalPhi out;
    if (set.is_finite()) {
        out.polynomial_part = phi_poly(set);
        out.tail_period = 1;
        out.denominator = one_plus_x_to(1);
        return out;
    }
    const Tail& tail = *set.tail();
    const std::uint64_t t = tail.modulus;
    const std::uint64_t cutoff = set.cutoff();
    // Members n >= cutoff with n == r (mod t) sum to x^s / (1 + x^t), s the first such n.
    std::vector<std::size_t> starts;
    for (std::uint64_t r : tail.residues) starts.push_back(cutoff + (r + t - cutoff % t) % t);
    const auto [quotient, remainder] = divrem(Poly2::from_exponents(starts), one_plus_x_to(t));
    const auto& members = set.explicit_members();
    const Poly2 head = Poly2::from_exponents(std::vector<std::size_t>(members.begin(), members.end()));
    out.polynomial_part = add(head, quotient);
    out.numerator = remainder;
    out.denominator = one_plus_x_to(t);
    out.tail_period = t;

    const std::uint64_t check_to = 2 * (degree_or_zero(out.polynomial_part) + t);
    for (std::uint64_t n = 0; n <= check_to; ++n) {
        if (out.coefficient(n) != set.contains(n)) {
            throw Error(ErrorCode::InvariantViolation,
                        "rational form of phi_A disagrees with A at n = " + std::to_string(n));
        }
    }
    return out;
}

bool EventualParity::is_odd(std::uint64_t n) const {
    if (n < transient) return std::binary_search(transient_odd.begin(), transient_odd.end(), n);
    return std::binary_search(periodic_odd_residues.begin(), periodic_odd_residues.end(), n % period);
}

EventualParity parity_profile_infinite(const DigitSet& set) {
    const RationalPhi phi = rational_phi(set);
    // F = 1/phi = denominator / (polynomial_part * denominator + numerator).
    const Poly2 g_num = phi.denominator;
    const Poly2 g_den = phi.combined_numerator();
    if (!g_den.constant_term()) {
        throw Error(ErrorCode::InvariantViolation, "phi_A has zero constant term");
    }
    const Poly2 common = gcd(g_num, g_den);
    EventualParity out;
    out.generating_numerator = divrem(g_num, common).quotient;
    out.generating_denominator = divrem(g_den, common).quotient;

    // Write F = Q + R / (1 + x^P) with deg R < P; P is the least period of the tail.
    Poly2 q, r;
    std::uint64_t p = 1;
    if (out.generating_denominator.is_one()) {
        q = out.generating_numerator;
    } else {
        p = factor2::period(out.generating_denominator).period;
        const Poly2 cofactor = divrem(one_plus_x_to(p), out.generating_denominator).quotient;
        auto split = divrem(mul(out.generating_numerator, cofactor), one_plus_x_to(p));
        q = std::move(split.quotient);
        r = std::move(split.remainder);
    }
    out.period = p;

    const std::uint64_t head = q.is_zero() ? 0 : q.degree().value() + 1;
    const std::uint64_t len = head + 2 * p;
    std::vector<bool> u(len);
    for (std::uint64_t n = 0; n < len; ++n) u[n] = q.coeff(n) != r.coeff(n % p);
    std::uint64_t transient = head;
    while (transient > 0 && u[transient - 1] == u[transient - 1 + p]) --transient;
    out.transient = transient;
    for (std::uint64_t n = 0; n < transient; ++n) {
        if (u[n]) out.transient_odd.push_back(n);
    }
    for (std::uint64_t n = transient; n < transient + p; ++n) {
        if (u[n]) out.periodic_odd_residues.push_back(n % p);
    }
    std::sort(out.periodic_odd_residues.begin(), out.periodic_odd_residues.end());

    partitions::ModCountSession f(set, 2, 2);
    for (std::uint64_t n = 0; n < transient + 3 * p; ++n) {
        if ((f.at(n) == 1) != out.is_odd(n)) {
            throw Error(ErrorCode::InvariantViolation,
                        "eventual parity profile disagrees with f at n = " + std::to_string(n));
        }
    }
    return out;
}

}  // namespace binpart::periodicity
