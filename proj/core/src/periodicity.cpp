#include "binpart/periodicity.hpp"

#include <algorithm>
#include <numeric>

#include "binpart/error.hpp"
#include "binpart/factor2.hpp"
#include "binpart/partitions.hpp"

namespace binpart::periodicity {

namespace {

using partitions::CountSession;
using partitions::ModCountSession;

std::vector<std::uint64_t> mul_trunc_mod(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                         std::uint64_t d) {
    const std::size_t len = a.size();
    std::vector<std::uint64_t> out(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < len; ++j) {
            if (b[j] == 0) continue;
            out[i + j] = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(a[i]) * b[j] + out[i + j]) % d);
        }
    }
    return out;
}

std::vector<mpz_class> mul_trunc(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    const std::size_t len = a.size();
    std::vector<mpz_class> out(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < len; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

template <typename T, typename Mul>
std::vector<T> power_trunc(std::vector<T> base, std::uint64_t e, T one, Mul mul) {
    std::vector<T> acc(base.size(), T(0));
    acc[0] = one;
    while (e > 0) {
        if (e & 1U) acc = mul(acc, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return acc;
}

SeriesCheck compare_with_one(const std::vector<std::uint64_t>& coeffs) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != (i == 0 ? 1U : 0U)) return {false, i};
    }
    return {true, std::nullopt};
}

}  // namespace

Ratio::Ratio(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "ratio with zero denominator");
    const std::uint64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::string to_string(const Ratio& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Poly2 phi_poly(const DigitSet& set) {
    if (!set.is_finite()) throw Error(ErrorCode::InfiniteSet, "phi_poly needs a finite digit set");
    const auto& members = set.explicit_members();
    return Poly2::from_exponents(std::vector<std::size_t>(members.begin(), members.end()));
}

std::uint64_t parity_period(const DigitSet& set) {
    const Poly2 phi = phi_poly(set);
    if (set.size() < 2) {
        throw Error(ErrorCode::DegenerateSet, "A = {0}: phi_A = 1 and f vanishes for n > 0");
    }
    return factor2::period(phi).period;
}

ParityProfile complement(const DigitSet& set) {
    const Poly2 phi = phi_poly(set);
    const std::uint64_t period = parity_period(set);
    const Poly2 one_plus = add(Poly2::one(), Poly2::monomial(period));
    const auto [q, r] = divrem(one_plus, phi);
    if (!r.is_zero()) {
        throw Error(ErrorCode::InvariantViolation, "phi_A does not divide 1 + x^" + std::to_string(period));
    }
    ParityProfile profile;
    profile.set = set;
    profile.period = period;
    for (std::size_t e : q.exponents()) profile.complement.push_back(e);
    profile.odd_density = Ratio(profile.complement.size(), period);

    if (profile.complement.empty() || profile.complement.front() != 0) {
        throw Error(ErrorCode::InvariantViolation, "complementary set must contain 0");
    }
    if (mul(phi, q) != one_plus) throw Error(ErrorCode::InvariantViolation, "phi_A * phi_A' != 1 + x^T");
    ModCountSession f(set, 2, 2);
    for (std::uint64_t n = 0; n < 3 * period; ++n) {
        const bool odd = f.at(n) == 1;
        if (odd != q.coeff(n % period)) {
            throw Error(ErrorCode::InvariantViolation,
                        "parity of f(" + std::to_string(n) + ") disagrees with the complementary set");
        }
    }
    return profile;
}

SeriesCheck verify_main_theorem(const DigitSet& set, std::uint64_t truncation) {
    ModCountSession f(set, 2, 2);
    std::vector<std::size_t> odd;
    for (std::uint64_t n = 0; n <= truncation; ++n) {
        if (f.at(n) == 1) odd.push_back(n);
    }
    const auto members = set.members_up_to(truncation);
    const Poly2 phi = Poly2::from_exponents(std::vector<std::size_t>(members.begin(), members.end()));
    const Poly2 product = mul(Poly2::from_exponents(odd), phi).truncated(truncation + 1);
    const Poly2 diff = add(product, Poly2::one());
    if (diff.is_zero()) return {true, std::nullopt};
    return {false, diff.exponents().front()};
}

std::vector<std::uint64_t> power_product_mod(const DigitSet& set, std::uint64_t base, std::uint64_t modulus,
                                             std::uint64_t truncation) {
    ModCountSession f(set, base, modulus);
    std::vector<std::uint64_t> series(truncation + 1), phi(truncation + 1, 0);
    for (std::uint64_t n = 0; n <= truncation; ++n) series[n] = f.at(n);
    for (std::uint64_t a : set.members_up_to(truncation)) phi[a] = 1 % modulus;
    const auto mul = [modulus](const auto& a, const auto& b) { return mul_trunc_mod(a, b, modulus); };
    return mul(power_trunc<std::uint64_t>(series, base - 1, 1 % modulus, mul), phi);
}

std::vector<mpz_class> power_product_exact(const DigitSet& set, std::uint64_t base, std::uint64_t truncation) {
    CountSession f(set, base);
    std::vector<mpz_class> series(truncation + 1), phi(truncation + 1, 0);
    for (std::uint64_t n = 0; n <= truncation; ++n) series[n] = f.at(n);
    for (std::uint64_t a : set.members_up_to(truncation)) phi[a] = 1;
    return mul_trunc(power_trunc<mpz_class>(series, base - 1, mpz_class(1), mul_trunc), phi);
}

SeriesCheck verify_prime_theorem(const DigitSet& set, std::uint64_t prime, std::uint64_t truncation) {
    if (!factor2::is_prime_u64(prime)) throw Error(ErrorCode::NotPrime, std::to_string(prime) + " is not prime");
    return compare_with_one(power_product_mod(set, prime, prime, truncation));
}

}  // namespace binpart::periodicity
