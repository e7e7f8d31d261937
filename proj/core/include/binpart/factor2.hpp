#pragma once

// Factorization, irreducibility, primitivity and period (order) of
// polynomials over GF(2).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "binpart/gf2poly.hpp"

namespace binpart::factor2 {

using gf2::Poly2;

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using IntFactorization = std::vector<PrimePower>;

bool is_prime_u64(std::uint64_t n) noexcept;
/// Complete factorization, primes ascending. factor_u64(1) is empty.
IntFactorization factor_u64(std::uint64_t n);
std::uint64_t expand(const IntFactorization& f);

struct FactorPower {
    Poly2 factor;
    unsigned exponent = 0;
    friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Irreducible factors of `original`, pairwise distinct and sorted by
/// (degree, bit pattern).
struct Factorization2 {
    Poly2 original;
    std::vector<FactorPower> factors;

    Poly2 expand() const;
};

/// Order of x modulo 2^d - 1 can only be computed while 2^d - 1 fits the
/// 64-bit integer factorizer.
inline constexpr std::size_t kOrderDegreeCap = 64;

struct PeriodCertificate {
    Poly2 poly;
    std::uint64_t period = 0;
    std::uint64_t m_bound = 0;
    IntFactorization period_factorization;
};

/// Re-runs the divisibility and minimality checks on a certificate.
bool verify(const PeriodCertificate& cert);

/// Square-free parts with their multiplicities, ascending by multiplicity.
std::vector<FactorPower> squarefree_decompose(const Poly2& h);

/// Requires h(0) = 1. The seed drives equal-degree splitting only; the
/// result does not depend on it.
Factorization2 factor(const Poly2& h, std::uint64_t seed = 0);

bool is_irreducible(const Poly2& h);

/// Multiplicative order of x in GF(2)[x]/(f) for irreducible f != x.
std::uint64_t order_of_irreducible(const Poly2& f);

/// Least T >= 1 with h | 1 + x^T, certified minimal.
PeriodCertificate period(const Poly2& h, std::uint64_t seed = 0);

/// 2^k * lcm(2^d_i - 1) over the irreducible factors, k minimal with 2^k >= every multiplicity.
std::uint64_t m_bound(const Poly2& h, std::uint64_t seed = 0);
std::uint64_t m_bound(const Factorization2& f);

bool is_primitive(const Poly2& h);

}  // namespace binpart::factor2
