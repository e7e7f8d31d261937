#include "binpart/factor2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <utility>

#include "binpart/error.hpp"

namespace binpart::factor2 {

using gf2::Degree;

namespace {

std::size_t deg(const Poly2& p) { return p.degree().value(); }

void sff_into(const Poly2& f, unsigned multiplier, std::vector<FactorPower>& out) {
    Poly2 c = gcd(f, derivative(f));
    Poly2 w = divrem(f, c).quotient;
    unsigned i = 1;
    while (!w.is_one()) {
        Poly2 y = gcd(w, c);
        Poly2 part = divrem(w, y).quotient;
        if (!part.is_one()) out.push_back({std::move(part), i * multiplier});
        w = std::move(y);
        c = divrem(c, w).quotient;
        ++i;
    }
    // What remains has zero derivative, i.e. is a perfect square.
    if (!c.is_one()) sff_into(gf2::square_root(c), 2 * multiplier, out);
}

struct DegreeGroup {
    Poly2 product;
    std::size_t degree;
};

// Splits a square-free f into products of its irreducible factors of equal degree.
std::vector<DegreeGroup> distinct_degree(Poly2 f) {
    std::vector<DegreeGroup> out;
    const Poly2 x = Poly2::x();
    Poly2 w = gf2::rem(x, f);
    for (std::size_t d = 1; 2 * d <= deg(f); ++d) {
        w = gf2::rem(square(w), f);
        Poly2 g = gcd(add(w, x), f);
        if (!g.is_one()) {
            f = divrem(f, g).quotient;
            w = gf2::rem(w, f);
            out.push_back({std::move(g), d});
        }
    }
    if (f.degree() >= Degree(1)) {
        const std::size_t d = deg(f);
        out.push_back({std::move(f), d});
    }
    return out;
}

Poly2 random_below(std::size_t degree_bound, std::mt19937_64& rng) {
    std::vector<Poly2::Limb> limbs((degree_bound + 63) / 64);
    for (auto& l : limbs) l = rng();
    return Poly2::from_limbs(std::move(limbs)).truncated(degree_bound);
}

// Equal-degree splitting via the absolute trace GF(2^d) -> GF(2): on each
// irreducible component Tr(a) is 0 or 1, so gcd(g, Tr(a)) picks a random subset.
void equal_degree(const Poly2& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly2>& out) {
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    while (true) {
        const Poly2 a = random_below(deg(g), rng);
        Poly2 s = a, trace = a;
        for (std::size_t i = 1; i < d; ++i) {
            s = gf2::rem(square(s), g);
            trace = add(trace, s);
        }
        if (trace.is_zero()) continue;
        Poly2 u = gcd(g, trace);
        if (u.is_one() || u == g) continue;
        Poly2 v = divrem(g, u).quotient;
        equal_degree(u, d, rng, out);
        equal_degree(v, d, rng, out);
        return;
    }
}

// x^(2^k) mod h by k squarings.
Poly2 frobenius_power(const Poly2& h, std::size_t k) {
    Poly2 w = gf2::rem(Poly2::x(), h);
    for (std::size_t i = 0; i < k; ++i) w = gf2::rem(square(w), h);
    return w;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(ErrorCode::Overflow, "period or bound exceeds 64 bits");
    }
    return out;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) { return checked_mul(a / std::gcd(a, b), b); }

std::uint64_t mersenne(std::size_t d) {
    if (d > kOrderDegreeCap) {
        throw Error(ErrorCode::DegreeCap, "irreducible factor of degree " + std::to_string(d) +
                                              " exceeds the order-computation cap of " +
                                              std::to_string(kOrderDegreeCap));
    }
    return d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
}

// Smallest k with 2^k >= e.
unsigned ceil_log2(unsigned e) { return e <= 1 ? 0U : static_cast<unsigned>(std::bit_width(e - 1U)); }

void require_unit_constant(const Poly2& h, const char* what) {
    if (h.is_zero()) throw Error(ErrorCode::ZeroInput, std::string(what) + " of the zero polynomial");
    if (!h.constant_term()) {
        throw Error(ErrorCode::ConstantTermZero,
                    std::string(what) + " requires h(0) = 1, got " + gf2::to_caret(h));
    }
}

}  // namespace

Poly2 Factorization2::expand() const {
    Poly2 acc = Poly2::one();
    for (const auto& [f, e] : factors) {
        for (unsigned i = 0; i < e; ++i) acc = mul(acc, f);
    }
    return acc;
}

std::vector<FactorPower> squarefree_decompose(const Poly2& h) {
    if (h.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree_decompose of the zero polynomial");
    std::vector<FactorPower> out;
    if (h.is_one()) return out;
    sff_into(h, 1, out);
    std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
        return a.exponent < b.exponent;
    });
    return out;
}

Factorization2 factor(const Poly2& h, std::uint64_t seed) {
    require_unit_constant(h, "factor");
    std::mt19937_64 rng(seed);
    Factorization2 result{h, {}};
    for (const auto& [part, e] : squarefree_decompose(h)) {
        for (const auto& [group, d] : distinct_degree(part)) {
            std::vector<Poly2> irreducibles;
            equal_degree(group, d, rng, irreducibles);
            for (auto& f : irreducibles) result.factors.push_back({std::move(f), e});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return a.factor < b.factor; });
    if (result.expand() != h) {
        throw Error(ErrorCode::InvariantViolation, "factor product mismatch for " + gf2::to_caret(h));
    }
    return result;
}

bool is_irreducible(const Poly2& h) {
    if (h.is_zero()) throw Error(ErrorCode::ZeroInput, "is_irreducible of the zero polynomial");
    if (h.degree() < Degree(1)) throw Error(ErrorCode::OutOfRange, "is_irreducible needs degree >= 1");
    const std::size_t d = deg(h);
    if (frobenius_power(h, d) != gf2::rem(Poly2::x(), h)) return false;
    for (const auto& [p, e] : factor_u64(d)) {
        const Poly2 w = frobenius_power(h, d / p);
        if (!gcd(add(w, Poly2::x()), h).is_one()) return false;
    }
    return true;
}

std::uint64_t order_of_irreducible(const Poly2& f) {
    if (f.is_zero() || f.degree() < Degree(1)) {
        throw Error(ErrorCode::OutOfRange, "order_of_irreducible needs degree >= 1");
    }
    if (f == Poly2::x()) throw Error(ErrorCode::OutOfRange, "x has no multiplicative order modulo itself");
    const std::uint64_t group = mersenne(deg(f));
    if (!is_irreducible(f)) throw Error(ErrorCode::Reducible, gf2::to_caret(f) + " is reducible");
    std::uint64_t order = group;
    for (const auto& [p, e] : factor_u64(group)) {
        for (unsigned i = 0; i < e; ++i) {
            if (!gf2::powmod(Poly2::x(), order / p, f).is_one()) break;
            order /= p;
        }
    }
    return order;
}

std::uint64_t m_bound(const Factorization2& f) {
    std::uint64_t lcm = 1;
    unsigned max_e = 1;
    for (const auto& [g, e] : f.factors) {
        lcm = checked_lcm(lcm, mersenne(deg(g)));
        max_e = std::max(max_e, e);
    }
    return checked_mul(lcm, std::uint64_t{1} << ceil_log2(max_e));
}

std::uint64_t m_bound(const Poly2& h, std::uint64_t seed) {
    require_unit_constant(h, "m_bound");
    if (h.degree() < Degree(1)) throw Error(ErrorCode::OutOfRange, "m_bound needs degree >= 1");
    return m_bound(factor(h, seed));
}

bool verify(const PeriodCertificate& c) {
    if (c.period == 0 || c.m_bound == 0 || c.m_bound % c.period != 0) return false;
    if (expand(c.period_factorization) != c.period) return false;
    const Poly2 x = Poly2::x();
    if (!gf2::powmod(x, c.period, c.poly).is_one()) return false;
    for (const auto& [p, e] : c.period_factorization) {
        if (gf2::powmod(x, c.period / p, c.poly).is_one()) return false;
    }
    return true;
}

PeriodCertificate period(const Poly2& h, std::uint64_t seed) {
    require_unit_constant(h, "period");
    if (h.degree() < Degree(1)) throw Error(ErrorCode::OutOfRange, "period needs degree >= 1");
    const Factorization2 f = factor(h, seed);
    std::uint64_t lcm = 1;
    unsigned max_e = 1;
    for (const auto& [g, e] : f.factors) {
        lcm = checked_lcm(lcm, order_of_irreducible(g));
        max_e = std::max(max_e, e);
    }
    PeriodCertificate cert;
    cert.poly = h;
    cert.period = checked_mul(lcm, std::uint64_t{1} << ceil_log2(max_e));
    cert.m_bound = m_bound(f);
    cert.period_factorization = factor_u64(cert.period);
    if (!verify(cert)) {
        throw Error(ErrorCode::InvariantViolation, "period certificate failed for " + gf2::to_caret(h));
    }
    return cert;
}

bool is_primitive(const Poly2& h) {
    if (h.is_zero() || h.degree() < Degree(1) || !h.constant_term()) return false;
    if (!is_irreducible(h)) return false;
    return order_of_irreducible(h) == mersenne(deg(h));
}

}  // namespace binpart::factor2
