#pragma once

// Dense bit-packed polynomials over GF(2).
//
// Bit i of the limb vector is the coefficient of x^i. Values are canonical
// (no high zero limbs), so equality is limb-wise equality. A Poly2 is never
// mutated after construction; every operation returns a fresh value.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace binpart::gf2 {

/// Polynomial degree with an explicit marker for the zero polynomial.
/// The marker orders below every finite degree and has no integer value.
class Degree {
public:
    static constexpr Degree neg_inf() noexcept { return Degree(); }
    constexpr explicit Degree(std::size_t value) noexcept : finite_(true), value_(value) {}

    constexpr bool is_neg_inf() const noexcept { return !finite_; }
    /// Throws InvariantViolation on the zero-polynomial marker.
    std::size_t value() const;

    constexpr auto operator<=>(const Degree&) const noexcept = default;

private:
    constexpr Degree() noexcept = default;
    bool finite_ = false;
    std::size_t value_ = 0;
};

std::string to_string(Degree d);

/// Largest degree any Poly2 may reach; larger results raise DegreeLimit.
std::size_t max_degree() noexcept;
void set_max_degree(std::size_t degree) noexcept;
inline constexpr std::size_t kDefaultMaxDegree = std::size_t{1} << 20;

class Poly2 {
public:
    using Limb = std::uint64_t;
    static constexpr std::size_t kLimbBits = 64;

    Poly2() = default;

    static Poly2 one();
    static Poly2 x();
    static Poly2 monomial(std::size_t exponent);
    /// Terms with repeated exponents cancel in pairs.
    static Poly2 from_exponents(std::span<const std::size_t> exponents);
    static Poly2 from_limbs(std::vector<Limb> limbs);

    Degree degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return limbs_.empty(); }
    bool is_one() const noexcept { return limbs_.size() == 1 && limbs_[0] == 1; }
    bool coeff(std::size_t i) const noexcept;
    bool constant_term() const noexcept { return coeff(0); }
    std::span<const Limb> limbs() const noexcept { return limbs_; }
    std::size_t weight() const noexcept;
    std::vector<std::size_t> exponents() const;

    /// Terms of degree < n.
    Poly2 truncated(std::size_t n) const;
    /// Multiplication by x^k.
    Poly2 shifted(std::size_t k) const;

    friend bool operator==(const Poly2&, const Poly2&) = default;
    /// Orders by degree, then by coefficient pattern from the top down.
    friend std::strong_ordering operator<=>(const Poly2& a, const Poly2& b) noexcept;

private:
    explicit Poly2(std::vector<Limb> limbs);
    void normalize();

    std::vector<Limb> limbs_;
    Degree degree_ = Degree::neg_inf();
};

struct DivRem {
    Poly2 quotient;
    Poly2 remainder;
};

Poly2 add(const Poly2& a, const Poly2& b);
Poly2 mul(const Poly2& a, const Poly2& b);
Poly2 square(const Poly2& a);
DivRem divrem(const Poly2& a, const Poly2& b);
Poly2 rem(const Poly2& a, const Poly2& b);
Poly2 gcd(const Poly2& a, const Poly2& b);
Poly2 mulmod(const Poly2& a, const Poly2& b, const Poly2& m);
Poly2 powmod(const Poly2& base, const mpz_class& exponent, const Poly2& m);
Poly2 powmod(const Poly2& base, std::uint64_t exponent, const Poly2& m);
Poly2 derivative(const Poly2& a);
/// Inverse of square(): halves every exponent. Throws if a is not a square.
Poly2 square_root(const Poly2& a);
bool divides(const Poly2& d, const Poly2& a);

inline Poly2 operator+(const Poly2& a, const Poly2& b) { return add(a, b); }
inline Poly2 operator*(const Poly2& a, const Poly2& b) { return mul(a, b); }

/// "1+x+x^4+x^9"; the zero polynomial is "0".
std::string to_caret(const Poly2& p);
/// "0x213": bit i of the hex number is the coefficient of x^i.
std::string to_hex(const Poly2& p);
/// Accepts either caret or 0x-prefixed hex notation.
Poly2 parse_poly(std::string_view text);

namespace detail {

inline constexpr std::size_t kDefaultKaratsubaThresholdBits = 4096;
std::size_t karatsuba_threshold_bits() noexcept;
void set_karatsuba_threshold_bits(std::size_t bits) noexcept;

bool hardware_clmul_available() noexcept;
Poly2 mul_schoolbook(const Poly2& a, const Poly2& b);
Poly2 mul_schoolbook_portable(const Poly2& a, const Poly2& b);
Poly2 mul_karatsuba(const Poly2& a, const Poly2& b);

}  // namespace detail

}  // namespace binpart::gf2
