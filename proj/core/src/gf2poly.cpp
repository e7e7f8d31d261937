#include "binpart/gf2poly.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <utility>

#include "binpart/error.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define BINPART_X86 1
#endif

namespace binpart::gf2 {

namespace {

using Limb = Poly2::Limb;
using Limbs = std::vector<Limb>;
constexpr std::size_t kBits = Poly2::kLimbBits;

std::atomic<std::size_t> g_max_degree{kDefaultMaxDegree};
std::atomic<std::size_t> g_karatsuba_bits{detail::kDefaultKaratsubaThresholdBits};

void check_degree(std::size_t degree) {
    if (degree > max_degree()) {
        throw Error(ErrorCode::DegreeLimit, "degree " + std::to_string(degree) +
                                                " exceeds the configured maximum " +
                                                std::to_string(max_degree()));
    }
}

// 64x64 -> 128 carryless product with a 4-bit window.
inline void clmul64_portable(Limb a, Limb b, Limb& lo, Limb& hi) {
    unsigned __int128 table[16];
    table[0] = 0;
    table[1] = a;
    for (int j = 2; j < 16; j += 2) {
        table[j] = table[j / 2] << 1;
        table[j + 1] = table[j] ^ a;
    }
    unsigned __int128 acc = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        acc = (acc << 4) ^ table[(b >> shift) & 0xF];
    }
    lo = static_cast<Limb>(acc);
    hi = static_cast<Limb>(acc >> 64);
}

void schoolbook_portable(std::span<const Limb> a, std::span<const Limb> b, std::span<Limb> out) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            Limb lo, hi;
            clmul64_portable(a[i], b[j], lo, hi);
            out[i + j] ^= lo;
            out[i + j + 1] ^= hi;
        }
    }
}

#if BINPART_X86
__attribute__((target("pclmul,sse2"))) void schoolbook_clmul(std::span<const Limb> a,
                                                              std::span<const Limb> b,
                                                              std::span<Limb> out) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const __m128i va = _mm_set_epi64x(0, static_cast<long long>(a[i]));
        for (std::size_t j = 0; j < b.size(); ++j) {
            const __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b[j]));
            const __m128i p = _mm_clmulepi64_si128(va, vb, 0x00);
            out[i + j] ^= static_cast<Limb>(_mm_cvtsi128_si64(p));
            out[i + j + 1] ^= static_cast<Limb>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p)));
        }
    }
}
#endif

bool detect_clmul() noexcept {
#if BINPART_X86
    __builtin_cpu_init();
    return __builtin_cpu_supports("pclmul");
#else
    return false;
#endif
}

void schoolbook(std::span<const Limb> a, std::span<const Limb> b, std::span<Limb> out) {
#if BINPART_X86
    static const bool hw = detect_clmul();
    if (hw) {
        schoolbook_clmul(a, b, out);
        return;
    }
#endif
    schoolbook_portable(a, b, out);
}

void xor_into(Limbs& dst, std::span<const Limb> src, std::size_t limb_offset) {
    if (dst.size() < src.size() + limb_offset) dst.resize(src.size() + limb_offset, 0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + limb_offset] ^= src[i];
}

Limbs karatsuba(std::span<const Limb> a, std::span<const Limb> b, std::size_t threshold_limbs) {
    if (a.size() < b.size()) std::swap(a, b);
    if (b.empty()) return {};
    if (b.size() < threshold_limbs || b.size() < 2) {
        Limbs out(a.size() + b.size(), 0);
        schoolbook(a, b, out);
        return out;
    }
    const std::size_t half = (a.size() + 1) / 2;
    if (b.size() <= half) {
        // Unbalanced: split only the longer operand.
        Limbs out = karatsuba(a.first(half), b, threshold_limbs);
        xor_into(out, karatsuba(a.subspan(half), b, threshold_limbs), half);
        return out;
    }
    const auto a0 = a.first(half), a1 = a.subspan(half);
    const auto b0 = b.first(half), b1 = b.subspan(half);
    Limbs z0 = karatsuba(a0, b0, threshold_limbs);
    Limbs z2 = karatsuba(a1, b1, threshold_limbs);
    Limbs sa(a0.begin(), a0.end()), sb(b0.begin(), b0.end());
    xor_into(sa, a1, 0);
    xor_into(sb, b1, 0);
    Limbs z1 = karatsuba(sa, sb, threshold_limbs);
    xor_into(z1, z0, 0);
    xor_into(z1, z2, 0);
    Limbs out = std::move(z0);
    xor_into(out, z1, half);
    xor_into(out, z2, 2 * half);
    return out;
}

// Interleaves the 32 bits of x with zeros: bit i moves to bit 2i.
constexpr Limb spread32(Limb x) {
    x &= 0xFFFFFFFFULL;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFULL;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFULL;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0FULL;
    x = (x | (x << 2)) & 0x3333333333333333ULL;
    x = (x | (x << 1)) & 0x5555555555555555ULL;
    return x;
}

// Inverse of spread32 on the even bit positions.
constexpr Limb compress32(Limb x) {
    x &= 0x5555555555555555ULL;
    x = (x | (x >> 1)) & 0x3333333333333333ULL;
    x = (x | (x >> 2)) & 0x0F0F0F0F0F0F0F0FULL;
    x = (x | (x >> 4)) & 0x00FF00FF00FF00FFULL;
    x = (x | (x >> 8)) & 0x0000FFFF0000FFFFULL;
    x = (x | (x >> 16)) & 0x00000000FFFFFFFFULL;
    return x;
}

inline bool bit_at(const Limbs& v, std::size_t i) { return (v[i / kBits] >> (i % kBits)) & 1U; }

// dst ^= src * x^shift, where the shifted src is known to fit in dst.
void xor_shifted(Limbs& dst, std::span<const Limb> src, std::size_t shift) {
    const std::size_t word = shift / kBits;
    const unsigned bit = shift % kBits;
    if (bit == 0) {
        for (std::size_t j = 0; j < src.size(); ++j) dst[j + word] ^= src[j];
        return;
    }
    for (std::size_t j = 0; j < src.size(); ++j) {
        dst[j + word] ^= src[j] << bit;
        const Limb carry = src[j] >> (kBits - bit);
        if (carry) dst[j + word + 1] ^= carry;
    }
}

}  // namespace

std::size_t Degree::value() const {
    if (!finite_) throw Error(ErrorCode::InvariantViolation, "degree of the zero polynomial");
    return value_;
}

std::string to_string(Degree d) { return d.is_neg_inf() ? "-inf" : std::to_string(d.value()); }

std::size_t max_degree() noexcept { return g_max_degree.load(std::memory_order_relaxed); }
void set_max_degree(std::size_t degree) noexcept {
    g_max_degree.store(degree, std::memory_order_relaxed);
}

Poly2::Poly2(std::vector<Limb> limbs) : limbs_(std::move(limbs)) { normalize(); }

void Poly2::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) {
        degree_ = Degree::neg_inf();
        return;
    }
    const std::size_t top = (limbs_.size() - 1) * kBits + (kBits - 1 - std::countl_zero(limbs_.back()));
    check_degree(top);
    degree_ = Degree(top);
}

Poly2 Poly2::one() { return Poly2(Limbs{1}); }
Poly2 Poly2::x() { return Poly2(Limbs{2}); }

Poly2 Poly2::monomial(std::size_t exponent) {
    check_degree(exponent);
    Limbs v(exponent / kBits + 1, 0);
    v.back() = Limb{1} << (exponent % kBits);
    return Poly2(std::move(v));
}

Poly2 Poly2::from_exponents(std::span<const std::size_t> exponents) {
    if (exponents.empty()) return {};
    const std::size_t top = *std::max_element(exponents.begin(), exponents.end());
    check_degree(top);
    Limbs v(top / kBits + 1, 0);
    for (std::size_t e : exponents) v[e / kBits] ^= Limb{1} << (e % kBits);
    return Poly2(std::move(v));
}

Poly2 Poly2::from_limbs(std::vector<Limb> limbs) { return Poly2(std::move(limbs)); }

bool Poly2::coeff(std::size_t i) const noexcept {
    const std::size_t word = i / kBits;
    return word < limbs_.size() && ((limbs_[word] >> (i % kBits)) & 1U);
}

std::size_t Poly2::weight() const noexcept {
    std::size_t w = 0;
    for (Limb l : limbs_) w += static_cast<std::size_t>(std::popcount(l));
    return w;
}

std::vector<std::size_t> Poly2::exponents() const {
    std::vector<std::size_t> out;
    out.reserve(weight());
    for (std::size_t w = 0; w < limbs_.size(); ++w) {
        Limb l = limbs_[w];
        while (l) {
            out.push_back(w * kBits + static_cast<std::size_t>(std::countr_zero(l)));
            l &= l - 1;
        }
    }
    return out;
}

Poly2 Poly2::truncated(std::size_t n) const {
    if (is_zero() || degree_.value() < n) return *this;
    const std::size_t words = (n + kBits - 1) / kBits;
    Limbs v(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(words));
    if (n % kBits != 0) v.back() &= (Limb{1} << (n % kBits)) - 1;
    return Poly2(std::move(v));
}

Poly2 Poly2::shifted(std::size_t k) const {
    if (is_zero()) return {};
    check_degree(degree_.value() + k);
    Limbs v(limbs_.size() + k / kBits + 1, 0);
    xor_shifted(v, limbs_, k);
    return Poly2(std::move(v));
}

std::strong_ordering operator<=>(const Poly2& a, const Poly2& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (auto c = a.limbs_[i] <=> b.limbs_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Poly2 add(const Poly2& a, const Poly2& b) {
    const auto& big = a.limbs().size() >= b.limbs().size() ? a : b;
    const auto& small = &big == &a ? b : a;
    Limbs v(big.limbs().begin(), big.limbs().end());
    for (std::size_t i = 0; i < small.limbs().size(); ++i) v[i] ^= small.limbs()[i];
    return Poly2::from_limbs(std::move(v));
}

namespace detail {

std::size_t karatsuba_threshold_bits() noexcept {
    return g_karatsuba_bits.load(std::memory_order_relaxed);
}
void set_karatsuba_threshold_bits(std::size_t bits) noexcept {
    g_karatsuba_bits.store(bits, std::memory_order_relaxed);
}

bool hardware_clmul_available() noexcept {
    static const bool hw = detect_clmul();
    return hw;
}

Poly2 mul_schoolbook(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Limbs out(a.limbs().size() + b.limbs().size(), 0);
    schoolbook(a.limbs(), b.limbs(), out);
    return Poly2::from_limbs(std::move(out));
}

Poly2 mul_schoolbook_portable(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Limbs out(a.limbs().size() + b.limbs().size(), 0);
    schoolbook_portable(a.limbs(), b.limbs(), out);
    return Poly2::from_limbs(std::move(out));
}

Poly2 mul_karatsuba(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Recurse all the way down to two-limb blocks.
    return Poly2::from_limbs(karatsuba(a.limbs(), b.limbs(), 2));
}

}  // namespace detail

Poly2 mul(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return {};
    check_degree(a.degree().value() + b.degree().value());
    const std::size_t threshold_limbs =
        std::max<std::size_t>(2, (detail::karatsuba_threshold_bits() + kBits - 1) / kBits);
    return Poly2::from_limbs(karatsuba(a.limbs(), b.limbs(), threshold_limbs));
}

Poly2 square(const Poly2& a) {
    if (a.is_zero()) return {};
    check_degree(2 * a.degree().value());
    Limbs v(2 * a.limbs().size());
    for (std::size_t i = 0; i < a.limbs().size(); ++i) {
        v[2 * i] = spread32(a.limbs()[i]);
        v[2 * i + 1] = spread32(a.limbs()[i] >> 32);
    }
    return Poly2::from_limbs(std::move(v));
}

Poly2 square_root(const Poly2& a) {
    Limbs v((a.limbs().size() + 1) / 2, 0);
    for (std::size_t i = 0; i < a.limbs().size(); ++i) {
        const Limb l = a.limbs()[i];
        if (l & 0xAAAAAAAAAAAAAAAAULL) {
            throw Error(ErrorCode::InvariantViolation, "square_root of a non-square polynomial");
        }
        v[i / 2] |= compress32(l) << (32 * (i % 2));
    }
    return Poly2::from_limbs(std::move(v));
}

DivRem divrem(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "divrem by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly2{}, a};
    const std::size_t da = a.degree().value();
    const std::size_t db = b.degree().value();
    Limbs r(a.limbs().begin(), a.limbs().end());
    Limbs q((da - db) / kBits + 1, 0);
    for (std::size_t i = da + 1; i-- > db;) {
        if (!bit_at(r, i)) continue;
        q[(i - db) / kBits] |= Limb{1} << ((i - db) % kBits);
        xor_shifted(r, b.limbs(), i - db);
    }
    return {Poly2::from_limbs(std::move(q)), Poly2::from_limbs(std::move(r))};
}

Poly2 rem(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rem by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    const std::size_t da = a.degree().value();
    const std::size_t db = b.degree().value();
    Limbs r(a.limbs().begin(), a.limbs().end());
    for (std::size_t i = da + 1; i-- > db;) {
        if (bit_at(r, i)) xor_shifted(r, b.limbs(), i - db);
    }
    return Poly2::from_limbs(std::move(r));
}

bool divides(const Poly2& d, const Poly2& a) { return rem(a, d).is_zero(); }

Poly2 gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0)");
    Poly2 u = a, v = b;
    while (!v.is_zero()) {
        Poly2 r = rem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

Poly2 mulmod(const Poly2& a, const Poly2& b, const Poly2& m) { return rem(mul(a, b), m); }

namespace {

void require_modulus(const Poly2& m) {
    if (m.degree() < Degree(1)) {
        throw Error(ErrorCode::ModulusDegree, "modulus must have degree >= 1, got " + to_string(m.degree()));
    }
}

}  // namespace

Poly2 powmod(const Poly2& base, const mpz_class& exponent, const Poly2& m) {
    require_modulus(m);
    if (exponent < 0) throw Error(ErrorCode::OutOfRange, "negative exponent");
    const Poly2 b = rem(base, m);
    Poly2 acc = Poly2::one();
    const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    if (exponent == 0) return acc;
    for (std::size_t i = bits; i-- > 0;) {
        acc = rem(square(acc), m);
        if (mpz_tstbit(exponent.get_mpz_t(), i)) acc = rem(mul(acc, b), m);
    }
    return acc;
}

Poly2 powmod(const Poly2& base, std::uint64_t exponent, const Poly2& m) {
    require_modulus(m);
    const Poly2 b = rem(base, m);
    Poly2 acc = Poly2::one();
    for (int i = 63 - std::countl_zero(exponent | 1); exponent != 0 && i >= 0; --i) {
        acc = rem(square(acc), m);
        if ((exponent >> i) & 1U) acc = rem(mul(acc, b), m);
    }
    return acc;
}

Poly2 derivative(const Poly2& a) {
    // d/dx x^k = x^(k-1) when k is odd, 0 otherwise: keep odd bits, shift down.
    const auto src = a.limbs();
    Limbs v(src.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        Limb shifted = src[i] >> 1;
        if (i + 1 < src.size()) shifted |= src[i + 1] << (kBits - 1);
        v[i] = shifted & 0x5555555555555555ULL;
    }
    return Poly2::from_limbs(std::move(v));
}

}  // namespace binpart::gf2
