#include "binpart/partitions.hpp"

#include <vector>

#include "binpart/error.hpp"

namespace binpart::partitions {

namespace {

void require_base(std::uint64_t base) {
    if (base < 2) throw Error(ErrorCode::OutOfRange, "base must be >= 2, got " + std::to_string(base));
}

void require_modulus(std::uint64_t d) {
    if (d < 2) throw Error(ErrorCode::OutOfRange, "modulus must be >= 2, got " + std::to_string(d));
}

inline std::uint64_t add_mod(std::uint64_t x, std::uint64_t y, std::uint64_t d) {
    return x >= d - y ? x - (d - y) : x + y;
}

// f(n) = sum over a in A, a <= n, a == n (mod b) of f((n - a) / b), f(0) = 1.
// Evaluated with an explicit stack so deep chains never touch the call stack.
template <typename Value, typename Accumulate>
void evaluate(std::uint64_t n, const DigitSet& set, std::uint64_t base,
              std::unordered_map<std::uint64_t, Value>& memo, Accumulate accumulate) {
    if (memo.contains(n)) return;
    std::vector<std::uint64_t> stack{n};
    std::vector<std::uint64_t> children;
    while (!stack.empty()) {
        const std::uint64_t m = stack.back();
        if (memo.contains(m)) {
            stack.pop_back();
            continue;
        }
        children.clear();
        bool ready = true;
        for (std::uint64_t a : set.members_congruent(m % base, base, m)) {
            const std::uint64_t c = (m - a) / base;
            children.push_back(c);
            if (!memo.contains(c)) {
                stack.push_back(c);
                ready = false;
            }
        }
        if (!ready) continue;
        memo.emplace(m, accumulate(children));
        stack.pop_back();
    }
}

}  // namespace

CountSession::CountSession(DigitSet set, std::uint64_t base) : set_(std::move(set)), base_(base) {
    require_base(base_);
    memo_.emplace(0, mpz_class(1));
}

const mpz_class& CountSession::at(std::uint64_t n) {
    evaluate(n, set_, base_, memo_, [this](const std::vector<std::uint64_t>& children) {
        mpz_class sum = 0;
        for (std::uint64_t c : children) sum += memo_.at(c);
        return sum;
    });
    return memo_.at(n);
}

ModCountSession::ModCountSession(DigitSet set, std::uint64_t base, std::uint64_t modulus)
    : set_(std::move(set)), base_(base), modulus_(modulus) {
    require_base(base_);
    require_modulus(modulus_);
    memo_.emplace(0, 1);
}

std::uint64_t ModCountSession::at(std::uint64_t n) {
    evaluate(n, set_, base_, memo_, [this](const std::vector<std::uint64_t>& children) {
        std::uint64_t sum = 0;
        for (std::uint64_t c : children) sum = add_mod(sum, memo_.at(c), modulus_);
        return sum;
    });
    return memo_.at(n);
}

mpz_class count(const DigitSet& set, std::uint64_t base, std::uint64_t n) {
    CountSession session(set, base);
    return session.at(n);
}

std::uint64_t count_mod(const DigitSet& set, std::uint64_t base, std::uint64_t n, std::uint64_t modulus) {
    ModCountSession session(set, base, modulus);
    return session.at(n);
}

std::vector<mpz_class> count_series_oracle(const DigitSet& set, std::uint64_t base, std::uint64_t truncation) {
    require_base(base);
    const std::size_t len = truncation + 1;
    std::vector<mpz_class> acc(len, 0);
    acc[0] = 1;
    const std::vector<std::uint64_t> digits = set.members_up_to(truncation);
    // Multiply by phi_A(x^scale) for every scale = b^k <= N; larger scales only contribute 1.
    for (std::uint64_t scale = 1; scale <= truncation;) {
        std::vector<mpz_class> next(len, 0);
        for (std::uint64_t a : digits) {
            if (a != 0 && a > truncation / scale) break;
            const std::uint64_t shift = a * scale;
            for (std::uint64_t i = shift; i < len; ++i) next[i] += acc[i - shift];
        }
        acc = std::move(next);
        if (scale > truncation / base) break;
        scale *= base;
    }
    return acc;
}

mpz_class theta(CountSession& session, std::int64_t n) {
    if (!session.set().is_finite()) {
        throw Error(ErrorCode::InfiniteSet, "theta is only defined for finite digit sets");
    }
    if (session.base() != 2) throw Error(ErrorCode::OutOfRange, "theta uses base 2");
    mpz_class sum = 0;
    if (n < 0) return sum;
    const auto un = static_cast<std::uint64_t>(n);
    for (std::uint64_t a : session.set().explicit_members()) {
        if (a > un) break;
        sum += session.at(un - a);
    }
    return sum;
}

mpz_class theta(const DigitSet& set, std::int64_t n) {
    if (!set.is_finite()) throw Error(ErrorCode::InfiniteSet, "theta is only defined for finite digit sets");
    CountSession session(set, 2);
    return theta(session, n);
}

mpz_class stern(std::uint64_t n) {
    // Bit-serial form of s(2n) = s(n), s(2n+1) = s(n) + s(n+1), least significant bit first.
    mpz_class a = 1, b = 0;
    while (n > 0) {
        if (n & 1U) {
            b += a;
        } else {
            a += b;
        }
        n >>= 1;
    }
    return b;
}

std::uint64_t nu2(const mpz_class& m) {
    if (m == 0) throw Error(ErrorCode::ZeroInput, "nu2(0) is undefined");
    return mpz_scan1(m.get_mpz_t(), 0);
}

}  // namespace binpart::partitions
