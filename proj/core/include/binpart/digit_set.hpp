#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace binpart {

/// Periodic part of an eventually periodic set: n >= cutoff belongs iff n mod modulus is a residue.
struct Tail {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> residues;
    friend bool operator==(const Tail&, const Tail&) = default;
};

/// A finite or eventually periodic subset of N containing 0.
///
/// Stored canonically: the tail modulus is the least period of the tail
/// pattern, the cutoff is the least value for which the representation is
/// exact, and a tail with no residues is dropped. Equal sets therefore
/// compare equal regardless of how they were written down.
class DigitSet {
public:
    static DigitSet finite(std::vector<std::uint64_t> members);
    static DigitSet eventually_periodic(std::vector<std::uint64_t> explicit_members, std::uint64_t cutoff,
                                        Tail tail);
    static DigitSet naturals();
    /// {0, 1, ..., d-1}
    static DigitSet first_n(std::uint64_t d);

    bool contains(std::uint64_t n) const;
    bool is_finite() const noexcept { return !tail_.has_value(); }
    /// Number of members; only meaningful for finite sets.
    std::size_t size() const;
    /// Largest member of a finite set.
    std::uint64_t max_member() const;

    const std::vector<std::uint64_t>& explicit_members() const noexcept { return explicit_; }
    std::uint64_t cutoff() const noexcept { return cutoff_; }
    const std::optional<Tail>& tail() const noexcept { return tail_; }

    /// Members a <= limit with a == residue (mod base), ascending.
    std::vector<std::uint64_t> members_congruent(std::uint64_t residue, std::uint64_t base,
                                                 std::uint64_t limit) const;
    std::vector<std::uint64_t> members_up_to(std::uint64_t limit) const;

    friend bool operator==(const DigitSet&, const DigitSet&) = default;

private:
    DigitSet() = default;
    void canonicalize();

    std::vector<std::uint64_t> explicit_;
    std::uint64_t cutoff_ = 0;
    std::optional<Tail> tail_;
};

/// "0,1,4,9" for finite sets, "0,1|mod=2,res=1|from=3" for eventually periodic ones.
DigitSet parse_digit_set(std::string_view text);
std::string to_string(const DigitSet& set);

}  // namespace binpart
