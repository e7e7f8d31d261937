#include "binpart/digit_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "binpart/error.hpp"

namespace binpart {

namespace {

void sort_unique(std::vector<std::uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool has(const std::vector<std::uint64_t>& sorted, std::uint64_t n) {
    return std::binary_search(sorted.begin(), sorted.end(), n);
}

std::uint64_t parse_u64(std::string_view text, std::string_view token) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(ErrorCode::Parse,
                    "digit set '" + std::string(text) + "': bad integer '" + std::string(token) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = s.find(sep);
        out.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + 1);
    }
    return out;
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

DigitSet DigitSet::finite(std::vector<std::uint64_t> members) {
    DigitSet s;
    sort_unique(members);
    if (members.empty() || members.front() != 0) {
        throw Error(ErrorCode::OutOfRange, "digit set must contain 0");
    }
    s.cutoff_ = members.back() + 1;
    s.explicit_ = std::move(members);
    return s;
}

DigitSet DigitSet::eventually_periodic(std::vector<std::uint64_t> explicit_members, std::uint64_t cutoff,
                                       Tail tail) {
    if (tail.modulus == 0) throw Error(ErrorCode::OutOfRange, "tail modulus must be positive");
    sort_unique(explicit_members);
    sort_unique(tail.residues);
    if (!explicit_members.empty() && explicit_members.back() >= cutoff) {
        throw Error(ErrorCode::OutOfRange, "explicit members must lie below the cutoff");
    }
    if (!tail.residues.empty() && tail.residues.back() >= tail.modulus) {
        throw Error(ErrorCode::OutOfRange, "tail residues must lie in [0, modulus)");
    }
    if (tail.residues.empty()) return finite(std::move(explicit_members));
    DigitSet s;
    s.explicit_ = std::move(explicit_members);
    s.cutoff_ = cutoff;
    s.tail_ = std::move(tail);
    if (!s.contains(0)) throw Error(ErrorCode::OutOfRange, "digit set must contain 0");
    s.canonicalize();
    return s;
}

DigitSet DigitSet::naturals() { return eventually_periodic({}, 0, Tail{1, {0}}); }

DigitSet DigitSet::first_n(std::uint64_t d) {
    if (d == 0) throw Error(ErrorCode::OutOfRange, "first_n needs d >= 1");
    std::vector<std::uint64_t> v(d);
    std::iota(v.begin(), v.end(), std::uint64_t{0});
    return finite(std::move(v));
}

void DigitSet::canonicalize() {
    Tail& t = *tail_;
    const std::uint64_t m = t.modulus;
    for (std::uint64_t p = 1; p < m; ++p) {
        if (m % p != 0) continue;
        bool invariant = true;
        for (std::uint64_t r = 0; r < m && invariant; ++r) {
            invariant = has(t.residues, r) == has(t.residues, (r + p) % m);
        }
        if (!invariant) continue;
        std::vector<std::uint64_t> reduced;
        for (std::uint64_t r : t.residues) {
            if (r < p) reduced.push_back(r);
        }
        t = Tail{p, std::move(reduced)};
        break;
    }
    while (cutoff_ > 0) {
        const std::uint64_t n = cutoff_ - 1;
        const bool by_tail = has(t.residues, n % t.modulus);
        if (has(explicit_, n) != by_tail) break;
        if (by_tail) explicit_.pop_back();
        cutoff_ = n;
    }
}

bool DigitSet::contains(std::uint64_t n) const {
    if (n < cutoff_) return has(explicit_, n);
    return tail_ && has(tail_->residues, n % tail_->modulus);
}

std::size_t DigitSet::size() const {
    if (tail_) throw Error(ErrorCode::InfiniteSet, "size of an infinite digit set");
    return explicit_.size();
}

std::uint64_t DigitSet::max_member() const {
    if (tail_) throw Error(ErrorCode::InfiniteSet, "max_member of an infinite digit set");
    return explicit_.back();
}

std::vector<std::uint64_t> DigitSet::members_congruent(std::uint64_t residue, std::uint64_t base,
                                                       std::uint64_t limit) const {
    std::vector<std::uint64_t> out;
    residue %= base;
    for (std::uint64_t a : explicit_) {
        if (a > limit) break;
        if (a % base == residue) out.push_back(a);
    }
    if (!tail_ || cutoff_ > limit) return out;
    const std::size_t n_explicit = out.size();
    const std::uint64_t m = tail_->modulus;
    const std::uint64_t step = m / std::gcd(m, base) * base;
    for (std::uint64_t r : tail_->residues) {
        // First a >= cutoff with a == r (mod m), then walk to a == residue (mod base).
        std::uint64_t a = cutoff_ + (r + m - cutoff_ % m) % m;
        std::uint64_t tries = base;
        while (tries > 0 && a <= limit && a % base != residue) {
            a += m;
            --tries;
        }
        if (a > limit || a % base != residue) continue;
        while (true) {
            out.push_back(a);
            if (limit - a < step) break;
            a += step;
        }
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(n_explicit), out.end());
    return out;
}

std::vector<std::uint64_t> DigitSet::members_up_to(std::uint64_t limit) const {
    return members_congruent(0, 1, limit);
}

DigitSet parse_digit_set(std::string_view raw) {
    std::string compact(raw);
    std::erase_if(compact, [](unsigned char c) { return std::isspace(c) != 0; });
    const std::string_view text = compact;
    const auto segments = split(text, '|');
    if (segments.size() > 3) {
        throw Error(ErrorCode::Parse, "digit set '" + std::string(text) + "': too many '|' segments");
    }
    std::vector<std::uint64_t> members;
    if (!segments[0].empty()) {
        for (auto tok : split(segments[0], ',')) members.push_back(parse_u64(text, tok));
    }
    if (segments.size() == 1) return DigitSet::finite(std::move(members));

    Tail tail{0, {}};
    bool in_residues = false;
    for (auto tok : split(segments[1], ',')) {
        if (tok.starts_with("mod=")) {
            tail.modulus = parse_u64(text, tok.substr(4));
            in_residues = false;
        } else if (tok.starts_with("res=")) {
            const auto value = tok.substr(4);
            if (!value.empty()) tail.residues.push_back(parse_u64(text, value));
            in_residues = true;
        } else if (in_residues) {
            tail.residues.push_back(parse_u64(text, tok));
        } else {
            throw Error(ErrorCode::Parse,
                        "digit set '" + std::string(text) + "': unexpected token '" + std::string(tok) + "'");
        }
    }
    if (tail.modulus == 0) {
        throw Error(ErrorCode::Parse, "digit set '" + std::string(text) + "': tail needs mod=M with M >= 1");
    }
    std::uint64_t cutoff = 0;
    if (segments.size() == 3) {
        if (!segments[2].starts_with("from=")) {
            throw Error(ErrorCode::Parse, "digit set '" + std::string(text) + "': expected from=N");
        }
        cutoff = parse_u64(text, segments[2].substr(5));
    } else if (!members.empty()) {
        cutoff = *std::max_element(members.begin(), members.end()) + 1;
    }
    return DigitSet::eventually_periodic(std::move(members), cutoff, std::move(tail));
}

std::string to_string(const DigitSet& set) {
    if (set.is_finite()) return join(set.explicit_members());
    const Tail& t = *set.tail();
    std::vector<std::uint64_t> members = set.explicit_members();
    std::uint64_t cutoff = set.cutoff();
    if (cutoff == 0) {
        // Print 0 explicitly; every set contains it.
        members = {0};
        cutoff = 1;
    }
    return join(members) + "|mod=" + std::to_string(t.modulus) + ",res=" + join(t.residues) +
           "|from=" + std::to_string(cutoff);
}

}  // namespace binpart
