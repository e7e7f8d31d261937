#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "binpart/error.hpp"
#include "binpart/gf2poly.hpp"

namespace binpart::gf2 {

namespace {

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
    throw Error(ErrorCode::Parse, "polynomial '" + std::string(text) + "': " + why);
}

Poly2 parse_hex(std::string_view text, std::string_view digits) {
    if (digits.empty()) parse_error(text, "no hex digits");
    std::vector<Poly2::Limb> limbs((digits.size() * 4 + 63) / 64, 0);
    std::size_t bit = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it, bit += 4) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
        unsigned nibble;
        if (c >= '0' && c <= '9') {
            nibble = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            nibble = static_cast<unsigned>(c - 'a' + 10);
        } else {
            parse_error(text, std::string("bad hex digit '") + *it + "'");
        }
        limbs[bit / 64] |= Poly2::Limb{nibble} << (bit % 64);
    }
    return Poly2::from_limbs(std::move(limbs));
}

std::size_t parse_term(std::string_view text, std::string_view term, bool& is_zero_term) {
    is_zero_term = false;
    if (term == "0") {
        is_zero_term = true;
        return 0;
    }
    if (term == "1") return 0;
    if (term == "x") return 1;
    if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
        std::size_t e = 0;
        const auto digits = term.substr(2);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
            parse_error(text, "bad exponent in term '" + std::string(term) + "'");
        }
        return e;
    }
    parse_error(text, "bad term '" + std::string(term) + "'");
}

}  // namespace

std::string to_caret(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t e : p.exponents()) {
        if (!out.empty()) out += '+';
        if (e == 0) {
            out += '1';
        } else if (e == 1) {
            out += 'x';
        } else {
            out += "x^" + std::to_string(e);
        }
    }
    return out;
}

std::string to_hex(const Poly2& p) {
    if (p.is_zero()) return "0x0";
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t top = p.degree().value();
    std::string out = "0x";
    for (std::size_t nib = top / 4 + 1; nib-- > 0;) {
        const auto limb = p.limbs()[nib * 4 / 64];
        out += kDigits[(limb >> (nib * 4 % 64)) & 0xF];
    }
    return out;
}

Poly2 parse_poly(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    }
    if (compact.empty()) parse_error(text, "empty");
    if (compact.size() >= 2 && compact[0] == '0' && (compact[1] == 'x' || compact[1] == 'X')) {
        return parse_hex(text, std::string_view(compact).substr(2));
    }
    std::vector<std::size_t> exps;
    std::string_view rest = compact;
    while (true) {
        const auto plus = rest.find('+');
        const auto term = rest.substr(0, plus);
        if (term.empty()) parse_error(text, "empty term");
        bool zero_term = false;
        const std::size_t e = parse_term(text, term, zero_term);
        if (!zero_term) exps.push_back(e);
        if (plus == std::string_view::npos) break;
        rest.remove_prefix(plus + 1);
    }
    return Poly2::from_exponents(exps);
}

}  // namespace binpart::gf2
