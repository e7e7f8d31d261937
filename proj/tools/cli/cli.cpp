#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "binpart/digit_set.hpp"
#include "binpart/error.hpp"
#include "binpart/factor2.hpp"
#include "binpart/gf2poly.hpp"
#include "binpart/partitions.hpp"
#include "binpart/periodicity.hpp"

namespace binpart::cli {

namespace {

using json = nlohmann::ordered_json;
using gf2::Poly2;

class Emitter {
public:
    Emitter(std::ostream& out, bool tsv) : out_(out), tsv_(tsv) {}

    void emit(const json& row) {
        if (!tsv_) {
            out_ << row.dump() << '\n';
            return;
        }
        if (!header_done_) {
            write_tsv_line(row, true);
            header_done_ = true;
        }
        write_tsv_line(row, false);
    }

private:
    void write_tsv_line(const json& row, bool keys) {
        bool first = true;
        for (const auto& [key, value] : row.items()) {
            if (!first) out_ << '\t';
            first = false;
            if (keys) {
                out_ << key;
            } else if (value.is_string()) {
                out_ << value.get<std::string>();
            } else {
                out_ << value.dump();
            }
        }
        out_ << '\n';
    }

    std::ostream& out_;
    bool tsv_;
    bool header_done_ = false;
};

json factor_json(const factor2::Factorization2& f) {
    json factors = json::array();
    for (const auto& [g, e] : f.factors) factors.push_back({{"poly", gf2::to_caret(g)}, {"exp", e}});
    return factors;
}

json int_factorization_json(const factor2::IntFactorization& f) {
    json out = json::array();
    for (const auto& [p, e] : f) out.push_back({{"prime", p}, {"exp", e}});
    return out;
}

json check_json(const periodicity::SeriesCheck& c) {
    json out;
    out["holds"] = c.holds;
    out["first_failure"] = c.first_failure ? json(*c.first_failure) : json(nullptr);
    return out;
}

std::uint64_t default_truncation(const DigitSet& set) {
    std::uint64_t n = 512;
    if (set.is_finite() && set.size() >= 2) {
        try {
            n = std::max<std::uint64_t>(n, 4 * periodicity::parity_period(set));
        } catch (const Error&) {
            // Period not computable (degree cap or overflow); keep the floor value.
        }
    }
    return n;
}

struct Options {
    std::string format = "json";
    std::uint64_t seed = 0;
    std::string set = "";
    std::string poly = "";
    std::uint64_t base = 2;
    std::optional<std::uint64_t> modulus;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> from;
    std::optional<std::uint64_t> to;
    std::optional<std::uint64_t> truncation;
    std::optional<std::uint64_t> prime;
    std::uint64_t max_transient = 200;
    std::uint64_t max_period = 200;
    std::vector<std::string> only;
};

json set_input(const char* command, const DigitSet& set) {
    return json{{"command", command}, {"set", to_string(set)}};
}

int cmd_count(const Options& o, Emitter& em) {
    const DigitSet set = parse_digit_set(o.set);
    json input = set_input("count", set);
    input["base"] = o.base;
    input["n"] = *o.n;
    input["mod"] = o.modulus ? json(*o.modulus) : json(nullptr);
    json row{{"input", input}, {"n", *o.n}};
    if (o.modulus) {
        row["value"] = std::to_string(partitions::count_mod(set, o.base, *o.n, *o.modulus));
        row["mod"] = *o.modulus;
    } else {
        row["value"] = partitions::count(set, o.base, *o.n).get_str();
        row["mod"] = nullptr;
    }
    em.emit(row);
    return kExitOk;
}

int cmd_seq(const Options& o, Emitter& em) {
    const DigitSet set = parse_digit_set(o.set);
    const std::uint64_t from = o.from.value_or(0);
    const std::uint64_t to = *o.to;
    json input = set_input("seq", set);
    input["base"] = o.base;
    input["from"] = from;
    input["to"] = to;
    input["mod"] = o.modulus ? json(*o.modulus) : json(nullptr);
    if (o.modulus) {
        partitions::ModCountSession f(set, o.base, *o.modulus);
        for (std::uint64_t n = from; n <= to; ++n) {
            em.emit({{"input", input}, {"n", n}, {"value", std::to_string(f.at(n))}, {"mod", *o.modulus}});
        }
    } else {
        partitions::CountSession f(set, o.base);
        for (std::uint64_t n = from; n <= to; ++n) {
            em.emit({{"input", input}, {"n", n}, {"value", f.at(n).get_str()}, {"mod", nullptr}});
        }
    }
    return kExitOk;
}

int cmd_factor_or_period(const Options& o, Emitter& em, bool with_certificate) {
    const Poly2 h = gf2::parse_poly(o.poly);
    const auto f = factor2::factor(h, o.seed);
    json row{{"input", gf2::to_caret(h)}, {"hex", gf2::to_hex(h)}, {"factors", factor_json(f)}};
    try {
        const auto cert = factor2::period(h, o.seed);
        row["period"] = cert.period;
        row["m_bound"] = cert.m_bound;
        row["primitive"] = factor2::is_primitive(h);
        if (with_certificate) row["period_factorization"] = int_factorization_json(cert.period_factorization);
    } catch (const Error& e) {
        if (with_certificate) throw;
        row["period"] = nullptr;
        row["m_bound"] = nullptr;
        row["primitive"] = nullptr;
        row["period_error"] = e.what();
    }
    em.emit(row);
    return kExitOk;
}

int cmd_complement(const Options& o, Emitter& em) {
    const DigitSet set = parse_digit_set(o.set);
    const auto profile = periodicity::complement(set);
    em.emit({{"input", set_input("complement", set)},
             {"T", profile.period},
             {"complement", profile.complement},
             {"size", profile.complement.size()},
             {"density", to_string(profile.odd_density)}});
    return kExitOk;
}

int cmd_verify(const Options& o, Emitter& em, bool prime_variant) {
    const DigitSet set = parse_digit_set(o.set);
    const std::uint64_t n = o.truncation.value_or(default_truncation(set));
    json input = set_input(prime_variant ? "verify-prime" : "verify", set);
    input["truncation"] = n;
    input["prime"] = o.prime ? json(*o.prime) : json(nullptr);
    periodicity::SeriesCheck result;
    if (o.prime) {
        result = periodicity::verify_prime_theorem(set, *o.prime, n);
    } else {
        result = periodicity::verify_main_theorem(set, n);
    }
    json row{{"input", input},
             {"identity", o.prime ? "F^(p-1)*phi == 1 mod p" : "F*phi == 1 mod 2"}};
    row.update(check_json(result));
    em.emit(row);
    return result.holds ? kExitOk : kExitFalsified;
}

int cmd_search(const Options& o, Emitter& em) {
    const DigitSet set = parse_digit_set(o.set);
    const std::uint64_t d = o.modulus.value_or(2);
    json input = set_input("search", set);
    input["base"] = o.base;
    input["mod"] = d;
    input["max_transient"] = o.max_transient;
    input["max_period"] = o.max_period;
    const auto report = periodicity::period_search({set, o.base, d, o.max_transient, o.max_period});
    json row{{"input", input}, {"found", report.found.has_value()}};
    if (report.found) {
        row["N"] = report.found->transient;
        row["T"] = report.found->period;
        row["window"] = {report.found->window_begin, report.found->window_end};
    } else {
        row["N"] = nullptr;
        row["T"] = nullptr;
        row["window"] = nullptr;
    }
    row["terms"] = report.terms;
    em.emit(row);
    return report.found ? kExitOk : kExitNotFound;
}

int cmd_stern(const Options& o, Emitter& em) {
    std::uint64_t from = 0, to = 0;
    if (o.n) {
        from = to = *o.n;
    } else {
        from = o.from.value_or(0);
        to = *o.to;
    }
    const json input{{"command", "stern"}, {"from", from}, {"to", to}};
    for (std::uint64_t n = from; n <= to; ++n) {
        em.emit({{"input", input}, {"n", n}, {"value", partitions::stern(n).get_str()}});
    }
    return kExitOk;
}

int cmd_churchhouse(const Options& o, Emitter& em) {
    const std::uint64_t max_n = o.n.value_or(4096);
    const auto report = partitions::churchhouse_report(max_n);
    json readings = json::array();
    json matching = json::array();
    for (const auto& r : report.readings) {
        readings.push_back({{"name", r.name},
                            {"formula", r.formula},
                            {"agreements", r.agreements},
                            {"disagreements", r.disagreements}});
        if (r.disagreements == 0) matching.push_back(r.name);
    }
    json table = json::array();
    for (const auto& row : report.table) {
        table.push_back({{"m", row.m},
                         {"nu2_m", row.nu2_m},
                         {"valuation_gap", row.valuation_gap},
                         {"nu2_difference", row.nu2_difference},
                         {"rhs_three_halves", row.rhs_three_halves},
                         {"rhs_half", row.rhs_half}});
    }
    em.emit({{"input", {{"command", "churchhouse"}, {"n", max_n}}},
             {"max_n", report.max_n},
             {"odd_violations", report.odd_violations},
             {"mod4_violations", report.mod4_violations},
             {"mod8_violations", report.mod8_violations},
             {"congruences_hold", report.congruences_hold()},
             {"readings", readings},
             {"matching_readings", matching},
             {"table", table}});
    return report.congruences_hold() ? kExitOk : kExitFalsified;
}

int cmd_paper_check(const Options& o, Emitter& em, std::ostream& err) {
    const auto& all = fixtures();
    for (const auto& name : o.only) {
        const bool known = std::any_of(all.begin(), all.end(), [&](const Fixture& f) { return f.name == name; });
        if (!known) {
            err << "error: unknown fixture '" << name << "'\n";
            return kExitUsage;
        }
    }
    std::size_t passed = 0, failed = 0;
    for (const auto& fixture : all) {
        if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), fixture.name) == o.only.end()) continue;
        FixtureResult result;
        try {
            result = fixture.check();
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        (result.pass ? passed : failed) += 1;
        em.emit({{"input", {{"command", "paper-check"}, {"only", o.only}}},
                 {"fixture", fixture.name},
                 {"description", fixture.description},
                 {"pass", result.pass},
                 {"detail", result.detail}});
    }
    em.emit({{"input", {{"command", "paper-check"}, {"only", o.only}}},
             {"fixture", "summary"},
             {"description", "all selected fixtures"},
             {"pass", failed == 0},
             {"detail", std::to_string(passed) + " passed, " + std::to_string(failed) + " failed"}});
    return failed == 0 ? kExitOk : kExitFalsified;
}

bool apply_max_degree_env(std::ostream& err) {
    const char* env = std::getenv("BINPART_MAX_DEGREE");
    if (env == nullptr) return true;
    std::uint64_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        err << "error: BINPART_MAX_DEGREE must be a non-negative integer, got '" << text << "'\n";
        return false;
    }
    gf2::set_max_degree(value);
    return true;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    if (!apply_max_degree_env(err)) return kExitUsage;

    Options o;
    CLI::App app{"Digit-restricted base-b representation counts and their parity structure", "binpart"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--seed", o.seed, "Seed for randomized polynomial splitting");

    auto set_opt = [&](CLI::App* c) { c->add_option("--set", o.set, "Digit set, e.g. 0,1,4,9")->required(); };
    auto base_opt = [&](CLI::App* c) {
        c->add_option("--base", o.base, "Base b")->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
    };
    auto mod_opt = [&](CLI::App* c) {
        c->add_option("--mod", o.modulus, "Modulus d")->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
    };

    auto* count = app.add_subcommand("count", "f_{A,b}(n), exactly or mod d");
    set_opt(count);
    base_opt(count);
    mod_opt(count);
    count->add_option("--n", o.n, "Argument n")->required();

    auto* seq = app.add_subcommand("seq", "f_{A,b}(n) for n in [from, to]");
    set_opt(seq);
    base_opt(seq);
    mod_opt(seq);
    seq->add_option("--from", o.from, "First n (default 0)");
    seq->add_option("--to", o.to, "Last n")->required();

    auto* factor = app.add_subcommand("factor", "Factor a GF(2) polynomial and report its period");
    factor->add_option("--poly", o.poly, "Polynomial, e.g. 1+x+x^4+x^9 or 0x213")->required();

    auto* period = app.add_subcommand("period", "Certified period of a GF(2) polynomial");
    period->add_option("--poly", o.poly, "Polynomial, e.g. 1+x+x^4+x^9 or 0x213")->required();

    auto* comp = app.add_subcommand("complement", "Parity period and complementary set of a finite digit set");
    set_opt(comp);

    auto* verify = app.add_subcommand("verify", "Check F_{A,2} * phi_A == 1 over GF(2) up to a truncation");
    set_opt(verify);
    verify->add_option("--truncation", o.truncation, "Highest checked degree (default max(512, 4T))");
    verify->add_option("--prime", o.prime, "Check F^(p-1) * phi == 1 over GF(p) with base p instead");

    auto* verify_prime = app.add_subcommand("verify-prime", "Check F_{A,p}^(p-1) * phi_A == 1 over GF(p)");
    set_opt(verify_prime);
    verify_prime->add_option("--prime", o.prime, "Prime p (also the base)")->required();
    verify_prime->add_option("--truncation", o.truncation, "Highest checked degree (default max(512, 4T))");

    auto* search = app.add_subcommand("search", "Bounded search for eventual periodicity of f_{A,b}(n) mod d");
    set_opt(search);
    base_opt(search);
    mod_opt(search);
    search->add_option("--max-transient", o.max_transient, "Largest transient N considered");
    search->add_option("--max-period", o.max_period, "Largest period T considered")
        ->check(CLI::Range(std::uint64_t{1}, ~std::uint64_t{0}));

    auto* stern = app.add_subcommand("stern", "Stern diatomic sequence");
    auto* stern_n = stern->add_option("--n", o.n, "Single index");
    stern->add_option("--from", o.from, "First index")->excludes(stern_n);
    stern->add_option("--to", o.to, "Last index")->excludes(stern_n);

    auto* church = app.add_subcommand("churchhouse", "Congruence checks on the binary partition function");
    church->add_option("--n", o.n, "Largest n examined (default 4096)")
        ->check(CLI::Range(std::uint64_t{16}, ~std::uint64_t{0}));

    auto* check = app.add_subcommand("paper-check", "Replay the built-in numeric fixtures");
    check->add_option("--only", o.only, "Run only the named fixture(s)");

    std::vector<const char*> args;
    args.reserve(argv.size());
    for (const auto& a : argv) args.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(args.size()), args.data());
        if (*stern && !o.n && !o.to) throw CLI::ValidationError("stern", "needs --n or --to");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Emitter em(out, o.format == "tsv");
    try {
        if (*count) return cmd_count(o, em);
        if (*seq) return cmd_seq(o, em);
        if (*factor) return cmd_factor_or_period(o, em, false);
        if (*period) return cmd_factor_or_period(o, em, true);
        if (*comp) return cmd_complement(o, em);
        if (*verify) return cmd_verify(o, em, false);
        if (*verify_prime) return cmd_verify(o, em, true);
        if (*search) return cmd_search(o, em);
        if (*stern) return cmd_stern(o, em);
        if (*church) return cmd_churchhouse(o, em);
        if (*check) return cmd_paper_check(o, em, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::Parse ? kExitUsage : kExitComputation;
    }
    return kExitUsage;
}

}  // namespace binpart::cli
