#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace binpart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitNotFound = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitComputation = 65;

/// Parses argv (argv[0] is the program name), runs one subcommand and
/// returns the process exit code. Results go to `out` as JSON lines (or TSV),
/// diagnostics to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

struct FixtureResult {
    bool pass = false;
    std::string detail;
};

struct Fixture {
    std::string name;
    std::string description;
    std::function<FixtureResult()> check;
};

/// Replayable numeric claims about digit-restricted representation counts.
const std::vector<Fixture>& fixtures();

}  // namespace binpart::cli
