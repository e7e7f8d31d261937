#include <algorithm>
#include <atomic>
#include <thread>

#include "binpart/error.hpp"
#include "binpart/partitions.hpp"
#include "binpart/periodicity.hpp"

namespace binpart::periodicity {

PeriodSearchReport period_search(const SearchParams& params) {
    if (params.max_period < 1) throw Error(ErrorCode::OutOfRange, "max_period must be >= 1");
    PeriodSearchReport report;
    report.params = params;
    const std::uint64_t n_max = params.max_transient;
    const std::uint64_t t_max = params.max_period;
    // Covers n + T for every n in the widest window [0, N_max + 4T + T_max], T <= T_max.
    const std::uint64_t terms = n_max + 6 * t_max + 1;
    report.terms = terms;

    partitions::ModCountSession f(params.set, params.base, params.modulus);
    std::vector<std::uint64_t> u(terms);
    for (std::uint64_t n = 0; n < terms; ++n) u[n] = f.at(n);

    for (std::uint64_t t = 1; t <= t_max; ++t) {
        const std::uint64_t scan_end = n_max + 4 * t + t_max;  // inclusive
        std::uint64_t transient = 0;
        for (std::uint64_t n = scan_end + 1; n-- > 0;) {
            if (u[n + t] != u[n]) {
                transient = n + 1;
                break;
            }
        }
        if (transient <= n_max) {
            report.found = FoundPeriod{transient, t, transient, transient + 4 * t + t_max};
            break;
        }
    }
    return report;
}

std::vector<PeriodSearchReport> period_search_grid(std::span<const SearchParams> grid, unsigned threads) {
    std::vector<PeriodSearchReport> out(grid.size());
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(grid.size());
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                out[i] = period_search(grid[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    pool.clear();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

}  // namespace binpart::periodicity
