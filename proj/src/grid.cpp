#include "niven/grid.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>

namespace niven {

std::vector<FamilyInstance> grid_cells(const GridRanges& ranges) {
    std::vector<FamilyInstance> cells;
    for (BigInt b = std::max(ranges.base_lo, BigInt(2)); b <= ranges.base_hi; ++b) {
        for (int k = ranges.k_lo; k <= ranges.k_hi; ++k) {
            for (std::int64_t m = ranges.m_lo; m <= ranges.m_hi; ++m) cells.push_back({Base(b), k, m});
        }
    }
    return cells;
}

std::vector<oracle::VerificationReport> verify_grid(const std::vector<FamilyInstance>& cells, unsigned jobs,
                                                    const DigitBudget& budget) {
    std::vector<std::optional<oracle::VerificationReport>> slots(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                slots[i] = oracle::verify_instance(cells[i].b, cells[i].k, cells[i].m, budget);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const unsigned workers = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    std::vector<oracle::VerificationReport> out;
    out.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

}  // namespace niven
