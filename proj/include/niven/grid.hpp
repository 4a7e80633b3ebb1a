#pragma once

#include "niven/oracle.hpp"

#include <cstdint>
#include <vector>

namespace niven {

struct GridRanges {
    BigInt base_lo, base_hi;
    int k_lo = 1, k_hi = 1;
    std::int64_t m_lo = 1, m_hi = 1;
};

/// Cells in (b, k, m) lexicographic order; bases below 2 are dropped.
std::vector<FamilyInstance> grid_cells(const GridRanges& ranges);

/// Verifies every cell on up to `jobs` workers. The result is ordered like
/// `cells` and identical for any `jobs`. The first failing cell's exception
/// (in cell order) is rethrown.
std::vector<oracle::VerificationReport> verify_grid(const std::vector<FamilyInstance>& cells, unsigned jobs,
                                                    const DigitBudget& budget = {});

}  // namespace niven
