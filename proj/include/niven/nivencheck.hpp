#pragma once

#include "niven/bigint.hpp"
#include "niven/digits.hpp"

#include <cstdint>
#include <vector>

namespace niven {

/// True iff s_b(n) divides n. Throws ZeroInput for n = 0.
bool is_b_niven(const BigInt& n, const Base& b);

/// True iff both n and n^m are b-Niven.
bool is_degree_m(const BigInt& n, const Base& b, std::int64_t m);

/// The exponents m <= m_max for which n is a degree-m b-Niven number.
struct DegreeProfile {
    Base base;
    BigInt n_value;
    bool is_niven = false;
    std::vector<std::int64_t> degrees;  // ascending; empty unless is_niven
    std::int64_t m_max = 0;

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

DegreeProfile degree_profile(const BigInt& n, const Base& b, std::int64_t m_max);

}  // namespace niven
