#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace niven {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Parses a non-empty run of decimal digits with an optional leading '-'.
std::optional<BigInt> parse_decimal(std::string_view text);

inline BigInt pow2(std::uint64_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline bool divides(const BigInt& d, const BigInt& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Caps the total digit count of constructed powers.
struct DigitBudget {
    static constexpr std::uint64_t kDefaultMaxDigits = 1u << 20;

    std::uint64_t max_digits = kDefaultMaxDigits;

    /// Throws CapExceeded unless m * 2^k <= max_digits. Returns m * 2^k.
    std::uint64_t require_power(int k, std::int64_t m) const;
};

}  // namespace niven
