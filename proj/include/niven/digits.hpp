#pragma once

#include "niven/bigint.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace niven {

/// A numeration base b >= 2.
class Base {
public:
    explicit Base(BigInt value);
    explicit Base(unsigned long value) : Base(BigInt(value)) {}

    const BigInt& value() const noexcept { return value_; }

    friend bool operator==(const Base&, const Base&) = default;

private:
    BigInt value_;
};

using Digits = std::vector<BigInt>;

/// Big-endian base-b digit string in canonical form: no leading zeros, zero is [0].
class DigitString {
public:
    /// Validates every digit against the base and strips leading zeros.
    /// Throws DigitOutOfRange.
    DigitString(Base base, Digits digits);

    const Base& base() const noexcept { return base_; }
    const Digits& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }

    /// Bracket notation, e.g. "(6510)(6509)(0)(1)".
    std::string bracketed() const;

    friend bool operator==(const DigitString&, const DigitString&) = default;

private:
    Base base_;
    Digits digits_;
};

DigitString to_base(const BigInt& n, const Base& b);

BigInt from_digits(const DigitString& s);

/// Evaluates a possibly non-canonical digit sequence. Throws DigitOutOfRange.
BigInt from_digits(std::span<const BigInt> digits, const Base& b);

BigInt digit_sum(const BigInt& n, const Base& b);

/// `count` copies of `d`.
Digits repeat_block(const BigInt& d, std::uint64_t count);

/// Joins the parts most-significant first. An empty join is [0].
DigitString concat(std::span<const Digits> parts, const Base& b);

}  // namespace niven
