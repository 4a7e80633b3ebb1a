#include "niven/digits.hpp"

#include "niven/errors.hpp"

#include <algorithm>
#include <limits>

namespace niven {

namespace {

// Below 2^kNaiveLevel digits the split recursion hands over to plain
// repeated division.
constexpr int kNaiveLevel = 4;

void naive_digits(BigInt x, const BigInt& b, std::size_t width, Digits& out) {
    Digits lsb_first;
    BigInt q, r;
    while (x != 0) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), b.get_mpz_t());
        lsb_first.push_back(r);
        x.swap(q);
    }
    while (lsb_first.size() < width) lsb_first.emplace_back(0);
    out.insert(out.end(), lsb_first.rbegin(), lsb_first.rend());
}

// Emits the digits of x, where x < powers[level]^2 = b^(2^(level+1)).
// With `pad` set the output is exactly 2^(level+1) digits wide.
void split_digits(const BigInt& x, int level, bool pad, const std::vector<BigInt>& powers,
                  Digits& out) {
    if (level < kNaiveLevel) {
        naive_digits(x, powers[0], pad ? (std::size_t{1} << (level + 1)) : 0, out);
        return;
    }
    BigInt hi, lo;
    mpz_tdiv_qr(hi.get_mpz_t(), lo.get_mpz_t(), x.get_mpz_t(), powers[level].get_mpz_t());
    if (!pad && hi == 0) {
        split_digits(lo, level - 1, false, powers, out);
        return;
    }
    split_digits(hi, level - 1, pad, powers, out);
    split_digits(lo, level - 1, true, powers, out);
}

}  // namespace

Base::Base(BigInt value) : value_(std::move(value)) {
    if (value_ < 2) throw InvalidInput("base must be >= 2, got " + to_decimal(value_));
}

DigitString::DigitString(Base base, Digits digits) : base_(std::move(base)), digits_(std::move(digits)) {
    for (const auto& d : digits_) {
        if (d < 0 || d >= base_.value()) {
            throw DigitOutOfRange("digit " + to_decimal(d) + " not in [0, " +
                                  to_decimal(base_.value()) + ")");
        }
    }
    auto first = std::find_if(digits_.begin(), digits_.end(), [](const BigInt& d) { return d != 0; });
    digits_.erase(digits_.begin(), first);
    if (digits_.empty()) digits_.emplace_back(0);
}

std::string DigitString::bracketed() const {
    std::string s;
    for (const auto& d : digits_) {
        s += '(';
        s += to_decimal(d);
        s += ')';
    }
    return s;
}

DigitString to_base(const BigInt& n, const Base& b) {
    if (n < 0) throw InvalidInput("to_base: negative input");
    if (n == 0) return DigitString(b, {BigInt(0)});

    std::vector<BigInt> powers{b.value()};
    while (powers.back() * powers.back() <= n) {
        powers.push_back(powers.back() * powers.back());
    }
    Digits out;
    split_digits(n, static_cast<int>(powers.size()) - 1, false, powers, out);
    return DigitString(b, std::move(out));
}

BigInt from_digits(std::span<const BigInt> digits, const Base& b) {
    BigInt v = 0;
    for (const auto& d : digits) {
        if (d < 0 || d >= b.value()) {
            throw DigitOutOfRange("digit " + to_decimal(d) + " not in [0, " + to_decimal(b.value()) + ")");
        }
        v *= b.value();
        v += d;
    }
    return v;
}

BigInt from_digits(const DigitString& s) { return from_digits(s.digits(), s.base()); }

BigInt digit_sum(const BigInt& n, const Base& b) {
    const DigitString s = to_base(n, b);
    BigInt sum = 0;
    for (const auto& d : s.digits()) sum += d;
    return sum;
}

Digits repeat_block(const BigInt& d, std::uint64_t count) { return Digits(count, d); }

DigitString concat(std::span<const Digits> parts, const Base& b) {
    Digits all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return DigitString(b, std::move(all));
}

std::optional<BigInt> parse_decimal(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return std::nullopt;
    }
    return BigInt(std::string(text), 10);
}

std::uint64_t DigitBudget::require_power(int k, std::int64_t m) const {
    if (k < 0 || m < 0) throw InvalidInput("digit budget: negative k or m");
    if (k >= 63) throw CapExceeded("2^" + std::to_string(k) + " digits exceeds the digit budget");
    const std::uint64_t block = std::uint64_t{1} << k;
    const auto um = static_cast<std::uint64_t>(m);
    if (um != 0 && block > std::numeric_limits<std::uint64_t>::max() / um) {
        throw CapExceeded("digit count overflows");
    }
    const std::uint64_t total = block * um;
    if (total > max_digits) {
        throw CapExceeded(std::to_string(m) + " * 2^" + std::to_string(k) + " = " + std::to_string(total) +
                          " digits exceeds the budget of " + std::to_string(max_digits));
    }
    return total;
}

}  // namespace niven
