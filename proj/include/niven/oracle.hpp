#pragma once

// Brute-force counterpart to the closed forms. oracle.cpp computes powers and
// digits with its own exponentiation and conversion; only verify_instance
// (verify.cpp) touches the closed forms, to compare the two routes.

#include "niven/bigint.hpp"
#include "niven/digits.hpp"
#include "niven/families.hpp"
#include "niven/nivencheck.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

namespace niven::oracle {

/// (b^(2^k) - 1)^m by repeated squaring and multiplication, converted by
/// plain least-significant-first division.
DigitString brute_force_power_digits(const Base& b, int k, std::int64_t m, const DigitBudget& budget = {});

/// Digit sum by plain repeated division.
BigInt plain_digit_sum(const BigInt& n, const Base& b);

/// b^(2^k) = 1 (mod 2^(k+1)). Throws InvalidInput for even b or k < 1.
bool euler_check(const Base& b, int k);

/// The divisibility steps establishing s_b(N_k^m) | N_k^m, with e = m - 1
/// and c = ceil(m/2) = 2^q p.
struct DivisibilityChain {
    bool nk_ok = false;         // (b-1) 2^k | N_k
    bool odd_part_ok = false;   // 2^e p | N_k^e
    bool two_power_ok = false;  // 2^q | 2^(2^q - 1) | 2^e
    bool cofactor_ok = false;   // c | N_k^e
    bool full_ok = false;       // s_b(N_k^m) | N_k^m

    bool all() const { return nk_ok && odd_part_ok && two_power_ok && cofactor_ok && full_ok; }

    friend bool operator==(const DivisibilityChain&, const DivisibilityChain&) = default;
};

/// Throws PreconditionViolated unless b = 3 (mod 4) and p | b - 1.
DivisibilityChain divisibility_chain(const Base& b, int k, std::int64_t m, const DigitBudget& budget = {});

struct DivisibilitySummary {
    bool euler_ok = false;
    bool bm1_ok = false;
    bool chain_ok = false;

    friend bool operator==(const DivisibilitySummary&, const DivisibilitySummary&) = default;
};

struct VerificationReport {
    FamilyInstance instance;
    TheoremCertificate certificate;
    bool closed_form_checked = false;
    bool closed_form_matches = false;
    bool digit_sum_matches = false;
    bool niven_base = false;
    bool niven_power = false;
    DivisibilitySummary divisibility;
    DigitString oracle_digits{Base(2), {}};
    BigInt oracle_digit_sum;
    std::chrono::nanoseconds elapsed{0};

    bool admissible() const { return certificate.preconditions_ok(); }

    /// Admissible and every check succeeded.
    bool passed() const;

    /// Equality ignores `elapsed`.
    bool same_outcome(const VerificationReport& other) const;
};

VerificationReport verify_instance(const Base& b, int k, std::int64_t m, const DigitBudget& budget = {});

/// All N in [1, limit] that are degree-m b-Niven, ascending.
std::vector<BigInt> enumerate_niven(const Base& b, const BigInt& limit, std::int64_t m);

/// Degree profile of N_k for exponents 1..m_max.
DegreeProfile probe_max_degree(const Base& b, int k, std::int64_t m_max, const DigitBudget& budget = {});

struct EvenBaseProbe {
    BigInt base;
    std::vector<std::int64_t> degrees;  // subset of 1..d attained by N_k

    friend bool operator==(const EvenBaseProbe&, const EvenBaseProbe&) = default;
};

/// Brute-force degree sets for N_k over the even bases in [lo, hi].
std::vector<EvenBaseProbe> probe_even_bases(const BigInt& lo, const BigInt& hi, std::int64_t d, int k,
                                            const DigitBudget& budget = {});

}  // namespace niven::oracle
