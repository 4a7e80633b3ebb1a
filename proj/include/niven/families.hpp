#pragma once

#include "niven/bigint.hpp"
#include "niven/digits.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace niven {

/// n = 2^q * p with p odd.
struct OddPartDecomposition {
    std::int64_t n = 1;
    std::int64_t q = 0;
    std::int64_t p = 1;

    friend bool operator==(const OddPartDecomposition&, const OddPartDecomposition&) = default;
};

OddPartDecomposition odd_part(std::int64_t n);

/// Exact C(n, r). Throws InvalidInput unless 0 <= r <= n.
BigInt binomial(std::int64_t n, std::int64_t r);

struct LemmaReport {
    std::int64_t n = 1;
    bool lower_holds = false;  // 16^n <= C(2n,n)^2 * n
    bool upper_holds = false;  // C(2n,n)^3 * n <= 64^n
};

LemmaReport lemma_bounds_report(std::int64_t n);

/// Smallest base for which the degree-m digit blocks stay in range:
/// C(m, m/2) for even m, C(m, (m+1)/2) for odd m.
BigInt degree_threshold(std::int64_t m);

/// Decomposition whose odd part the base must be congruent to 1 modulo:
/// of m/2 for even m, of (m+1)/2 for odd m.
OddPartDecomposition degree_decomposition(std::int64_t m);

/// b^(2^k) - 1.
BigInt nk_value(const Base& b, int k, const DigitBudget& budget = {});

// Closed forms for N_k^m ---------------------------------------------------

/// One non-overlapping block (lead)(b-1)^fill(tail) followed by `zeros` zero digits.
struct DigitBlock {
    BigInt lead;
    std::uint64_t fill = 0;
    BigInt tail;
    std::uint64_t zeros = 0;
};

/// Block structure independent of the base: (fill, zeros) per block.
struct LayoutShape {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
    bool final_one = false;

    friend bool operator==(const LayoutShape&, const LayoutShape&) = default;
};

struct BlockLayout {
    Base base;
    int k = 1;
    std::int64_t m = 1;
    std::vector<DigitBlock> blocks;  // most significant first
    bool final_one = false;          // even powers end in the digit 1

    LayoutShape shape() const;
    DigitString assemble() const;
};

/// Block layout of N_k^m. Throws PreconditionViolated below the degree threshold.
BlockLayout power_layout(const Base& b, int k, std::int64_t m, const DigitBudget& budget = {});

/// N_k^(2n) from its binomial digit blocks.
DigitString even_power_digits(const Base& b, int k, std::int64_t n, const DigitBudget& budget = {});

/// N_k^n for odd n from its binomial digit blocks.
DigitString odd_power_digits(const Base& b, int k, std::int64_t n, const DigitBudget& budget = {});

/// Dispatches to the even or odd closed form.
DigitString closed_form_power_digits(const Base& b, int k, std::int64_t m, const DigitBudget& budget = {});

/// (m/2)(b-1)2^k for even m, ((m+1)/2)(b-1)2^k for odd m.
BigInt predicted_digit_sum(const Base& b, int k, std::int64_t m);

// Theorem hypotheses ---------------------------------------------------------

struct FamilyInstance {
    Base b{2ul};
    int k = 1;
    std::int64_t m = 1;

    friend bool operator==(const FamilyInstance&, const FamilyInstance&) = default;
};

enum class TheoremKind { even, odd };
enum class ConclusionPath { none, preconditions, oracle };

const char* to_string(TheoremKind kind);
const char* to_string(ConclusionPath path);

struct TheoremCertificate {
    FamilyInstance instance;
    TheoremKind theorem = TheoremKind::odd;
    OddPartDecomposition decomposition;
    BigInt threshold;
    bool threshold_ok = false;
    bool congruence_ok = false;                 // b = 3 (mod 4) and b = 1 (mod p)
    std::optional<BigInt> predicted_digit_sum;  // present when threshold_ok
    bool conclusion_checked = false;
    ConclusionPath path = ConclusionPath::none;

    bool preconditions_ok() const { return threshold_ok && congruence_ok; }

    friend bool operator==(const TheoremCertificate&, const TheoremCertificate&) = default;
};

/// Evaluates the hypotheses for degree m; failures are recorded, not thrown.
/// m = 1 is the odd case with n = 1.
TheoremCertificate theorem_preconditions(const Base& b, std::int64_t m, int k = 1);

/// (4 ell + 2) p + 1. Throws InvalidInput for even or non-positive p, or ell < 0.
BigInt base_family(const BigInt& p, const BigInt& ell);

struct DegreeRequirement {
    std::int64_t degree = 1;
    BigInt threshold;
    OddPartDecomposition decomposition;
};

/// Combined hypotheses for all degrees 1..d at once.
struct Theorem3Params {
    std::int64_t d = 1;
    BigInt modulus;          // lcm of the required odd parts
    BigInt product_modulus;  // product of the required odd parts
    BigInt min_base;         // max threshold over 1..d
    std::vector<DegreeRequirement> requirements;
};

Theorem3Params theorem3_params(std::int64_t d);

/// Least b >= min_base of the form (4 ell + 2) * modulus + 1, ell >= 0.
BigInt smallest_base(const Theorem3Params& params);
BigInt smallest_base(std::int64_t d);

}  // namespace niven
