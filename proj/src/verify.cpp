#include "niven/errors.hpp"
#include "niven/oracle.hpp"

namespace niven::oracle {

VerificationReport verify_instance(const Base& b, int k, std::int64_t m, const DigitBudget& budget) {
    const auto start = std::chrono::steady_clock::now();
    if (k < 1) throw InvalidInput("k must be >= 1");
    if (m < 1) throw InvalidInput("degree must be >= 1");
    budget.require_power(k, m);

    VerificationReport r;
    r.instance = FamilyInstance{b, k, m};
    r.certificate = theorem_preconditions(b, m, k);
    r.oracle_digits = brute_force_power_digits(b, k, m, budget);
    for (const auto& d : r.oracle_digits.digits()) r.oracle_digit_sum += d;

    if (r.certificate.preconditions_ok()) {
        r.closed_form_checked = true;
        r.closed_form_matches = closed_form_power_digits(b, k, m, budget) == r.oracle_digits;
        r.digit_sum_matches = r.certificate.predicted_digit_sum == r.oracle_digit_sum;
    }

    const BigInt nk = from_digits(brute_force_power_digits(b, k, 1, budget));
    r.niven_base = is_b_niven(nk, b);
    r.niven_power = divides(r.oracle_digit_sum, from_digits(r.oracle_digits));

    if (mpz_odd_p(b.value().get_mpz_t())) r.divisibility.euler_ok = euler_check(b, k);
    try {
        const DivisibilityChain chain = divisibility_chain(b, k, m, budget);
        r.divisibility.bm1_ok = chain.nk_ok;
        r.divisibility.chain_ok = chain.all();
    } catch (const PreconditionViolated&) {
        r.divisibility.bm1_ok = divides((b.value() - 1) * pow2(static_cast<std::uint64_t>(k)), nk);
    }

    if (r.niven_base && r.niven_power) {
        r.certificate.conclusion_checked = true;
        r.certificate.path =
            r.certificate.preconditions_ok() ? ConclusionPath::preconditions : ConclusionPath::oracle;
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

}  // namespace niven::oracle
