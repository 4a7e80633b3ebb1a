#include "niven/oracle.hpp"

#include "niven/errors.hpp"

#include <algorithm>

namespace niven::oracle {

namespace {

void require_k(int k) {
    if (k < 1) throw InvalidInput("k must be >= 1");
}

BigInt plain_nk(const Base& b, int k, const DigitBudget& budget) {
    budget.require_power(k, 1);
    BigInt x = b.value();
    for (int i = 0; i < k; ++i) x *= x;
    return x - 1;
}

BigInt plain_power(const BigInt& x, std::int64_t m) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < m; ++i) r *= x;
    return r;
}

Digits plain_digits(BigInt x, const Base& b) {
    Digits lsb_first;
    BigInt r;
    do {
        mpz_tdiv_qr(x.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), b.value().get_mpz_t());
        lsb_first.push_back(r);
    } while (x != 0);
    std::reverse(lsb_first.begin(), lsb_first.end());
    return lsb_first;
}

bool plain_niven(const BigInt& n, const Base& b) {
    const BigInt s = plain_digit_sum(n, b);
    return s != 0 && divides(s, n);
}

}  // namespace

DigitString brute_force_power_digits(const Base& b, int k, std::int64_t m, const DigitBudget& budget) {
    require_k(k);
    if (m < 1) throw InvalidInput("power must be >= 1");
    budget.require_power(k, m);
    return DigitString(b, plain_digits(plain_power(plain_nk(b, k, budget), m), b));
}

BigInt plain_digit_sum(const BigInt& n, const Base& b) {
    if (n < 0) throw InvalidInput("digit sum of a negative integer");
    BigInt s = 0;
    for (const auto& d : plain_digits(n, b)) s += d;
    return s;
}

bool euler_check(const Base& b, int k) {
    require_k(k);
    if (mpz_even_p(b.value().get_mpz_t())) throw InvalidInput("euler_check requires an odd base");
    const BigInt exponent = pow2(static_cast<std::uint64_t>(k));
    const BigInt modulus = pow2(static_cast<std::uint64_t>(k) + 1);
    BigInt r;
    mpz_powm(r.get_mpz_t(), b.value().get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r == 1;
}

DivisibilityChain divisibility_chain(const Base& b, int k, std::int64_t m, const DigitBudget& budget) {
    require_k(k);
    if (m < 1) throw InvalidInput("power must be >= 1");
    budget.require_power(k, m);

    const std::int64_t c = (m + 1) / 2;
    std::int64_t q = 0, p = c;
    while (p % 2 == 0) {
        p /= 2;
        ++q;
    }
    const BigInt& bv = b.value();
    if (!mpz_congruent_ui_p(bv.get_mpz_t(), 3, 4)) {
        throw PreconditionViolated("divisibility_chain: base must be 3 mod 4");
    }
    if (!mpz_congruent_ui_p(bv.get_mpz_t(), 1, static_cast<unsigned long>(p))) {
        throw PreconditionViolated("divisibility_chain: odd part " + std::to_string(p) + " must divide b - 1");
    }

    const std::uint64_t e = static_cast<std::uint64_t>(m - 1);
    const BigInt nk = plain_nk(b, k, budget);
    const BigInt nk_e = plain_power(nk, m - 1);
    const BigInt nk_m = nk_e * nk;

    DivisibilityChain chain;
    chain.nk_ok = divides((bv - 1) * pow2(static_cast<std::uint64_t>(k)), nk);
    chain.odd_part_ok = divides(pow2(e) * p, nk_e);
    // Exponents: q <= 2^q - 1 <= e.
    const BigInt two_q_minus_1 = pow2(static_cast<std::uint64_t>(q)) - 1;
    chain.two_power_ok = divides(pow2(static_cast<std::uint64_t>(q)), pow2(two_q_minus_1.get_ui())) &&
                         two_q_minus_1 <= e;
    chain.cofactor_ok = divides(BigInt(static_cast<long>(c)), nk_e);
    chain.full_ok = divides(plain_digit_sum(nk_m, b), nk_m);
    return chain;
}

bool VerificationReport::passed() const {
    return admissible() && closed_form_checked && closed_form_matches && digit_sum_matches && niven_base &&
           niven_power && divisibility.euler_ok && divisibility.bm1_ok && divisibility.chain_ok &&
           certificate.conclusion_checked;
}

bool VerificationReport::same_outcome(const VerificationReport& o) const {
    return instance == o.instance && certificate == o.certificate && closed_form_checked == o.closed_form_checked &&
           closed_form_matches == o.closed_form_matches && digit_sum_matches == o.digit_sum_matches &&
           niven_base == o.niven_base && niven_power == o.niven_power && divisibility == o.divisibility &&
           oracle_digits == o.oracle_digits && oracle_digit_sum == o.oracle_digit_sum;
}

std::vector<BigInt> enumerate_niven(const Base& b, const BigInt& limit, std::int64_t m) {
    if (m < 1) throw InvalidInput("degree must be >= 1");
    std::vector<BigInt> found;
    if (limit < 1) return found;

    // Odometer over the base-b digits of n, least significant first.
    Digits counter{BigInt(0)};
    BigInt sum = 0;
    const BigInt top = b.value() - 1;
    for (BigInt n = 1; n <= limit; ++n) {
        std::size_t i = 0;
        while (i < counter.size() && counter[i] == top) {
            sum -= counter[i];
            counter[i] = 0;
            ++i;
        }
        if (i == counter.size()) counter.emplace_back(0);
        ++counter[i];
        ++sum;

        if (!divides(sum, n)) continue;
        if (m > 1 && !plain_niven(plain_power(n, m), b)) continue;
        found.push_back(n);
    }
    return found;
}

DegreeProfile probe_max_degree(const Base& b, int k, std::int64_t m_max, const DigitBudget& budget) {
    require_k(k);
    budget.require_power(k, m_max);
    return degree_profile(plain_nk(b, k, budget), b, m_max);
}

std::vector<EvenBaseProbe> probe_even_bases(const BigInt& lo, const BigInt& hi, std::int64_t d, int k,
                                            const DigitBudget& budget) {
    require_k(k);
    if (d < 1) throw InvalidInput("max degree must be >= 1");
    budget.require_power(k, d);
    std::vector<EvenBaseProbe> out;
    BigInt b = lo < 2 ? BigInt(2) : lo;
    if (mpz_odd_p(b.get_mpz_t())) ++b;
    for (; b <= hi; b += 2) {
        const Base base(b);
        out.push_back({b, degree_profile(plain_nk(base, k, budget), base, d).degrees});
    }
    return out;
}

}  // namespace niven::oracle
