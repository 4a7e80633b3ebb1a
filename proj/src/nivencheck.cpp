#include "niven/nivencheck.hpp"

#include "niven/errors.hpp"

namespace niven {

namespace {

void require_positive(const BigInt& n) {
    if (n == 0) throw ZeroInput("Niven predicate undefined for 0");
    if (n < 0) throw InvalidInput("Niven predicate requires a positive integer");
}

}  // namespace

bool is_b_niven(const BigInt& n, const Base& b) {
    require_positive(n);
    return divides(digit_sum(n, b), n);
}

bool is_degree_m(const BigInt& n, const Base& b, std::int64_t m) {
    if (m < 1) throw InvalidInput("degree must be >= 1");
    if (!is_b_niven(n, b)) return false;
    if (m == 1) return true;
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(m));
    return is_b_niven(power, b);
}

DegreeProfile degree_profile(const BigInt& n, const Base& b, std::int64_t m_max) {
    if (m_max < 1) throw InvalidInput("m_max must be >= 1");
    DegreeProfile profile{b, n, is_b_niven(n, b), {}, m_max};
    if (!profile.is_niven) return profile;

    profile.degrees.push_back(1);
    BigInt power = n;
    for (std::int64_t m = 2; m <= m_max; ++m) {
        power *= n;
        if (is_b_niven(power, b)) profile.degrees.push_back(m);
    }
    return profile;
}

}  // namespace niven
