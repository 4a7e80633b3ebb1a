#include "niven/families.hpp"

#include "niven/errors.hpp"

#include <string>

namespace niven {

namespace {

void require_k(int k) {
    if (k < 1) throw InvalidInput("k must be >= 1");
}

BigInt ui_pow(unsigned long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

}  // namespace

OddPartDecomposition odd_part(std::int64_t n) {
    if (n < 1) throw InvalidInput("odd_part: n must be >= 1, got " + std::to_string(n));
    OddPartDecomposition d{n, 0, n};
    while (d.p % 2 == 0) {
        d.p /= 2;
        ++d.q;
    }
    return d;
}

BigInt binomial(std::int64_t n, std::int64_t r) {
    if (n < 0 || r < 0 || r > n) {
        throw InvalidInput("binomial(" + std::to_string(n) + ", " + std::to_string(r) + ") undefined");
    }
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return c;
}

LemmaReport lemma_bounds_report(std::int64_t n) {
    if (n < 1) throw InvalidInput("lemma_bounds_report: n must be >= 1");
    const BigInt c = binomial(2 * n, n);
    const auto un = static_cast<unsigned long>(n);
    LemmaReport r{n, false, false};
    r.lower_holds = ui_pow(16, un) <= c * c * n;
    r.upper_holds = c * c * c * n <= ui_pow(64, un);
    return r;
}

BigInt degree_threshold(std::int64_t m) {
    if (m < 1) throw InvalidInput("degree must be >= 1");
    return m % 2 == 0 ? binomial(m, m / 2) : binomial(m, (m + 1) / 2);
}

OddPartDecomposition degree_decomposition(std::int64_t m) {
    if (m < 1) throw InvalidInput("degree must be >= 1");
    return m % 2 == 0 ? odd_part(m / 2) : odd_part((m + 1) / 2);
}

BigInt nk_value(const Base& b, int k, const DigitBudget& budget) {
    require_k(k);
    const std::uint64_t width = budget.require_power(k, 1);
    BigInt v;
    mpz_pow_ui(v.get_mpz_t(), b.value().get_mpz_t(), width);
    return v - 1;
}

LayoutShape BlockLayout::shape() const {
    LayoutShape s;
    s.final_one = final_one;
    for (const auto& blk : blocks) s.runs.emplace_back(blk.fill, blk.zeros);
    return s;
}

DigitString BlockLayout::assemble() const {
    const BigInt top = base.value() - 1;
    std::vector<Digits> parts;
    parts.reserve(blocks.size() * 4 + 1);
    for (const auto& blk : blocks) {
        parts.push_back({blk.lead});
        parts.push_back(repeat_block(top, blk.fill));
        parts.push_back({blk.tail});
        parts.push_back(repeat_block(BigInt(0), blk.zeros));
    }
    if (final_one) parts.push_back({BigInt(1)});
    return concat(parts, base);
}

BlockLayout power_layout(const Base& b, int k, std::int64_t m, const DigitBudget& budget) {
    require_k(k);
    if (m < 1) throw InvalidInput("power must be >= 1");
    budget.require_power(k, m);
    const BigInt threshold = degree_threshold(m);
    if (b.value() < threshold) {
        throw PreconditionViolated("base " + to_decimal(b.value()) + " below degree-" + std::to_string(m) +
                                   " threshold " + to_decimal(threshold));
    }

    const std::uint64_t run = (std::uint64_t{1} << k) - 1;
    BlockLayout layout{b, k, m, {}, m % 2 == 0};
    if (m % 2 == 0) {
        // sum_{i=1}^{n} C(2n,2i) b^{2i*2^k} - C(2n,2i-1) b^{(2i-1)*2^k}, then + 1
        for (std::int64_t i = m / 2; i >= 1; --i) {
            layout.blocks.push_back(
                {binomial(m, 2 * i) - 1, run, b.value() - binomial(m, 2 * i - 1), run});
        }
    } else {
        // sum_{i=1}^{(n+1)/2} C(n,n+2-2i) b^{(n+2-2i)*2^k} - C(n,n+1-2i) b^{(n+1-2i)*2^k}
        const std::int64_t count = (m + 1) / 2;
        for (std::int64_t i = 1; i <= count; ++i) {
            layout.blocks.push_back({binomial(m, m + 2 - 2 * i) - 1, run,
                                     b.value() - binomial(m, m + 1 - 2 * i), i == count ? 0 : run});
        }
    }
    return layout;
}

DigitString even_power_digits(const Base& b, int k, std::int64_t n, const DigitBudget& budget) {
    if (n < 1) throw InvalidInput("even_power_digits: n must be >= 1");
    return power_layout(b, k, 2 * n, budget).assemble();
}

DigitString odd_power_digits(const Base& b, int k, std::int64_t n, const DigitBudget& budget) {
    if (n < 1 || n % 2 == 0) throw PreconditionViolated("odd_power_digits: n must be odd and >= 1");
    return power_layout(b, k, n, budget).assemble();
}

DigitString closed_form_power_digits(const Base& b, int k, std::int64_t m, const DigitBudget& budget) {
    return m % 2 == 0 ? even_power_digits(b, k, m / 2, budget) : odd_power_digits(b, k, m, budget);
}

BigInt predicted_digit_sum(const Base& b, int k, std::int64_t m) {
    require_k(k);
    if (m < 1) throw InvalidInput("power must be >= 1");
    if (k >= 63) throw CapExceeded("k too large");
    const BigInt threshold = degree_threshold(m);
    if (b.value() < threshold) {
        throw PreconditionViolated("base " + to_decimal(b.value()) + " below degree-" + std::to_string(m) +
                                   " threshold " + to_decimal(threshold));
    }
    const std::int64_t blocks = m % 2 == 0 ? m / 2 : (m + 1) / 2;
    return BigInt(static_cast<long>(blocks)) * (b.value() - 1) * pow2(static_cast<std::uint64_t>(k));
}

const char* to_string(TheoremKind kind) { return kind == TheoremKind::even ? "even" : "odd"; }

const char* to_string(ConclusionPath path) {
    switch (path) {
        case ConclusionPath::preconditions: return "preconditions";
        case ConclusionPath::oracle: return "oracle";
        case ConclusionPath::none: break;
    }
    return "none";
}

TheoremCertificate theorem_preconditions(const Base& b, std::int64_t m, int k) {
    require_k(k);
    if (m < 1) throw InvalidInput("degree must be >= 1");
    TheoremCertificate cert;
    cert.instance = FamilyInstance{b, k, m};
    cert.theorem = m % 2 == 0 ? TheoremKind::even : TheoremKind::odd;
    cert.decomposition = degree_decomposition(m);
    cert.threshold = degree_threshold(m);
    cert.threshold_ok = b.value() >= cert.threshold;
    const BigInt& bv = b.value();
    cert.congruence_ok = mpz_congruent_ui_p(bv.get_mpz_t(), 3, 4) != 0 &&
                         mpz_congruent_ui_p(bv.get_mpz_t(), 1, static_cast<unsigned long>(cert.decomposition.p)) != 0;
    if (cert.threshold_ok && k < 63) cert.predicted_digit_sum = predicted_digit_sum(b, k, m);
    return cert;
}

BigInt base_family(const BigInt& p, const BigInt& ell) {
    if (p < 1 || mpz_even_p(p.get_mpz_t())) throw InvalidInput("base_family: p must be odd and >= 1");
    if (ell < 0) throw InvalidInput("base_family: ell must be >= 0");
    return (4 * ell + 2) * p + 1;
}

Theorem3Params theorem3_params(std::int64_t d) {
    if (d < 1) throw InvalidInput("theorem3_params: d must be >= 1");
    Theorem3Params params{d, BigInt(1), BigInt(1), BigInt(0), {}};
    for (std::int64_t i = 1; i <= d; ++i) {
        DegreeRequirement req{i, degree_threshold(i), degree_decomposition(i)};
        const BigInt p(static_cast<long>(req.decomposition.p));
        mpz_lcm(params.modulus.get_mpz_t(), params.modulus.get_mpz_t(), p.get_mpz_t());
        params.product_modulus *= p;
        if (req.threshold > params.min_base) params.min_base = req.threshold;
        params.requirements.push_back(std::move(req));
    }
    return params;
}

BigInt smallest_base(const Theorem3Params& params) {
    // (4 ell + 2) P + 1 >= min_base  <=>  ell >= (min_base - 1 - 2P) / (4P)
    const BigInt& P = params.modulus;
    BigInt excess = params.min_base - 1 - 2 * P;
    BigInt ell = 0;
    if (excess > 0) mpz_cdiv_q(ell.get_mpz_t(), excess.get_mpz_t(), BigInt(4 * P).get_mpz_t());
    return base_family(P, ell);
}

BigInt smallest_base(std::int64_t d) { return smallest_base(theorem3_params(d)); }

}  // namespace niven
