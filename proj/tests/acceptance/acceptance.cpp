// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include "niven/cli.hpp"
#include "niven/families.hpp"
#include "niven/nivencheck.hpp"
#include "niven/oracle.hpp"
#include "property_checks.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace niven;
using niven::test::D;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct GridCell {
    Base b;
    int k;
    std::int64_t m;
};

// b in {7, 11, 19, 23, 31, 43, 6511}, k in 1..3, m in 1..15, filtered to
// cells whose theorem hypotheses hold.
std::vector<GridCell> admissible_grid() {
    std::vector<GridCell> cells;
    for (unsigned long b : {7ul, 11ul, 19ul, 23ul, 31ul, 43ul, 6511ul}) {
        for (int k = 1; k <= 3; ++k) {
            for (std::int64_t m = 1; m <= 15; ++m) {
                if (theorem_preconditions(Base(b), m, k).preconditions_ok()) cells.push_back({Base(b), k, m});
            }
        }
    }
    return cells;
}

std::string cell_name(const GridCell& c) {
    return "b=" + to_decimal(c.b.value()) + " k=" + std::to_string(c.k) + " m=" + std::to_string(c.m);
}

cli::Json run_json(const std::vector<std::string>& args, int& code) {
    std::vector<std::string> argv{"niven"};
    argv.insert(argv.end(), args.begin(), args.end());
    argv.insert(argv.end(), {"--format", "json"});
    std::ostringstream out, err;
    code = cli::run(argv, out, err);
    return cli::Json::parse(out.str());
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Verdict smallest_base_reproduction() {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    const auto j = run_json({"search-base", "--max-degree", "15"}, code);
    const double elapsed = seconds_since(start);
    v.require(code == 0, "exit code " + std::to_string(code));
    v.require(j["result"]["smallest_base"] == "6511", "smallest_base " + j["result"]["smallest_base"].dump());
    v.require(j["result"]["min_base"] == "6435", "min_base " + j["result"]["min_base"].dump());
    v.require(j["result"]["modulus"] == "105", "modulus " + j["result"]["modulus"].dump());
    v.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    if (v.ok) v.detail = "6511 = 105(4*15+2)+1 >= 6435 in " + std::to_string(elapsed) + " s";
    return v;
}

Verdict fixture_strings() {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    const Base b(6511ul);
    const std::vector<Digits> printed{
        D({6510, 6510}),
        D({6510, 6509, 0, 1}),
        D({6510, 6508, 0, 2, 6510, 6510}),
        D({6510, 6507, 0, 5, 6510, 6507, 0, 1}),
        D({6510, 6506, 0, 9, 6501, 6501, 0, 4, 6510, 6510}),
    };
    for (std::int64_t m = 1; m <= 4; ++m) {
        const auto& expected = printed[static_cast<std::size_t>(m - 1)];
        v.require(closed_form_power_digits(b, 1, m).digits() == expected, "closed form m=" + std::to_string(m));
        v.require(oracle::brute_force_power_digits(b, 1, m).digits() == expected, "oracle m=" + std::to_string(m));
    }
    const auto closed5 = closed_form_power_digits(b, 1, 5);
    const auto brute5 = oracle::brute_force_power_digits(b, 1, 5);
    v.require(closed5 == brute5, "m=5 closed form and oracle disagree");
    BigInt sum5 = 0, printed_sum = 0;
    for (const auto& d : brute5.digits()) sum5 += d;
    for (const auto& d : printed[4]) printed_sum += d;
    v.require(sum5 == 39060 && predicted_digit_sum(b, 1, 5) == 39060, "m=5 digit sum " + to_decimal(sum5));
    v.require(printed_sum == 39051, "printed m=5 digit sum " + to_decimal(printed_sum));
    int differing = 0;
    if (brute5.size() == printed[4].size()) {
        for (std::size_t i = 0; i < printed[4].size(); ++i) differing += brute5.digits()[i] != printed[4][i];
    }
    v.require(brute5.size() == printed[4].size() && differing == 1,
              "m=5 differs from printed string in " + std::to_string(differing) + " positions");
    const double elapsed = seconds_since(start);
    v.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    if (v.ok) v.detail = "m=1..4 verbatim; m=5 = " + brute5.bracketed() + " (one-digit erratum, 39051 vs 39060)";
    return v;
}

Verdict digit_sum_identities(const std::vector<GridCell>& grid) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : grid) {
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), nk_value(c.b, c.k).get_mpz_t(), static_cast<unsigned long>(c.m));
        v.require(digit_sum(power, c.b) == predicted_digit_sum(c.b, c.k, c.m), cell_name(c));
    }
    const double elapsed = seconds_since(start);
    v.require(!grid.empty(), "empty admissible grid");
    v.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
    if (v.ok) v.detail = std::to_string(grid.size()) + " admissible cells in " + std::to_string(elapsed) + " s";
    return v;
}

Verdict oracle_equivalence(const std::vector<GridCell>& grid) {
    Verdict v;
    for (const auto& c : grid) {
        v.require(closed_form_power_digits(c.b, c.k, c.m) == oracle::brute_force_power_digits(c.b, c.k, c.m),
                  cell_name(c));
    }
    if (v.ok) v.detail = std::to_string(grid.size()) + " cells digit-for-digit";
    return v;
}

Verdict theorem_conclusions(const std::vector<GridCell>& grid) {
    Verdict v;
    for (const auto& c : grid) v.require(is_degree_m(nk_value(c.b, c.k), c.b, c.m), cell_name(c));
    const auto profile = degree_profile(nk_value(Base(6511ul), 1), Base(6511ul), 15);
    std::vector<std::int64_t> all;
    for (std::int64_t i = 1; i <= 15; ++i) all.push_back(i);
    v.require(profile.degrees == all, "degree profile of N_1 in base 6511");
    if (v.ok) v.detail = std::to_string(grid.size()) + " cells degree-m; N_1 (base 6511) degrees 1..15";
    return v;
}

Verdict proof_steps(const std::vector<GridCell>& grid) {
    Verdict v;
    for (unsigned long b = 3; b <= 199; b += 2) {
        for (int k = 1; k <= 10; ++k) v.require(oracle::euler_check(Base(b), k), "euler b=" + std::to_string(b));
    }
    for (const auto& c : grid) v.require(oracle::divisibility_chain(c.b, c.k, c.m).all(), "chain " + cell_name(c));
    for (std::int64_t n = 1; n <= 64; ++n) {
        BigInt odd = 0, even_inner = 0;
        for (std::int64_t i = 1; i <= n; ++i) odd += binomial(2 * n, 2 * i - 1);
        for (std::int64_t i = 1; i <= n - 1; ++i) even_inner += binomial(2 * n, 2 * i);
        v.require(odd == pow2(2 * n - 1) && even_inner == pow2(2 * n - 1) - 2, "even sums n=" + std::to_string(n));
        BigInt ev = 0, od = 0;
        for (std::int64_t j = 0; j <= n; ++j) (j % 2 == 0 ? ev : od) += binomial(n, j);
        if (n % 2 == 1) v.require(ev == pow2(n - 1) && od == pow2(n - 1), "odd sums n=" + std::to_string(n));
    }
    if (v.ok) v.detail = "euler 98x10, chain on " + std::to_string(grid.size()) + " cells, parity sums n<=64";
    return v;
}

Verdict lemma_audit() {
    Verdict v;
    const auto rows = test::pascal(400);
    int lower_true = 0;
    for (int n = 1; n <= 200; ++n) {
        const BigInt& c = rows[2 * n][n];
        const bool lower = test::big_pow(16, n) <= c * c * n;
        const bool upper = c * c * c * n <= test::big_pow(64, n);
        const auto r = lemma_bounds_report(n);
        v.require(r.lower_holds == lower && r.upper_holds == upper, "mismatch at n=" + std::to_string(n));
        v.require(r.upper_holds, "upper bound fails at n=" + std::to_string(n));
        lower_true += r.lower_holds;
    }
    v.require(!lemma_bounds_report(1).lower_holds, "lower bound should fail at n=1 (16 > 4)");
    if (v.ok) v.detail = "upper holds n<=200; lower holds for " + std::to_string(lower_true) + "/200";
    return v;
}

Verdict thresholds_table() {
    Verdict v;
    const std::vector<std::pair<std::int64_t, long>> table{{4, 6},    {5, 10},   {6, 20},    {7, 35},
                                                           {8, 70},   {9, 126},  {10, 252},  {12, 924},
                                                           {13, 1716}, {14, 3432}, {15, 6435}};
    for (const auto& [m, t] : table) v.require(degree_threshold(m) == t, "degree " + std::to_string(m));
    v.require(degree_threshold(11) == 462, "degree 11");
    int code = 0;
    const auto j = run_json({"search-base", "--max-degree", "15"}, code);
    const auto& row = j["result"]["thresholds"][10];
    v.require(row["degree"] == 11 && row["threshold"] == "462", "search-base degree-11 row");
    v.require(row["erratum"].is_string(), "degree-11 discrepancy not flagged");
    if (v.ok) v.detail = "11 table values; degree 11 -> 462 flagged: " + row["erratum"].get<std::string>();
    return v;
}

Verdict enumeration_sanity() {
    Verdict v;
    const auto decimal = oracle::enumerate_niven(Base(10ul), 100, 1);
    int scan = 0;
    for (int n = 1; n <= 100; ++n) {
        int s = 0;
        for (int x = n; x; x /= 10) s += x % 10;
        scan += n % s == 0;
    }
    v.require(decimal.size() == 33 && scan == 33, "count " + std::to_string(decimal.size()));
    for (unsigned long b = 2; b <= 50; ++b) {
        const auto list = oracle::enumerate_niven(Base(b), b - 1, 1);
        bool full = list.size() == b - 1;
        for (std::size_t i = 0; full && i < list.size(); ++i) full = list[i] == static_cast<unsigned long>(i + 1);
        v.require(full, "single digits b=" + std::to_string(b));
    }
    if (v.ok) v.detail = "33 decimal Harshad numbers <= 100; single digits b=2..50";
    return v;
}

Verdict property_suites() {
    Verdict v;
    constexpr int kCases = 1000;
    const std::vector<std::pair<std::string, test::PropertyResult>> results{
        {"round-trip", test::round_trip(0xacce0001, kCases)},
        {"casting-out", test::casting_out(0xacce0002, kCases)},
        {"base-shift", test::base_shift_closure(0xacce0003, kCases)},
        {"threshold-blocks", test::threshold_block_range(0xacce0004, kCases)},
    };
    std::string summary;
    for (const auto& [name, r] : results) {
        v.require(r.ok() && r.cases >= kCases, name + ": " + std::to_string(r.failures) + " failures, first " +
                                                   r.first_failure);
        summary += (summary.empty() ? "" : ", ") + name + " " + std::to_string(r.cases);
    }
    if (v.ok) v.detail = summary + " cases, 0 failures";
    return v;
}

}  // namespace

int main() {
    const auto grid = admissible_grid();
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"smallest-base reproduction", smallest_base_reproduction},
        {"fixture strings", fixture_strings},
        {"digit-sum identities", [&] { return digit_sum_identities(grid); }},
        {"oracle equivalence", [&] { return oracle_equivalence(grid); }},
        {"theorem conclusions", [&] { return theorem_conclusions(grid); }},
        {"proof-step validation", [&] { return proof_steps(grid); }},
        {"lemma audit", lemma_audit},
        {"thresholds table", thresholds_table},
        {"enumeration sanity", enumeration_sanity},
        {"property suites", property_suites},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.ok;
        std::printf("[%s] %2zu %-28s %s\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    v.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
