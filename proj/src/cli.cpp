#include "niven/cli.hpp"

#include "niven/errors.hpp"
#include "niven/families.hpp"
#include "niven/grid.hpp"
#include "niven/nivencheck.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

namespace niven::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Context {
    Format format = Format::text;
    bool timing = false;
    DigitBudget budget;
};

struct Outcome {
    OutputRecord record;
    ExitCode code = ExitCode::ok;
};

BigInt parse_big(const std::string& flag, const std::string& text) {
    auto v = parse_decimal(text);
    if (!v) throw UsageError(flag + ": expected a decimal integer, got '" + text + "'");
    return *v;
}

std::int64_t parse_int(const std::string& flag, const std::string& text, std::int64_t min) {
    const BigInt v = parse_big(flag, text);
    if (!v.fits_slong_p()) throw UsageError(flag + ": value out of range: " + text);
    if (v < min) throw UsageError(flag + ": must be >= " + std::to_string(min) + ", got " + text);
    return v.get_si();
}

int parse_k(const std::string& flag, const std::string& text) {
    const std::int64_t k = parse_int(flag, text, 1);
    if (k > 62) throw CapExceeded(flag + ": 2^" + text + " digits exceeds any digit budget");
    return static_cast<int>(k);
}

// "A..B" or a single value "A".
std::pair<std::string, std::string> split_range(const std::string& flag, const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {text, text};
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    if (lo.empty() || hi.empty()) throw UsageError(flag + ": expected a range A..B, got '" + text + "'");
    return {lo, hi};
}

std::pair<BigInt, BigInt> parse_big_range(const std::string& flag, const std::string& text) {
    auto [lo, hi] = split_range(flag, text);
    auto r = std::pair{parse_big(flag, lo), parse_big(flag, hi)};
    if (r.first > r.second) throw UsageError(flag + ": empty range '" + text + "'");
    return r;
}

std::pair<std::int64_t, std::int64_t> parse_int_range(const std::string& flag, const std::string& text,
                                                      std::int64_t min) {
    auto [lo, hi] = split_range(flag, text);
    auto r = std::pair{parse_int(flag, lo, min), parse_int(flag, hi, min)};
    if (r.first > r.second) throw UsageError(flag + ": empty range '" + text + "'");
    return r;
}

Base parse_base(const std::string& flag, const std::string& text) {
    const BigInt v = parse_big(flag, text);
    if (v < 2) throw UsageError(flag + ": base must be >= 2, got " + text);
    return Base(v);
}

DigitBudget budget_from_env() {
    DigitBudget budget;
    if (const char* cap = std::getenv("NIVEN_DIGIT_CAP"); cap != nullptr && *cap != '\0') {
        const BigInt v = parse_big("NIVEN_DIGIT_CAP", cap);
        if (v < 1 || !v.fits_ulong_p()) throw UsageError("NIVEN_DIGIT_CAP: must be a positive integer");
        budget.max_digits = v.get_ui();
    }
    return budget;
}

Json degrees_json(const std::vector<std::int64_t>& degrees) {
    Json a = Json::array();
    for (auto d : degrees) a.push_back(d);
    return a;
}

// Commands ------------------------------------------------------------------

Outcome cmd_check(const Context& ctx, const std::string& base_s, const std::string& number_s,
                  const std::string& degree_s) {
    const Base b = parse_base("--base", base_s);
    const BigInt n = parse_big("--number", number_s);
    if (n < 1) throw UsageError("--number: must be >= 1, got " + number_s);

    Outcome o;
    o.record.command = "check";
    o.record.inputs = {{"base", base_s}, {"number", number_s}};
    const DigitString digits = to_base(n, b);
    const bool niven = is_b_niven(n, b);
    o.record.result = {{"number", to_decimal(n)},
                       {"representation", to_json(digits)},
                       {"digit_sum", to_decimal(digit_sum(n, b))},
                       {"is_niven", niven}};
    bool ok = niven;
    if (!degree_s.empty()) {
        const std::int64_t m = parse_int("--degree", degree_s, 1);
        if (digits.size() > ctx.budget.max_digits / static_cast<std::uint64_t>(m)) {
            throw CapExceeded("--degree: N^" + degree_s + " exceeds the digit budget");
        }
        o.record.inputs["degree"] = degree_s;
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(m));
        const bool degree_ok = is_degree_m(n, b, m);
        o.record.result["degree"] = m;
        o.record.result["power_digit_sum"] = to_decimal(digit_sum(power, b));
        o.record.result["power_is_niven"] = is_b_niven(power, b);
        o.record.result["is_degree_m"] = degree_ok;
        ok = degree_ok;
    }
    o.code = ok ? ExitCode::ok : ExitCode::check_failed;
    return o;
}

Outcome cmd_digits(const std::string& base_s, const std::string& number_s) {
    const Base b = parse_base("--base", base_s);
    const BigInt n = parse_big("--number", number_s);
    if (n < 0) throw UsageError("--number: must be >= 0, got " + number_s);
    const DigitString s = to_base(n, b);
    Outcome o;
    o.record.command = "digits";
    o.record.inputs = {{"base", base_s}, {"number", number_s}};
    o.record.result = {{"number", to_decimal(n)},
                       {"representation", to_json(s)},
                       {"length", s.size()},
                       {"digit_sum", to_decimal(digit_sum(n, b))}};
    return o;
}

Outcome cmd_family(const Context& ctx, const std::string& base_s, const std::string& k_s,
                   const std::string& power_s, const std::string& mode) {
    const Base b = parse_base("--base", base_s);
    const int k = parse_k("--k", k_s);
    const std::int64_t m = parse_int("--power", power_s, 1);
    ctx.budget.require_power(k, m);

    Outcome o;
    o.record.command = "family";
    o.record.inputs = {{"base", base_s}, {"k", k_s}, {"power", power_s}, {"mode", mode}};
    Json& res = o.record.result;
    res["nk"] = to_json(to_base(nk_value(b, k, ctx.budget), b));

    std::optional<DigitString> closed, brute;
    res["closed_form"] = Json();
    res["closed_form_error"] = Json();
    if (mode != "oracle") {
        try {
            closed = closed_form_power_digits(b, k, m, ctx.budget);
            res["closed_form"] = to_json(*closed);
        } catch (const PreconditionViolated& e) {
            res["closed_form_error"] = e.what();
        }
    }
    res["oracle"] = Json();
    if (mode != "closed-form") {
        brute = oracle::brute_force_power_digits(b, k, m, ctx.budget);
        res["oracle"] = to_json(*brute);
    }
    std::optional<BigInt> actual_sum;
    if (brute) actual_sum = oracle::plain_digit_sum(from_digits(*brute), b);
    else if (closed) actual_sum = digit_sum(from_digits(*closed), b);
    res["digit_sum"] = actual_sum ? Json(to_decimal(*actual_sum)) : Json();
    res["predicted_digit_sum"] = Json();
    if (b.value() >= degree_threshold(m)) res["predicted_digit_sum"] = to_decimal(predicted_digit_sum(b, k, m));

    bool ok = true;
    if (mode == "both") {
        const bool match = closed && brute && *closed == *brute;
        res["match"] = match;
        ok = match;
    } else if (mode == "closed-form") {
        ok = closed.has_value();
    }
    o.code = ok ? ExitCode::ok : ExitCode::check_failed;
    return o;
}

Outcome cmd_verify(const Context& ctx, const std::string& base_s, const std::string& k_s,
                   const std::string& degree_s) {
    const Base b = parse_base("--base", base_s);
    const int k = parse_k("--k", k_s);
    const std::int64_t m = parse_int("--degree", degree_s, 1);
    const auto report = oracle::verify_instance(b, k, m, ctx.budget);
    Outcome o;
    o.record.command = "verify";
    o.record.inputs = {{"base", base_s}, {"k", k_s}, {"degree", degree_s}};
    o.record.result = to_json(report, true, ctx.timing);
    o.code = report.passed() ? ExitCode::ok : ExitCode::check_failed;
    return o;
}

Outcome cmd_verify_grid(const Context& ctx, const std::string& bases_s, const std::string& k_s,
                        const std::string& degrees_s, const std::string& jobs_s) {
    const auto [b_lo, b_hi] = parse_big_range("--bases", bases_s);
    const auto [k_lo, k_hi] = parse_int_range("--k", k_s, 1);
    const auto [m_lo, m_hi] = parse_int_range("--degrees", degrees_s, 1);
    const std::int64_t jobs = parse_int("--jobs", jobs_s, 1);
    if (k_hi > 62) throw CapExceeded("--k: 2^" + std::to_string(k_hi) + " digits exceeds any digit budget");
    ctx.budget.require_power(static_cast<int>(k_hi), m_hi);

    const auto cells = grid_cells({b_lo, b_hi, static_cast<int>(k_lo), static_cast<int>(k_hi), m_lo, m_hi});
    const auto reports = verify_grid(cells, static_cast<unsigned>(jobs), ctx.budget);

    Outcome o;
    o.record.command = "verify-grid";
    o.record.inputs = {{"bases", bases_s}, {"k", k_s}, {"degrees", degrees_s}, {"jobs", jobs_s}};
    Json rows = Json::array();
    std::size_t admissible = 0, passed = 0;
    for (const auto& r : reports) {
        rows.push_back(to_json(r, false, ctx.timing));
        if (r.admissible()) {
            ++admissible;
            if (r.passed()) ++passed;
        }
    }
    o.record.result = {{"cells", rows},
                       {"summary",
                        {{"cells", reports.size()},
                         {"admissible", admissible},
                         {"passed", passed},
                         {"failed", admissible - passed},
                         {"skipped", reports.size() - admissible}}}};
    o.code = passed == admissible ? ExitCode::ok : ExitCode::check_failed;
    return o;
}

// Known misprint in published threshold tables: 66 for degree 11, where the
// odd-degree bound is C(11, 6) = 462.
constexpr std::int64_t kErratumDegree = 11;
constexpr long kErratumPrintedThreshold = 66;

Outcome cmd_search_base(const std::string& d_s) {
    const std::int64_t d = parse_int("--max-degree", d_s, 1);
    const Theorem3Params params = theorem3_params(d);
    const BigInt base = smallest_base(params);

    Outcome o;
    o.record.command = "search-base";
    o.record.inputs = {{"max_degree", d_s}};
    Json thresholds = Json::array();
    for (const auto& req : params.requirements) {
        Json note;
        if (req.degree == kErratumDegree && req.threshold != kErratumPrintedThreshold) {
            note = "reference table lists " + std::to_string(kErratumPrintedThreshold) + "; C(11,6) = " +
                   to_decimal(req.threshold) + " is used";
        }
        thresholds.push_back({{"degree", req.degree},
                              {"threshold", to_decimal(req.threshold)},
                              {"q", req.decomposition.q},
                              {"p", req.decomposition.p},
                              {"erratum", note}});
    }
    const DegreeProfile profile = oracle::probe_max_degree(Base(base), 1, d);
    bool complete = profile.degrees.size() == static_cast<std::size_t>(d);
    o.record.result = {{"max_degree", d},
                       {"min_base", to_decimal(params.min_base)},
                       {"modulus", to_decimal(params.modulus)},
                       {"product_modulus", to_decimal(params.product_modulus)},
                       {"smallest_base", to_decimal(base)},
                       {"n1_degrees", degrees_json(profile.degrees)},
                       {"n1_all_degrees", complete},
                       {"thresholds", thresholds}};
    o.code = complete ? ExitCode::ok : ExitCode::check_failed;
    return o;
}

Outcome cmd_lemma(const std::string& n_s) {
    const std::int64_t max_n = parse_int("--max-n", n_s, 1);
    Outcome o;
    o.record.command = "lemma";
    o.record.inputs = {{"max_n", n_s}};
    Json rows = Json::array();
    std::int64_t lower = 0, upper = 0;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const LemmaReport r = lemma_bounds_report(n);
        lower += r.lower_holds;
        upper += r.upper_holds;
        rows.push_back({{"n", n}, {"lower_holds", r.lower_holds}, {"upper_holds", r.upper_holds}});
    }
    o.record.result = {{"cells", rows}, {"summary", {{"lower_holds_count", lower}, {"upper_holds_count", upper}}}};
    return o;
}

Outcome cmd_enumerate(const std::string& base_s, const std::string& limit_s, const std::string& degree_s) {
    const Base b = parse_base("--base", base_s);
    const BigInt limit = parse_big("--limit", limit_s);
    if (limit < 1) throw UsageError("--limit: must be >= 1, got " + limit_s);
    const std::int64_t m = degree_s.empty() ? 1 : parse_int("--degree", degree_s, 1);
    Outcome o;
    o.record.command = "enumerate";
    o.record.inputs = {{"base", base_s}, {"limit", limit_s}, {"degree", m}};
    Json numbers = Json::array();
    const auto found = oracle::enumerate_niven(b, limit, m);
    for (const auto& n : found) numbers.push_back(to_decimal(n));
    o.record.result = {{"count", found.size()}, {"numbers", numbers}};
    return o;
}

Outcome cmd_probe_even(const Context& ctx, const std::string& bases_s, const std::string& d_s,
                       const std::string& k_s) {
    const auto [lo, hi] = parse_big_range("--bases", bases_s);
    const std::int64_t d = parse_int("--max-degree", d_s, 1);
    const int k = parse_k("--k", k_s);
    Outcome o;
    o.record.command = "probe-even";
    o.record.inputs = {{"bases", bases_s}, {"max_degree", d_s}, {"k", k_s}};
    Json rows = Json::array();
    for (const auto& p : oracle::probe_even_bases(lo, hi, d, k, ctx.budget)) {
        rows.push_back({{"base", to_decimal(p.base)}, {"degrees", degrees_json(p.degrees)}});
    }
    o.record.result = {{"cells", rows}};
    return o;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generator and verifier for high-degree b-Niven numbers", "niven"};
    app.require_subcommand(1);
    std::string format = "text";
    bool timing = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
    app.add_flag("--timing", timing, "Include elapsed times in verification output");

    std::string base, number, degree, k, power, bases, degrees, jobs = "1", max_degree, max_n, limit;
    bool closed_form = false, oracle_only = false, both = false;

    auto* check = app.add_subcommand("check", "Test whether N (and N^M) are b-Niven");
    check->add_option("--base", base)->required();
    check->add_option("--number", number)->required();
    check->add_option("--degree", degree);

    auto* digits = app.add_subcommand("digits", "Base-b digits of N");
    digits->add_option("--base", base)->required();
    digits->add_option("--number", number)->required();

    auto* family = app.add_subcommand("family", "Digits of N_k^M by closed form and/or oracle");
    family->add_option("--base", base)->required();
    family->add_option("--k", k)->required();
    family->add_option("--power", power)->required();
    auto* f_closed = family->add_flag("--closed-form", closed_form);
    auto* f_oracle = family->add_flag("--oracle", oracle_only);
    auto* f_both = family->add_flag("--both", both);
    f_closed->excludes(f_oracle)->excludes(f_both);
    f_oracle->excludes(f_both);

    auto* verify = app.add_subcommand("verify", "Verify one (b, k, degree) instance");
    verify->add_option("--base", base)->required();
    verify->add_option("--k", k)->required();
    verify->add_option("--degree", degree)->required();

    auto* grid = app.add_subcommand("verify-grid", "Verify every instance of a (b, k, degree) grid");
    grid->add_option("--bases", bases)->required();
    grid->add_option("--k", k)->required();
    grid->add_option("--degrees", degrees)->required();
    grid->add_option("--jobs", jobs);

    auto* search = app.add_subcommand("search-base", "Smallest base admitting all degrees 1..D");
    search->add_option("--max-degree", max_degree)->required();

    auto* lemma = app.add_subcommand("lemma", "Exact audit of the central binomial bounds");
    lemma->add_option("--max-n", max_n)->required();

    auto* enumerate = app.add_subcommand("enumerate", "Degree-M b-Niven numbers up to L");
    enumerate->add_option("--base", base)->required();
    enumerate->add_option("--limit", limit)->required();
    enumerate->add_option("--degree", degree);

    auto* probe = app.add_subcommand("probe-even", "Degrees attained by N_k in even bases");
    probe->add_option("--bases", bases)->required();
    probe->add_option("--max-degree", max_degree)->required();
    probe->add_option("--k", k)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<const char*> cargs;
    for (const auto& a : argv) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return static_cast<int>(ExitCode::ok);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }

    try {
        Context ctx;
        ctx.format = format == "json" ? Format::json : format == "tsv" ? Format::tsv : Format::text;
        ctx.timing = timing;
        ctx.budget = budget_from_env();

        Outcome o;
        if (check->parsed()) {
            o = cmd_check(ctx, base, number, degree);
        } else if (digits->parsed()) {
            o = cmd_digits(base, number);
        } else if (family->parsed()) {
            const std::string mode = closed_form ? "closed-form" : oracle_only ? "oracle" : "both";
            o = cmd_family(ctx, base, k, power, mode);
        } else if (verify->parsed()) {
            o = cmd_verify(ctx, base, k, degree);
        } else if (grid->parsed()) {
            o = cmd_verify_grid(ctx, bases, k, degrees, jobs);
        } else if (search->parsed()) {
            o = cmd_search_base(max_degree);
        } else if (lemma->parsed()) {
            o = cmd_lemma(max_n);
        } else if (enumerate->parsed()) {
            o = cmd_enumerate(base, limit, degree);
        } else {
            o = cmd_probe_even(ctx, bases, max_degree, k);
        }
        out << render(o.record, ctx.format);
        return static_cast<int>(o.code);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::cap_exceeded);
    } catch (const PreconditionViolated& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::check_failed);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }
}

}  // namespace niven::cli
