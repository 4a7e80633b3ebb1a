#include "niven/cli.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace niven::cli {

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

void flatten_into(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (v.is_object()) {
        for (const auto& [key, child] : v.items()) {
            flatten_into(child, prefix.empty() ? key : prefix + "." + key, out);
        }
        return;
    }
    if (v.is_array()) {
        const bool scalars = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
        if (scalars) {
            std::string joined;
            for (const auto& e : v) {
                if (!joined.empty()) joined += ',';
                joined += scalar_text(e);
            }
            out.emplace_back(prefix, joined);
            return;
        }
        std::size_t i = 0;
        for (const auto& e : v) flatten_into(e, prefix + "." + std::to_string(i++), out);
        return;
    }
    out.emplace_back(prefix, scalar_text(v));
}

bool has_cells(const Json& result) { return result.contains("cells") && result["cells"].is_array(); }

}  // namespace

Json to_json(const DigitString& s) {
    Json digits = Json::array();
    for (const auto& d : s.digits()) digits.push_back(to_decimal(d));
    return Json{{"digits", digits}, {"bracketed", s.bracketed()}};
}

Json to_json(const oracle::VerificationReport& r, bool with_digits, bool with_timing) {
    const auto& c = r.certificate;
    Json cert{{"theorem", to_string(c.theorem)},
              {"q", c.decomposition.q},
              {"p", c.decomposition.p},
              {"threshold", to_decimal(c.threshold)},
              {"threshold_ok", c.threshold_ok},
              {"congruence_ok", c.congruence_ok},
              {"predicted_digit_sum", c.predicted_digit_sum ? Json(to_decimal(*c.predicted_digit_sum)) : Json()},
              {"conclusion_checked", c.conclusion_checked},
              {"path", to_string(c.path)}};
    Json j{{"base", to_decimal(r.instance.b.value())},
           {"k", r.instance.k},
           {"degree", r.instance.m},
           {"certificate", cert},
           {"admissible", r.admissible()},
           {"closed_form_checked", r.closed_form_checked},
           {"closed_form_matches", r.closed_form_matches},
           {"digit_sum", to_decimal(r.oracle_digit_sum)},
           {"digit_sum_matches", r.digit_sum_matches},
           {"niven_base", r.niven_base},
           {"niven_power", r.niven_power},
           {"euler_ok", r.divisibility.euler_ok},
           {"bm1_ok", r.divisibility.bm1_ok},
           {"chain_ok", r.divisibility.chain_ok},
           {"passed", r.passed()}};
    if (with_digits) j["oracle"] = to_json(r.oracle_digits);
    if (with_timing) j["elapsed_us"] = std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed).count();
    return j;
}

std::vector<std::pair<std::string, std::string>> flatten(const Json& value) {
    std::vector<std::pair<std::string, std::string>> out;
    flatten_into(value, "", out);
    return out;
}

std::vector<std::vector<std::pair<std::string, std::string>>> tsv_rows(const OutputRecord& record) {
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    if (has_cells(record.result)) {
        for (const auto& cell : record.result["cells"]) rows.push_back(flatten(cell));
    } else {
        rows.push_back(flatten(record.result));
    }
    return rows;
}

std::string render(const OutputRecord& record, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::json: {
            Json j{{"schema_version", kSchemaVersion},
                   {"command", record.command},
                   {"inputs", record.inputs},
                   {"result", record.result}};
            os << j.dump(2) << '\n';
            break;
        }
        case Format::tsv: {
            const auto rows = tsv_rows(record);
            if (rows.empty() || rows.front().empty()) break;
            for (std::size_t i = 0; i < rows.front().size(); ++i) {
                os << (i ? "\t" : "") << rows.front()[i].first;
            }
            os << '\n';
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i].second;
                os << '\n';
            }
            break;
        }
        case Format::text: {
            os << record.command;
            for (const auto& [key, value] : flatten(record.inputs)) os << ' ' << key << '=' << value;
            os << '\n';
            if (has_cells(record.result)) {
                for (const auto& cell : record.result["cells"]) {
                    bool first = true;
                    for (const auto& [key, value] : flatten(cell)) {
                        os << (first ? "" : " ") << key << '=' << value;
                        first = false;
                    }
                    os << '\n';
                }
                Json rest = record.result;
                rest.erase("cells");
                for (const auto& [key, value] : flatten(rest)) os << key << ": " << value << '\n';
            } else {
                for (const auto& [key, value] : flatten(record.result)) os << key << ": " << value << '\n';
            }
            break;
        }
    }
    return os.str();
}

}  // namespace niven::cli
