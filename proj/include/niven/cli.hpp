#pragma once

#include "niven/digits.hpp"
#include "niven/oracle.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace niven::cli {

inline constexpr const char* kSchemaVersion = "1";

enum class ExitCode : int { ok = 0, check_failed = 1, usage = 2, cap_exceeded = 3 };

enum class Format { text, json, tsv };

using Json = nlohmann::ordered_json;

/// One command's output. Big integers are decimal strings throughout.
struct OutputRecord {
    std::string command;
    Json inputs = Json::object();
    Json result = Json::object();
};

Json to_json(const DigitString& s);
Json to_json(const oracle::VerificationReport& r, bool with_digits, bool with_timing);

/// Dotted-key view of a JSON value; scalar arrays are joined with ','.
std::vector<std::pair<std::string, std::string>> flatten(const Json& value);

/// Grid-style results (a "cells" array) give one row per cell, anything else one row.
std::vector<std::vector<std::pair<std::string, std::string>>> tsv_rows(const OutputRecord& record);

std::string render(const OutputRecord& record, Format format);

/// Parses and runs one command line (argv[0] is the program name).
/// Reads NIVEN_DIGIT_CAP from the environment.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace niven::cli
