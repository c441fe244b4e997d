#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypeval/ratfunc.hpp"

namespace hypeval::cli {

using Json = nlohmann::ordered_json;

enum class CheckKind { exact, numeric };
enum class CheckStatus { pass, fail, skip };

struct CheckRecord {
    std::string name;
    CheckKind kind = CheckKind::exact;
    CheckStatus status = CheckStatus::pass;
    // "exact-zero" for a passing exact check, the offending value for a
    // failing one, a decimal residual for numeric checks.
    std::string residual;
    std::string tolerance;  // numeric only
    std::string detail;     // error text or skip reason
    double runtime_ms = 0;
};

struct Report {
    std::string command;
    Json parameters = Json::object();
    Json result;  // null when the command only runs checks
    std::vector<CheckRecord> checks;

    // Skipped records carry a reason and do not fail the report.
    bool passed() const;
    std::size_t count(CheckStatus s) const;
};

std::string to_json(const Report& r, bool timing);
std::string to_text(const Report& r, bool timing);

// Passes with residual "exact-zero" when `diff` is the zero function,
// otherwise fails and shows it.
CheckRecord exact_record(std::string name, const RatFunc& diff);

std::string_view kind_name(CheckKind k);
std::string_view status_name(CheckStatus s);

// A unit of sweep work producing one or more records.
struct WorkItem {
    std::string name;  // used for the failed record if `run` throws
    std::function<std::vector<CheckRecord>()> run;
};

// Runs every item, `threads` at a time (0: hardware concurrency), and
// returns the records in item order. An exception escaping an item turns
// into one failed record with the error text as detail.
std::vector<CheckRecord> run_items(const std::vector<WorkItem>& items, unsigned threads);

// "PoleAtPoint: <what>" for library errors, "error: <what>" otherwise.
std::string describe(const std::exception& e);

}  // namespace hypeval::cli
