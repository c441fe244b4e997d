#include "hypeval_cli/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "hypeval/errors.hpp"

namespace hypeval::cli {

bool Report::passed() const
{
    return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
}

std::size_t Report::count(CheckStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

CheckRecord exact_record(std::string name, const RatFunc& diff)
{
    CheckRecord r{std::move(name), CheckKind::exact, CheckStatus::pass, "exact-zero"};
    if (!diff.is_zero()) {
        r.status = CheckStatus::fail;
        r.residual = diff.to_string();
    }
    return r;
}

std::string_view kind_name(CheckKind k) { return k == CheckKind::exact ? "exact" : "numeric"; }

std::string_view status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
    }
    return "?";
}

namespace {

std::string format_ms(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

}  // namespace

std::string to_json(const Report& r, bool timing)
{
    Json j;
    j["schema"] = 1;
    j["command"] = r.command;
    j["parameters"] = r.parameters;
    if (!r.result.is_null()) j["result"] = r.result;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["kind"] = kind_name(c.kind);
        e["status"] = status_name(c.status);
        e["residual"] = c.residual;
        if (!c.tolerance.empty()) e["tolerance"] = c.tolerance;
        if (!c.detail.empty()) e["detail"] = c.detail;
        if (timing) e["runtime_ms"] = format_ms(c.runtime_ms);
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"total", r.checks.size()},
                    {"passed", r.count(CheckStatus::pass)},
                    {"failed", r.count(CheckStatus::fail)},
                    {"skipped", r.count(CheckStatus::skip)}};
    j["status"] = r.passed() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string to_text(const Report& r, bool timing)
{
    std::ostringstream os;
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (r.result.is_object()) {
        for (const auto& [k, v] : r.result.items())
            if (!v.is_structured()) os << k << " = " << scalar(v) << "\n";
        // arrays of objects print one line per element
        for (const auto& [k, v] : r.result.items()) {
            if (!v.is_array()) continue;
            for (const auto& row : v) {
                if (!row.is_object()) continue;
                std::string line;
                for (const auto& [rk, rv] : row.items()) {
                    if (!line.empty()) line += "  ";
                    line += rk + "=" + scalar(rv);
                }
                os << line << "\n";
            }
        }
    }
    for (const auto& c : r.checks) {
        std::string tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIP";
        os << tag << "  " << c.name << "  residual=" << c.residual;
        if (!c.tolerance.empty()) os << " tol=" << c.tolerance;
        if (timing) os << " (" << format_ms(c.runtime_ms) << " ms)";
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    if (!r.checks.empty())
        os << r.checks.size() << " checks, " << r.count(CheckStatus::pass) << " passed, "
           << r.count(CheckStatus::fail) << " failed, " << r.count(CheckStatus::skip) << " skipped: "
           << (r.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::vector<CheckRecord> run_items(const std::vector<WorkItem>& items, unsigned threads)
{
    std::vector<std::vector<CheckRecord>> out(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            auto t0 = std::chrono::steady_clock::now();
            try {
                out[i] = items[i].run();
            } catch (const std::exception& e) {
                out[i] = {CheckRecord{items[i].name, CheckKind::numeric, CheckStatus::fail, "error", {}, describe(e)}};
            }
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            for (auto& r : out[i]) r.runtime_ms = ms / static_cast<double>(out[i].size());
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(items.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<CheckRecord> flat;
    for (auto& v : out)
        for (auto& r : v) flat.push_back(std::move(r));
    return flat;
}

std::string describe(const std::exception& e)
{
    const char* label = "error";
    if (dynamic_cast<const ParseError*>(&e)) label = "ParseError";
    else if (dynamic_cast<const DivisionByZero*>(&e)) label = "DivisionByZero";
    else if (dynamic_cast<const PoleAtPoint*>(&e)) label = "PoleAtPoint";
    else if (dynamic_cast<const NonTerminating*>(&e)) label = "NonTerminating";
    else if (dynamic_cast<const IllDefined*>(&e)) label = "IllDefined";
    else if (dynamic_cast<const NoConvergence*>(&e)) label = "NoConvergence";
    else if (dynamic_cast<const InvalidLowerParameter*>(&e)) label = "InvalidLowerParameter";
    else if (dynamic_cast<const VariantOutOfRange*>(&e)) label = "VariantOutOfRange";
    else if (dynamic_cast<const InvalidShape*>(&e)) label = "InvalidShape";
    else if (dynamic_cast<const SingularOrbit*>(&e)) label = "SingularOrbit";
    else if (dynamic_cast<const DomainError*>(&e)) label = "DomainError";
    return std::string(label) + ": " + e.what();
}

}  // namespace hypeval::cli
