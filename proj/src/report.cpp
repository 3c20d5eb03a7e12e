#include "qseries/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qseries {

namespace {

using nlohmann::ordered_json;

std::string counterexample_text(const VerificationReport& r) {
    if (!r.counterexample_n) return "-";
    return "n=" + std::to_string(*r.counterexample_n) + " (" + std::to_string(*r.lhs) + " vs " +
           std::to_string(*r.rhs) + ")";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "skipped") return Verdict::skipped;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

}  // namespace

std::string to_json_line(const VerificationReport& r) {
    ordered_json j;
    j["id"] = r.id;
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    j["params"] = params;
    j["argument"] = r.argument;
    j["n_max"] = r.n_max;
    j["verdict"] = to_string(r.verdict);
    j["counterexample_n"] = r.counterexample_n ? ordered_json(*r.counterexample_n) : ordered_json(nullptr);
    j["lhs"] = r.lhs ? ordered_json(*r.lhs) : ordered_json(nullptr);
    j["rhs"] = r.rhs ? ordered_json(*r.rhs) : ordered_json(nullptr);
    j["reason"] = r.reason;
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.elapsed_ms);
    j["elapsed_ms"] = std::stod(ms);
    return j.dump();
}

VerificationReport report_from_json_line(const std::string& line) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("report line: ") + e.what());
    }
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    for (const auto& [name, value] : j.at("params").items()) r.params.emplace_back(name, value.get<long>());
    r.argument = j.value("argument", std::string());
    r.n_max = j.at("n_max").get<std::size_t>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    if (!j.at("counterexample_n").is_null()) r.counterexample_n = j["counterexample_n"].get<std::size_t>();
    if (!j.at("lhs").is_null()) r.lhs = j["lhs"].get<std::uint64_t>();
    if (!j.at("rhs").is_null()) r.rhs = j["rhs"].get<std::uint64_t>();
    r.reason = j.value("reason", std::string());
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    return r;
}

std::string format_table(std::span<const VerificationReport> reports) {
    std::size_t id_w = 2, params_w = 6, arg_w = 8;
    for (const auto& r : reports) {
        id_w = std::max(id_w, r.id.size());
        params_w = std::max(params_w, to_string(r.params).size());
        arg_w = std::max(arg_w, r.argument.size());
    }
    std::ostringstream out;
    char line[512];
    auto row = [&](const std::string& id, const std::string& params, const std::string& arg, const std::string& n,
                   const std::string& verdict, const std::string& detail, const std::string& ms) {
        std::snprintf(line, sizeof line, "%-*s  %-*s  %-*s  %6s  %-7s  %9s  %s\n", static_cast<int>(id_w), id.c_str(),
                      static_cast<int>(params_w), params.c_str(), static_cast<int>(arg_w), arg.c_str(), n.c_str(),
                      verdict.c_str(), ms.c_str(), detail.c_str());
        out << line;
    };
    row("id", "params", "argument", "n_max", "verdict", "detail", "ms");
    for (const auto& r : reports) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.1f", r.elapsed_ms);
        const std::string detail = r.verdict == Verdict::skipped ? r.reason : counterexample_text(r);
        row(r.id, to_string(r.params), r.argument.empty() ? "-" : r.argument, std::to_string(r.n_max),
            to_string(r.verdict), detail, ms);
    }
    return out.str();
}

ReportSummary summarize(std::span<const VerificationReport> reports) {
    ReportSummary s;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case Verdict::pass:
                ++s.passed;
                break;
            case Verdict::fail:
                ++s.failed;
                if (!s.first_failure) s.first_failure = r.id;
                break;
            case Verdict::skipped:
                ++s.skipped;
                break;
        }
    }
    return s;
}

std::string to_string(const ReportSummary& s) {
    std::string out = std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed, " +
                      std::to_string(s.skipped) + " skipped";
    if (s.first_failure) out += "; first failure: " + *s.first_failure;
    return out;
}

}  // namespace qseries
