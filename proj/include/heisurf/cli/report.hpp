#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "heisurf/errors.hpp"

namespace heisurf {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kVersion = "1.0.0";

enum class CheckStatus { pass, fail, skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "fail";
}

inline CheckStatus status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skipped") return CheckStatus::skipped;
  throw Error("unknown check status '" + s + "'");
}

struct CheckResult {
  std::string id;
  std::string paper_anchor;
  CheckStatus status = CheckStatus::fail;
  std::optional<std::string> expected;
  std::optional<std::string> actual;
  std::int64_t elapsed_ms = 0;
  std::string note;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  std::string version = kVersion;

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }
  int exit_code() const { return count(CheckStatus::fail) == 0 ? 0 : 1; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// JSON form; nlohmann::json objects keep keys sorted. elapsed_ms is only
/// written with timings = true so that default output is reproducible.
inline nlohmann::json to_json(const VerificationReport& r, bool timings = false) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j;
    j["id"] = c.id;
    j["paper_anchor"] = c.paper_anchor;
    j["status"] = to_string(c.status);
    j["expected"] = c.expected ? nlohmann::json(*c.expected) : nlohmann::json(nullptr);
    j["actual"] = c.actual ? nlohmann::json(*c.actual) : nlohmann::json(nullptr);
    if (!c.note.empty()) j["note"] = c.note;
    if (timings) j["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(j));
  }
  nlohmann::json out;
  out["schema"] = kReportSchema;
  out["checks"] = std::move(checks);
  out["suite"] = {{"seed", r.seed}, {"prime", r.prime}, {"version", r.version}};
  out["summary"] = {{"pass", r.count(CheckStatus::pass)},
                    {"fail", r.count(CheckStatus::fail)},
                    {"skipped", r.count(CheckStatus::skipped)}};
  return out;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  if (j.value("schema", 0) != kReportSchema) throw Error("unsupported report schema");
  VerificationReport r;
  const auto& suite = j.at("suite");
  r.seed = suite.at("seed").get<std::uint64_t>();
  r.prime = suite.at("prime").get<std::uint64_t>();
  r.version = suite.at("version").get<std::string>();
  for (const auto& c : j.at("checks")) {
    CheckResult cr;
    cr.id = c.at("id").get<std::string>();
    cr.paper_anchor = c.at("paper_anchor").get<std::string>();
    cr.status = status_from_string(c.at("status").get<std::string>());
    if (!c.at("expected").is_null()) cr.expected = c.at("expected").get<std::string>();
    if (!c.at("actual").is_null()) cr.actual = c.at("actual").get<std::string>();
    cr.note = c.value("note", "");
    cr.elapsed_ms = c.value("elapsed_ms", std::int64_t{0});
    r.checks.push_back(std::move(cr));
  }
  return r;
}

inline std::string report_json_text(const VerificationReport& r, bool timings = false) {
  return to_json(r, timings).dump(2) + "\n";
}

/// One line per check: "PASS id [anchor]", then a summary line.
inline void emit_text(const VerificationReport& r, std::ostream& os, bool timings = false) {
  for (const auto& c : r.checks) {
    std::string tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIP";
    os << tag << " " << c.id << " [" << c.paper_anchor << "]";
    if (timings) os << " (" << c.elapsed_ms << " ms)";
    os << "\n";
    if (c.status != CheckStatus::pass) {
      if (c.expected) os << "    expected: " << *c.expected << "\n";
      if (c.actual) os << "    actual:   " << *c.actual << "\n";
    }
    if (!c.note.empty()) os << "    note: " << c.note << "\n";
  }
}

inline void emit_summary(const VerificationReport& r, std::ostream& os) {
  os << r.checks.size() << " checks: " << r.count(CheckStatus::pass) << " passed, " << r.count(CheckStatus::fail)
     << " failed, " << r.count(CheckStatus::skipped) << " skipped\n";
}

/// Writes the JSON report to path ("-" for stdout); IoError when unwritable.
inline void emit_json(const VerificationReport& r, const std::string& path, bool timings = false) {
  std::string text = report_json_text(r, timings);
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("write failed for " + path);
}

}  // namespace heisurf
