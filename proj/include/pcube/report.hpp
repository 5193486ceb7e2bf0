#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcube {

enum class Status { pass, fail, skip };

std::string to_string(Status s);
/// Throws std::invalid_argument for anything but "pass", "fail", "skip".
Status status_from_string(const std::string& s);

struct CheckResult {
    std::string graph_id;
    std::string provenance;
    std::string check;
    Status status = Status::pass;
    /// The counterexample for failures, the reason for skips, empty for passes.
    std::string witness;
    double millis = 0.0;

    bool operator==(const CheckResult&) const = default;
};

struct ReportMeta {
    std::size_t max_order = 0;
    std::size_t random_count = 0;
    std::size_t random_min_order = 0;
    std::size_t random_max_order = 0;
    std::uint64_t seed = 0;
    std::string version;

    bool operator==(const ReportMeta&) const = default;
};

struct VerificationReport {
    ReportMeta meta;
    std::vector<CheckResult> results;

    void append(const VerificationReport& other);
    /// Orders results by graph id, then check name.
    void sort();

    std::size_t count(Status s) const;
    std::size_t count(const std::string& check, Status s) const;
    bool passed() const { return count(Status::fail) == 0; }
    std::vector<std::string> checks() const;

    bool operator==(const VerificationReport&) const = default;
};

/// { meta: {...}, results: [{graph_id, provenance, check, status, witness?, millis}] }
std::string report_to_json(const VerificationReport& report, int indent = 2);
VerificationReport report_from_json(const std::string& text);
/// Header "graph_id,provenance,check,status,witness,millis", fields quoted where needed.
std::string report_to_csv(const VerificationReport& report);
/// One line per check: name, pass/fail/skip counts.
std::string report_summary(const VerificationReport& report);

inline constexpr const char* library_version = "1.0.0";

} // namespace pcube
