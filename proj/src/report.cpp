#include "pcube/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace pcube {

using nlohmann::json;

std::string to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
    }
    return "?";
}

Status status_from_string(const std::string& s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "skip") return Status::skip;
    throw std::invalid_argument("unknown status '" + s + "'");
}

void VerificationReport::append(const VerificationReport& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
}

void VerificationReport::sort() {
    std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.graph_id != b.graph_id) return a.graph_id < b.graph_id;
        return a.check < b.check;
    });
}

std::size_t VerificationReport::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [s](const CheckResult& r) { return r.status == s; }));
}

std::size_t VerificationReport::count(const std::string& check, Status s) const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [&](const CheckResult& r) {
        return r.check == check && r.status == s;
    }));
}

std::vector<std::string> VerificationReport::checks() const {
    std::vector<std::string> names;
    for (const auto& r : results)
        if (std::find(names.begin(), names.end(), r.check) == names.end()) names.push_back(r.check);
    return names;
}

std::string report_to_json(const VerificationReport& report, int indent) {
    json doc;
    doc["meta"] = {{"corpus",
                    {{"max_order", report.meta.max_order},
                     {"random_count", report.meta.random_count},
                     {"random_min_order", report.meta.random_min_order},
                     {"random_max_order", report.meta.random_max_order}}},
                   {"seed", report.meta.seed},
                   {"versions", {{"pcube", report.meta.version}}}};
    json results = json::array();
    for (const auto& r : report.results) {
        json entry = {{"graph_id", r.graph_id},
                      {"provenance", r.provenance},
                      {"check", r.check},
                      {"status", to_string(r.status)},
                      {"millis", r.millis}};
        if (!r.witness.empty()) entry["witness"] = r.witness;
        results.push_back(std::move(entry));
    }
    doc["results"] = std::move(results);
    return doc.dump(indent);
}

VerificationReport report_from_json(const std::string& text) {
    const json doc = json::parse(text);
    VerificationReport report;
    const auto& meta = doc.at("meta");
    const auto& corpus = meta.at("corpus");
    report.meta.max_order = corpus.at("max_order").get<std::size_t>();
    report.meta.random_count = corpus.at("random_count").get<std::size_t>();
    report.meta.random_min_order = corpus.at("random_min_order").get<std::size_t>();
    report.meta.random_max_order = corpus.at("random_max_order").get<std::size_t>();
    report.meta.seed = meta.at("seed").get<std::uint64_t>();
    report.meta.version = meta.at("versions").at("pcube").get<std::string>();
    for (const auto& entry : doc.at("results")) {
        CheckResult r;
        r.graph_id = entry.at("graph_id").get<std::string>();
        r.provenance = entry.at("provenance").get<std::string>();
        r.check = entry.at("check").get<std::string>();
        r.status = status_from_string(entry.at("status").get<std::string>());
        r.millis = entry.at("millis").get<double>();
        if (entry.contains("witness")) r.witness = entry.at("witness").get<std::string>();
        report.results.push_back(std::move(r));
    }
    return report;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string report_to_csv(const VerificationReport& report) {
    std::string out = "graph_id,provenance,check,status,witness,millis\n";
    for (const auto& r : report.results) {
        char millis[32];
        std::snprintf(millis, sizeof millis, "%.3f", r.millis);
        out += csv_field(r.graph_id) + "," + csv_field(r.provenance) + "," + csv_field(r.check) + "," +
               to_string(r.status) + "," + csv_field(r.witness) + "," + millis + "\n";
    }
    return out;
}

std::string report_summary(const VerificationReport& report) {
    std::string out;
    for (const auto& name : report.checks()) {
        char line[160];
        std::snprintf(line, sizeof line, "%-28s pass %5zu  fail %5zu  skip %5zu\n", name.c_str(),
                      report.count(name, Status::pass), report.count(name, Status::fail),
                      report.count(name, Status::skip));
        out += line;
    }
    return out;
}

} // namespace pcube
