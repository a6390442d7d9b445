#ifndef QBUNDLE_REPORT_JSON_HPP
#define QBUNDLE_REPORT_JSON_HPP

#include <json.hpp>

#include <string>

#include "qbundle/error.hpp"
#include "qbundle/report.hpp"

namespace qb {

inline constexpr int kReportSchemaVersion = 1;

inline void to_json(nlohmann::ordered_json& j, const CheckRecord& c) {
  j = nlohmann::ordered_json{{"name", c.name},
                             {"anchor", c.anchor},
                             {"status", status_name(c.status)},
                             {"samples", c.samples},
                             {"residue", c.residue},
                             {"notes", c.notes}};
}

inline void from_json(const nlohmann::ordered_json& j, CheckRecord& c) {
  c.name = j.at("name").get<std::string>();
  c.anchor = j.at("anchor").get<std::string>();
  auto st = parse_status(j.at("status").get<std::string>());
  if (!st) throw Error("unknown check status " + j.at("status").dump());
  c.status = *st;
  c.samples = j.at("samples").get<std::size_t>();
  c.residue = j.at("residue").get<std::string>();
  c.notes = j.at("notes").get<std::vector<std::string>>();
}

// Everything except "timing" is a deterministic function of the invocation.
inline nlohmann::ordered_json report_to_json(const Report& r, const nlohmann::ordered_json& header = {},
                                             double seconds = -1) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  if (!header.is_null()) j["run"] = header;
  j["status"] = r.all_passed() ? "pass" : "fail";
  j["summary"] = {{"pass", r.count(Status::pass)},
                  {"fail", r.count(Status::fail)},
                  {"skipped", r.count(Status::skipped)},
                  {"vacuous", r.count(Status::vacuous)}};
  j["checks"] = r.checks;
  j["notes"] = r.notes;
  if (seconds >= 0) j["timing"] = {{"seconds", seconds}};
  return j;
}

inline Report report_from_json(const nlohmann::ordered_json& j) {
  if (j.value("schema_version", 0) != kReportSchemaVersion)
    throw Error("unsupported report schema version");
  Report r;
  r.checks = j.at("checks").get<std::vector<CheckRecord>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace qb

#endif
