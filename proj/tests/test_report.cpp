#include <gtest/gtest.h>

#include "qbundle/report.hpp"
#include "qbundle/report_json.hpp"

using namespace qb;

namespace {

Report sample() {
  Report r;
  r.notes = {"P(D_p): x*xs ordering assumes p != 0"};
  r.add({"hopf.antipode", "m(S (x) id) Delta = e", Status::pass, "", {}, 11});
  r.add({"transition.phi_inverse", "phi12 phi21 = id", Status::fail, "alpha*alpha - 1", {"n=1"}, 3});
  r.add(skipped("curvature", "curvature targets", "transition functions failed"));
  r.add(vacuous("overlap.gamma_m_collapse", "dalpha = 0", "classical point"));
  return r;
}

}  // namespace

TEST(Report, StatusNamesRoundTrip) {
  for (Status s : {Status::pass, Status::fail, Status::skipped, Status::vacuous})
    EXPECT_EQ(parse_status(status_name(s)), s);
  EXPECT_FALSE(parse_status("ok").has_value());
}

TEST(Report, JsonRoundTrip) {
  Report r = sample();
  auto j = report_to_json(r, {{"command", "test"}}, 0.25);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["summary"]["pass"], 1);
  EXPECT_EQ(j["summary"]["skipped"], 1);
  EXPECT_EQ(j["timing"]["seconds"], 0.25);
  EXPECT_EQ(report_from_json(nlohmann::ordered_json::parse(j.dump())), r);
  EXPECT_FALSE(report_to_json(r).contains("timing"));
}

TEST(Report, RejectsOtherSchemaVersions) {
  auto j = report_to_json(sample());
  j["schema_version"] = kReportSchemaVersion + 1;
  EXPECT_THROW(report_from_json(j), Error);
}

TEST(Report, Counts) {
  Report r = sample();
  EXPECT_FALSE(r.all_passed());
  EXPECT_EQ(r.count(Status::fail), 1u);
  EXPECT_EQ(r.count(Status::vacuous), 1u);
  EXPECT_EQ(r.find("curvature")->status, Status::skipped);
  EXPECT_EQ(r.find("missing"), nullptr);
}
