#include <gtest/gtest.h>

#include "qbundle/qbundle.hpp"
#include "qbundle/report_json.hpp"

using namespace qb;

namespace {

Report run(const std::string& params = "symbolic", int n = 1, int K = 4) {
  MonopoleConfig cfg;
  cfg.params = parse_param_list(params);
  cfg.n = n;
  cfg.degree_bound = K;
  return verify_all(*build_scenario(cfg));
}

void expect_no_fail(const Report& rep) {
  for (const auto& c : rep.checks) EXPECT_NE(c.status, Status::fail) << c.name << ": " << c.residue;
}

}  // namespace

TEST(Monopole, SymbolicRunPasses) {
  Report rep = run();
  expect_no_fail(rep);
  EXPECT_EQ(rep.count(Status::skipped), 0u);
  EXPECT_EQ(rep.find("curvature.F1(alpha)")->status, Status::pass);
  EXPECT_EQ(rep.find("classical.F1(alpha)")->status, Status::pass);
  EXPECT_EQ(rep.find("bundle.coinvariants.length4")->notes.at(0), "dimension 21");
}

TEST(Monopole, ReportsAreDeterministic) {
  Report a = run(), b = run();
  EXPECT_EQ(a, b);
  EXPECT_EQ(report_to_json(a).dump(), report_to_json(b).dump());
}

TEST(Monopole, SpecializedParameters) {
  Report rep = run("p=1/2,q=1/3,nu=1/5");
  expect_no_fail(rep);
  EXPECT_EQ(rep.find("classical")->status, Status::skipped);
  EXPECT_EQ(rep.find("curvature.F2(alpha)")->status, Status::pass);
}

TEST(Monopole, ParameterValidation) {
  EXPECT_THROW(run("p=0"), ConstructionError);
  EXPECT_THROW(run("q=3/2"), ConstructionError);
  EXPECT_THROW(run("nu=-1"), ConstructionError);
  EXPECT_THROW(run("mu=1/2"), ConstructionError);
  EXPECT_THROW(run("p=1/2,q"), ConstructionError);
}

TEST(Monopole, HigherWindings) {
  for (int n = 2; n <= 3; ++n) {
    Report rep = run("symbolic", n, 3);
    expect_no_fail(rep);
    EXPECT_EQ(rep.find("curvature")->status, Status::skipped) << n;
    EXPECT_EQ(rep.find("bundle.generators")->status, Status::pass) << n;
  }
}

TEST(Monopole, DegreeBoundZeroSkipsDownstream) {
  Report rep = run("symbolic", 1, 0);
  expect_no_fail(rep);
  EXPECT_EQ(rep.find("bundle.coinvariants.length0")->status, Status::pass);
  EXPECT_EQ(rep.find("connection")->status, Status::skipped);
}

TEST(Monopole, ClassicalPoint) {
  Report rep = run("p=1,q=1,nu=1");
  EXPECT_EQ(rep.find("overlap.gamma_m_collapse")->status, Status::vacuous);
  EXPECT_EQ(rep.find("classical.F1(alpha)")->status, Status::pass);
  expect_no_fail(rep);
}

TEST(Monopole, CorruptTransitionFailsAndSkips) {
  MonopoleConfig cfg;
  cfg.corrupt_tau21 = true;
  Report rep = verify_all(*build_scenario(cfg));
  EXPECT_FALSE(rep.all_passed());
  EXPECT_EQ(rep.find("transition.convolution_inverse")->status, Status::fail);
  EXPECT_EQ(rep.find("curvature")->status, Status::skipped);
}
