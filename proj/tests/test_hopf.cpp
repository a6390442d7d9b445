#include <gtest/gtest.h>

#include "qbundle/qbundle.hpp"

using namespace qb;

namespace {

ParamScalar Nu() { return ParamScalar::param("nu"); }

struct U1 {
  std::shared_ptr<HopfAlgebra> A = std::make_shared<HopfAlgebra>(u1_hopf());
  NCPoly r = parse_expression("alpha + nu*alphas - (1+nu)", *A->H);
  PresPtr omega = u1_universal_calculus(A->H, "Omega(P(U(1)))");
  CovariantCalculus C = covariant_calculus(*A, {r}, omega, {"alpha*dalpha - nu^-1*dalpha*alpha"}, "Gamma(P(U(1)))");
};

// (nu^k - 1)/(nu - 1), the value forced by h - e(h) = X(h)(alpha - 1) mod R on alpha^k.
ParamScalar x_closed_form(int k) {
  ParamScalar nk(1);
  for (int i = 0; i < std::abs(k); ++i) nk *= k > 0 ? Nu() : Nu().inverse();
  return (nk - 1) / (Nu() - 1);
}

}  // namespace

TEST(Hopf, U1AxiomsOnGroupLikes) {
  U1 u;
  auto rep = check_hopf_axioms(*u.A, group_samples(*u.A->H, 5));
  for (const auto& c : rep.checks) EXPECT_EQ(c.status, Status::pass) << c.name << ": " << c.residue;
  EXPECT_EQ(rep.find("hopf.coassociativity")->samples, 11u);
}

TEST(Hopf, WrongAntipodeFails) {
  auto A = make_hopf(u1_algebra(), {{"alpha", "alpha*alpha_2"}, {"alphas", "alphas*alphas_2"}},
                     {{"alpha", "1"}, {"alphas", "1"}}, {{"alpha", "alpha"}, {"alphas", "alphas"}});
  auto rep = check_hopf_axioms(A, group_samples(*A.H, 2));
  EXPECT_EQ(rep.find("hopf.antipode")->status, Status::fail);
  EXPECT_EQ(rep.find("hopf.coassociativity")->status, Status::pass);
}

TEST(Hopf, CovariantCalculusRelations) {
  U1 u;
  const auto& G = *u.C.gamma;
  auto nf = [&](const std::string& s) { return normal_form(parse_expression(s, G), G); };
  // eta(r) = alphas dalpha + nu alpha dalphas and dalphas = -alphas dalpha alphas,
  // so alphas dalpha = nu dalpha alphas.
  EXPECT_EQ(nf("alphas*dalpha"), nf("nu*dalpha*alphas"));
  EXPECT_EQ(nf("alpha*dalpha"), nf("nu^-1*dalpha*alpha"));
  EXPECT_EQ(nf("dalphas"), nf("-nu*dalpha*alphas*alphas"));
  EXPECT_TRUE(nf("dalpha*dalpha").is_zero());
  EXPECT_TRUE(u.C.eta(u.r).is_zero());
}

TEST(Hopf, EtaReconstruction) {
  U1 u;
  auto rep = check_eta_reconstruction(u.C, group_samples(*u.A->H, 5));
  for (const auto& c : rep.checks) {
    EXPECT_EQ(c.status, Status::pass) << c.name << ": " << c.residue;
    EXPECT_EQ(c.samples, 11u);
  }
}

TEST(Hopf, CalculusCoactionIsAnAlgebraMap) {
  U1 u;
  EXPECT_EQ(check_morphism(u.C.coaction).status, Status::pass);
  EXPECT_TRUE(check_local_confluence(*u.C.gamma).ok());
}

TEST(Hopf, FunctionalMatchesRightIdealCongruence) {
  U1 u;
  FunctionalPair X = functionals_for_u1(*u.A, {u.r});
  const Presentation& H = *u.A->H;
  EXPECT_EQ(X.X(parse_expression("alpha", H)), ParamScalar(1));
  EXPECT_EQ(X.X(parse_expression("alphas", H)), -Nu().inverse());
  EXPECT_EQ(X.f(parse_expression("alpha", H)), Nu());
  EXPECT_EQ(X.f(parse_expression("alphas", H)), Nu().inverse());
  EXPECT_TRUE(X.X(NCPoly::scalar(1)).is_zero());
  EXPECT_TRUE(X.X(u.r).is_zero());
  for (int k = -4; k <= 4; ++k) {
    NCPoly h = group_power(H, k);
    EXPECT_EQ(X.X(h), x_closed_form(k)) << k;
    NCPoly rest = h - NCPoly::scalar(1) - x_closed_form(k) * parse_expression("alpha - 1", H);
    EXPECT_TRUE(right_ideal_membership_bounded(rest, {u.r}, H, static_cast<std::size_t>(std::abs(k)) + 2)) << k;
  }
}
