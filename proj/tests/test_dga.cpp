#include <gtest/gtest.h>

#include <random>

#include "qbundle/qbundle.hpp"

using namespace qb;

namespace {

ParamScalar P() { return ParamScalar::param("p"); }

struct Discs {
  PresPtr Dp = disc_algebra("x", P(), "P(D_p)");
  PresPtr Dq = disc_algebra("y", ParamScalar::param("q"), "P(D_q)");
  PresPtr Gp = disc_calculus(Dp, P(), "Gamma(P(D_p))");
  PresPtr Gq = disc_calculus(Dq, ParamScalar::param("q"), "Gamma(P(D_q))");
};

NCPoly nf(const std::string& s, const Presentation& X) { return normal_form(parse_expression(s, X), X); }

}  // namespace

TEST(Dga, KoszulSignsInSkewTensor) {
  Discs d;
  auto T = skew_tensor(d.Gp, d.Gq);
  EXPECT_EQ(nf("dy*dx", *T), nf("-dx*dy", *T));
  EXPECT_EQ(nf("y*dx", *T), nf("dx*y", *T));
  EXPECT_EQ(nf("dy*x", *T), nf("x*dy", *T));
  EXPECT_EQ(nf("dy*dx*dxs", *T), nf("dx*dxs*dy", *T));
  EXPECT_TRUE(check_local_confluence(*T).ok());
}

TEST(Dga, CollidingNamesGetLegSuffix) {
  auto H = u1_algebra();
  auto T = skew_tensor(H, H);
  EXPECT_TRUE(T->find("alpha_2").has_value());
  EXPECT_TRUE(T->find("alphas_2").has_value());
  EXPECT_EQ(T->gens[T->index("alpha_2")].leg, 1u);
}

TEST(Dga, GradedLeibnizInUniversalCalculus) {
  Discs d;
  auto U = universal_calculus(*d.Dp, "Omega(P(D_p))");
  EXPECT_EQ(differentiate(nf("x*dx", *U), *U), nf("dx*dx", *U));
  EXPECT_EQ(differentiate(nf("dx*x", *U), *U), nf("-dx*dx", *U));
  EXPECT_EQ(differentiate(nf("dx*dxs*x", *U), *U), nf("dx*dxs*dx", *U));
  EXPECT_FALSE(nf("dx*dx", *U).is_zero());
}

TEST(Dga, DiscCalculusRelations) {
  Discs d;
  const auto& G = *d.Gp;
  EXPECT_EQ(nf("x*dx", G), nf("p^-1*dx*x", G));
  EXPECT_EQ(nf("xs*dx", G), nf("p*dx*xs", G));
  // d(xs x - p x xs) = 0 together with the bimodule relations gives dxs dx = -p dx dxs.
  EXPECT_EQ(nf("dxs*dx", G), nf("-p*dx*dxs", G));
  EXPECT_TRUE(nf("dx*dx", G).is_zero());
}

TEST(Dga, DSquaredVanishes) {
  Discs d;
  std::mt19937 rng(5);
  auto U = universal_calculus(*d.Dp, "Omega(P(D_p))");
  auto T = skew_tensor(d.Gp, d.Gq);
  for (const auto* X : {&d.Gp, &U, &T}) {
    EXPECT_EQ(check_d_squared(**X).status, Status::pass) << (*X)->name;
    auto rec = check_d_squared_random(**X, rng, 60);
    EXPECT_EQ(rec.status, Status::pass) << rec.residue;
    EXPECT_GE(rec.samples, 50u);
    EXPECT_EQ(check_differential_compatible(**X).status, Status::pass) << (*X)->name;
  }
}

TEST(Dga, NonClosedIdealIsDetected) {
  Discs d;
  auto U = universal_calculus(*d.Dp, "Omega(P(D_p))");
  auto Q = std::make_shared<Presentation>(*U);
  // Adding x dx = p^-1 dx x without its differential breaks d.
  Q->rules.push_back(orient(parse_relation("x*dx - p^-1*dx*x", *Q), *Q));
  Q->finalize();
  EXPECT_EQ(check_differential_compatible(*Q).status, Status::fail);
}

TEST(Dga, FalseConsequenceIsRejected) {
  Discs d;
  EXPECT_THROW(universal_calculus(*d.Dp, "Omega", {}, {"dx"}), ConstructionError);
}

TEST(Dga, GradedBasisCountsOfDiscCalculus) {
  Discs d;
  for (std::size_t L = 1; L <= 5; ++L) {
    // dx^e1 dxs^e2 x^a xs^b with e1 + e2 = degree and a + b <= L - degree
    EXPECT_EQ(graded_basis(*d.Gp, 0, L).size(), (L + 1) * (L + 2) / 2);
    EXPECT_EQ(graded_basis(*d.Gp, 1, L).size(), L * (L + 1));
    EXPECT_EQ(graded_basis(*d.Gp, 2, L).size(), (L - 1) * L / 2);
    EXPECT_TRUE(graded_basis(*d.Gp, 3, L).empty());
  }
}

TEST(Dga, TensorPowerOfHopfAlgebra) {
  auto H = u1_algebra();
  auto T3 = tensor_power(H, 3);
  EXPECT_EQ(T3->gens.size(), 6u);
  EXPECT_EQ(T3->legs.size(), 3u);
  EXPECT_TRUE(check_local_confluence(*T3).ok());
}
