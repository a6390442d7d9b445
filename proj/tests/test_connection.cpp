#include <gtest/gtest.h>

#include "qbundle/qbundle.hpp"

using namespace qb;

namespace {

std::shared_ptr<MonopoleScenario> monopole() { return build_scenario({}); }

ParamScalar c_k(int k, const ParamScalar& nu) {
  ParamScalar nk(1);
  for (int i = 0; i < std::abs(k); ++i) nk *= k > 0 ? nu : nu.inverse();
  return (nk - 1) / (nu - 1);
}

NCPoly in(const std::string& t, const Presentation& P) { return normal_form(parse_expression(t, P), P); }

// D_r with the extra sign (-1)^{n+1} on the A term, i.e. the left-handed sign
// pattern glued onto the right-handed ordering.
NCPoly display_variant(const MonopoleScenario& s, const NCPoly& e, int i) {
  const BundleCalculus& bc = s.bc;
  const Presentation& B = *bc.chart(i).base;
  NCPoly out = covariant_derivative(bc, s.conn_right, e, i);
  for (const auto& t : chart_terms(bc, i, e)) {
    if (B.word_degree(t.base) % 2 == 0) continue;
    for (const auto& sw : bc.hopf->sweedler1(fibre_to_h(bc, t.fibre))) {
      NCPoly a = A_of(bc, s.conn_right, NCPoly::word(sw.legs[0]), i);
      out += (ParamScalar(2) * t.coeff * sw.coeff) *
             horizontal(bc, i, mul(a, NCPoly::word(t.base), B), NCPoly::word(sw.legs[1]));
    }
  }
  return normal_form(out, *bc.chart(i).total);
}

}  // namespace

TEST(Connection, ConnectionOneFormsFromFunctional) {
  auto s = monopole();
  const Presentation& H = *s->hopf->H;
  for (int k = -3; k <= 3; ++k) {
    const ParamScalar c = c_k(k, s->nu);
    EXPECT_EQ(A_of(s->bc, s->conn, group_power(H, k), 0), c * in("1/4*(x*dxs - xs*dx)", *s->Gp)) << k;
    EXPECT_EQ(A_of(s->bc, s->conn, group_power(H, k), 1), c * in("1/4*(ys*dy - y*dys)", *s->Gq)) << k;
  }
}

TEST(Connection, CurvatureOnGroupLikes) {
  auto s = monopole();
  const Presentation& H = *s->hopf->H;
  // F(g) = c dw + c^2 w w for group-like g with A(g) = c w. In Gamma(P(D_p)):
  //   d(x dxs - xs dx) = dx dxs - dxs dx = (1 + p) dx dxs
  //   (x dxs - xs dx)^2 = -x dxs xs dx - xs dx x dxs = (x xs - p xs x) dx dxs
  // using dxs xs = p^-1 xs dxs, dx x = p x dx and dxs dx = -p dx dxs. The q
  // chart is the mirror image with d(ys dy - y dys) = -(1 + q) dy dys.
  const NCPoly dw1 = in("(1+p)*dx*dxs", *s->Gp), ww1 = in("(x*xs - p*xs*x)*dx*dxs", *s->Gp);
  const NCPoly dw2 = in("-(1+q)*dy*dys", *s->Gq), ww2 = in("(y*ys - q*ys*y)*dy*dys", *s->Gq);
  EXPECT_EQ(in("(x*dxs - xs*dx)*(x*dxs - xs*dx)", *s->Gp), ww1);
  EXPECT_EQ(in("(ys*dy - y*dys)*(ys*dy - y*dys)", *s->Gq), ww2);
  for (int k = -3; k <= 3; ++k) {
    const ParamScalar c = c_k(k, s->nu);
    const ParamScalar a = c / 4, b = c * c / 16;
    EXPECT_EQ(curvature_F(s->bc, s->conn, group_power(H, k), 0), normal_form(a * dw1 + b * ww1, *s->Gp)) << k;
    EXPECT_EQ(curvature_F(s->bc, s->conn, group_power(H, k), 1), normal_form(a * dw2 + b * ww2, *s->Gq)) << k;
  }
  for (const auto& c : verify_monopole_curvature(*s).checks)
    EXPECT_EQ(c.status, Status::pass) << c.name << ": " << c.residue;
}

TEST(Connection, StructureEquation) {
  auto s = monopole();
  auto samples = structure_samples(*s, 3);
  EXPECT_GE(samples.size(), 24u);
  for (const Connection* c : {&s->conn, &s->conn_right}) {
    auto rec = check_structure_equation(s->bc, *c, samples);
    EXPECT_EQ(rec.status, Status::pass) << rec.name << ": " << rec.residue;
    EXPECT_EQ(rec.samples, samples.size());
  }
  auto forms = check_curvature_forms(s->bc, s->conn, group_samples(*s->hopf->H, 3));
  EXPECT_EQ(forms.status, Status::pass) << forms.residue;
}

TEST(Connection, RightHandedChecksPass) {
  auto s = monopole();
  auto samples = group_samples(*s->hopf->H, 3);
  for (const Connection* c : {&s->conn, &s->conn_right}) {
    auto rep = check_connection(s->bc, *c, {s->r}, samples);
    for (const auto& rec : rep.checks) EXPECT_NE(rec.status, Status::fail) << rec.name << ": " << rec.residue;
  }
  EXPECT_EQ(check_curvature_forms(s->bc, s->conn_right, samples).status, Status::pass);
}

TEST(Connection, DisplayedRightDerivativeBreaksStructureEquation) {
  auto s = monopole();
  const Presentation& H = *s->hopf->H;
  // On x (x) alpha the first derivative has odd degree, so the variant picks
  // up 2 A(alpha)(dx - A(alpha) x) (x) alpha on the second application.
  NCPoly e = horizontal(s->bc, 0, in("x", *s->Gp), group_power(H, 1));
  EXPECT_TRUE(structure_equation_residue(s->bc, s->conn_right, e, 0).is_zero());
  NCPoly once = display_variant(*s, e, 0);
  EXPECT_EQ(once, covariant_derivative(s->bc, s->conn_right, e, 0));
  NCPoly twice = display_variant(*s, once, 0);
  NCPoly diff = normal_form(twice - covariant_derivative(s->bc, s->conn_right, once, 0), *s->bc.chart(0).total);
  EXPECT_FALSE(diff.is_zero());
}

TEST(Connection, FlatConnectionDiffersByTheMonopoleForm) {
  auto s = monopole();
  auto cs = covariant_samples(*s, 2);
  const Connection flat = flat_connection(Hand::left);
  auto rep = check_difference_map(s->bc, s->conn, flat, structure_samples(*s, 2), cs.base_forms);
  for (const auto& rec : rep.checks) EXPECT_NE(rec.status, Status::fail) << rec.name << ": " << rec.residue;
  // On degree 0 the two derivatives differ by -x A(alpha) (x) alpha.
  const NCPoly a = group_power(*s->hopf->H, 1);
  const NCPoly e = horizontal(s->bc, 0, in("x", *s->Gp), a);
  const NCPoly want = horizontal(s->bc, 0, in("-1/4*x*(x*dxs - xs*dx)", *s->Gp), a);
  EXPECT_EQ(covariant_derivative(s->bc, s->conn, e, 0) - covariant_derivative(s->bc, flat, e, 0),
            normal_form(want, *s->bc.chart(0).total));
}
