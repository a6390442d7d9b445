#include <gtest/gtest.h>

#include "qbundle/qbundle.hpp"

using namespace qb;

namespace {

std::shared_ptr<MonopoleScenario> scenario(int n = 1, bool corrupt = false) {
  MonopoleConfig cfg;
  cfg.n = n;
  cfg.corrupt_tau21 = corrupt;
  return build_scenario(cfg);
}

// (b (x) h) in chart i from text.
NCPoly at(const MonopoleScenario& s, int i, const std::string& b, const std::string& h) {
  const Bundle& B = s.bundle;
  return B.chart_elem(i, parse_expression(b, *B.cov.chart[static_cast<std::size_t>(i)]),
                      parse_expression(h, *s.hopf->H));
}

}  // namespace

TEST(Bundle, TransitionConditionsForSeveralWindings) {
  for (int n = 1; n <= 3; ++n) {
    auto s = scenario(n);
    auto rep = check_transition(s->tr, group_samples(*s->hopf->H, 4));
    rep.add(check_phi_inverse(s->bundle, 4));
    for (const auto& c : rep.checks)
      EXPECT_NE(c.status, Status::fail) << "n=" << n << " " << c.name << ": " << c.residue;
    EXPECT_EQ(rep.find("transition.central")->status, Status::pass);
  }
}

TEST(Bundle, SwappedTransitionIsRejected) {
  auto s = scenario(1, true);
  auto rep = check_transition(s->tr, group_samples(*s->hopf->H, 2));
  EXPECT_EQ(rep.find("transition.convolution_inverse")->status, Status::fail);
  EXPECT_EQ(check_phi_inverse(s->bundle, 2).status, Status::fail);
  EXPECT_FALSE(verify_all(*s).all_passed());
}

TEST(Bundle, GeneratorsGlueAndOthersDoNot) {
  auto s = scenario();
  for (const auto& [name, f] : s->gens) EXPECT_TRUE(is_bundle_element(f, s->bundle)) << name;
  BundleElement fake{{at(*s, 0, "1", "alpha"), at(*s, 1, "1", "alpha")}};
  EXPECT_FALSE(is_bundle_element(fake, s->bundle));
}

TEST(Bundle, ProductsOfGeneratorsByHand) {
  auto s = scenario();
  const auto& g = s->gens;
  // b a = (x (x) alphas)(1 (x) alpha) = x (x) 1 on the p chart and
  // (1 (x) alphas)(y (x) alpha) = y (x) 1 on the q chart.
  BundleElement ba = bundle_mul(g.at("b"), g.at("a"), s->bundle);
  EXPECT_EQ(ba.part[0], normal_form(at(*s, 0, "x", "1"), *s->bundle.chart[0]));
  EXPECT_EQ(ba.part[1], normal_form(at(*s, 1, "y", "1"), *s->bundle.chart[1]));
  BundleElement bbs = bundle_mul(g.at("b"), g.at("bs"), s->bundle);
  EXPECT_EQ(bbs.part[0], normal_form(at(*s, 0, "x*xs", "1"), *s->bundle.chart[0]));
  EXPECT_EQ(bbs.part[1], normal_form(at(*s, 1, "1", "1"), *s->bundle.chart[1]));
  // as a - q a as = 1 - q holds on the q chart through ys y - q y ys = 1 - q.
  BundleElement rel = bundle_mul(g.at("as"), g.at("a"), s->bundle) +
                      (-s->q) * bundle_mul(g.at("a"), g.at("as"), s->bundle);
  rel = normalize(rel, s->bundle);
  EXPECT_EQ(rel.part[0], normal_form(at(*s, 0, "1-q", "1"), *s->bundle.chart[0]));
  EXPECT_EQ(rel.part[1], normal_form(at(*s, 1, "1-q", "1"), *s->bundle.chart[1]));
}

TEST(Bundle, RelationsAndCoaction) {
  auto s = scenario();
  EXPECT_EQ(check_relations_vanish(s->prel, s->chi[0], "p", "").status, Status::pass);
  EXPECT_EQ(check_relations_vanish(s->prel, s->chi[1], "q", "").status, Status::pass);
  EXPECT_EQ(check_bundle_coaction(*s).status, Status::pass);
  EXPECT_EQ(check_iota_products(*s).status, Status::pass);
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(check_relations_vanish(s->base, s->iota.to_chart[i], "base", "").status, Status::pass);
}

TEST(Bundle, NonRelationDoesNotVanish) {
  auto s = scenario();
  // chi_p(b as) = x (x) alphas^2 while chi_p(as bs) = xs (x) 1.
  auto bad = relation_set("P1", {"a", "as", "b", "bs"}, {"b*as = as*bs"});
  std::map<std::string, NCPoly> img;
  for (const char* g : {"a", "as", "b", "bs"}) img[g] = s->chi[0].images[s->prel.free->index(g)];
  auto chi = make_morphism("chi", bad.free, s->bundle.chart[0], img);
  EXPECT_EQ(check_relations_vanish(bad, chi, "bad", "").status, Status::fail);
}

TEST(Bundle, CoinvariantDimensions) {
  auto s = scenario();
  for (std::size_t L = 0; L <= 4; ++L) {
    // Pairs (f, g) of chart words of length <= L agreeing on the circle: both
    // charts have (L+1)(L+2)/2 monomials and the projections hit the 2L+1
    // powers alpha^k, |k| <= L, so the kernel has dimension L^2 + L + 1.
    auto cmp = compare_coinvariants(s->bundle, s->iota, L, {{"f0", 2}});
    EXPECT_EQ(cmp.coinvariant_dim, L * L + L + 1) << L;
    EXPECT_EQ(cmp.iota_dim, cmp.coinvariant_dim) << L;
    EXPECT_TRUE(cmp.iota_inside) << L;
  }
}

TEST(Bundle, OverlapIdealConditionAndCollapse) {
  auto s = scenario();
  EXPECT_EQ(check_jbij(s->tr, {s->r}, 4).status, Status::pass);
  const Presentation& M = *s->bc.gamma_m;
  EXPECT_TRUE(normal_form(NCPoly::gen(M.index("dalpha")), M).is_zero());
  EXPECT_TRUE(normal_form(NCPoly::gen(M.index("dalphas")), M).is_zero());
}

TEST(Bundle, ClassicalOverlapKeepsOneForms) {
  MonopoleConfig cfg;
  cfg.params = parse_param_list("p=1,q=1,nu=1");
  auto s = build_scenario(cfg);
  const Presentation& M = *s->bc.gamma_m;
  EXPECT_FALSE(normal_form(NCPoly::gen(M.index("dalpha")), M).is_zero());
  EXPECT_EQ(check_gamma_m_collapse(*s).status, Status::vacuous);
}
