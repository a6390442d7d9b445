#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qbundle/qbundle.hpp"

using namespace qb;

namespace {

PresPtr disc() { return disc_algebra("x", ParamScalar::param("p"), "P(D_p)"); }

// Rewrites a randomly chosen redex of a randomly chosen term until nothing
// reduces. Only agrees with normal_form when the system is confluent.
NCPoly random_strategy_nf(const NCPoly& e, const Presentation& P, std::mt19937& rng) {
  NCPoly cur = e;
  for (int guard = 0; guard < 100000; ++guard) {
    std::vector<std::pair<Word, std::vector<std::pair<std::size_t, std::size_t>>>> reducible;
    for (const auto& [w, c] : cur.terms()) {
      std::vector<std::pair<std::size_t, std::size_t>> redexes;
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t r = 0; r < P.rules.size(); ++r) {
          const Word& l = P.rules[r].lhs;
          if (i + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(i)))
            redexes.emplace_back(i, r);
        }
      if (!redexes.empty()) reducible.emplace_back(w, std::move(redexes));
    }
    if (reducible.empty()) return cur;
    auto& [w, rs] = reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng)];
    auto [pos, ri] = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)];
    const ParamScalar c = cur.coeff(w);
    const auto& rule = P.rules[ri];
    NCPoly repl;
    for (const auto& [rw, rc] : rule.rhs.terms()) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
      repl.add(nw, c * rc);
    }
    cur -= NCPoly::word(w, c);
    cur += repl;
  }
  throw std::runtime_error("random strategy did not terminate");
}

}  // namespace

TEST(FreeAlgebra, DiscNormalFormOfXsXsX) {
  auto D = disc();
  NCPoly got = normal_form(parse_expression("xs*xs*x", *D), *D);
  // xs xs x = xs (p x xs + 1 - p) = p (p x xs + 1 - p) xs + (1 - p) xs
  NCPoly want = parse_expression("p^2*x*xs*xs + (1-p^2)*xs", *D);
  EXPECT_EQ(got, want) << to_string(got, *D);
}

TEST(FreeAlgebra, PrintedFormParsesBack) {
  auto D = disc();
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    NCPoly e = normal_form(random_element(*D, rng, 4), *D);
    e = (ParamScalar::param("p") / (ParamScalar(1) + ParamScalar::param("nu"))) * e;
    NCPoly back = parse_expression(to_string(e, *D), *D);
    EXPECT_EQ(normal_form(back, *D), e) << to_string(e, *D);
  }
}

TEST(FreeAlgebra, RandomStrategyAgreesOnConfluentSystems) {
  auto s = build_scenario({});
  std::mt19937 rng(11);
  for (const auto& [name, P] : scenario_presentations(*s)) {
    for (int i = 0; i < 20; ++i) {
      NCPoly e = random_element(*P, rng, 4);
      EXPECT_EQ(random_strategy_nf(e, *P, rng), normal_form(e, *P)) << name << ": " << to_string(e, *P);
    }
  }
}

TEST(FreeAlgebra, ConfluenceCheckerFindsAmbiguity) {
  auto P = std::make_shared<Presentation>();
  P->name = "toy";
  P->gens = {{"x", 0}, {"y", 0}};
  P->finalize();
  // x y x reduces to x x one way and to x the other.
  P->rules.push_back({Word{0, 1}, NCPoly::gen(0)});
  P->rules.push_back({Word{1, 0}, NCPoly::gen(1)});
  P->finalize();
  auto rep = check_local_confluence(*P);
  ASSERT_FALSE(rep.ok());
  bool seen = false;
  for (const auto& cp : rep.unresolved) seen |= cp.word == Word{0, 1, 0};
  EXPECT_TRUE(seen);

  std::mt19937 rng(1);
  NCPoly xyx = NCPoly::word({0, 1, 0});
  std::set<std::string> outcomes;
  for (int i = 0; i < 30; ++i) outcomes.insert(to_string(random_strategy_nf(xyx, *P, rng), *P));
  EXPECT_EQ(outcomes.size(), 2u);
}

TEST(FreeAlgebra, StepLimitRaises) {
  auto P = std::make_shared<Presentation>(*disc());
  P->max_steps = 3;
  EXPECT_THROW(normal_form(parse_expression("xs*xs*xs*x*x*x", *P), *P), RewriteError);
}

TEST(FreeAlgebra, OrientRecordsGenericity) {
  auto P = std::make_shared<Presentation>();
  P->name = "toy";
  P->gens = {{"x", 0}, {"y", 0}};
  P->finalize();
  std::vector<std::string> notes;
  RewriteRule r = orient(parse_relation("(1-p)*y*x = x*y", *P), *P, &notes);
  EXPECT_EQ(r.lhs, (Word{1, 0}));
  ASSERT_EQ(notes.size(), 1u);
  EXPECT_NE(notes[0].find("!= 0"), std::string::npos);
  notes.clear();
  orient(parse_relation("p*y*x = x*y", *P), *P, &notes);
  EXPECT_TRUE(notes.empty()) << "parameters are invertible";
}

TEST(FreeAlgebra, MonomialOrderRespectsWeights) {
  auto P = std::make_shared<Presentation>();
  P->gens = {{"a", 0}, {"b", 0}};
  P->gens[1].weight = 3;
  P->finalize();
  EXPECT_TRUE(P->less(Word{0, 0}, Word{1}));
  EXPECT_TRUE(P->less(Word{1}, Word{0, 0, 0, 0}));
}

TEST(FreeAlgebra, IdealMembershipOnDisc) {
  auto D = disc();
  // xs x - p x xs = 1 - p, so the ideal generated by x contains 1.
  EXPECT_TRUE(ideal_membership_bounded(NCPoly::scalar(1), {parse_expression("x", *D)}, *D, 3));
  // A right ideal generated by x only contains x times something.
  EXPECT_FALSE(right_ideal_membership_bounded(NCPoly::scalar(1), {parse_expression("x", *D)}, *D, 4));
  EXPECT_TRUE(right_ideal_membership_bounded(parse_expression("x*xs*xs", *D), {parse_expression("x", *D)}, *D, 3));
}

TEST(FreeAlgebra, NormalWordsOfDiscArePbwMonomials) {
  auto D = disc();
  for (std::size_t L = 0; L <= 5; ++L) {
    // x^a xs^b with a + b <= L
    EXPECT_EQ(normal_words(*D, L).size(), (L + 1) * (L + 2) / 2) << L;
  }
}

TEST(FreeAlgebra, ParserRejectsMalformedInput) {
  auto D = disc();
  EXPECT_THROW(parse_expression("x**", *D), ParseError);
  EXPECT_THROW(parse_expression("x*z", *D), Error);
  EXPECT_THROW(parse_expression("(x", *D), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), Error);
}

TEST(FreeAlgebra, PresentationFileOverridesParams) {
  const std::string text =
      "[presentation]\nname = D\n[params]\np = 1/2\n[generators]\nx 0\nxs 0\n[relations]\nxs*x = p*x*xs + 1 - p\n";
  auto f = parse_presentation_text(text);
  EXPECT_EQ(to_string(normal_form(parse_expression("xs*x", *f.pres), *f.pres), *f.pres), "(1/2)*x*xs + (1/2)");
  auto g = parse_presentation_text(text, {}, {{"p", ParamScalar(mpq_class(1, 3))}});
  EXPECT_EQ(to_string(normal_form(parse_expression("xs*x", *g.pres), *g.pres), *g.pres), "(1/3)*x*xs + (2/3)");
  EXPECT_THROW(parse_presentation_text("[bogus]\n"), ConstructionError);
}
