#ifndef QBUNDLE_PROPERTY_HPP
#define QBUNDLE_PROPERTY_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qbundle/dga.hpp"
#include "qbundle/ideal.hpp"
#include "qbundle/presentation.hpp"
#include "qbundle/report.hpp"

namespace qb {

// Random word of length at most max_len in the free algebra on P's generators.
inline Word random_word(const Presentation& P, std::mt19937& rng, std::size_t max_len) {
  if (P.gens.empty()) return {};
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Gen> gen(0, static_cast<Gen>(P.gens.size() - 1));
  Word w(len(rng));
  for (auto& g : w) g = gen(rng);
  return w;
}

// Small integer combination of random words. With max_degree set, words of
// higher form degree are dropped.
inline NCPoly random_element(const Presentation& P, std::mt19937& rng, std::size_t max_len,
                             int terms = 3, std::optional<int> max_degree = std::nullopt) {
  std::uniform_int_distribution<int> coef(-3, 3);
  NCPoly e;
  for (int t = 0; t < terms; ++t) {
    Word w = random_word(P, rng, max_len);
    if (max_degree && P.word_degree(w) > *max_degree) continue;
    e.add(w, ParamScalar(coef(rng)));
  }
  return e;
}

// nf(nf(a)) = nf(a) and nf(nf(a) nf(b)) = nf(a b) on random elements.
inline CheckRecord check_rewriting_properties(const Presentation& P, std::mt19937& rng, int count,
                                              std::size_t max_len = 4) {
  CheckBuilder b("rewriting." + P.name, "normal form is idempotent and multiplicative");
  for (int i = 0; i < count; ++i) {
    NCPoly a = random_element(P, rng, max_len), c = random_element(P, rng, max_len);
    NCPoly na = normal_form(a, P);
    NCPoly r = normal_form(na, P) - na;
    b.sample(r.is_zero(), to_string(r, P));
    NCPoly m = normal_form(free_product(na, normal_form(c, P)), P) - normal_form(free_product(a, c), P);
    b.sample(m.is_zero(), to_string(m, P));
  }
  return b.done();
}

// Random elements sum c u g v (u, v normal words) of the ideal generated by
// gens modulo P must be found by ideal_membership_bounded and must vanish in
// Q, the quotient by that ideal. Random elements of P are classified the
// same way by both.
inline CheckRecord check_membership_oracle(const Presentation& P, const Presentation& Q,
                                           const std::vector<NCPoly>& gens, std::mt19937& rng, int count,
                                           std::size_t pad = 1) {
  CheckBuilder b("membership." + Q.name, "bounded ideal membership agrees with the quotient normal form");
  if (gens.empty()) {
    b.set_vacuous("no ideal generators");
    return b.done();
  }
  std::size_t glen = 1;
  for (const auto& g : gens) glen = std::max(glen, g.max_length());
  const std::size_t bound = glen + 2 * pad;
  IdealSpan span(P, gens, bound);
  const auto words = normal_words(P, pad);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1), pick_word(0, words.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int i = 0; i < count; ++i) {
    NCPoly e;
    for (int t = 0; t < 2; ++t) {
      NCPoly u = NCPoly::word(words[pick_word(rng)]), v = NCPoly::word(words[pick_word(rng)]);
      e += ParamScalar(coef(rng)) * free_product(free_product(u, gens[pick(rng)]), v);
    }
    NCPoly inQ = normal_form(e, Q);
    b.sample(span.contains(e), "missed ideal element " + to_string(e, P));
    b.sample(inQ.is_zero(), to_string(inQ, Q));
  }
  for (int i = 0; i < count; ++i) {
    NCPoly e = random_element(P, rng, 1, 2);
    const bool member = span.contains(e);
    b.sample(member == normal_form(e, Q).is_zero(), "disagreement on " + to_string(e, P));
  }
  return b.done();
}

// d d = 0 on random elements of form degree at most max_degree.
inline CheckRecord check_d_squared_random(const Presentation& P, std::mt19937& rng, int count,
                                          int max_degree = 3, std::size_t max_len = 4) {
  CheckBuilder b("calculus.d_squared_random." + P.name, "d d = 0 on random elements");
  for (int i = 0; i < count; ++i) {
    NCPoly e = random_element(P, rng, max_len, 3, max_degree);
    NCPoly r = differentiate(differentiate(e, P), P);
    b.sample(r.is_zero(), to_string(r, P));
  }
  return b.done();
}

}  // namespace qb

#endif
