#ifndef QBUNDLE_DGA_HPP
#define QBUNDLE_DGA_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qbundle/confluence.hpp"
#include "qbundle/ideal.hpp"
#include "qbundle/morphism.hpp"
#include "qbundle/presentation.hpp"
#include "qbundle/report.hpp"

namespace qb {

// Graded Leibniz on words; generators without a differential image go to 0.
inline NCPoly differentiate_free(const NCPoly& e, const Presentation& P) {
  NCPoly out;
  for (const auto& [w, c] : e.terms()) {
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& dg = P.differential[w[i]];
      if (dg && !dg->is_zero()) {
        Word pre(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        Word post(w.begin() + static_cast<std::ptrdiff_t>(i + 1), w.end());
        NCPoly t = free_product(free_product(NCPoly::word(pre), *dg), NCPoly::word(post));
        out += (sign > 0 ? c : -c) * t;
      }
      if (P.gens[w[i]].degree % 2) sign = -sign;
    }
  }
  return out;
}

inline NCPoly differentiate(const NCPoly& e, const Presentation& P) {
  if (!P.has_differential) throw UnsupportedError(P.name + " carries no differential");
  return normal_form(differentiate_free(e, P), P);
}

// Fills images of differential generators with d(image of base).
inline Morphism differential_extension(Morphism m) {
  for (Gen h = 0; h < m.source->gens.size(); ++h) {
    const auto& g = m.source->gens[h];
    if (g.base) m.images[h] = differentiate(m.images[*g.base], *m.target);
  }
  return m;
}

namespace detail {

inline void interreduce(Presentation& Q) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < Q.rules.size() && !changed; ++i) {
      const Word& li = Q.rules[i].lhs;
      for (std::size_t j = 0; j < Q.rules.size(); ++j) {
        if (j == i) continue;
        const Word& lj = Q.rules[j].lhs;
        if (lj.size() > li.size()) continue;
        if (lj.size() == li.size() && j > i) continue;
        bool inside = false;
        for (std::size_t s = 0; s + lj.size() <= li.size() && !inside; ++s)
          inside = std::equal(lj.begin(), lj.end(), li.begin() + static_cast<std::ptrdiff_t>(s));
        if (!inside) continue;
        NCPoly rel = NCPoly::word(li) - Q.rules[i].rhs;
        Q.rules.erase(Q.rules.begin() + static_cast<std::ptrdiff_t>(i));
        Q.finalize();
        rel = normal_form(rel, Q);
        if (!rel.is_zero()) {
          Q.rules.push_back(orient(rel, Q, &Q.notes));
          Q.finalize();
        }
        changed = true;
        break;
      }
    }
  }
  for (auto& r : Q.rules) r.rhs = normal_form(r.rhs, Q);
}

inline void add_relation(Presentation& Q, const NCPoly& rel) {
  NCPoly r = normal_form(rel, Q);
  if (r.is_zero()) return;
  Q.rules.push_back(orient(r, Q, &Q.notes));
  Q.finalize();
  interreduce(Q);
}

}  // namespace detail

inline std::string confluence_failure_text(const ConfluenceReport& rep, const Presentation& P) {
  std::string msg = P.name + " is not confluent; unresolved overlaps:";
  for (std::size_t i = 0; i < rep.unresolved.size() && i < 5; ++i)
    msg += "\n  " + describe(rep.unresolved[i], P);
  return msg;
}

// Adds the ideal generated by `gens` and d(gens) to P. Hand-supplied
// consequences are first confirmed to lie in that ideal (bounded search),
// then added with their differentials. The result must be confluent.
inline PresPtr close_differential_ideal(const Presentation& P, const std::vector<NCPoly>& gens,
                                        const std::vector<NCPoly>& consequences,
                                        const std::string& name) {
  std::vector<NCPoly> all = gens;
  for (const auto& g : gens) all.push_back(differentiate_free(g, P));
  for (const auto& c : consequences) {
    const std::size_t bound = c.max_length() + 2;
    if (!ideal_membership_bounded(c, all, P, bound))
      throw ConstructionError("supplied consequence " + to_string(c, P) +
                              " is not in the generated ideal (length bound " +
                              std::to_string(bound) + ")");
  }
  auto Q = std::make_shared<Presentation>(P);
  Q->name = name;
  for (const auto& g : gens) detail::add_relation(*Q, g);
  for (const auto& c : consequences) detail::add_relation(*Q, c);
  for (const auto& g : gens) detail::add_relation(*Q, differentiate_free(g, P));
  for (const auto& c : consequences) detail::add_relation(*Q, differentiate_free(c, P));
  auto rep = check_local_confluence(*Q);
  if (!rep.ok()) throw ConfluenceError(confluence_failure_text(rep, *Q));
  return Q;
}

// Universal first-order calculus: adds dg for every degree-0 generator and
// the differentials of the algebra relations. Differentials rank lowest.
inline PresPtr universal_calculus(const Presentation& A, const std::string& name,
                                  const std::map<std::string, unsigned>& weights = {},
                                  const std::vector<std::string>& consequences = {}) {
  auto P = std::make_shared<Presentation>();
  P->name = name + ".free";
  const Gen n = static_cast<Gen>(A.gens.size());
  P->gens = A.gens;
  std::vector<unsigned> rank(2 * n);
  for (Gen g = 0; g < n; ++g) {
    Generator d;
    d.name = "d" + A.gens[g].name;
    d.degree = 1;
    d.base = g;
    if (auto it = weights.find(d.name); it != weights.end()) d.weight = it->second;
    P->gens.push_back(d);
    rank[n + g] = g;
    rank[g] = n + A.rank[g];
  }
  P->rank = rank;
  P->rules = A.rules;
  P->has_differential = true;
  P->differential.assign(2 * n, std::nullopt);
  for (Gen g = 0; g < n; ++g) P->differential[g] = NCPoly::gen(n + g);
  P->notes = A.notes;
  P->finalize();
  std::vector<NCPoly> rels;
  for (const auto& r : A.rules) rels.push_back(differentiate_free(NCPoly::word(r.lhs) - r.rhs, *P));
  std::vector<NCPoly> cons;
  for (const auto& c : consequences) cons.push_back(parse_relation(c, *P));
  return close_differential_ideal(*P, rels, cons, name);
}

// d(d g) = 0 on generators and on the supplied samples.
inline CheckRecord check_d_squared(const Presentation& P, const std::vector<NCPoly>& samples = {}) {
  CheckBuilder b("calculus.d_squared." + P.name, "d d = 0");
  for (Gen g = 0; g < P.gens.size(); ++g) {
    NCPoly r = differentiate(differentiate(NCPoly::gen(g), P), P);
    b.sample(r.is_zero(), to_string(r, P));
  }
  for (const auto& s : samples) {
    NCPoly r = differentiate(differentiate(s, P), P);
    b.sample(r.is_zero(), to_string(r, P));
  }
  return b.done();
}

// d(lhs) = d(rhs) modulo the rules, i.e. d descends to the quotient.
inline CheckRecord check_differential_compatible(const Presentation& P) {
  CheckBuilder b("calculus.d_well_defined." + P.name, "d preserves the relations");
  for (const auto& r : P.rules) {
    NCPoly res = differentiate(NCPoly::word(r.lhs) - r.rhs, P);
    b.sample(res.is_zero(), to_string(res, P));
  }
  return b.done();
}

// Graded tensor product with Koszul cross rules  b*a -> (-1)^{|a||b|} a*b.
// Right-factor names that collide get the suffix _<leg number>.
inline PresPtr skew_tensor(const PresPtr& A, const PresPtr& B, const std::string& name = {},
                           bool check = true) {
  if (A->scalar_field) return B;
  if (B->scalar_field) return A;
  auto T = std::make_shared<Presentation>();
  T->name = name.empty() ? A->name + "(x)" + B->name : name;
  const Gen na = static_cast<Gen>(A->gens.size()), nb = static_cast<Gen>(B->gens.size());
  auto legs_of = [](const PresPtr& X) {
    std::vector<LegInfo> L;
    for (const auto& l : X->legs) L.push_back({l.factor ? l.factor : X, l.offset, l.count});
    return L;
  };
  T->legs = legs_of(A);
  const unsigned leg_shift = static_cast<unsigned>(A->legs.size());
  for (auto l : legs_of(B)) {
    l.offset += na;
    T->legs.push_back(l);
  }
  T->gens = A->gens;
  std::map<std::string, int> used;
  for (const auto& g : A->gens) used[g.name] = 1;
  for (Gen i = 0; i < nb; ++i) {
    Generator g = B->gens[i];
    g.leg += leg_shift;
    if (g.base) *g.base += na;
    if (used.count(g.name)) {
      std::string base = g.name + "_" + std::to_string(g.leg + 1);
      std::string n = base;
      for (int k = 2; used.count(n); ++k) n = base + "_" + std::to_string(k);
      T->notes.push_back("renamed " + g.name + " in leg " + std::to_string(g.leg + 1) + " to " + n);
      g.name = n;
    }
    used[g.name] = 1;
    T->gens.push_back(g);
  }
  T->rank.resize(na + nb);
  for (Gen i = 0; i < na; ++i) T->rank[i] = A->rank[i];
  for (Gen i = 0; i < nb; ++i) T->rank[na + i] = na + B->rank[i];
  auto shift = [&](const NCPoly& e) {
    NCPoly r;
    for (const auto& [w, c] : e.terms()) {
      Word v = w;
      for (auto& g : v) g += na;
      r.add(v, c);
    }
    return r;
  };
  T->rules = A->rules;
  for (const auto& r : B->rules) {
    Word l = r.lhs;
    for (auto& g : l) g += na;
    T->rules.push_back({l, shift(r.rhs)});
  }
  for (Gen b = 0; b < nb; ++b)
    for (Gen a = 0; a < na; ++a) {
      const int s = (A->gens[a].degree * B->gens[b].degree) % 2 ? -1 : 1;
      T->rules.push_back({Word{na + b, a}, NCPoly::word(Word{a, na + b}, ParamScalar(s))});
    }
  T->has_differential = A->has_differential || B->has_differential;
  T->differential.assign(na + nb, std::nullopt);
  for (Gen i = 0; i < na; ++i) T->differential[i] = A->differential[i];
  for (Gen i = 0; i < nb; ++i)
    if (B->differential[i]) T->differential[na + i] = shift(*B->differential[i]);
  for (const auto& n : A->notes) T->notes.push_back(n);
  for (const auto& n : B->notes) T->notes.push_back(n);
  T->finalize();
  if (check) {
    auto rep = check_local_confluence(*T);
    if (!rep.ok()) throw ConfluenceError(confluence_failure_text(rep, *T));
  }
  return T;
}

inline PresPtr tensor_power(const PresPtr& H, unsigned n, bool check = true) {
  if (n == 0) return scalar_presentation();
  PresPtr T = H;
  for (unsigned k = 1; k < n; ++k)
    T = skew_tensor(T, H, H->name + "^" + std::to_string(k + 1), check);
  return T;
}

}  // namespace qb

#endif
