#ifndef QBUNDLE_BUNDLE_HPP
#define QBUNDLE_BUNDLE_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qbundle/dga.hpp"
#include "qbundle/hopf.hpp"
#include "qbundle/ideal.hpp"
#include "qbundle/linalg.hpp"
#include "qbundle/morphism.hpp"
#include "qbundle/report.hpp"
#include "qbundle/tensor.hpp"

namespace qb {

// Two charts B_1, B_2 glued along B_12 by surjections pi_i: B_i -> B_12.
struct Covering {
  std::array<PresPtr, 2> chart;
  PresPtr overlap;
  std::array<Morphism, 2> proj;
};

// tau12 and tau21 map H into the overlap.
struct Transition {
  std::shared_ptr<const HopfAlgebra> hopf;
  Morphism tau12, tau21;

  const Morphism& tau(int i, int j) const {
    if (i == 0 && j == 1) return tau12;
    if (i == 1 && j == 0) return tau21;
    throw Error("transition index out of range");
  }
};

// Pair (f_1, f_2) with f_i in B_i (x) H.
struct BundleElement {
  std::array<NCPoly, 2> part;
};

inline BundleElement operator+(const BundleElement& a, const BundleElement& b) {
  return {{a.part[0] + b.part[0], a.part[1] + b.part[1]}};
}
inline BundleElement operator*(const ParamScalar& c, const BundleElement& a) {
  return {{c * a.part[0], c * a.part[1]}};
}

// Morphism m (x) id_H between m.source (x) H and m.target (x) H.
inline Morphism tensor_with_identity(const Morphism& m, const PresPtr& src, const PresPtr& tgt,
                                     const Presentation& H) {
  Morphism r{m.name + "(x)id", src, tgt, {}};
  const Gen n = static_cast<Gen>(m.source->gens.size());
  for (Gen g = 0; g < src->gens.size(); ++g) {
    if (g < n) {
      r.images.push_back(normal_form(embed(m.images[g], *m.target, *tgt, 0), *tgt));
    } else {
      NCPoly h = NCPoly::gen(g - n);
      r.images.push_back(embed(h, H, *tgt, m.target->num_legs()));
    }
  }
  return r;
}

struct Bundle {
  Covering cov;
  Transition tr;
  std::array<PresPtr, 2> chart;     // B_i (x) H
  PresPtr overlap;                  // B_12 (x) H
  std::array<PresPtr, 2> chart_h;   // B_i (x) H (x) H
  PresPtr overlap_h;                // B_12 (x) H (x) H
  std::array<Morphism, 2> lift;     // pi_i (x) id
  std::array<Morphism, 2> lift_h;   // pi_i (x) id (x) id
  Morphism phi12, phi21;            // on B_12 (x) H
  Morphism phi12_h;                 // phi12 (x) id
  std::array<Morphism, 2> coact;    // id (x) Delta on each chart

  const HopfAlgebra& hopf() const { return *tr.hopf; }

  NCPoly chart_elem(int i, const NCPoly& b, const NCPoly& h) const {
    return tensor_of({b, h}, *chart[static_cast<std::size_t>(i)]);
  }
};

// phi_ij(a (x) h) = sum a tau_ji(h_1) (x) h_2 on B_12 (x) H; phi_ij fixes a (x) 1.
inline Morphism phi_iso(const Transition& t, const PresPtr& O, int i, int j) {
  const HopfAlgebra& A = *t.hopf;
  const Morphism& tau = t.tau(j, i);
  const Presentation& B12 = *tau.target;
  std::map<std::string, NCPoly> img;
  const Gen nb = static_cast<Gen>(B12.gens.size());
  for (Gen g = 0; g < nb; ++g) img[O->gens[g].name] = NCPoly::gen(g);
  for (Gen h = 0; h < A.H->gens.size(); ++h) {
    NCPoly out;
    for (const auto& s : A.sweedler1(NCPoly::gen(h)))
      out += s.coeff * tensor_of({tau.apply_word(s.legs[0]), NCPoly::word(s.legs[1])}, *O);
    img[O->gens[nb + h].name] = out;
  }
  return make_morphism("phi" + std::to_string(i + 1) + std::to_string(j + 1), O, O, img);
}

inline Bundle make_bundle(const Covering& cov, const Transition& tr) {
  Bundle b;
  b.cov = cov;
  b.tr = tr;
  const HopfAlgebra& A = *tr.hopf;
  b.overlap = skew_tensor(cov.overlap, A.H);
  b.overlap_h = skew_tensor(b.overlap, A.H);
  b.phi12 = phi_iso(tr, b.overlap, 0, 1);
  b.phi21 = phi_iso(tr, b.overlap, 1, 0);
  b.phi12_h = tensor_with_identity(b.phi12, b.overlap_h, b.overlap_h, *A.H);
  for (std::size_t i = 0; i < 2; ++i) {
    b.chart[i] = skew_tensor(cov.chart[i], A.H);
    b.chart_h[i] = skew_tensor(b.chart[i], A.H);
    b.lift[i] = tensor_with_identity(cov.proj[i], b.chart[i], b.overlap, *A.H);
    b.lift_h[i] = tensor_with_identity(b.lift[i], b.chart_h[i], b.overlap_h, *A.H);
    const Presentation& C = *b.chart[i];
    const Gen nb = static_cast<Gen>(cov.chart[i]->gens.size());
    std::map<std::string, NCPoly> img;
    for (Gen g = 0; g < nb; ++g)
      img[C.gens[g].name] = tensor_of({NCPoly::gen(g), NCPoly::scalar(1), NCPoly::scalar(1)}, *b.chart_h[i]);
    for (Gen h = 0; h < A.H->gens.size(); ++h) {
      NCPoly out;
      for (const auto& s : A.sweedler1(NCPoly::gen(h)))
        out += s.coeff * tensor_of({NCPoly::scalar(1), NCPoly::word(s.legs[0]), NCPoly::word(s.legs[1])},
                                   *b.chart_h[i]);
      img[C.gens[nb + h].name] = out;
    }
    b.coact[i] = make_morphism("coaction on " + C.name, b.chart[i], b.chart_h[i], img);
  }
  return b;
}

// Transition conditions on sample elements of H. Centrality is checked
// against every overlap generator.
inline Report check_transition(const Transition& t, const std::vector<NCPoly>& samples) {
  Report rep;
  rep.add(check_morphism(t.tau12));
  rep.add(check_morphism(t.tau21));
  const HopfAlgebra& A = *t.hopf;
  const Presentation& B = *t.tau12.target;
  CheckBuilder conv("transition.convolution_inverse", "sum tau_ij(h_1) tau_ji(h_2) = e(h) 1");
  CheckBuilder anti("transition.antipode", "tau_ji(S(h)) = tau_ij(h)");
  CheckBuilder cent("transition.central", "tau_ij(h) a = a tau_ij(h)");
  for (const auto& h0 : samples) {
    NCPoly h = normal_form(h0, *A.H);
    for (int i = 0; i < 2; ++i) {
      const Morphism& tij = t.tau(i, 1 - i);
      const Morphism& tji = t.tau(1 - i, i);
      NCPoly c = NCPoly::scalar(-A.epsilon(h));
      for (const auto& s : A.sweedler1(h))
        c += s.coeff * mul(tij.apply_word(s.legs[0]), tji.apply_word(s.legs[1]), B);
      conv.sample(c.is_zero(), to_string(c, B));
      NCPoly a = tji.apply(A.S(h)) - tij.apply(h);
      anti.sample(a.is_zero(), to_string(a, B));
      NCPoly th = tij.apply(h);
      for (Gen g = 0; g < B.gens.size(); ++g) {
        NCPoly r = mul(th, NCPoly::gen(g), B) - mul(NCPoly::gen(g), th, B);
        cent.sample(r.is_zero(), to_string(r, B));
      }
    }
  }
  rep.add(conv.done());
  rep.add(anti.done());
  rep.add(cent.done());
  rep.add(vacuous("transition.cocycle", "tau_ij tau_jk tau_ki = e on triple overlaps",
                  "two charts: there are no triple overlaps"));
  return rep;
}

// phi12 phi21 = id = phi21 phi12 on normal words of B_12 (x) H.
inline CheckRecord check_phi_inverse(const Bundle& b, std::size_t max_len) {
  CheckBuilder c("transition.phi_inverse", "phi_ij phi_ji = id");
  const Presentation& O = *b.overlap;
  for (const auto& w : normal_words(O, max_len)) {
    NCPoly e = NCPoly::word(w);
    NCPoly r1 = b.phi12.apply(b.phi21.apply(e)) - e;
    NCPoly r2 = b.phi21.apply(b.phi12.apply(e)) - e;
    c.sample(r1.is_zero(), to_string(r1, O));
    c.sample(r2.is_zero(), to_string(r2, O));
  }
  return c.done();
}

// Difference (pi (x) id)(f_1) - phi12 (pi (x) id)(f_2); zero iff f is in the bundle.
inline NCPoly membership_residue(const BundleElement& f, const Bundle& b) {
  return b.lift[0].apply(f.part[0]) - b.phi12.apply(b.lift[1].apply(f.part[1]));
}

inline bool is_bundle_element(const BundleElement& f, const Bundle& b, NCPoly* witness = nullptr) {
  NCPoly r = membership_residue(f, b);
  if (witness) *witness = r;
  return r.is_zero();
}

inline BundleElement bundle_mul(const BundleElement& f, const BundleElement& g, const Bundle& b) {
  return {{mul(f.part[0], g.part[0], *b.chart[0]), mul(f.part[1], g.part[1], *b.chart[1])}};
}

inline BundleElement normalize(const BundleElement& f, const Bundle& b) {
  return {{normal_form(f.part[0], *b.chart[0]), normal_form(f.part[1], *b.chart[1])}};
}

inline bool operator==(const BundleElement& a, const BundleElement& b) {
  return a.part[0] == b.part[0] && a.part[1] == b.part[1];
}

// Componentwise id (x) Delta; the result lives in (B_i (x) H) (x) H.
inline BundleElement coaction(const BundleElement& f, const Bundle& b) {
  return {{b.coact[0].apply(f.part[0]), b.coact[1].apply(f.part[1])}};
}

// Compatibility of a pair in (B_i (x) H) (x) H, using phi12 (x) id.
inline NCPoly coaction_membership_residue(const BundleElement& f, const Bundle& b) {
  return b.lift_h[0].apply(f.part[0]) - b.phi12_h.apply(b.lift_h[1].apply(f.part[1]));
}

// f (x) h placed in the chart-wise (B_i (x) H) (x) H.
inline BundleElement tensor_right(const BundleElement& f, const NCPoly& h, const Bundle& b) {
  BundleElement r;
  for (std::size_t i = 0; i < 2; ++i)
    r.part[i] = assemble({{f.part[i], b.chart[i].get()}, {h, b.hopf().H.get()}}, *b.chart_h[i]);
  return r;
}

// A presentation used only as a carrier of generator names: no rewrite rules,
// so elements are free polynomials. Relations are held alongside.
struct RelationSet {
  PresPtr free;
  std::vector<NCPoly> relations;
  std::vector<std::string> text;
};

inline RelationSet relation_set(const std::string& name, const std::vector<std::string>& gens,
                                const std::vector<std::string>& relations, const ParamBindings& bind = {}) {
  RelationSet R;
  auto P = std::make_shared<Presentation>();
  P->name = name;
  for (const auto& g : gens) P->gens.push_back({g, 0});
  P->finalize();
  R.free = P;
  for (const auto& t : relations) {
    R.relations.push_back(parse_relation(t, *P, bind));
    R.text.push_back(t);
  }
  return R;
}

// Every relation maps to zero under m.
inline CheckRecord check_relations_vanish(const RelationSet& R, const Morphism& m, const std::string& name,
                                          const std::string& anchor) {
  CheckBuilder c(name, anchor);
  for (const auto& r : R.relations) {
    NCPoly v = m.apply(r);
    c.sample(v.is_zero(), to_string(v, *m.target));
  }
  return c.done();
}

// Embedding of the abstract base through chart maps B -> B_i (x) 1.
struct BaseEmbedding {
  RelationSet base;
  std::array<Morphism, 2> to_chart;  // base.free -> B_i (x) H

  BundleElement iota(const NCPoly& a) const {
    return {{to_chart[0].apply(a), to_chart[1].apply(a)}};
  }
};

inline BaseEmbedding make_base_embedding(const RelationSet& base, const Bundle& b,
                                         const std::array<std::map<std::string, std::string>, 2>& images) {
  BaseEmbedding e{base, {}};
  for (std::size_t i = 0; i < 2; ++i) {
    std::map<std::string, NCPoly> img;
    for (const auto& [g, t] : images[i]) img[g] = embed(parse_expression(t, *b.cov.chart[i]), *b.cov.chart[i], *b.chart[i]);
    e.to_chart[i] = make_morphism("iota_" + std::to_string(i + 1), base.free, b.chart[i], img);
  }
  return e;
}

// Base monomials whose length, counting generator g with weight w(g), is at
// most L. Generators without an entry weigh 1.
inline std::vector<Word> weighted_monomials(const Presentation& P, std::size_t L,
                                            const std::map<std::string, std::size_t>& weight) {
  std::vector<std::size_t> wt(P.gens.size(), 1);
  for (const auto& [g, w] : weight) wt[P.index(g)] = w;
  std::vector<Word> out{Word{}};
  std::vector<std::pair<Word, std::size_t>> level{{Word{}, 0}};
  while (!level.empty()) {
    std::vector<std::pair<Word, std::size_t>> next;
    for (const auto& [w, len] : level)
      for (Gen g = 0; g < P.gens.size(); ++g) {
        if (len + wt[g] > L) continue;
        Word v = w;
        v.push_back(g);
        out.push_back(v);
        next.emplace_back(std::move(v), len + wt[g]);
      }
    level = std::move(next);
  }
  return out;
}

struct ChartKey {
  int chart;
  Word w;
};

struct ChartKeyLess {
  std::array<const Presentation*, 2> P;
  bool operator()(const ChartKey& a, const ChartKey& b) const {
    if (a.chart != b.chart) return a.chart < b.chart;
    return P[static_cast<std::size_t>(a.chart)]->less(a.w, b.w);
  }
};

inline bool operator==(const ChartKey& a, const ChartKey& b) { return a.chart == b.chart && a.w == b.w; }

using PairEchelon = Echelon<ChartKey, ChartKeyLess>;

inline PairEchelon::Vec as_pair_vec(const BundleElement& f, const Bundle& b) {
  PairEchelon::Vec v{ChartKeyLess{{b.chart[0].get(), b.chart[1].get()}}};
  for (int i = 0; i < 2; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const NCPoly e = normal_form(f.part[k], *b.chart[k]);
    for (const auto& [w, c] : e.terms()) v.emplace(ChartKey{i, w}, c);
  }
  return v;
}

// Coinvariant bundle elements whose chart components use words of length at
// most L. Each chart word must be homogeneous under the coaction, which holds
// for group-like bases such as P(U(1)); the coinvariant words are then those
// with empty H-part, and gluing is solved by exact linear algebra.
inline std::vector<BundleElement> coinvariants_bounded(const Bundle& b, std::size_t L) {
  std::vector<BundleElement> cols;
  using OVec = WordEchelon::Vec;
  std::vector<OVec> images;
  for (std::size_t i = 0; i < 2; ++i) {
    const Presentation& C = *b.chart[i];
    const Presentation& CH = *b.chart_h[i];
    for (const auto& cw : normal_words(C, L)) {
      NCPoly co = b.coact[i].apply_word(cw);
      if (co.size() != 1) throw UnsupportedError("coaction is not graded on " + C.word_string(cw));
      if (co != embed(NCPoly::word(cw), C, CH)) continue;
      BundleElement e;
      e.part[i] = NCPoly::word(cw);
      NCPoly img = i == 0 ? b.lift[0].apply(e.part[0]) : -b.phi12.apply(b.lift[1].apply(e.part[1]));
      images.push_back(as_vec(img, *b.overlap));
      cols.push_back(e);
    }
  }
  std::vector<BundleElement> basis;
  for (const auto& v : nullspace(images)) {
    BundleElement e;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) e = e + v[j] * cols[j];
    basis.push_back(e);
  }
  return basis;
}

struct CoinvariantComparison {
  std::size_t length = 0;
  std::size_t coinvariant_dim = 0;
  std::size_t iota_dim = 0;
  bool iota_inside = true;  // every iota image glues and is coinvariant
};

inline CoinvariantComparison compare_coinvariants(const Bundle& b, const BaseEmbedding& e, std::size_t L,
                                                  const std::map<std::string, std::size_t>& weight) {
  CoinvariantComparison r;
  r.length = L;
  auto V = coinvariants_bounded(b, L);
  PairEchelon vs(ChartKeyLess{{b.chart[0].get(), b.chart[1].get()}});
  for (const auto& f : V) vs.insert(as_pair_vec(f, b));
  r.coinvariant_dim = vs.rank();
  PairEchelon ws(ChartKeyLess{{b.chart[0].get(), b.chart[1].get()}});
  for (const auto& w : weighted_monomials(*e.base.free, L, weight)) {
    BundleElement f = e.iota(NCPoly::word(w));
    ws.insert(as_pair_vec(f, b));
    if (!is_bundle_element(f, b) || !vs.contains(as_pair_vec(f, b))) r.iota_inside = false;
  }
  r.iota_dim = ws.rank();
  return r;
}

// Sum tau_ij(S(r_1) r_3) (x) r_2 must lie in B_12 (x) R. For group-like
// coproducts the B_12 leg is a single monomial per term, so membership is
// checked leg-wise in the right ideal of H.
inline CheckRecord check_jbij(const Transition& t, const std::vector<NCPoly>& R, std::size_t bound) {
  CheckBuilder c("overlap.jbij", "sum tau_ij(S(r_1) r_3) (x) r_2 in B_ij (x) R");
  const HopfAlgebra& A = *t.hopf;
  const Presentation& H = *A.H;
  const Presentation& B = *t.tau12.target;
  IdealSpan span(H, R, bound, true);
  for (int i = 0; i < 2; ++i) {
    const Morphism& tij = t.tau(i, 1 - i);
    for (const auto& r : R) {
      // group the H-leg by the B_12 monomial in front of it
      std::map<Word, NCPoly, OrderLess> by_word{OrderLess{&B}};
      for (const auto& s : A.sweedler2(r)) {
        NCPoly k = mul(A.S(NCPoly::word(s.legs[0])), NCPoly::word(s.legs[2]), H);
        NCPoly tk = tij.apply(k);
        for (const auto& [w, cw] : tk.terms()) by_word[w] += s.coeff * cw * NCPoly::word(s.legs[1]);
      }
      for (const auto& [w, h] : by_word) {
        NCPoly hn = normal_form(h, H);
        c.sample(span.contains(hn), to_string(hn, H));
      }
    }
  }
  return c.done();
}

// J_m(B_12) inside the universal calculus of the overlap, by generating set.
struct OverlapIdeal {
  std::vector<NCPoly> chart_relations;  // pi-images of the chart calculi relations
  std::vector<NCPoly> transition_forms;  // sum tau_ji(r_1) d tau_ij(r_2)
  std::vector<NCPoly> commutators;       // d tau_ji(h) a - a d tau_ji(h)
};

// chart_calc[i] is Gamma(B_i) with the chart generators first and their
// differentials named "d" + name; omega is the universal calculus of B_12.
inline OverlapIdeal jm_generators(const Transition& t, const Covering& cov,
                                  const std::array<PresPtr, 2>& chart_calc, const PresPtr& omega,
                                  const std::vector<NCPoly>& R) {
  OverlapIdeal J;
  const HopfAlgebra& A = *t.hopf;
  const Presentation& O = *omega;
  Morphism in12 = inclusion("B12->" + O.name, cov.overlap, omega);
  for (std::size_t i = 0; i < 2; ++i) {
    const Presentation& G = *chart_calc[i];
    auto freeG = std::make_shared<Presentation>();
    freeG->name = G.name + ".free";
    freeG->gens = G.gens;
    freeG->rank = G.rank;
    freeG->has_differential = G.has_differential;
    freeG->differential = G.differential;
    freeG->finalize();
    std::map<std::string, NCPoly> img;
    for (Gen g = 0; g < freeG->gens.size(); ++g) {
      const auto& gen = freeG->gens[g];
      if (gen.base) {
        img[gen.name] = NCPoly::scalar(0);
      } else {
        img[gen.name] = in12.apply(cov.proj[i].images.at(cov.proj[i].source->index(gen.name)));
      }
    }
    Morphism m = differential_extension(make_morphism("pi_Gamma", freeG, omega, img));
    for (const auto& r : G.rules) {
      NCPoly v = m.apply(NCPoly::word(r.lhs) - r.rhs);
      if (!v.is_zero()) J.chart_relations.push_back(v);
    }
  }
  for (int i = 0; i < 2; ++i) {
    const Morphism& tij = t.tau(i, 1 - i);
    const Morphism& tji = t.tau(1 - i, i);
    for (const auto& r : R) {
      NCPoly v;
      for (const auto& s : A.sweedler1(r)) {
        NCPoly a = in12.apply(tji.apply_word(s.legs[0]));
        NCPoly b = differentiate(in12.apply(tij.apply_word(s.legs[1])), O);
        v += s.coeff * mul(a, b, O);
      }
      if (!v.is_zero()) J.transition_forms.push_back(v);
    }
    for (Gen h = 0; h < A.H->gens.size(); ++h) {
      NCPoly dt = differentiate(in12.apply(tji.apply(NCPoly::gen(h))), O);
      for (Gen a = 0; a < cov.overlap->gens.size(); ++a) {
        NCPoly ga = NCPoly::gen(O.index(cov.overlap->gens[a].name));
        NCPoly v = mul(dt, ga, O) - mul(ga, dt, O);
        if (!v.is_zero()) J.commutators.push_back(v);
      }
    }
  }
  return J;
}

// Gamma_m(B_12) from the generating sets, commutators first. Consequences
// (e.g. dalpha = 0) must be derivable within the length bound.
inline PresPtr overlap_calculus(const OverlapIdeal& J, const PresPtr& omega,
                                const std::vector<std::string>& consequences, const std::string& name) {
  std::vector<NCPoly> gens = J.commutators;
  gens.insert(gens.end(), J.transition_forms.begin(), J.transition_forms.end());
  gens.insert(gens.end(), J.chart_relations.begin(), J.chart_relations.end());
  std::vector<NCPoly> cons;
  for (const auto& c : consequences) cons.push_back(parse_relation(c, *omega));
  return close_differential_ideal(*omega, gens, cons, name);
}

}  // namespace qb

#endif
