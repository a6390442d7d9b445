#ifndef QBUNDLE_HOPF_HPP
#define QBUNDLE_HOPF_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbundle/dga.hpp"
#include "qbundle/morphism.hpp"
#include "qbundle/parser.hpp"
#include "qbundle/report.hpp"
#include "qbundle/tensor.hpp"

namespace qb {

class HopfAlgebra {
 public:
  PresPtr H, HH, HHH;
  Morphism coproduct;  // H -> H(x)H
  Morphism counit;     // H -> scalars
  Morphism antipode;   // anti-homomorphism H -> H
  std::optional<Morphism> antipode_inv;

  NCPoly delta(const NCPoly& h) const { return coproduct.apply(normal_form(h, *H)); }

  // (Delta (x) id) Delta, landing in H(x)H(x)H.
  NCPoly delta2(const NCPoly& h) const {
    LegMap d = [this](const NCPoly& x) { return delta(x); };
    return apply_legwise(delta(h), *HH, {{d, HH.get()}, {{}, nullptr}}, *HHH);
  }
  NCPoly delta2_right(const NCPoly& h) const {
    LegMap d = [this](const NCPoly& x) { return delta(x); };
    return apply_legwise(delta(h), *HH, {{{}, nullptr}, {d, HH.get()}}, *HHH);
  }

  ParamScalar epsilon(const NCPoly& h) const {
    return counit.apply(normal_form(h, *H)).constant_term();
  }
  NCPoly S(const NCPoly& h) const { return antipode.apply(h); }
  NCPoly Sinv(const NCPoly& h) const {
    if (!antipode_inv) throw UnsupportedError("no inverse antipode supplied for " + H->name);
    return antipode_inv->apply(h);
  }

  std::vector<SweedlerTerm> sweedler1(const NCPoly& h) const { return sweedler(delta(h), *HH); }
  std::vector<SweedlerTerm> sweedler2(const NCPoly& h) const { return sweedler(delta2(h), *HHH); }

  NCPoly w(const Word& x) const { return NCPoly::word(x); }
};

inline HopfAlgebra make_hopf(PresPtr H, const std::map<std::string, std::string>& coproduct,
                             const std::map<std::string, std::string>& counit,
                             const std::map<std::string, std::string>& antipode,
                             const std::map<std::string, std::string>& antipode_inv = {},
                             const ParamBindings& bind = {}) {
  HopfAlgebra A;
  A.H = H;
  A.HH = tensor_power(H, 2);
  A.HHH = tensor_power(H, 3);
  A.coproduct = make_morphism_text("coproduct", H, A.HH, coproduct, bind);
  A.counit = make_morphism_text("counit", H, scalar_presentation(), counit, bind);
  A.antipode = make_morphism_text("antipode", H, H, antipode, bind, true);
  if (!antipode_inv.empty())
    A.antipode_inv = make_morphism_text("inverse_antipode", H, H, antipode_inv, bind, true);
  return A;
}

// Functions of one generator g with g*gs = gs*g = 1.
inline PresPtr u1_algebra(const std::string& g = "alpha", const std::string& name = "P(U(1))") {
  auto P = std::make_shared<Presentation>();
  P->name = name;
  P->gens = {{g, 0}, {g + "s", 0}};
  P->finalize();
  P->rules.push_back({Word{0, 1}, NCPoly::scalar(1)});
  P->rules.push_back({Word{1, 0}, NCPoly::scalar(1)});
  P->finalize();
  return P;
}

inline HopfAlgebra u1_hopf() {
  return make_hopf(u1_algebra(), {{"alpha", "alpha*alpha_2"}, {"alphas", "alphas*alphas_2"}},
                   {{"alpha", "1"}, {"alphas", "1"}}, {{"alpha", "alphas"}, {"alphas", "alpha"}},
                   {{"alpha", "alphas"}, {"alphas", "alpha"}});
}

// alpha^k for k >= 0, alphas^{-k} otherwise.
inline NCPoly group_power(const Presentation& H, int k, const std::string& g = "alpha") {
  Gen a = H.index(k >= 0 ? g : g + "s");
  return NCPoly::word(Word(static_cast<std::size_t>(k >= 0 ? k : -k), a));
}

inline std::vector<NCPoly> group_samples(const Presentation& H, int K, const std::string& g = "alpha") {
  std::vector<NCPoly> out;
  for (int k = -K; k <= K; ++k) out.push_back(group_power(H, k, g));
  return out;
}

inline Report check_hopf_axioms(const HopfAlgebra& A, const std::vector<NCPoly>& samples) {
  Report rep;
  rep.add(check_morphism(A.coproduct));
  rep.add(check_morphism(A.counit));
  rep.add(check_morphism(A.antipode));
  if (A.antipode_inv) rep.add(check_morphism(*A.antipode_inv));
  const Presentation& H = *A.H;
  CheckBuilder coass("hopf.coassociativity", "(D(x)id)D = (id(x)D)D");
  CheckBuilder counit("hopf.counit", "(e(x)id)D = id = (id(x)e)D");
  CheckBuilder anti("hopf.antipode", "m(S(x)id)D = e = m(id(x)S)D");
  CheckBuilder inv("hopf.antipode_inverse", "S Sinv = id = Sinv S");
  LegMap eps = [&](const NCPoly& x) { return NCPoly::scalar(A.epsilon(x)); };
  LegMap S = [&](const NCPoly& x) { return A.S(x); };
  const Presentation* sc = scalar_presentation().get();
  for (const auto& h0 : samples) {
    NCPoly h = normal_form(h0, H);
    NCPoly r = A.delta2(h) - A.delta2_right(h);
    coass.sample(r.is_zero(), to_string(r, *A.HHH));
    NCPoly d = A.delta(h);
    NCPoly l = apply_legwise(d, *A.HH, {{eps, sc}, {{}, nullptr}}, H) - h;
    NCPoly rr = apply_legwise(d, *A.HH, {{{}, nullptr}, {eps, sc}}, H) - h;
    counit.sample(l.is_zero(), to_string(l, H));
    counit.sample(rr.is_zero(), to_string(rr, H));
    NCPoly e = NCPoly::scalar(A.epsilon(h));
    NCPoly a1 = multiply_legs(apply_legwise(d, *A.HH, {{S, &H}, {{}, nullptr}}, *A.HH), *A.HH, H) - e;
    NCPoly a2 = multiply_legs(apply_legwise(d, *A.HH, {{{}, nullptr}, {S, &H}}, *A.HH), *A.HH, H) - e;
    anti.sample(a1.is_zero(), to_string(a1, H));
    anti.sample(a2.is_zero(), to_string(a2, H));
    if (A.antipode_inv) {
      NCPoly i1 = A.S(A.Sinv(h)) - h, i2 = A.Sinv(A.S(h)) - h;
      inv.sample(i1.is_zero(), to_string(i1, H));
      inv.sample(i2.is_zero(), to_string(i2, H));
    }
  }
  rep.add(coass.done());
  rep.add(counit.done());
  rep.add(anti.done());
  if (A.antipode_inv) rep.add(inv.done());
  return rep;
}

// Right-covariant first-order calculus on H cut out by a right ideal R of ker(e).
struct CovariantCalculus {
  const HopfAlgebra* hopf = nullptr;
  PresPtr omega;  // universal calculus
  PresPtr gamma;
  std::vector<NCPoly> R;  // generators of R, elements of H
  Morphism incl;          // H -> gamma
  Morphism coaction;      // gamma -> gamma (x) H, d(g) -> (d (x) id) D(g)
  PresPtr gamma_h;        // gamma (x) H

  // Sum S^-1(h_2) d h_1 in the presentation C, which must contain H's names.
  static NCPoly eta_in(const HopfAlgebra& A, const NCPoly& h, const PresPtr& C) {
    Morphism inc = inclusion("H->" + C->name, A.H, C);
    NCPoly out;
    for (const auto& s : A.sweedler1(h)) {
      NCPoly a = inc.apply(A.Sinv(NCPoly::word(s.legs[1])));
      NCPoly b = differentiate(inc.apply(NCPoly::word(s.legs[0])), *C);
      out += s.coeff * mul(a, b, *C);
    }
    return out;
  }
  NCPoly eta(const NCPoly& h) const { return eta_in(*hopf, h, gamma); }
  NCPoly d(const NCPoly& e) const { return differentiate(e, *gamma); }
  NCPoly lift(const NCPoly& h) const { return incl.apply(h); }
};

inline Morphism calculus_coaction(const HopfAlgebra& A, const PresPtr& G, const PresPtr& GH) {
  Morphism inc = inclusion("H->" + G->name, A.H, G);
  std::map<std::string, NCPoly> img;
  for (Gen g = 0; g < G->gens.size(); ++g) {
    const auto& gen = G->gens[g];
    const std::string& base_name = gen.base ? G->gens[*gen.base].name : gen.name;
    NCPoly out;
    for (const auto& s : A.sweedler1(NCPoly::gen(A.H->index(base_name)))) {
      NCPoly left = inc.apply(NCPoly::word(s.legs[0]));
      if (gen.base) left = differentiate(left, *G);
      out += s.coeff * tensor_of({left, NCPoly::word(s.legs[1])}, *GH);
    }
    img[gen.name] = out;
  }
  return make_morphism("coaction on " + G->name, G, GH, img);
}

inline CovariantCalculus covariant_calculus(const HopfAlgebra& A, const std::vector<NCPoly>& R,
                                            const PresPtr& omega,
                                            const std::vector<std::string>& consequences,
                                            const std::string& name = "Gamma(H)",
                                            const ParamBindings& bind = {}) {
  CovariantCalculus C;
  C.hopf = &A;
  C.omega = omega;
  C.R = R;
  std::vector<NCPoly> gens;
  for (const auto& r : R) gens.push_back(CovariantCalculus::eta_in(A, r, omega));
  std::vector<NCPoly> cons;
  for (const auto& c : consequences) cons.push_back(parse_relation(c, *omega, bind));
  C.gamma = close_differential_ideal(*omega, gens, cons, name);
  C.incl = inclusion("H->" + name, A.H, C.gamma);
  C.gamma_h = skew_tensor(C.gamma, A.H);
  C.coaction = calculus_coaction(A, C.gamma, C.gamma_h);
  return C;
}

// dh = sum h_2 eta(h_1) and d eta(h) = -sum eta(h_2) eta(h_1) in Gamma(H).
inline Report check_eta_reconstruction(const CovariantCalculus& C, const std::vector<NCPoly>& samples) {
  Report rep;
  const Presentation& G = *C.gamma;
  CheckBuilder rec("calculus.eta_reconstruction", "dh = sum h_2 eta(h_1)");
  CheckBuilder mc("calculus.eta_maurer_cartan", "d eta(h) = -sum eta(h_2) eta(h_1)");
  for (const auto& h : samples) {
    NCPoly sum, prod;
    for (const auto& s : C.hopf->sweedler1(h)) {
      NCPoly h1 = NCPoly::word(s.legs[0]), h2 = NCPoly::word(s.legs[1]);
      sum += s.coeff * mul(C.lift(h2), C.eta(h1), G);
      prod += s.coeff * mul(C.eta(h2), C.eta(h1), G);
    }
    NCPoly r = normal_form(C.d(C.lift(h)) - sum, G);
    rec.sample(r.is_zero(), to_string(r, G));
    NCPoly m = normal_form(C.d(C.eta(h)) + prod, G);
    mc.sample(m.is_zero(), to_string(m, G));
  }
  rep.add(rec.done());
  rep.add(mc.done());
  return rep;
}

// The pair (X, f) with h - e(h) = X(h)(alpha - 1) modulo R and
// X(hk) = X(h) f(k) + e(h) X(k), for R generated by a(alpha-1) + b(alphas-1).
struct FunctionalPair {
  const HopfAlgebra* hopf = nullptr;
  ParamScalar X_alpha, X_alphas, f_alpha, f_alphas;

  ParamScalar f_word(const Word& w) const {
    ParamScalar r(1);
    for (Gen g : w) r *= g == 0 ? f_alpha : f_alphas;
    return r;
  }
  ParamScalar X_word(const Word& w) const {
    ParamScalar r;
    for (std::size_t i = 0; i < w.size(); ++i)
      r += (w[i] == 0 ? X_alpha : X_alphas) * f_word(Word(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end()));
    return r;
  }
  ParamScalar X(const NCPoly& h) const {
    ParamScalar r;
    for (const auto& [w, c] : normal_form(h, *hopf->H).terms()) r += c * X_word(w);
    return r;
  }
  ParamScalar f(const NCPoly& h) const {
    ParamScalar r;
    for (const auto& [w, c] : normal_form(h, *hopf->H).terms()) r += c * f_word(w);
    return r;
  }
};

inline FunctionalPair functionals_for_u1(const HopfAlgebra& A, const std::vector<NCPoly>& R) {
  const Presentation& H = *A.H;
  if (H.gens.size() != 2 || H.gens[0].name + "s" != H.gens[1].name)
    throw UnsupportedError("functionals are implemented for P(U(1)) only");
  if (R.size() != 1) throw UnsupportedError("R must have a single generator");
  NCPoly r = normal_form(R[0], H);
  if (!A.epsilon(r).is_zero()) throw ConstructionError("R generator is not in ker(e)");
  for (const auto& [w, c] : r.terms())
    if (w.size() > 1) throw UnsupportedError("R generator must be linear in alpha, alphas");
  ParamScalar a = r.coeff({0}), b = r.coeff({1});
  if (a.is_zero() || b.is_zero())
    throw UnsupportedError("ker(e)/R is not one-dimensional for this R");
  FunctionalPair F;
  F.hopf = &A;
  F.X_alpha = 1;
  F.X_alphas = -a / b;
  F.f_alpha = b / a;
  F.f_alphas = a / b;
  return F;
}

}  // namespace qb

#endif
