#ifndef QBUNDLE_CALCULI_HPP
#define QBUNDLE_CALCULI_HPP

#include <memory>
#include <string>
#include <vector>

#include "qbundle/dga.hpp"
#include "qbundle/hopf.hpp"
#include "qbundle/parser.hpp"

namespace qb {

// Quantum disc: xs*x = c*x*xs + (1 - c), with x < xs.
inline PresPtr disc_algebra(const std::string& x, const ParamScalar& c, const std::string& name) {
  auto P = std::make_shared<Presentation>();
  P->name = name;
  P->gens = {{x, 0}, {x + "s", 0}};
  P->finalize();
  NCPoly rhs = NCPoly::word({0, 1}, c);
  rhs.add({}, ParamScalar(1) - c);
  P->rules.push_back({Word{1, 0}, rhs});
  P->finalize();
  return P;
}

// First-order calculus on the disc: x dx = c^-1 dx x, xs dxs = c dxs xs,
// x dxs = c^-1 dxs x, xs dx = c dx xs, closed under d.
inline PresPtr disc_calculus(const PresPtr& disc, const ParamScalar& c, const std::string& name) {
  PresPtr omega = universal_calculus(*disc, "Omega(" + disc->name + ")");
  const std::string x = disc->gens[0].name, xs = disc->gens[1].name;
  ParamBindings b{{"_c", c}};
  std::vector<NCPoly> J;
  for (const auto& t : {x + "*d" + x + " - _c^-1*d" + x + "*" + x,
                        xs + "*d" + xs + " - _c*d" + xs + "*" + xs,
                        x + "*d" + xs + " - _c^-1*d" + xs + "*" + x,
                        xs + "*d" + x + " - _c*d" + x + "*" + xs})
    J.push_back(parse_expression(t, *omega, b));
  return close_differential_ideal(*omega, J, {}, name);
}

// Universal calculus on P(U(1)); dalphas is eliminated, so it gets a weight
// above the length of its replacement -alphas*dalpha*alphas.
inline PresPtr u1_universal_calculus(const PresPtr& H, const std::string& name) {
  const std::string a = H->gens[0].name, as = H->gens[1].name;
  return universal_calculus(*H, name, {{"d" + as, 4}},
                            {"d" + as + " + " + as + "*d" + a + "*" + as});
}

}  // namespace qb

#endif
