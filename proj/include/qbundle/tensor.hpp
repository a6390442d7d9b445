#ifndef QBUNDLE_TENSOR_HPP
#define QBUNDLE_TENSOR_HPP

#include <functional>
#include <vector>

#include "qbundle/dga.hpp"
#include "qbundle/presentation.hpp"

namespace qb {

// One term of a tensor element with its word split by leg; leg words use the
// generator indices of the leg's factor presentation.
struct SweedlerTerm {
  ParamScalar coeff;
  std::vector<Word> legs;
};

// Normal words of a tensor are sorted by leg (a descent would be a cross-rule
// redex), so splitting is a single pass.
inline std::vector<SweedlerTerm> sweedler(const NCPoly& t, const Presentation& T) {
  std::vector<SweedlerTerm> out;
  for (const auto& [w, c] : t.terms()) {
    SweedlerTerm s{c, std::vector<Word>(T.num_legs())};
    unsigned last = 0;
    for (Gen g : w) {
      const auto& gen = T.gens[g];
      if (gen.leg < last) throw Error("sweedler: word is not in normal form in " + T.name);
      last = gen.leg;
      s.legs[gen.leg].push_back(gen.local);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Maps an element of E into T, sending leg l of E to leg first_leg + l of T.
inline NCPoly embed(const NCPoly& e, const Presentation& E, const Presentation& T,
                    std::size_t first_leg = 0) {
  NCPoly r;
  for (const auto& [w, c] : e.terms()) {
    Word v;
    v.reserve(w.size());
    for (Gen g : w) {
      const auto& gen = E.gens[g];
      const auto& leg = T.legs.at(first_leg + gen.leg);
      v.push_back(leg.offset + gen.local);
    }
    r.add(v, c);
  }
  return r;
}

// Product of per-leg pieces placed in consecutive legs of T.
inline NCPoly assemble(const std::vector<std::pair<NCPoly, const Presentation*>>& parts,
                       const Presentation& T) {
  NCPoly r = NCPoly::scalar(1);
  std::size_t leg = 0;
  for (const auto& [e, E] : parts) {
    r = free_product(r, embed(e, *E, T, leg));
    leg += E->num_legs();
  }
  return normal_form(r, T);
}

inline NCPoly tensor_of(const std::vector<NCPoly>& factors, const Presentation& T) {
  std::vector<std::pair<NCPoly, const Presentation*>> parts;
  for (std::size_t k = 0; k < factors.size(); ++k) parts.emplace_back(factors[k], &T.leg_factor(k));
  return assemble(parts, T);
}

using LegMap = std::function<NCPoly(const NCPoly&)>;

struct LegAction {
  LegMap map;              // empty: identity
  const Presentation* out;  // presentation the map lands in
};

// Applies degree-0 maps leg by leg and reassembles in Tout.
inline NCPoly apply_legwise(const NCPoly& t, const Presentation& T,
                            const std::vector<LegAction>& actions, const Presentation& Tout) {
  NCPoly out;
  for (const auto& s : sweedler(normal_form(t, T), T)) {
    std::vector<std::pair<NCPoly, const Presentation*>> parts;
    bool zero = false;
    for (std::size_t k = 0; k < s.legs.size(); ++k) {
      NCPoly piece = NCPoly::word(s.legs[k]);
      if (actions[k].map) piece = actions[k].map(piece);
      if (piece.is_zero()) {
        zero = true;
        break;
      }
      parts.emplace_back(piece, actions[k].map ? actions[k].out : &T.leg_factor(k));
    }
    if (!zero) out += s.coeff * assemble(parts, Tout);
  }
  return out;
}

// Multiplies all legs together in a single presentation H.
inline NCPoly multiply_legs(const NCPoly& t, const Presentation& T, const Presentation& H) {
  NCPoly out;
  for (const auto& s : sweedler(normal_form(t, T), T)) {
    Word w;
    for (const auto& l : s.legs) w.insert(w.end(), l.begin(), l.end());
    out.add(w, s.coeff);
  }
  return normal_form(out, H);
}

}  // namespace qb

#endif
