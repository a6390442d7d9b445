#ifndef QBUNDLE_MORPHISM_HPP
#define QBUNDLE_MORPHISM_HPP

#include <map>
#include <string>
#include <vector>

#include "qbundle/parser.hpp"
#include "qbundle/presentation.hpp"
#include "qbundle/report.hpp"

namespace qb {

// Algebra map given by generator images (normal forms in the target).
struct Morphism {
  std::string name;
  PresPtr source, target;
  std::vector<NCPoly> images;
  bool anti = false;  // reverses products, as an antipode does

  NCPoly apply_word(const Word& w) const {
    NCPoly r = NCPoly::scalar(1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      Gen g = anti ? w[w.size() - 1 - i] : w[i];
      r = mul(r, images.at(g), *target);
      if (r.is_zero()) break;
    }
    return r;
  }

  NCPoly apply(const NCPoly& e) const {
    NCPoly out;
    for (const auto& [w, c] : e.terms()) out += c * apply_word(w);
    return out;
  }
};

inline Morphism make_morphism(std::string name, PresPtr src, PresPtr tgt,
                              const std::map<std::string, NCPoly>& images, bool anti = false) {
  Morphism m{std::move(name), src, tgt, {}, anti};
  m.images.resize(src->gens.size());
  std::vector<bool> set(src->gens.size(), false);
  for (const auto& [g, img] : images) {
    Gen i = src->index(g);
    m.images[i] = normal_form(img, *tgt);
    set[i] = true;
  }
  for (Gen i = 0; i < src->gens.size(); ++i)
    if (!set[i]) throw ConstructionError("morphism " + m.name + " has no image for " + src->gens[i].name);
  return m;
}

inline Morphism make_morphism_text(std::string name, PresPtr src, PresPtr tgt,
                                   const std::map<std::string, std::string>& images,
                                   const ParamBindings& bind = {}, bool anti = false) {
  std::map<std::string, NCPoly> m;
  for (const auto& [g, text] : images) m[g] = parse_expression(text, *tgt, bind);
  return make_morphism(std::move(name), src, tgt, m, anti);
}

// Sends each source generator to the target generator of the same name,
// after optional renaming.
inline Morphism inclusion(std::string name, PresPtr src, PresPtr tgt,
                          const std::map<std::string, std::string>& rename = {}) {
  std::map<std::string, NCPoly> m;
  for (const auto& g : src->gens) {
    auto it = rename.find(g.name);
    const std::string& t = it == rename.end() ? g.name : it->second;
    m[g.name] = NCPoly::gen(tgt->index(t));
  }
  return make_morphism(std::move(name), src, tgt, m);
}

inline Morphism compose(const Morphism& second, const Morphism& first) {
  Morphism m{second.name + "." + first.name, first.source, second.target, {}};
  m.anti = first.anti != second.anti;
  for (const auto& img : first.images) m.images.push_back(second.apply(img));
  return m;
}

// Every rule lhs - rhs of the source must map to zero, and degrees must be
// preserved on generators.
inline CheckRecord check_morphism(const Morphism& m) {
  CheckBuilder b("morphism." + m.name, "relations map to zero");
  for (Gen g = 0; g < m.source->gens.size(); ++g) {
    const int deg = m.source->gens[g].degree;
    for (const auto& [w, c] : m.images[g].terms())
      if (m.target->word_degree(w) != deg) {
        b.sample(false, "degree of image of " + m.source->gens[g].name);
        break;
      }
  }
  for (const auto& r : m.source->rules) {
    NCPoly res = m.apply_word(r.lhs) - m.apply(r.rhs);
    b.sample(res.is_zero(), to_string(res, *m.target));
  }
  return b.done();
}

}  // namespace qb

#endif
