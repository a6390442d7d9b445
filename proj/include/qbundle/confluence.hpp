#ifndef QBUNDLE_CONFLUENCE_HPP
#define QBUNDLE_CONFLUENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qbundle/presentation.hpp"

namespace qb {

struct CriticalPair {
  Word word;
  std::size_t rule_a = 0, rule_b = 0;
  NCPoly nf_a, nf_b;
};

struct ConfluenceReport {
  std::vector<CriticalPair> unresolved;
  std::size_t checked = 0;
  bool ok() const { return unresolved.empty(); }
};

inline Word subword(const Word& w, std::size_t from, std::size_t to) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from),
              w.begin() + static_cast<std::ptrdiff_t>(to));
}

// Resolves every overlap and inclusion ambiguity between rule left sides
// whose combined word has length at most the bound (default: twice the
// longest left side).
inline ConfluenceReport check_local_confluence(const Presentation& P,
                                               std::optional<std::size_t> overlap_bound = std::nullopt) {
  std::size_t maxlen = 0;
  for (const auto& r : P.rules) maxlen = std::max(maxlen, r.lhs.size());
  const std::size_t bound = overlap_bound.value_or(2 * maxlen);
  ConfluenceReport rep;
  auto resolve = [&](const Word& w, std::size_t a, std::size_t b, const NCPoly& ea,
                     const NCPoly& eb) {
    ++rep.checked;
    NCPoly na = normal_form(ea, P), nb = normal_form(eb, P);
    if (na != nb) rep.unresolved.push_back({w, a, b, na, nb});
  };
  auto with = [](const Word& pre, const NCPoly& mid, const Word& post) {
    return free_product(free_product(NCPoly::word(pre), mid), NCPoly::word(post));
  };
  for (std::size_t i = 0; i < P.rules.size(); ++i) {
    const Word& li = P.rules[i].lhs;
    for (std::size_t j = 0; j < P.rules.size(); ++j) {
      const Word& lj = P.rules[j].lhs;
      // suffix of li of length k equals prefix of lj
      for (std::size_t k = 1; k < li.size() && k < lj.size(); ++k) {
        if (li.size() + lj.size() - k > bound) continue;
        if (!std::equal(li.end() - static_cast<std::ptrdiff_t>(k), li.end(), lj.begin())) continue;
        Word w = concat(li, subword(lj, k, lj.size()));
        resolve(w, i, j, with({}, P.rules[i].rhs, subword(lj, k, lj.size())),
                with(subword(li, 0, li.size() - k), P.rules[j].rhs, {}));
      }
      if (i == j || lj.size() > li.size()) continue;
      for (std::size_t s = 0; s + lj.size() <= li.size(); ++s) {
        if (!std::equal(lj.begin(), lj.end(), li.begin() + static_cast<std::ptrdiff_t>(s))) continue;
        if (lj.size() == li.size() && j < i) continue;  // equal sides: check once
        resolve(li, i, j, P.rules[i].rhs,
                with(subword(li, 0, s), P.rules[j].rhs, subword(li, s + lj.size(), li.size())));
      }
    }
  }
  return rep;
}

inline std::string describe(const CriticalPair& cp, const Presentation& P) {
  return P.word_string(cp.word) + ": " + to_string(cp.nf_a, P) + " vs " + to_string(cp.nf_b, P);
}

}  // namespace qb

#endif
