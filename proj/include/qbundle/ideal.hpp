#ifndef QBUNDLE_IDEAL_HPP
#define QBUNDLE_IDEAL_HPP

#include <optional>
#include <vector>

#include "qbundle/linalg.hpp"
#include "qbundle/presentation.hpp"

namespace qb {

// Irreducible words of length at most max_len, ascending in the monomial
// order. Extensions of reducible words are reducible, so the search only
// grows irreducible prefixes.
inline std::vector<Word> normal_words(const Presentation& P, std::size_t max_len,
                                      std::optional<int> max_degree = std::nullopt) {
  std::vector<Word> all{Word{}};
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (Gen g = 0; g < P.gens.size(); ++g) {
        Word v = w;
        v.push_back(g);
        if (max_degree && P.word_degree(v) > *max_degree) continue;
        bool reducible = false;
        for (std::size_t s = 0; s < v.size() && !reducible; ++s)
          for (std::size_t ri : P.rules_starting_with(v[s])) {
            const Word& l = P.rules[ri].lhs;
            if (s + l.size() == v.size() &&
                std::equal(l.begin(), l.end(), v.begin() + static_cast<std::ptrdiff_t>(s))) {
              reducible = true;
              break;
            }
          }
        if (!reducible) next.push_back(std::move(v));
      }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), OrderLess{&P});
  return all;
}

// Normal words of a fixed form degree with min_len <= length <= max_len.
inline std::vector<Word> graded_basis(const Presentation& P, int degree, std::size_t max_len,
                                      std::size_t min_len = 0) {
  std::vector<Word> out;
  for (auto& w : normal_words(P, max_len, degree))
    if (P.word_degree(w) == degree && w.size() >= min_len) out.push_back(std::move(w));
  return out;
}

// Span of nf(u*g*v) for normal words u, v with |u| + |g| + |v| <= bound.
// With right_only set, u is restricted to the empty word.
class IdealSpan {
 public:
  IdealSpan(const Presentation& P, const std::vector<NCPoly>& gens, std::size_t bound,
            bool right_only = false)
      : P_(&P), span_(OrderLess{&P}) {
    std::size_t glen = bound;
    for (const auto& g : gens) glen = std::min(glen, std::max<std::size_t>(g.max_length(), 1));
    const std::size_t room = bound >= glen ? bound - glen : 0;
    const auto words = normal_words(P, room);
    for (const auto& g : gens) {
      NCPoly gn = normal_form(g, P);
      if (gn.is_zero()) continue;
      const std::size_t gl = std::max<std::size_t>(g.max_length(), 1);
      for (const auto& u : words) {
        if (right_only && !u.empty()) continue;
        if (u.size() + gl > bound) continue;
        NCPoly ug = mul(NCPoly::word(u), gn, P);
        for (const auto& v : words) {
          if (u.size() + gl + v.size() > bound) continue;
          span_.insert(as_vec(mul(ug, NCPoly::word(v), P), P));
        }
      }
    }
  }

  bool contains(const NCPoly& e) const {
    return span_.contains(as_vec(normal_form(e, *P_), *P_));
  }
  std::size_t rank() const { return span_.rank(); }

 private:
  const Presentation* P_;
  WordEchelon span_;
};

inline bool ideal_membership_bounded(const NCPoly& e, const std::vector<NCPoly>& gens,
                                     const Presentation& P, std::size_t bound) {
  return IdealSpan(P, gens, bound).contains(e);
}

inline bool right_ideal_membership_bounded(const NCPoly& e, const std::vector<NCPoly>& gens,
                                           const Presentation& P, std::size_t bound) {
  return IdealSpan(P, gens, bound, true).contains(e);
}

}  // namespace qb

#endif
