#ifndef QBUNDLE_PRESENTATION_HPP
#define QBUNDLE_PRESENTATION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qbundle/error.hpp"
#include "qbundle/scalar.hpp"

namespace qb {

using Gen = std::uint32_t;
using Word = std::vector<Gen>;

inline Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// Finite linear combination of words. Has no presentation attached; every
// operation that needs one takes it explicitly.
class NCPoly {
 public:
  using Terms = std::map<Word, ParamScalar>;

  NCPoly() = default;
  static NCPoly scalar(const ParamScalar& c) { return word({}, c); }
  static NCPoly word(const Word& w, const ParamScalar& c = ParamScalar(1)) {
    NCPoly r;
    r.add(w, c);
    return r;
  }
  static NCPoly gen(Gen g) { return word(Word{g}); }

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Word& w, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ParamScalar coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ParamScalar() : it->second;
  }

  // Scalar part (coefficient of the empty word).
  ParamScalar constant_term() const { return coeff({}); }
  bool is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }

  std::size_t max_length() const {
    std::size_t m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.size());
    return m;
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  NCPoly operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  friend NCPoly operator*(const ParamScalar& s, const NCPoly& a) {
    if (s.is_zero()) return {};
    NCPoly r = a;
    for (auto& [w, c] : r.terms_) c *= s;
    return r;
  }
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  // Product in the free algebra (concatenation, no rewriting).
  friend NCPoly free_product(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add(concat(wa, wb), ca * cb);
    return r;
  }

  template <class F>
  NCPoly map_coefficients(F&& f) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.add(w, f(c));
    return r;
  }

 private:
  Terms terms_;
};

struct Generator {
  Generator() = default;
  Generator(std::string n, int d) : name(std::move(n)), degree(d) {}

  std::string name;
  int degree = 0;
  std::optional<Gen> base;  // for a differential dx, the index of x
  unsigned weight = 1;
  unsigned leg = 0;  // tensor leg this generator lives in
  Gen local = 0;     // index inside the leg's factor presentation
};

struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

class Presentation;
using PresPtr = std::shared_ptr<const Presentation>;

struct LegInfo {
  PresPtr factor;  // null: the presentation itself (plain, one leg)
  Gen offset = 0;
  Gen count = 0;
};

// Rewrite step limit given to presentations as they are created.
inline std::size_t& default_max_steps() {
  static std::size_t steps = 1000000;
  return steps;
}

// Sets default_max_steps() for the lifetime of the guard.
class StepLimitScope {
 public:
  explicit StepLimitScope(std::size_t steps) : saved_(default_max_steps()) { default_max_steps() = steps; }
  ~StepLimitScope() { default_max_steps() = saved_; }
  StepLimitScope(const StepLimitScope&) = delete;
  StepLimitScope& operator=(const StepLimitScope&) = delete;

 private:
  std::size_t saved_;
};

class Presentation {
 public:
  std::string name;
  std::vector<Generator> gens;
  std::vector<unsigned> rank;  // precedence rank; higher rank = larger letter
  std::vector<RewriteRule> rules;
  std::vector<std::optional<NCPoly>> differential;  // image of d on generators
  bool has_differential = false;
  std::vector<std::string> notes;  // genericity assumptions made while orienting
  std::vector<LegInfo> legs;
  bool scalar_field = false;
  std::size_t max_steps = default_max_steps();

  // Rebuilds lookup tables; call after editing the public fields.
  void finalize() {
    by_name_.clear();
    for (Gen g = 0; g < gens.size(); ++g) {
      if (gens[g].name.empty()) throw ConstructionError("empty generator name");
      if (!by_name_.emplace(gens[g].name, g).second)
        throw ConstructionError("duplicate generator " + gens[g].name);
      if (gens[g].weight == 0)
        throw ConstructionError("generator weight must be positive: " + gens[g].name);
    }
    if (rank.size() != gens.size()) {
      rank.resize(gens.size());
      for (Gen g = 0; g < gens.size(); ++g) rank[g] = g;
    }
    differential.resize(gens.size());
    if (!scalar_field && (legs.empty() || (legs.size() == 1 && !legs[0].factor))) {
      legs.clear();
      legs.push_back({nullptr, 0, static_cast<Gen>(gens.size())});
      for (Gen g = 0; g < gens.size(); ++g) {
        gens[g].leg = 0;
        gens[g].local = g;
      }
    }
    by_first_.assign(gens.size(), {});
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const auto& r = rules[i];
      if (r.lhs.empty()) throw ConstructionError("rule with empty left side");
      for (Gen g : r.lhs)
        if (g >= gens.size()) throw ConstructionError("rule uses unknown generator");
      for (const auto& [w, c] : r.rhs.terms())
        if (!less(w, r.lhs))
          throw ConstructionError("non-orientable rule: " + word_string(r.lhs) +
                                  " is not strictly larger than " + word_string(w));
      by_first_[r.lhs.front()].push_back(i);
    }
    for (auto& v : by_first_)
      std::stable_sort(v.begin(), v.end(), [&](std::size_t a, std::size_t b) {
        return rules[a].lhs.size() < rules[b].lhs.size();
      });
  }

  std::optional<Gen> find(std::string_view n) const {
    auto it = by_name_.find(std::string(n));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }
  Gen index(std::string_view n) const {
    auto g = find(n);
    if (!g) throw ConstructionError("unknown generator " + std::string(n) + " in " + name);
    return *g;
  }
  // Index of the differential generator whose base is g.
  std::optional<Gen> differential_of(Gen g) const {
    for (Gen h = 0; h < gens.size(); ++h)
      if (gens[h].base && *gens[h].base == g) return h;
    return std::nullopt;
  }

  unsigned word_weight(const Word& w) const {
    unsigned s = 0;
    for (Gen g : w) s += gens[g].weight;
    return s;
  }
  int word_degree(const Word& w) const {
    int s = 0;
    for (Gen g : w) s += gens[g].degree;
    return s;
  }

  // Weighted length, then length, then lexicographic by precedence rank.
  bool less(const Word& a, const Word& b) const {
    unsigned wa = word_weight(a), wb = word_weight(b);
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return rank[a[i]] < rank[b[i]];
    return false;
  }

  const std::vector<std::size_t>& rules_starting_with(Gen g) const {
    return by_first_[g];
  }

  std::size_t num_legs() const { return legs.size(); }
  const Presentation& leg_factor(std::size_t k) const {
    return legs[k].factor ? *legs[k].factor : *this;
  }

  std::string word_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += "*";
      s += w[i] < gens.size() ? gens[w[i]].name : "?";
    }
    return s;
  }

 private:
  std::unordered_map<std::string, Gen> by_name_;
  std::vector<std::vector<std::size_t>> by_first_;
};

struct OrderLess {
  const Presentation* P;
  bool operator()(const Word& a, const Word& b) const { return P->less(a, b); }
};

// Position and rule of the leftmost redex, shortest left side first.
inline std::optional<std::pair<std::size_t, std::size_t>> find_redex(
    const Word& w, const Presentation& P) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t ri : P.rules_starting_with(w[i])) {
      const Word& l = P.rules[ri].lhs;
      if (i + l.size() > w.size()) continue;
      if (std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(i)))
        return std::make_pair(i, ri);
    }
  return std::nullopt;
}

inline bool is_normal_word(const Word& w, const Presentation& P) {
  return !find_redex(w, P).has_value();
}

// Reduces terms from the largest word down; every rewrite produces strictly
// smaller words, so a word moved to the result is never produced again.
inline NCPoly normal_form(const NCPoly& e, const Presentation& P,
                          std::optional<std::size_t> max_steps = std::nullopt) {
  const std::size_t limit = max_steps.value_or(P.max_steps);
  std::map<Word, ParamScalar, OrderLess> work{OrderLess{&P}};
  auto push = [&](Word w, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = work.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  for (const auto& [w, c] : e.terms()) push(w, c);
  NCPoly out;
  std::size_t steps = 0;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    ParamScalar c = it->second;
    work.erase(it);
    auto redex = find_redex(w, P);
    if (!redex) {
      out.add(w, c);
      continue;
    }
    if (++steps > limit)
      throw RewriteError("normal form exceeded " + std::to_string(limit) +
                         " rewrite steps at word " + P.word_string(w));
    const auto [pos, ri] = *redex;
    const RewriteRule& r = P.rules[ri];
    for (const auto& [rw, rc] : r.rhs.terms()) {
      Word nw;
      nw.reserve(w.size() - r.lhs.size() + rw.size());
      nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()),
                w.end());
      push(std::move(nw), c * rc);
    }
  }
  return out;
}

inline NCPoly mul(const NCPoly& a, const NCPoly& b, const Presentation& P) {
  return normal_form(free_product(a, b), P);
}

inline NCPoly mul(std::initializer_list<NCPoly> fs, const Presentation& P) {
  NCPoly r = NCPoly::scalar(1);
  for (const auto& f : fs) r = mul(r, f, P);
  return r;
}

inline NCPoly power(const NCPoly& a, unsigned n, const Presentation& P) {
  NCPoly r = NCPoly::scalar(1);
  for (unsigned i = 0; i < n; ++i) r = mul(r, a, P);
  return r;
}

inline std::optional<Word> leading_word(const NCPoly& e, const Presentation& P) {
  std::optional<Word> best;
  for (const auto& [w, c] : e.terms())
    if (!best || P.less(*best, w)) best = w;
  return best;
}

// Degree of a homogeneous element; nullopt for zero, throws if mixed.
inline std::optional<int> homogeneous_degree(const NCPoly& e, const Presentation& P) {
  std::optional<int> d;
  for (const auto& [w, c] : e.terms()) {
    int k = P.word_degree(w);
    if (d && *d != k)
      throw ConstructionError("element mixes form degrees " + std::to_string(*d) +
                              " and " + std::to_string(k));
    d = k;
  }
  return d;
}

// Turns a relation into a rule lhs -> rhs with lhs the leading word. A
// non-constant leading coefficient is recorded as a genericity assumption.
inline RewriteRule orient(const NCPoly& rel, const Presentation& P,
                          std::vector<std::string>* notes = nullptr) {
  auto lw = leading_word(rel, P);
  if (!lw) throw ConstructionError("cannot orient the zero relation");
  homogeneous_degree(rel, P);
  const ParamScalar c = rel.coeff(*lw);
  if (notes) {
    // Parameters are invertible, so only the numerator's non-monomial part matters.
    Poly num = c.num();
    Exponents lo = num.lead_exp();
    for (const auto& [e, k] : num.terms())
      for (std::size_t i = 0; i < kMaxParams; ++i) lo[i] = std::min(lo[i], e[i]);
    num = divexact(num, Poly::monomial(lo, num.content())).with_positive_lead();
    if (!num.is_constant()) {
      std::string n = "assumed " + num.to_string() + " != 0";
      if (std::find(notes->begin(), notes->end(), n) == notes->end()) notes->push_back(n);
    }
  }
  const ParamScalar inv = c.inverse();
  RewriteRule r;
  r.lhs = *lw;
  for (const auto& [w, k] : rel.terms())
    if (w != *lw) r.rhs.add(w, -(k * inv));
  return r;
}

inline std::string scalar_factor_string(const ParamScalar& c) {
  std::string s = c.to_string();
  return c.is_simple() ? s : "(" + s + ")";
}

// Parseable text form, terms in descending monomial order.
inline std::string to_string(const NCPoly& e, const Presentation& P) {
  if (e.is_zero()) return "0";
  std::vector<const NCPoly::Terms::value_type*> ts;
  for (const auto& t : e.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [&](auto* a, auto* b) { return P.less(b->first, a->first); });
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto& [w, c] = *ts[i];
    std::string term;
    bool neg = false;
    if (w.empty()) {
      term = c.to_string();
      if (c.is_simple() && c.num().lead_coeff() < 0) {
        neg = true;
        term = (-c).to_string();
      } else if (!c.is_simple()) {
        term = "(" + term + ")";
      }
    } else {
      ParamScalar k = c;
      if (k.is_simple() && k.num().lead_coeff() < 0) {
        neg = true;
        k = -k;
      }
      term = k.is_one() ? P.word_string(w) : scalar_factor_string(k) + "*" + P.word_string(w);
    }
    if (i == 0)
      out += neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

// A presentation with no generators; target of counits.
inline PresPtr scalar_presentation() {
  static PresPtr s = [] {
    auto p = std::make_shared<Presentation>();
    p->name = "scalars";
    p->scalar_field = true;
    p->finalize();
    return PresPtr(p);
  }();
  return s;
}

}  // namespace qb

#endif
