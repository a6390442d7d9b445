#ifndef QBUNDLE_PARSER_HPP
#define QBUNDLE_PARSER_HPP

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qbundle/presentation.hpp"

namespace qb {

// Parameter values substituted while parsing; unbound parameters stay symbolic.
using ParamBindings = std::map<std::string, ParamScalar>;

inline ParamValues to_param_values(const ParamBindings& b) {
  ParamValues v(ParamRegistry::instance().size());
  for (const auto& [name, s] : b) {
    auto i = ParamRegistry::instance().find(name);
    if (!i) throw ConstructionError("unknown parameter " + name);
    if (!s.is_constant())
      throw ConstructionError("parameter " + name + " must be bound to a rational");
    v[*i] = s.constant_value();
  }
  return v;
}

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view src, const Presentation* P, const ParamBindings& b)
      : s_(src), P_(P), bind_(b) {}

  NCPoly parse() {
    NCPoly e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  NCPoly expr() {
    NCPoly acc;
    bool first = true;
    for (;;) {
      char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        ++i_;
        neg = c == '-';
      } else if (!first) {
        break;
      }
      NCPoly t = term();
      if (neg)
        acc -= t;
      else
        acc += t;
      first = false;
    }
    return acc;
  }

  NCPoly term() {
    NCPoly acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++i_;
        acc = free_product(acc, unary());
      } else if (c == '/') {
        ++i_;
        std::size_t at = i_;
        NCPoly d = unary();
        if (!d.is_scalar()) throw ParseError("division by a non-scalar", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = d.constant_term().inverse() * acc;
      } else {
        return acc;
      }
    }
  }

  NCPoly unary() {
    if (peek() == '-') {
      ++i_;
      return -unary();
    }
    if (peek() == '+') {
      ++i_;
      return unary();
    }
    return power();
  }

  long integer() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, i_ - start)));
  }

  NCPoly power() {
    NCPoly base = primary();
    if (!eat('^')) return base;
    std::size_t at = i_;
    long n;
    if (eat('(')) {
      bool neg = eat('-');
      n = integer();
      if (neg) n = -n;
      if (!eat(')')) fail("expected ')'");
    } else {
      bool neg = eat('-');
      n = integer();
      if (neg) n = -n;
    }
    if (n < 0) {
      if (!base.is_scalar() || base.is_zero())
        throw ParseError("negative power of a non-scalar", at);
      return NCPoly::scalar(base.constant_term().pow(static_cast<int>(n)));
    }
    NCPoly r = NCPoly::scalar(1);
    for (long k = 0; k < n; ++k) r = free_product(r, base);
    return r;
  }

  std::string ident() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  NCPoly primary() {
    char c = peek();
    if (c == '(') {
      ++i_;
      NCPoly e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      mpz_class v(std::string(s_.substr(start, i_ - start)));
      return NCPoly::scalar(ParamScalar(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = i_;
      std::string id = ident();
      if (id == "d" && peek() == '(' && !(P_ && P_->find("d"))) {
        ++i_;
        std::size_t inner_at = i_;
        skip();
        inner_at = i_;
        std::string inner = ident();
        if (!eat(')')) fail("expected ')'");
        if (!P_) throw ParseError("no generators available", inner_at);
        auto g = P_->find(inner);
        if (!g) throw ParseError("unknown generator '" + inner + "'", inner_at);
        auto dg = P_->differential_of(*g);
        if (!dg) throw ParseError("generator '" + inner + "' has no differential", inner_at);
        return NCPoly::gen(*dg);
      }
      if (P_)
        if (auto g = P_->find(id)) return NCPoly::gen(*g);
      if (auto b = bind_.find(id); b != bind_.end()) return NCPoly::scalar(b->second);
      if (ParamRegistry::instance().find(id)) return NCPoly::scalar(ParamScalar::param(id));
      throw ParseError("unknown identifier '" + id + "'", at);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
  const Presentation* P_;
  const ParamBindings& bind_;
};

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace detail

// Parses an element in the free algebra on P's generators (no rewriting).
inline NCPoly parse_expression(std::string_view src, const Presentation& P,
                               const ParamBindings& bindings = {}) {
  return detail::ExprParser(src, &P, bindings).parse();
}

inline ParamScalar parse_scalar(std::string_view src, const ParamBindings& bindings = {}) {
  NCPoly e = detail::ExprParser(src, nullptr, bindings).parse();
  return e.constant_term();
}

// "lhs = rhs" or a bare expression meaning "= 0".
inline NCPoly parse_relation(std::string_view src, const Presentation& P,
                             const ParamBindings& bindings = {}) {
  auto eq = src.find('=');
  if (eq == std::string_view::npos) return parse_expression(src, P, bindings);
  return parse_expression(src.substr(0, eq), P, bindings) -
         parse_expression(src.substr(eq + 1), P, bindings);
}

// Parses "p=1/2,q=1/3" style lists. "symbolic" or an empty string binds nothing.
inline ParamBindings parse_param_list(const std::string& text) {
  ParamBindings b;
  std::string t = detail::trim(text);
  if (t.empty() || t == "symbolic") return b;
  std::stringstream in(t);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ConstructionError("expected name=value in '" + item + "'");
    std::string name = detail::trim(item.substr(0, eq));
    if (!ParamRegistry::instance().find(name)) ParamRegistry::instance().add(name);
    ParamScalar v = parse_scalar(item.substr(eq + 1));
    if (!v.is_constant()) throw ConstructionError("value of " + name + " must be rational");
    b[name] = v;
  }
  return b;
}

struct PresentationFile {
  PresPtr pres;
  ParamBindings bindings;
  // Sections other than the core ones, if the caller allowed them.
  std::map<std::string, std::vector<std::string>> extra;
};

// Text format:
//   [presentation]  name = ...
//   [params]        p            or   p = 1/2
//   [generators]    name degree [base] [weight=N]
//   [precedence]    ascending list, optionally separated by '<'
//   [relations]     lhs = rhs   (oriented in order, each reduced by the previous)
//   [differential]  x = expr    (defaults to d(x) = dx for declared differentials)
// Values in `overrides` win over the file's [params] section.
inline PresentationFile parse_presentation_text(const std::string& text,
                                                const std::set<std::string>& extra_sections = {},
                                                const ParamBindings& overrides = {}) {
  static const std::set<std::string> core = {"presentation", "params", "generators",
                                             "precedence", "relations", "differential"};
  std::map<std::string, std::vector<std::string>> sections;
  std::vector<std::string> order;
  std::string current;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string t = detail::trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ParseError("malformed section header on line " + std::to_string(lineno), 0);
      current = detail::trim(t.substr(1, t.size() - 2));
      if (!core.count(current) && !extra_sections.count(current))
        throw ConstructionError("unknown section [" + current + "] on line " + std::to_string(lineno));
      sections[current];
      continue;
    }
    if (current.empty())
      throw ConstructionError("content before first section on line " + std::to_string(lineno));
    sections[current].push_back(t);
  }

  PresentationFile out;
  out.bindings = overrides;
  auto P = std::make_shared<Presentation>();
  P->name = "presentation";
  for (const auto& l : sections["presentation"]) {
    auto eq = l.find('=');
    if (eq == std::string::npos) throw ConstructionError("expected key = value: " + l);
    std::string k = detail::trim(l.substr(0, eq)), v = detail::trim(l.substr(eq + 1));
    if (k == "name")
      P->name = v;
    else if (k == "version") {
      if (v != "1") throw ConstructionError("unsupported presentation format version " + v);
    } else if (k == "max_steps")
      P->max_steps = std::stoul(v);
    else
      throw ConstructionError("unknown presentation key " + k);
  }
  for (const auto& l : sections["params"]) {
    auto eq = l.find('=');
    if (eq == std::string::npos) {
      for (auto& n : detail::split_ws(l)) ParamRegistry::instance().add(n);
      continue;
    }
    std::string name = detail::trim(l.substr(0, eq));
    ParamRegistry::instance().add(name);
    if (overrides.count(name)) continue;
    ParamScalar v = parse_scalar(l.substr(eq + 1), out.bindings);
    if (!v.is_constant()) throw ConstructionError("value of " + name + " must be rational");
    out.bindings[name] = v;
  }
  std::vector<std::pair<Gen, std::string>> bases;
  for (const auto& l : sections["generators"]) {
    auto f = detail::split_ws(l);
    if (f.size() < 2) throw ConstructionError("generator line needs a name and a degree: " + l);
    Generator g;
    g.name = f[0];
    g.degree = std::stoi(f[1]);
    if (g.degree < 0 || g.degree > 1)
      throw ConstructionError("generator degree must be 0 or 1: " + l);
    for (std::size_t i = 2; i < f.size(); ++i) {
      if (f[i].rfind("weight=", 0) == 0)
        g.weight = static_cast<unsigned>(std::stoul(f[i].substr(7)));
      else
        bases.emplace_back(static_cast<Gen>(P->gens.size()), f[i]);
    }
    P->gens.push_back(g);
  }
  P->finalize();
  for (const auto& [g, b] : bases) {
    P->gens[g].base = P->index(b);
    if (P->gens[g].degree != 1) throw ConstructionError("only degree-1 generators may have a base");
  }
  if (!sections["precedence"].empty()) {
    std::string all;
    for (const auto& l : sections["precedence"]) all += " " + l;
    for (auto& c : all)
      if (c == '<' || c == ',') c = ' ';
    auto names = detail::split_ws(all);
    if (names.size() != P->gens.size())
      throw ConstructionError("precedence must list every generator exactly once");
    std::set<Gen> seen;
    for (unsigned r = 0; r < names.size(); ++r) {
      Gen g = P->index(names[r]);
      if (!seen.insert(g).second) throw ConstructionError("duplicate in precedence: " + names[r]);
      P->rank[g] = r;
    }
  }
  for (Gen g = 0; g < P->gens.size(); ++g)
    if (P->gens[g].base) {
      P->has_differential = true;
      P->differential[*P->gens[g].base] = NCPoly::gen(g);
    }
  for (const auto& l : sections["differential"]) {
    auto eq = l.find('=');
    if (eq == std::string::npos) throw ConstructionError("expected x = expr: " + l);
    Gen g = P->index(detail::trim(l.substr(0, eq)));
    P->differential[g] = parse_expression(l.substr(eq + 1), *P, out.bindings);
    P->has_differential = true;
  }
  P->finalize();
  for (const auto& l : sections["relations"]) {
    NCPoly rel = normal_form(parse_relation(l, *P, out.bindings), *P);
    if (rel.is_zero()) {
      P->notes.push_back("relation reduces to zero: " + l);
      continue;
    }
    P->rules.push_back(orient(rel, *P, &P->notes));
    P->finalize();
  }
  for (const auto& name : extra_sections)
    if (sections.count(name)) out.extra[name] = sections[name];
  out.pres = P;
  return out;
}

inline PresentationFile load_presentation_file(const std::string& path,
                                               const std::set<std::string>& extra_sections = {},
                                               const ParamBindings& overrides = {}) {
  std::ifstream f(path);
  if (!f) throw ConstructionError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_presentation_text(ss.str(), extra_sections, overrides);
}

}  // namespace qb

#endif
