#ifndef QBUNDLE_SCALAR_HPP
#define QBUNDLE_SCALAR_HPP

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbundle/error.hpp"

namespace qb {

inline constexpr std::size_t kMaxParams = 8;
using Exponents = std::array<std::uint16_t, kMaxParams>;

// Session-wide parameter names. The built-ins are registered up front so that
// their variable order (p < q < nu) never depends on parse order.
class ParamRegistry {
 public:
  static ParamRegistry& instance() {
    static ParamRegistry reg;
    return reg;
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(std::string_view n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    return std::nullopt;
  }

  std::size_t add(const std::string& n) {
    if (auto i = find(n)) return *i;
    if (names_.size() >= kMaxParams)
      throw ConstructionError("too many parameters (limit " +
                              std::to_string(kMaxParams) + ")");
    names_.push_back(n);
    return names_.size() - 1;
  }

 private:
  ParamRegistry() : names_{"p", "q", "nu"} {}
  std::vector<std::string> names_;
};

inline mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline unsigned total_degree(const Exponents& e) {
  unsigned s = 0;
  for (auto x : e) s += x;
  return s;
}

// Graded order, ties broken by the highest-index variable first.
struct ExpGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = kMaxParams; i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

inline mpq_class pow_q(const mpq_class& x, unsigned e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), e);
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

// Multivariate polynomial over Z in the registered parameters.
class Poly {
 public:
  using Terms = std::map<Exponents, mpz_class, ExpGreater>;

  Poly() = default;
  Poly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[Exponents{}] = c;
  }
  Poly(const mpz_class& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[Exponents{}] = c;
  }

  static Poly monomial(const Exponents& e, const mpz_class& c) {
    Poly r;
    if (c != 0) r.terms_[e] = c;
    return r;
  }
  static Poly var(std::size_t i, unsigned power = 1) {
    Exponents e{};
    e.at(i) = static_cast<std::uint16_t>(power);
    return monomial(e, 1);
  }

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  mpz_class constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
  }
  const Exponents& lead_exp() const { return terms_.begin()->first; }
  const mpz_class& lead_coeff() const { return terms_.begin()->second; }

  unsigned degree_in(std::size_t v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[v]);
    return d;
  }

  int main_variable() const {
    int v = -1;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = kMaxParams; i-- > 0;)
        if (e[i] != 0) {
          v = std::max(v, static_cast<int>(i));
          break;
        }
    return v;
  }

  std::uint32_t variables_mask() const {
    std::uint32_t m = 0;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < kMaxParams; ++i)
        if (e[i] != 0) m |= 1u << i;
    return m;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < kMaxParams; ++i)
          e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned n) const {
    Poly r(1), b = *this;
    while (n) {
      if (n & 1u) r *= b;
      n >>= 1u;
      if (n) b *= b;
    }
    return r;
  }

  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) g = zgcd(g, c);
    return g;
  }

  Poly divided_by(const mpz_class& c) const {
    Poly r = *this;
    for (auto& [e, x] : r.terms_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
  }

  Poly with_positive_lead() const {
    if (!is_zero() && lead_coeff() < 0) return -*this;
    return *this;
  }

  // Coefficients with respect to variable v, as polynomials free of v.
  std::map<unsigned, Poly> coeffs_in(std::size_t v) const {
    std::map<unsigned, Poly> out;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      unsigned k = f[v];
      f[v] = 0;
      out[k].add_term(f, c);
    }
    return out;
  }

  mpq_class eval(const std::vector<std::optional<mpq_class>>& values) const {
    mpq_class sum = 0;
    for (const auto& [e, c] : terms_) {
      mpq_class t = c;
      for (std::size_t i = 0; i < kMaxParams; ++i) {
        if (e[i] == 0) continue;
        if (i >= values.size() || !values[i])
          throw EvaluationError("no value for parameter " +
                                ParamRegistry::instance().name(i));
        t *= pow_q(*values[i], e[i]);
      }
      sum += t;
    }
    return sum;
  }

  // Replaces v by a/b and clears the denominator b^degree_in(v).
  Poly substitute_scaled(std::size_t v, const mpz_class& a,
                         const mpz_class& b, unsigned deg) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      unsigned k = f[v];
      f[v] = 0;
      mpz_class pa, pb;
      mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), k);
      mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), deg - k);
      r.add_term(f, c * pa * pb);
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      mpz_class a = c;
      if (a < 0) a = -a;
      if (c < 0)
        s += "-";
      else if (!first)
        s += "+";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < kMaxParams; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += ParamRegistry::instance().name(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        s += a.get_str();
      else if (a == 1)
        s += mono;
      else
        s += a.get_str() + "*" + mono;
    }
    return s;
  }

 private:
  void add_term(const Exponents& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline Poly divexact(Poly a, const Poly& b) {
  if (b.is_zero()) throw EvaluationError("polynomial division by zero");
  if (b.is_constant()) {
    const mpz_class c = b.constant_value();
    Poly r;
    for (const auto& [e, x] : a.terms()) {
      if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
        throw Error("inexact polynomial division");
      r += Poly::monomial(e, x / c);
    }
    return r;
  }
  Poly q;
  const Exponents& eb = b.lead_exp();
  const mpz_class& cb = b.lead_coeff();
  while (!a.is_zero()) {
    Exponents d{};
    const Exponents& ea = a.lead_exp();
    for (std::size_t i = 0; i < kMaxParams; ++i) {
      if (ea[i] < eb[i]) throw Error("inexact polynomial division");
      d[i] = static_cast<std::uint16_t>(ea[i] - eb[i]);
    }
    if (!mpz_divisible_p(a.lead_coeff().get_mpz_t(), cb.get_mpz_t()))
      throw Error("inexact polynomial division");
    Poly t = Poly::monomial(d, a.lead_coeff() / cb);
    q += t;
    a -= t * b;
  }
  return q;
}

Poly gcd(const Poly& a, const Poly& b);

namespace detail {

inline Poly monomial_gcd(const Poly& m, const Poly& other) {
  Exponents e = m.lead_exp();
  mpz_class c = zgcd(m.lead_coeff(), other.content());
  for (const auto& [f, x] : other.terms())
    for (std::size_t i = 0; i < kMaxParams; ++i) e[i] = std::min(e[i], f[i]);
  return Poly::monomial(e, c);
}

inline Poly content_in(const Poly& a, std::size_t v) {
  Poly g;
  for (const auto& [k, c] : a.coeffs_in(v)) {
    g = gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

inline Poly primitive_part(const Poly& a, std::size_t v) {
  return divexact(a, content_in(a, v));
}

// Pseudo-remainder of a by b with respect to v.
inline Poly prem(Poly a, const Poly& b, std::size_t v) {
  const unsigned db = b.degree_in(v);
  const Poly lcb = b.coeffs_in(v).rbegin()->second;
  while (!a.is_zero()) {
    unsigned da = a.degree_in(v);
    if (da < db) break;
    Poly lca = a.coeffs_in(v).rbegin()->second;
    a = lcb * a - lca * Poly::var(v, da - db) * b;
  }
  return a;
}

inline constexpr std::uint64_t kPrime = 2147483647ULL;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  a %= kPrime;
  while (e) {
    if (e & 1u) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1u;
  }
  return r;
}

// Image in Z_p[v] after substituting vals for the other variables.
inline std::vector<std::uint64_t> univariate_image(const Poly& a, std::size_t v,
                                                   const std::array<std::uint64_t, kMaxParams>& vals) {
  std::vector<std::uint64_t> out(a.degree_in(v) + 1, 0);
  for (const auto& [e, c] : a.terms()) {
    std::uint64_t t = mpz_fdiv_ui(c.get_mpz_t(), kPrime);
    for (std::size_t i = 0; i < kMaxParams; ++i)
      if (i != v && e[i]) t = mulmod(t, powmod(vals[i], e[i]));
    out[e[v]] = (out[e[v]] + t) % kPrime;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline std::size_t gcd_degree_mod_p(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + kPrime - mulmod(f, b[i])) % kPrime;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Sound test for "no non-constant common factor": with leading coefficients
// surviving the substitution, deg_v gcd(a, b) is bounded by the image gcd.
inline bool certainly_coprime(const Poly& a, const Poly& b) {
  const std::uint32_t shared = a.variables_mask() & b.variables_mask();
  std::uint64_t seed = 0x9E3779B97F4A7C15ULL;
  for (std::size_t v = 0; v < kMaxParams; ++v) {
    if (!(shared >> v & 1u)) continue;
    bool decided = false;
    for (int attempt = 0; attempt < 3 && !decided; ++attempt) {
      std::array<std::uint64_t, kMaxParams> vals{};
      for (auto& x : vals) {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        x = seed % kPrime;
      }
      auto ia = univariate_image(a, v, vals), ib = univariate_image(b, v, vals);
      if (ia.size() != a.degree_in(v) + 1 || ib.size() != b.degree_in(v) + 1) continue;
      if (gcd_degree_mod_p(ia, ib) != 0) return false;
      decided = true;
    }
    if (!decided) return false;
  }
  return true;
}

}  // namespace detail

inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.with_positive_lead();
  if (b.is_zero()) return a.with_positive_lead();
  if (a.num_terms() == 1) return detail::monomial_gcd(a, b);
  if (b.num_terms() == 1) return detail::monomial_gcd(b, a);
  if (detail::certainly_coprime(a, b)) return Poly(zgcd(a.content(), b.content()));
  const int mv = std::max(a.main_variable(), b.main_variable());
  const auto v = static_cast<std::size_t>(mv);
  if (a.degree_in(v) == 0) return gcd(a, detail::content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(detail::content_in(a, v), b);
  Poly ca = detail::content_in(a, v), cb = detail::content_in(b, v);
  Poly pa = divexact(a, ca), pb = divexact(b, cb);
  Poly g = gcd(ca, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  for (;;) {
    Poly r = detail::prem(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = Poly(1);
      break;
    }
    pa = std::move(pb);
    pb = detail::primitive_part(r, v);
  }
  return (g * detail::primitive_part(pb, v)).with_positive_lead();
}

// Values for a (possibly partial) specialization, indexed by registry slot.
using ParamValues = std::vector<std::optional<mpq_class>>;

// Rational function num/den in lowest terms, den with positive leading
// coefficient.
class ParamScalar {
 public:
  ParamScalar() : den_(1) {}
  ParamScalar(long c) : num_(c), den_(1) {}  // NOLINT
  ParamScalar(const mpz_class& c) : num_(c), den_(1) {}  // NOLINT
  ParamScalar(const mpq_class& c)  // NOLINT
      : num_(c.get_num()), den_(c.get_den()) {}
  ParamScalar(const Poly& n) : num_(n), den_(1) {}  // NOLINT

  static ParamScalar fraction(const Poly& n, const Poly& d) {
    if (d.is_zero())
      throw ConstructionError("zero denominator in parameter scalar");
    ParamScalar s;
    s.num_ = n;
    s.den_ = d;
    s.canonicalize();
    return s;
  }

  static ParamScalar param(std::size_t i) { return ParamScalar(Poly::var(i)); }
  static ParamScalar param(std::string_view name) {
    auto i = ParamRegistry::instance().find(name);
    if (!i) throw ConstructionError("unknown parameter " + std::string(name));
    return param(*i);
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_one() const {
    return den_.is_constant() && den_.constant_value() == 1 &&
           num_.is_constant() && num_.constant_value() == 1;
  }
  mpq_class constant_value() const {
    mpq_class r(num_.constant_value(), den_.constant_value());
    r.canonicalize();
    return r;
  }
  // True when the numerator is a single term and the denominator is 1.
  bool is_simple() const { return num_.num_terms() <= 1 && den_ == Poly(1); }
  std::uint32_t variables_mask() const {
    return num_.variables_mask() | den_.variables_mask();
  }

  ParamScalar operator-() const {
    ParamScalar r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return fraction(a.num_ + b.num_, a.den_);
    ParamScalar r;
    if (b.den_ == Poly(1)) {
      r.num_ = a.num_ + b.num_ * a.den_;
      r.den_ = a.den_;
      return r;
    }
    if (a.den_ == Poly(1)) {
      r.num_ = a.num_ * b.den_ + b.num_;
      r.den_ = b.den_;
      return r;
    }
    Poly g = gcd(a.den_, b.den_);
    Poly ad = divexact(a.den_, g), bd = divexact(b.den_, g);
    return fraction(a.num_ * bd + b.num_ * ad, ad * b.den_);
  }
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) {
    return a + (-b);
  }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_ == Poly(1) && b.den_ == Poly(1)) return ParamScalar(a.num_ * b.num_);
    Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    ParamScalar r;
    r.num_ = divexact(a.num_, g1) * divexact(b.num_, g2);
    r.den_ = divexact(a.den_, g2) * divexact(b.den_, g1);
    r.fix_sign();
    return r;
  }
  ParamScalar inverse() const {
    if (is_zero()) throw EvaluationError("inverse of zero scalar");
    ParamScalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.fix_sign();
    return r;
  }
  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
    return a * b.inverse();
  }
  ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
  ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
  ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }

  ParamScalar pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    ParamScalar r;
    r.num_ = num_.pow(static_cast<unsigned>(n));
    r.den_ = den_.pow(static_cast<unsigned>(n));
    return r;
  }

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) {
    return !(a == b);
  }

  mpq_class eval(const ParamValues& values) const {
    mpq_class d = den_.eval(values);
    if (d == 0)
      throw EvaluationError("denominator " + den_.to_string() +
                            " vanishes at the given parameters");
    mpq_class r = num_.eval(values) / d;
    r.canonicalize();
    return r;
  }

  // Substitutes the given values and keeps the other parameters symbolic.
  ParamScalar specialize(const ParamValues& values) const {
    Poly n = num_, d = den_;
    Poly scale_n(1), scale_d(1);
    for (std::size_t i = 0; i < values.size() && i < kMaxParams; ++i) {
      if (!values[i]) continue;
      const mpz_class a = values[i]->get_num(), b = values[i]->get_den();
      unsigned dn = n.degree_in(i), dd = d.degree_in(i);
      if (dn == 0 && dd == 0) continue;
      n = n.substitute_scaled(i, a, b, dn);
      d = d.substitute_scaled(i, a, b, dd);
      mpz_class pn, pd;
      mpz_pow_ui(pn.get_mpz_t(), b.get_mpz_t(), dn);
      mpz_pow_ui(pd.get_mpz_t(), b.get_mpz_t(), dd);
      scale_n *= Poly(pd);
      scale_d *= Poly(pn);
    }
    if (d.is_zero())
      throw EvaluationError("denominator " + den_.to_string() +
                            " vanishes at the given parameters");
    return fraction(n * scale_n, d * scale_d);
  }

  std::string to_string() const {
    if (den_ == Poly(1)) return num_.to_string();
    auto wrap = [](const Poly& p) {
      std::string s = p.to_string();
      return p.num_terms() > 1 ? "(" + s + ")" : s;
    };
    std::string d = den_.to_string();
    if (den_.num_terms() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
    return wrap(num_) + "/" + d;
  }

 private:
  void fix_sign() {
    if (den_.lead_coeff() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  void canonicalize() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (den_.is_constant()) {
      mpz_class g = zgcd(num_.content(), den_.constant_value());
      if (den_.constant_value() < 0) g = -g;
      num_ = num_.divided_by(g);
      den_ = den_.divided_by(g);
      return;
    }
    Poly g = gcd(num_, den_);
    if (!(g.is_constant() && g.constant_value() == 1)) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
    fix_sign();
  }

  Poly num_, den_;
};

}  // namespace qb

#endif
