#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hnlab/errors.hpp"
#include "hnlab/rational.hpp"

namespace hnlab {

/// Ordered set of parameter names a polynomial ring is built over.
///
/// Cheap to copy (shared immutable storage) and compared by content, so two
/// independently constructed {a, b} sets are the same ring.
class Variables {
 public:
  Variables() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Variables(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw std::invalid_argument("empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j]) throw std::invalid_argument("duplicate variable '" + names[i] + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }
  Variables(std::initializer_list<std::string> names) : Variables(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_->size(); }
  const std::vector<std::string>& names() const { return *names_; }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }

  /// Index of `name`, or size() when absent.
  std::size_t index_of(std::string_view name) const {
    auto it = std::find(names_->begin(), names_->end(), name);
    return static_cast<std::size_t>(it - names_->begin());
  }

  friend bool operator==(const Variables& x, const Variables& y) {
    return x.names_ == y.names_ || *x.names_ == *y.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Assignment = std::map<std::string, Rational, std::less<>>;

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in graded lexicographic order, largest first, with the
/// first declared variable ranking highest (a^2 > a*b > b^2 > a > b > 1).
/// Zero coefficients are never stored.
class Poly {
 public:
  using Exponents = std::vector<unsigned>;

  struct GrlexGreater {
    bool operator()(const Exponents& x, const Exponents& y) const {
      auto dx = std::accumulate(x.begin(), x.end(), 0u);
      auto dy = std::accumulate(y.begin(), y.end(), 0u);
      if (dx != dy) return dx > dy;
      return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
    }
  };
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  /// Zero polynomial over no variables.
  Poly() = default;
  /// Zero polynomial over `vars`.
  explicit Poly(Variables vars) : vars_(std::move(vars)) {}
  Poly(Variables vars, const Rational& c) : vars_(std::move(vars)) {
    if (!c.is_zero()) terms_.emplace(Exponents(vars_.size(), 0u), c);
  }

  static Poly constant(Variables vars, const Rational& c) { return Poly(std::move(vars), c); }
  static Poly variable(Variables vars, std::string_view name) {
    auto idx = vars.index_of(name);
    if (idx == vars.size()) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    Exponents e(vars.size(), 0u);
    e[idx] = 1;
    Poly p(std::move(vars));
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }
  static Poly monomial(Variables vars, Exponents e, const Rational& c) {
    if (e.size() != vars.size()) throw std::invalid_argument("exponent vector length mismatch");
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
  }

  /// Parses the canonical textual syntax ("2*a^2 + a*b - 1"); also accepts
  /// parentheses, decimals and division by constants.
  static Poly parse(std::string_view text, const Variables& vars);

  const Variables& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
  }
  Rational constant_value() const {
    if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }
  /// Coefficient of the constant monomial.
  Rational constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0u));
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(total(terms_.begin()->first)); }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
  const Rational& leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return terms_.begin()->second;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) { return accumulate(o, Rational(1)); }
  Poly& operator-=(const Poly& o) { return accumulate(o, Rational(-1)); }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(Poly x, const Rational& s) { return x *= s; }
  friend Poly operator*(const Rational& s, Poly x) { return x *= s; }
  friend Poly operator/(Poly x, const Rational& s) {
    if (s.is_zero()) throw std::domain_error("division of polynomial by zero");
    return x *= Rational(1) / s;
  }
  friend Poly operator*(const Poly& x, const Poly& y) {
    x.require_same_ring(y);
    Poly r(x.vars_);
    for (const auto& [ex, cx] : x.terms_) {
      for (const auto& [ey, cy] : y.terms_) {
        Exponents e(ex.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
        r.add_term(std::move(e), cx * cy);
      }
    }
    return r;
  }

  friend bool operator==(const Poly& x, const Poly& y) {
    return x.vars_ == y.vars_ && x.terms_ == y.terms_;
  }

  Poly pow(unsigned n) const {
    Poly r(vars_, Rational(1));
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

  /// Exact value at a point; every variable of the ring must be assigned.
  Rational evaluate(const Assignment& at) const {
    std::vector<Rational> values;
    values.reserve(vars_.size());
    for (const auto& name : vars_.names()) {
      auto it = at.find(name);
      if (it == at.end()) throw std::invalid_argument("no value assigned to variable '" + name + "'");
      values.push_back(it->second);
    }
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i) t *= values[i].pow(e[i]);
      sum += t;
    }
    return sum;
  }

  /// Constant polynomial (over the same ring) holding evaluate(at).
  Poly evaluated(const Assignment& at) const { return Poly(vars_, evaluate(at)); }

  /// Replaces variable i by images[i]; all images must share one ring.
  Poly substitute(std::span<const Poly> images) const {
    if (images.size() != vars_.size()) throw std::invalid_argument("substitute: wrong number of images");
    if (images.empty()) return *this;
    Poly r(images.front().vars());
    for (const auto& [e, c] : terms_) {
      Poly t(images.front().vars(), c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) t *= images[i].pow(e[i]);
      r += t;
    }
    return r;
  }

  /// Scales to coprime integer coefficients with a positive leading
  /// coefficient. Two polynomials with the same zero set up to a nonzero
  /// constant factor normalize identically.
  Poly primitive() const {
    if (is_zero()) return *this;
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& [e, c] : terms_) {
      den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
      num_gcd = boost::multiprecision::gcd(num_gcd, c.numerator());
    }
    Rational scale(den_lcm, boost::multiprecision::abs(num_gcd));
    if (leading_coefficient().sign() < 0) scale = -scale;
    return *this * scale;
  }

  std::string to_string() const;

 private:
  static unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

  void require_same_ring(const Poly& o) const {
    if (!(vars_ == o.vars_)) throw std::invalid_argument("polynomials over different variable sets");
  }

  void add_term(Exponents e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly& accumulate(const Poly& o, const Rational& s) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c * s);
    return *this;
  }

  Variables vars_;
  Terms terms_;
};

inline std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
    first = false;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Variables& vars) : text_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }
  Poly term() {
    Poly p = unary();
    for (;;) {
      if (eat('*')) {
        p *= unary();
      } else if (eat('/')) {
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) error("division only by nonzero constants");
        p = p / d.constant_value();
      } else {
        return p;
      }
    }
  }
  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected integer exponent");
      auto e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 64) error("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }
  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      return Poly(vars_, Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      if (vars_.index_of(name) == vars_.size()) error("unknown variable '" + std::string(name) + "'");
      return Poly::variable(vars_, name);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Variables& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly Poly::parse(std::string_view text, const Variables& vars) {
  return detail::PolyParser(text, vars).parse();
}

}  // namespace hnlab
