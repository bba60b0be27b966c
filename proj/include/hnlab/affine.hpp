#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnlab/matrix.hpp"
#include "hnlab/poly.hpp"

namespace hnlab {

/// Affine subspace of parameter space Q^n cut out by linear equations.
///
/// Stored as the reduced row echelon form of the augmented system
/// [coefficients | constant] with rows sum_i c_i x_i + c_0 = 0, which makes
/// equality structural.
class AffineSet {
 public:
  /// All of Q^n.
  explicit AffineSet(Variables vars) : vars_(std::move(vars)), eq_(0, vars_.size() + 1) {}

  /// Common zeros of polynomials of degree <= 1.
  static AffineSet from_linear(const Variables& vars, const std::vector<Poly>& polys) {
    AffineSet s(vars);
    RatMatrix m(polys.size(), vars.size() + 1, Rational(0));
    for (std::size_t r = 0; r < polys.size(); ++r) {
      if (polys[r].total_degree() > 1) throw std::invalid_argument("AffineSet: nonlinear equation " + polys[r].to_string());
      for (const auto& [e, c] : polys[r].terms()) {
        std::size_t col = vars.size();
        for (std::size_t v = 0; v < e.size(); ++v)
          if (e[v] == 1) col = v;
        m(r, col) = c;
      }
    }
    s.set_equations(std::move(m));
    return s;
  }

  static AffineSet point(const Variables& vars, const std::vector<Rational>& coords) {
    std::vector<Poly> eqs;
    for (std::size_t v = 0; v < vars.size(); ++v)
      eqs.push_back(Poly::variable(vars, vars[v]) - Poly(vars, coords.at(v)));
    return from_linear(vars, eqs);
  }

  const Variables& vars() const { return vars_; }
  bool empty() const { return empty_; }
  /// Dimension, or -1 when empty.
  int dimension() const { return empty_ ? -1 : static_cast<int>(vars_.size() - eq_.rows()); }

  std::vector<Poly> equations() const {
    std::vector<Poly> out;
    for (std::size_t r = 0; r < eq_.rows(); ++r) out.push_back(row_poly(r));
    return out;
  }

  AffineSet intersect(const AffineSet& o) const {
    if (!(vars_ == o.vars_)) throw std::invalid_argument("AffineSet: different parameter spaces");
    auto eqs = equations();
    auto more = o.equations();
    eqs.insert(eqs.end(), more.begin(), more.end());
    AffineSet s = from_linear(vars_, eqs);
    if (empty_ || o.empty_) s.empty_ = true;
    return s;
  }

  /// True when o ⊆ *this.
  bool contains(const AffineSet& o) const {
    if (o.empty_) return true;
    if (empty_) return false;
    return o.intersect(*this) == o;
  }

  /// Substitution images expressing every variable on this set through the
  /// free variables: pivot variables become affine functions of the others.
  std::vector<Poly> parametrization() const {
    if (empty_) throw std::logic_error("AffineSet: no parametrization of the empty set");
    std::vector<Poly> images;
    for (std::size_t v = 0; v < vars_.size(); ++v) images.push_back(Poly::variable(vars_, vars_[v]));
    for (std::size_t r = 0; r < eq_.rows(); ++r) {
      std::size_t pivot = pivot_of(r);
      Poly rest = -row_poly(r) + Poly::variable(vars_, vars_[pivot]);  // pivot coefficient is 1
      images[pivot] = rest;
    }
    return images;
  }

  /// Free (non-pivot) variable indices.
  std::vector<std::size_t> free_variables() const {
    std::vector<bool> pivot(vars_.size(), false);
    for (std::size_t r = 0; r < eq_.rows(); ++r) pivot[pivot_of(r)] = true;
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vars_.size(); ++v)
      if (!pivot[v]) out.push_back(v);
    return out;
  }

  /// p restricted to this set, as a polynomial in the free variables.
  Poly restrict(const Poly& p) const { return p.substitute(parametrization()); }
  bool vanishes_on(const Poly& p) const { return restrict(p).is_zero(); }

  std::optional<Assignment> as_point() const {
    if (dimension() != 0) return std::nullopt;
    Assignment at;
    auto img = parametrization();
    for (std::size_t v = 0; v < vars_.size(); ++v) at[vars_[v]] = img[v].constant_value();
    return at;
  }

  /// Any point of the set (free variables set to zero).
  Assignment sample_point() const {
    Assignment zero;
    for (const auto& n : vars_.names()) zero[n] = Rational(0);
    Assignment at;
    auto img = parametrization();
    for (std::size_t v = 0; v < vars_.size(); ++v) at[vars_[v]] = img[v].evaluate(zero);
    return at;
  }

  /// Solved-form description: "a = -1/2*b - 1/2", "a = -1, b = 1", or
  /// "all parameters" for the whole space.
  std::string describe() const {
    if (empty_) return "empty";
    if (eq_.rows() == 0) return "generic";
    std::string out;
    for (std::size_t r = 0; r < eq_.rows(); ++r) {
      std::size_t pivot = pivot_of(r);
      Poly rhs = -row_poly(r) + Poly::variable(vars_, vars_[pivot]);
      out += (r ? ", " : "") + vars_[pivot] + " = " + rhs.to_string();
    }
    return out;
  }

  friend bool operator==(const AffineSet& x, const AffineSet& y) {
    if (x.empty_ || y.empty_) return x.empty_ == y.empty_ && x.vars_ == y.vars_;
    return x.vars_ == y.vars_ && x.eq_ == y.eq_;
  }

 private:
  void set_equations(RatMatrix m) {
    auto pivots = rref(m);
    const std::size_t n = vars_.size();
    empty_ = !pivots.empty() && pivots.back() == n;
    eq_ = RatMatrix(empty_ ? 0 : pivots.size(), n + 1, Rational(0));
    if (empty_) return;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t c = 0; c <= n; ++c) eq_(r, c) = m(r, c);
  }

  std::size_t pivot_of(std::size_t r) const {
    for (std::size_t c = 0; c < vars_.size(); ++c)
      if (!eq_(r, c).is_zero()) return c;
    throw std::logic_error("AffineSet: zero equation row");
  }

  Poly row_poly(std::size_t r) const {
    Poly p(vars_, eq_(r, vars_.size()));
    for (std::size_t v = 0; v < vars_.size(); ++v)
      if (!eq_(r, v).is_zero()) p += Poly::variable(vars_, vars_[v]) * eq_(r, v);
    return p;
  }

  Variables vars_;
  RatMatrix eq_;
  bool empty_ = false;
};

/// Rational roots of a univariate polynomial (all terms in variable `var`).
/// Uses the rational root theorem; returns nullopt when the coefficients are
/// too large to enumerate divisors.
inline std::optional<std::vector<Rational>> rational_roots(const Poly& p, std::size_t var) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  const unsigned deg = p.degree_in(var);
  std::vector<Rational> coeff(deg + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t v = 0; v < e.size(); ++v)
      if (v != var && e[v] != 0) throw std::invalid_argument("rational_roots: not univariate");
    coeff[e[var]] = c;
  }
  BigInt lcm = 1;
  for (const auto& c : coeff) lcm = boost::multiprecision::lcm(lcm, c.denominator());
  std::vector<BigInt> ints;
  for (const auto& c : coeff) ints.push_back(c.numerator() * (lcm / c.denominator()));

  std::vector<Rational> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low == deg) return roots;

  auto divisors = [](BigInt n) -> std::optional<std::vector<BigInt>> {
    n = boost::multiprecision::abs(n);
    if (n > BigInt(1000000000000LL)) return std::nullopt;
    std::vector<BigInt> d;
    for (BigInt k = 1; k * k <= n; ++k)
      if (n % k == 0) {
        d.push_back(k);
        if (k * k != n) d.push_back(n / k);
      }
    return d;
  };
  auto ps = divisors(ints[low]);
  auto qs = divisors(ints[deg]);
  if (!ps || !qs) return std::nullopt;
  Variables vars = p.vars();
  Assignment at;
  for (const auto& n : vars.names()) at[n] = Rational(0);
  for (const auto& pp : *ps)
    for (const auto& qq : *qs)
      for (int s : {1, -1}) {
        Rational cand(pp * s, qq);
        at[vars[var]] = cand;
        if (p.evaluate(at).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hnlab
