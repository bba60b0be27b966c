#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hnlab/hnstruct.hpp"
#include "hnlab/liealg.hpp"
#include "hnlab/tensorcalc.hpp"

namespace hnlab {

/// R(e_i, e_j, e_k, e_l) = g(R(e_i, e_j) e_k, e_l) with
/// R(x, y) = [nabla_x, nabla_y] - nabla_[x,y].
inline PolyTensor<4> riemann(const Connection& conn, const LieAlgebraSpec& alg, const HNFrame& frame) {
  const Poly zero = alg.zero();
  const auto& G = conn.gamma;
  PolyTensor<4> up(zero);  // up(i, j, k, n): e_n-component of R(e_i, e_j) e_k
  PolyTensor<4>::for_each_index([&](const auto& idx) {
    auto [i, j, k, n] = idx;
    Poly& out = up(i, j, k, n);
    for (std::size_t m = 0; m < kDim; ++m) {
      if (!G(j, k, m).is_zero() && !G(i, m, n).is_zero()) out += G(j, k, m) * G(i, m, n);
      if (!G(i, k, m).is_zero() && !G(j, m, n).is_zero()) out -= G(i, k, m) * G(j, m, n);
      if (!alg.structure(i, j, m).is_zero() && !G(m, k, n).is_zero()) out -= alg.structure(i, j, m) * G(m, k, n);
    }
  });
  PolyTensor<4> r(zero);
  PolyTensor<4>::for_each_index([&](const auto& idx) {
    auto [i, j, k, l] = idx;
    for (std::size_t n = 0; n < kDim; ++n)
      if (!frame.g(n, l).is_zero()) r(i, j, k, l) += up(i, j, k, n) * frame.g(n, l);
  });
  return r;
}

/// Ricci-type contractions of R. Starred quantities carry an explicit
/// structure index alpha.
struct CurvatureBundle {
  PolyTensor<4> R;
  PolyTensor<2> rho;
  std::array<PolyTensor<2>, 3> rho_star;
  Poly tau;
  std::array<Poly, 3> tau_star;
  std::array<Poly, 3> tau_star_star;
};

inline CurvatureBundle ricci_and_scalars(const PolyTensor<4>& R, const HNFrame& frame) {
  const Poly zero = R(0, 0, 0, 0) * Rational(0);
  CurvatureBundle cb{R, PolyTensor<2>(zero), {}, zero, {zero, zero, zero}, {zero, zero, zero}};
  const RatMatrix& gi = frame.g_inv;

  // rho(y, z) = g^{ij} R(e_i, y, z, e_j)
  PolyTensor<2>::for_each_index([&](const auto& idx) {
    auto [y, z] = idx;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        if (!gi(i, j).is_zero()) cb.rho(y, z) += R(i, y, z, j) * gi(i, j);
  });
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      if (!gi(i, j).is_zero()) cb.tau += cb.rho(i, j) * gi(i, j);

  for (Alpha a : kAlphas) {
    const RatMatrix& J = frame.j(a);
    // g^{ij} J(m, j) is the (i, m) entry of g_inv * J^T
    const RatMatrix gij = gi * J.transposed();
    auto& rs = cb.rho_star[index(a)];
    rs = PolyTensor<2>(zero);
    // rho*(y, z) = g^{ij} R(e_i, y, z, J e_j)
    PolyTensor<2>::for_each_index([&](const auto& idx) {
      auto [y, z] = idx;
      for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t m = 0; m < kDim; ++m)
          if (!gij(i, m).is_zero()) rs(y, z) += R(i, y, z, m) * gij(i, m);
    });
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) {
        if (!gi(i, j).is_zero()) cb.tau_star[index(a)] += rs(i, j) * gi(i, j);
        // tau** = g^{ij} rho*(e_i, J e_j)
        if (!gij(i, j).is_zero()) cb.tau_star_star[index(a)] += rs(i, j) * gij(i, j);
      }
  }
  return cb;
}

/// k(mu) = R(x, y, y, x) / (g(x,x) g(y,y) - g(x,y)^2) for mu = span{e_i, e_j}.
inline Poly sectional(const PolyTensor<4>& R, const HNFrame& frame, const Plane& mu) {
  Rational gram = gram_determinant(frame, mu);
  if (gram.is_zero()) throw std::invalid_argument("plane " + mu.label() + " is degenerate for g");
  return R(mu.i, mu.j, mu.j, mu.i) / gram;
}

struct SectionalEntry {
  Plane plane;
  Poly k;
  std::array<PlaneType, 3> types{};
};

using SectionalTable = std::vector<SectionalEntry>;

inline SectionalTable sectional_table(const PolyTensor<4>& R, const HNFrame& frame) {
  SectionalTable t;
  for (const auto& mu : basic_planes()) {
    SectionalEntry e{mu, sectional(R, frame, mu), {}};
    for (Alpha a : kAlphas) e.types[index(a)] = plane_type(frame, mu, a);
    t.push_back(std::move(e));
  }
  return t;
}

/// Basic coordinate planes of the given type for J_alpha.
inline std::vector<Plane> planes_of_type(const HNFrame& frame, Alpha a, PlaneType type) {
  std::vector<Plane> out;
  for (const auto& mu : basic_planes())
    if (plane_type(frame, mu, a) == type) out.push_back(mu);
  return out;
}

// ---------------------------------------------------------------------------
// Sign reasoning without real-algebraic machinery.

/// +1 / -1 if p is strictly positive / negative on all of R^n, 0 when this
/// cannot be decided. Decides constants and polynomials of degree <= 2 whose
/// Gram matrix in (used variables, 1) is definite (Sylvester's criterion).
inline int definite_sign(const Poly& p) {
  if (p.is_zero()) return 0;
  if (p.is_constant()) return p.constant_value().sign();
  if (p.total_degree() > 2) return 0;

  std::vector<std::size_t> used;
  for (std::size_t v = 0; v < p.vars().size(); ++v)
    if (p.depends_on(v)) used.push_back(v);
  const std::size_t n = used.size() + 1;  // last slot is the constant 1
  RatMatrix q(n, n, Rational(0));
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::size_t> slots;
    for (std::size_t u = 0; u < used.size(); ++u)
      for (unsigned r = 0; r < e[used[u]]; ++r) slots.push_back(u);
    while (slots.size() < 2) slots.push_back(n - 1);
    if (slots[0] == slots[1]) {
      q(slots[0], slots[0]) += c;
    } else {
      q(slots[0], slots[1]) += c / Rational(2);
      q(slots[1], slots[0]) += c / Rational(2);
    }
  }
  for (int sign : {1, -1}) {
    bool definite = true;
    for (std::size_t k = 1; k <= n && definite; ++k) {
      RatMatrix minor(k, k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) minor(r, c) = q(r, c) * Rational(sign);
      definite = determinant(minor).sign() > 0;
    }
    if (definite) return sign;
  }
  return 0;
}

/// True when p provably has no zero on the parameter domain: a nonzero
/// constant, a definite quadratic, or a monomial in parameters that are all
/// constrained to be nonzero.
inline bool never_zero_on_domain(const Poly& p, const std::vector<Constraint>& constraints) {
  if (p.is_zero()) return false;
  if (definite_sign(p) != 0) return true;
  if (p.terms().size() != 1) return false;
  const auto& e = p.terms().begin()->first;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    Poly x = Poly::variable(p.vars(), p.vars()[v]);
    bool nonzero = false;
    for (const auto& c : constraints)
      if (c.kind == Constraint::Kind::NonZero && c.poly.primitive() == x) nonzero = true;
    if (!nonzero) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Report

enum class Flatness { Flat, NonFlat, Undetermined };

inline const char* to_string(Flatness f) {
  switch (f) {
    case Flatness::Flat: return "flat";
    case Flatness::NonFlat: return "non-flat";
    default: return "undetermined";
  }
}

struct ScalarFinding {
  std::string name;  // "tau", "tau*_2", "tau**_3", ...
  Poly value;
  bool identically_zero = false;
  /// Normalized polynomial whose vanishing is equivalent to value == 0.
  Poly vanishing_condition;
  /// Sign valid on all of parameter space, 0 if not fixed.
  int global_sign = 0;
  std::optional<Rational> value_at;
};

struct SectionalFinding {
  Plane plane;
  Poly k;
  std::array<PlaneType, 3> types{};
  int global_sign = 0;
  std::optional<Rational> value_at;
};

struct CurvatureReport {
  std::optional<Assignment> at;
  Flatness flatness = Flatness::Undetermined;
  std::vector<ScalarFinding> scalars;
  std::vector<SectionalFinding> sectional;

  const ScalarFinding& scalar(const std::string& name) const {
    for (const auto& s : scalars)
      if (s.name == name) return s;
    throw std::out_of_range("no scalar named " + name);
  }
};

inline std::string starred_name(const char* stem, Alpha a) { return std::string(stem) + "_" + std::to_string(number(a)); }

/// Curvature summary of an algebra; evaluated at `at` when given.
inline CurvatureReport curvature_report(const LieAlgebraSpec& alg, const HNFrame& frame,
                                        const std::optional<Assignment>& at = std::nullopt) {
  if (at) alg.check_point(*at);
  const Connection conn = levi_civita(alg, frame);
  const auto cb = ricci_and_scalars(riemann(conn, alg, frame), frame);

  CurvatureReport rep;
  rep.at = at;
  if (at) {
    bool flat = true;
    for (const auto& p : cb.R) flat = flat && p.evaluate(*at).is_zero();
    rep.flatness = flat ? Flatness::Flat : Flatness::NonFlat;
  } else if (is_zero(cb.R)) {
    rep.flatness = Flatness::Flat;
  } else {
    rep.flatness = Flatness::Undetermined;
    for (const auto& p : cb.R)
      if (never_zero_on_domain(p, alg.constraints)) rep.flatness = Flatness::NonFlat;
  }

  auto scalar = [&](std::string name, const Poly& v) {
    ScalarFinding s{std::move(name), v, v.is_zero(), v.primitive(), definite_sign(v), std::nullopt};
    if (at) s.value_at = v.evaluate(*at);
    rep.scalars.push_back(std::move(s));
  };
  scalar("tau", cb.tau);
  for (Alpha a : kAlphas) scalar(starred_name("tau*", a), cb.tau_star[index(a)]);
  for (Alpha a : kAlphas) scalar(starred_name("tau**", a), cb.tau_star_star[index(a)]);

  for (const auto& e : sectional_table(cb.R, frame)) {
    SectionalFinding s{e.plane, e.k, e.types, definite_sign(e.k), std::nullopt};
    if (at) s.value_at = e.k.evaluate(*at);
    rep.sectional.push_back(std::move(s));
  }
  return rep;
}

}  // namespace hnlab
