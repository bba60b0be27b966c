#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "hnlab/errors.hpp"
#include "hnlab/matrix.hpp"
#include "hnlab/tensor.hpp"

namespace hnlab {

/// Which member of the hypercomplex triple (J1, J2, J3).
enum class Alpha : int { J1 = 1, J2 = 2, J3 = 3 };

inline constexpr std::array<Alpha, 3> kAlphas{Alpha::J1, Alpha::J2, Alpha::J3};

constexpr std::size_t index(Alpha a) { return static_cast<std::size_t>(a) - 1; }
constexpr int number(Alpha a) { return static_cast<int>(a); }
inline Alpha alpha_from_number(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("structure index must be 1, 2 or 3");
  return static_cast<Alpha>(n);
}

/// The cyclic successors (beta, gamma) of alpha in (1, 2, 3).
constexpr std::pair<Alpha, Alpha> cyclic_successors(Alpha a) {
  switch (a) {
    case Alpha::J1: return {Alpha::J2, Alpha::J3};
    case Alpha::J2: return {Alpha::J3, Alpha::J1};
    default: return {Alpha::J1, Alpha::J2};
  }
}

/// Standard hypercomplex triple with the neutral metric diag(1, 1, -1, -1).
///
/// Matrices act on frame components: J(i, j) is the e_i-component of J e_j.
/// J1 is an isometry of g (Hermitian), J2 and J3 are anti-isometries
/// (Norden), recorded as eps = (+1, -1, -1).
struct HNFrame {
  std::array<RatMatrix, 3> J;
  std::array<int, 3> eps{};
  RatMatrix g;
  RatMatrix g_inv;
  std::array<RatMatrix, 3> g_assoc;

  const RatMatrix& j(Alpha a) const { return J[index(a)]; }
  int epsilon(Alpha a) const { return eps[index(a)]; }
  const RatMatrix& assoc(Alpha a) const { return g_assoc[index(a)]; }

  /// J_alpha applied to a vector of frame components.
  template <class S>
  std::array<S, kDim> apply_j(Alpha a, const std::array<S, kDim>& v) const {
    std::array<S, kDim> out = v;
    for (std::size_t i = 0; i < kDim; ++i) {
      out[i] = v[i] * Rational(0);
      for (std::size_t k = 0; k < kDim; ++k)
        if (!j(a)(i, k).is_zero()) out[i] += v[k] * j(a)(i, k);
    }
    return out;
  }
};

/// (g_alpha)_{ij} = g(J_alpha e_i, e_j).
inline RatMatrix assoc_metric(const HNFrame& frame, Alpha a) {
  return frame.j(a).transposed() * frame.g;
}

namespace detail {

inline RatMatrix signed_permutation(std::array<std::pair<int, std::size_t>, kDim> images) {
  RatMatrix m(kDim, kDim, Rational(0));
  for (std::size_t col = 0; col < kDim; ++col) m(images[col].second, col) = images[col].first;
  return m;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError("hypercomplex frame invariant violated: " + what);
}

inline RatMatrix scaled(RatMatrix m, const Rational& s) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) *= s;
  return m;
}

inline void verify_frame(const HNFrame& f) {
  const auto id = RatMatrix::identity(kDim);
  require(f.g_inv * f.g == id, "g_inv * g = I");
  for (Alpha a : kAlphas) {
    auto [b, c] = cyclic_successors(a);
    const Rational eps(f.epsilon(a));
    require(f.j(a) * f.j(a) == scaled(id, -1), "J^2 = -I");
    require(f.j(b) * f.j(c) == f.j(a), "J_alpha = J_beta J_gamma");
    require(scaled(f.j(c) * f.j(b), -1) == f.j(a), "J_alpha = -J_gamma J_beta");
    require(f.j(a).transposed() * f.g * f.j(a) == scaled(f.g, eps), "g(Jx, Jy) = eps g(x, y)");
    require(f.assoc(a) == f.j(a).transposed() * f.g, "g_alpha(x, y) = g(J x, y)");
    require(f.assoc(a) == scaled(f.g * f.j(a), -eps), "g_alpha(x, y) = -eps g(x, J y)");
  }
}

}  // namespace detail

inline HNFrame standard_frame() {
  HNFrame f;
  // Images of e1..e4 as (sign, target index).
  f.J[0] = detail::signed_permutation({{{1, 1}, {-1, 0}, {-1, 3}, {1, 2}}});
  f.J[1] = detail::signed_permutation({{{1, 2}, {1, 3}, {-1, 0}, {-1, 1}}});
  f.J[2] = detail::signed_permutation({{{-1, 3}, {1, 2}, {-1, 1}, {1, 0}}});
  f.eps = {1, -1, -1};
  f.g = RatMatrix(kDim, kDim, Rational(0));
  f.g(0, 0) = 1;
  f.g(1, 1) = 1;
  f.g(2, 2) = -1;
  f.g(3, 3) = -1;
  f.g_inv = *inverse(f.g);
  for (Alpha a : kAlphas) f.g_assoc[index(a)] = assoc_metric(f, a);
  detail::verify_frame(f);
  return f;
}

/// Coordinate 2-plane span{e_i, e_j}, 0-based with i < j.
struct Plane {
  std::size_t i = 0, j = 1;

  Plane() = default;
  Plane(std::size_t i_, std::size_t j_) : i(i_), j(j_) {
    if (i >= j || j >= kDim) throw std::invalid_argument("plane needs frame indices i < j in range");
  }
  std::string label() const { return std::to_string(i + 1) + std::to_string(j + 1); }
  friend bool operator==(const Plane&, const Plane&) = default;
};

/// The six coordinate planes in order 12, 13, 14, 23, 24, 34.
inline std::array<Plane, 6> basic_planes() {
  return {Plane(0, 1), Plane(0, 2), Plane(0, 3), Plane(1, 2), Plane(1, 3), Plane(2, 3)};
}

enum class PlaneType { Holomorphic, TotallyReal, Generic };

inline const char* to_string(PlaneType t) {
  switch (t) {
    case PlaneType::Holomorphic: return "holomorphic";
    case PlaneType::TotallyReal: return "totally_real";
    default: return "generic";
  }
}

/// g(x,x) g(y,y) - g(x,y)^2 for the plane's frame vectors.
inline Rational gram_determinant(const HNFrame& frame, const Plane& mu) {
  return frame.g(mu.i, mu.i) * frame.g(mu.j, mu.j) - frame.g(mu.i, mu.j) * frame.g(mu.i, mu.j);
}

/// Holomorphic iff J mu = mu; totally real iff mu is g-orthogonal to J mu and
/// J mu != mu. Subspace equality is decided by exact rank tests.
inline PlaneType plane_type(const HNFrame& frame, const Plane& mu, Alpha a) {
  if (gram_determinant(frame, mu).is_zero())
    throw std::invalid_argument("plane " + mu.label() + " is degenerate for g");
  const RatMatrix& J = frame.j(a);
  RatMatrix span(kDim, 4, Rational(0));
  span(mu.i, 0) = 1;
  span(mu.j, 1) = 1;
  for (std::size_t r = 0; r < kDim; ++r) {
    span(r, 2) = J(r, mu.i);
    span(r, 3) = J(r, mu.j);
  }
  if (rank(span) == 2) return PlaneType::Holomorphic;

  // g(u, J v) for u, v in {e_i, e_j}
  RatMatrix gj = frame.g * J;
  bool orthogonal = gj(mu.i, mu.i).is_zero() && gj(mu.i, mu.j).is_zero() && gj(mu.j, mu.i).is_zero() &&
                    gj(mu.j, mu.j).is_zero();
  return orthogonal ? PlaneType::TotallyReal : PlaneType::Generic;
}

}  // namespace hnlab
