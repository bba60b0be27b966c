#pragma once

#include "hnlab/hnstruct.hpp"
#include "hnlab/liealg.hpp"
#include "hnlab/tensor.hpp"

namespace hnlab {

/// Connection coefficients on the invariant frame:
/// nabla_{e_i} e_j = sum_k gamma(i, j, k) e_k.
struct Connection {
  PolyTensor<3> gamma;

  /// nabla_{e_i} applied to a vector with constant frame components.
  Vector derivative(std::size_t i, const Vector& v) const {
    Vector out(gamma(0, 0, 0) * Rational(0));
    for (std::size_t j = 0; j < kDim; ++j) {
      if (v(j).is_zero()) continue;
      for (std::size_t k = 0; k < kDim; ++k)
        if (!gamma(i, j, k).is_zero()) out(k) += v(j) * gamma(i, j, k);
    }
    return out;
  }
};

/// Levi-Civita connection of the constant frame metric. Since g(e_i, e_j) is
/// constant on invariant fields, Koszul's formula reduces to
///   2 g(nabla_x y, z) = g([x,y],z) + g([z,x],y) + g([z,y],x).
inline Connection levi_civita(const LieAlgebraSpec& alg, const HNFrame& frame) {
  const Poly zero = alg.zero();
  // gc(i, j, k) = g([e_i, e_j], e_k)
  PolyTensor<3> gc(zero);
  PolyTensor<3>::for_each_index([&](const auto& idx) {
    auto [i, j, k] = idx;
    for (std::size_t m = 0; m < kDim; ++m)
      if (!frame.g(m, k).is_zero()) gc(i, j, k) += alg.structure(i, j, m) * frame.g(m, k);
  });
  PolyTensor<3> lowered(zero);
  PolyTensor<3>::for_each_index([&](const auto& idx) {
    auto [i, j, k] = idx;
    lowered(i, j, k) = (gc(i, j, k) + gc(k, i, j) + gc(k, j, i)) * Rational(1, 2);
  });
  Connection conn{PolyTensor<3>(zero)};
  PolyTensor<3>::for_each_index([&](const auto& idx) {
    auto [i, j, k] = idx;
    for (std::size_t l = 0; l < kDim; ++l)
      if (!frame.g_inv(k, l).is_zero()) conn.gamma(i, j, k) += lowered(i, j, l) * frame.g_inv(k, l);
  });
  return conn;
}

/// dj(i, j, k): e_k-component of (nabla_{e_i} J) e_j = nabla_{e_i}(J e_j) - J nabla_{e_i} e_j.
/// J has constant frame components, so this is a commutator of the
/// connection matrix with J.
inline PolyTensor<3> covariant_derivative_of_j(const Connection& conn, const HNFrame& frame, Alpha a) {
  const RatMatrix& J = frame.j(a);
  PolyTensor<3> dj(conn.gamma(0, 0, 0) * Rational(0));
  PolyTensor<3>::for_each_index([&](const auto& idx) {
    auto [i, j, k] = idx;
    Poly& out = dj(i, j, k);
    for (std::size_t m = 0; m < kDim; ++m) {
      if (!J(m, j).is_zero()) out += conn.gamma(i, m, k) * J(m, j);
      if (!J(k, m).is_zero()) out -= conn.gamma(i, j, m) * J(k, m);
    }
  });
  return dj;
}

namespace detail {

/// Lowers the last index of a (1,2)-array with g.
inline PolyTensor<3> lower_last(const PolyTensor<3>& t, const HNFrame& frame) {
  PolyTensor<3> out(t(0, 0, 0) * Rational(0));
  PolyTensor<3>::for_each_index([&](const auto& idx) {
    auto [i, j, k] = idx;
    for (std::size_t l = 0; l < kDim; ++l)
      if (!frame.g(l, k).is_zero()) out(i, j, k) += t(i, j, l) * frame.g(l, k);
  });
  return out;
}

}  // namespace detail

/// F_alpha(e_i, e_j, e_k) = g((nabla_{e_i} J_alpha) e_j, e_k).
inline PolyTensor<3> fundamental_tensor(const Connection& conn, const HNFrame& frame, Alpha a) {
  return detail::lower_last(covariant_derivative_of_j(conn, frame, a), frame);
}

/// theta(e_i) = g^{kl} F(e_k, e_l, e_i).
inline PolyTensor<1> lee_form(const PolyTensor<3>& f, const HNFrame& frame) {
  PolyTensor<1> theta(f(0, 0, 0) * Rational(0));
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t k = 0; k < kDim; ++k)
      for (std::size_t l = 0; l < kDim; ++l)
        if (!frame.g_inv(k, l).is_zero()) theta(i) += f(k, l, i) * frame.g_inv(k, l);
  return theta;
}

/// Lowered Nijenhuis tensor N(e_i, e_j, e_k) = g(N(e_i, e_j), e_k) with
///   N(x,y) = (nabla_x J) J y - (nabla_y J) J x + (nabla_{Jx} J) y - (nabla_{Jy} J) x.
inline PolyTensor<3> nijenhuis(const Connection& conn, const HNFrame& frame, Alpha a) {
  const RatMatrix& J = frame.j(a);
  const PolyTensor<3> dj = covariant_derivative_of_j(conn, frame, a);
  PolyTensor<3> n(dj(0, 0, 0) * Rational(0));
  PolyTensor<3>::for_each_index([&](const auto& idx) {
    auto [i, j, k] = idx;
    Poly& out = n(i, j, k);
    for (std::size_t m = 0; m < kDim; ++m) {
      if (!J(m, j).is_zero()) {
        out += dj(i, m, k) * J(m, j);
        out -= dj(m, i, k) * J(m, j);
      }
      if (!J(m, i).is_zero()) {
        out -= dj(j, m, k) * J(m, i);
        out += dj(m, j, k) * J(m, i);
      }
    }
  });
  return detail::lower_last(n, frame);
}

}  // namespace hnlab
