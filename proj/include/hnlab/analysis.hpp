#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hnlab/classify.hpp"
#include "hnlab/curvature.hpp"
#include "hnlab/liealg.hpp"
#include "hnlab/tensorcalc.hpp"

namespace hnlab {

/// Every derived quantity of an algebra on the standard frame, either
/// symbolic in the parameters or at a single parameter point.
struct Analysis {
  LieAlgebraSpec algebra;
  std::optional<Assignment> at;
  Connection connection;
  std::array<PolyTensor<3>, 3> F;
  std::array<PolyTensor<1>, 3> theta;
  std::array<PolyTensor<3>, 3> N;
  CurvatureBundle curvature;
  SectionalTable sectional;
  std::array<ClassReport, 3> classes;

  const PolyTensor<4>& R() const { return curvature.R; }

  /// Component lookup by quantity name with 0-based indices. Names: F,
  /// theta, N, rho*, tau*, tau** (need alpha), R, rho, tau, k (alpha = 0).
  Poly value(const std::string& quantity, int alpha, const std::vector<std::size_t>& idx) const {
    auto need = [&](std::size_t n) {
      if (idx.size() != n) throw std::invalid_argument(quantity + " takes " + std::to_string(n) + " indices");
    };
    auto a = [&] { return index(alpha_from_number(alpha)); };
    if (quantity == "F") return need(3), F[a()](idx[0], idx[1], idx[2]);
    if (quantity == "theta") return need(1), theta[a()](idx[0]);
    if (quantity == "N") return need(3), N[a()](idx[0], idx[1], idx[2]);
    if (quantity == "R") return need(4), curvature.R(idx[0], idx[1], idx[2], idx[3]);
    if (quantity == "rho") return need(2), curvature.rho(idx[0], idx[1]);
    if (quantity == "rho*") return need(2), curvature.rho_star[a()](idx[0], idx[1]);
    if (quantity == "tau") return need(0), curvature.tau;
    if (quantity == "tau*") return need(0), curvature.tau_star[a()];
    if (quantity == "tau**") return need(0), curvature.tau_star_star[a()];
    if (quantity == "k") {
      need(2);
      for (const auto& e : sectional)
        if (e.plane.i == idx[0] && e.plane.j == idx[1]) return e.k;
      throw std::invalid_argument("no basic plane " + std::to_string(idx[0] + 1) + std::to_string(idx[1] + 1));
    }
    throw std::invalid_argument("unknown quantity " + quantity);
  }
};

/// Substitutes a parameter point into the structure constants.
inline LieAlgebraSpec specialize(const LieAlgebraSpec& alg, const Assignment& at) {
  alg.check_point(at);
  LieAlgebraSpec out = alg;
  out.structure = evaluated(alg.structure, at);
  return out;
}

inline Analysis analyze(const LieAlgebraSpec& alg, const HNFrame& frame, const ClassifierSet& classifiers,
                        const std::optional<Assignment>& at = std::nullopt) {
  Analysis an;
  an.algebra = alg;
  an.at = at;
  const LieAlgebraSpec work = at ? specialize(alg, *at) : alg;
  an.connection = levi_civita(work, frame);
  for (Alpha a : kAlphas) {
    an.F[index(a)] = fundamental_tensor(an.connection, frame, a);
    an.theta[index(a)] = lee_form(an.F[index(a)], frame);
    an.N[index(a)] = nijenhuis(an.connection, frame, a);
    an.classes[index(a)] = decompose(an.F[index(a)], classifiers[a]);
  }
  an.curvature = ricci_and_scalars(riemann(an.connection, work, frame), frame);
  an.sectional = sectional_table(an.curvature.R, frame);
  return an;
}

inline Analysis analyze(const LieAlgebraSpec& alg, const std::optional<Assignment>& at = std::nullopt) {
  return analyze(alg, standard_frame(), standard_classifiers(), at);
}

}  // namespace hnlab
