#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hnlab/affine.hpp"
#include "hnlab/errors.hpp"
#include "hnlab/hnstruct.hpp"
#include "hnlab/liealg.hpp"
#include "hnlab/matrix.hpp"
#include "hnlab/tensorcalc.hpp"

namespace hnlab {

/// Hermitian for J1 (eps = +1), Norden for J2, J3 (eps = -1).
enum class MetricKind { Hermitian, Norden };

inline const char* to_string(MetricKind k) { return k == MetricKind::Hermitian ? "hermitian" : "norden"; }

inline MetricKind kind_of(const HNFrame& frame, Alpha a) {
  return frame.epsilon(a) > 0 ? MetricKind::Hermitian : MetricKind::Norden;
}

/// Basic-class labels that exist in dimension 4 for each kind.
inline std::vector<int> basic_class_labels(MetricKind k) {
  return k == MetricKind::Hermitian ? std::vector<int>{2, 4} : std::vector<int>{1, 2, 3};
}

/// Direct sum of basic classes; empty means F = 0 (the Kähler-type class K).
struct ClassLabel {
  std::vector<int> members;  // sorted

  bool kaehler() const { return members.empty(); }
  std::string to_string() const {
    if (members.empty()) return "K";
    std::string s;
    for (int m : members) s += (s.empty() ? "W" : "+W") + std::to_string(m);
    return s;
  }
  static ClassLabel parse(const std::string& text) {
    ClassLabel l;
    if (text == "K") return l;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != 'W' || pos + 1 >= text.size()) throw ParseError("bad class label '" + text + "'");
      l.members.push_back(text[pos + 1] - '0');
      pos += 2;
      if (pos < text.size() && text[pos] == '+') ++pos;
    }
    std::sort(l.members.begin(), l.members.end());
    return l;
  }
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

constexpr std::size_t kTensorSpace = PolyTensor<3>::kSize;  // 64

/// All rank-3 tensors F with F(x,y,z) = -eps F(x,z,y) = -eps F(x,Jy,Jz).
struct AdmissibleSpace {
  MetricKind kind = MetricKind::Hermitian;
  Alpha alpha = Alpha::J1;
  std::vector<RatVector> basis;  // vectors in the 64-dimensional tensor space
  RatMatrix basis_matrix;        // 64 x dim, columns = basis
  RatMatrix coordinate_map;      // dim x 64, left inverse of basis_matrix

  std::size_t dim() const { return basis.size(); }

  /// Admissible coordinates of t, or nullopt when t is not admissible.
  std::optional<RatVector> coordinates(std::span<const Rational> t) const {
    RatVector c = apply(coordinate_map, t);
    RatVector back = apply(basis_matrix, std::span<const Rational>(c));
    if (!std::equal(back.begin(), back.end(), t.begin())) return std::nullopt;
    return c;
  }
  RatVector embed(std::span<const Rational> coords) const { return apply(basis_matrix, coords); }
};

namespace detail {

using Index3 = PolyTensor<3>::Index;
inline std::size_t at3(std::size_t i, std::size_t j, std::size_t k) { return PolyTensor<3>::flat({i, j, k}); }

/// Rows (one per frame triple) of the map F -> F(x,y,z) + eps F(x,z,y), and
/// F -> F(x,y,z) + eps F(x,Jy,Jz).
inline RatMatrix symmetry_constraints(const HNFrame& frame, Alpha a) {
  const RatMatrix& J = frame.j(a);
  const Rational eps(frame.epsilon(a));
  RatMatrix m(2 * kTensorSpace, kTensorSpace, Rational(0));
  PolyTensor<3>::for_each_index([&](const Index3& idx) {
    auto [x, y, z] = idx;
    std::size_t r = at3(x, y, z);
    m(r, at3(x, y, z)) += 1;
    m(r, at3(x, z, y)) += eps;
    std::size_t s = kTensorSpace + r;
    m(s, at3(x, y, z)) += 1;
    for (std::size_t p = 0; p < kDim; ++p)
      for (std::size_t q = 0; q < kDim; ++q)
        if (!J(p, y).is_zero() && !J(q, z).is_zero()) m(s, at3(x, p, q)) += eps * J(p, y) * J(q, z);
  });
  return m;
}

/// Cyclic sum F(x,y,z) + F(y,z,x) + F(z,x,y) (with_j = false), or
/// F(x,y,Jz) + F(y,z,Jx) + F(z,x,Jy) (with_j = true).
inline RatMatrix cyclic_sum_map(const HNFrame& frame, Alpha a, bool with_j) {
  const RatMatrix& J = frame.j(a);
  RatMatrix m(kTensorSpace, kTensorSpace, Rational(0));
  PolyTensor<3>::for_each_index([&](const Index3& idx) {
    auto [x, y, z] = idx;
    std::size_t r = at3(x, y, z);
    const std::array<std::array<std::size_t, 3>, 3> cyc{{{x, y, z}, {y, z, x}, {z, x, y}}};
    for (const auto& t : cyc) {
      if (!with_j) {
        m(r, at3(t[0], t[1], t[2])) += 1;
      } else {
        for (std::size_t q = 0; q < kDim; ++q)
          if (!J(q, t[2]).is_zero()) m(r, at3(t[0], t[1], q)) += J(q, t[2]);
      }
    }
  });
  return m;
}

/// theta(F)_i = g^{kl} F(e_k, e_l, e_i).
inline RatMatrix lee_map(const HNFrame& frame) {
  RatMatrix m(kDim, kTensorSpace, Rational(0));
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t k = 0; k < kDim; ++k)
      for (std::size_t l = 0; l < kDim; ++l)
        if (!frame.g_inv(k, l).is_zero()) m(i, at3(k, l, i)) += frame.g_inv(k, l);
  return m;
}

/// Tensor built from a covector theta by the dimension-4 formula of the
/// Lee-form class: W4 for Hermitian, W1 for Norden.
///   Hermitian: 1/2 {g(x,y)th(z) - g(x,Jy)th(Jz) - g(x,z)th(y) + g(x,Jz)th(Jy)}
///   Norden:    1/4 {g(x,y)th(z) + g(x,Jy)th(Jz) + g(x,z)th(y) + g(x,Jz)th(Jy)}
inline RatVector lee_class_tensor(const HNFrame& frame, Alpha a, std::span<const Rational> theta) {
  const RatMatrix& J = frame.j(a);
  const RatMatrix gj = frame.g * J;  // gj(x, y) = g(x, J y)
  const bool herm = kind_of(frame, a) == MetricKind::Hermitian;
  const Rational half = herm ? Rational(1, 2) : Rational(1, 4);
  const Rational s = herm ? Rational(-1) : Rational(1);
  auto th_j = [&](std::size_t z) {  // theta(J e_z)
    Rational v(0);
    for (std::size_t q = 0; q < kDim; ++q) v += theta[q] * J(q, z);
    return v;
  };
  RatVector out(kTensorSpace, Rational(0));
  PolyTensor<3>::for_each_index([&](const Index3& idx) {
    auto [x, y, z] = idx;
    Rational v = frame.g(x, y) * theta[z] + s * gj(x, y) * th_j(z) + s * frame.g(x, z) * theta[y] + gj(x, z) * th_j(y);
    out[at3(x, y, z)] = half * v;
  });
  return out;
}

}  // namespace detail

inline AdmissibleSpace admissible_space(const HNFrame& frame, Alpha a) {
  AdmissibleSpace s;
  s.kind = kind_of(frame, a);
  s.alpha = a;
  s.basis = solve_nullspace(detail::symmetry_constraints(frame, a));
  s.basis_matrix = RatMatrix::from_columns(s.basis, kTensorSpace);
  s.coordinate_map = left_inverse(s.basis_matrix);
  return s;
}

struct ClassSubspace {
  int label = 0;                 // subscript of W
  std::vector<RatVector> basis;  // in tensor space
  std::vector<RatVector> coords; // in admissible coordinates
  RatMatrix projector;           // on admissible coordinates, along the other classes
};

struct ClassSubspaces {
  AdmissibleSpace space;
  std::vector<ClassSubspace> classes;

  const ClassSubspace& get(int label) const {
    for (const auto& c : classes)
      if (c.label == label) return c;
    throw std::out_of_range("no basic class W" + std::to_string(label));
  }
};

/// Decomposes the admissible space into the dimension-4 basic classes.
/// The Lee-form classes (W4 Hermitian, W1 Norden) are images of the
/// covector formula; the remaining classes are kernels of the defining
/// cyclic-sum conditions (plus theta = 0 for Norden W2). Throws
/// ConstructionError unless the pieces form a direct sum filling the space.
inline ClassSubspaces class_subspaces(const AdmissibleSpace& space, const HNFrame& frame, Alpha a) {
  ClassSubspaces out{space, {}};

  auto kernel_class = [&](int label, const RatMatrix& constraint) {
    RatMatrix restricted = constraint * space.basis_matrix;
    ClassSubspace c;
    c.label = label;
    c.coords = solve_nullspace(restricted);
    for (const auto& v : c.coords) c.basis.push_back(space.embed(v));
    return c;
  };
  auto image_class = [&](int label) {
    ClassSubspace c;
    c.label = label;
    for (std::size_t m = 0; m < kDim; ++m) {
      RatVector theta(kDim, Rational(0));
      theta[m] = 1;
      RatVector t = detail::lee_class_tensor(frame, a, theta);
      auto coords = space.coordinates(t);
      if (!coords) throw ConstructionError("Lee-form class tensor is not admissible");
      c.basis.push_back(std::move(t));
      c.coords.push_back(std::move(*coords));
    }
    if (!jointly_independent(c.coords)) throw ConstructionError("Lee-form class map is not injective");
    return c;
  };

  if (space.kind == MetricKind::Hermitian) {
    out.classes.push_back(kernel_class(2, detail::cyclic_sum_map(frame, a, false)));
    out.classes.push_back(image_class(4));
  } else {
    out.classes.push_back(image_class(1));
    RatMatrix sigma_j = detail::cyclic_sum_map(frame, a, true);
    RatMatrix lee = detail::lee_map(frame);
    RatMatrix w2(sigma_j.rows() + lee.rows(), kTensorSpace, Rational(0));
    for (std::size_t r = 0; r < sigma_j.rows(); ++r)
      for (std::size_t c = 0; c < kTensorSpace; ++c) w2(r, c) = sigma_j(r, c);
    for (std::size_t r = 0; r < lee.rows(); ++r)
      for (std::size_t c = 0; c < kTensorSpace; ++c) w2(sigma_j.rows() + r, c) = lee(r, c);
    out.classes.push_back(kernel_class(2, w2));
    out.classes.push_back(kernel_class(3, detail::cyclic_sum_map(frame, a, false)));
  }

  std::vector<RatVector> all;
  for (const auto& c : out.classes) all.insert(all.end(), c.coords.begin(), c.coords.end());
  if (all.size() != space.dim() || !jointly_independent(all))
    throw ConstructionError(std::string("basic classes do not form a direct sum of the ") + to_string(space.kind) +
                            " admissible space (dims sum to " + std::to_string(all.size()) + " of " +
                            std::to_string(space.dim()) + ")");

  for (auto& c : out.classes) {
    std::vector<RatVector> rest;
    for (const auto& o : out.classes)
      if (o.label != c.label) rest.insert(rest.end(), o.coords.begin(), o.coords.end());
    c.projector = c.coords.empty() ? RatMatrix(space.dim(), space.dim(), Rational(0)) : projector_onto(c.coords, rest);
  }
  return out;
}

/// Canonical form of a list of polynomials that must vanish together:
/// primitive, deduplicated, and with the linear members replaced by the
/// reduced echelon basis of their span. A set containing a nonzero constant
/// collapses to {1} (never vanishes); an empty set vanishes everywhere.
inline std::vector<Poly> reduce_conditions(const Variables& vars, const std::vector<Poly>& polys) {
  std::vector<Poly> linear, nonlinear;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    Poly q = p.primitive();
    auto& bucket = q.total_degree() <= 1 ? linear : nonlinear;
    if (std::find(bucket.begin(), bucket.end(), q) == bucket.end()) bucket.push_back(q);
  }
  std::vector<Poly> out;
  if (!linear.empty()) {
    AffineSet s = AffineSet::from_linear(vars, linear);
    if (s.empty()) return {Poly(vars, Rational(1))};
    for (const auto& e : s.equations()) out.push_back(e.primitive());
  }
  out.insert(out.end(), nonlinear.begin(), nonlinear.end());
  return out;
}

struct ClassComponent {
  int label = 0;
  PolyTensor<3> component;      // projection of F onto this class
  std::vector<Poly> conditions; // all vanish <=> component vanishes
};

struct ClassReport {
  Alpha alpha = Alpha::J1;
  MetricKind kind = MetricKind::Hermitian;
  std::vector<ClassComponent> components;
  ClassLabel minimal_class;  // classes with a not-identically-zero component

  const ClassComponent& component(int label) const {
    for (const auto& c : components)
      if (c.label == label) return c;
    throw std::out_of_range("no component W" + std::to_string(label));
  }

  /// Minimal class at a parameter point, from the vanishing conditions.
  ClassLabel minimal_class_at(const Assignment& at) const {
    ClassLabel l;
    for (const auto& c : components) {
      bool present = false;
      for (const auto& p : c.conditions) present = present || !p.evaluate(at).is_zero();
      if (present) l.members.push_back(c.label);
    }
    return l;
  }
};

/// Splits F along the basic-class decomposition. Throws
/// std::invalid_argument when F is not admissible.
inline ClassReport decompose(const PolyTensor<3>& f, const ClassSubspaces& subspaces) {
  const auto& space = subspaces.space;
  const Poly zero = f(0, 0, 0) * Rational(0);
  const auto flat = flatten(f);
  auto coords = apply<Poly>(space.coordinate_map, flat, zero);
  auto back = apply<Poly>(space.basis_matrix, std::span<const Poly>(coords), zero);
  if (back != flat) throw std::invalid_argument("tensor is outside the admissible space");

  ClassReport rep;
  rep.alpha = space.alpha;
  rep.kind = space.kind;
  for (const auto& cls : subspaces.classes) {
    auto part = apply<Poly>(cls.projector, std::span<const Poly>(coords), zero);
    auto comp = unflatten<3>(apply<Poly>(space.basis_matrix, std::span<const Poly>(part), zero));
    std::vector<Poly> entries(comp.begin(), comp.end());
    ClassComponent cc{cls.label, comp, reduce_conditions(f(0, 0, 0).vars(), entries)};
    if (!is_zero(comp)) rep.minimal_class.members.push_back(cls.label);
    rep.components.push_back(std::move(cc));
  }
  std::sort(rep.minimal_class.members.begin(), rep.minimal_class.members.end());
  return rep;
}

/// Class subspaces for all three structures of a frame, built once.
struct ClassifierSet {
  std::array<ClassSubspaces, 3> per_alpha;

  explicit ClassifierSet(const HNFrame& frame)
      : per_alpha{class_subspaces(admissible_space(frame, Alpha::J1), frame, Alpha::J1),
                  class_subspaces(admissible_space(frame, Alpha::J2), frame, Alpha::J2),
                  class_subspaces(admissible_space(frame, Alpha::J3), frame, Alpha::J3)} {}

  const ClassSubspaces& operator[](Alpha a) const { return per_alpha[index(a)]; }
};

inline const ClassifierSet& standard_classifiers() {
  static const ClassifierSet set(standard_frame());
  return set;
}

/// ClassReport for each alpha of an algebra on the frame.
inline std::array<ClassReport, 3> classify_algebra(const LieAlgebraSpec& alg, const HNFrame& frame,
                                                   const ClassifierSet& classifiers) {
  const Connection conn = levi_civita(alg, frame);
  std::array<ClassReport, 3> out;
  for (Alpha a : kAlphas) out[index(a)] = decompose(fundamental_tensor(conn, frame, a), classifiers[a]);
  return out;
}

// ---------------------------------------------------------------------------
// Stratification of parameter space by class conditions

struct Stratum {
  AffineSet set;
  std::vector<AffineSet> excluded;  // maximal proper sub-strata
  std::array<ClassLabel, 3> classes;
};

struct ClassificationTable {
  std::vector<Stratum> strata;
  std::vector<std::string> notes;  // conditions that could not be stratified
};

namespace detail {

/// Zero set of a reduced condition list as affine pieces (linear part, then
/// nonlinear members restricted to points or lines). Pieces that cannot be
/// represented are reported through `notes`.
inline std::vector<AffineSet> condition_pieces(const Variables& vars, const std::vector<Poly>& conds,
                                               const std::string& what, std::vector<std::string>& notes) {
  std::vector<Poly> linear, nonlinear;
  for (const auto& p : conds) (p.total_degree() <= 1 ? linear : nonlinear).push_back(p);
  AffineSet base = AffineSet::from_linear(vars, linear);
  if (base.empty()) return {};
  if (nonlinear.empty()) return {base};
  if (base.dimension() == 0) {
    for (const auto& p : nonlinear)
      if (!base.vanishes_on(p)) return {};
    return {base};
  }
  if (base.dimension() == 1) {
    std::size_t t = base.free_variables().front();
    std::optional<std::vector<Rational>> common;
    for (const auto& p : nonlinear) {
      Poly r = base.restrict(p);
      if (r.is_zero()) continue;
      auto roots = rational_roots(r, t);
      if (!roots) {
        notes.push_back(what + ": roots of " + p.to_string() + " not enumerable");
        return {};
      }
      if (r.degree_in(t) > roots->size())
        notes.push_back(what + ": irrational roots of " + p.to_string() + " on " + base.describe() + " not stratified");
      if (!common) {
        common = *roots;
      } else {
        std::vector<Rational> keep;
        for (const auto& x : *common)
          if (std::find(roots->begin(), roots->end(), x) != roots->end()) keep.push_back(x);
        common = keep;
      }
    }
    if (!common) return {base};
    std::vector<AffineSet> pts;
    for (const auto& x : *common) {
      Poly fix = Poly::variable(vars, vars[t]) - Poly(vars, x);
      pts.push_back(base.intersect(AffineSet::from_linear(vars, {fix})));
    }
    return pts;
  }
  std::string list;
  for (const auto& p : nonlinear) list += (list.empty() ? "" : ", ") + p.to_string();
  notes.push_back(what + ": nonlinear condition {" + list + "} not stratified");
  return {};
}

inline bool admissible_stratum(const AffineSet& s, const std::vector<Constraint>& constraints) {
  for (const auto& c : constraints) {
    Poly r = s.restrict(c.poly);
    if (c.kind == Constraint::Kind::NonZero && r.is_zero()) return false;
    if (c.kind == Constraint::Kind::NonNegative && r.is_constant() && r.constant_value().sign() < 0) return false;
  }
  return true;
}

}  // namespace detail

/// Stratifies parameter space by the zero sets of all class conditions of
/// J1, J2, J3 and reports the minimal classes on each stratum (at its
/// generic point, i.e. away from its proper sub-strata). Strata outside the
/// domain constraints are dropped.
inline ClassificationTable classification_table(const LieAlgebraSpec& alg, const HNFrame& frame,
                                                const ClassifierSet& classifiers) {
  const auto reports = classify_algebra(alg, frame, classifiers);
  ClassificationTable table;
  const Variables& vars = alg.params;

  std::vector<AffineSet> family;
  auto add = [&](const AffineSet& s) {
    if (s.empty()) return;
    if (std::find(family.begin(), family.end(), s) == family.end()) family.push_back(s);
  };
  add(AffineSet(vars));
  for (const auto& rep : reports)
    for (const auto& comp : rep.components) {
      std::string what = "W" + std::to_string(comp.label) + "(J" + std::to_string(number(rep.alpha)) + ")";
      for (const auto& piece : detail::condition_pieces(vars, comp.conditions, what, table.notes)) add(piece);
    }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(family[i].intersect(family[j]));

  std::vector<AffineSet> kept;
  for (const auto& s : family)
    if (detail::admissible_stratum(s, alg.constraints)) kept.push_back(s);

  auto generic_classes = [&](const AffineSet& s) {
    std::array<ClassLabel, 3> out;
    for (const auto& rep : reports) {
      ClassLabel l;
      for (const auto& comp : rep.components) {
        bool vanishes = true;
        for (const auto& p : comp.conditions) vanishes = vanishes && s.vanishes_on(p);
        if (!vanishes) l.members.push_back(comp.label);
      }
      out[index(rep.alpha)] = l;
    }
    return out;
  };
  auto make = [&](const AffineSet& s) {
    Stratum st{s, {}, generic_classes(s)};
    for (const auto& t : kept) {
      if (t == s || !s.contains(t)) continue;
      bool maximal = true;
      for (const auto& u : kept)
        if (!(u == s) && !(u == t) && s.contains(u) && u.contains(t)) maximal = false;
      if (maximal) st.excluded.push_back(t);
    }
    return st;
  };

  // Lower-dimensional strata first, each line preceded by its special points.
  std::vector<bool> emitted(kept.size(), false);
  auto emit = [&](std::size_t i) {
    if (emitted[i]) return;
    emitted[i] = true;
    table.strata.push_back(make(kept[i]));
  };
  const int full = static_cast<int>(vars.size());
  for (int dim = 1; dim < full; ++dim)
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (kept[i].dimension() != dim) continue;
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (kept[j].dimension() < dim && kept[i].contains(kept[j])) emit(j);
      emit(i);
    }
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (kept[i].dimension() < full) emit(i);
  for (std::size_t i = 0; i < kept.size(); ++i) emit(i);
  return table;
}

}  // namespace hnlab
