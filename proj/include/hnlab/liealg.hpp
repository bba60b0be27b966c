#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hnlab/errors.hpp"
#include "hnlab/poly.hpp"
#include "hnlab/tensor.hpp"

namespace hnlab {

/// Restriction on the parameter domain of an algebra family.
struct Constraint {
  enum class Kind { NonZero, NonNegative };

  Kind kind = Kind::NonZero;
  Poly poly;

  std::string to_string() const { return poly.to_string() + (kind == Kind::NonZero ? " != 0" : " >= 0"); }

  bool satisfied_at(const Assignment& at) const {
    Rational v = poly.evaluate(at);
    return kind == Kind::NonZero ? !v.is_zero() : v.sign() >= 0;
  }

  /// "poly != 0" or "poly >= 0".
  static Constraint parse(std::string_view text, const Variables& vars) {
    for (auto [op, kind] : {std::pair{std::string_view("!="), Kind::NonZero}, std::pair{std::string_view(">="), Kind::NonNegative}}) {
      auto pos = text.find(op);
      if (pos == std::string_view::npos) continue;
      Poly lhs = Poly::parse(text.substr(0, pos), vars);
      Poly rhs = Poly::parse(text.substr(pos + op.size()), vars);
      return Constraint{kind, lhs - rhs};
    }
    throw ParseError("constraint must have the form 'poly != 0' or 'poly >= 0': '" + std::string(text) + "'");
  }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// A 4-dimensional real Lie algebra given by structure constants
/// [e_i, e_j] = sum_k structure(i, j, k) e_k, possibly depending on symbolic
/// parameters. Indices are 0-based here and 1-based in all text formats.
struct LieAlgebraSpec {
  std::string name;
  Variables params;
  PolyTensor<3> structure;
  std::vector<Constraint> constraints;

  Poly zero() const { return Poly(params); }
  Poly constant(const Rational& c) const { return Poly(params, c); }

  Vector basis_vector(std::size_t i) const {
    Vector v(zero());
    v(i) = constant(1);
    return v;
  }

  /// Throws DomainError naming the first violated constraint.
  void check_point(const Assignment& at) const {
    for (const auto& c : constraints)
      if (!c.satisfied_at(at)) throw DomainError("parameter point violates constraint " + c.to_string() + " of " + name);
  }

  friend bool operator==(const LieAlgebraSpec&, const LieAlgebraSpec&) = default;
};

/// Bracket entry of a definition table: [e_i, e_j] = coeffs (0-based i < j).
struct BracketEntry {
  std::size_t i = 0, j = 0;
  std::array<Poly, kDim> coeffs;
};

/// Assembles a spec from upper-triangle entries, completing antisymmetry.
/// Throws ParseError on out-of-range indices, i == j, or a pair given twice.
inline LieAlgebraSpec make_algebra(std::string name, Variables params, const std::vector<BracketEntry>& entries,
                                   std::vector<Constraint> constraints) {
  LieAlgebraSpec alg{std::move(name), params, PolyTensor<3>(Poly(params)), std::move(constraints)};
  std::array<std::array<bool, kDim>, kDim> seen{};
  for (const auto& e : entries) {
    if (e.i >= kDim || e.j >= kDim) throw ParseError("bracket index out of range 1..4");
    if (e.i == e.j) throw ParseError("antisymmetry conflict: bracket [e" + std::to_string(e.i + 1) + ",e" + std::to_string(e.i + 1) + "] must vanish");
    if (seen[e.i][e.j] || seen[e.j][e.i])
      throw ParseError("antisymmetry conflict: bracket of e" + std::to_string(e.i + 1) + ", e" + std::to_string(e.j + 1) + " given twice");
    seen[e.i][e.j] = true;
    for (std::size_t k = 0; k < kDim; ++k) {
      if (!(e.coeffs[k].vars() == params)) throw ParseError("bracket coefficient over foreign variables");
      alg.structure(e.i, e.j, k) = e.coeffs[k];
      alg.structure(e.j, e.i, k) = -e.coeffs[k];
    }
  }
  return alg;
}

/// Bilinear extension of the structure constants.
inline Vector bracket(const LieAlgebraSpec& alg, const Vector& x, const Vector& y) {
  Vector out(alg.zero());
  for (std::size_t i = 0; i < kDim; ++i) {
    if (x(i).is_zero()) continue;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (y(j).is_zero()) continue;
      Poly xy = x(i) * y(j);
      for (std::size_t k = 0; k < kDim; ++k)
        if (!alg.structure(i, j, k).is_zero()) out(k) += xy * alg.structure(i, j, k);
    }
  }
  return out;
}

struct JacobiViolation {
  std::array<std::size_t, 3> triple;  // 0-based, increasing
  Vector residual;
};

/// Triples i<j<k whose cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
/// is not identically zero.
inline std::vector<JacobiViolation> jacobi_check(const LieAlgebraSpec& alg) {
  std::vector<JacobiViolation> out;
  auto e = [&](std::size_t i) { return alg.basis_vector(i); };
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = i + 1; j < kDim; ++j)
      for (std::size_t k = j + 1; k < kDim; ++k) {
        Vector r = bracket(alg, bracket(alg, e(i), e(j)), e(k));
        Vector s = bracket(alg, bracket(alg, e(j), e(k)), e(i));
        Vector t = bracket(alg, bracket(alg, e(k), e(i)), e(j));
        Vector sum(alg.zero());
        for (std::size_t m = 0; m < kDim; ++m) sum(m) = r(m) + s(m) + t(m);
        if (!is_zero(sum)) out.push_back({{i, j, k}, sum});
      }
  return out;
}

inline std::string format_vector(const Vector& v) {
  std::string out;
  for (std::size_t k = 0; k < kDim; ++k) {
    if (v(k).is_zero()) continue;
    std::string coeff = v(k).to_string();
    bool compound = v(k).terms().size() > 1;
    std::string term = coeff == "1" ? "" : (coeff == "-1" ? "-" : (compound ? "(" + coeff + ")*" : coeff + "*"));
    term += "e" + std::to_string(k + 1);
    if (!out.empty()) out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out.empty() ? "0" : out;
}

/// Human-readable bracket list, e.g. "[e1,e4] = e1".
inline std::vector<std::string> bracket_strings(const LieAlgebraSpec& alg) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = i + 1; j < kDim; ++j) {
      Vector v = bracket(alg, alg.basis_vector(i), alg.basis_vector(j));
      if (is_zero(v)) continue;
      out.push_back("[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] = " + format_vector(v));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

namespace detail {

inline std::array<Poly, kDim> coeffs(const Variables& vars, std::array<const char*, kDim> text) {
  std::array<Poly, kDim> out;
  for (std::size_t k = 0; k < kDim; ++k) out[k] = Poly::parse(text[k], vars);
  return out;
}

}  // namespace detail

inline LieAlgebraSpec g4_5() {
  Variables v{"a", "b"};
  return make_algebra("g4_5", v,
                      {{0, 3, detail::coeffs(v, {"1", "0", "0", "0"})},
                       {1, 3, detail::coeffs(v, {"0", "a", "0", "0"})},
                       {2, 3, detail::coeffs(v, {"0", "0", "b", "0"})}},
                      {Constraint::parse("a != 0", v), Constraint::parse("b != 0", v)});
}

inline LieAlgebraSpec g4_6() {
  Variables v{"a", "b"};
  return make_algebra("g4_6", v,
                      {{0, 3, detail::coeffs(v, {"a", "0", "0", "0"})},
                       {1, 3, detail::coeffs(v, {"0", "b", "-1", "0"})},
                       {2, 3, detail::coeffs(v, {"0", "1", "b", "0"})}},
                      {Constraint::parse("a != 0", v), Constraint::parse("b >= 0", v)});
}

inline std::vector<LieAlgebraSpec> builtin_catalog() { return {g4_5(), g4_6()}; }

/// Looks `name` up among the built-in families, then among `extra`
/// (user-registered algebras).
inline LieAlgebraSpec catalog_get(std::string_view name, const std::vector<LieAlgebraSpec>& extra = {}) {
  std::string available;
  auto builtins = builtin_catalog();
  for (const auto& a : builtins)
    if (a.name == name) return a;
  for (const auto& a : extra)
    if (a.name == name) return a;
  for (const auto& a : builtins) available += (available.empty() ? "" : ", ") + a.name;
  for (const auto& a : extra) available += ", " + a.name;
  throw std::invalid_argument("unknown algebra '" + std::string(name) + "'; available: " + available);
}

// ---------------------------------------------------------------------------
// Definition files
//
// JSON document:
//   { "name": "g4_5", "params": ["a", "b"], "constraints": ["a != 0"],
//     "brackets": [ {"i": 1, "j": 4, "coeffs": ["1", "0", "0", "0"]}, ... ] }
// Only i < j entries are given; indices are 1-based.

inline LieAlgebraSpec load_algebra(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("algebra file is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("algebra file must be a JSON object");
    auto name = doc.at("name").get<std::string>();
    if (name.empty()) throw ParseError("algebra name must be non-empty");
    std::vector<std::string> names = doc.value("params", std::vector<std::string>{});
    Variables vars;
    try {
      vars = Variables(names);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    std::vector<Constraint> constraints;
    for (const auto& c : doc.value("constraints", nlohmann::json::array())) constraints.push_back(Constraint::parse(c.get<std::string>(), vars));

    std::vector<BracketEntry> entries;
    for (const auto& b : doc.value("brackets", nlohmann::json::array())) {
      int i = b.at("i").get<int>(), j = b.at("j").get<int>();
      if (i < 1 || i > 4 || j < 1 || j > 4) throw ParseError("bracket index out of range 1..4");
      const auto& cs = b.at("coeffs");
      if (!cs.is_array() || cs.size() != kDim) throw ParseError("bracket coeffs must list 4 polynomials");
      std::array<Poly, kDim> c;
      for (std::size_t k = 0; k < kDim; ++k) c[k] = Poly::parse(cs[k].get<std::string>(), vars);
      // [e_j, e_i] with i > j is stored as -[e_i, e_j]; i == j is rejected by make_algebra.
      if (i > j)
        for (auto& p : c) p = -p;
      entries.push_back({static_cast<std::size_t>(std::min(i, j) - 1), static_cast<std::size_t>(std::max(i, j) - 1), c});
    }
    auto alg = make_algebra(std::move(name), vars, entries, std::move(constraints));
    if (auto v = jacobi_check(alg); !v.empty()) {
      const auto& t = v.front().triple;
      throw JacobiError("Jacobi identity fails for (e" + std::to_string(t[0] + 1) + ", e" + std::to_string(t[1] + 1) + ", e" +
                        std::to_string(t[2] + 1) + "): residual " + format_vector(v.front().residual));
    }
    return alg;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed algebra file: ") + e.what());
  }
}

inline std::string serialize_algebra(const LieAlgebraSpec& alg) {
  nlohmann::json doc;
  doc["name"] = alg.name;
  doc["params"] = alg.params.names();
  auto cs = nlohmann::json::array();
  for (const auto& c : alg.constraints) cs.push_back(c.to_string());
  doc["constraints"] = cs;
  auto bs = nlohmann::json::array();
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = i + 1; j < kDim; ++j) {
      bool any = false;
      auto coeffs = nlohmann::json::array();
      for (std::size_t k = 0; k < kDim; ++k) {
        any = any || !alg.structure(i, j, k).is_zero();
        coeffs.push_back(alg.structure(i, j, k).to_string());
      }
      if (any) bs.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
    }
  doc["brackets"] = bs;
  return doc.dump(2);
}

}  // namespace hnlab
