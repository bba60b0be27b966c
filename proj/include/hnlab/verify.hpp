#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hnlab/analysis.hpp"
#include "hnlab/reference_values.hpp"

namespace hnlab {

/// One pass/fail comparison against a reference statement.
struct Check {
  std::string group;  // algebra or "engine"
  std::string name;
  bool passed = false;
  std::string expected;
  std::string computed;
};

struct VerifyResult {
  std::vector<Check> checks;
  std::vector<std::string> notes;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
  }
  std::size_t failed() const { return checks.size() - passed(); }
  std::vector<Check> failures() const {
    std::vector<Check> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const Check& c) { return !c.passed; });
    return out;
  }
};

namespace detail {

inline std::string join(const std::vector<Poly>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s + "}";
}

inline std::string index_label(const std::vector<int>& idx) {
  std::string s;
  for (int i : idx) s += std::to_string(i);
  return s;
}

inline std::string quantity_label(const reference::Pinned& p) {
  std::string s = p.quantity;
  if (p.alpha) s += "_" + std::to_string(p.alpha);
  if (!p.index.empty()) s += "[" + index_label(p.index) + "]";
  return s;
}

inline std::vector<std::size_t> zero_based(const std::vector<int>& idx) {
  std::vector<std::size_t> out;
  for (int i : idx) out.push_back(static_cast<std::size_t>(i - 1));
  return out;
}

/// Frame permutation and sign of J: J e_i = sign[i] e_{image[i]}.
struct SignedPerm {
  std::array<std::size_t, kDim> image{};
  std::array<int, kDim> sign{};
};

inline SignedPerm as_signed_permutation(const RatMatrix& J) {
  SignedPerm p;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t k = 0; k < kDim; ++k)
      if (!J(k, i).is_zero()) {
        p.image[i] = k;
        p.sign[i] = J(k, i).sign();
      }
  return p;
}

using Move = std::function<std::pair<std::vector<std::size_t>, int>(const std::vector<std::size_t>&)>;

/// Symmetry moves that the listed components are stated to be closed under.
inline std::vector<Move> symmetry_moves(const std::string& quantity, int alpha, const HNFrame& frame) {
  if (quantity == "F") {
    const Alpha a = alpha_from_number(alpha);
    const int eps = frame.epsilon(a);
    const auto J = as_signed_permutation(frame.j(a));
    return {[=](const auto& i) { return std::pair{std::vector<std::size_t>{i[0], i[2], i[1]}, -eps}; },
            [=](const auto& i) {
              return std::pair{std::vector<std::size_t>{i[0], J.image[i[1]], J.image[i[2]]}, -eps * J.sign[i[1]] * J.sign[i[2]]};
            }};
  }
  if (quantity == "N") {
    const auto J = as_signed_permutation(frame.j(alpha_from_number(alpha)));
    return {[](const auto& i) { return std::pair{std::vector<std::size_t>{i[1], i[0], i[2]}, -1}; },
            [=](const auto& i) {
              return std::pair{std::vector<std::size_t>{J.image[i[0]], J.image[i[1]], i[2]}, -J.sign[i[0]] * J.sign[i[1]]};
            }};
  }
  if (quantity == "R") {
    return {[](const auto& i) { return std::pair{std::vector<std::size_t>{i[1], i[0], i[2], i[3]}, -1}; },
            [](const auto& i) { return std::pair{std::vector<std::size_t>{i[0], i[1], i[3], i[2]}, -1}; },
            [](const auto& i) { return std::pair{std::vector<std::size_t>{i[2], i[3], i[0], i[1]}, 1}; }};
  }
  return {};
}

/// Closes listed components under the symmetry moves. Returns the expanded
/// map; contradictory images (x = -x with x != 0, or two values for one
/// index) are appended to `conflicts`.
inline std::map<std::vector<std::size_t>, Poly> expand_orbits(
    const std::vector<std::pair<std::vector<std::size_t>, Poly>>& listed, const std::vector<Move>& moves,
    std::vector<std::string>& conflicts) {
  std::map<std::vector<std::size_t>, Poly> out;
  for (const auto& [start, value] : listed) {
    std::vector<std::pair<std::vector<std::size_t>, Poly>> queue{{start, value}};
    while (!queue.empty()) {
      auto [idx, v] = queue.back();
      queue.pop_back();
      auto it = out.find(idx);
      if (it != out.end()) {
        if (!(it->second == v)) {
          std::string label;
          for (auto i : idx) label += std::to_string(i + 1);
          conflicts.push_back("[" + label + "]: " + it->second.to_string() + " vs " + v.to_string());
        }
        continue;
      }
      out.emplace(idx, v);
      for (const auto& m : moves) {
        auto [next, s] = m(idx);
        queue.emplace_back(next, v * Rational(s));
      }
    }
  }
  return out;
}

template <std::size_t Rank>
std::map<std::vector<std::size_t>, Poly> nonzero_components(const PolyTensor<Rank>& t) {
  std::map<std::vector<std::size_t>, Poly> out;
  PolyTensor<Rank>::for_each_index([&](const auto& idx) {
    const Poly& p = t.at(idx);
    if (!p.is_zero()) out.emplace(std::vector<std::size_t>(idx.begin(), idx.end()), p);
  });
  return out;
}

inline std::string describe_components(const std::map<std::vector<std::size_t>, Poly>& m) {
  std::string s;
  for (const auto& [idx, v] : m) {
    std::string label;
    for (auto i : idx) label += std::to_string(i + 1);
    s += (s.empty() ? "" : ", ") + label + "=" + v.to_string();
  }
  return s.empty() ? "none" : s;
}

inline std::map<std::vector<std::size_t>, Poly> computed_components(const Analysis& an, const std::string& q, int alpha) {
  if (q == "F") return nonzero_components(an.F[index(alpha_from_number(alpha))]);
  if (q == "N") return nonzero_components(an.N[index(alpha_from_number(alpha))]);
  if (q == "theta") return nonzero_components(an.theta[index(alpha_from_number(alpha))]);
  if (q == "R") return nonzero_components(an.R());
  throw std::invalid_argument("no component listing for " + q);
}

inline std::vector<Poly> parse_all(const std::vector<std::string>& text, const Variables& vars) {
  std::vector<Poly> out;
  for (const auto& t : text) out.push_back(Poly::parse(t, vars));
  return out;
}

}  // namespace detail

/// Each listed value, compared exactly with the computed component.
inline std::vector<Check> pinned_value_checks(const Analysis& an) {
  std::vector<Check> out;
  const auto* values = reference::values_for(an.algebra.name);
  if (!values) return out;
  for (const auto& p : *values) {
    Poly expected = Poly::parse(p.value, an.algebra.params);
    Poly got = an.value(p.quantity, p.alpha, detail::zero_based(p.index));
    out.push_back({an.algebra.name, detail::quantity_label(p), got == expected, expected.to_string(), got.to_string()});
  }
  return out;
}

/// For each tensor stated to have exactly the listed nonzero components
/// (up to its symmetry rules): the full expansion equals the computed tensor.
inline std::vector<Check> completeness_checks(const Analysis& an, const HNFrame& frame) {
  std::vector<Check> out;
  const auto* values = reference::values_for(an.algebra.name);
  if (!values) return out;
  for (const auto& claim : reference::completeness_claims()) {
    std::vector<std::pair<std::vector<std::size_t>, Poly>> listed;
    for (const auto& p : *values)
      if (p.quantity == claim.quantity && p.alpha == claim.alpha)
        listed.emplace_back(detail::zero_based(p.index), Poly::parse(p.value, an.algebra.params));
    std::vector<std::string> conflicts;
    auto expected = detail::expand_orbits(listed, detail::symmetry_moves(claim.quantity, claim.alpha, frame), conflicts);
    std::erase_if(expected, [](const auto& kv) { return kv.second.is_zero(); });
    auto got = detail::computed_components(an, claim.quantity, claim.alpha);
    std::string name = claim.quantity + (claim.alpha ? "_" + std::to_string(claim.alpha) : "") + " nonzero components";
    std::string exp_text = detail::describe_components(expected);
    for (const auto& c : conflicts) exp_text += " [inconsistent " + c + "]";
    out.push_back({an.algebra.name, name, conflicts.empty() && expected == got, exp_text, detail::describe_components(got)});
  }
  return out;
}

/// Matches each published table row to a computed stratum.
inline std::vector<Check> table_checks(const LieAlgebraSpec& alg, const ClassificationTable& table,
                                       std::vector<std::string>& notes) {
  std::vector<Check> out;
  if (alg.name == "g4_6") {
    const auto& want = reference::g4_6_classes();
    bool single = table.strata.size() == 1 && table.strata[0].set.dimension() == 2 && table.strata[0].excluded.empty();
    std::string got;
    for (const auto& s : table.strata) {
      got += (got.empty() ? "" : "; ") + s.set.describe() + ":";
      for (const auto& c : s.classes) got += " " + c.to_string();
    }
    bool classes = !table.strata.empty();
    for (std::size_t a = 0; classes && a < 3; ++a) classes = table.strata[0].classes[a].to_string() == want[a];
    out.push_back({alg.name, "classification: single stratum on the whole domain", single && classes,
                   "generic: " + want[0] + " " + want[1] + " " + want[2], got});
    return out;
  }
  if (alg.name != "g4_5") return out;

  std::vector<bool> matched(table.strata.size(), false);
  for (const auto& row : reference::g4_5_table()) {
    AffineSet set = AffineSet::from_linear(alg.params, detail::parse_all(row.equations, alg.params));
    const Stratum* hit = nullptr;
    for (std::size_t i = 0; i < table.strata.size(); ++i)
      if (table.strata[i].set == set) {
        hit = &table.strata[i];
        matched[i] = true;
      }
    std::string expected = row.classes[0] + " " + row.classes[1] + " " + row.classes[2];
    if (!hit) {
      out.push_back({alg.name, "classification row " + row.label, false, expected, "no such stratum"});
      continue;
    }
    bool ok = true;
    std::string got;
    for (std::size_t a = 0; a < 3; ++a) {
      got += (a ? " " : "") + hit->classes[a].to_string();
      ok = ok && hit->classes[a].to_string() == row.classes[a];
    }
    for (const auto& ex : row.exclusions) {
      AffineSet e = AffineSet::from_linear(alg.params, detail::parse_all(ex, alg.params));
      bool listed = std::find(hit->excluded.begin(), hit->excluded.end(), e) != hit->excluded.end();
      if (!listed) {
        ok = false;
        got += " (missing exclusion " + e.describe() + ")";
      }
    }
    out.push_back({alg.name, "classification row " + row.label, ok, expected, got});
  }
  for (std::size_t i = 0; i < table.strata.size(); ++i)
    if (!matched[i]) {
      const auto& s = table.strata[i];
      notes.push_back(alg.name + ": additional stratum " + s.set.describe() + " -> " + s.classes[0].to_string() + " " +
                      s.classes[1].to_string() + " " + s.classes[2].to_string());
    }
  return out;
}

/// Statements of the form "X vanishes iff these polynomials vanish".
inline std::vector<Check> iff_checks(const Analysis& an) {
  std::vector<Check> out;
  const Variables& vars = an.algebra.params;
  for (const auto& claim : reference::iff_claims()) {
    if (claim.algebra != an.algebra.name) continue;
    std::vector<Poly> source;
    if (claim.quantity == "N") {
      for (const auto& n : an.N) source.insert(source.end(), n.begin(), n.end());
    } else {
      std::string stem = claim.quantity.substr(0, claim.quantity.find('_'));
      int alpha = claim.quantity.find('_') == std::string::npos ? 0 : claim.quantity.back() - '0';
      source.push_back(an.value(stem, alpha, {}));
    }
    auto got = reduce_conditions(vars, source);
    auto want = reduce_conditions(vars, detail::parse_all(claim.conditions, vars));
    out.push_back({an.algebra.name, claim.what, got == want, detail::join(want), detail::join(got)});
  }
  return out;
}

/// Witness grid on both sides of every boundary in the sign statements.
inline std::vector<Assignment> witness_points(const LieAlgebraSpec& alg) {
  const std::vector<Rational> a_values{Rational(-3), Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 3),
                                       Rational(1), Rational(3, 2), Rational(3)};
  const std::vector<Rational> b_values{Rational(-3), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2),
                                       Rational(1), Rational(2), Rational(5, 2)};
  std::vector<Assignment> out;
  for (const auto& a : a_values)
    for (const auto& b : b_values) {
      Assignment at{{"a", a}, {"b", b}};
      bool ok = true;
      for (const auto& c : alg.constraints) ok = ok && c.satisfied_at(at);
      if (ok) out.push_back(at);
    }
  return out;
}

inline std::string point_label(const Assignment& at) {
  std::string s = "(";
  for (const auto& [k, v] : at) s += (s.size() > 1 ? ", " : "") + k + "=" + v.to_string();
  return s + ")";
}

inline std::vector<Check> sign_checks(const Analysis& an, const HNFrame& frame) {
  std::vector<Check> out;
  const Variables& vars = an.algebra.params;
  const auto points = witness_points(an.algebra);
  for (const auto& claim : reference::sign_claims()) {
    if (claim.algebra != an.algebra.name) continue;
    auto region = detail::parse_all(claim.region, vars);
    std::vector<Plane> planes;
    for (int alpha : claim.alphas)
      for (const auto& mu : planes_of_type(frame, alpha_from_number(alpha), claim.type))
        if (std::find(planes.begin(), planes.end(), mu) == planes.end()) planes.push_back(mu);
    std::size_t agree = 0, inside = 0;
    std::string first_bad;
    for (const auto& at : points) {
      bool claimed = std::all_of(region.begin(), region.end(), [&](const Poly& p) { return p.evaluate(at).sign() > 0; });
      bool actual = std::all_of(planes.begin(), planes.end(), [&](const Plane& mu) {
        return an.value("k", 0, {mu.i, mu.j}).evaluate(at).sign() == claim.sign;
      });
      inside += claimed;
      if (claimed == actual) ++agree;
      else if (first_bad.empty()) first_bad = point_label(at) + (actual ? " holds outside region" : " fails inside region");
    }
    bool ok = agree == points.size() && inside > 0 && (region.empty() || inside < points.size());
    out.push_back({an.algebra.name, claim.what, ok,
                   "agreement at all " + std::to_string(points.size()) + " witness points",
                   std::to_string(agree) + "/" + std::to_string(points.size()) + " agree, " + std::to_string(inside) +
                       " inside region" + (first_bad.empty() ? "" : "; first mismatch " + first_bad)});
  }
  return out;
}

/// Remaining global statements: flatness, definite signs, vanishing
/// identically.
inline std::vector<Check> global_checks(const Analysis& an, const HNFrame& frame) {
  std::vector<Check> out;
  const auto& name = an.algebra.name;
  const auto report = curvature_report(an.algebra, frame);
  auto nonflat = [&] {
    out.push_back({name, "non-flat", report.flatness == Flatness::NonFlat, "non-flat", to_string(report.flatness)});
  };
  auto sign = [&](const std::string& what, const Poly& p) {
    int s = definite_sign(p);
    out.push_back({name, what, s == 1, "definite sign +1", "sign " + std::to_string(s) + " of " + p.to_string()});
  };
  auto zero = [&](const std::string& what, const std::vector<Poly>& ps) {
    bool all = std::all_of(ps.begin(), ps.end(), [](const Poly& p) { return p.is_zero(); });
    out.push_back({name, what, all, "{0}", detail::join(ps)});
  };
  if (name == "g4_5") {
    nonflat();
    sign("positive scalar curvature", an.curvature.tau);
    zero("*-scalar flat for J1, J2, J3", {an.curvature.tau_star[0], an.curvature.tau_star[1], an.curvature.tau_star[2]});
  } else if (name == "g4_6") {
    zero("integrable for J3", std::vector<Poly>(an.N[2].begin(), an.N[2].end()));
    nonflat();
    zero("*-scalar flat for J1, J2", {an.curvature.tau_star[0], an.curvature.tau_star[1]});
    sign("positive **-scalar curvature for J3", an.curvature.tau_star_star[2]);
    // tau/2 = (a + b)^2 - (1 - 2 b^2), the completed square behind a = -b +- sqrt(1 - 2b^2)
    const Variables& v = an.algebra.params;
    Poly square = (Poly::variable(v, "a") + Poly::variable(v, "b")).pow(2) - (Poly(v, Rational(1)) - Poly::variable(v, "b").pow(2) * Rational(2));
    Poly half = an.curvature.tau / Rational(2);
    out.push_back({name, "scalar curvature as a completed square", half == square, square.to_string(), half.to_string()});
  }
  return out;
}

/// Class statement of g4_6 at sample points: the minimal class equals the
/// generic one, excluding every smaller class.
inline std::vector<Check> class_sample_checks(const Analysis& an) {
  std::vector<Check> out;
  if (an.algebra.name != "g4_6") return out;
  const auto& want = reference::g4_6_classes();
  const std::vector<std::pair<Rational, Rational>> samples{
      {Rational(1), Rational(0)},     {Rational(1), Rational(1)},   {Rational(-1), Rational(1, 2)},
      {Rational(2), Rational(3)},     {Rational(-3), Rational(2)},  {Rational(1, 2), Rational(1, 3)},
      {Rational(-1, 4), Rational(5)}, {Rational(7), Rational(1, 7)}, {Rational(-2), Rational(2)},
      {Rational(3), Rational(1, 2)},  {Rational(-5, 3), Rational(4)}};
  for (const auto& [a, b] : samples) {
    Assignment at{{"a", a}, {"b", b}};
    std::string got;
    bool ok = true;
    for (std::size_t k = 0; k < 3; ++k) {
      auto c = an.classes[k].minimal_class_at(at).to_string();
      got += (k ? " " : "") + c;
      ok = ok && c == want[k];
    }
    out.push_back({an.algebra.name, "classes at " + point_label(at), ok, want[0] + " " + want[1] + " " + want[2], got});
  }
  return out;
}

/// Every reference check for one catalog algebra.
inline VerifyResult verify_algebra(const LieAlgebraSpec& alg, const HNFrame& frame, const ClassifierSet& classifiers) {
  VerifyResult res;
  const Analysis an = analyze(alg, frame, classifiers);
  auto add = [&](std::vector<Check> cs) { res.checks.insert(res.checks.end(), cs.begin(), cs.end()); };
  add(pinned_value_checks(an));
  add(completeness_checks(an, frame));
  const auto table = classification_table(alg, frame, classifiers);
  add(table_checks(alg, table, res.notes));
  res.notes.insert(res.notes.end(), table.notes.begin(), table.notes.end());
  add(class_sample_checks(an));
  add(iff_checks(an));
  add(global_checks(an, frame));
  add(sign_checks(an, frame));
  return res;
}

/// Checks for both catalog algebras.
inline VerifyResult verify_reference() {
  VerifyResult all;
  for (const auto& alg : builtin_catalog()) {
    auto r = verify_algebra(alg, standard_frame(), standard_classifiers());
    all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
    all.notes.insert(all.notes.end(), r.notes.begin(), r.notes.end());
  }
  return all;
}

}  // namespace hnlab
