#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "hnlab/analysis.hpp"
#include "hnlab/verify.hpp"

namespace hnlab {

/// Nonzero components keyed by their 1-based index string ("113").
using ComponentMap = std::map<std::string, std::string>;

struct ScalarEntry {
  std::string value;
  int sign = 0;           // sign at the point, or definite sign (0 = not fixed)
  std::string condition;  // primitive polynomial whose vanishing is value == 0
  friend bool operator==(const ScalarEntry&, const ScalarEntry&) = default;
};

struct SectionalRow {
  std::string plane;
  std::string k;
  std::array<std::string, 3> types;
  int sign = 0;
  friend bool operator==(const SectionalRow&, const SectionalRow&) = default;
};

struct ClassEntry {
  std::string kind;
  std::string minimal_class;
  std::map<std::string, std::vector<std::string>> conditions;  // "W2" -> polynomials
  std::map<std::string, ComponentMap> components;              // "W2" -> tensor
  friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
};

struct Discrepancy {
  std::string quantity;
  std::string expected;
  std::string computed;
  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

/// Serializable summary of an Analysis. All polynomials are canonical
/// strings, so the JSON form round-trips exactly.
struct AnalysisReport {
  std::string algebra;
  std::vector<std::string> param_names;
  std::optional<std::map<std::string, std::string>> point;
  ComponentMap connection;
  std::map<std::string, ComponentMap> F, theta, nijenhuis;  // keyed "J1".."J3"
  ComponentMap riemann;
  std::map<std::string, ComponentMap> ricci;  // "rho", "rho*_1", ...
  std::map<std::string, ScalarEntry> scalars;
  std::vector<SectionalRow> sectional;
  std::map<std::string, ClassEntry> classes;
  std::vector<Discrepancy> discrepancies;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

namespace detail {

template <std::size_t Rank>
ComponentMap component_map(const PolyTensor<Rank>& t) {
  ComponentMap m;
  PolyTensor<Rank>::for_each_index([&](const auto& idx) {
    const Poly& p = t.at(idx);
    if (p.is_zero()) return;
    std::string key;
    for (auto i : idx) key += std::to_string(i + 1);
    m[key] = p.to_string();
  });
  return m;
}

inline std::string alpha_key(Alpha a) { return "J" + std::to_string(number(a)); }

inline int sign_of(const Poly& p, const std::optional<Assignment>& at) {
  return at ? p.evaluate(*at).sign() : definite_sign(p);
}

}  // namespace detail

/// Pinned reference values that disagree with the analysis (evaluated at
/// the point in point mode).
inline std::vector<Discrepancy> discrepancies(const Analysis& an) {
  std::vector<Discrepancy> out;
  const auto* values = reference::values_for(an.algebra.name);
  if (!values) return out;
  for (const auto& p : *values) {
    Poly expected = Poly::parse(p.value, an.algebra.params);
    if (an.at) expected = expected.evaluated(*an.at);
    Poly got = an.value(p.quantity, p.alpha, detail::zero_based(p.index));
    if (!(got == expected)) out.push_back({detail::quantity_label(p), expected.to_string(), got.to_string()});
  }
  return out;
}

inline AnalysisReport make_report(const Analysis& an) {
  AnalysisReport r;
  r.algebra = an.algebra.name;
  r.param_names = an.algebra.params.names();
  if (an.at) {
    std::map<std::string, std::string> pt;
    for (const auto& [k, v] : *an.at) pt[k] = v.to_string();
    r.point = pt;
  }
  r.connection = detail::component_map(an.connection.gamma);
  for (Alpha a : kAlphas) {
    const auto key = detail::alpha_key(a);
    r.F[key] = detail::component_map(an.F[index(a)]);
    r.theta[key] = detail::component_map(an.theta[index(a)]);
    r.nijenhuis[key] = detail::component_map(an.N[index(a)]);
  }
  r.riemann = detail::component_map(an.R());
  const auto& cb = an.curvature;
  r.ricci["rho"] = detail::component_map(cb.rho);
  for (Alpha a : kAlphas) r.ricci[starred_name("rho*", a)] = detail::component_map(cb.rho_star[index(a)]);

  auto scalar = [&](const std::string& name, const Poly& v) {
    r.scalars[name] = {v.to_string(), detail::sign_of(v, an.at), v.primitive().to_string()};
  };
  scalar("tau", cb.tau);
  for (Alpha a : kAlphas) scalar(starred_name("tau*", a), cb.tau_star[index(a)]);
  for (Alpha a : kAlphas) scalar(starred_name("tau**", a), cb.tau_star_star[index(a)]);

  for (const auto& e : an.sectional) {
    SectionalRow row{e.plane.label(), e.k.to_string(), {}, detail::sign_of(e.k, an.at)};
    for (Alpha a : kAlphas) row.types[index(a)] = to_string(e.types[index(a)]);
    r.sectional.push_back(row);
  }

  for (const auto& rep : an.classes) {
    ClassEntry ce{to_string(rep.kind), rep.minimal_class.to_string(), {}, {}};
    for (const auto& c : rep.components) {
      const auto key = "W" + std::to_string(c.label);
      auto& conds = ce.conditions[key];
      for (const auto& p : c.conditions) conds.push_back(p.to_string());
      ce.components[key] = detail::component_map(c.component);
    }
    r.classes[detail::alpha_key(rep.alpha)] = ce;
  }
  r.discrepancies = discrepancies(an);
  return r;
}

inline nlohmann::json to_json(const AnalysisReport& r) {
  using nlohmann::json;
  json j;
  j["algebra"] = r.algebra;
  j["params"] = {{"names", r.param_names}, {"point", r.point ? json(*r.point) : json(nullptr)}};
  j["connection"] = r.connection;
  j["F"] = r.F;
  j["theta"] = r.theta;
  j["nijenhuis"] = r.nijenhuis;
  j["riemann"] = r.riemann;
  j["ricci"] = r.ricci;
  json scalars = json::object();
  for (const auto& [k, s] : r.scalars) scalars[k] = {{"value", s.value}, {"sign", s.sign}, {"condition", s.condition}};
  j["scalars"] = scalars;
  json sectional = json::array();
  for (const auto& s : r.sectional)
    sectional.push_back({{"plane", s.plane}, {"k", s.k}, {"types", s.types}, {"sign", s.sign}});
  j["sectional"] = sectional;
  json classes = json::object();
  for (const auto& [k, c] : r.classes)
    classes[k] = {{"kind", c.kind}, {"minimal_class", c.minimal_class}, {"conditions", c.conditions}, {"components", c.components}};
  j["classes"] = classes;
  json disc = json::array();
  for (const auto& d : r.discrepancies) disc.push_back({{"quantity", d.quantity}, {"expected", d.expected}, {"computed", d.computed}});
  j["discrepancies"] = disc;
  return j;
}

/// Inverse of to_json; throws nlohmann::json exceptions on schema mismatch.
inline AnalysisReport report_from_json(const nlohmann::json& j) {
  AnalysisReport r;
  r.algebra = j.at("algebra").get<std::string>();
  r.param_names = j.at("params").at("names").get<std::vector<std::string>>();
  if (!j.at("params").at("point").is_null()) r.point = j.at("params").at("point").get<std::map<std::string, std::string>>();
  r.connection = j.at("connection").get<ComponentMap>();
  r.F = j.at("F").get<std::map<std::string, ComponentMap>>();
  r.theta = j.at("theta").get<std::map<std::string, ComponentMap>>();
  r.nijenhuis = j.at("nijenhuis").get<std::map<std::string, ComponentMap>>();
  r.riemann = j.at("riemann").get<ComponentMap>();
  r.ricci = j.at("ricci").get<std::map<std::string, ComponentMap>>();
  for (const auto& [k, s] : j.at("scalars").items())
    r.scalars[k] = {s.at("value").get<std::string>(), s.at("sign").get<int>(), s.at("condition").get<std::string>()};
  for (const auto& s : j.at("sectional"))
    r.sectional.push_back({s.at("plane").get<std::string>(), s.at("k").get<std::string>(),
                           s.at("types").get<std::array<std::string, 3>>(), s.at("sign").get<int>()});
  for (const auto& [k, c] : j.at("classes").items())
    r.classes[k] = {c.at("kind").get<std::string>(), c.at("minimal_class").get<std::string>(),
                    c.at("conditions").get<std::map<std::string, std::vector<std::string>>>(),
                    c.at("components").get<std::map<std::string, ComponentMap>>()};
  for (const auto& d : j.at("discrepancies"))
    r.discrepancies.push_back({d.at("quantity").get<std::string>(), d.at("expected").get<std::string>(),
                               d.at("computed").get<std::string>()});
  return r;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace detail {

/// Groups nonzero components into symmetry orbits and prints one
/// representative per orbit.
inline void print_folded(std::ostream& os, const std::string& title, const ComponentMap& m,
                         const std::vector<Move>& moves, const std::string& rule) {
  os << title << ":";
  if (m.empty()) {
    os << " 0\n";
    return;
  }
  os << "\n";
  std::set<std::string> seen;
  for (const auto& [key, value] : m) {
    if (seen.count(key)) continue;
    std::vector<std::size_t> idx;
    for (char c : key) idx.push_back(static_cast<std::size_t>(c - '1'));
    std::vector<std::vector<std::size_t>> stack{idx};
    std::size_t orbit = 0;
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      std::string k;
      for (auto i : cur) k += std::to_string(i + 1);
      if (seen.count(k)) continue;
      seen.insert(k);
      ++orbit;
      for (const auto& mv : moves) stack.push_back(mv(cur).first);
    }
    os << "  [" << key << "] = " << value;
    if (orbit > 1) os << "  (+" << orbit - 1 << " by " << rule << ")";
    os << "\n";
  }
}

inline void print_plain(std::ostream& os, const std::string& title, const ComponentMap& m) {
  os << title << ":";
  if (m.empty()) os << " 0";
  for (const auto& [k, v] : m) os << "  [" << k << "] = " << v;
  os << "\n";
}

// "?" marks a sign that is not fixed on the whole parameter space.
inline const char* sign_text(int s, const std::string& value) {
  if (value == "0") return "0";
  return s > 0 ? "+" : s < 0 ? "-" : "?";
}

}  // namespace detail

inline void print_report(std::ostream& os, const AnalysisReport& r, const HNFrame& frame) {
  os << "algebra " << r.algebra << " (";
  if (r.point) {
    bool first = true;
    for (const auto& [k, v] : *r.point) {
      os << (first ? "" : ", ") << k << " = " << v;
      first = false;
    }
  } else if (r.param_names.empty()) {
    os << "no parameters";
  } else {
    os << "symbolic in";
    for (const auto& n : r.param_names) os << " " << n;
  }
  os << ")\n\n";

  detail::print_plain(os, "connection nabla_i e_j = gamma[ijk] e_k", r.connection);
  os << "\n";
  for (Alpha a : kAlphas) {
    const auto key = detail::alpha_key(a);
    const int n = number(a);
    detail::print_folded(os, "F_" + std::to_string(n), r.F.at(key), detail::symmetry_moves("F", n, frame),
                         "F(x,y,z) = -eps F(x,z,y) = -eps F(x,Jy,Jz)");
    detail::print_plain(os, "theta_" + std::to_string(n), r.theta.at(key));
    detail::print_folded(os, "N_" + std::to_string(n), r.nijenhuis.at(key), detail::symmetry_moves("N", n, frame),
                         "N(x,y) = -N(y,x) = -N(Jx,Jy)");
    os << "\n";
  }
  detail::print_folded(os, "R", r.riemann, detail::symmetry_moves("R", 0, frame),
                       "R(x,y,z,w) = -R(y,x,z,w) = -R(x,y,w,z) = R(z,w,x,y)");
  os << "\n";
  for (const auto& [name, m] : r.ricci) detail::print_plain(os, name, m);
  os << "\n";
  for (const auto& [name, s] : r.scalars)
    os << name << " = " << s.value << "   sign " << detail::sign_text(s.sign, s.value) << "\n";
  os << "\nsectional curvature (plane: k, sign, type for J1 J2 J3)\n";
  for (const auto& s : r.sectional)
    os << "  " << s.plane << ": " << s.k << "   " << detail::sign_text(s.sign, s.k) << "   " << s.types[0] << " "
       << s.types[1] << " " << s.types[2] << "\n";
  os << "\nclasses\n";
  for (const auto& [key, c] : r.classes) {
    os << "  " << key << " (" << c.kind << "): " << c.minimal_class << "\n";
    for (const auto& [w, conds] : c.conditions) {
      os << "    " << w;
      if (conds.empty()) {
        os << " vanishes identically\n";
      } else if (conds.size() == 1 && conds[0] == "1") {
        os << " never vanishes\n";
      } else {
        os << " vanishes iff ";
        for (std::size_t i = 0; i < conds.size(); ++i) os << (i ? ", " : "") << conds[i] << " = 0";
        os << "\n";
      }
    }
  }
  if (!r.discrepancies.empty()) {
    os << "\ndiscrepancies against reference values\n";
    for (const auto& d : r.discrepancies)
      os << "  " << d.quantity << ": reference " << d.expected << ", computed " << d.computed << "\n";
  }
}

/// Classification table as text, with linear conditions in solved form.
inline void print_table(std::ostream& os, const ClassificationTable& t) {
  for (const auto& s : t.strata) {
    os << "  " << s.set.describe();
    for (std::size_t i = 0; i < s.excluded.size(); ++i)
      os << (i ? ", " : " except ") << "(" << s.excluded[i].describe() << ")";
    os << "  ->  " << s.classes[0].to_string() << " | " << s.classes[1].to_string() << " | " << s.classes[2].to_string()
       << "\n";
  }
  for (const auto& n : t.notes) os << "  note: " << n << "\n";
}

}  // namespace hnlab
