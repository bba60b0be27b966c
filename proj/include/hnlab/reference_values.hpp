#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hnlab/hnstruct.hpp"
#include "hnlab/poly.hpp"

// Literature values for the catalog algebras g4_5 and g4_6, as printed.
// Indices are 1-based. Quantities: F, theta, N (per alpha), R, rho,
// rho* (per alpha), tau, tau*, tau** (per alpha), k (plane ij).

namespace hnlab::reference {

struct Pinned {
  std::string quantity;
  int alpha = 0;  // 0 when the quantity carries no structure index
  std::vector<int> index;
  std::string value;
};

inline const std::vector<Pinned>& g4_5_values() {
  static const std::vector<Pinned> v{
      {"F", 1, {1, 1, 3}, "1"},
      {"F", 2, {1, 1, 2}, "1"},
      {"F", 3, {1, 1, 1}, "-2"},
      {"F", 1, {2, 1, 4}, "-a"},
      {"F", 3, {2, 1, 2}, "-a"},
      {"F", 2, {2, 2, 2}, "2*a"},
      {"F", 2, {3, 1, 4}, "b"},
      {"F", 3, {3, 1, 3}, "b"},
      {"theta", 1, {3}, "a + 1"},
      {"theta", 2, {2}, "2*a + b + 1"},
      {"theta", 3, {1}, "-(a + b + 2)"},
      {"N", 1, {1, 3, 2}, "1 - a"},
      {"N", 1, {2, 3, 1}, "1 - a"},
      {"N", 2, {1, 2, 3}, "1 - b"},
      {"N", 2, {2, 3, 1}, "1 - b"},
      {"N", 3, {1, 2, 3}, "a - b"},
      {"N", 3, {1, 3, 2}, "a - b"},
      {"R", 0, {1, 2, 2, 1}, "a"},
      {"R", 0, {1, 3, 1, 3}, "b"},
      {"R", 0, {1, 4, 1, 4}, "1"},
      {"R", 0, {2, 3, 2, 3}, "a*b"},
      {"R", 0, {2, 4, 2, 4}, "a^2"},
      {"R", 0, {3, 4, 4, 3}, "b^2"},
      {"rho", 0, {1, 1}, "a + b + 1"},
      {"rho", 0, {2, 2}, "a*(a + b + 1)"},
      {"rho", 0, {3, 3}, "-b*(a + b + 1)"},
      {"rho", 0, {4, 4}, "-(a^2 + b^2 + 1)"},
      {"rho*", 1, {1, 2}, "a"},
      {"rho*", 1, {3, 4}, "b^2"},
      {"rho*", 2, {1, 3}, "b"},
      {"rho*", 2, {2, 4}, "a^2"},
      {"rho*", 3, {1, 4}, "-1"},
      {"rho*", 3, {2, 3}, "a*b"},
      {"tau", 0, {}, "2*(a^2 + b^2 + a*b + a + b + 1)"},
      {"tau*", 1, {}, "0"},
      {"tau*", 2, {}, "0"},
      {"tau*", 3, {}, "0"},
      {"tau**", 1, {}, "2*(a + b^2)"},
      {"tau**", 2, {}, "2*(a^2 + b)"},
      {"tau**", 3, {}, "2*(a*b + 1)"},
      {"k", 0, {1, 2}, "a"},
      {"k", 0, {1, 3}, "b"},
      {"k", 0, {1, 4}, "1"},
      {"k", 0, {2, 3}, "a*b"},
      {"k", 0, {2, 4}, "a^2"},
      {"k", 0, {3, 4}, "b^2"},
  };
  return v;
}

inline const std::vector<Pinned>& g4_6_values() {
  static const std::vector<Pinned> v{
      {"F", 1, {3, 2, 3}, "1"},
      {"F", 2, {2, 2, 3}, "1"},
      {"F", 3, {2, 1, 3}, "-1"},
      {"F", 3, {3, 3, 4}, "1"},
      {"F", 2, {3, 2, 2}, "2"},
      {"F", 1, {2, 2, 3}, "b"},
      {"F", 2, {3, 1, 4}, "b"},
      {"F", 3, {2, 3, 4}, "b"},
      {"F", 3, {3, 1, 3}, "b"},
      {"F", 2, {2, 2, 2}, "2*b"},
      {"F", 1, {1, 1, 3}, "a"},
      {"F", 2, {1, 1, 2}, "a"},
      {"F", 3, {1, 1, 1}, "-2*a"},
      {"theta", 1, {2}, "1"},
      {"theta", 2, {3}, "1"},
      {"theta", 3, {4}, "-2"},
      {"theta", 1, {3}, "a + b"},
      {"theta", 3, {1}, "-2*(a + b)"},
      {"theta", 2, {2}, "a + 3*b"},
      {"N", 1, {1, 3, 2}, "a - b"},
      {"N", 1, {2, 3, 1}, "a - b"},
      {"N", 2, {1, 2, 3}, "a - b"},
      {"N", 2, {2, 3, 1}, "a - b"},
      {"N", 1, {1, 3, 3}, "-1"},
      {"N", 1, {2, 3, 4}, "-1"},
      {"N", 2, {1, 2, 2}, "1"},
      {"N", 2, {1, 4, 4}, "1"},
      {"R", 0, {1, 2, 2, 1}, "a*b"},
      {"R", 0, {1, 3, 1, 3}, "a*b"},
      {"R", 0, {1, 2, 3, 1}, "a"},
      {"R", 0, {1, 4, 1, 4}, "a^2"},
      {"R", 0, {2, 3, 2, 3}, "b^2 + 1"},
      {"R", 0, {2, 4, 2, 4}, "b^2 - 1"},
      {"R", 0, {2, 4, 3, 4}, "2*b"},
      {"R", 0, {3, 4, 4, 3}, "2 - b^2"},
      {"rho", 0, {1, 1}, "a*(a + 2*b)"},
      {"rho", 0, {2, 2}, "b*(a + 2*b)"},
      {"rho", 0, {3, 3}, "-b*(a + 2*b)"},
      {"rho", 0, {2, 3}, "a + 2*b"},
      {"rho", 0, {4, 4}, "-(a^2 + 2*b^2 - 2)"},
      {"rho*", 1, {1, 3}, "a"},
      {"rho*", 2, {1, 2}, "-a"},
      {"rho*", 3, {1, 1}, "2*a"},
      {"rho*", 1, {2, 4}, "-2*b"},
      {"rho*", 2, {3, 4}, "2*b"},
      {"rho*", 3, {4, 4}, "-4*b"},
      {"rho*", 1, {1, 2}, "a*b"},
      {"rho*", 2, {1, 3}, "a*b"},
      {"rho*", 1, {3, 4}, "b^2 - 1"},
      {"rho*", 2, {2, 4}, "b^2 - 1"},
      {"rho*", 3, {2, 3}, "b^2 + 1"},
      {"rho*", 3, {1, 4}, "-a^2"},
      {"tau", 0, {}, "2*(a^2 + 3*b^2 + 2*a*b - 1)"},
      {"tau*", 1, {}, "0"},
      {"tau*", 2, {}, "0"},
      {"tau*", 3, {}, "2*(a + 2*b)"},
      {"tau**", 1, {}, "2*(b^2 + a*b - 1)"},
      {"tau**", 2, {}, "2*(b^2 + a*b - 1)"},
      {"tau**", 3, {}, "2*(a^2 + b^2 + 1)"},
      {"k", 0, {1, 2}, "a*b"},
      {"k", 0, {1, 3}, "a*b"},
      {"k", 0, {1, 4}, "a^2"},
      {"k", 0, {2, 3}, "b^2 + 1"},
      {"k", 0, {2, 4}, "b^2 - 1"},
      {"k", 0, {3, 4}, "b^2 - 1"},
  };
  return v;
}

inline const std::vector<Pinned>* values_for(const std::string& algebra) {
  if (algebra == "g4_5") return &g4_5_values();
  if (algebra == "g4_6") return &g4_6_values();
  return nullptr;
}

/// Tensors whose nonzero components are all listed up to their symmetry
/// rules (F, N, R), or listed outright (theta).
struct CompletenessClaim {
  std::string quantity;
  int alpha = 0;
};

inline std::vector<CompletenessClaim> completeness_claims() {
  return {{"F", 1},     {"F", 2},     {"F", 3},     {"theta", 1}, {"theta", 2}, {"theta", 3},
          {"N", 1},     {"N", 2},     {"N", 3},     {"R", 0}};
}

/// Row of a classification table: the affine set (equations that vanish),
/// the excluded special cases, and the class for J1, J2, J3.
struct TableRow {
  std::string label;
  std::vector<std::string> equations;
  std::vector<std::vector<std::string>> exclusions;
  std::array<std::string, 3> classes;
};

inline const std::vector<TableRow>& g4_5_table() {
  static const std::vector<TableRow> rows{
      {"a = -1, b = 1", {"a + 1", "b - 1"}, {}, {"W2", "W2", "W1+W2+W3"}},
      {"a = -1, b = -1", {"a + 1", "b + 1"}, {}, {"W2", "W1+W2+W3", "W2"}},
      {"a = -1, b != +-1", {"a + 1"}, {{"a + 1", "b - 1"}, {"a + 1", "b + 1"}}, {"W2", "W1+W2+W3", "W1+W2+W3"}},
      {"a = 1, b = 1", {"a - 1", "b - 1"}, {}, {"W4", "W1", "W1+W2"}},
      {"a = 1, b = -3", {"a - 1", "b + 3"}, {}, {"W4", "W2+W3", "W2+W3"}},
      {"a = 1, b != 1, -3", {"a - 1"}, {{"a - 1", "b - 1"}, {"a - 1", "b + 3"}}, {"W4", "W1+W2+W3", "W1+W2+W3"}},
      {"a != +-1, b = 1", {"b - 1"}, {{"a - 1", "b - 1"}, {"a + 1", "b - 1"}}, {"W2+W4", "W1+W2", "W1+W2+W3"}},
      {"a = -1/3, b = -1/3", {"3*a + 1", "3*b + 1"}, {}, {"W2+W4", "W2+W3", "W1+W2"}},
      {"a = -(b+1)/2, b != -3, -1/3",
       {"2*a + b + 1"},
       {{"a - 1", "b + 3"}, {"3*a + 1", "3*b + 1"}},
       {"W2+W4", "W2+W3", "W1+W2+W3"}},
      {"a = b, b != +-1, -1/3",
       {"a - b"},
       {{"a - 1", "b - 1"}, {"a + 1", "b + 1"}, {"3*a + 1", "3*b + 1"}},
       {"W2+W4", "W1+W2+W3", "W1+W2"}},
      {"a = -b-2, b != -1, -3", {"a + b + 2"}, {{"a + 1", "b + 1"}, {"a - 1", "b + 3"}}, {"W2+W4", "W1+W2+W3", "W2+W3"}},
      {"a != 0, b != 0", {}, {}, {"W2+W4", "W1+W2+W3", "W1+W2+W3"}},
  };
  return rows;
}

/// g4_6 has a single class statement over its whole domain.
inline const std::array<std::string, 3>& g4_6_classes() {
  static const std::array<std::string, 3> c{"W2+W4", "W1+W2+W3", "W1+W2"};
  return c;
}

/// Vanishing conditions stated as "iff" results, as polynomial lists.
struct IffClaim {
  std::string algebra;
  std::string what;      // human label
  std::string quantity;  // "N" (all alpha), "N3", "tau", "tau*_3", "tau**_1", ...
  std::vector<std::string> conditions;
};

inline const std::vector<IffClaim>& iff_claims() {
  static const std::vector<IffClaim> c{
      {"g4_5", "integrable for all alpha iff a = b = 1", "N", {"a - 1", "b - 1"}},
      {"g4_5", "**-scalar flat for J1 iff a = -b^2", "tau**_1", {"b^2 + a"}},
      {"g4_5", "**-scalar flat for J2 iff b = -a^2", "tau**_2", {"a^2 + b"}},
      {"g4_5", "**-scalar flat for J3 iff ab = -1", "tau**_3", {"a*b + 1"}},
      {"g4_6", "scalar flat iff a = -b +- sqrt(1 - 2b^2)", "tau", {"a^2 + 2*a*b + 3*b^2 - 1"}},
      {"g4_6", "*-scalar flat for J3 iff a = -2b", "tau*_3", {"a + 2*b"}},
      {"g4_6", "**-scalar flat for J1 iff a = 1/b - b", "tau**_1", {"a*b + b^2 - 1"}},
      {"g4_6", "**-scalar flat for J2 iff a = 1/b - b", "tau**_2", {"a*b + b^2 - 1"}},
  };
  return c;
}

/// Sign-region statements about basic sectional curvatures: for the given
/// alpha and plane type, all such planes have sign `sign` exactly when
/// `region` holds. Regions are conjunctions of strict inequalities p > 0.
struct SignClaim {
  std::string algebra;
  std::string what;
  std::vector<int> alphas;
  PlaneType type;
  int sign;
  std::vector<std::string> region;  // each p means p > 0; empty means always
};

inline const std::vector<SignClaim>& sign_claims() {
  using PT = PlaneType;
  static const std::vector<SignClaim> c{
      {"g4_5", "holomorphic k > 0 for J1 iff a > 0", {1}, PT::Holomorphic, 1, {"a"}},
      {"g4_5", "holomorphic k > 0 for J2 iff b > 0", {2}, PT::Holomorphic, 1, {"b"}},
      {"g4_5", "holomorphic k > 0 for J3 iff ab > 0", {3}, PT::Holomorphic, 1, {"a*b"}},
      {"g4_5", "totally real k > 0 iff a > 0 and b > 0", {1, 2, 3}, PT::TotallyReal, 1, {"a", "b"}},
      {"g4_6", "holomorphic k > 0 for J1, J2 iff a > 0 and b > 1", {1, 2}, PT::Holomorphic, 1, {"a", "b - 1"}},
      {"g4_6", "holomorphic k < 0 for J1, J2 iff a < 0 and 0 < b < 1", {1, 2}, PT::Holomorphic, -1, {"-a", "b", "1 - b"}},
      {"g4_6", "holomorphic k > 0 for J3 always", {3}, PT::Holomorphic, 1, {}},
      {"g4_6", "totally real k > 0 for J1, J2 iff a > 0 and b > 1", {1, 2}, PT::TotallyReal, 1, {"a", "b - 1"}},
      {"g4_6", "totally real k > 0 for J3 iff a > 0 and b > 1", {3}, PT::TotallyReal, 1, {"a", "b - 1"}},
      {"g4_6", "totally real k < 0 for J3 iff a < 0 and 0 < b < 1", {3}, PT::TotallyReal, -1, {"-a", "b", "1 - b"}},
  };
  return c;
}

}  // namespace hnlab::reference
