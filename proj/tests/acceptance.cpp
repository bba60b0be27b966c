// Acceptance run: one PASS/FAIL line per criterion on stdout, details of
// failing sub-checks on stderr. All comparisons are exact (canonical
// polynomial or rational equality).
//
// usage: acceptance <path-to-hnlab> <golden-dir>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include "hnlab/report.hpp"
#include "hnlab/verify.hpp"

using namespace hnlab;

namespace {

struct Tally {
  std::size_t total = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++total;
    if (!ok) failures.push_back(what);
  }
  void add(const std::vector<Check>& checks) {
    for (const auto& c : checks)
      expect(c.passed, c.group + ": " + c.name + " (reference " + c.expected + ", computed " + c.computed + ")");
  }
  bool passed() const { return failures.empty() && total > 0; }
};

int failed_criteria = 0;

void report(int id, const std::string& title, const Tally& t) {
  std::cout << (t.passed() ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << (t.total - t.failures.size())
            << "/" << t.total << " sub-checks, tolerance exact\n";
  for (const auto& f : t.failures) std::cerr << "  [" << id << "] " << f << "\n";
  if (!t.passed()) ++failed_criteria;
}

Assignment at(const Rational& a, const Rational& b) { return {{"a", a}, {"b", b}}; }

// ---------------------------------------------------------------------------
// Structural identities on the frame

Poly g_of(const HNFrame& f, const Vector& x, const Vector& y) {
  Poly s = x(0) * Rational(0);
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t k = 0; k < kDim; ++k)
      if (!f.g(i, k).is_zero()) s += x(i) * y(k) * f.g(i, k);
  return s;
}

// T(x, y, Jz) style contraction in one slot.
template <std::size_t R>
Poly with_j(const PolyTensor<R>& t, const HNFrame& f, Alpha a, std::array<std::size_t, R> idx, std::size_t slot) {
  Poly s = t.flat_at(0) * Rational(0);
  for (std::size_t q = 0; q < kDim; ++q) {
    const Rational& c = f.j(a)(q, idx[slot]);
    if (c.is_zero()) continue;
    auto k = idx;
    k[slot] = q;
    s += t.at(k) * c;
  }
  return s;
}

void structural(const LieAlgebraSpec& alg, const HNFrame& f, Tally& t) {
  const auto c = levi_civita(alg, f);
  const auto R = riemann(c, alg, f);
  const std::string n = alg.name + ": ";

  PolyTensor<3>::for_each_index([&](const auto& idx) {
    auto [i, j, k] = idx;
    t.expect(c.gamma(i, j, k) - c.gamma(j, i, k) == alg.structure(i, j, k), n + "torsion-free");
    Vector ej = alg.basis_vector(j), ek = alg.basis_vector(k);
    t.expect((g_of(f, c.derivative(i, ej), ek) + g_of(f, ej, c.derivative(i, ek))).is_zero(), n + "metric");
  });

  PolyTensor<4>::for_each_index([&](const auto& idx) {
    auto [x, y, z, w] = idx;
    t.expect(R(x, y, z, w) == -R(y, x, z, w), n + "R antisymmetric in 1,2");
    t.expect(R(x, y, z, w) == -R(x, y, w, z), n + "R antisymmetric in 3,4");
    t.expect(R(x, y, z, w) == R(z, w, x, y), n + "R pair symmetry");
    t.expect((R(x, y, z, w) + R(y, z, x, w) + R(z, x, y, w)).is_zero(), n + "first Bianchi");
  });

  std::array<PolyTensor<3>, 3> F;
  for (Alpha a : kAlphas) F[index(a)] = fundamental_tensor(c, f, a);
  for (Alpha a : kAlphas) {
    const auto& Fa = F[index(a)];
    const auto N = nijenhuis(c, f, a);
    const Rational eps(f.epsilon(a));
    auto [b, cc] = cyclic_successors(a);
    PolyTensor<3>::for_each_index([&](const auto& idx) {
      auto [x, y, z] = idx;
      const std::string tag = n + "J" + std::to_string(number(a)) + " ";
      t.expect(Fa(x, y, z) == -Fa(x, z, y) * eps, tag + "F(x,y,z) = -eps F(x,z,y)");
      Poly jj = Fa(x, y, z) * Rational(0);
      for (std::size_t p = 0; p < kDim; ++p)
        for (std::size_t q = 0; q < kDim; ++q) {
          Rational m = f.j(a)(p, y) * f.j(a)(q, z);
          if (!m.is_zero()) jj += Fa(x, p, q) * m;
        }
      t.expect(jj == -Fa(x, y, z) * eps, tag + "F(x,Jy,Jz) = -eps F(x,y,z)");
      // J_a = J_b J_c: F_a(x,y,z) = F_b(x, J_c y, z) - eps_b F_c(x, y, J_b z)
      t.expect(Fa(x, y, z) == with_j<3>(F[index(b)], f, cc, {x, y, z}, 1) -
                                  with_j<3>(F[index(cc)], f, b, {x, y, z}, 2) * Rational(f.epsilon(b)),
               tag + "F relation with the other two structures");
      t.expect(N(x, y, z) == -N(y, x, z), tag + "N antisymmetric");
      Poly njj = N(x, y, z) * Rational(0);
      for (std::size_t p = 0; p < kDim; ++p)
        for (std::size_t q = 0; q < kDim; ++q) {
          Rational m = f.j(a)(p, x) * f.j(a)(q, y);
          if (!m.is_zero()) njj += N(p, q, z) * m;
        }
      t.expect(njj == -N(x, y, z), tag + "N(Jx,Jy) = -N(x,y)");
    });
  }
}

void frame_identities(const HNFrame& f, Tally& t) {
  const auto id = RatMatrix::identity(kDim);
  const auto zero = RatMatrix(kDim, kDim, Rational(0));
  for (Alpha a : kAlphas) {
    auto [b, c] = cyclic_successors(a);
    const std::string tag = "J" + std::to_string(number(a)) + " ";
    t.expect(f.j(a) * f.j(a) == zero - id, tag + "J^2 = -I");
    t.expect(f.j(b) * f.j(c) == f.j(a), tag + "J_b J_c = J_a");
    t.expect(f.j(c) * f.j(b) == zero - f.j(a), tag + "J_c J_b = -J_a");
    const Rational eps(f.epsilon(a));
    RatMatrix gjj = f.j(a).transposed() * f.g * f.j(a);
    t.expect(gjj == detail::scaled(f.g, eps), tag + "g(Jx,Jy) = eps g(x,y)");
    RatMatrix ga = assoc_metric(f, a);
    t.expect(ga == f.assoc(a), tag + "associated metric g(Jx,y)");
    t.expect(ga.transposed() == detail::scaled(ga, -eps), tag + "g(Jx,y) = -eps g(Jy,x)");
  }
}

// ---------------------------------------------------------------------------
// Classification engine

ClassLabel membership_by_rank(const ClassSubspaces& cs, const RatVector& v) {
  if (is_zero_vector(v)) return {};
  std::optional<ClassLabel> best;
  const std::size_t n = cs.classes.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<RatVector> span;
    ClassLabel l;
    for (std::size_t c = 0; c < n; ++c)
      if (mask & (1u << c)) {
        span.insert(span.end(), cs.classes[c].basis.begin(), cs.classes[c].basis.end());
        l.members.push_back(cs.classes[c].label);
      }
    auto with = span;
    with.push_back(v);
    if (rank(RatMatrix::from_columns(with, kTensorSpace)) != rank(RatMatrix::from_columns(span, kTensorSpace))) continue;
    std::sort(l.members.begin(), l.members.end());
    if (!best || l.members.size() < best->members.size()) best = l;
  }
  return *best;
}

void classification_engine(Tally& t) {
  const auto f = standard_frame();
  const auto& cl = standard_classifiers();
  for (Alpha a : kAlphas) {
    const auto& cs = cl[a];
    const std::string tag = "J" + std::to_string(number(a)) + " ";
    const bool herm = cs.space.kind == MetricKind::Hermitian;
    t.expect(cs.space.dim() == (herm ? 8u : 16u), tag + "admissible dimension");
    std::size_t sum = 0;
    for (const auto& c : cs.classes) sum += c.coords.size();
    t.expect(sum == cs.space.dim(), tag + "class dimensions add up");
    const std::size_t d = cs.space.dim();
    RatMatrix total(d, d, Rational(0));
    for (const auto& c : cs.classes) {
      t.expect(c.projector * c.projector == c.projector, tag + "P^2 = P");
      for (const auto& o : cs.classes)
        if (o.label != c.label) t.expect(c.projector * o.projector == RatMatrix(d, d, Rational(0)), tag + "P_i P_j = 0");
      total = total + c.projector;
    }
    t.expect(total == RatMatrix::identity(d), tag + "sum of projectors = I");
  }

  for (const auto& alg : builtin_catalog()) {
    const auto c = levi_civita(alg, f);
    for (Alpha a : kAlphas) {
      const auto F = fundamental_tensor(c, f, a);
      const auto rep = decompose(F, cl[a]);
      PolyTensor<3> sum(alg.zero());
      for (const auto& comp : rep.components)
        for (std::size_t k = 0; k < kTensorSpace; ++k) sum.flat_at(k) += comp.component.flat_at(k);
      t.expect(sum == F, alg.name + " J" + std::to_string(number(a)) + " reconstruction");
    }
  }

  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  auto nonzero = [&] {
    int p = 0;
    while (p == 0) p = num(rng);
    return Rational(p, den(rng));
  };
  for (const auto& alg : builtin_catalog()) {
    const auto reps = classify_algebra(alg, f, cl);
    int sampled = 0;
    while (sampled < 20) {
      Assignment p = at(nonzero(), nonzero());
      bool inside = true;
      for (const auto& con : alg.constraints) inside = inside && con.satisfied_at(p);
      if (!inside) continue;
      ++sampled;
      const auto c = levi_civita(specialize(alg, p), f);
      for (Alpha a : kAlphas) {
        RatVector flat;
        for (const auto& e : fundamental_tensor(c, f, a)) flat.push_back(e.constant_value());
        auto want = membership_by_rank(cl[a], flat), got = reps[index(a)].minimal_class_at(p);
        t.expect(want == got, alg.name + " J" + std::to_string(number(a)) + " at " + point_label(p) +
                                  ": symbolic " + got.to_string() + ", point " + want.to_string());
      }
    }
  }
}

// ---------------------------------------------------------------------------
// CLI

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

void cli(const std::string& exe, const std::string& golden_dir, Tally& t) {
  const std::string q = "'" + exe + "'";
  auto v = run(q + " verify-paper");
  std::smatch m;
  std::regex summary(R"((\d+) checks passed, (\d+) failed)");
  std::size_t passed = 0, failed = 0;
  if (std::regex_search(v.out, m, summary)) {
    passed = std::stoul(m[1]);
    failed = std::stoul(m[2]);
  }
  t.expect(passed + failed >= 120, "verify-paper runs >= 120 checks (ran " + std::to_string(passed + failed) + ")");
  t.expect(v.status == 0, "verify-paper exit status 0 (got " + std::to_string(v.status) + ", " + std::to_string(failed) +
                              " failed checks)");

  auto d = run(q + " analyze --algebra g4_5 --a 0 --b 1");
  t.expect(d.status == 3, "analyze at a = 0 exits 3 (got " + std::to_string(d.status) + ")");

  auto j = run(q + " analyze --algebra g4_5 --symbolic --json");
  t.expect(j.status == 0, "analyze --symbolic --json exits 0");
  try {
    auto out = nlohmann::json::parse(j.out);
    std::ifstream in(golden_dir + "/g4_5_symbolic.json");
    t.expect(in.good(), "golden file present");
    if (in) t.expect(out == nlohmann::json::parse(in), "JSON equals golden file");
    t.expect(to_json(report_from_json(out)) == out, "JSON -> report -> JSON is the identity");
  } catch (const std::exception& e) {
    t.expect(false, std::string("JSON output parses: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <hnlab executable> <golden dir>\n";
    return 2;
  }
  const auto f = standard_frame();
  const auto& cl = standard_classifiers();
  const auto g45 = g4_5(), g46 = g4_6();
  const auto an45 = analyze(g45, f, cl), an46 = analyze(g46, f, cl);

  {
    Tally t;
    t.add(pinned_value_checks(an45));
    t.add(completeness_checks(an45, f));
    report(1, "g4_5 displayed components reproduced", t);
  }
  {
    Tally t;
    t.add(pinned_value_checks(an46));
    t.add(completeness_checks(an46, f));
    report(2, "g4_6 displayed components reproduced", t);
  }
  {
    Tally t;
    std::vector<std::string> notes;
    auto table = classification_table(g45, f, cl);
    t.add(table_checks(g45, table, notes));
    t.expect(table_checks(g45, table, notes).size() == 12, "12 table rows compared");
    report(3, "g4_5 classification table rows", t);
  }
  {
    Tally t;
    std::vector<std::string> notes;
    t.add(table_checks(g46, classification_table(g46, f, cl), notes));
    t.add(class_sample_checks(an46));
    report(4, "g4_6 generic classes and exclusions at samples", t);
  }
  {
    Tally t;
    t.add(iff_checks(an45));
    t.add(global_checks(an45, f));
    t.add(sign_checks(an45, f));
    // tau/2 = (a + b/2 + 1/2)^2 + 3/4 (b + 1/3)^2 + 2/3
    const Variables& v = g45.params;
    Poly A = Poly::variable(v, "a"), B = Poly::variable(v, "b");
    Poly half = an45.curvature.tau * Rational(1, 2);
    Poly square = (A + B * Rational(1, 2) + Poly(v, Rational(1, 2))).pow(2) +
                  (B + Poly(v, Rational(1, 3))).pow(2) * Rational(3, 4) + Poly(v, Rational(2, 3));
    t.expect(half == square, "tau/2 equals its completed square");
    t.expect(half.evaluate(at(Rational(-1, 3), Rational(-1, 3))) == Rational(2, 3), "tau/2 = 2/3 at (-1/3, -1/3)");
    int grid = 0;
    for (int i = -5; i <= 5; ++i)
      for (int j = -5; j <= 5; ++j) {
        if (i == 0 || j == 0) continue;
        ++grid;
        t.expect(half.evaluate(at(Rational(i, 3), Rational(j, 3))) >= Rational(2, 3),
                 "tau/2 >= 2/3 at (" + std::to_string(i) + "/3, " + std::to_string(j) + "/3)");
      }
    t.expect(grid == 100, "100-point grid");
    report(5, "g4_5 curvature and integrability statements", t);
  }
  {
    Tally t;
    t.add(iff_checks(an46));
    t.add(global_checks(an46, f));
    t.add(sign_checks(an46, f));
    const Variables& v = g46.params;
    t.expect(an46.R()(1, 2, 1, 2) == Poly::parse("b^2 + 1", v), "R_2323 = b^2 + 1");
    t.expect(an46.curvature.tau_star_star[2] == Poly::parse("2*(a^2 + b^2 + 1)", v), "tau**_3 = 2(a^2 + b^2 + 1)");
    report(6, "g4_6 curvature and integrability statements", t);
  }
  {
    Tally t;
    frame_identities(f, t);
    for (const auto& alg : builtin_catalog()) structural(alg, f, t);
    report(7, "structural identities of connection, curvature, F and N", t);
  }
  {
    Tally t;
    classification_engine(t);
    report(8, "classification engine self-consistency", t);
  }
  {
    Tally t;
    cli(argv[1], argv[2], t);
    report(9, "command-line contract", t);
  }

  std::cout << (9 - failed_criteria) << " of 9 criteria passed\n";
  return failed_criteria == 0 ? 0 : 1;
}
