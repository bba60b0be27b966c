#pragma once

#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "hnlab/analysis.hpp"

namespace hnlab {

/// Inclusive arithmetic progression lo, lo + step, ..., <= hi.
struct GridRange {
  Rational lo, hi, step;

  /// Parses "lo:hi:step" with rational or decimal entries.
  static GridRange parse(const std::string& text) {
    auto first = text.find(':');
    auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
      throw ParseError("range must have the form lo:hi:step, got '" + text + "'");
    return {Rational::parse(text.substr(0, first)), Rational::parse(text.substr(first + 1, second - first - 1)),
            Rational::parse(text.substr(second + 1))};
  }

  /// Empty when step <= 0 or lo > hi.
  std::vector<Rational> values() const {
    std::vector<Rational> out;
    if (step.sign() <= 0) return out;
    for (Rational x = lo; x <= hi; x += step) out.push_back(x);
    return out;
  }
};

struct SweepPoint {
  Assignment at;
  int tau_sign = 0;
  std::array<int, 3> tau_star_star_signs{};
  std::array<int, 6> sectional_signs{};
  std::array<ClassLabel, 3> classes;
};

struct SweepResult {
  std::vector<SweepPoint> points;  // row-major in (a, b)
  std::size_t skipped = 0;         // grid points outside the domain
};

/// Evaluates a symbolic analysis on every admissible grid point. Points are
/// independent and split across `threads` workers; each worker writes only
/// its own result slots.
inline SweepResult sweep(const Analysis& symbolic, const std::vector<Rational>& as, const std::vector<Rational>& bs,
                         unsigned threads = std::thread::hardware_concurrency()) {
  SweepResult res;
  for (const auto& a : as)
    for (const auto& b : bs) {
      Assignment at{{"a", a}, {"b", b}};
      bool ok = true;
      for (const auto& c : symbolic.algebra.constraints) ok = ok && c.satisfied_at(at);
      if (ok) res.points.push_back({at, 0, {}, {}, {}});
      else ++res.skipped;
    }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < res.points.size(); i = next++) {
      auto& p = res.points[i];
      const auto& cb = symbolic.curvature;
      p.tau_sign = cb.tau.evaluate(p.at).sign();
      for (std::size_t k = 0; k < 3; ++k) {
        p.tau_star_star_signs[k] = cb.tau_star_star[k].evaluate(p.at).sign();
        p.classes[k] = symbolic.classes[k].minimal_class_at(p.at);
      }
      for (std::size_t k = 0; k < symbolic.sectional.size(); ++k)
        p.sectional_signs[k] = symbolic.sectional[k].k.evaluate(p.at).sign();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(res.points.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
    work();
  }
  return res;
}

}  // namespace hnlab
