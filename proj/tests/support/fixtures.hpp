#pragma once

#include <functional>
#include <random>
#include <vector>

#include "heronfrieze/frieze.hpp"
#include "heronfrieze/geometry.hpp"
#include "heronfrieze/triangulation.hpp"

namespace hftest {

using hf::Rat;

// Rational with numerator in [-bound, bound] and denominator in [1, bound].
inline Rat random_rat(std::mt19937_64& rng, int bound = 100) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline hf::Polygon random_polygon(std::mt19937_64& rng, int n, int bound = 100) {
  hf::Polygon p;
  for (int k = 0; k < n; ++k) p.vertices.push_back({random_rat(rng, bound), random_rat(rng, bound)});
  return p;
}

// Every side is a rational multiple of a Pythagorean direction, so every
// x_{i,i+1} is a rational square and the polygon can be recovered exactly.
inline hf::Polygon pythagorean_polygon(std::mt19937_64& rng, int n) {
  static const std::vector<std::pair<int, int>> dirs = {{3, 4}, {4, -3}, {-5, 12}, {8, 15}, {1, 0}, {0, -1}, {-7, -24}};
  std::uniform_int_distribution<size_t> pick(0, dirs.size() - 1);
  hf::Polygon p;
  hf::Point at{0, 0};
  for (int k = 0; k < n; ++k) {
    p.vertices.push_back(at);
    auto [du, dv] = dirs[pick(rng)];
    Rat scale = random_rat(rng, 9);
    if (scale == 0) scale = 1;
    at = {at.u + scale * du, at.v + scale * dv};
  }
  return p;
}

// No repeated vertex and no collinear triple: every x and S is nonzero.
inline bool is_generic(const hf::MeasurementSet& m) {
  for (const auto& [e, v] : m.xs()) {
    if (v == 0) return false;
  }
  for (const auto& [t, v] : m.ss()) {
    if (v == 0) return false;
  }
  return true;
}

inline hf::Polygon unit_square() { return {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}; }

// Regular hexagon on the Eisenstein lattice: vertex (m, k) stands for
// m + k w with |m + k w|^2 = m^2 + m k + k^2 (w at 120 degrees from 1 is
// -w^2 here). The coordinates are irrational in the plane, so only the
// squared distances are exact.
inline hf::MeasurementSet eisenstein_hexagon() {
  const std::vector<std::pair<int, int>> pts = {{0, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}};
  hf::MeasurementSet m(6);
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      int a = pts[j - 1].first - pts[i - 1].first;
      int b = pts[j - 1].second - pts[i - 1].second;
      m.set_x(i, j, a * a + a * b + b * b);
    }
  }
  return m;
}

// All triangulations of the n-cycle.
inline std::vector<hf::TriCycle> all_triangulations(int n) {
  std::function<std::vector<std::vector<hf::Edge>>(int, int)> rec = [&](int lo, int hi) {
    // Triangulations of the polygon lo, lo + 1, ..., hi using chord {lo, hi}.
    std::vector<std::vector<hf::Edge>> out;
    if (hi - lo < 2) return std::vector<std::vector<hf::Edge>>{{}};
    for (int m = lo + 1; m < hi; ++m) {
      for (const auto& left : rec(lo, m)) {
        for (const auto& right : rec(m, hi)) {
          std::vector<hf::Edge> d = left;
          d.insert(d.end(), right.begin(), right.end());
          if (m - lo >= 2) d.push_back({lo, m});
          if (hi - m >= 2) d.push_back({m, hi});
          out.push_back(d);
        }
      }
    }
    return out;
  };
  std::vector<hf::TriCycle> out;
  for (const auto& d : rec(1, n)) out.emplace_back(n, d);
  return out;
}

// A Cayley-Menger frieze with exactly one incoherent center: at `center`
// the right corner takes the other root of its diamond's quadratic, and
// every later column is re-solved by the coherence equation.
inline hf::Frieze noncoherent_frieze(const hf::Frieze& coherent, long ci, long cj) {
  using hf::NodeIdx;
  hf::Frieze z(hf::FriezeKind::CM, coherent.n(), coherent.window());
  const NodeIdx target = NodeIdx::integer(ci + 1, cj + 1);
  for (const auto& [line, v] : coherent.lines()) z.set(line, v);
  const long n = coherent.n();
  for (const auto& [node, v] : coherent.nodes()) {
    const long row = node.row2() / 2;
    if (node.col2() <= target.col2() || row <= 1 || row >= n - 1) z.set(node, v);
  }
  // M restricted to f is quadratic: M(f) = alpha f^2 + beta f + gamma.
  auto slots = hf::diamond_slots(ci, cj);
  auto diamond = [&](const Rat& f) {
    return hf::CMDiamond{z.at(slots.a), z.at(slots.b), z.at(slots.c), z.at(slots.d), z.at(slots.e), f};
  };
  const Rat m0 = hf::cm_det(diamond(0));
  const Rat m1 = hf::cm_det(diamond(1));
  const Rat mm = hf::cm_det(diamond(-1));
  const Rat alpha = (m1 + mm - 2 * m0) / 2;
  const Rat beta = (m1 - mm) / 2;
  z.set(target, -beta / alpha - coherent.at(target));
  const long last = 2 * coherent.window().hi;
  for (long col2 = target.col2() + 2; col2 <= last; col2 += 2) {
    for (long v = 2; v <= n - 2; ++v) {
      if ((col2 / 2 - v) % 2 != 0) continue;
      const long i = (col2 / 2 - v) / 2;
      const long j = (col2 / 2 + v) / 2;
      auto cm = [&](long a, long b) {
        auto s = hf::diamond_slots(a, b);
        return hf::CMDiamond{z.at(s.a), z.at(s.b), z.at(s.c), z.at(s.d), z.at(s.e), z.at(s.f)};
      };
      z.set(NodeIdx::integer(i, j),
            hf::coherence_solve(cm(i - 2, j - 2), cm(i - 2, j - 1), cm(i - 1, j - 2), hf::SolveDir::Right));
    }
  }
  return z;
}

}  // namespace hftest
