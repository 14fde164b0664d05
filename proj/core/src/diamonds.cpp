#include "heronfrieze/diamonds.hpp"

#include "heronfrieze/geometry.hpp"

namespace hf {

namespace {

// Half of the derivative of M with respect to f.
Rat half_partial_f(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e, const Rat& f) {
  return (a - d) * (c - b) + e * (a + b + c + d - e - 2 * f);
}

Rat det5(std::array<std::array<Rat, 5>, 5> m) {
  Rat det = 1;
  for (int col = 0; col < 5; ++col) {
    int pivot = col;
    while (pivot < 5 && m[pivot][col] == 0) ++pivot;
    if (pivot == 5) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < 5; ++row) {
      if (m[row][col] == 0) continue;
      Rat factor = m[row][col] / m[col][col];
      for (int k = col; k < 5; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

}  // namespace

bool is_heronian(const HeronianDiamond& h) {
  const auto& [a, b, c, d, e, f, p, q, r, s] = h;
  Rat alt = a - b + c - d;
  return p * p == heron_H(b, c, e) && q * q == heron_H(a, d, e) && r * r == heron_H(a, f, b) &&
         s * s == heron_H(c, f, d) && r + s == p + q && 4 * e * f == (p + q) * (p + q) + alt * alt &&
         e * (r - s) == p * (a - d) + q * (b - c);
}

RightHalf propagate_right(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e,
                          const Rat& p, const Rat& q) {
  if (e == 0) throw Error(ErrorKind::ZeroPivot, {}, "e = 0");
  if (p * p != heron_H(b, c, e)) throw Error(ErrorKind::HeronViolation, "p");
  if (q * q != heron_H(a, d, e)) throw Error(ErrorKind::HeronViolation, "q");
  Rat alt = a - b + c - d;
  return {((p + q) * (p + q) + alt * alt) / (4 * e), (p * (e + a - d) + q * (e - c + b)) / (2 * e),
          (p * (e - a + d) + q * (e + c - b)) / (2 * e)};
}

LeftHalf propagate_left(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& f,
                        const Rat& r, const Rat& s) {
  if (f == 0) throw Error(ErrorKind::ZeroPivot, {}, "f = 0");
  if (r * r != heron_H(a, f, b)) throw Error(ErrorKind::HeronViolation, "r");
  if (s * s != heron_H(c, f, d)) throw Error(ErrorKind::HeronViolation, "s");
  // Mirror image across the vertical axis swaps b <-> d, e <-> f, p <-> s, q <-> r.
  RightHalf m = propagate_right(a, d, c, b, f, s, r);
  return {m.f, m.s, m.r};
}

HeronianDiamond reflect(const HeronianDiamond& h, Axis axis) {
  if (axis == Axis::Horizontal) return {h.c, h.d, h.a, h.b, h.e, h.f, h.q, h.p, h.s, h.r};
  if (h.e == 0) throw Error(ErrorKind::ZeroPivot, {}, "e = 0");
  return {h.a, h.d, h.c, h.b, h.f, h.e, h.s, h.r, h.q, h.p};
}

std::array<Rat, 3> boundary_step_top(const Rat& e, const Rat& b, const Rat& p) { return {b, e, p}; }

std::array<Rat, 3> boundary_step_bottom(const Rat& d, const Rat& e, const Rat& q) { return {e, d, q}; }

Rat cm_det(const CMDiamond& x) {
  const auto& [a, b, c, d, e, f] = x;
  return det5({{{0, 1, 1, 1, 1},
                {1, 0, b, e, a},
                {1, b, 0, c, f},
                {1, e, c, 0, d},
                {1, a, f, d, 0}}});
}

Rat cm_partial(PartialDir dir, const CMDiamond& x) {
  const auto& [a, b, c, d, e, f] = x;
  // Each direction relabels the four points so that the differentiated
  // entry lands on f = x24.
  switch (dir) {
    case PartialDir::Right: return 2 * half_partial_f(a, b, c, d, e, f);
    case PartialDir::Left: return 2 * half_partial_f(c, b, a, d, f, e);
    case PartialDir::Up: return 2 * half_partial_f(f, b, e, d, c, a);
    case PartialDir::Down: return 2 * half_partial_f(e, b, f, d, a, c);
    case PartialDir::UpSlant: return 2 * half_partial_f(a, f, c, e, d, b);
    case PartialDir::DownSlant: return 2 * half_partial_f(a, e, c, f, b, d);
  }
  return 0;
}

CMDiamond heronian_to_cm(const HeronianDiamond& h) {
  if (!is_heronian(h)) throw Error(ErrorKind::HeronViolation);
  bool interior = h.e != 0 || h.f != 0;
  bool top = h.a == 0 && h.q == 0 && h.r == 0;
  bool bottom = h.c == 0 && h.p == 0 && h.s == 0;
  if (!interior && !top && !bottom) throw Error(ErrorKind::ConditionViolated);
  return {h.a, h.b, h.c, h.d, h.e, h.f};
}

std::pair<HeronianDiamond, HeronianDiamond> cm_lift(const CMDiamond& x, const Rat& p) {
  const auto& [a, b, c, d, e, f] = x;
  if (e == 0 && f == 0) throw Error(ErrorKind::ConditionViolated, {}, "e = f = 0");
  if (heron_H(b, c, e) * heron_H(a, d, e) * heron_H(a, f, b) * heron_H(c, f, d) == 0) {
    throw Error(ErrorKind::NonGenericH);
  }
  if (p * p != heron_H(b, c, e)) throw Error(ErrorKind::HeronViolation, "p");
  Rat q = -cm_partial(PartialDir::Right, x) / (2 * p);
  Rat r = cm_partial(PartialDir::DownSlant, x) / (2 * p);
  Rat s = cm_partial(PartialDir::Up, x) / (2 * p);
  HeronianDiamond plus{a, b, c, d, e, f, p, q, r, s};
  HeronianDiamond minus{a, b, c, d, e, f, -p, -q, -r, -s};
  return {plus, minus};
}

std::pair<HeronianDiamond, HeronianDiamond> cm_lift_auto(const CMDiamond& x) {
  auto root = rat_sqrt(heron_H(x.b, x.c, x.e));
  if (!root) throw Error(ErrorKind::NotPerfectSquare, "p");
  return cm_lift(x, *root);
}

}  // namespace hf
