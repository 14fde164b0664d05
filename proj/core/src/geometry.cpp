#include "heronfrieze/geometry.hpp"

#include <cmath>
#include <string>

namespace hf {

namespace {

std::string pair_str(int i, int j) { return std::to_string(i) + "-" + std::to_string(j); }
std::string triple_str(int i, int j, int k) { return pair_str(i, j) + "-" + std::to_string(k); }

void check_heron_triangles(const TriCycle& g, const MeasurementSet& m) {
  for (const Triple& t : g.triangles()) {
    Rat s = m.s(t[0], t[1], t[2]);
    if (s * s != heron_H(m.x(t[0], t[1]), m.x(t[1], t[2]), m.x(t[0], t[2]))) {
      throw Error(ErrorKind::HeronViolation, triple_str(t[0], t[1], t[2]));
    }
  }
  for (Edge d : g.diagonals()) {
    if (m.x(d.first, d.second) == 0) throw Error(ErrorKind::ZeroPivot, pair_str(d.first, d.second));
  }
  if (m.x(1, 2) == 0) throw Error(ErrorKind::ZeroPivot, "1-2", "anchor side has length 0");
}

// Unfolds the triangles of g starting from A1, A2. `place(u, w, t)` must
// position vertex t from the placed vertices u and w.
template <class Place>
void unfold(const TriCycle& g, std::vector<bool>& placed, Place place) {
  const auto triangles = g.triangles();
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Triple& t : triangles) {
      int known = placed[t[0]] + placed[t[1]] + placed[t[2]];
      if (known != 2) continue;
      int missing = !placed[t[0]] ? 0 : (!placed[t[1]] ? 1 : 2);
      int u = t[(missing + 1) % 3];
      int w = t[(missing + 2) % 3];
      place(u, w, t[missing]);
      placed[t[missing]] = true;
      progress = true;
    }
  }
}

}  // namespace

int canonical_triple(Triple& t) {
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass) {
    for (int k = 0; k < 2; ++k) {
      if (t[k] > t[k + 1]) {
        std::swap(t[k], t[k + 1]);
        sign = -sign;
      }
    }
  }
  if (t[0] == t[1] || t[1] == t[2]) return 0;
  return sign;
}

void MeasurementSet::set_x(int i, int j, Rat value) { x_[make_edge(i, j)] = std::move(value); }

void MeasurementSet::set_s(int i, int j, int k, Rat value) {
  Triple t{i, j, k};
  int sign = canonical_triple(t);
  if (sign == 0) throw Error(ErrorKind::InvalidTriple, triple_str(i, j, k));
  s_[t] = sign > 0 ? value : Rat(-value);
}

bool MeasurementSet::has_x(int i, int j) const { return i == j || x_.count(make_edge(i, j)) > 0; }

bool MeasurementSet::has_s(int i, int j, int k) const {
  Triple t{i, j, k};
  return canonical_triple(t) == 0 || s_.count(t) > 0;
}

Rat MeasurementSet::x(int i, int j) const {
  if (i == j) return 0;
  auto it = x_.find(make_edge(i, j));
  if (it == x_.end()) throw Error(ErrorKind::MissingSymbol, "x:" + pair_str(std::min(i, j), std::max(i, j)));
  return it->second;
}

Rat MeasurementSet::s(int i, int j, int k) const {
  Triple t{i, j, k};
  int sign = canonical_triple(t);
  if (sign == 0) return 0;
  auto it = s_.find(t);
  if (it == s_.end()) throw Error(ErrorKind::MissingSymbol, "s:" + triple_str(t[0], t[1], t[2]));
  return sign > 0 ? it->second : Rat(-it->second);
}

Rat sq_dist(const Point& a, const Point& b) {
  Rat du = b.u - a.u;
  Rat dv = b.v - a.v;
  return du * du + dv * dv;
}

Rat signed_area4(const Point& a, const Point& b, const Point& c) {
  return 2 * ((b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u));
}

Rat heron_H(const Rat& p, const Rat& q, const Rat& r) {
  return -p * p - q * q - r * r + 2 * p * q + 2 * p * r + 2 * q * r;
}

Point recover_point(const Point& a, const Point& b, const Rat& q, const Rat& r, const Rat& s) {
  Rat uu = b.u - a.u;
  Rat uv = b.v - a.v;
  Rat p = uu * uu + uv * uv;
  if (p == 0) throw Error(ErrorKind::ZeroPivot, {}, "A and B coincide");
  if (s * s != heron_H(p, q, r)) throw Error(ErrorKind::HeronViolation, {}, "s^2 != H(p,q,r)");
  Rat t = p + q - r;
  Rat den = 2 * p;
  return {a.u + (uu * t - uv * s) / den, a.v + (uv * t + uu * s) / den};
}

MeasurementSet measure_all(const Polygon& poly) {
  const int n = poly.n();
  MeasurementSet m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      m.set_x(i, j, sq_dist(poly.at(i), poly.at(j)));
      for (int k = j + 1; k <= n; ++k) m.set_s(i, j, k, signed_area4(poly.at(i), poly.at(j), poly.at(k)));
    }
  }
  return m;
}

MeasurementSet measure_triangulated(const Polygon& poly, const TriCycle& g) {
  if (poly.n() != g.n()) throw Error(ErrorKind::OrderMismatch);
  const int n = poly.n();
  MeasurementSet m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (g.has_edge(i, j)) m.set_x(i, j, sq_dist(poly.at(i), poly.at(j)));
    }
  }
  for (const Triple& t : g.triangles()) {
    m.set_s(t[0], t[1], t[2], signed_area4(poly.at(t[0]), poly.at(t[1]), poly.at(t[2])));
  }
  return m;
}

Polygon polygon_from_measurements(const TriCycle& g, const MeasurementSet& m) {
  if (m.n() != g.n()) throw Error(ErrorKind::OrderMismatch);
  check_heron_triangles(g, m);
  auto root = rat_sqrt(m.x(1, 2));
  if (!root) throw Error(ErrorKind::NotPerfectSquare, "1-2", "anchor side");
  Polygon poly{std::vector<Point>(g.n())};
  std::vector<bool> placed(g.n() + 1, false);
  poly.vertices[0] = {0, 0};
  poly.vertices[1] = {*root, 0};
  placed[1] = placed[2] = true;
  unfold(g, placed, [&](int u, int w, int t) {
    poly.vertices[t - 1] = recover_point(poly.at(u), poly.at(w), m.x(u, t), m.x(w, t), m.s(u, w, t));
  });
  return poly;
}

std::vector<FloatPoint> polygon_from_measurements_float(const TriCycle& g, const MeasurementSet& m,
                                                        double tolerance) {
  if (m.n() != g.n()) throw Error(ErrorKind::OrderMismatch);
  check_heron_triangles(g, m);
  auto xd = [&](int i, int j) { return m.x(i, j).get_d(); };
  std::vector<FloatPoint> pts(g.n());
  std::vector<bool> placed(g.n() + 1, false);
  pts[0] = {0.0, 0.0};
  pts[1] = {std::sqrt(xd(1, 2)), 0.0};
  placed[1] = placed[2] = true;
  unfold(g, placed, [&](int u, int w, int t) {
    const FloatPoint& a = pts[u - 1];
    const FloatPoint& b = pts[w - 1];
    double uu = b.u - a.u;
    double uv = b.v - a.v;
    double p = uu * uu + uv * uv;
    double k = p + xd(u, t) - xd(w, t);
    double s = m.s(u, w, t).get_d();
    pts[t - 1] = {a.u + (uu * k - uv * s) / (2 * p), a.v + (uv * k + uu * s) / (2 * p)};
  });
  auto close = [&](double got, double want) {
    return std::abs(got - want) <= tolerance * std::max(1.0, std::abs(want));
  };
  for (int i = 1; i <= g.n(); ++i) {
    for (int j = i + 1; j <= g.n(); ++j) {
      if (!g.has_edge(i, j)) continue;
      double du = pts[j - 1].u - pts[i - 1].u;
      double dv = pts[j - 1].v - pts[i - 1].v;
      if (!close(du * du + dv * dv, xd(i, j))) {
        throw Error(ErrorKind::ConditionViolated, pair_str(i, j), "float reconstruction drifted");
      }
    }
  }
  return pts;
}

}  // namespace hf
