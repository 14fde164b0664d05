#pragma once

#include <map>
#include <utility>
#include <vector>

#include "heronfrieze/exactnum.hpp"
#include "heronfrieze/triangulation.hpp"

namespace hf {

struct Point {
  Rat u;
  Rat v;

  bool operator==(const Point&) const = default;
};

struct Polygon {
  std::vector<Point> vertices;

  int n() const { return static_cast<int>(vertices.size()); }
  // 1-based.
  const Point& at(int k) const { return vertices[k - 1]; }
};

// Squared lengths x_{ij} and 4x signed areas S_{ijk} of an n-gon.
// S is stored only for i < j < k; other orders follow by antisymmetry.
class MeasurementSet {
 public:
  MeasurementSet() = default;
  explicit MeasurementSet(int n) : n_(n) {}

  int n() const { return n_; }

  void set_x(int i, int j, Rat value);
  void set_s(int i, int j, int k, Rat value);

  bool has_x(int i, int j) const;
  bool has_s(int i, int j, int k) const;
  // x(i, i) = 0; S with a repeated vertex is 0. Missing entries throw
  // MissingSymbol.
  Rat x(int i, int j) const;
  Rat s(int i, int j, int k) const;

  const std::map<Edge, Rat>& xs() const { return x_; }
  const std::map<Triple, Rat>& ss() const { return s_; }

  bool operator==(const MeasurementSet&) const = default;

 private:
  int n_ = 0;
  std::map<Edge, Rat> x_;
  std::map<Triple, Rat> s_;
};

// Sorts a triple in place and returns the sign of the sorting permutation,
// or 0 when two entries coincide.
int canonical_triple(Triple& t);

Rat sq_dist(const Point& a, const Point& b);
// 2[AB, AC]: four times the signed area of ABC.
Rat signed_area4(const Point& a, const Point& b, const Point& c);
Rat heron_H(const Rat& p, const Rat& q, const Rat& r);

// The unique C with |AC|^2 = q, |BC|^2 = r and S(A,B,C) = s.
Point recover_point(const Point& a, const Point& b, const Rat& q, const Rat& r, const Rat& s);

MeasurementSet measure_all(const Polygon& poly);
MeasurementSet measure_triangulated(const Polygon& poly, const TriCycle& g);

// Places A1 at the origin and A2 on the positive first axis, then unfolds
// the triangles of g. Needs x_{12} to be a rational square.
Polygon polygon_from_measurements(const TriCycle& g, const MeasurementSet& m);

struct FloatPoint {
  double u;
  double v;
};

// Same construction in double precision for anchors that are not perfect
// squares. Re-measures every triangle and throws ConditionViolated when a
// relative error exceeds `tolerance`.
std::vector<FloatPoint> polygon_from_measurements_float(const TriCycle& g, const MeasurementSet& m,
                                                        double tolerance = 1e-9);

}  // namespace hf
