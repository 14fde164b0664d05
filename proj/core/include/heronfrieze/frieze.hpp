#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heronfrieze/diamonds.hpp"
#include "heronfrieze/exactnum.hpp"
#include "heronfrieze/geometry.hpp"

namespace hf {

enum class FriezeKind { Heronian, CM };

// Columns are indexed by i + j: a node (i, j) belongs to the window iff
// lo <= i + j <= hi. Half-integer nodes sit on half-integer columns.
struct Window {
  long lo = 0;
  long hi = 0;

  bool operator==(const Window&) const = default;
};

// A finite window of a Heronian frieze (integer and half-integer nodes) or a
// Cayley-Menger frieze (integer nodes only) of order n.
class Frieze {
 public:
  Frieze() = default;
  Frieze(FriezeKind kind, int n, Window window);

  FriezeKind kind() const { return kind_; }
  int n() const { return n_; }
  const Window& window() const { return window_; }

  // Node (i, j) lies in the strip 0 <= j - i <= n and in the window.
  bool contains(const NodeIdx& node) const;
  // Line is a slot of at least one diamond lying entirely in the window.
  bool contains(const LineIdx& line) const;

  // All nodes / lines of the window, in column-major order.
  std::vector<NodeIdx> window_nodes() const;
  std::vector<LineIdx> window_lines() const;

  const Rat* find(const NodeIdx& node) const;
  const Rat* find(const LineIdx& line) const;
  // IndexRange when the entry is not stored.
  const Rat& at(const NodeIdx& node) const;
  const Rat& at(const LineIdx& line) const;

  void set(const NodeIdx& node, Rat value);
  void set(const LineIdx& line, Rat value);

  const std::map<NodeIdx, Rat>& nodes() const { return nodes_; }
  const std::map<LineIdx, Rat>& lines() const { return lines_; }

  bool operator==(const Frieze&) const = default;

 private:
  FriezeKind kind_ = FriezeKind::Heronian;
  int n_ = 0;
  Window window_;
  std::map<NodeIdx, Rat> nodes_;
  std::map<LineIdx, Rat> lines_;
};

// Entries (in order) of the diamond at the integer node (i, j):
// a, b, c, d, e, f, p, q, r, s. Entry b is up:i and d is down:j.
struct DiamondSlots {
  NodeIdx a, c, e, f, p, q, r, s;
  LineIdx b, d;
};
DiamondSlots diamond_slots(long i, long j);

// A diamond whose eight nodes all lie in the window.
bool diamond_in_window(const Frieze& z, long i, long j);

struct Violation {
  std::string what;
  std::string position;
};
using Report = std::vector<Violation>;

// Traversing path of a Heronian frieze: 2n - 3 nodes climbing from row 1 to
// row n - 1 in half steps, and the n - 2 lines crossing it.
struct HPath {
  std::vector<NodeIdx> nodes;
  std::vector<LineIdx> lines;
};

// Traversing path of a Cayley-Menger frieze: n - 1 integer nodes with
// j_k - i_k = k, and the n - 2 lines crossing it.
struct CMPath {
  std::vector<NodeIdx> nodes;
  std::vector<LineIdx> lines;

  // The path nodes, their (1, 1) shifts, then the lines.
  std::vector<NodeIdx> thickened_nodes() const;
};

// Throws ConditionViolated naming the offending path position.
void validate_path(const HPath& path, int n);
void validate_path(const CMPath& path, int n);

// Values attached to a path: nodes first, then lines. For a CM path the
// node values cover the thickened node list.
struct PathValues {
  std::vector<Rat> node_values;
  std::vector<Rat> line_values;
};

Frieze frieze_from_polygon(const Polygon& poly, Window window);
Frieze cmfrieze_from_polygon(const Polygon& poly, Window window);
// Squared-distance data only; x must cover every pair.
Frieze cmfrieze_from_measurements(const MeasurementSet& m, Window window);

Frieze propagate_heronian(int n, const HPath& path, const PathValues& values, Window window);
Frieze propagate_cm(int n, const CMPath& path, const PathValues& values, Window window);

// Reads the path values off an existing frieze.
PathValues read_path(const Frieze& z, const HPath& path);
PathValues read_path(const Frieze& z, const CMPath& path);

// The vertical zig-zag path hugging column `col` (parity chooses the
// starting side) and the straight path (i0, i0 + 1) ... (i0, i0 + n - 1).
HPath rim_path(int n, long col);
HPath fan_path(int n, long i0);
CMPath cm_rim_path(int n, long col);
CMPath cm_fan_path(int n, long i0);

Report verify_heronian(const Frieze& z);
Report verify_cm(const Frieze& z);
// Centers (i, j), 2 <= j - i <= n - 2, where the coherence equation fails.
std::vector<NodeIdx> verify_coherence(const Frieze& z);
// Left minus right side of the coherence equation at the center (i, j).
Rat coherence_defect(const Frieze& z, long i, long j);

bool check_glide(const Frieze& z);
bool check_period(const Frieze& z);

enum class SolveDir { Left, Right };

// Hexagon A1..A6 with x1 = (x15,x12,x24,x45,x14,x25),
// x2 = (x16,x12,x25,x56,x15,x26), x3 = (x25,x23,x34,x45,x24,x35),
// x4 = (x26,x23,x35,x56,x25,x36). Right solves x36 from x1, x2, x3; Left
// solves x14 from x2, x3, x4 (passed as first, second, third).
Rat coherence_solve(const CMDiamond& first, const CMDiamond& second, const CMDiamond& third,
                    SolveDir dir);

Frieze restrict_to_cm(const Frieze& z);

// Signed square roots for extend: half-node -> value. Empty means pick the
// nonnegative root at the first interior diamond.
using Seed = std::map<NodeIdx, Rat>;
Frieze extend_to_heronian(const Frieze& z, const Seed& seed = {});

Polygon polygon_from_frieze(const Frieze& z);

}  // namespace hf
