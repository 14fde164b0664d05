#include "heronfrieze/frieze.hpp"

#include <algorithm>
#include <functional>

namespace hf {

namespace {

// k with 2k + 1 = odd.
long half_floor(long odd) { return (odd - 1) / 2; }

int label(long i, int n) { return static_cast<int>(((i - 1) % n + n) % n) + 1; }

bool is_heronian_kind(const Frieze& z) { return z.kind() == FriezeKind::Heronian; }

std::string format_idx(const NodeIdx& node) { return node_format(node); }
std::string format_idx(const LineIdx& line) { return line_format(line); }

// Writes `value` into an empty slot, or checks agreement with a stored one.
template <class Idx>
bool assign(Frieze& z, const Idx& idx, const Rat& value) {
  if (const Rat* old = z.find(idx)) {
    if (*old != value) {
      throw Error(ErrorKind::ConditionViolated, format_idx(idx), "conflicting values");
    }
    return false;
  }
  z.set(idx, value);
  return true;
}

// Integer nodes (i, j) of complete diamonds, ordered by column then row.
std::vector<std::pair<long, long>> window_diamonds(const Frieze& z) {
  std::vector<std::pair<long, long>> out;
  const Window& w = z.window();
  for (long sum = w.lo; sum + 2 <= w.hi; ++sum) {
    for (long v = 1; v <= z.n() - 1; ++v) {
      if (((sum - v) % 2 + 2) % 2 != 0) continue;
      long i = (sum - v) / 2;
      long j = (sum + v) / 2;
      if (diamond_in_window(z, i, j)) out.push_back({i, j});
    }
  }
  return out;
}

// Centers (i, j) whose whole 3x3 block lies in the window.
std::vector<std::pair<long, long>> window_centers(const Frieze& z) {
  std::vector<std::pair<long, long>> out;
  const Window& w = z.window();
  for (long sum = w.lo + 2; sum + 2 <= w.hi; ++sum) {
    for (long v = 2; v <= z.n() - 2; ++v) {
      if (((sum - v) % 2 + 2) % 2 != 0) continue;
      out.push_back({(sum - v) / 2, (sum + v) / 2});
    }
  }
  return out;
}

CMDiamond cm_diamond_at(const Frieze& z, long i, long j) {
  DiamondSlots sl = diamond_slots(i, j);
  return {z.at(sl.a), z.at(sl.b), z.at(sl.c), z.at(sl.d), z.at(sl.e), z.at(sl.f)};
}

bool cm_diamond_known(const Frieze& z, long i, long j) {
  DiamondSlots sl = diamond_slots(i, j);
  return z.find(sl.a) && z.find(sl.b) && z.find(sl.c) && z.find(sl.d) && z.find(sl.e) && z.find(sl.f);
}

HeronianDiamond heronian_diamond_at(const Frieze& z, long i, long j) {
  DiamondSlots sl = diamond_slots(i, j);
  return {z.at(sl.a), z.at(sl.b), z.at(sl.c), z.at(sl.d), z.at(sl.e),
          z.at(sl.f), z.at(sl.p), z.at(sl.q), z.at(sl.r), z.at(sl.s)};
}

void preset_borders(Frieze& z) {
  const long n2 = 2L * z.n();
  for (const NodeIdx& node : z.window_nodes()) {
    long v = node.row2();
    if (v == 0 || v == n2 || (is_heronian_kind(z) && (v == 1 || v == n2 - 1))) z.set(node, 0);
  }
}

void require_in_window(const Frieze& z, const NodeIdx& node) {
  if (!z.contains(node)) throw Error(ErrorKind::WindowTooNarrow, node_format(node));
}

void require_complete(const Frieze& z) {
  for (const NodeIdx& node : z.window_nodes()) {
    if (!z.find(node)) throw Error(ErrorKind::ConditionViolated, node_format(node), "not determined by the path");
  }
  for (const LineIdx& line : z.window_lines()) {
    if (!z.find(line)) throw Error(ErrorKind::ConditionViolated, line_format(line), "not determined by the path");
  }
}

void check_step(const NodeIdx& from, const NodeIdx& to, long unit, size_t pos) {
  long di = to.i2 - from.i2;
  long dj = to.j2 - from.j2;
  bool up_right = di == 0 && dj == unit;
  bool up_left = di == -unit && dj == 0;
  if (!up_right && !up_left) {
    throw Error(ErrorKind::ConditionViolated, std::to_string(pos + 1), "path step must climb one row unit");
  }
}

// --- Heronian propagation -------------------------------------------------

bool heronian_right(Frieze& z, long i, long j) {
  const DiamondSlots sl = diamond_slots(i, j);
  const long v = j - i;
  if (z.find(sl.f) && z.find(sl.r) && z.find(sl.s) && z.find(sl.b) && z.find(sl.d)) return false;
  auto k = [&](const auto& idx) { return z.find(idx) != nullptr; };
  if (v == 1) {
    if (!k(sl.d) || !k(sl.e) || !k(sl.q)) return false;
    auto out = boundary_step_bottom(z.at(sl.d), z.at(sl.e), z.at(sl.q));
    bool changed = assign(z, sl.b, out[0]);
    changed |= assign(z, sl.f, out[1]);
    changed |= assign(z, sl.r, out[2]);
    return changed;
  }
  if (v == z.n() - 1) {
    if (!k(sl.e) || !k(sl.b) || !k(sl.p)) return false;
    auto out = boundary_step_top(z.at(sl.e), z.at(sl.b), z.at(sl.p));
    bool changed = assign(z, sl.f, out[0]);
    changed |= assign(z, sl.d, out[1]);
    changed |= assign(z, sl.s, out[2]);
    return changed;
  }
  if (!k(sl.a) || !k(sl.b) || !k(sl.c) || !k(sl.d) || !k(sl.e) || !k(sl.p) || !k(sl.q)) return false;
  if (z.at(sl.e) == 0) throw Error(ErrorKind::ZeroPivot, node_format(sl.e));
  RightHalf out;
  try {
    out = propagate_right(z.at(sl.a), z.at(sl.b), z.at(sl.c), z.at(sl.d), z.at(sl.e), z.at(sl.p), z.at(sl.q));
  } catch (const Error& err) {
    throw Error(err.kind(), node_format(sl.e), err.what());
  }
  bool changed = assign(z, sl.f, out.f);
  changed |= assign(z, sl.r, out.r);
  changed |= assign(z, sl.s, out.s);
  return changed;
}

bool heronian_left(Frieze& z, long i, long j) {
  const DiamondSlots sl = diamond_slots(i, j);
  const long v = j - i;
  if (z.find(sl.e) && z.find(sl.p) && z.find(sl.q) && z.find(sl.b) && z.find(sl.d)) return false;
  auto k = [&](const auto& idx) { return z.find(idx) != nullptr; };
  if (v == 1) {
    if (!k(sl.b) || !k(sl.f) || !k(sl.r)) return false;
    bool changed = assign(z, sl.e, z.at(sl.b));
    changed |= assign(z, sl.d, z.at(sl.f));
    changed |= assign(z, sl.q, z.at(sl.r));
    return changed;
  }
  if (v == z.n() - 1) {
    if (!k(sl.f) || !k(sl.d) || !k(sl.s)) return false;
    bool changed = assign(z, sl.e, z.at(sl.d));
    changed |= assign(z, sl.b, z.at(sl.f));
    changed |= assign(z, sl.p, z.at(sl.s));
    return changed;
  }
  if (!k(sl.a) || !k(sl.b) || !k(sl.c) || !k(sl.d) || !k(sl.f) || !k(sl.r) || !k(sl.s)) return false;
  if (z.at(sl.f) == 0) throw Error(ErrorKind::ZeroPivot, node_format(sl.f));
  LeftHalf out;
  try {
    out = propagate_left(z.at(sl.a), z.at(sl.b), z.at(sl.c), z.at(sl.d), z.at(sl.f), z.at(sl.r), z.at(sl.s));
  } catch (const Error& err) {
    throw Error(err.kind(), node_format(sl.f), err.what());
  }
  bool changed = assign(z, sl.e, out.e);
  changed |= assign(z, sl.p, out.p);
  changed |= assign(z, sl.q, out.q);
  return changed;
}

// --- Cayley-Menger propagation --------------------------------------------

// Rows 1 and n - 1 are copies of line entries.
bool cm_line_closure(Frieze& z) {
  const int n = z.n();
  const Window& w = z.window();
  bool any = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (long i = (w.lo - n) / 2 - 2; i <= w.hi / 2 + 2; ++i) {
      const NodeIdx low = NodeIdx::integer(i, i + 1);
      const NodeIdx high = NodeIdx::integer(i, i + n - 1);
      const std::vector<std::pair<NodeIdx, std::vector<LineIdx>>> groups = {
          {low, {LineIdx::up(i), LineIdx::down(i)}},
          {high, {LineIdx::up(i - 1), LineIdx::down(i + n - 1)}}};
      for (const auto& [node, lines] : groups) {
        std::optional<Rat> value;
        if (z.contains(node) && z.find(node)) value = z.at(node);
        for (const LineIdx& line : lines) {
          if (!value && z.contains(line) && z.find(line)) value = z.at(line);
        }
        if (!value) continue;
        if (z.contains(node)) progress |= assign(z, node, *value);
        for (const LineIdx& line : lines) {
          if (z.contains(line)) progress |= assign(z, line, *value);
        }
      }
    }
    any |= progress;
  }
  return any;
}

bool cm_block_known_except(const Frieze& z, long i, long j, const NodeIdx& skip) {
  for (long di = -1; di <= 1; ++di) {
    for (long dj = -1; dj <= 1; ++dj) {
      NodeIdx node = NodeIdx::integer(i + di, j + dj);
      if (node != skip && !z.find(node)) return false;
    }
  }
  for (const LineIdx& line : {LineIdx::up(i - 1), LineIdx::up(i), LineIdx::down(j - 1), LineIdx::down(j)}) {
    if (!z.find(line)) return false;
  }
  return true;
}

bool cm_solve_step(Frieze& z, long i, long j, SolveDir dir) {
  const NodeIdx target = dir == SolveDir::Right ? NodeIdx::integer(i + 1, j + 1) : NodeIdx::integer(i - 1, j - 1);
  if (z.find(target) || !cm_block_known_except(z, i, j, target)) return false;
  const std::string center = node_format(NodeIdx::integer(i, j));
  Rat value;
  try {
    if (dir == SolveDir::Right) {
      value = coherence_solve(cm_diamond_at(z, i - 1, j - 1), cm_diamond_at(z, i - 1, j),
                              cm_diamond_at(z, i, j - 1), SolveDir::Right);
    } else {
      value = coherence_solve(cm_diamond_at(z, i - 1, j), cm_diamond_at(z, i, j - 1), cm_diamond_at(z, i, j),
                              SolveDir::Left);
    }
  } catch (const Error& err) {
    throw Error(err.kind(), center, err.what());
  }
  z.set(target, value);
  return true;
}

void check_cm_gates(const CMDiamond& x25_holder, const Rat& h1, const Rat& h2) {
  if (x25_holder.f == 0) throw Error(ErrorKind::ZeroPivot, {}, "central entry vanishes");
  if (h1 * h2 == 0) throw Error(ErrorKind::NonGenericH);
}

}  // namespace

// --- Frieze container -----------------------------------------------------

Frieze::Frieze(FriezeKind kind, int n, Window window) : kind_(kind), n_(n), window_(window) {
  if (n < 4) throw Error(ErrorKind::OrderTooSmall, std::to_string(n));
}

bool Frieze::contains(const NodeIdx& node) const {
  if (!node.is_valid()) return false;
  if (kind_ == FriezeKind::CM && !node.is_integer()) return false;
  const long v = node.row2();
  const long c = node.col2();
  return v >= 0 && v <= 2L * n_ && c >= 2 * window_.lo && c <= 2 * window_.hi;
}

bool Frieze::contains(const LineIdx& line) const {
  // Centers i + j + 1 of the diamonds that use the line.
  long first = line.dir == LineDir::Up ? 2 * line.k + 2 : 2 * line.k - n_ + 2;
  long last = line.dir == LineDir::Up ? 2 * line.k + n_ : 2 * line.k;
  return std::max(first, window_.lo + 1) <= std::min(last, window_.hi - 1);
}

std::vector<NodeIdx> Frieze::window_nodes() const {
  std::vector<NodeIdx> out;
  for (long c = 2 * window_.lo; c <= 2 * window_.hi; ++c) {
    for (long v = 0; v <= 2L * n_; ++v) {
      if (((c - v) % 2 + 2) % 2 != 0) continue;
      NodeIdx node{(c - v) / 2, (c + v) / 2};
      if (contains(node)) out.push_back(node);
    }
  }
  return out;
}

std::vector<LineIdx> Frieze::window_lines() const {
  std::vector<LineIdx> out;
  for (LineDir dir : {LineDir::Up, LineDir::Down}) {
    for (long k = (window_.lo - n_) / 2 - 2; k <= (window_.hi + n_) / 2 + 2; ++k) {
      LineIdx line{dir, k};
      if (contains(line)) out.push_back(line);
    }
  }
  return out;
}

const Rat* Frieze::find(const NodeIdx& node) const {
  auto it = nodes_.find(node);
  return it == nodes_.end() ? nullptr : &it->second;
}

const Rat* Frieze::find(const LineIdx& line) const {
  auto it = lines_.find(line);
  return it == lines_.end() ? nullptr : &it->second;
}

const Rat& Frieze::at(const NodeIdx& node) const {
  if (const Rat* v = find(node)) return *v;
  throw Error(ErrorKind::IndexRange, node_format(node));
}

const Rat& Frieze::at(const LineIdx& line) const {
  if (const Rat* v = find(line)) return *v;
  throw Error(ErrorKind::IndexRange, line_format(line));
}

void Frieze::set(const NodeIdx& node, Rat value) {
  if (!contains(node)) throw Error(ErrorKind::IndexRange, node_format(node));
  nodes_[node] = std::move(value);
}

void Frieze::set(const LineIdx& line, Rat value) {
  if (!contains(line)) throw Error(ErrorKind::IndexRange, line_format(line));
  lines_[line] = std::move(value);
}

DiamondSlots diamond_slots(long i, long j) {
  const long i2 = 2 * i;
  const long j2 = 2 * j;
  return {{i2, j2 + 2},     {i2 + 2, j2},     {i2, j2},         {i2 + 2, j2 + 2}, {i2 + 1, j2},
          {i2, j2 + 1},     {i2 + 1, j2 + 2}, {i2 + 2, j2 + 1}, LineIdx::up(i),   LineIdx::down(j)};
}

bool diamond_in_window(const Frieze& z, long i, long j) {
  const long v = j - i;
  if (v < 1 || v > z.n() - 1) return false;
  const DiamondSlots sl = diamond_slots(i, j);
  if (!z.contains(sl.e) || !z.contains(sl.f) || !z.contains(sl.a) || !z.contains(sl.c)) return false;
  return !is_heronian_kind(z) ||
         (z.contains(sl.p) && z.contains(sl.q) && z.contains(sl.r) && z.contains(sl.s));
}

// --- Paths ----------------------------------------------------------------

std::vector<NodeIdx> CMPath::thickened_nodes() const {
  std::vector<NodeIdx> out = nodes;
  for (const NodeIdx& node : nodes) out.push_back(node.shifted(2, 2));
  return out;
}

void validate_path(const HPath& path, int n) {
  if (n < 4) throw Error(ErrorKind::OrderTooSmall, std::to_string(n));
  if (path.nodes.size() != static_cast<size_t>(2 * n - 3) || path.lines.size() != static_cast<size_t>(n - 2)) {
    throw Error(ErrorKind::ConditionViolated, {}, "path needs 2n-3 nodes and n-2 lines");
  }
  for (size_t k = 0; k < path.nodes.size(); ++k) {
    if (!path.nodes[k].is_valid()) throw Error(ErrorKind::ConditionViolated, std::to_string(k + 1));
  }
  if (path.nodes.front().row2() != 2 || path.nodes.back().row2() != 2L * (n - 1)) {
    throw Error(ErrorKind::ConditionViolated, {}, "path must run from row 1 to row n-1");
  }
  for (size_t k = 0; k + 1 < path.nodes.size(); ++k) check_step(path.nodes[k], path.nodes[k + 1], 1, k + 1);
  for (size_t k = 0; k < path.lines.size(); ++k) {
    const NodeIdx& half = path.nodes[2 * k + 1];
    LineIdx expected = half.i2 % 2 != 0 ? LineIdx::up(half_floor(half.i2)) : LineIdx::down(half_floor(half.j2));
    if (path.lines[k] != expected) {
      throw Error(ErrorKind::ConditionViolated, std::to_string(path.nodes.size() + k + 1),
                  "line does not cross the path at " + node_format(half));
    }
  }
}

void validate_path(const CMPath& path, int n) {
  if (n < 4) throw Error(ErrorKind::OrderTooSmall, std::to_string(n));
  if (path.nodes.size() != static_cast<size_t>(n - 1) || path.lines.size() != static_cast<size_t>(n - 2)) {
    throw Error(ErrorKind::ConditionViolated, {}, "path needs n-1 nodes and n-2 lines");
  }
  for (size_t k = 0; k < path.nodes.size(); ++k) {
    const NodeIdx& node = path.nodes[k];
    if (!node.is_integer() || node.row2() != 2L * static_cast<long>(k + 1)) {
      throw Error(ErrorKind::ConditionViolated, std::to_string(k + 1), "node k must sit on row k");
    }
  }
  for (size_t k = 0; k + 1 < path.nodes.size(); ++k) {
    const NodeIdx& a = path.nodes[k];
    const NodeIdx& b = path.nodes[k + 1];
    check_step(a, b, 2, k + 1);
    LineIdx expected = b.j2 == a.j2 ? LineIdx::up(a.i2 / 2 - 1) : LineIdx::down(a.j2 / 2);
    if (path.lines[k] != expected) {
      throw Error(ErrorKind::ConditionViolated, std::to_string(path.nodes.size() + k + 1),
                  "line does not cross the path step");
    }
  }
}

HPath rim_path(int n, long col) {
  HPath path;
  auto at_row = [&](long v) {
    long h = ((col - v) % 2 == 0) ? col : col + 1;
    return NodeIdx::integer((h - v) / 2, (h + v) / 2);
  };
  for (long v = 1; v <= n - 1; ++v) {
    NodeIdx node = at_row(v);
    path.nodes.push_back(node);
    if (v == n - 1) break;
    NodeIdx next = at_row(v + 1);
    NodeIdx half = next.j2 > node.j2 ? node.shifted(0, 1) : node.shifted(-1, 0);
    path.nodes.push_back(half);
    path.lines.push_back(half.i2 % 2 != 0 ? LineIdx::up(half_floor(half.i2)) : LineIdx::down(half_floor(half.j2)));
  }
  return path;
}

HPath fan_path(int n, long i0) {
  HPath path;
  for (long j = i0 + 1; j <= i0 + n - 1; ++j) {
    path.nodes.push_back(NodeIdx::integer(i0, j));
    if (j == i0 + n - 1) break;
    path.nodes.push_back({2 * i0, 2 * j + 1});
    path.lines.push_back(LineIdx::down(j));
  }
  return path;
}

CMPath cm_rim_path(int n, long col) {
  CMPath path;
  for (long v = 1; v <= n - 1; ++v) {
    long h = ((col - v) % 2 == 0) ? col : col + 1;
    path.nodes.push_back(NodeIdx::integer((h - v) / 2, (h + v) / 2));
  }
  for (size_t k = 0; k + 1 < path.nodes.size(); ++k) {
    const NodeIdx& a = path.nodes[k];
    const NodeIdx& b = path.nodes[k + 1];
    path.lines.push_back(b.j2 == a.j2 ? LineIdx::up(a.i2 / 2 - 1) : LineIdx::down(a.j2 / 2));
  }
  return path;
}

CMPath cm_fan_path(int n, long i0) {
  CMPath path;
  for (long k = 1; k <= n - 1; ++k) path.nodes.push_back(NodeIdx::integer(i0, i0 + k));
  for (long k = 1; k <= n - 2; ++k) path.lines.push_back(LineIdx::down(i0 + k));
  return path;
}

PathValues read_path(const Frieze& z, const HPath& path) {
  PathValues out;
  for (const NodeIdx& node : path.nodes) out.node_values.push_back(z.at(node));
  for (const LineIdx& line : path.lines) out.line_values.push_back(z.at(line));
  return out;
}

PathValues read_path(const Frieze& z, const CMPath& path) {
  PathValues out;
  for (const NodeIdx& node : path.thickened_nodes()) out.node_values.push_back(z.at(node));
  for (const LineIdx& line : path.lines) out.line_values.push_back(z.at(line));
  return out;
}

// --- Constructors from polygons --------------------------------------------

Frieze frieze_from_polygon(const Polygon& poly, Window window) {
  const int n = poly.n();
  Frieze z(FriezeKind::Heronian, n, window);
  const MeasurementSet m = measure_all(poly);
  for (const NodeIdx& node : z.window_nodes()) {
    if (node.is_integer()) {
      z.set(node, m.x(label(node.i2 / 2, n), label(node.j2 / 2, n)));
    } else if (node.i2 % 2 != 0) {
      long i = half_floor(node.i2);
      z.set(node, m.s(label(i, n), label(i + 1, n), label(node.j2 / 2, n)));
    } else {
      long j = half_floor(node.j2);
      z.set(node, m.s(label(node.i2 / 2, n), label(j, n), label(j + 1, n)));
    }
  }
  for (const LineIdx& line : z.window_lines()) z.set(line, m.x(label(line.k, n), label(line.k + 1, n)));
  return z;
}

Frieze cmfrieze_from_measurements(const MeasurementSet& m, Window window) {
  const int n = m.n();
  Frieze z(FriezeKind::CM, n, window);
  for (const NodeIdx& node : z.window_nodes()) z.set(node, m.x(label(node.i2 / 2, n), label(node.j2 / 2, n)));
  for (const LineIdx& line : z.window_lines()) z.set(line, m.x(label(line.k, n), label(line.k + 1, n)));
  return z;
}

Frieze cmfrieze_from_polygon(const Polygon& poly, Window window) {
  if (poly.n() < 4) throw Error(ErrorKind::OrderTooSmall, std::to_string(poly.n()));
  return cmfrieze_from_measurements(measure_all(poly), window);
}

// --- Propagation ----------------------------------------------------------

Frieze propagate_heronian(int n, const HPath& path, const PathValues& values, Window window) {
  validate_path(path, n);
  if (values.node_values.size() != path.nodes.size() || values.line_values.size() != path.lines.size()) {
    throw Error(ErrorKind::MalformedInput, {}, "path values do not match the path");
  }
  Frieze z(FriezeKind::Heronian, n, window);
  preset_borders(z);
  for (size_t k = 0; k < path.nodes.size(); ++k) {
    require_in_window(z, path.nodes[k]);
    assign(z, path.nodes[k], values.node_values[k]);
  }
  for (size_t k = 0; k < path.lines.size(); ++k) {
    if (!z.contains(path.lines[k])) throw Error(ErrorKind::WindowTooNarrow, line_format(path.lines[k]));
    z.set(path.lines[k], values.line_values[k]);
  }
  // Heron equation of each half node against its neighbours on the path.
  for (size_t k = 1; k + 1 < path.nodes.size(); k += 2) {
    const Rat& s = values.node_values[k];
    const Rat& x_prev = values.node_values[k - 1];
    const Rat& x_next = values.node_values[k + 1];
    const Rat& side = values.line_values[k / 2];
    if (s * s != heron_H(x_prev, x_next, side)) {
      throw Error(ErrorKind::HeronViolation, std::to_string(k + 1));
    }
  }
  for (size_t k = 0; k < path.nodes.size(); k += 2) {
    long v = path.nodes[k].row2() / 2;
    if (v >= 2 && v <= n - 2 && values.node_values[k] == 0) {
      throw Error(ErrorKind::ZeroPivot, node_format(path.nodes[k]));
    }
  }
  const auto diamonds = window_diamonds(z);
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [i, j] : diamonds) progress |= heronian_right(z, i, j);
    for (auto it = diamonds.rbegin(); it != diamonds.rend(); ++it) progress |= heronian_left(z, it->first, it->second);
  }
  require_complete(z);
  return z;
}

Frieze propagate_cm(int n, const CMPath& path, const PathValues& values, Window window) {
  validate_path(path, n);
  const std::vector<NodeIdx> thick = path.thickened_nodes();
  if (values.node_values.size() != thick.size() || values.line_values.size() != path.lines.size()) {
    throw Error(ErrorKind::MalformedInput, {}, "path values do not match the thickened path");
  }
  Frieze z(FriezeKind::CM, n, window);
  preset_borders(z);
  for (size_t k = 0; k < thick.size(); ++k) {
    require_in_window(z, thick[k]);
    assign(z, thick[k], values.node_values[k]);
  }
  for (size_t k = 0; k < path.lines.size(); ++k) {
    if (!z.contains(path.lines[k])) throw Error(ErrorKind::WindowTooNarrow, line_format(path.lines[k]));
    assign(z, path.lines[k], values.line_values[k]);
  }
  auto centers = window_centers(z);
  bool progress = true;
  while (progress) {
    progress = cm_line_closure(z);
    for (const auto& [i, j] : centers) progress |= cm_solve_step(z, i, j, SolveDir::Right);
    progress |= cm_line_closure(z);
    for (auto it = centers.rbegin(); it != centers.rend(); ++it) {
      progress |= cm_solve_step(z, it->first, it->second, SolveDir::Left);
    }
  }
  require_complete(z);
  return z;
}

// --- Verification ---------------------------------------------------------

namespace {

void report_common(const Frieze& z, Report& report) {
  const long n2 = 2L * z.n();
  for (const NodeIdx& node : z.window_nodes()) {
    const Rat* v = z.find(node);
    if (!v) {
      report.push_back({"missing", node_format(node)});
      continue;
    }
    long row = node.row2();
    bool border = row == 0 || row == n2 || (is_heronian_kind(z) && (row == 1 || row == n2 - 1));
    if (border && *v != 0) report.push_back({"boundary", node_format(node)});
  }
  for (const LineIdx& line : z.window_lines()) {
    if (!z.find(line)) report.push_back({"missing", line_format(line)});
  }
  const int n = z.n();
  const Window& w = z.window();
  for (long i = (w.lo - n) / 2 - 2; i <= w.hi / 2 + 2; ++i) {
    const std::pair<NodeIdx, std::vector<LineIdx>> groups[] = {
        {NodeIdx::integer(i, i + 1), {LineIdx::up(i), LineIdx::down(i)}},
        {NodeIdx::integer(i, i + n - 1), {LineIdx::up(i - 1), LineIdx::down(i + n - 1)}}};
    for (const auto& [node, lines] : groups) {
      const Rat* v = z.find(node);
      if (!v) continue;
      for (const LineIdx& line : lines) {
        const Rat* l = z.find(line);
        if (l && *l != *v) report.push_back({"line", line_format(line)});
      }
    }
  }
}

}  // namespace

Report verify_heronian(const Frieze& z) {
  Report report;
  report_common(z, report);
  for (const auto& [i, j] : window_diamonds(z)) {
    const DiamondSlots sl = diamond_slots(i, j);
    bool complete = true;
    for (const NodeIdx& node : {sl.a, sl.c, sl.e, sl.f, sl.p, sl.q, sl.r, sl.s}) complete = complete && z.find(node);
    complete = complete && z.find(sl.b) && z.find(sl.d);
    if (complete && !is_heronian(heronian_diamond_at(z, i, j))) {
      report.push_back({"diamond", node_format(sl.e)});
    }
  }
  return report;
}

Report verify_cm(const Frieze& z) {
  Report report;
  report_common(z, report);
  for (const auto& [i, j] : window_diamonds(z)) {
    if (cm_diamond_known(z, i, j) && cm_det(cm_diamond_at(z, i, j)) != 0) {
      report.push_back({"diamond", node_format(NodeIdx::integer(i, j))});
    }
  }
  return report;
}

Rat coherence_defect(const Frieze& z, long i, long j) {
  return cm_partial(PartialDir::Left, cm_diamond_at(z, i - 1, j - 1)) *
             cm_partial(PartialDir::Right, cm_diamond_at(z, i, j)) -
         cm_partial(PartialDir::Up, cm_diamond_at(z, i - 1, j)) *
             cm_partial(PartialDir::Down, cm_diamond_at(z, i, j - 1));
}

std::vector<NodeIdx> verify_coherence(const Frieze& z) {
  std::vector<NodeIdx> out;
  for (const auto& [i, j] : window_centers(z)) {
    if (!cm_diamond_known(z, i - 1, j - 1) || !cm_diamond_known(z, i, j) || !cm_diamond_known(z, i - 1, j) ||
        !cm_diamond_known(z, i, j - 1)) {
      continue;
    }
    if (coherence_defect(z, i, j) != 0) out.push_back(NodeIdx::integer(i, j));
  }
  return out;
}

bool check_glide(const Frieze& z) {
  const long n2 = 2L * z.n();
  size_t pairs = 0;
  bool ok = true;
  for (const auto& [node, value] : z.nodes()) {
    const Rat* image = z.find(NodeIdx{node.j2, node.i2 + n2});
    if (!image) continue;
    ++pairs;
    ok = ok && *image == value;
  }
  if (pairs == 0) throw Error(ErrorKind::WindowTooNarrow);
  for (const auto& [line, value] : z.lines()) {
    if (line.dir != LineDir::Up) continue;
    const Rat* image = z.find(LineIdx::down(line.k + z.n()));
    ok = ok && (!image || *image == value);
  }
  return ok;
}

bool check_period(const Frieze& z) {
  const long n2 = 2L * z.n();
  size_t pairs = 0;
  bool ok = true;
  for (const auto& [node, value] : z.nodes()) {
    const Rat* image = z.find(node.shifted(n2, n2));
    if (!image) continue;
    ++pairs;
    ok = ok && *image == value;
  }
  if (pairs == 0) throw Error(ErrorKind::WindowTooNarrow);
  for (const auto& [line, value] : z.lines()) {
    const Rat* image = z.find(LineIdx{line.dir, line.k + z.n()});
    ok = ok && (!image || *image == value);
  }
  return ok;
}

// --- Coherence ------------------------------------------------------------

Rat coherence_solve(const CMDiamond& first, const CMDiamond& second, const CMDiamond& third, SolveDir dir) {
  std::function<Rat(const Rat&)> defect;
  if (dir == SolveDir::Right) {
    const CMDiamond& x1 = first;
    const CMDiamond& x2 = second;
    const CMDiamond& x3 = third;
    if (x1.b != x2.b || x1.f != x2.c || x1.f != x3.a || x1.c != x3.e || x1.d != x3.d || x2.e != x1.a) {
      throw Error(ErrorKind::IncoherentInput, {}, "diamonds do not share their common entries");
    }
    check_cm_gates(x1, heron_H(x1.c, x1.f, x1.d), heron_H(x1.b, x1.a, x1.f));
    const Rat left = cm_partial(PartialDir::Left, x1);
    const Rat right = cm_partial(PartialDir::Up, x2) * cm_partial(PartialDir::Down, x3);
    defect = [=](const Rat& x36) {
      CMDiamond x4{x2.f, x3.b, x3.f, x2.d, x1.f, x36};
      return Rat(left * cm_partial(PartialDir::Right, x4) - right);
    };
  } else {
    const CMDiamond& x2 = first;
    const CMDiamond& x3 = second;
    const CMDiamond& x4 = third;
    if (x2.c != x3.a || x2.c != x4.e || x2.f != x4.a || x3.b != x4.b || x3.f != x4.c || x2.d != x4.d) {
      throw Error(ErrorKind::IncoherentInput, {}, "diamonds do not share their common entries");
    }
    CMDiamond center{0, 0, 0, 0, 0, x4.e};
    check_cm_gates(center, heron_H(x4.e, x4.a, x4.d), heron_H(x4.b, x4.e, x4.c));
    const Rat right_factor = cm_partial(PartialDir::Right, x4);
    const Rat right = cm_partial(PartialDir::Up, x2) * cm_partial(PartialDir::Down, x3);
    defect = [=](const Rat& x14) {
      CMDiamond x1{x2.e, x2.b, x3.e, x3.d, x14, x4.e};
      return Rat(cm_partial(PartialDir::Left, x1) * right_factor - right);
    };
  }
  const Rat c0 = defect(0);
  const Rat c1 = defect(1) - c0;
  if (c1 == 0) throw Error(ErrorKind::Degenerate, {}, "coherence equation has no linear term");
  return -c0 / c1;
}

// --- Heronian <-> Cayley-Menger --------------------------------------------

Frieze restrict_to_cm(const Frieze& z) {
  if (!is_heronian_kind(z)) throw Error(ErrorKind::MalformedInput, {}, "expected a Heronian frieze");
  Report report = verify_heronian(z);
  if (!report.empty()) throw Error(ErrorKind::HeronViolation, report.front().position, report.front().what);
  Frieze out(FriezeKind::CM, z.n(), z.window());
  for (const auto& [node, value] : z.nodes()) {
    if (!node.is_integer()) continue;
    long v = node.row2() / 2;
    if (v >= 2 && v <= z.n() - 2 && value == 0) throw Error(ErrorKind::ZeroPivot, node_format(node));
    out.set(node, value);
  }
  for (const auto& [line, value] : z.lines()) out.set(line, value);
  return out;
}

Frieze extend_to_heronian(const Frieze& z, const Seed& seed) {
  if (is_heronian_kind(z)) throw Error(ErrorKind::MalformedInput, {}, "expected a Cayley-Menger frieze");
  const int n = z.n();
  if (Report r = verify_cm(z); !r.empty()) throw Error(ErrorKind::IncoherentInput, r.front().position, r.front().what);
  if (auto bad = verify_coherence(z); !bad.empty()) throw Error(ErrorKind::IncoherentInput, node_format(bad.front()));

  const auto diamonds = window_diamonds(z);
  for (const auto& [i, j] : diamonds) {
    long v = j - i;
    if (v < 2 || v > n - 2) continue;
    const CMDiamond x = cm_diamond_at(z, i, j);
    const std::string pos = node_format(NodeIdx::integer(i, j));
    if (x.e == 0) throw Error(ErrorKind::ZeroPivot, pos);
    if (heron_H(x.b, x.c, x.e) * heron_H(x.a, x.d, x.e) * heron_H(x.a, x.f, x.b) * heron_H(x.c, x.f, x.d) == 0) {
      throw Error(ErrorKind::NonGenericH, pos);
    }
  }

  Frieze out(FriezeKind::Heronian, n, z.window());
  for (const auto& [node, value] : z.nodes()) out.set(node, value);
  for (const auto& [line, value] : z.lines()) out.set(line, value);
  preset_borders(out);

  // Heron value of the triangle carried by a half node.
  auto heron_at = [&](const NodeIdx& half) {
    if (half.i2 % 2 != 0) {
      long i = half_floor(half.i2);
      long j = half.j2 / 2;
      return heron_H(z.at(LineIdx::up(i)), z.at(NodeIdx::integer(i, j)), z.at(NodeIdx::integer(i + 1, j)));
    }
    long i = half.i2 / 2;
    long j = half_floor(half.j2);
    return heron_H(z.at(NodeIdx::integer(i, j)), z.at(NodeIdx::integer(i, j + 1)), z.at(LineIdx::down(j)));
  };

  if (seed.empty()) {
    auto first = std::find_if(diamonds.begin(), diamonds.end(), [&](const auto& d) {
      return d.second - d.first >= 2 && d.second - d.first <= n - 2;
    });
    if (first == diamonds.end()) throw Error(ErrorKind::WindowTooNarrow);
    const NodeIdx p = diamond_slots(first->first, first->second).p;
    auto root = rat_sqrt(heron_at(p));
    if (!root) throw Error(ErrorKind::NotPerfectSquare, node_format(p));
    out.set(p, *root);
  }
  for (const auto& [node, value] : seed) {
    if (node.is_integer() || !out.contains(node)) throw Error(ErrorKind::IndexRange, node_format(node));
    if (value * value != heron_at(node)) throw Error(ErrorKind::HeronViolation, node_format(node));
    try {
      assign(out, node, value);
    } catch (const Error&) {
      throw Error(ErrorKind::IncoherentInput, node_format(node));
    }
  }

  auto lift = [&](long i, long j) -> bool {
    const DiamondSlots sl = diamond_slots(i, j);
    const long v = j - i;
    const Rat* p = out.find(sl.p);
    const Rat* q = out.find(sl.q);
    const Rat* r = out.find(sl.r);
    const Rat* s = out.find(sl.s);
    if (p && q && r && s) return false;
    std::optional<std::array<Rat, 4>> pqrs;
    if (v == 1) {
      const Rat* known = q ? q : r;
      if (!known) return false;
      pqrs = std::array<Rat, 4>{0, *known, *known, 0};
    } else if (v == n - 1) {
      const Rat* known = p ? p : s;
      if (!known) return false;
      pqrs = std::array<Rat, 4>{*known, 0, 0, *known};
    } else {
      const CMDiamond x = cm_diamond_at(out, i, j);
      const Rat right = cm_partial(PartialDir::Right, x);
      const Rat left = cm_partial(PartialDir::Left, x);
      const Rat up = cm_partial(PartialDir::Up, x);
      const Rat down = cm_partial(PartialDir::Down, x);
      const Rat up_slant = cm_partial(PartialDir::UpSlant, x);
      const Rat down_slant = cm_partial(PartialDir::DownSlant, x);
      // -2pq = right, -2rs = left, 2ps = up, 2rq = down, 2qs = up-slant, 2pr = down-slant.
      if (p) {
        pqrs = std::array<Rat, 4>{*p, -right / (2 * *p), down_slant / (2 * *p), up / (2 * *p)};
      } else if (q) {
        pqrs = std::array<Rat, 4>{-right / (2 * *q), *q, down / (2 * *q), up_slant / (2 * *q)};
      } else if (r) {
        pqrs = std::array<Rat, 4>{down_slant / (2 * *r), down / (2 * *r), *r, -left / (2 * *r)};
      } else if (s) {
        pqrs = std::array<Rat, 4>{up / (2 * *s), up_slant / (2 * *s), -left / (2 * *s), *s};
      } else {
        return false;
      }
    }
    bool changed = false;
    const NodeIdx slots[] = {sl.p, sl.q, sl.r, sl.s};
    for (int k = 0; k < 4; ++k) {
      try {
        changed |= assign(out, slots[k], (*pqrs)[k]);
      } catch (const Error&) {
        throw Error(ErrorKind::IncoherentInput, node_format(slots[k]), "signed areas disagree");
      }
    }
    return changed;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [i, j] : diamonds) progress |= lift(i, j);
    for (auto it = diamonds.rbegin(); it != diamonds.rend(); ++it) progress |= lift(it->first, it->second);
  }
  require_complete(out);
  if (Report r = verify_heronian(out); !r.empty()) {
    throw Error(ErrorKind::IncoherentInput, r.front().position, r.front().what);
  }
  return out;
}

Polygon polygon_from_frieze(const Frieze& z) {
  if (!is_heronian_kind(z)) throw Error(ErrorKind::MalformedInput, {}, "expected a Heronian frieze");
  const int n = z.n();
  const Window& w = z.window();
  // Straight path (i0, i0 + 1) ... (i0, i0 + n - 1) spans columns
  // 2 i0 + 1 ... 2 i0 + n - 1.
  long i0 = w.lo >= 0 ? w.lo / 2 : -((-w.lo + 1) / 2);
  while (2 * i0 + 1 < w.lo) ++i0;
  if (2 * i0 + n - 1 > w.hi) throw Error(ErrorKind::WindowTooNarrow);
  for (long v = 2; v <= n - 2; ++v) {
    if (z.at(NodeIdx::integer(i0, i0 + v)) == 0) throw Error(ErrorKind::ZeroPivot, node_format(NodeIdx::integer(i0, i0 + v)));
  }
  // Vertex t of the fan polygon is frieze index i0 + t - 1.
  MeasurementSet m(n);
  try {
    for (int t = 2; t <= n; ++t) m.set_x(1, t, z.at(NodeIdx::integer(i0, i0 + t - 1)));
    for (int t = 2; t < n; ++t) {
      m.set_x(t, t + 1, z.at(LineIdx::down(i0 + t - 1)));
      m.set_s(1, t, t + 1, z.at(NodeIdx{2 * i0, 2 * (i0 + t - 1) + 1}));
    }
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::IndexRange) throw Error(ErrorKind::WindowTooNarrow, err.position());
    throw;
  }
  Polygon fan_poly = polygon_from_measurements(TriCycle::fan(n), m);
  Polygon poly{std::vector<Point>(n)};
  for (int t = 1; t <= n; ++t) poly.vertices[label(i0 + t - 1, n) - 1] = fan_poly.at(t);
  return poly;
}

}  // namespace hf
