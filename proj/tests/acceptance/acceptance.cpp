// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any
// FAIL. All checks are exact; only the runtime budgets are numeric.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "heronfrieze/diamonds.hpp"
#include "heronfrieze/frieze.hpp"
#include "heronfrieze/laurent.hpp"

using namespace hf;

namespace {

constexpr double kBudget1 = 1.0;
constexpr double kBudget2 = 1.0;
constexpr double kBudget3 = 60.0;
constexpr double kBudget4 = 120.0;
constexpr double kBudget5 = 300.0;
constexpr int kCorpusSize = 200;
constexpr int kPolygonsPerTriangulation = 20;
constexpr int kIdentitySamples = 1000;
constexpr int kCoherenceWindows = 200;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure message; later ones only count.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ", " << checks << " checks";
    if (failures) os << ", " << failures << " failed, first: " << first;
    return {failures == 0, os.str()};
  }
};

std::vector<Polygon> corpus() {
  std::mt19937_64 rng(20240601);
  std::vector<Polygon> out;
  for (int k = 0; k < kCorpusSize; ++k) out.push_back(hftest::random_polygon(rng, 4 + k % 9, 100));
  return out;
}

CMDiamond cm_at(const Frieze& z, long i, long j) {
  DiamondSlots s = diamond_slots(i, j);
  return {z.at(s.a), z.at(s.b), z.at(s.c), z.at(s.d), z.at(s.e), z.at(s.f)};
}

Outcome criterion1() {
  const int n = 6;
  const Window w{-6, 12};
  PathValues pv;
  for (long v : {1, 2, 2, -2, 5, 2, 2, 2, 1}) pv.node_values.push_back(v);
  pv.line_values.assign(4, 1);
  Frieze z = propagate_heronian(n, rim_path(n, w.lo), pv, w);
  Tally t;
  for (const auto& [node, v] : z.nodes()) {
    t.expect(is_power_of(v.get_den(), 5), "denominator at " + node_format(node));
  }
  for (const auto& [line, v] : z.lines()) t.expect(is_power_of(v.get_den(), 5), "denominator at " + line_format(line));
  t.expect(verify_heronian(z).empty(), "verify_heronian");
  t.expect(check_glide(z), "glide");
  t.expect(z.window_nodes().size() == z.nodes().size(), "window not filled");
  return t.outcome(std::to_string(w.hi - w.lo + 1) + " columns, " + std::to_string(z.nodes().size()) + " nodes");
}

Outcome criterion2() {
  const Window w{7, 19};
  Frieze z = cmfrieze_from_measurements(hftest::eisenstein_hexagon(), w);
  Tally t;
  // The leftmost displayed column zig-zags between columns lo and lo + 1.
  const std::vector<long> want{0, 1, 3, 4, 3, 1, 0};
  std::ostringstream col;
  for (long v = 0; v <= 6; ++v) {
    const long c = (w.lo - v) % 2 == 0 ? w.lo : w.lo + 1;
    const Rat& value = z.at(NodeIdx::integer((c - v) / 2, (c + v) / 2));
    col << (v ? "," : "") << value;
    t.expect(value == want[v], "row " + std::to_string(v));
  }
  for (const auto& [line, v] : z.lines()) t.expect(v == 1, "line " + line_format(line));
  t.expect(verify_coherence(z).empty(), "coherence");
  t.expect(verify_cm(z).empty(), "verify_cm");
  return t.outcome("leftmost column (" + col.str() + ")");
}

Outcome criterion3(const std::vector<Polygon>& polys) {
  Tally t;
  for (size_t k = 0; k < polys.size(); ++k) {
    const int n = polys[k].n();
    const Window w{0, 3L * n};
    const std::string tag = "polygon " + std::to_string(k);
    Frieze h = frieze_from_polygon(polys[k], w);
    t.expect(verify_heronian(h).empty(), tag + " verify_heronian");
    t.expect(check_glide(h), tag + " glide");
    t.expect(check_period(h), tag + " period");
    Frieze c = cmfrieze_from_polygon(polys[k], w);
    t.expect(verify_coherence(c).empty(), tag + " coherence");
    t.expect(verify_cm(c).empty(), tag + " verify_cm");
  }
  return t.outcome(std::to_string(polys.size()) + " polygons");
}

Outcome criterion4(const std::vector<Polygon>& polys) {
  Tally t;
  int used = 0;
  for (size_t k = 0; k < polys.size(); ++k) {
    if (!hftest::is_generic(measure_all(polys[k]))) continue;
    ++used;
    const int n = polys[k].n();
    const Window w{0, 3L * n};
    const std::string tag = "polygon " + std::to_string(k);
    Frieze h = frieze_from_polygon(polys[k], w);
    Frieze c = cmfrieze_from_polygon(polys[k], w);
    try {
      for (const HPath& path : {rim_path(n, w.lo), fan_path(n, 1)}) {
        t.expect(propagate_heronian(n, path, read_path(h, path), w) == h, tag + " heronian path");
      }
      for (const CMPath& path : {cm_rim_path(n, w.lo), cm_fan_path(n, 1)}) {
        t.expect(propagate_cm(n, path, read_path(c, path), w) == c, tag + " cm path");
      }
      Frieze lifted = extend_to_heronian(restrict_to_cm(h));
      Frieze flipped = h;
      for (const auto& [node, v] : h.nodes()) {
        if (!node.is_integer()) flipped.set(node, -v);
      }
      t.expect(lifted == h || lifted == flipped, tag + " extend(restrict)");
    } catch (const Error& e) {
      t.expect(false, tag + " " + e.what());
    }
  }
  return t.outcome(std::to_string(used) + " generic polygons");
}

Outcome criterion5() {
  std::mt19937_64 rng(5150);
  Tally t;
  long targets = 0;
  for (int n = 4; n <= 7; ++n) {
    std::vector<Polygon> polys;
    std::vector<MeasurementSet> full;
    while (static_cast<int>(polys.size()) < kPolygonsPerTriangulation) {
      Polygon p = hftest::random_polygon(rng, n, 100);
      MeasurementSet m = measure_all(p);
      if (!hftest::is_generic(m)) continue;
      polys.push_back(p);
      full.push_back(m);
    }
    std::vector<MeasSym> syms;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        syms.push_back(MeasSym::x(i, j));
        for (int k = j + 1; k <= n; ++k) syms.push_back(MeasSym::s(i, j, k));
      }
    }
    for (const TriCycle& g : hftest::all_triangulations(n)) {
      std::vector<MeasurementSet> local;
      for (const Polygon& p : polys) local.push_back(measure_triangulated(p, g));
      for (const MeasSym& sym : syms) {
        ++targets;
        const std::string tag = "n=" + std::to_string(n) + " " + sym_format(sym);
        LaurentPoly poly;
        try {
          poly = expand(g, sym);
        } catch (const Error& e) {
          t.expect(false, tag + " " + e.what());
          continue;
        }
        for (size_t k = 0; k < polys.size(); ++k) {
          const Rat want = sym.kind == MeasSym::Kind::X ? full[k].x(sym.v[0], sym.v[1])
                                                        : full[k].s(sym.v[0], sym.v[1], sym.v[2]);
          t.expect(evaluate(poly, local[k]) == want, tag + " value");
        }
        const std::vector<Edge> crossing = crossing_diagonals(g, sym);
        for (const auto& [den, exp] : denominator_monomial(poly)) {
          bool allowed = den.kind == MeasSym::Kind::X &&
                         std::find(crossing.begin(), crossing.end(), Edge{den.v[0], den.v[1]}) != crossing.end();
          t.expect(allowed, tag + " denominator " + sym_format(den));
        }
      }
    }
  }
  for (int n = 4; n <= 8; ++n) {
    TriCycle fan = TriCycle::fan(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        t.expect(fan_expand(n, MeasSym::x(i, j)) == expand(fan, MeasSym::x(i, j)), "fan x");
        for (int k = j + 1; k <= n; ++k) {
          t.expect(fan_expand(n, MeasSym::s(i, j, k)) == expand(fan, MeasSym::s(i, j, k)), "fan s");
        }
      }
    }
  }
  return t.outcome(std::to_string(targets) + " triangulation targets");
}

Outcome criterion6() {
  std::mt19937_64 rng(606);
  Tally t;
  for (int k = 0; k < kIdentitySamples; ++k) {
    auto r = [&] { return hftest::random_rat(rng, 100); };
    CMDiamond x{r(), r(), r(), r(), r(), r()};
    Rat lhs = cm_partial(PartialDir::Right, x);
    lhs *= lhs;
    t.expect(lhs == -8 * x.e * cm_det(x) + 4 * heron_H(x.b, x.c, x.e) * heron_H(x.a, x.d, x.e), "M and partial M");
  }
  for (int k = 0; k < kIdentitySamples; ++k) {
    Polygon q = hftest::random_polygon(rng, 4, 100);
    MeasurementSet m = measure_all(q);
    // (a, b, c, d, e, f) = (x14, x12, x23, x34, x13, x24).
    CMDiamond x{m.x(1, 4), m.x(1, 2), m.x(2, 3), m.x(3, 4), m.x(1, 3), m.x(2, 4)};
    auto S = [&](int i, int j, int l) { return m.s(i, j, l); };
    auto sq = [&](PartialDir d) {
      Rat v = cm_partial(d, x);
      return Rat(v * v);
    };
    const Rat h123 = heron_H(x.b, x.c, x.e);
    const Rat h134 = heron_H(x.a, x.d, x.e);
    const Rat h124 = heron_H(x.a, x.b, x.f);
    const Rat h234 = heron_H(x.c, x.d, x.f);
    t.expect(cm_det(x) == 0, "M vanishes");
    t.expect(sq(PartialDir::Right) == 4 * h123 * h134, "discriminant right");
    t.expect(sq(PartialDir::Left) == 4 * h124 * h234, "discriminant left");
    t.expect(sq(PartialDir::Up) == 4 * h123 * h234, "discriminant up");
    t.expect(sq(PartialDir::Down) == 4 * h124 * h134, "discriminant down");
    t.expect(cm_partial(PartialDir::Left, x) == -2 * S(1, 2, 4) * S(2, 3, 4), "Dziobek left");
    t.expect(cm_partial(PartialDir::Right, x) == -2 * S(1, 2, 3) * S(1, 3, 4), "Dziobek right");
    t.expect(cm_partial(PartialDir::UpSlant, x) == 2 * S(1, 3, 4) * S(2, 3, 4), "Dziobek up slant");
    t.expect(cm_partial(PartialDir::DownSlant, x) == 2 * S(1, 2, 3) * S(1, 2, 4), "Dziobek down slant");
    t.expect(cm_partial(PartialDir::Up, x) == 2 * S(1, 2, 3) * S(2, 3, 4), "Dziobek up");
    t.expect(cm_partial(PartialDir::Down, x) == 2 * S(1, 2, 4) * S(1, 3, 4), "Dziobek down");
  }
  int windows = 0;
  while (windows < kCoherenceWindows) {
    const int n = 5 + windows % 5;
    Polygon p = hftest::random_polygon(rng, n, 100);
    if (!hftest::is_generic(measure_all(p))) continue;
    const Window w{0, 3L * n};
    Frieze h = frieze_from_polygon(p, w);
    Frieze c = restrict_to_cm(h);
    std::uniform_int_distribution<long> pick_row(2, n - 2);
    const long v = pick_row(rng);
    // Centers (i, i + v) whose four diamonds lie inside the window.
    std::uniform_int_distribution<long> pick_i(1, (w.hi - v - 1) / 2 - 1);
    const long i = pick_i(rng);
    const long j = i + v;
    if (!diamond_in_window(c, i - 1, j - 1) || !diamond_in_window(c, i, j) || !diamond_in_window(c, i - 1, j) ||
        !diamond_in_window(c, i, j - 1)) {
      continue;
    }
    ++windows;
    const Rat left = cm_partial(PartialDir::Left, cm_at(c, i - 1, j - 1)) * cm_partial(PartialDir::Right, cm_at(c, i, j));
    const Rat right = cm_partial(PartialDir::Up, cm_at(c, i - 1, j)) * cm_partial(PartialDir::Down, cm_at(c, i, j - 1));
    const Rat product = 4 * h.at(NodeIdx{2 * i - 1, 2 * j}) * h.at(NodeIdx{2 * i, 2 * j - 1}) *
                        h.at(NodeIdx{2 * i + 1, 2 * j}) * h.at(NodeIdx{2 * i, 2 * j + 1});
    t.expect(left == product && right == product, "coherence product at " + node_format(NodeIdx::integer(i, j)));
  }
  return t.outcome(std::to_string(kIdentitySamples) + " tuples, " + std::to_string(kIdentitySamples) +
                   " quadrilaterals, " + std::to_string(windows) + " windows");
}

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::MalformedInput;
}

Outcome criterion7() {
  std::mt19937_64 rng(707);
  Tally t;
  {
    Frieze c = cmfrieze_from_polygon(hftest::random_polygon(rng, 6, 20), {0, 14});
    Frieze bad = hftest::noncoherent_frieze(c, 3, 6);
    t.expect(verify_cm(bad).empty(), "non-coherent frieze fails a diamond");
    auto centers = verify_coherence(bad);
    t.expect(centers.size() == 1 && centers[0] == NodeIdx::integer(3, 6), "non-coherent frieze violation count");
  }
  for (int k = 0; k < 50; ++k) {
    const int n = 4 + k % 6;
    Frieze h = frieze_from_polygon(hftest::random_polygon(rng, n, 100), {0, 3L * n});
    Frieze perturbed = h;
    std::uniform_int_distribution<size_t> pick(0, h.nodes().size() - 1);
    auto [node, v] = *std::next(h.nodes().begin(), static_cast<long>(pick(rng)));
    perturbed.set(node, v + Rat(1, 7));
    t.expect(!verify_heronian(perturbed).empty(), "perturbed node " + node_format(node));
    Frieze line_perturbed = h;
    auto [line, lv] = *h.lines().begin();
    line_perturbed.set(line, lv + 1);
    t.expect(!verify_heronian(line_perturbed).empty(), "perturbed line " + line_format(line));
  }
  {
    // A1 = A3 puts a zero on the fan path.
    Polygon pinched{{{0, 0}, {3, 1}, {0, 0}, {2, -5}, {7, 2}, {-1, 4}}};
    HPath fan = fan_path(6, 1);
    PathValues pv = read_path(frieze_from_polygon(pinched, {2, 16}), fan);
    t.expect(error_of([&] { propagate_heronian(6, fan, pv, {2, 16}); }) == ErrorKind::ZeroPivot, "zero path value");
  }
  {
    Frieze e = cmfrieze_from_measurements(hftest::eisenstein_hexagon(), {7, 19});
    CMPath path = cm_rim_path(6, 7);
    t.expect(error_of([&] { propagate_cm(6, path, read_path(e, path), {7, 19}); }) == ErrorKind::NonGenericH,
             "hexagon under cm-propagate");
  }
  t.expect(error_of([] {
             coherence_solve({3, 1, 3, 1, 4, 0}, {1, 1, 0, 1, 3, 3}, {0, 1, 1, 1, 3, 3}, SolveDir::Right);
           }) == ErrorKind::ZeroPivot,
           "zero coherence center");
  return t.outcome("negative controls");
}

}  // namespace

int main() {
  const std::vector<Polygon> polys = corpus();
  struct Entry {
    int id;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries = {
      {1, kBudget1, criterion1},
      {2, kBudget2, criterion2},
      {3, kBudget3, [&] { return criterion3(polys); }},
      {4, kBudget4, [&] { return criterion4(polys); }},
      {5, kBudget5, criterion5},
      {6, 0, criterion6},
      {7, 0, criterion7},
  };
  bool all = true;
  for (const Entry& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = e.run();
    } catch (const std::exception& ex) {
      out = {false, std::string("unexpected error: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream timing;
    timing.precision(3);
    timing << secs << " s";
    if (e.budget > 0) {
      timing << " of " << e.budget << " s";
      if (secs >= e.budget) out.ok = false;
    }
    all = all && out.ok;
    std::cout << "Criterion " << e.id << ": " << (out.ok ? "PASS" : "FAIL") << " (" << out.detail << "; "
              << timing.str() << ")" << std::endl;
  }
  return all ? 0 : 1;
}
