#include "heronfrieze/triangulation.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "heronfrieze/errors.hpp"

namespace hf {

namespace {

std::string edge_str(Edge e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

bool adjacent_in_cycle(int i, int j, int n) {
  auto [a, b] = make_edge(i, j);
  return b - a == 1 || (a == 1 && b == n);
}

Relabeled induced(const TriCycle& g, std::set<int> vertices) {
  std::vector<int> order(vertices.begin(), vertices.end());
  const int m = static_cast<int>(order.size());
  std::vector<Edge> diags;
  for (int u = 0; u < m; ++u) {
    for (int w = u + 2; w < m; ++w) {
      if (u == 0 && w == m - 1) continue;
      if (g.has_edge(order[u], order[w])) diags.push_back({u + 1, w + 1});
    }
  }
  return Relabeled{TriCycle(m, diags), order};
}

void require_vertex(int v, int n) {
  if (v < 1 || v > n) throw Error(ErrorKind::InvalidVertex, std::to_string(v));
}

}  // namespace

Edge make_edge(int i, int j) { return i < j ? Edge{i, j} : Edge{j, i}; }

TriCycle::TriCycle(int n, const std::vector<Edge>& diagonals) : n_(n) {
  if (n < 3) throw Error(ErrorKind::InvalidVertex, std::to_string(n), "a cycle needs 3 vertices");
  for (Edge d : diagonals) {
    require_vertex(d.first, n);
    require_vertex(d.second, n);
    d = make_edge(d.first, d.second);
    if (d.first == d.second || adjacent_in_cycle(d.first, d.second, n)) {
      throw Error(ErrorKind::NotADiagonal, edge_str(d));
    }
    diagonals_.insert(d);
  }
  if (static_cast<int>(diagonals_.size()) != n - 3) {
    throw Error(ErrorKind::ConditionViolated, {}, "a triangulation has n - 3 diagonals");
  }
  for (auto it = diagonals_.begin(); it != diagonals_.end(); ++it) {
    for (auto jt = std::next(it); jt != diagonals_.end(); ++jt) {
      if (crosses(*it, *jt, n)) {
        throw Error(ErrorKind::ConditionViolated, edge_str(*it), "crosses " + edge_str(*jt));
      }
    }
  }
}

TriCycle TriCycle::fan(int n, int apex) {
  std::vector<Edge> diags;
  for (int k = 0; k < n - 3; ++k) {
    int v = (apex - 1 + 2 + k) % n + 1;
    diags.push_back(make_edge(apex, v));
  }
  return TriCycle(n, diags);
}

bool TriCycle::is_side(int i, int j) const {
  return i != j && adjacent_in_cycle(i, j, n_);
}

bool TriCycle::is_diagonal(int i, int j) const {
  return diagonals_.count(make_edge(i, j)) > 0;
}

std::vector<Triple> TriCycle::triangles() const {
  std::vector<Triple> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (!has_edge(i, j)) continue;
      for (int k = j + 1; k <= n_; ++k) {
        if (has_edge(i, k) && has_edge(j, k)) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

bool TriCycle::has_triangle(int i, int j, int k) const {
  return i != j && j != k && i != k && has_edge(i, j) && has_edge(j, k) && has_edge(i, k);
}

int Relabeled::new_label(int old) const {
  auto it = std::find(to_old.begin(), to_old.end(), old);
  return it == to_old.end() ? 0 : static_cast<int>(it - to_old.begin()) + 1;
}

bool crosses(Edge d1, Edge d2, int n) {
  for (Edge d : {d1, d2}) {
    if (d.first < 1 || d.second < 1 || d.first > n || d.second > n || d.first == d.second ||
        adjacent_in_cycle(d.first, d.second, n)) {
      throw Error(ErrorKind::NotADiagonal, edge_str(d));
    }
  }
  auto [i, j] = make_edge(d1.first, d1.second);
  auto [k, l] = make_edge(d2.first, d2.second);
  return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

Relabeled trim_diag(const TriCycle& g, Edge d) {
  const int n = g.n();
  if (d.first < 1 || d.second < 1 || d.first > n || d.second > n || d.first == d.second ||
      g.is_side(d.first, d.second)) {
    throw Error(ErrorKind::NotADiagonal, edge_str(d));
  }
  d = make_edge(d.first, d.second);
  if (g.is_diagonal(d.first, d.second)) throw Error(ErrorKind::InTriangulation, edge_str(d));
  std::set<int> vertices{d.first, d.second};
  for (Edge e : g.diagonals()) {
    if (crosses(d, e, n)) {
      vertices.insert(e.first);
      vertices.insert(e.second);
    }
  }
  return induced(g, vertices);
}

Relabeled trim_tri(const TriCycle& g, Triple t) {
  const int n = g.n();
  for (int v : t) {
    if (v < 1 || v > n) throw Error(ErrorKind::InvalidTriple, std::to_string(v));
  }
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
    throw Error(ErrorKind::InvalidTriple, {}, "vertices must be distinct");
  }
  std::set<int> vertices(t.begin(), t.end());
  const Edge sides[] = {make_edge(t[0], t[1]), make_edge(t[0], t[2]), make_edge(t[1], t[2])};
  for (Edge e : g.diagonals()) {
    for (Edge s : sides) {
      if (!g.is_side(s.first, s.second) && crosses(s, e, n)) {
        vertices.insert(e.first);
        vertices.insert(e.second);
      }
    }
  }
  return induced(g, vertices);
}

std::pair<TriCycle, Edge> flip(const TriCycle& g, Edge e) {
  e = make_edge(e.first, e.second);
  if (!g.is_diagonal(e.first, e.second)) throw Error(ErrorKind::NotInTriangulation, edge_str(e));
  std::vector<int> apexes;
  for (int k = 1; k <= g.n(); ++k) {
    if (k != e.first && k != e.second && g.has_edge(e.first, k) && g.has_edge(e.second, k)) {
      apexes.push_back(k);
    }
  }
  Edge f = make_edge(apexes.at(0), apexes.at(1));
  std::vector<Edge> diags;
  for (Edge d : g.diagonals()) {
    if (d != e) diags.push_back(d);
  }
  diags.push_back(f);
  return {TriCycle(g.n(), diags), f};
}

bool is_thin(const TriCycle& g) {
  for (const Triple& t : g.triangles()) {
    if (g.is_diagonal(t[0], t[1]) && g.is_diagonal(t[1], t[2]) && g.is_diagonal(t[0], t[2])) {
      return false;
    }
  }
  return true;
}

Edge trimmed_diagonal(const TriCycle& g) {
  if (!is_thin(g)) throw Error(ErrorKind::NotThin);
  std::vector<int> free;
  for (int v = 1; v <= g.n(); ++v) {
    bool touched = false;
    for (Edge d : g.diagonals()) touched = touched || d.first == v || d.second == v;
    if (!touched) free.push_back(v);
  }
  // A triangle has no diagonals, so every vertex is free; its sides are not
  // diagonals and no trimmed diagonal exists.
  if (free.size() != 2) throw Error(ErrorKind::NotThin, {}, "no unique trimmed diagonal");
  return {free[0], free[1]};
}

Relabeled normalize_thin(const TriCycle& g) {
  const int n = g.n();
  const int pivot = trimmed_diagonal(g).second;
  std::vector<int> to_old(n);
  for (int old = 1; old <= n; ++old) {
    int fresh = ((old - pivot) % n + n) % n;
    if (fresh == 0) fresh = n;
    to_old[fresh - 1] = old;
  }
  std::vector<Edge> diags;
  Relabeled out{TriCycle(), to_old};
  for (Edge d : g.diagonals()) diags.push_back(make_edge(out.new_label(d.first), out.new_label(d.second)));
  out.graph = TriCycle(n, diags);
  return out;
}

TreeOrder spanning_edges(const TriCycle& g) {
  const int n = g.n();
  Edge td = trimmed_diagonal(g);
  if (td.second != n) throw Error(ErrorKind::NotNormalized, edge_str(td));
  TreeOrder t{n, td.first, {}};
  int l = t.c - 1;
  int r = t.c;
  t.edges.push_back({l, r});
  while (!(l == 1 && r == n)) {
    if (r < n && g.has_edge(l, r + 1)) {
      ++r;
    } else if (l > 1 && g.has_edge(l - 1, r)) {
      --l;
    } else {
      throw Error(ErrorKind::NotNormalized, edge_str({l, r}), "chain is broken");
    }
    t.edges.push_back({l, r});
  }
  return t;
}

std::vector<TreeStep> tree_walk(const TreeOrder& t, int j, int k) {
  require_vertex(j, t.n);
  require_vertex(k, t.n);
  // parent[v] = (edge index, vertex it was reached from).
  std::vector<std::pair<int, int>> parent(t.n + 1, {0, 0});
  std::vector<bool> seen(t.n + 1, false);
  std::queue<int> frontier;
  frontier.push(j);
  seen[j] = true;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int idx = 2; idx <= t.n; ++idx) {
      auto [a, b] = t.at(idx);
      int w = a == v ? b : (b == v ? a : 0);
      if (w == 0 || seen[w]) continue;
      seen[w] = true;
      parent[w] = {idx, v};
      frontier.push(w);
    }
  }
  std::vector<TreeStep> steps;
  for (int v = k; v != j; v = parent[v].second) {
    int idx = parent[v].first;
    steps.push_back({idx, t.at(idx).second == v ? 1 : -1});
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::vector<int> tree_path(const TreeOrder& t, int j, int k) {
  std::vector<int> out;
  for (const TreeStep& s : tree_walk(t, j, k)) out.push_back(s.index);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hf
