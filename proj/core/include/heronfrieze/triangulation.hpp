#pragma once

#include <array>
#include <set>
#include <utility>
#include <vector>

namespace hf {

// Unordered vertex pair stored with first < second.
using Edge = std::pair<int, int>;
using Triple = std::array<int, 3>;

Edge make_edge(int i, int j);

// A triangulated n-cycle on the vertices 1..n. Diagonals never cross and
// number exactly n - 3.
class TriCycle {
 public:
  TriCycle() = default;
  // Throws InvalidVertex, NotADiagonal or ConditionViolated.
  TriCycle(int n, const std::vector<Edge>& diagonals);

  static TriCycle fan(int n, int apex = 1);

  int n() const { return n_; }
  const std::set<Edge>& diagonals() const { return diagonals_; }

  bool is_side(int i, int j) const;
  bool is_diagonal(int i, int j) const;
  bool has_edge(int i, int j) const { return is_side(i, j) || is_diagonal(i, j); }
  // Triangles as sorted triples.
  std::vector<Triple> triangles() const;
  bool has_triangle(int i, int j, int k) const;

  bool operator==(const TriCycle&) const = default;

 private:
  int n_ = 0;
  std::set<Edge> diagonals_;
};

// A sub-cycle together with the map back to the original labels:
// to_old[k - 1] is the original label of new vertex k.
struct Relabeled {
  TriCycle graph;
  std::vector<int> to_old;

  int old_label(int v) const { return to_old[v - 1]; }
  // 0 when `old` is not a vertex of the sub-cycle.
  int new_label(int old) const;
};

// True iff the two diagonals of the n-cycle cross. Throws NotADiagonal when
// either pair is a side or degenerate.
bool crosses(Edge d1, Edge d2, int n);

Relabeled trim_diag(const TriCycle& g, Edge d);
Relabeled trim_tri(const TriCycle& g, Triple t);

// Replaces diagonal `e` with the other diagonal of its quadrilateral.
std::pair<TriCycle, Edge> flip(const TriCycle& g, Edge e);

bool is_thin(const TriCycle& g);
// The two vertices of a thin triangulation that touch no diagonal.
Edge trimmed_diagonal(const TriCycle& g);

// Rotates labels so that the trimmed diagonal becomes {c, n}.
Relabeled normalize_thin(const TriCycle& g);

// D_2, ..., D_n stored at positions 0..n-2. Requires the trimmed diagonal
// to be {c, n}.
struct TreeOrder {
  int n = 0;
  int c = 0;
  std::vector<Edge> edges;

  const Edge& at(int index) const { return edges[index - 2]; }
};

TreeOrder spanning_edges(const TriCycle& g);

// One step of a tree walk: edge index and +1 when the edge D = {l, r}
// is traversed from l to r.
struct TreeStep {
  int index;
  int sign;
};

// Walk from j to k along the spanning tree.
std::vector<TreeStep> tree_walk(const TreeOrder& t, int j, int k);
// Sorted edge indices of the tree path joining j and k.
std::vector<int> tree_path(const TreeOrder& t, int j, int k);

}  // namespace hf
