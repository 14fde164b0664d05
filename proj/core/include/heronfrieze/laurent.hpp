#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heronfrieze/exactnum.hpp"
#include "heronfrieze/geometry.hpp"
#include "heronfrieze/triangulation.hpp"

namespace hf {

// A measurement symbol: x_{ij} with i < j, or S_{ijk} with i < j < k.
// Orientation signs live in the coefficients, never in the symbol.
struct MeasSym {
  enum class Kind { X, S };

  Kind kind = Kind::X;
  std::array<int, 3> v{0, 0, 0};

  static MeasSym x(int i, int j);
  // Canonical symbol; see signed_s for the orientation sign.
  static MeasSym s(int i, int j, int k);

  auto operator<=>(const MeasSym&) const = default;
};

// "x:i-j" and "s:i-j-k". Parsing accepts any vertex order for x; for s the
// order must already be increasing (signs are not representable here).
MeasSym sym_parse(std::string_view text);
std::string sym_format(const MeasSym& sym);

using Monomial = std::map<MeasSym, int>;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rat& constant);
  static LaurentPoly symbol(const MeasSym& sym, int exponent = 1);
  // S_{ijk} for any vertex order, as +-S of the canonical symbol.
  static LaurentPoly signed_s(int i, int j, int k);

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mono, const Rat& coeff);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  std::map<Monomial, Rat> terms_;
};

// re + eps * im in R[eps] / (eps^2 + 1).
struct EpsElem {
  LaurentPoly re;
  LaurentPoly im;

  friend EpsElem operator*(const EpsElem& a, const EpsElem& b);
  bool operator==(const EpsElem&) const = default;
};

// S_j = 2[v_j, v_{j+1}] and T_j = 2<v_j, v_{j+1}> for 2 <= j <= n - 1,
// stored at position j.
struct STPolys {
  std::vector<LaurentPoly> s;
  std::vector<LaurentPoly> t;
};
STPolys st_polys(const TriCycle& g, const TreeOrder& tree);

// (Sigma_even(a, b), Sigma_odd(a, b)) as the product of T_m + eps S_m over
// a <= m < b.
std::pair<LaurentPoly, LaurentPoly> sigma(int a, int b, const STPolys& st);

// (<v_a, v_b>, [v_a, v_b]) for 2 <= a < b <= n.
std::pair<LaurentPoly, LaurentPoly> bracket(const TreeOrder& tree, const STPolys& st, int a, int b);

// The target measurement as a Laurent polynomial in the x and S symbols of
// g's edges and triangles. Coefficients are dyadic rationals.
LaurentPoly expand(const TriCycle& g, const MeasSym& target);
// The closed formulas for the fan at vertex 1.
LaurentPoly fan_expand(int n, const MeasSym& target);

Rat evaluate(const LaurentPoly& p, const MeasurementSet& m);

// Largest negative exponent of each symbol, as a positive integer.
std::map<MeasSym, int> denominator_monomial(const LaurentPoly& p);

// Diagonals of g that cross the target pair, or any side of the target triple.
std::vector<Edge> crossing_diagonals(const TriCycle& g, const MeasSym& target);

}  // namespace hf
