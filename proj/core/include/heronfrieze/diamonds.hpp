#pragma once

#include <array>
#include <utility>

#include "heronfrieze/exactnum.hpp"

namespace hf {

// Measurements of a quadrilateral A1A2A3A4 laid out as a diamond:
// e = x13 on the left, f = x24 on the right, a = x14 on top, c = x23 at the
// bottom, b = x12 and d = x34 on the slanted lines, and the signed areas
// p = S123, q = S134, r = S124, s = S234 on the edges.
struct HeronianDiamond {
  Rat a, b, c, d, e, f, p, q, r, s;

  bool operator==(const HeronianDiamond&) const = default;
};

struct CMDiamond {
  Rat a, b, c, d, e, f;

  bool operator==(const CMDiamond&) const = default;
};

enum class PartialDir { Left, Right, Up, Down, UpSlant, DownSlant };

enum class Axis { Horizontal, Vertical };

bool is_heronian(const HeronianDiamond& h);

struct RightHalf {
  Rat f, r, s;
};
struct LeftHalf {
  Rat e, p, q;
};

RightHalf propagate_right(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e,
                          const Rat& p, const Rat& q);
LeftHalf propagate_left(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& f,
                        const Rat& r, const Rat& s);

HeronianDiamond reflect(const HeronianDiamond& h, Axis axis);

// Diamond with a = q = r = 0: returns (f, d, s) = (b, e, p).
std::array<Rat, 3> boundary_step_top(const Rat& e, const Rat& b, const Rat& p);
// Diamond with c = p = s = 0: returns (b, f, r) = (e, d, q).
std::array<Rat, 3> boundary_step_bottom(const Rat& d, const Rat& e, const Rat& q);

Rat cm_det(const CMDiamond& x);
Rat cm_partial(PartialDir dir, const CMDiamond& x);

CMDiamond heronian_to_cm(const HeronianDiamond& h);

// The two Heronian diamonds over x, the first with the given p.
std::pair<HeronianDiamond, HeronianDiamond> cm_lift(const CMDiamond& x, const Rat& p);
// Chooses p = sqrt(H(b, c, e)) >= 0; NotPerfectSquare otherwise.
std::pair<HeronianDiamond, HeronianDiamond> cm_lift_auto(const CMDiamond& x);

}  // namespace hf
