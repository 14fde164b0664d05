#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "heronfrieze/errors.hpp"

namespace hf {

// Exact rational. Always kept in lowest terms with a positive denominator.
using Rat = mpq_class;

Rat rat(long num, long den = 1);

// Accepts "p" or "p/q" with an optional leading '-'. Throws MalformedInput
// on anything else and ZeroPivot on a zero denominator.
Rat rat_parse(std::string_view text);
std::string rat_format(const Rat& value);

// Nonnegative square root when `value` is the square of a rational.
std::optional<Rat> rat_sqrt(const Rat& value);

// Square root or NotPerfectSquare; NegativeInput for value < 0.
Rat rat_sqrt_exact(const Rat& value);

bool is_power_of(const mpz_class& value, unsigned long base);

// A node of the half-integer lattice, stored as doubled coordinates.
// At least one of i2, j2 is even.
struct NodeIdx {
  long i2 = 0;
  long j2 = 0;

  static NodeIdx integer(long i, long j) { return {2 * i, 2 * j}; }
  bool is_integer() const { return i2 % 2 == 0 && j2 % 2 == 0; }
  bool is_valid() const { return i2 % 2 == 0 || j2 % 2 == 0; }
  // Doubled height j - i and doubled column i + j.
  long row2() const { return j2 - i2; }
  long col2() const { return i2 + j2; }
  NodeIdx shifted(long di2, long dj2) const { return {i2 + di2, j2 + dj2}; }

  auto operator<=>(const NodeIdx&) const = default;
};

enum class LineDir { Up, Down };

// up:k is the line through the nodes (k + 1/2, *); down:k the line through
// the nodes (*, k + 1/2).
struct LineIdx {
  LineDir dir = LineDir::Up;
  long k = 0;

  static LineIdx up(long k) { return {LineDir::Up, k}; }
  static LineIdx down(long k) { return {LineDir::Down, k}; }

  auto operator<=>(const LineIdx&) const = default;
};

// "i2:j2" in doubled coordinates.
NodeIdx node_parse(std::string_view text);
std::string node_format(const NodeIdx& node);

// "up:k" or "down:k".
LineIdx line_parse(std::string_view text);
std::string line_format(const LineIdx& line);

long parse_long(std::string_view text);

}  // namespace hf
