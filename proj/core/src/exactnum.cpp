#include "heronfrieze/exactnum.hpp"

#include <cctype>
#include <charconv>

namespace hf {

namespace {

constexpr std::string_view kErrorNames[] = {
    "NegativeInput",  "ZeroPivot",        "HeronViolation",     "NotPerfectSquare",
    "OrderMismatch",  "OrderTooSmall",    "ConditionViolated",  "NonGenericH",
    "NotADiagonal",   "InTriangulation",  "InvalidTriple",      "NotInTriangulation",
    "NotThin",        "NotNormalized",    "InvalidVertex",      "WindowTooNarrow",
    "Degenerate",     "IncoherentInput",  "IndexRange",         "NonIntegral",
    "InvalidTarget",  "MissingSymbol",    "MalformedInput",
};

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string_view error_kind_name(ErrorKind kind) {
  return kErrorNames[static_cast<int>(kind)];
}

Error::Error(ErrorKind kind, std::string position, const std::string& detail)
    : std::runtime_error(std::string(error_kind_name(kind)) +
                         (position.empty() ? "" : " at " + position) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      position_(std::move(position)) {}

Rat rat(long num, long den) {
  if (den == 0) throw Error(ErrorKind::ZeroPivot, {}, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw Error(ErrorKind::MalformedInput, std::string(text), "not a rational literal");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::ZeroPivot, std::string(text), "zero denominator");
  if (text.front() == '-') n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_format(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::optional<Rat> rat_sqrt(const Rat& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn = sqrt(n);
  mpz_class rd = sqrt(d);
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

Rat rat_sqrt_exact(const Rat& value) {
  if (sgn(value) < 0) throw Error(ErrorKind::NegativeInput, {}, rat_format(value));
  auto r = rat_sqrt(value);
  if (!r) throw Error(ErrorKind::NotPerfectSquare, {}, rat_format(value));
  return *r;
}

bool is_power_of(const mpz_class& value, unsigned long base) {
  if (value <= 0) return false;
  mpz_class v = value;
  while (v != 1) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), base) == 0) return false;
    v /= base;
  }
  return true;
}

long parse_long(std::string_view text) {
  long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw Error(ErrorKind::MalformedInput, std::string(text), "not an integer");
  }
  return value;
}

NodeIdx node_parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::MalformedInput, std::string(text), "node index must be i2:j2");
  }
  NodeIdx node{parse_long(text.substr(0, colon)), parse_long(text.substr(colon + 1))};
  if (!node.is_valid()) {
    throw Error(ErrorKind::MalformedInput, std::string(text), "both coordinates are half-integers");
  }
  return node;
}

std::string node_format(const NodeIdx& node) {
  return std::to_string(node.i2) + ":" + std::to_string(node.j2);
}

LineIdx line_parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    auto head = text.substr(0, colon);
    long k = parse_long(text.substr(colon + 1));
    if (head == "up") return LineIdx::up(k);
    if (head == "down") return LineIdx::down(k);
  }
  throw Error(ErrorKind::MalformedInput, std::string(text), "line index must be up:k or down:k");
}

std::string line_format(const LineIdx& line) {
  return std::string(line.dir == LineDir::Up ? "up:" : "down:") + std::to_string(line.k);
}

}  // namespace hf
