#include "heronfrieze/laurent.hpp"

#include <algorithm>
#include <functional>

namespace hf {

namespace {

std::string edge_str(Edge e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

bool interleaved(Edge d1, Edge d2) {
  auto [i, j] = d1;
  auto [k, l] = d2;
  return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

void check_target(int n, const MeasSym& t) {
  int count = t.kind == MeasSym::Kind::X ? 2 : 3;
  for (int k = 0; k < count; ++k) {
    if (t.v[k] < 1 || t.v[k] > n || (k > 0 && t.v[k] <= t.v[k - 1])) {
      throw Error(ErrorKind::InvalidTarget, sym_format(t));
    }
  }
}

LaurentPoly X(int i, int j) { return LaurentPoly::symbol(MeasSym::x(i, j)); }

LaurentPoly X(Edge e) { return X(e.first, e.second); }

Rat pow2(int exponent) {
  Rat out = 1;
  for (int k = 0; k < std::abs(exponent); ++k) out *= 2;
  return exponent >= 0 ? out : Rat(1 / out);
}

// Substitutes vertex labels, re-canonicalizing S symbols with their sign.
LaurentPoly relabel(const LaurentPoly& p, const std::function<int(int)>& to_old) {
  LaurentPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial fresh;
    Rat c = coeff;
    for (const auto& [sym, exp] : mono) {
      if (sym.kind == MeasSym::Kind::X) {
        fresh[MeasSym::x(to_old(sym.v[0]), to_old(sym.v[1]))] += exp;
        continue;
      }
      Triple t{to_old(sym.v[0]), to_old(sym.v[1]), to_old(sym.v[2])};
      int sign = canonical_triple(t);
      if (exp % 2 != 0 && sign < 0) c = -c;
      fresh[MeasSym::s(t[0], t[1], t[2])] += exp;
    }
    std::erase_if(fresh, [](const auto& kv) { return kv.second == 0; });
    out.add_term(fresh, c);
  }
  return out;
}

// Direct formula on a thin triangulation: every measurement is a bilinear
// combination of the spanning-tree vectors v_2, ..., v_n.
LaurentPoly thin_expand(const TriCycle& g, const MeasSym& target) {
  const Relabeled norm = normalize_thin(g);
  const TriCycle& h = norm.graph;
  const TreeOrder tree = spanning_edges(h);
  const STPolys st = st_polys(h, tree);

  std::map<std::pair<int, int>, std::pair<LaurentPoly, LaurentPoly>> memo;
  auto brackets = [&](int a, int b) -> const std::pair<LaurentPoly, LaurentPoly>& {
    auto it = memo.find({a, b});
    if (it == memo.end()) it = memo.emplace(std::pair{a, b}, bracket(tree, st, a, b)).first;
    return it->second;
  };
  auto angle = [&](int a, int b) {
    if (a == b) return X(tree.at(a));
    return a < b ? brackets(a, b).first : brackets(b, a).first;
  };
  auto square = [&](int a, int b) {
    if (a == b) return LaurentPoly();
    return a < b ? brackets(a, b).second : -brackets(b, a).second;
  };

  auto fresh = [&](int old) { return norm.new_label(old); };
  LaurentPoly local;
  if (target.kind == MeasSym::Kind::X) {
    const auto walk = tree_walk(tree, fresh(target.v[0]), fresh(target.v[1]));
    for (const TreeStep& p : walk) {
      for (const TreeStep& q : walk) local += LaurentPoly(Rat(p.sign * q.sign)) * angle(p.index, q.index);
    }
  } else {
    const int a = fresh(target.v[0]);
    const auto walk_ab = tree_walk(tree, a, fresh(target.v[1]));
    const auto walk_ac = tree_walk(tree, a, fresh(target.v[2]));
    for (const TreeStep& p : walk_ab) {
      for (const TreeStep& q : walk_ac) local += LaurentPoly(Rat(2 * p.sign * q.sign)) * square(p.index, q.index);
    }
  }
  return relabel(local, [&](int v) { return norm.old_label(v); });
}

LaurentPoly expand_signed(const TriCycle& g, int i, int j, int k);

LaurentPoly expand_checked(const TriCycle& g, const MeasSym& target) {
  const auto& v = target.v;
  if (target.kind == MeasSym::Kind::X) {
    if (g.has_edge(v[0], v[1])) return LaurentPoly::symbol(target);
    const Relabeled r = trim_diag(g, {v[0], v[1]});
    LaurentPoly local = thin_expand(r.graph, MeasSym::x(r.new_label(v[0]), r.new_label(v[1])));
    return relabel(local, [&](int u) { return r.old_label(u); });
  }
  if (g.has_triangle(v[0], v[1], v[2])) return LaurentPoly::symbol(target);
  const Relabeled r = trim_tri(g, {v[0], v[1], v[2]});
  const int i = r.new_label(v[0]);
  const int j = r.new_label(v[1]);
  const int k = r.new_label(v[2]);
  LaurentPoly local;
  if (r.graph.has_triangle(i, j, k)) {
    local = LaurentPoly::symbol(MeasSym::s(i, j, k));
  } else if (is_thin(r.graph)) {
    local = thin_expand(r.graph, MeasSym::s(i, j, k));
  } else {
    // A non-thin trimming is not trimmed with respect to any of the three
    // sub-triples, so each of them trims to a smaller cycle.
    int l = 1;
    while (l == i || l == j || l == k) ++l;
    local = expand_signed(r.graph, i, j, l) + expand_signed(r.graph, j, k, l) - expand_signed(r.graph, i, k, l);
  }
  return relabel(local, [&](int u) { return r.old_label(u); });
}

LaurentPoly expand_signed(const TriCycle& g, int i, int j, int k) {
  Triple t{i, j, k};
  int sign = canonical_triple(t);
  LaurentPoly p = expand_checked(g, MeasSym::s(t[0], t[1], t[2]));
  return sign > 0 ? p : -p;
}

void require_dyadic(const LaurentPoly& p, const MeasSym& target) {
  for (const auto& [mono, coeff] : p.terms()) {
    if (!is_power_of(coeff.get_den(), 2)) throw Error(ErrorKind::NonIntegral, sym_format(target));
  }
}

}  // namespace

MeasSym MeasSym::x(int i, int j) {
  if (i == j) throw Error(ErrorKind::InvalidTarget, "x:" + std::to_string(i) + "-" + std::to_string(j));
  return {Kind::X, {std::min(i, j), std::max(i, j), 0}};
}

MeasSym MeasSym::s(int i, int j, int k) {
  Triple t{i, j, k};
  if (canonical_triple(t) == 0) {
    throw Error(ErrorKind::InvalidTarget,
                "s:" + std::to_string(i) + "-" + std::to_string(j) + "-" + std::to_string(k));
  }
  return {Kind::S, t};
}

MeasSym sym_parse(std::string_view text) {
  auto fail = [&] { return Error(ErrorKind::MalformedInput, std::string(text), "expected x:i-j or s:i-j-k"); };
  if (text.size() < 2 || text[1] != ':' || (text[0] != 'x' && text[0] != 's')) throw fail();
  std::vector<int> parts;
  std::string_view rest = text.substr(2);
  while (true) {
    size_t dash = rest.find('-');
    try {
      parts.push_back(static_cast<int>(parse_long(rest.substr(0, dash))));
    } catch (const Error&) {
      throw fail();
    }
    if (dash == std::string_view::npos) break;
    rest = rest.substr(dash + 1);
  }
  if (text[0] == 'x') {
    if (parts.size() != 2) throw fail();
    return MeasSym::x(parts[0], parts[1]);
  }
  if (parts.size() != 3 || !(parts[0] < parts[1] && parts[1] < parts[2])) throw fail();
  return MeasSym::s(parts[0], parts[1], parts[2]);
}

std::string sym_format(const MeasSym& sym) {
  std::string out = sym.kind == MeasSym::Kind::X ? "x:" : "s:";
  out += std::to_string(sym.v[0]) + "-" + std::to_string(sym.v[1]);
  if (sym.kind == MeasSym::Kind::S) out += "-" + std::to_string(sym.v[2]);
  return out;
}

LaurentPoly::LaurentPoly(const Rat& constant) {
  if (constant != 0) terms_[{}] = constant;
}

LaurentPoly LaurentPoly::symbol(const MeasSym& sym, int exponent) {
  LaurentPoly p;
  if (exponent == 0) return LaurentPoly(1);
  p.terms_[{{sym, exponent}}] = 1;
  return p;
}

LaurentPoly LaurentPoly::signed_s(int i, int j, int k) {
  Triple t{i, j, k};
  int sign = canonical_triple(t);
  if (sign == 0) return {};
  LaurentPoly p = symbol(MeasSym::s(t[0], t[1], t[2]));
  return sign > 0 ? p : -p;
}

void LaurentPoly::add_term(const Monomial& mono, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(mono, coeff);
  if (fresh) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  LaurentPoly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) {
      Monomial m = m1;
      for (const auto& [sym, exp] : m2) {
        int& e = m[sym];
        e += exp;
        if (e == 0) m.erase(sym);
      }
      out.add_term(m, c1 * c2);
    }
  }
  return *this = std::move(out);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [mono, coeff] : out.terms_) coeff = -coeff;
  return out;
}

EpsElem operator*(const EpsElem& a, const EpsElem& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

STPolys st_polys(const TriCycle& g, const TreeOrder& tree) {
  const int n = tree.n;
  STPolys out{std::vector<LaurentPoly>(n), std::vector<LaurentPoly>(n)};
  for (int j = 2; j <= n - 1; ++j) {
    const Edge dj = tree.at(j);
    const Edge dk = tree.at(j + 1);
    int o = (dj.first == dk.first || dj.first == dk.second) ? dj.first : dj.second;
    int p = dj.first == o ? dj.second : dj.first;
    int q = dk.first == o ? dk.second : dk.first;
    if (!g.has_edge(p, q)) throw Error(ErrorKind::NotNormalized, edge_str(dj), "consecutive edges share no triangle");
    // v_j = +-(A_p - A_o): positive when o is the smaller endpoint.
    Rat sign = (o < p ? 1 : -1) * (o < q ? 1 : -1);
    out.s[j] = LaurentPoly(sign) * LaurentPoly::signed_s(o, p, q);
    out.t[j] = LaurentPoly(sign) * (X(o, p) + X(o, q) - X(p, q));
  }
  return out;
}

std::pair<LaurentPoly, LaurentPoly> sigma(int a, int b, const STPolys& st) {
  const int n = static_cast<int>(st.s.size());
  if (a < 2 || b <= a || b > n) throw Error(ErrorKind::IndexRange, std::to_string(a) + "-" + std::to_string(b));
  EpsElem acc{LaurentPoly(1), LaurentPoly()};
  for (int m = a; m < b; ++m) acc = acc * EpsElem{st.t[m], st.s[m]};
  return {acc.re, acc.im};
}

std::pair<LaurentPoly, LaurentPoly> bracket(const TreeOrder& tree, const STPolys& st, int a, int b) {
  auto [even, odd] = sigma(a, b, st);
  for (const LaurentPoly* p : {&even, &odd}) {
    for (const auto& [mono, coeff] : p->terms()) {
      if (coeff.get_den() != 1) throw Error(ErrorKind::NonIntegral, std::to_string(a) + "-" + std::to_string(b));
    }
  }
  LaurentPoly scale(pow2(a - b));
  for (int m = a + 1; m < b; ++m) scale *= LaurentPoly::symbol(MeasSym::x(tree.at(m).first, tree.at(m).second), -1);
  return {even * scale, odd * scale};
}

LaurentPoly expand(const TriCycle& g, const MeasSym& target) {
  check_target(g.n(), target);
  LaurentPoly out = expand_checked(g, target);
  require_dyadic(out, target);
  return out;
}

LaurentPoly fan_expand(int n, const MeasSym& target) {
  check_target(n, target);
  auto x = [](int i, int j) { return X(i, j); };
  // Sum over J of +-Q_{J,[a,b]}, split by the parity of |J|.
  auto q_sums = [&](int a, int b) {
    LaurentPoly even;
    LaurentPoly odd;
    const int len = b - a;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      LaurentPoly q(1);
      int size = 0;
      for (int k = 0; k < len; ++k) {
        int j = a + k;
        if (mask & (1u << k)) {
          q *= LaurentPoly::symbol(MeasSym::s(1, j, j + 1));
          ++size;
        } else {
          q *= x(1, j) + x(1, j + 1) - x(j, j + 1);
        }
      }
      if (size % 2 == 0) {
        even += (size / 2) % 2 == 0 ? q : -q;
      } else {
        odd += ((size - 1) / 2) % 2 == 0 ? q : -q;
      }
    }
    LaurentPoly scale(pow2(-(b - a - 1)));
    for (int k = a + 1; k < b; ++k) scale *= LaurentPoly::symbol(MeasSym::x(1, k), -1);
    return std::pair{even * scale, odd * scale};
  };
  auto s1 = [&](int a, int b) {
    if (b == a + 1) return LaurentPoly::symbol(MeasSym::s(1, a, b));
    return q_sums(a, b).second;
  };
  const auto& v = target.v;
  if (target.kind == MeasSym::Kind::X) {
    if (v[0] == 1 || v[1] == v[0] + 1) return LaurentPoly::symbol(target);
    return x(1, v[0]) + x(1, v[1]) - q_sums(v[0], v[1]).first;
  }
  if (v[0] == 1) return s1(v[1], v[2]);
  return s1(v[0], v[1]) + s1(v[1], v[2]) - s1(v[0], v[2]);
}

Rat evaluate(const LaurentPoly& p, const MeasurementSet& m) {
  Rat total = 0;
  for (const auto& [mono, coeff] : p.terms()) {
    Rat term = coeff;
    for (const auto& [sym, exp] : mono) {
      Rat value = sym.kind == MeasSym::Kind::X ? m.x(sym.v[0], sym.v[1]) : m.s(sym.v[0], sym.v[1], sym.v[2]);
      if (exp < 0 && value == 0) throw Error(ErrorKind::ZeroPivot, sym_format(sym));
      Rat power = 1;
      for (int k = 0; k < std::abs(exp); ++k) power *= value;
      term *= exp >= 0 ? power : Rat(1 / power);
    }
    total += term;
  }
  return total;
}

std::map<MeasSym, int> denominator_monomial(const LaurentPoly& p) {
  std::map<MeasSym, int> out;
  for (const auto& [mono, coeff] : p.terms()) {
    for (const auto& [sym, exp] : mono) {
      if (exp < 0) out[sym] = std::max(out[sym], -exp);
    }
  }
  return out;
}

std::vector<Edge> crossing_diagonals(const TriCycle& g, const MeasSym& target) {
  check_target(g.n(), target);
  std::vector<Edge> sides;
  const auto& v = target.v;
  if (target.kind == MeasSym::Kind::X) {
    sides = {{v[0], v[1]}};
  } else {
    sides = {{v[0], v[1]}, {v[0], v[2]}, {v[1], v[2]}};
  }
  std::vector<Edge> out;
  for (Edge d : g.diagonals()) {
    if (std::any_of(sides.begin(), sides.end(), [&](Edge s) { return interleaved(d, s); })) out.push_back(d);
  }
  return out;
}

}  // namespace hf
