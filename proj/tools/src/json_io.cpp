#include "hfcli/json_io.hpp"

#include <string>

namespace hfcli {

using hf::Error;
using hf::ErrorKind;
using hf::Rat;

namespace {

// Turns JSON access failures into MalformedInput.
template <class F>
auto guarded(const char* what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedInput, what, e.what());
  }
}

Rat rat_value(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  return hf::rat_parse(j.get<std::string>());
}

std::vector<int> split_ints(const std::string& text, size_t count) {
  std::vector<int> out;
  size_t start = 0;
  while (true) {
    size_t dash = text.find('-', start);
    out.push_back(static_cast<int>(hf::parse_long(text.substr(start, dash - start))));
    if (dash == std::string::npos) break;
    start = dash + 1;
  }
  if (out.size() != count) throw Error(ErrorKind::MalformedInput, text);
  return out;
}

}  // namespace

json to_json(const hf::Polygon& poly) {
  json verts = json::array();
  for (const hf::Point& p : poly.vertices) verts.push_back({hf::rat_format(p.u), hf::rat_format(p.v)});
  return {{"vertices", verts}};
}

hf::Polygon polygon_from_json(const json& j) {
  return guarded("polygon", [&] {
    hf::Polygon poly;
    for (const json& v : j.at("vertices")) {
      if (v.size() != 2) throw Error(ErrorKind::MalformedInput, "polygon", "vertex needs two coordinates");
      poly.vertices.push_back({rat_value(v[0]), rat_value(v[1])});
    }
    return poly;
  });
}

json float_polygon_to_json(const std::vector<hf::FloatPoint>& pts) {
  json verts = json::array();
  for (const hf::FloatPoint& p : pts) verts.push_back({p.u, p.v});
  return {{"vertices", verts}, {"exact", false}};
}

json to_json(const hf::TriCycle& g) {
  json diags = json::array();
  for (hf::Edge d : g.diagonals()) diags.push_back({d.first, d.second});
  return {{"n", g.n()}, {"diagonals", diags}};
}

hf::TriCycle tricycle_from_json(const json& j) {
  return guarded("triangulation", [&] {
    std::vector<hf::Edge> diags;
    for (const json& d : j.at("diagonals")) diags.push_back({d.at(0).get<int>(), d.at(1).get<int>()});
    return hf::TriCycle(j.at("n").get<int>(), diags);
  });
}

json to_json(const hf::MeasurementSet& m) {
  json x = json::object();
  json s = json::object();
  for (const auto& [e, v] : m.xs()) x[std::to_string(e.first) + "-" + std::to_string(e.second)] = hf::rat_format(v);
  for (const auto& [t, v] : m.ss()) {
    s[std::to_string(t[0]) + "-" + std::to_string(t[1]) + "-" + std::to_string(t[2])] = hf::rat_format(v);
  }
  return {{"n", m.n()}, {"x", x}, {"s", s}};
}

hf::MeasurementSet measurements_from_json(const json& j) {
  return guarded("measurements", [&] {
    hf::MeasurementSet m(j.at("n").get<int>());
    if (j.contains("x")) {
      for (const auto& [key, v] : j.at("x").items()) {
        auto ij = split_ints(key, 2);
        m.set_x(ij[0], ij[1], rat_value(v));
      }
    }
    if (j.contains("s")) {
      for (const auto& [key, v] : j.at("s").items()) {
        auto ijk = split_ints(key, 3);
        m.set_s(ijk[0], ijk[1], ijk[2], rat_value(v));
      }
    }
    return m;
  });
}

json to_json(const hf::Frieze& z) {
  json nodes = json::object();
  json lines = json::object();
  for (const auto& [k, v] : z.nodes()) nodes[hf::node_format(k)] = hf::rat_format(v);
  for (const auto& [k, v] : z.lines()) lines[hf::line_format(k)] = hf::rat_format(v);
  return {{"kind", z.kind() == hf::FriezeKind::Heronian ? "heronian" : "cm"},
          {"n", z.n()},
          {"window", {z.window().lo, z.window().hi}},
          {"nodes", nodes},
          {"lines", lines}};
}

hf::Frieze frieze_from_json(const json& j) {
  return guarded("frieze", [&] {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "heronian" && kind != "cm") throw Error(ErrorKind::MalformedInput, "kind", kind);
    const json& w = j.at("window");
    hf::Frieze z(kind == "heronian" ? hf::FriezeKind::Heronian : hf::FriezeKind::CM, j.at("n").get<int>(),
                 {w.at(0).get<long>(), w.at(1).get<long>()});
    try {
      for (const auto& [key, v] : j.at("nodes").items()) z.set(hf::node_parse(key), rat_value(v));
      for (const auto& [key, v] : j.at("lines").items()) z.set(hf::line_parse(key), rat_value(v));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::IndexRange) throw Error(ErrorKind::MalformedInput, e.position(), "outside the window");
      throw;
    }
    return z;
  });
}

PathFile path_from_json(const json& j) {
  return guarded("path", [&] {
    PathFile p;
    for (const json& s : j.at("nodes")) p.nodes.push_back(hf::node_parse(s.get<std::string>()));
    for (const json& s : j.at("lines")) p.lines.push_back(hf::line_parse(s.get<std::string>()));
    for (const json& s : j.at("values")) p.values.push_back(rat_value(s));
    return p;
  });
}

json to_json(const PathFile& path) {
  json nodes = json::array();
  json lines = json::array();
  json values = json::array();
  for (const auto& k : path.nodes) nodes.push_back(hf::node_format(k));
  for (const auto& k : path.lines) lines.push_back(hf::line_format(k));
  for (const auto& v : path.values) values.push_back(hf::rat_format(v));
  return {{"nodes", nodes}, {"lines", lines}, {"values", values}};
}

hf::PathValues split_values(const PathFile& path, size_t node_count) {
  if (path.values.size() != node_count + path.lines.size()) {
    throw Error(ErrorKind::MalformedInput, "values",
                "expected " + std::to_string(node_count + path.lines.size()) + " values");
  }
  hf::PathValues out;
  out.node_values.assign(path.values.begin(), path.values.begin() + static_cast<long>(node_count));
  out.line_values.assign(path.values.begin() + static_cast<long>(node_count), path.values.end());
  return out;
}

json to_json(const hf::LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    json exps = json::object();
    for (const auto& [sym, e] : mono) exps[hf::sym_format(sym)] = e;
    terms.push_back({{"coeff", hf::rat_format(coeff)}, {"exps", exps}});
  }
  return {{"terms", terms}};
}

hf::LaurentPoly laurent_from_json(const json& j) {
  return guarded("laurent", [&] {
    hf::LaurentPoly p;
    for (const json& t : j.at("terms")) {
      hf::Monomial mono;
      for (const auto& [key, e] : t.at("exps").items()) {
        int exp = e.get<int>();
        if (exp != 0) mono[hf::sym_parse(key)] += exp;
      }
      p.add_term(mono, rat_value(t.at("coeff")));
    }
    return p;
  });
}

hf::Seed seed_from_json(const json& j) {
  return guarded("seed", [&] {
    hf::Seed seed;
    for (const auto& [key, v] : j.items()) seed[hf::node_parse(key)] = rat_value(v);
    return seed;
  });
}

json error_json(const Error& err) {
  json out = {{"error", std::string(hf::error_kind_name(err.kind()))}, {"position", nullptr}};
  if (!err.position().empty()) out["position"] = err.position();
  return out;
}

}  // namespace hfcli
