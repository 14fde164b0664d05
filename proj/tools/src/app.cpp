#include "hfcli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "hfcli/json_io.hpp"
#include "hfcli/render.hpp"

namespace hfcli {

namespace {

using hf::Error;
using hf::ErrorKind;

struct Options {
  int order = 0;
  std::vector<long> window;
  std::string input;
  std::string path;
  std::string polygon;
  std::string triangulation;
  std::string measurements;
  std::string target;
  std::string seed;
  std::string format;
  bool use_float = false;
};

json parse_json(std::istream& is, const std::string& name) {
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedInput, name, e.what());
  }
}

json read_file(const std::string& file) {
  std::ifstream is(file);
  if (!is) throw Error(ErrorKind::MalformedInput, file, "cannot open");
  return parse_json(is, file);
}

class Runner {
 public:
  Runner(const Options& o, std::istream& in) : o_(o), in_(in) {}

  json input() {
    if (!o_.input.empty()) return read_file(o_.input);
    return parse_json(in_, "stdin");
  }

  hf::Window window() const {
    if (o_.window.size() != 2) throw CLI::ValidationError("--window", "needs LO HI");
    return {o_.window[0], o_.window[1]};
  }

  hf::Polygon polygon() { return polygon_from_json(o_.polygon.empty() ? input() : read_file(o_.polygon)); }

  PathFile path() {
    if (o_.path.empty()) throw CLI::RequiredError("--path");
    return path_from_json(read_file(o_.path));
  }

  int order() const {
    if (o_.order == 0) throw CLI::RequiredError("--order");
    return o_.order;
  }

  const Options& o_;
  std::istream& in_;
};

json violations_json(const hf::Report& report) {
  json list = json::array();
  for (const hf::Violation& v : report) list.push_back({{"what", v.what}, {"position", v.position}});
  return {{"ok", report.empty()}, {"violations", list}};
}

json dispatch(const std::string& cmd, Runner& r, std::string& text) {
  const Options& o = r.o_;
  if (cmd == "frieze-from-polygon") return to_json(hf::frieze_from_polygon(r.polygon(), r.window()));
  if (cmd == "frieze-propagate") {
    const int n = r.order();
    PathFile p = r.path();
    hf::HPath hp{p.nodes, p.lines};
    return to_json(hf::propagate_heronian(n, hp, split_values(p, p.nodes.size()), r.window()));
  }
  if (cmd == "frieze-verify") {
    hf::Frieze z = frieze_from_json(r.input());
    return violations_json(z.kind() == hf::FriezeKind::Heronian ? hf::verify_heronian(z) : hf::verify_cm(z));
  }
  if (cmd == "frieze-glide-check") {
    bool glide = hf::check_glide(frieze_from_json(r.input()));
    text = glide ? "glide: true" : "glide: false";
    return {{"glide", glide}};
  }
  if (cmd == "frieze-render") {
    auto rows = render(frieze_from_json(r.input()));
    for (const auto& row : rows) text += row + "\n";
    return {{"rows", rows}};
  }
  if (cmd == "cm-from-polygon") {
    if (!o.measurements.empty()) {
      return to_json(hf::cmfrieze_from_measurements(measurements_from_json(read_file(o.measurements)), r.window()));
    }
    return to_json(hf::cmfrieze_from_polygon(r.polygon(), r.window()));
  }
  if (cmd == "cm-propagate") {
    const int n = r.order();
    PathFile p = r.path();
    hf::CMPath cp{p.nodes, p.lines};
    return to_json(hf::propagate_cm(n, cp, split_values(p, 2 * p.nodes.size()), r.window()));
  }
  if (cmd == "cm-verify-coherence") {
    hf::Frieze z = frieze_from_json(r.input());
    json list = json::array();
    for (const hf::NodeIdx& c : hf::verify_coherence(z)) list.push_back({{"i", c.i2 / 2}, {"j", c.j2 / 2}});
    return {{"violations", list}};
  }
  if (cmd == "cm-extend") {
    hf::Seed seed = o.seed.empty() ? hf::Seed{} : seed_from_json(read_file(o.seed));
    return to_json(hf::extend_to_heronian(frieze_from_json(r.input()), seed));
  }
  if (cmd == "cm-restrict") return to_json(hf::restrict_to_cm(frieze_from_json(r.input())));
  if (cmd == "laurent-expand") {
    if (o.triangulation.empty()) throw CLI::RequiredError("--triangulation");
    if (o.target.empty()) throw CLI::RequiredError("--target");
    return to_json(hf::expand(tricycle_from_json(read_file(o.triangulation)), hf::sym_parse(o.target)));
  }
  if (cmd == "laurent-eval") {
    if (o.measurements.empty()) throw CLI::RequiredError("--measurements");
    hf::Rat v = hf::evaluate(laurent_from_json(r.input()), measurements_from_json(read_file(o.measurements)));
    text = hf::rat_format(v);
    return text;
  }
  if (cmd == "polygon-recover") {
    if (!o.measurements.empty()) {
      if (o.triangulation.empty()) throw CLI::RequiredError("--triangulation");
      hf::TriCycle g = tricycle_from_json(read_file(o.triangulation));
      hf::MeasurementSet m = measurements_from_json(read_file(o.measurements));
      if (o.use_float) return float_polygon_to_json(hf::polygon_from_measurements_float(g, m));
      return to_json(hf::polygon_from_measurements(g, m));
    }
    return to_json(hf::polygon_from_frieze(frieze_from_json(r.input())));
  }
  throw CLI::CallForHelp();
}

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"frieze-from-polygon", "Heronian frieze of a polygon over a window"},
    {"frieze-propagate", "Heronian frieze from traversing-path data"},
    {"frieze-verify", "Check boundary, line and diamond conditions"},
    {"frieze-glide-check", "Check z(i,j) = z(j,i+n) on the window"},
    {"frieze-render", "ASCII grid of a frieze"},
    {"cm-from-polygon", "Cayley-Menger frieze of a polygon or of squared distances"},
    {"cm-propagate", "Cayley-Menger frieze from thickened-path data"},
    {"cm-verify-coherence", "List centers violating the coherence equation"},
    {"cm-extend", "Lift a coherent Cayley-Menger frieze to a Heronian one"},
    {"cm-restrict", "Drop the signed areas of a Heronian frieze"},
    {"laurent-expand", "Laurent expansion of a measurement in a triangulation"},
    {"laurent-eval", "Evaluate a Laurent polynomial on measurements"},
    {"polygon-recover", "Recover a polygon from a frieze or from triangulation data"},
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heronian and Cayley-Menger frieze toolkit", "heronfrieze"};
  app.require_subcommand(1);
  Options o;
  for (const auto& [name, help] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--order", o.order, "Polygon order n")->check(CLI::Range(4, 1000));
    sub->add_option("--window", o.window, "Column window LO HI")->expected(2)->allow_extra_args(false);
    sub->add_option("--input", o.input, "Input JSON file (default stdin)");
    sub->add_option("--path", o.path, "Traversing path JSON");
    sub->add_option("--polygon", o.polygon, "Polygon JSON");
    sub->add_option("--triangulation", o.triangulation, "Triangulation JSON");
    sub->add_option("--measurements", o.measurements, "Measurement JSON");
    sub->add_option("--target", o.target, "Target measurement x:i-j or s:i-j-k");
    sub->add_option("--seed", o.seed, "Square-root choices for cm-extend");
    sub->add_option("--format", o.format, "Output format (json or text)")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--float", o.use_float, "Floating-point polygon recovery (tolerance 1e-9)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  Runner runner(o, in);
  try {
    std::string text;
    json payload = dispatch(cmd, runner, text);
    // frieze-render prints its grid unless JSON is asked for explicitly.
    const std::string format = !o.format.empty() ? o.format : (cmd == "frieze-render" ? "text" : "json");
    if (format == "text" && !text.empty()) {
      out << text;
      if (text.back() != '\n') out << '\n';
    } else if (!(format == "text" && cmd == "frieze-render")) {
      out << payload.dump() << '\n';
    }
    return 0;
  } catch (const Error& e) {
    out << error_json(e).dump() << '\n';
    return 1;
  } catch (const CLI::Error& e) {
    err << cmd << ": " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hfcli
