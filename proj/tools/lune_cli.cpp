// lune: generate, measure, verify and plot convex bodies on the unit sphere.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lune/covering.hpp"
#include "lune/document.hpp"
#include "lune/svg.hpp"
#include "lune/verify.hpp"
#include "lune/width.hpp"

namespace {

using namespace lune;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kIo = 3 };

struct CliError {
  int code;
  std::string message;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

double round9(double x) { return std::strtod(num(x).c_str(), nullptr); }

ordered_json point_json(const SpherePoint& p) {
  return ordered_json::array({round9(p.x()), round9(p.y()), round9(p.z())});
}

std::string point_text(const SpherePoint& p) {
  return "[" + num(p.x()) + ", " + num(p.y()) + ", " + num(p.z()) + "]";
}

std::vector<double> parse_numbers(const std::string& text, char sep) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw CliError{kUsage, "not a number: '" + item + "'"};
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw CliError{kUsage, "not a number: '" + item + "'"};
    }
    out.push_back(x);
  }
  return out;
}

SpherePoint parse_point(const std::string& text) {
  const auto v = parse_numbers(text, ',');
  if (v.size() != 3) throw CliError{kUsage, "expected x,y,z but got '" + text + "'"};
  try {
    return SpherePoint(Vec3{v[0], v[1], v[2]});
  } catch (const GeometryError& e) {
    throw CliError{kUsage, e.what()};
  }
}

std::vector<SpherePoint> parse_points(const std::string& text) {
  std::vector<SpherePoint> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (!item.empty()) out.push_back(parse_point(item));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kIo, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw CliError{kIo, "cannot write " + path};
}

// key = value lines; '#' starts a comment.
Tolerance read_config(const std::string& path) {
  Tolerance tol;
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw CliError{kIo, path + ":" + std::to_string(lineno) + ": expected key = value"};
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r\"");
      const auto b = s.find_last_not_of(" \t\r\"");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    double x = 0.0;
    try {
      x = std::stod(value);
    } catch (const std::exception&) {
      throw CliError{kIo, path + ":" + std::to_string(lineno) + ": bad value for " + key};
    }
    if (key == "eps_alg") {
      tol.eps_alg = x;
    } else if (key == "eps_opt") {
      tol.eps_opt = x;
    } else if (key == "eps_claim") {
      tol.eps_claim = x;
    } else {
      throw CliError{kIo, path + ":" + std::to_string(lineno) + ": unknown key " + key};
    }
  }
  if (!tol.valid()) throw CliError{kIo, path + ": tolerances must be positive and finite"};
  return tol;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LUNE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CliError{kUsage, "LUNE_SEED must be a non-negative integer"};
    }
  }
  return 1;
}

BodyDocument load_body(const std::string& path, bool strict) {
  try {
    return parse_document(read_file(path), strict);
  } catch (const GeometryError& e) {
    throw CliError{kIo, path + ": " + e.what()};
  }
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
  std::string shape;
  int n = 3;
  double w = 1.0;
  double delta = 1.0;
  double radius = 0.5;
  double phase = 0.0;
  double orientation = 0.0;
  std::string center = "0,0,1";
  std::string points;
  int count = 12;
  double spread = 0.5;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  const SpherePoint center = parse_point(a.center);
  BodyDocument doc;
  ordered_json meta;
  meta["generator"] = a.shape;
  try {
    if (a.shape == "cap") {
      doc.body = make_cap(center, a.radius);
      meta["radius"] = a.radius;
    } else if (a.shape == "quarter-disk") {
      doc.body = make_quarter_disk(center, a.delta, a.orientation);
      meta["delta"] = a.delta;
      meta["orientation"] = a.orientation;
    } else if (a.shape == "reuleaux") {
      doc.body = make_reuleaux_odd_gon(center, a.n, a.w, a.phase);
      meta["n"] = a.n;
      meta["w"] = a.w;
      meta["phase"] = a.phase;
    } else if (a.shape == "reduced-ngon") {
      doc.body = make_regular_reduced_polygon(center, a.n, a.delta, a.phase);
      meta["n"] = a.n;
      meta["delta"] = a.delta;
      meta["phase"] = a.phase;
    } else if (a.shape == "hull-of-points") {
      std::vector<SpherePoint> pts;
      if (!a.points.empty()) {
        pts = parse_points(a.points);
      } else {
        // Random points within `spread` of the center.
        const std::uint64_t seed = a.seed ? *a.seed : default_seed();
        std::mt19937_64 gen(seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const auto [e1, e2] = tangent_frame(center);
        for (int i = 0; i < a.count; ++i) {
          const double r = a.spread * std::sqrt(u(gen));
          const double phi = 2.0 * kPi * u(gen);
          pts.push_back(polar_offset(center, e1, e2, r, phi));
        }
        meta["seed"] = seed;
        meta["count"] = a.count;
        meta["spread"] = a.spread;
      }
      doc.body = convex_hull(pts);
    } else {
      throw CliError{kUsage, "unknown shape '" + a.shape + "'"};
    }
  } catch (const GeometryError& e) {
    throw CliError{kUsage, std::string("invalid parameters: ") + e.what()};
  }
  meta["center"] = point_json(center);
  doc.metadata = meta;
  write_output(a.out, serialize(doc));
  return kOk;
}

// --- measure ----------------------------------------------------------------

int cmd_measure(const std::string& path, bool as_json, bool strict, const Tolerance& tol) {
  const BodyDocument doc = load_body(path, strict);
  const Body& body = doc.body;
  ordered_json j;
  try {
    const ThicknessResult t = thickness(body, tol);
    const DiameterResult d = diameter(body);
    const CoverResult cover = min_enclosing_cap(body, tol);
    const BoundaryCover bcover = boundary_centered_cover(body);
    const ConstantWidthCheck cw = is_constant_width(body, t.thickness, tol.eps_claim);
    const ConstantDiameterCheck cd = is_constant_diameter(body, d.diameter, tol.eps_claim);
    j["kind"] = kind_name(body);
    j["thickness"] = round9(t.thickness);
    j["diameter"] = round9(d.diameter);
    j["min_enclosing_cap"] = {{"center", point_json(cover.center)}, {"radius", round9(cover.radius)}};
    j["boundary_centered_cover"] = {{"center", point_json(bcover.center)}, {"radius", round9(bcover.radius)}};
    j["constant_width"] = {{"holds", cw.holds}, {"max_deviation", round9(cw.max_deviation)}};
    j["constant_diameter"] = {{"holds", cd.holds}, {"max_deficit", round9(cd.max_deficit)}};
    try {
      j["polar_thickness"] = round9(thickness(polar(body), tol).thickness);
    } catch (const GeometryError&) {
      j["polar_thickness"] = nullptr;  // the polar of a hemisphere is a point
    }
  } catch (const GeometryError& e) {
    throw CliError{kFailed, std::string("measurement failed: ") + e.what()};
  }

  if (as_json) {
    std::cout << j.dump() << "\n";
    return kOk;
  }
  auto text = [](const ordered_json& v) -> std::string {
    if (v.is_null()) return "n/a";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) return point_text(SpherePoint(Vec3{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()}));
    return num(v.get<double>());
  };
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      for (const auto& [sub, inner] : value.items()) std::cout << key << "." << sub << ": " << text(inner) << "\n";
    } else {
      std::cout << key << ": " << text(value) << "\n";
    }
  }
  return kOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;
  std::size_t cases = 0;
  double density = 1.0;
  std::size_t search = 0;
};

int cmd_verify(const VerifyArgs& a, const Tolerance& tol) {
  std::vector<std::string> ids;
  for (const auto& s : a.suites) {
    if (s == "all") {
      ids.insert(ids.end(), suite_ids().begin(), suite_ids().end());
    } else if (is_suite_id(s)) {
      ids.push_back(s);
    } else {
      throw CliError{kUsage, "unknown suite '" + s + "'"};
    }
  }
  if (ids.empty() && a.search == 0) throw CliError{kUsage, "nothing to verify: pass --suite or --search"};
  if (!(a.density > 0.0)) throw CliError{kUsage, "--density must be positive"};
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();

  GeneratorSpec spec;
  spec.cases = a.cases;
  spec.density = a.density;
  bool all_pass = true;
  for (const auto& id : ids) {
    const SuiteReport report = run_suite(id, spec, seed, tol);
    std::cout << to_json_line(report) << std::endl;
    all_pass = all_pass && report.pass;
  }
  if (a.search > 0) {
    std::cout << to_json_line(search_constant_diameter_counterexample(seed, a.search, a.density, tol))
              << std::endl;
  }
  return all_pass ? kOk : kFailed;
}

// --- plot -------------------------------------------------------------------

struct PlotArgs {
  std::string file;
  std::string projection = "orthographic";
  std::string out;
  std::optional<std::string> lune;
  bool with_cap = false;
};

int cmd_plot(const PlotArgs& a, bool strict, const Tolerance& tol) {
  const BodyDocument doc = load_body(a.file, strict);
  PlotOptions options;
  options.projection = a.projection == "gnomonic" ? Projection::Gnomonic : Projection::Orthographic;
  options.with_cap = a.with_cap;
  try {
    if (a.lune) {
      if (a.lune->empty() || *a.lune == "auto") {
        options.lune = thickness(doc.body, tol).pair;
      } else {
        const auto poles = parse_points(*a.lune);
        if (poles.size() != 2) throw CliError{kUsage, "--with-lune expects 'kx,ky,kz;hx,hy,hz' or 'auto'"};
        options.lune = CoSupportPair{poles[0], poles[1]};
      }
    }
    write_output(a.out, plot_svg(doc.body, options));
  } catch (const GeometryError& e) {
    throw CliError{kFailed, std::string("plot failed: ") + e.what()};
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex bodies on the unit sphere: lunes, width, thickness, polars and covers"};
  app.require_subcommand(1);
  std::string config;
  bool lenient = false;
  app.add_option("--config", config, "key = value file overriding eps_alg, eps_opt, eps_claim");
  app.add_flag("--lenient", lenient, "keep unknown document fields in metadata instead of rejecting them");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a body document");
  gen_cmd->add_option("shape", gen.shape, "cap | quarter-disk | reuleaux | reduced-ngon | hull-of-points")
      ->required()
      ->check(CLI::IsMember({"cap", "quarter-disk", "reuleaux", "reduced-ngon", "hull-of-points"}));
  gen_cmd->add_option("--n", gen.n, "number of vertices (odd)");
  gen_cmd->add_option("--w", gen.w, "constant width");
  gen_cmd->add_option("--delta", gen.delta, "thickness");
  gen_cmd->add_option("--radius", gen.radius, "cap radius");
  gen_cmd->add_option("--phase", gen.phase, "rotation of the first vertex about the center");
  gen_cmd->add_option("--orientation", gen.orientation, "direction of the first radius of a quarter disk");
  gen_cmd->add_option("--center", gen.center, "center as x,y,z");
  gen_cmd->add_option("--points", gen.points, "hull input as x,y,z;x,y,z;...");
  gen_cmd->add_option("--count", gen.count, "number of random hull points")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--spread", gen.spread, "radius of the random hull point cloud");
  gen_cmd->add_option("--seed", gen.seed, "random seed (default: LUNE_SEED or 1)");
  gen_cmd->add_option("--out", gen.out, "output file (default: stdout)");

  std::string measure_file;
  bool measure_json = false;
  auto* measure_cmd = app.add_subcommand("measure", "measure a body document");
  measure_cmd->add_option("file", measure_file)->required();
  measure_cmd->add_flag("--json", measure_json, "machine-readable output");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run property suites and print JSON lines");
  verify_cmd->add_option("--suite", verify.suites, "suite id or 'all' (repeatable)");
  verify_cmd->add_option("--seed", verify.seed, "random seed (default: LUNE_SEED or 1)");
  verify_cmd->add_option("--cases", verify.cases, "cases per suite (default: suite default)");
  verify_cmd->add_option("--density", verify.density, "sampling density multiplier");
  verify_cmd->add_option("--search", verify.search, "trials of the constant-diameter counterexample search");

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plot", "draw a body document as SVG");
  plot_cmd->add_option("file", plot.file)->required();
  plot_cmd->add_option("--projection", plot.projection)
      ->check(CLI::IsMember({"orthographic", "gnomonic"}));
  plot_cmd->add_option("--out", plot.out, "output file (default: stdout)");
  plot_cmd->add_option("--with-lune", plot.lune, "overlay a lune: 'auto' or 'kx,ky,kz;hx,hy,hz'")
      ->expected(0, 1);
  plot_cmd->add_flag("--with-cap", plot.with_cap, "overlay the smallest enclosing cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Tolerance tol = config.empty() ? Tolerance{} : read_config(config);
    const bool strict = !lenient;
    if (*gen_cmd) return cmd_gen(gen);
    if (*measure_cmd) return cmd_measure(measure_file, measure_json, strict, tol);
    if (*verify_cmd) return cmd_verify(verify, tol);
    if (*plot_cmd) {
      if (plot_cmd->count("--with-lune") && !plot.lune) plot.lune = "";
      return cmd_plot(plot, strict, tol);
    }
  } catch (const CliError& e) {
    std::cerr << "lune: " << e.message << "\n";
    return e.code;
  } catch (const GeometryError& e) {
    std::cerr << "lune: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
