// Command-line front end: evaluate algebra operations and model maps, sample
// geodesic and fiber curves to CSV/JSON/SVG, dump the tensor data of the
// projective model, and run the seeded verification suites.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
// failure. Payload goes to stdout (or --out FILE), diagnostics to stderr.
// Reals are serialized with 17 significant digits, so every printed value
// parses back to the exact double that produced it.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "degenspace/algebra.hpp"
#include "degenspace/bundle.hpp"
#include "degenspace/conformal.hpp"
#include "degenspace/projective.hpp"
#include "degenspace/verify.hpp"

namespace {

using namespace degenspace;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // canonicalize -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "\\u%04x", c);
      out += buf;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<double> parse_reals(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size() || !std::isfinite(v)) {
      throw UsageError(std::string("expected comma-separated reals for ") + what + ", got '" +
                       text + "'");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (values.size() != expected) {
    throw UsageError(std::string(what) + " needs " + std::to_string(expected) +
                     " comma-separated reals, got " + std::to_string(values.size()));
  }
  return values;
}

Element parse_element(const std::string& text, const char* what) {
  const std::vector<double> v = parse_reals(text, 3, what);
  return {v[0], v[1], v[2]};
}

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

Range parse_range(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError("--range expects lo:hi, got '" + text + "'");
  }
  const std::string a = text.substr(0, colon);
  const std::string b = text.substr(colon + 1);
  char* end = nullptr;
  const double lo = std::strtod(a.c_str(), &end);
  if (a.empty() || end != a.c_str() + a.size()) throw UsageError("bad range start '" + a + "'");
  const double hi = std::strtod(b.c_str(), &end);
  if (b.empty() || end != b.c_str() + b.size()) throw UsageError("bad range end '" + b + "'");
  if (!(lo <= hi)) throw UsageError("--range needs lo <= hi");
  return {lo, hi};
}

std::vector<double> sample_range(const Range& r, int samples) {
  if (samples < 1) throw UsageError("--samples must be >= 1");
  std::vector<double> out;
  out.reserve(samples);
  if (samples == 1) {
    out.push_back(r.lo);
    return out;
  }
  const double step = (r.hi - r.lo) / (samples - 1);
  for (int i = 0; i < samples; ++i) out.push_back(r.lo + i * step);
  return out;
}

// Table of named real columns, the shared payload of the curve commands.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += format_real(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  std::string out = "[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += r == 0 ? "" : ",";
    out += "\n  {";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (i > 0) out += ",";
      out += "\"" + t.columns[i] + "\":" + format_real(t.rows[r][i]);
    }
    out += "}";
  }
  out += "\n]\n";
  return out;
}

std::string to_svg(const Table& t) {
  if (t.columns.size() != 2) {
    throw UsageError("svg output needs a two-column curve; use csv or json");
  }
  const double width = 640.0, height = 480.0;
  const double mx = 0.05 * width, my = 0.05 * height;
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double x = t.rows[i][0], y = t.rows[i][1];
    if (i == 0) {
      xmin = xmax = x;
      ymin = ymax = y;
    } else {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  const double sx = xmax > xmin ? (width - 2.0 * mx) / (xmax - xmin) : 0.0;
  const double sy = ymax > ymin ? (height - 2.0 * my) / (ymax - ymin) : 0.0;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n";
  // Screen transform (y axis flipped); sx or sy = 0 pins a degenerate axis
  // to the midline.
  out += "<!-- px = " + format_real(mx) + " + (x - " + format_real(xmin) + ") * " +
         format_real(sx) + "; py = " + format_real(height) + " - (" + format_real(my) +
         " + (y - " + format_real(ymin) + ") * " + format_real(sy) + ") -->\n";
  out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double x = t.rows[i][0], y = t.rows[i][1];
    const double px = sx > 0.0 ? mx + (x - xmin) * sx : width / 2.0;
    const double py = sy > 0.0 ? height - (my + (y - ymin) * sy) : height / 2.0;
    if (i > 0) out += ' ';
    out += format_real(px) + "," + format_real(py);
  }
  out += "\"/>\n</svg>\n";
  return out;
}

std::string render_table(const Table& t, const std::string& format) {
  if (format == "csv") return to_csv(t);
  if (format == "json") return to_json(t);
  if (format == "svg") return to_svg(t);
  throw UsageError("unknown format '" + format + "' (csv|json|svg)");
}

void write_payload(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + out_path + "'");
  f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

std::string json_element(const Element& e) {
  return "{\"x0\":" + format_real(e.x0) + ",\"x1\":" + format_real(e.x1) +
         ",\"x2\":" + format_real(e.x2) + "}\n";
}

std::string json_homogeneous(const HomogeneousPoint& p) {
  return "{\"y0\":" + format_real(p.y0) + ",\"y1\":" + format_real(p.y1) +
         ",\"y2\":" + format_real(p.y2) + ",\"y3\":" + format_real(p.y3) + "}\n";
}

// ---------------------------------------------------------------------------
// subcommand handlers

struct EvalArgs {
  std::string subop;
  std::string lhs;
  std::string rhs;
  std::string out;
};

int run_eval(const EvalArgs& a, bool rhs_given) {
  const bool binary = a.subop == "mul" || a.subop == "bilinear";
  if (binary && !rhs_given) throw UsageError("eval " + a.subop + " needs --rhs");
  if (!binary && rhs_given) throw UsageError("eval " + a.subop + " takes only --lhs");
  const Element lhs = parse_element(a.lhs, "--lhs");
  std::string payload;
  if (a.subop == "mul") {
    payload = json_element(mul(lhs, parse_element(a.rhs, "--rhs")));
  } else if (a.subop == "bilinear") {
    payload = format_real(bilinear(lhs, parse_element(a.rhs, "--rhs"))) + "\n";
  } else if (a.subop == "inv") {
    payload = json_element(inverse(lhs));
  } else if (a.subop == "conj") {
    payload = json_element(conj(lhs));
  } else {  // norm
    payload = format_real(norm_sq(lhs)) + "\n";
  }
  write_payload(payload, a.out);
  return 0;
}

struct MapArgs {
  std::string kind;
  std::string point;
  std::string out;
};

int run_map(const MapArgs& a) {
  std::string payload;
  if (a.kind == "stereo") {
    const PlanePoint p = stereo_to_plane(parse_element(a.point, "--point"));
    if (p.is_ideal()) {
      payload = p.line ? "{\"ideal\":true,\"line\":" + format_real(*p.line) + "}\n"
                       : "{\"ideal\":true}\n";
    } else {
      payload = "{\"x\":" + format_real(p.x) + ",\"y\":" + format_real(p.y) + "}\n";
    }
  } else if (a.kind == "stereo-inv") {
    const std::vector<double> v = parse_reals(a.point, 2, "--point");
    payload = json_element(stereo_from_plane(PlanePoint::finite(v[0], v[1])));
  } else if (a.kind == "adapted") {
    const std::vector<double> v = parse_reals(a.point, 2, "--point");
    const SpherePoint s = adapted_from_plane(PlanePoint::finite(v[0], v[1]));
    payload = "{\"eps\":" + format_real(s.eps) + ",\"u\":" + format_real(s.u) +
              ",\"phi\":" + format_real(s.phi) + "}\n";
  } else if (a.kind == "proj-stereo") {
    const std::vector<double> v = parse_reals(a.point, 2, "--point");
    payload = json_homogeneous(proj_stereo({v[0], v[1]}).normalized());
  } else {  // weierstrass: the scale is the point, so print it unnormalized
    const std::vector<double> v = parse_reals(a.point, 2, "--point");
    payload = json_homogeneous(weierstrass({v[0], v[1]}));
  }
  write_payload(payload, a.out);
  return 0;
}

struct GeodesicArgs {
  std::string model = "projective";
  double A = 0.0, B = 0.0;
  double vertical = 0.0;
  std::string through;
  std::string range;
  int samples = 100;
  std::string format = "csv";
  std::string out;
};

int run_geodesic(const GeodesicArgs& a, bool a_given, bool b_given, bool vertical_given,
                 bool through_given) {
  if (a.model != "projective") throw UsageError("only --model projective is available");
  const int forms = ((a_given || b_given) ? 1 : 0) + (vertical_given ? 1 : 0) +
                    (through_given ? 1 : 0);
  if (forms != 1) {
    throw UsageError("give exactly one of --A/--B, --vertical, or --through");
  }
  GeodesicCoeffs coeffs;
  if (a_given || b_given) {
    if (!(a_given && b_given)) throw UsageError("--A and --B go together");
    coeffs = GeodesicCoeffs::graph(a.A, a.B);
  } else if (vertical_given) {
    coeffs = GeodesicCoeffs::vertical(a.vertical);
  } else {
    const std::vector<double> v = parse_reals(a.through, 4, "--through");
    coeffs = geodesic_through({v[0], v[1]}, {v[2], v[3]});
  }
  const std::vector<double> params = sample_range(parse_range(a.range), a.samples);
  Table t;
  t.columns = {"x1", "x2"};
  if (coeffs.form == GeodesicCoeffs::Form::graph) {
    for (const double x1 : params) {
      t.rows.push_back({x1, coeffs.A * (x1 * x1 - 1.0) + coeffs.B * x1});
    }
  } else {
    // Vertical line: the range sweeps x2.
    for (const double x2 : params) {
      t.rows.push_back({coeffs.x1, x2});
    }
  }
  write_payload(render_table(t, a.format), a.out);
  return 0;
}

struct FiberArgs {
  std::string model;
  double param = 0.0;
  double lambda = 1.0;
  std::string range;
  int samples = 100;
  std::string format = "csv";
  std::string out;
};

int run_fiber(const FiberArgs& a) {
  const std::vector<double> params = sample_range(parse_range(a.range), a.samples);
  Table t;
  if (a.model == "conformal") {
    t.columns = {"x", "y"};
    for (const double x : params) t.rows.push_back({x, fiber_image(a.param, x)});
  } else if (a.model == "projective") {
    t.columns = {"x1", "x2"};
    for (const double x1 : params) t.rows.push_back({x1, projective_fiber_image(a.param, x1)});
  } else if (a.model == "group") {
    // Space curve on the fiber {u(x0+x1) = x2}: phi sweeps the range at
    // fixed lambda.
    if (a.format == "svg") throw UsageError("group fibers are space curves; use csv or json");
    if (a.lambda == 0.0) throw UsageError("--lambda must be nonzero");
    t.columns = {"x0", "x1", "x2"};
    for (const double phi : params) {
      const Element x = from_adapted({Chart::timelike, a.param, a.lambda, phi});
      t.rows.push_back({x.x0, x.x1, x.x2});
    }
  } else {
    throw UsageError("unknown fiber model '" + a.model + "' (group|conformal|projective)");
  }
  write_payload(render_table(t, a.format), a.out);
  return 0;
}

struct TensorArgs {
  double x1 = 0.0;
  double x2 = 0.0;
  std::string out;
};

int run_tensors(const TensorArgs& a) {
  const ChartPoint c{a.x1, a.x2};
  const ConnectionData k = christoffel(c);
  const CurvatureData cur = curvature(c);
  std::string payload = "{\"g11\":" + format_real(k.g11) +
                        ",\"christoffel\":{\"G111\":" + format_real(k.gamma1_11) +
                        ",\"G212\":" + format_real(k.gamma2_12) +
                        ",\"G211\":" + format_real(k.gamma2_11) +
                        "},\"curvature\":{\"R2_121\":" + format_real(cur.r2_121) +
                        "},\"ricci\":{\"R11\":" + format_real(cur.ricci_11) + "}}\n";
  write_payload(payload, a.out);
  return 0;
}

struct VerifyArgs {
  std::uint64_t seed = 42;
  long trials = 1000;
  Tolerances tol;
  std::string out;
};

std::string render_report(const VerifyReport& rep) {
  std::string out = "{\n";
  out += "  \"seed\": " + std::to_string(rep.seed) + ",\n";
  out += "  \"trials\": " + std::to_string(rep.trials) + ",\n";
  out += std::string("  \"all_pass\": ") + (rep.all_pass ? "true" : "false") + ",\n";
  out += "  \"suites\": [\n";
  for (std::size_t i = 0; i < rep.suites.size(); ++i) {
    const SuiteResult& s = rep.suites[i];
    out += "    {\"name\": \"" + s.name + "\", \"cases\": " + std::to_string(s.cases) +
           ", \"max_residual\": " + format_real(s.max_residual) +
           ", \"tolerance\": " + format_real(s.tolerance) +
           ", \"pass\": " + (s.pass ? "true" : "false");
    if (!s.pass) {
      out += ", \"worst_case\": \"" + json_escape(s.worst_case) + "\"";
    }
    out += i + 1 < rep.suites.size() ? "},\n" : "}\n";
  }
  out += "  ]\n}\n";
  return out;
}

int run_verify(const VerifyArgs& a) {
  if (a.trials < 1) throw UsageError("--trials must be >= 1");
  const VerifyReport rep = run_verification(a.seed, a.trials, a.tol);
  write_payload(render_report(rep), a.out);
  if (!rep.all_pass) {
    std::cerr << "degenspace: verification failed\n";
    return 3;
  }
  return 0;
}

std::uint64_t seed_from_environment() {
  const char* env = std::getenv("DEGENSPACE_SEED");
  if (env == nullptr || *env == '\0') return 42;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw UsageError(std::string("DEGENSPACE_SEED is not an integer: '") + env + "'");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degenspace: a 3-dimensional associative algebra, its degenerate "
               "pseudo-Euclidean space, and the conformal and projective models "
               "of its unit sphere"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate an algebra operation");
  eval->add_option("subop", eval_args.subop, "mul|inv|conj|bilinear|norm")
      ->required()
      ->check(CLI::IsMember({"mul", "inv", "conj", "bilinear", "norm"}));
  eval->add_option("--lhs", eval_args.lhs, "element x0,x1,x2")->required();
  auto* eval_rhs = eval->add_option("--rhs", eval_args.rhs, "element x0,x1,x2");
  eval->add_option("--out", eval_args.out, "write payload to FILE");

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "apply a model map to a point");
  map->add_option("kind", map_args.kind, "stereo|stereo-inv|adapted|proj-stereo|weierstrass")
      ->required()
      ->check(CLI::IsMember({"stereo", "stereo-inv", "adapted", "proj-stereo", "weierstrass"}));
  map->add_option("--point", map_args.point, "comma-separated coordinates")->required();
  map->add_option("--out", map_args.out, "write payload to FILE");

  GeodesicArgs geo_args;
  auto* geo = app.add_subcommand("geodesic", "sample a projective-model geodesic");
  geo->add_option("--model", geo_args.model, "projective (default)");
  auto* geo_a = geo->add_option("--A", geo_args.A, "graph coefficient A");
  auto* geo_b = geo->add_option("--B", geo_args.B, "graph coefficient B");
  auto* geo_v = geo->add_option("--vertical", geo_args.vertical, "vertical line x1");
  auto* geo_t = geo->add_option("--through", geo_args.through, "two points x1,x2,x1',x2'");
  geo->add_option("--range", geo_args.range, "sampling range lo:hi")->required();
  geo->add_option("--samples", geo_args.samples, "number of samples (default 100)");
  geo->add_option("--format", geo_args.format, "csv|json|svg (default csv)");
  geo->add_option("--out", geo_args.out, "write payload to FILE");

  FiberArgs fiber_args;
  auto* fiber = app.add_subcommand("fiber", "sample a fiber curve of one of the bundles");
  fiber->add_option("--model", fiber_args.model, "group|conformal|projective")->required();
  fiber->add_option("--param", fiber_args.param, "fiber parameter (u, c, or v)")->required();
  fiber->add_option("--lambda", fiber_args.lambda, "fiber slice lambda for the group model");
  fiber->add_option("--range", fiber_args.range, "sampling range lo:hi")->required();
  fiber->add_option("--samples", fiber_args.samples, "number of samples (default 100)");
  fiber->add_option("--format", fiber_args.format, "csv|json|svg (default csv)");
  fiber->add_option("--out", fiber_args.out, "write payload to FILE");

  TensorArgs tensor_args;
  auto* tensors = app.add_subcommand("tensors", "metric, connection, and curvature at a point");
  tensors->add_option("--x1", tensor_args.x1, "chart coordinate x1")->required();
  tensors->add_option("--x2", tensor_args.x2, "chart coordinate x2")->required();
  tensors->add_option("--out", tensor_args.out, "write payload to FILE");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the seeded verification suites");
  auto* verify_seed = verify->add_option("--seed", verify_args.seed,
                                         "sampler seed (default: DEGENSPACE_SEED or 42)");
  verify->add_option("--trials", verify_args.trials, "random cases per suite (default 1000)");
  verify->add_option("--tol-exact", verify_args.tol.exact_rel, "round-off identity tolerance");
  verify->add_option("--tol-algebraic", verify_args.tol.algebraic_rel,
                     "algebraic identity tolerance");
  verify->add_option("--tol-fd", verify_args.tol.fd_abs, "finite-difference tolerance");
  verify->add_option("--fd-step", verify_args.tol.fd_step, "central-difference step");
  verify->add_option("--tol-ode", verify_args.tol.ode_abs, "integrator tolerance");
  verify->add_option("--out", verify_args.out, "write payload to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(eval)) return run_eval(eval_args, eval_rhs->count() > 0);
    if (app.got_subcommand(map)) return run_map(map_args);
    if (app.got_subcommand(geo)) {
      return run_geodesic(geo_args, geo_a->count() > 0, geo_b->count() > 0,
                          geo_v->count() > 0, geo_t->count() > 0);
    }
    if (app.got_subcommand(fiber)) return run_fiber(fiber_args);
    if (app.got_subcommand(tensors)) return run_tensors(tensor_args);
    if (app.got_subcommand(verify)) {
      if (verify_seed->count() == 0) verify_args.seed = seed_from_environment();
      return run_verify(verify_args);
    }
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    std::cerr << "degenspace: usage error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "degenspace: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "degenspace: usage error: " << e.what() << "\n";
    return 1;
  }
}
