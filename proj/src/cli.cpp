#include "descartes/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "descartes/disk_geometry.hpp"
#include "descartes/enumerator.hpp"
#include "descartes/error.hpp"
#include "descartes/quadruples.hpp"
#include "descartes/render_svg.hpp"
#include "descartes/tessellation.hpp"

namespace descartes::cli {

namespace {

std::vector<Rational> parse_list(const std::string& text, std::size_t count) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
  if (out.size() != count) {
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(count) + " comma-separated values, got '" + text + "'");
  }
  return out;
}

std::string join(const std::array<Rational, 3>& v, const char* sep = " ") {
  return v[0].to_string() + sep + v[1].to_string() + sep + v[2].to_string();
}

std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double default_tolerance() {
  if (const char* env = std::getenv("DESCARTES_TOLERANCE")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
    throw std::invalid_argument("DESCARTES_TOLERANCE must be a positive number");
  }
  return kDefaultTolerance;
}

// Places the positive entries first, realizes the remaining one, and returns
// the disks in input order.
std::array<PlacedDisk, 4> realize_in_input_order(const std::vector<Rational>& q, double tol) {
  std::array<std::size_t, 4> idx = {0, 1, 2, 3};
  std::stable_partition(idx.begin(), idx.end(), [&](std::size_t i) { return q[i].sign() > 0; });
  for (std::size_t i : idx) {
    if (q[i].is_zero()) throw Error(ErrorKind::ZeroCurvature, "curvature 0 (a line) cannot be realized");
  }
  const auto placed = realize_quadruple(q[idx[0]], q[idx[1]], q[idx[2]], q[idx[3]], tol);
  std::array<PlacedDisk, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[idx[k]] = placed[k];
  return out;
}

int cmd_tess(const Spinor& a, const Spinor& b, bool json, const std::string& svg_path, std::ostream& out) {
  const auto t = build_tessellation(a, b);
  const auto r = summarize(t);
  if (!svg_path.empty()) write_file_atomic(svg_path, render_tessellation(t));
  if (json) {
    out << to_json(t).dump(2) << '\n';
    return kExitOk;
  }
  out << "a = " << t.a.to_string() << "   b = " << t.b.to_string() << "   c = " << t.c.to_string() << '\n'
      << "squares |a|^2 |b|^2 |c|^2       : " << join(r.square_areas) << '\n'
      << "red tiles A B C                 : " << join(r.red_areas) << '\n'
      << "green tiles G                   : " << r.green_area << '\n'
      << "light-red tiles                 : " << join(r.light_red_areas) << '\n'
      << "D  = A+B+C + 2G                 : " << r.curvature_D << '\n'
      << "D' = A+B+C - 2G                 : " << r.curvature_Dprime << '\n'
      << "mid-circle (ABC)                : " << r.midcircle_ABC << '\n'
      << "mid-circles (ABD) (BCD) (CAD)   : " << join(r.midcircles_with_D) << '\n'
      << "mid-circles (ABD') (BCD') (CAD'): " << join(r.midcircles_with_Dprime) << '\n'
      << "butterflies                     : " << join(butterfly_areas(t)) << '\n'
      << "descartes residual D, D'        : " << r.descartes_residual_D << ", " << r.descartes_residual_Dprime << '\n'
      << "overlapping tiles               : " << (r.has_overlap ? "yes" : "no") << '\n';
  for (const auto& obs : check_observations(t)) {
    out << "observation " << std::left << std::setw(34) << obs.name << (obs.passed ? "pass" : "FAIL") << "  "
        << obs.witness << '\n';
  }
  return kExitOk;
}

int cmd_solve(const std::string& curvatures, bool json, std::ostream& out) {
  const auto c = parse_list(curvatures, 3);
  const auto roots = fourth_curvatures(c[0], c[1], c[2]);
  if (json) {
    nlohmann::json j = {{"exact", roots.exact}};
    if (roots.exact) {
      j["D1"] = roots.larger_exact->to_string();
      j["D2"] = roots.smaller_exact->to_string();
    } else {
      j["D1"] = roots.larger;
      j["D2"] = roots.smaller;
    }
    out << j.dump(2) << '\n';
  } else if (roots.exact) {
    out << roots.larger_exact->to_string() << ", " << roots.smaller_exact->to_string() << " (exact)\n";
  } else {
    out << std::setprecision(17) << roots.larger << ", " << roots.smaller << " (approximate)\n";
  }
  return kExitOk;
}

int cmd_quad(const Spinor& a, const Spinor& b, bool json, std::ostream& out) {
  const auto family = from_spinor_pair(a, b);
  if (json) {
    out << to_json(family).dump(2) << '\n';
    return kExitOk;
  }
  out << "A,B,C = " << family.quadruple_1.A << "," << family.quadruple_1.B << "," << family.quadruple_1.C << '\n'
      << "D1 = " << family.D1() << "   quadruple " << family.quadruple_1.to_string() << "   residual "
      << descartes_residual(family.quadruple_1) << '\n'
      << "D2 = " << family.D2() << "   quadruple " << family.quadruple_2.to_string() << "   residual "
      << descartes_residual(family.quadruple_2) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& curvatures, double tol, bool json, const std::string& svg_path, std::ostream& out) {
  const auto q = parse_list(curvatures, 4);
  const auto disks = realize_in_input_order(q, tol);
  const auto report = verify_spinor_laws(disks, tol);
  if (!svg_path.empty()) {
    RenderOptions o;
    o.show_midcircles = true;
    write_file_atomic(svg_path, render_configuration({disks.begin(), disks.end()}, all_midcircles(disks, tol), o));
  }
  if (json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << "quadruple " << curvatures << "   descartes residual "
        << descartes_residual(q[0], q[1], q[2], q[3]) << '\n';
    for (const auto& d : report.disks) {
      out << "disk " << std::setw(8) << d.label << "  center (" << format_coordinate(d.center.x) << ", "
          << format_coordinate(d.center.y) << ")  radius " << format_coordinate(d.radius) << '\n';
    }
    for (const auto& s : report.spinors) {
      out << "spinor " << s.from << "->" << s.to << "  (" << format_coordinate(s.u.x) << ", "
          << format_coordinate(s.u.y) << ")\n";
    }
    for (const auto& [law, residual] : report.law_residuals) {
      out << std::left << std::setw(10) << law << ' ' << scientific(residual) << "  "
          << (residual <= tol ? "pass" : "FAIL") << '\n';
    }
    out << "tolerance " << scientific(tol) << "  " << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  return report.passed() ? kExitOk : kExitFailure;
}

EnumerationJob parse_enumeration(std::int64_t bound, bool primitive, const std::string& format,
                                 const std::string& shard, bool include_zero, unsigned threads) {
  EnumerationJob job;
  job.bound = bound;
  job.primitive_only = primitive;
  job.include_zero = include_zero;
  job.threads = threads;
  if (format == "csv") {
    job.format = OutputFormat::Csv;
  } else if (format == "jsonl") {
    job.format = OutputFormat::JsonLines;
  } else {
    throw std::invalid_argument("--format must be csv or jsonl");
  }
  if (!shard.empty()) {
    const auto slash = shard.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("--shard expects i/k");
    job.shard_index = std::stoll(shard.substr(0, slash));
    job.shard_count = std::stoll(shard.substr(slash + 1));
  }
  job.validate();
  return job;
}

int cmd_enumerate(const EnumerationJob& job, const std::string& out_path, std::ostream& out) {
  const std::string text = format_records(enumerate(job), job.format);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file_atomic(out_path, text);
  }
  return kExitOk;
}

int cmd_render(const std::string& in_path, const std::string& out_path, bool midcircles, bool labels, int width) {
  const auto doc = nlohmann::json::parse(read_file(in_path));
  RenderOptions o;
  o.width_px = width;
  o.show_labels = labels;
  o.show_midcircles = midcircles;
  std::string svg;
  if (doc.contains("tiles")) {
    const auto t = build_tessellation(Spinor::parse(doc.at("a").get<std::string>()),
                                      Spinor::parse(doc.at("b").get<std::string>()));
    svg = render_tessellation(t, o);
  } else if (doc.contains("disks")) {
    std::vector<PlacedDisk> disks;
    for (const auto& d : doc.at("disks")) disks.push_back(placed_disk_from_json(d));
    std::vector<PlacedDisk> mids;
    if (midcircles && disks.size() == 4) {
      mids = all_midcircles({disks[0], disks[1], disks[2], disks[3]}, doc.value("tolerance", kDefaultTolerance));
    }
    svg = render_configuration(disks, mids, o);
  } else {
    throw Error(ErrorKind::ParseError, in_path + " is neither a tessellation nor a configuration document");
  }
  write_file_atomic(out_path, svg);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Descartes configurations and their dodecagonal tessellations", "descartes"};
  app.require_subcommand(1, 1);

  std::string a_text, b_text, curvatures, svg_path, out_path, in_path, format = "csv", shard;
  bool json = false, primitive = false, include_zero = false, midcircles = false, no_labels = false;
  double tolerance = 0.0;
  std::int64_t bound = 0;
  unsigned threads = 1;
  int width = 512;

  auto* tess = app.add_subcommand("tess", "build the 15-tile tessellation of two spinors");
  tess->add_option("--a", a_text, "spinor a as x,y")->required();
  tess->add_option("--b", b_text, "spinor b as x,y")->required();
  tess->add_flag("--json", json, "print the tessellation document");
  tess->add_option("--svg", svg_path, "also write an SVG picture");

  auto* solve = app.add_subcommand("solve", "both fourth curvatures of three tangent disks");
  solve->add_option("--curvatures", curvatures, "A,B,C")->required();
  solve->add_flag("--json", json);

  auto* quad = app.add_subcommand("quad", "integral Descartes family of two spinors");
  quad->add_option("--a", a_text, "spinor a as x,y")->required();
  quad->add_option("--b", b_text, "spinor b as x,y")->required();
  quad->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "realize a quadruple and check the spinor laws");
  verify->add_option("--curvatures", curvatures, "A,B,C,D")->required();
  verify->add_option("--tolerance", tolerance, "residual tolerance (default 1e-9 or $DESCARTES_TOLERANCE)");
  verify->add_flag("--json", json);
  verify->add_option("--svg", svg_path, "also write an SVG picture with mid-circles");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "integral quadruples over a spinor window");
  enumerate_cmd->add_option("--bound", bound, "max |component|")->required();
  enumerate_cmd->add_flag("--primitive", primitive, "emit primitive quadruples only");
  enumerate_cmd->add_option("--out", out_path, "output file (stdout if omitted)");
  enumerate_cmd->add_option("--format", format, "csv or jsonl");
  enumerate_cmd->add_option("--shard", shard, "i/k: the i-th of k contiguous parts");
  enumerate_cmd->add_flag("--include-zero", include_zero, "keep pairs with a zero spinor");
  enumerate_cmd->add_option("--threads", threads, "worker threads");

  auto* render = app.add_subcommand("render", "SVG from a tess --json or verify --json document");
  render->add_option("--from-json", in_path)->required();
  render->add_option("--out", out_path)->required();
  render->add_flag("--midcircles", midcircles);
  render->add_flag("--no-labels", no_labels);
  render->add_option("--width", width, "width in pixels (>= 64)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (tess->parsed()) return cmd_tess(Spinor::parse(a_text), Spinor::parse(b_text), json, svg_path, out);
    if (solve->parsed()) return cmd_solve(curvatures, json, out);
    if (quad->parsed()) return cmd_quad(Spinor::parse(a_text), Spinor::parse(b_text), json, out);
    if (verify->parsed()) {
      const double tol = tolerance > 0.0 ? tolerance : default_tolerance();
      const int code = cmd_verify(curvatures, tol, json, svg_path, out);
      if (code != kExitOk) err << "verification failed: residual above tolerance\n";
      return code;
    }
    if (enumerate_cmd->parsed()) {
      return cmd_enumerate(parse_enumeration(bound, primitive, format, shard, include_zero, threads), out_path, out);
    }
    if (render->parsed()) return cmd_render(in_path, out_path, midcircles, !no_labels, width);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? kExitUsage : kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "ParseError: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace descartes::cli
