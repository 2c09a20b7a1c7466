#include "descartes/disk_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "descartes/error.hpp"

namespace descartes {

namespace {

using cplx = std::complex<double>;

cplx as_complex(Point p) { return {p.x, p.y}; }
Point as_point(cplx z) { return {z.real(), z.imag()}; }

std::string disk_name(const PlacedDisk& d) {
  if (!d.label.empty()) return d.label;
  std::ostringstream os;
  os.precision(12);
  os << d.curvature;
  return os.str();
}

bool tangent_within(const PlacedDisk& d1, const PlacedDisk& d2, double tol) {
  const double dist = std::abs(as_complex(d2.center) - as_complex(d1.center));
  const double expected = std::abs(d1.radius + d2.radius);
  return std::abs(dist - expected) <= tol * std::max(1.0, std::abs(d1.radius) + std::abs(d2.radius));
}

// Residual normalized as absolute up to magnitude 1, relative above.
double scaled(double diff, double magnitude) { return std::abs(diff) / std::max(1.0, std::abs(magnitude)); }

struct SignSearch {
  double residual = std::numeric_limits<double>::infinity();
  std::vector<int> signs;
};

// min over sign patterns (first sign fixed to +1) of |sum s_i v_i|.
SignSearch min_signed_sum(const std::vector<cplx>& v) {
  SignSearch best;
  double scale = 0.0;
  for (const auto& z : v) scale = std::max(scale, std::abs(z));
  const std::size_t free_bits = v.size() - 1;
  for (unsigned mask = 0; mask < (1u << free_bits); ++mask) {
    std::vector<int> signs{1};
    cplx sum = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) {
      const int s = (mask >> (i - 1)) & 1u ? -1 : 1;
      signs.push_back(s);
      sum += static_cast<double>(s) * v[i];
    }
    const double r = scaled(std::abs(sum), scale);
    if (r < best.residual) {
      best.residual = r;
      best.signs = std::move(signs);
    }
  }
  return best;
}

// Both intersection points of circles (c1, r1) and (c2, r2).
std::array<cplx, 2> circle_intersections(cplx c1, double r1, cplx c2, double r2) {
  const cplx delta = c2 - c1;
  const double d = std::abs(delta);
  const double along = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
  double h_sq = r1 * r1 - along * along;
  // Touching circles can land slightly negative after rounding.
  if (h_sq < 0.0 && h_sq > -1e-9 * std::max(1.0, r1 * r1)) h_sq = 0.0;
  const double h = std::sqrt(h_sq);
  const cplx unit = delta / d;
  const cplx base = c1 + along * unit;
  const cplx normal = unit * cplx(0.0, 1.0);
  return {base + h * normal, base - h * normal};
}

cplx tangency_point(const PlacedDisk& di, const PlacedDisk& dj) {
  // Signed radii make this correct for internal tangency as well.
  const cplx ci = as_complex(di.center);
  const cplx cj = as_complex(dj.center);
  return ci + di.radius * (cj - ci) / (di.radius + dj.radius);
}

// Curvature of the circle through p, q, s; 0 for collinear points.
std::pair<cplx, double> circumcircle(cplx p, cplx q, cplx s, bool& collinear) {
  const double ax = p.real(), ay = p.imag();
  const double bx = q.real(), by = q.imag();
  const double cx = s.real(), cy = s.imag();
  const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  const double span = std::max({std::abs(q - p), std::abs(s - p), std::abs(s - q)});
  collinear = std::abs(d) <= 1e-14 * span * span;
  if (collinear) return {cplx{}, 0.0};
  const double a2 = ax * ax + ay * ay;
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const cplx center((a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d,
                    (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d);
  return {center, std::abs(center - p)};
}

constexpr std::array<std::array<int, 3>, 4> kTriples = {{{0, 1, 2}, {0, 1, 3}, {1, 2, 3}, {2, 0, 3}}};

}  // namespace

Symbol Symbol::from_disk(const Rational& center_x, const Rational& center_y, const Rational& curvature) {
  if (curvature.is_zero()) throw Error(ErrorKind::ZeroCurvature, "a symbol needs a nonzero curvature");
  return {center_x * curvature, center_y * curvature, curvature};
}

PythTriple symbol_join(const Symbol& s1, const Symbol& s2) {
  if (s1.beta.is_zero() || s2.beta.is_zero()) throw Error(ErrorKind::ZeroCurvature, "symbol with beta = 0");
  const Rational dx = s2.center_x() - s1.center_x();
  const Rational dy = s2.center_y() - s1.center_y();
  const Rational rsum = s1.radius() + s2.radius();
  if (dx * dx + dy * dy != rsum * rsum) {
    throw Error(ErrorKind::NotTangent, "|c1-c2|^2 = " + (dx * dx + dy * dy).to_string() +
                                           " but (r1+r2)^2 = " + (rsum * rsum).to_string());
  }
  return {s1.beta * s2.x_dot - s2.beta * s1.x_dot, s1.beta * s2.y_dot - s2.beta * s1.y_dot, s1.beta + s2.beta};
}

PlacedDisk PlacedDisk::from_curvature(Point center, double curvature, std::string label) {
  return {center, 1.0 / curvature, curvature, std::move(label)};
}

TangencySpinorNumeric tangency_spinor(const PlacedDisk& d1, const PlacedDisk& d2, double tol) {
  if (d1.radius == 0.0 || d2.radius == 0.0) throw Error(ErrorKind::ZeroRadius, "tangency spinor of a point");
  if (!tangent_within(d1, d2, tol)) {
    throw Error(ErrorKind::NotTangent, "disks " + disk_name(d1) + " and " + disk_name(d2));
  }
  const cplx z = as_complex(d2.center) - as_complex(d1.center);
  cplx u = std::sqrt(z / (d1.radius * d2.radius));
  if (u.real() < 0.0 || (u.real() == 0.0 && u.imag() < 0.0)) u = -u;
  return {as_point(u), disk_name(d1), disk_name(d2)};
}

std::array<PlacedDisk, 3> place_configuration(const Rational& a, const Rational& b, const Rational& c) {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0) {
    throw Error(ErrorKind::NonPositiveCurvature,
                "placement needs A,B,C > 0, got " + a.to_string() + "," + b.to_string() + "," + c.to_string());
  }
  const double ra = (Rational(1) / a).to_double();
  const double rb = (Rational(1) / b).to_double();
  const double rc = (Rational(1) / c).to_double();
  const double ab = ra + rb;
  const double along = ((ra + rc) * (ra + rc) - (rb + rc) * (rb + rc) + ab * ab) / (2.0 * ab);
  const double height = std::sqrt(std::max(0.0, (ra + rc) * (ra + rc) - along * along));
  return {{
      {{0.0, 0.0}, ra, a.to_double(), a.to_string()},
      {{ab, 0.0}, rb, b.to_double(), b.to_string()},
      {{along, height}, rc, c.to_double(), c.to_string()},
  }};
}

PlacedDisk realize_fourth(const std::array<PlacedDisk, 3>& placed, const Rational& d, double tol) {
  if (d.is_zero()) throw Error(ErrorKind::ZeroCurvature, "a curvature-0 disk is a line");
  const double rd = (Rational(1) / d).to_double();
  const double kd = d.to_double();
  const auto& [da, db, dc] = placed;

  // Two-circle intersection loses accuracy when the new centre is nearly on
  // the line through A and B (the root of a tiny h^2). The complex Descartes
  // relation k_D z_D = sum k z +- 2 sqrt(sum k k' z z') is stable there, so
  // both families are tried and the best fit wins.
  std::vector<cplx> candidates;
  for (const auto& c : circle_intersections(as_complex(da.center), std::abs(da.radius + rd), as_complex(db.center),
                                            std::abs(db.radius + rd))) {
    candidates.push_back(c);
  }
  const cplx wa = da.curvature * as_complex(da.center);
  const cplx wb = db.curvature * as_complex(db.center);
  const cplx wc = dc.curvature * as_complex(dc.center);
  const cplx root = 2.0 * std::sqrt(wa * wb + wb * wc + wc * wa);
  candidates.push_back((wa + wb + wc + root) / kd);
  candidates.push_back((wa + wb + wc - root) / kd);

  double best_err = std::numeric_limits<double>::infinity();
  cplx best{};
  for (const auto& cand : candidates) {
    double err = 0.0;
    for (const PlacedDisk* x : {&da, &db, &dc}) {
      const double miss = std::abs(std::abs(cand - as_complex(x->center)) - std::abs(x->radius + rd));
      err = std::max(err, miss / std::max(1.0, std::abs(x->radius) + std::abs(rd)));
    }
    if (err < best_err) {
      best_err = err;
      best = cand;
    }
  }
  if (!(best_err <= tol)) {
    std::ostringstream miss;
    miss << best_err;
    throw Error(ErrorKind::NoConsistentPlacement,
                "no disk of curvature " + d.to_string() + " is tangent to all three (miss " + miss.str() + ")");
  }
  return {as_point(best), rd, kd, d.to_string()};
}

PlacedDisk midcircle_through_tangencies(const PlacedDisk& d1, const PlacedDisk& d2, const PlacedDisk& d3, double tol) {
  for (const auto& [p, q] : {std::pair{&d1, &d2}, std::pair{&d2, &d3}, std::pair{&d3, &d1}}) {
    if (!tangent_within(*p, *q, tol)) {
      throw Error(ErrorKind::NotTangent, "disks " + disk_name(*p) + " and " + disk_name(*q));
    }
  }
  bool collinear = false;
  const auto [center, radius] =
      circumcircle(tangency_point(d1, d2), tangency_point(d2, d3), tangency_point(d3, d1), collinear);
  if (collinear) {
    throw Error(ErrorKind::CollinearTangencyPoints,
                "tangency points of " + disk_name(d1) + "," + disk_name(d2) + "," + disk_name(d3) + " lie on a line");
  }
  return {as_point(center), radius, 1.0 / radius, "(" + disk_name(d1) + " " + disk_name(d2) + " " + disk_name(d3) + ")"};
}

std::vector<PlacedDisk> all_midcircles(const std::array<PlacedDisk, 4>& disks, double tol) {
  std::vector<PlacedDisk> out;
  for (const auto& t : kTriples) {
    try {
      out.push_back(midcircle_through_tangencies(disks[t[0]], disks[t[1]], disks[t[2]], tol));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CollinearTangencyPoints) throw;
    }
  }
  return out;
}

bool ConfigurationReport::passed() const {
  return std::all_of(law_residuals.begin(), law_residuals.end(),
                     [&](const auto& kv) { return kv.second <= tolerance; });
}

ConfigurationReport verify_spinor_laws(const std::array<PlacedDisk, 4>& disks, double tol) {
  ConfigurationReport report;
  report.disks = disks;
  report.tolerance = tol;

  // spin[i][j] is the principal tangency spinor of the ordered pair (i, j).
  std::array<std::array<cplx, 4>, 4> spin{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const auto s = tangency_spinor(disks[i], disks[j], tol);
      spin[i][j] = as_complex(s.u);
      if (i < j) report.spinors.push_back(s);
    }
  }
  auto beta = [&](int i) { return disks[i].curvature; };

  double prop1 = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const double expected = beta(i) + beta(j);
      prop1 = std::max(prop1, scaled(std::norm(spin[i][j]) - expected, expected));
    }
  }

  // Theorems 2 and 3 on every tangent triple, for the outgoing and the
  // incoming pair at each of its disks.
  double thm2 = 0.0;
  double thm3 = 0.0;
  for (const auto& t : kTriples) {
    bool collinear = false;
    const double mid_radius = circumcircle(tangency_point(disks[t[0]], disks[t[1]]),
                                           tangency_point(disks[t[1]], disks[t[2]]),
                                           tangency_point(disks[t[2]], disks[t[0]]), collinear)
                                  .second;
    const double mid_curvature = collinear ? 0.0 : 1.0 / mid_radius;
    for (int k = 0; k < 3; ++k) {
      const int x = t[k], y = t[(k + 1) % 3], z = t[(k + 2) % 3];
      for (const auto& [u, v] : {std::pair{spin[x][y], spin[x][z]}, std::pair{spin[y][x], spin[z][x]}}) {
        const double cr = u.real() * v.imag() - v.real() * u.imag();
        const double dt = u.real() * v.real() + u.imag() * v.imag();
        thm2 = std::max(thm2, scaled(std::abs(cr) - std::abs(beta(x)), beta(x)));
        thm3 = std::max(thm3, scaled(std::abs(dt) - mid_curvature, mid_curvature));
      }
    }
  }

  double curl = 0.0;
  for (std::size_t n = 0; n < kTriples.size(); ++n) {
    const auto& t = kTriples[n];
    const auto s = min_signed_sum({spin[t[0]][t[1]], spin[t[1]][t[2]], spin[t[2]][t[0]]});
    curl = std::max(curl, s.residual);
    if (n == 0) report.sign_assignment["thm4_curl"] = s.signs;
  }

  double div = 0.0;
  double add = 0.0;
  for (int hub = 0; hub < 4; ++hub) {
    std::vector<int> others;
    for (int i = 0; i < 4; ++i) {
      if (i != hub) others.push_back(i);
    }
    const auto into = min_signed_sum({spin[others[0]][hub], spin[others[1]][hub], spin[others[2]][hub]});
    const auto out_of = min_signed_sum({spin[hub][others[0]], spin[hub][others[1]], spin[hub][others[2]]});
    div = std::max({div, into.residual, out_of.residual});
    if (hub == 3) report.sign_assignment["thm5a_div"] = into.signs;

    // u(hub, w) = +-u(hub, x) +- u(hub, y) for every choice of w.
    for (int k = 0; k < 3; ++k) {
      const int w = others[k], x = others[(k + 1) % 3], y = others[(k + 2) % 3];
      const auto s = min_signed_sum({spin[hub][w], spin[hub][x], spin[hub][y]});
      add = std::max(add, s.residual);
      if (hub == 2 && w == 3) report.sign_assignment["thm5b_add"] = s.signs;
    }
  }

  report.law_residuals = {
      {"prop1", prop1},  {"thm2", thm2},      {"thm3", thm3},
      {"thm4_curl", curl}, {"thm5a_div", div}, {"thm5b_add", add},
  };
  return report;
}

std::array<PlacedDisk, 4> realize_quadruple(const Rational& a, const Rational& b, const Rational& c,
                                            const Rational& d, double tol) {
  const auto placed = place_configuration(a, b, c);
  return {placed[0], placed[1], placed[2], realize_fourth(placed, d, tol)};
}

nlohmann::json to_json(const PlacedDisk& disk) {
  return {
      {"label", disk.label},
      {"center", {disk.center.x, disk.center.y}},
      {"radius", disk.radius},
      {"curvature", disk.curvature},
  };
}

PlacedDisk placed_disk_from_json(const nlohmann::json& j) {
  PlacedDisk d;
  d.center = {j.at("center").at(0).get<double>(), j.at("center").at(1).get<double>()};
  d.radius = j.at("radius").get<double>();
  d.curvature = j.at("curvature").get<double>();
  d.label = j.value("label", std::string{});
  return d;
}

nlohmann::json to_json(const ConfigurationReport& report) {
  nlohmann::json disks = nlohmann::json::array();
  for (const auto& d : report.disks) disks.push_back(to_json(d));
  nlohmann::json spinors = nlohmann::json::array();
  for (const auto& s : report.spinors) {
    spinors.push_back({{"from", s.from}, {"to", s.to}, {"u", {s.u.x, s.u.y}}});
  }
  return {
      {"disks", std::move(disks)},
      {"spinors", std::move(spinors)},
      {"law_residuals", report.law_residuals},
      {"sign_assignment", report.sign_assignment},
      {"tolerance", report.tolerance},
      {"passed", report.passed()},
  };
}

}  // namespace descartes
