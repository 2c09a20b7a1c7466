#include "descartes/render_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace descartes {

namespace {

using Attributes = std::map<std::string, std::string>;  // std::map keeps attributes sorted

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

void element(std::ostringstream& os, const std::string& name, const Attributes& attrs, const std::string& text = {}) {
  os << '<' << name;
  for (const auto& [k, v] : attrs) os << ' ' << k << "=\"" << escape(v) << '"';
  if (text.empty()) {
    os << "/>\n";
  } else {
    os << '>' << escape(text) << "</" << name << ">\n";
  }
}

struct Bounds {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  bool empty() const { return xmin > xmax; }
  double span() const { return std::max(xmax - xmin, ymax - ymin); }
};

// Opens the document; world y grows upward, so geometry goes in a flipped group.
void open_document(std::ostringstream& os, Bounds b, const RenderOptions& o) {
  if (b.empty()) b = {-1.0, 1.0, -1.0, 1.0};
  const double pad = 0.1 * std::max(b.span(), 1e-9);
  const double x0 = b.xmin - pad;
  const double y0 = -(b.ymax + pad);
  const double w = b.xmax - b.xmin + 2 * pad;
  const double h = b.ymax - b.ymin + 2 * pad;
  const long height_px = std::lround(o.width_px * h / w);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n";
  os << "<svg height=\"" << height_px << "\" version=\"1.1\" viewBox=\"" << format_coordinate(x0) << ' '
     << format_coordinate(y0) << ' ' << format_coordinate(w) << ' ' << format_coordinate(h) << "\" width=\""
     << o.width_px << "\" xmlns=\"http://www.w3.org/2000/svg\">\n";
}

std::string hatch_id(TileClass cls) { return "hatch_" + std::string(tile_class_name(cls)); }

}  // namespace

void RenderOptions::validate() const {
  if (width_px < 64) throw std::invalid_argument("width_px must be >= 64");
}

std::string palette(TileClass cls) {
  switch (cls) {
    case TileClass::YellowSquare: return "#ffdf80";
    case TileClass::RedCentral: return "#e03c3c";
    case TileClass::Green: return "#80d080";
    case TileClass::LightRed: return "#f2a0a0";
  }
  return "#000000";
}

std::string format_coordinate(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string render_tessellation(const Tessellation& t, const RenderOptions& o) {
  o.validate();
  Bounds b;
  for (const auto& tile : t.tiles) {
    for (const auto& v : tile.vertices()) b.add(v.x.to_double(), v.y.to_double());
  }
  std::ostringstream os;
  open_document(os, b, o);
  const std::string stroke = format_coordinate(b.span() / 400.0);

  os << "<defs>\n";
  for (auto cls : {TileClass::YellowSquare, TileClass::RedCentral, TileClass::Green, TileClass::LightRed}) {
    const std::string cell = format_coordinate(b.span() / 40.0);
    os << "<pattern height=\"" << cell << "\" id=\"" << hatch_id(cls)
       << "\" patternTransform=\"rotate(45)\" patternUnits=\"userSpaceOnUse\" width=\"" << cell << "\">\n";
    element(os, "rect", {{"fill", palette(cls)}, {"fill-opacity", "0.5"}, {"height", cell}, {"width", cell}});
    element(os, "rect", {{"fill", "#000000"}, {"height", cell}, {"width", format_coordinate(b.span() / 160.0)}});
    os << "</pattern>\n";
  }
  os << "</defs>\n";

  os << "<g transform=\"scale(1,-1)\">\n";
  for (const auto& tile : t.tiles) {
    std::string points;
    for (const auto& v : tile.vertices()) {
      if (!points.empty()) points += ' ';
      points += format_coordinate(v.x.to_double()) + "," + format_coordinate(v.y.to_double());
    }
    const bool negative = tile.signed_area.sign() < 0;
    element(os, "polygon",
            {{"class", std::string(tile_class_name(tile.cls))},
             {"fill", negative ? "url(#" + hatch_id(tile.cls) + ")" : palette(tile.cls)},
             {"fill-opacity", "0.8"},
             {"id", tile.label},
             {"points", points},
             {"stroke", "#000000"},
             {"stroke-width", stroke}});
  }
  if (o.show_spinor_arrows) {
    for (const Spinor* s : {&t.a, &t.b, &t.c}) {
      element(os, "line",
              {{"stroke", "#000000"},
               {"stroke-width", format_coordinate(b.span() / 100.0)},
               {"x1", format_coordinate(0.0)},
               {"x2", format_coordinate(s->x.to_double())},
               {"y1", format_coordinate(0.0)},
               {"y2", format_coordinate(s->y.to_double())}});
    }
  }
  os << "</g>\n";

  if (o.show_labels) {
    const std::string font = format_coordinate(b.span() / 25.0);
    for (const auto& tile : t.tiles) {
      Spinor centroid = tile.anchor + Rational(1, 2) * (tile.edge1 + tile.edge2);
      element(os, "text",
              {{"font-family", "sans-serif"},
               {"font-size", font},
               {"text-anchor", "middle"},
               {"x", format_coordinate(centroid.x.to_double())},
               {"y", format_coordinate(-centroid.y.to_double())}},
              tile.signed_area.to_string());
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_configuration(const std::vector<PlacedDisk>& disks, const std::vector<PlacedDisk>& midcircles,
                                 const RenderOptions& o) {
  o.validate();
  Bounds b;
  for (const auto* group : {&disks, &midcircles}) {
    for (const auto& d : *group) {
      const double r = std::abs(d.radius);
      b.add(d.center.x - r, d.center.y - r);
      b.add(d.center.x + r, d.center.y + r);
    }
  }
  std::ostringstream os;
  open_document(os, b, o);
  const double span = b.empty() ? 2.0 : b.span();
  const std::string stroke = format_coordinate(span / 400.0);

  // Enclosing (negative-curvature) disks first so the bounded ones paint over them.
  std::vector<const PlacedDisk*> order;
  for (const auto& d : disks) {
    if (d.curvature < 0) order.push_back(&d);
  }
  for (const auto& d : disks) {
    if (d.curvature >= 0) order.push_back(&d);
  }

  os << "<g transform=\"scale(1,-1)\">\n";
  for (const PlacedDisk* d : order) {
    const bool outer = d->curvature < 0;
    element(os, "circle",
            {{"class", outer ? "disk outer" : "disk"},
             {"cx", format_coordinate(d->center.x)},
             {"cy", format_coordinate(d->center.y)},
             {"fill", outer ? "#fff4d6" : "#ffdf80"},
             {"r", format_coordinate(std::abs(d->radius))},
             {"stroke", "#000000"},
             {"stroke-width", stroke}});
  }
  if (o.show_midcircles) {
    for (const auto& m : midcircles) {
      element(os, "circle",
              {{"class", "midcircle"},
               {"cx", format_coordinate(m.center.x)},
               {"cy", format_coordinate(m.center.y)},
               {"fill", "none"},
               {"r", format_coordinate(std::abs(m.radius))},
               {"stroke", "#c00000"},
               {"stroke-dasharray", format_coordinate(span / 150.0)},
               {"stroke-width", stroke}});
    }
  }
  os << "</g>\n";

  if (o.show_labels) {
    for (const PlacedDisk* d : order) {
      const double r = std::abs(d->radius);
      const bool outer = d->curvature < 0;
      const double font = outer ? span / 25.0 : std::clamp(r * 0.8, span / 200.0, span / 25.0);
      // The enclosing disk is labelled just inside its top edge.
      const double y = outer ? d->center.y + 0.9 * r : d->center.y;
      element(os, "text",
              {{"font-family", "sans-serif"},
               {"font-size", format_coordinate(font)},
               {"text-anchor", "middle"},
               {"x", format_coordinate(d->center.x)},
               {"y", format_coordinate(-y)}},
              d->label.empty() ? format_coordinate(d->curvature) : d->label);
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace descartes
