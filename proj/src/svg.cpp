#include "webfold/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace webfold {

namespace {

constexpr double kUnit = 48.0;
constexpr double kMargin = 36.0;

class Canvas {
 public:
  Canvas(double width, double height) : width_(width), height_(height) {}

  std::ostringstream& body() { return body_; }

  std::string finish() const {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\"" << height_
       << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n"
       << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"4\" markerHeight=\"4\" "
          "orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  double width_, height_;
  std::ostringstream body_;
};

std::ostringstream& fixed(std::ostringstream& os) {
  os.setf(std::ios::fixed);
  os.precision(2);
  return os;
}

void label(std::ostringstream& os, double x, double y, const std::string& text) {
  os << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
     << text << "</text>\n";
}

// Semicircle from x1 to x2 above the baseline at y0, as an SVG arc path.
void semicircle(std::ostringstream& os, double x1, double x2, double y0, const std::string& style) {
  double r = std::abs(x2 - x1) / 2;
  os << "<path d=\"M" << x1 << ',' << y0 << " A" << r << ',' << r << " 0 0 " << (x1 < x2 ? 1 : 0) << ' ' << x2 << ','
     << y0 << "\" fill=\"none\" " << style << "/>\n";
}

}  // namespace

std::string svg_of_tableau(const Tableau& t) {
  const Shape& s = t.shape();
  int cols = s.rows() ? s.outer_length(1) : 0;
  const double box = 32;
  Canvas canvas(2 * 12 + box * std::max(cols, 1), 2 * 12 + box * std::max(s.rows(), 1));
  auto& os = fixed(canvas.body());
  for (int r = 1; r <= s.rows(); ++r) {
    for (int c = 1; c <= s.outer_length(r); ++c) {
      double x = 12 + box * (c - 1);
      double y = 12 + box * (r - 1);
      bool inner = s.in_inner({r, c});
      os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << box << "\" height=\"" << box << "\" fill=\""
         << (inner ? "#ddd" : "white") << "\" stroke=\"black\"/>\n";
      if (!inner) label(os, x + box / 2, y + box / 2 + 5, std::to_string(t.at({r, c})));
    }
  }
  return canvas.finish();
}

std::string svg_of_matching(const Matching2& m) {
  const int n = m.n_points();
  const double base = kMargin + kUnit * (n + 1) / 2.0;
  Canvas canvas(2 * kMargin + kUnit * std::max(n - 1, 1), base + 2 * kMargin);
  auto& os = fixed(canvas.body());
  auto px = [](int k) { return kMargin + kUnit * (k - 1); };
  os << "<line x1=\"" << kMargin / 2 << "\" y1=\"" << base << "\" x2=\"" << px(n) + kMargin / 2 << "\" y2=\"" << base
     << "\" stroke=\"#999\"/>\n";
  for (const auto& [a, b] : m.arcs()) semicircle(os, px(a), px(b), base, "stroke=\"#1f5fa8\" stroke-width=\"2\"");
  for (int k = 1; k <= n; ++k) {
    os << "<circle cx=\"" << px(k) << "\" cy=\"" << base << "\" r=\"4\" fill=\"black\"/>\n";
    label(os, px(k), base + 20, std::to_string(k));
  }
  return canvas.finish();
}

std::string svg_of_diagram(const GeneralizedMDiagram& m) {
  const int nb = m.n_boundary();
  if (nb == 0) return Canvas(2 * kMargin, 2 * kMargin).finish();
  const double lo = boost::rational_cast<double>(m.boundary().front().x);
  const double hi = boost::rational_cast<double>(m.boundary().back().x);
  const double base = kMargin + kUnit * (hi - lo) / 2.0 + 8;
  Canvas canvas(2 * kMargin + kUnit * std::max(hi - lo, 1.0), base + 2 * kMargin);
  auto& os = fixed(canvas.body());
  auto px = [&](const Rational& x) { return kMargin + kUnit * (boost::rational_cast<double>(x) - lo); };
  os << "<line x1=\"" << kMargin / 2 << "\" y1=\"" << base << "\" x2=\"" << px(m.boundary().back().x) + kMargin / 2
     << "\" y2=\"" << base << "\" stroke=\"#999\"/>\n";
  for (int a = 0; a < static_cast<int>(m.arcs().size()); ++a) {
    const Arc& arc = m.arcs()[a];
    std::string style = arc.kind == ArcKind::first ? "stroke=\"#1f5fa8\"" : "stroke=\"#b8322a\"";
    style += " stroke-width=\"2\" marker-end=\"url(#arrow)\"";
    if (arc.crossed) style += " stroke-dasharray=\"6,3\"";
    semicircle(os, px(m.tail_x(a)), px(m.head_x(a)), base, style);
  }
  for (const Crossing& c : crossings(m)) {
    double y = std::sqrt(boost::rational_cast<double>(c.height_sq));
    os << "<circle cx=\"" << px(c.x) << "\" cy=\"" << base - kUnit * y << "\" r=\"3.5\" fill=\"#e0a000\"/>\n";
  }
  for (int v = 0; v < nb; ++v) {
    double x = px(m.boundary()[v].x);
    os << "<circle cx=\"" << x << "\" cy=\"" << base << "\" r=\"4\" fill=\"" << (m.is_sink(v) ? "white" : "black")
       << "\" stroke=\"black\"/>\n";
    label(os, x, base + 20, m.boundary()[v].label());
  }
  return canvas.finish();
}

std::vector<Point> layout_web(const PlanarWeb& w) {
  if (!w.coords().empty()) return w.coords();
  const int nb = w.n_boundary();
  const int nv = w.n_vertices();
  std::vector<Point> pos(nv, Point{0, 0});
  const double radius = std::max(2.0, nb / std::numbers::pi);
  for (int v = 0; v < nb; ++v) {
    double angle = std::numbers::pi - 2 * std::numbers::pi * (v + 0.5) / nb;
    pos[v] = {radius * std::cos(angle), radius * std::sin(angle)};
  }
  std::vector<std::vector<int>> nbrs(nv);
  for (const WebEdge& e : w.edges()) {
    if (e.tag == EdgeTag::boundary) continue;
    nbrs[e.from].push_back(e.to);
    nbrs[e.to].push_back(e.from);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    for (int v = nb; v < nv; ++v) {
      if (nbrs[v].empty()) continue;
      Point sum{0, 0};
      for (int u : nbrs[v]) {
        sum.x += pos[u].x;
        sum.y += pos[u].y;
      }
      pos[v] = {sum.x / nbrs[v].size(), sum.y / nbrs[v].size()};
    }
  }
  return pos;
}

std::string svg_of_web(const PlanarWeb& w) {
  std::vector<Point> pos = layout_web(w);
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i == 0 || pos[i].x < min_x) min_x = pos[i].x;
    if (i == 0 || pos[i].x > max_x) max_x = pos[i].x;
    if (i == 0 || pos[i].y < min_y) min_y = pos[i].y;
    if (i == 0 || pos[i].y > max_y) max_y = pos[i].y;
  }
  Canvas canvas(2 * kMargin + kUnit * std::max(max_x - min_x, 1.0), 2 * kMargin + kUnit * std::max(max_y - min_y, 1.0) + 12);
  auto& os = fixed(canvas.body());
  auto sx = [&](const Point& p) { return kMargin + kUnit * (p.x - min_x); };
  auto sy = [&](const Point& p) { return kMargin + kUnit * (max_y - p.y); };
  const bool on_line = !w.coords().empty();
  for (const WebEdge& e : w.edges()) {
    const Point& a = pos[e.from];
    const Point& b = pos[e.to];
    if (e.tag == EdgeTag::boundary) {
      if (on_line) continue;
      os << "<line x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b) << "\" y2=\"" << sy(b)
         << "\" stroke=\"#bbb\" stroke-dasharray=\"2,3\"/>\n";
      continue;
    }
    double dx = sx(b) - sx(a), dy = sy(b) - sy(a);
    double len = std::max(std::hypot(dx, dy), 1e-9);
    double trim = std::min(5.0, len / 3);
    const char* colour = e.tag == EdgeTag::intersection ? "#e0a000" : "#333";
    os << "<line x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b) - dx / len * trim << "\" y2=\""
       << sy(b) - dy / len * trim << "\" stroke=\"" << colour << "\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
  }
  if (on_line) {
    os << "<line x1=\"" << kMargin / 2 << "\" y1=\"" << sy(pos[0]) << "\" x2=\"" << sx(pos[w.n_boundary() - 1]) + kMargin / 2
       << "\" y2=\"" << sy(pos[0]) << "\" stroke=\"#999\"/>\n";
  }
  for (int v = 0; v < w.n_vertices(); ++v) {
    bool source = std::all_of(w.rotation(v).begin(), w.rotation(v).end(),
                              [&w](int d) { return w.edge_of(d).tag == EdgeTag::boundary || d % 2 == 0; });
    os << "<circle cx=\"" << sx(pos[v]) << "\" cy=\"" << sy(pos[v]) << "\" r=\"4\" fill=\"" << (source ? "black" : "white")
       << "\" stroke=\"black\"/>\n";
    if (w.is_boundary_vertex(v)) label(os, sx(pos[v]), sy(pos[v]) + (on_line ? 20 : -8), std::to_string(v + 1));
  }
  return canvas.finish();
}

}  // namespace webfold
