#include "vsbound/svg.hpp"

#include "vsbound/error.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace vsbound {

namespace {

using Point = std::pair<std::int64_t, std::int64_t>;

std::int64_t cross(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr double kUnit = 40.0;
constexpr double kMargin = 40.0;

}  // namespace

std::vector<Point> hull_2d(const LatticePolytope& P) {
  if (P.n() != 2) throw InputError("polytope drawing supports dimension 2 only");
  std::vector<Point> pts{{0, 0}};
  for (const auto& g : P.generators()) pts.emplace_back(g[0], g[1]);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::string render_polytope_svg(const std::vector<SvgPanel>& panels) {
  if (panels.empty()) throw InputError("nothing to draw");
  std::int64_t extent = 1;
  for (const auto& panel : panels) {
    if (panel.polytope.n() != 2) throw InputError("polytope drawing supports dimension 2 only");
    if (panel.dilation.is_infinite()) throw InputError("cannot draw an infinite dilation");
    for (const auto& g : panel.polytope.generators())
      extent = std::max<std::int64_t>(extent, std::max(g[0], g[1]));
    if (panel.witness) extent = std::max<std::int64_t>(extent, std::max((*panel.witness)[0], (*panel.witness)[1]));
  }
  extent += 1;
  const double panel_size = 2 * kMargin + kUnit * static_cast<double>(extent);
  const double width = panel_size * static_cast<double>(panels.size());
  const double height = panel_size + 30;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t idx = 0; idx < panels.size(); ++idx) {
    const auto& panel = panels[idx];
    const double ox = static_cast<double>(idx) * panel_size + kMargin;
    const double oy = panel_size - kMargin + 20;
    auto X = [&](double x) { return fmt(ox + kUnit * x); };
    auto Y = [&](double y) { return fmt(oy - kUnit * y); };

    os << "<g id=\"panel" << idx << "\">\n";
    os << "<text x=\"" << fmt(ox) << "\" y=\"20.00\" font-family=\"sans-serif\" font-size=\"14\">"
       << escape(panel.title) << "</text>\n";
    // axes
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(static_cast<double>(extent))
       << "\" y2=\"" << Y(0) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\""
       << Y(static_cast<double>(extent)) << "\" stroke=\"black\"/>\n";

    const auto hull = hull_2d(panel.polytope);
    auto polygon = [&](double scale, const char* fill, const char* stroke, const char* cls) {
      os << "<polygon class=\"" << cls << "\" points=\"";
      for (std::size_t i = 0; i < hull.size(); ++i) {
        if (i) os << ' ';
        os << X(scale * static_cast<double>(hull[i].first)) << ',' << Y(scale * static_cast<double>(hull[i].second));
      }
      os << "\" fill=\"" << fill << "\" fill-opacity=\"0.35\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";
    };
    polygon(1.0, "#9ecae1", "#3182bd", "polytope");
    polygon(panel.dilation.value().convert_to<double>(), "#fdae6b", "#e6550d", "dilation");

    for (std::int64_t x = 0; x <= extent; ++x)
      for (std::int64_t y = 0; y <= extent; ++y)
        os << "<circle cx=\"" << X(static_cast<double>(x)) << "\" cy=\"" << Y(static_cast<double>(y))
           << "\" r=\"2\" fill=\"#636363\"/>\n";
    if (panel.witness) {
      const auto& w = *panel.witness;
      os << "<circle class=\"witness\" cx=\"" << X(w[0]) << "\" cy=\"" << Y(w[1])
         << "\" r=\"6\" fill=\"none\" stroke=\"#de2d26\" stroke-width=\"2\"/>\n";
    }
    os << "<text x=\"" << fmt(ox) << "\" y=\"" << fmt(oy + 30) << "\" font-family=\"sans-serif\" font-size=\"12\">"
       << "dilation " << panel.dilation.to_string() << "</text>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace vsbound
