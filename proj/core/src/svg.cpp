#include "k3twist/svg.hpp"

#include <cmath>
#include <cstdio>

#include "k3twist/errors.hpp"

namespace k3twist {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const FordDomain& dom, const std::vector<HPoint>& points, const Window& w) {
  if (!(w.x_min < w.x_max) || !(w.y_max > 0) || !std::isfinite(w.x_min) || !std::isfinite(w.x_max) ||
      !std::isfinite(w.y_max)) {
    throw BadWindow("window needs x_min < x_max and y_max > 0");
  }
  const double width = 800;
  const double scale = width / (w.x_max - w.x_min);
  const double height = w.y_max * scale;
  auto sx = [&](double x) { return (x - w.x_min) * scale; };
  auto sy = [&](double y) { return height - y * scale; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<line class=\"axis\" x1=\"0\" y1=\"" + num(height) + "\" x2=\"" + num(width) + "\" y2=\"" +
         num(height) + "\" stroke=\"black\"/>\n";
  for (const auto& c : dom.circles) {
    const double center = c.center.get_d();
    const double radius = std::sqrt(c.radius_sq.get_d());
    out += "<path class=\"arc\" d=\"M " + num(sx(center - radius)) + " " + num(sy(0)) + " A " +
           num(radius * scale) + " " + num(radius * scale) + " 0 0 1 " + num(sx(center + radius)) + " " +
           num(sy(0)) + "\" fill=\"none\" stroke=\"steelblue\"/>\n";
  }
  if (dom.strip) {
    for (const Rational& x : {dom.strip->left, dom.strip->right()}) {
      out += "<line class=\"strip\" x1=\"" + num(sx(x.get_d())) + "\" y1=\"0\" x2=\"" + num(sx(x.get_d())) +
             "\" y2=\"" + num(height) + "\" stroke=\"gray\"/>\n";
    }
  }
  for (const auto& p : points) {
    const double x = p.x.get_d();
    const double y = std::sqrt(p.y_sq.get_d());
    out += "<circle class=\"point\" cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(y)) +
           "\" r=\"3\" fill=\"crimson\"/>\n";
    out += "<text x=\"" + num(sx(x) + 5) + "\" y=\"" + num(sy(y) - 5) + "\" font-size=\"11\">" + sig6(x) +
           " + " + sig6(y) + "i</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace k3twist
