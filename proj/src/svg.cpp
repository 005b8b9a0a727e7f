#include "mrigid/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

namespace mrigid {

namespace {

constexpr double kCentre = 200.0;
constexpr double kRadius = 160.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

struct Point {
  double x;
  double y;
};

Point on_circle(int i, int points, double radius) {
  const double theta = -std::numbers::pi / 2 + 2 * std::numbers::pi * (i - 1) / points;
  return {kCentre + radius * std::cos(theta), kCentre + radius * std::sin(theta)};
}

}  // namespace

std::string render_svg(const AbstractTiling& tiling, std::optional<int> m) {
  const int points = tiling.marked_points;
  std::vector<int> valency(static_cast<std::size_t>(points) + 1, 0);
  for (auto [a, b] : tiling.arcs) {
    ++valency.at(a);
    ++valency.at(b);
  }
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" "
         "viewBox=\"0 0 400 400\">\n";
  out += "  <circle cx=\"" + num(kCentre) + "\" cy=\"" + num(kCentre) + "\" r=\"" + num(kRadius) +
         "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  for (auto [a, b] : tiling.arcs) {
    const Point p = on_circle(a, points, kRadius);
    const Point q = on_circle(b, points, kRadius);
    const int forward = ((b - a) % points + points) % points + 1;
    const int backward = points + 2 - forward;
    if (m && (forward == *m + 1 || backward == *m + 1)) {
      const Point mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
      const Point ctrl{mid.x + 0.4 * (kCentre - mid.x), mid.y + 0.4 * (kCentre - mid.y)};
      out += "  <path d=\"M " + num(p.x) + " " + num(p.y) + " Q " + num(ctrl.x) + " " + num(ctrl.y) +
             " " + num(q.x) + " " + num(q.y) + "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n";
    } else {
      out += "  <line x1=\"" + num(p.x) + "\" y1=\"" + num(p.y) + "\" x2=\"" + num(q.x) + "\" y2=\"" +
             num(q.y) + "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (int i = 1; i <= points; ++i) {
    const Point p = on_circle(i, points, kRadius);
    const bool isolated = valency[i] == 0;
    out += "  <circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"4.00\" fill=\"" +
           (isolated ? "#ffffff" : "#000000") + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    const Point l = on_circle(i, points, kRadius + 18);
    out += "  <text x=\"" + num(l.x) + "\" y=\"" + num(l.y) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
           "dominant-baseline=\"middle\">" +
           std::to_string(i) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace mrigid
