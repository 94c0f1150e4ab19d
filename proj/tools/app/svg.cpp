#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace yolkkit {

namespace {

constexpr double kCanvas = 840.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_instance_svg(const Electorate& e, const RunResult& r) {
  if (e.dim != 2) {
    throw_error(ErrorCode::unsupported_dimension, "SVG rendering requires k = 2");
  }
  double min_x = e.points.front().x(), max_x = min_x;
  double min_y = e.points.front().y(), max_y = min_y;
  auto grow = [&](double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };
  for (const Point& p : e.points) grow(p.x(), p.y());
  auto grow_ball = [&](const Ball& b) {
    grow(b.center.x() - b.radius, b.center.y() - b.radius);
    grow(b.center.x() + b.radius, b.center.y() + b.radius);
  };
  grow_ball(r.lp.ball);
  if (r.yolk) grow_ball(r.yolk->ball);

  double ext = std::max({max_x - min_x, max_y - min_y, 1e-6});
  double pad = 0.08 * ext;
  min_x -= pad;
  max_x += pad;
  min_y -= pad;
  max_y += pad;
  ext = std::max(max_x - min_x, max_y - min_y);
  double scale = (kCanvas - 2.0 * kMargin) / ext;
  double cx0 = 0.5 * (min_x + max_x), cy0 = 0.5 * (min_y + max_y);

  auto sx = [&](double x) { return kCanvas / 2.0 + scale * (x - cx0); };
  auto sy = [&](double y) { return kCanvas / 2.0 - scale * (y - cy0); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(kCanvas) + "\" height=\"" + num(kCanvas) + "\" viewBox=\"0 0 " +
         num(kCanvas) + " " + num(kCanvas) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Limiting median lines, clipped to the view bounds.
  LimitingLines lines = enumerate_limiting_median_lines(e);
  for (const Hyperplane& h : lines.lines) {
    // Points on the line: foot + t * direction.
    double fx = h.normal[0] * h.offset, fy = h.normal[1] * h.offset;
    double dx = -h.normal[1], dy = h.normal[0];
    double t_span = 2.0 * ext + std::abs(fx - cx0) + std::abs(fy - cy0);
    double x1 = fx - t_span * dx, y1 = fy - t_span * dy;
    double x2 = fx + t_span * dx, y2 = fy + t_span * dy;
    svg += "<line x1=\"" + num(sx(x1)) + "\" y1=\"" + num(sy(y1)) + "\" x2=\"" +
           num(sx(x2)) + "\" y2=\"" + num(sy(y2)) +
           "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  }

  // LP yolk (solid blue) and yolk (dashed red).
  svg += "<circle cx=\"" + num(sx(r.lp.ball.center.x())) + "\" cy=\"" +
         num(sy(r.lp.ball.center.y())) + "\" r=\"" +
         num(std::max(scale * r.lp.ball.radius, 2.0)) +
         "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
  if (r.yolk) {
    svg += "<circle cx=\"" + num(sx(r.yolk->ball.center.x())) + "\" cy=\"" +
           num(sy(r.yolk->ball.center.y())) + "\" r=\"" +
           num(std::max(scale * r.yolk->ball.radius, 2.0)) +
           "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" "
           "stroke-dasharray=\"8 5\"/>\n";
    for (const Direction& d : r.yolk->tangent_directions) {
      double tx = r.yolk->ball.center.x() + r.yolk->ball.radius * d.unit[0];
      double ty = r.yolk->ball.center.y() + r.yolk->ball.radius * d.unit[1];
      svg += "<circle cx=\"" + num(sx(tx)) + "\" cy=\"" + num(sy(ty)) +
             "\" r=\"4\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
    }
  }

  for (const Point& p : e.points) {
    svg += "<circle cx=\"" + num(sx(p.x())) + "\" cy=\"" + num(sy(p.y())) +
           "\" r=\"5\" fill=\"black\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace yolkkit
