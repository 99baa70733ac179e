#include "wallcross/figure.hpp"

#include <cmath>

#include <fmt/format.h>

#include "wallcross/crossing.hpp"
#include "wallcross/errors.hpp"

namespace wallcross {

namespace {

struct Vec2 {
  double x, y;
};

class Canvas {
public:
  explicit Canvas(const FigureSpec& spec)
      : cx_(spec.width / 2.0), cy_(spec.height / 2.0), r_(spec.disk_radius) {}

  Vec2 screen(Vec2 p) const { return {cx_ + r_ * p.x, cy_ - r_ * p.y}; }
  double scale(double len) const { return r_ * len; }

private:
  double cx_, cy_, r_;
};

std::string num(double v) {
  // Avoid "-0.000000" so output is stable under sign noise.
  if (std::fabs(v) < 5e-7) v = 0.0;
  return fmt::format("{:.6f}", v);
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

Vec2 klein_to_poincare(Vec2 k) {
  const double r2 = k.x * k.x + k.y * k.y;
  const double d = 1.0 + std::sqrt(std::max(0.0, 1.0 - r2));
  return {k.x / d, k.y / d};
}

Vec2 poincare_of(const ChamberPoint& p) {
  const auto [u, v] = poincare_coords(p);
  return {u.get_d(), v.get_d()};
}

Vec2 klein_of(const ChamberPoint& p) {
  const auto [u, v] = klein_coords(p);
  return {u.get_d(), v.get_d()};
}

void draw_wall(std::string& svg, const Canvas& canvas, const Wall& w) {
  const double a = w.a.get_d();
  const double b = w.b.get_d();
  const double c = w.c.get_d();
  const double n2 = a * a + b * b;
  const double n = std::sqrt(n2);
  // Ideal endpoints of the Klein chord a u + b v = c.
  const Vec2 foot{c * a / n2, c * b / n2};
  const double half = std::sqrt(std::max(0.0, 1.0 - c * c / n2));
  const Vec2 dir{-b / n, a / n};
  const Vec2 p1{foot.x - half * dir.x, foot.y - half * dir.y};
  const Vec2 p2{foot.x + half * dir.x, foot.y + half * dir.y};
  // The Poincare geodesic is the circle centred at (a, b)/c of radius 1/c.
  const Vec2 centre{a / c, b / c};
  const double radius = 1.0 / c;
  const double cross = (p2.x - p1.x) * (centre.y - p1.y) - (p2.y - p1.y) * (centre.x - p1.x);
  const int sweep = cross < 0 ? 1 : 0;
  const Vec2 s1 = canvas.screen(p1);
  const Vec2 s2 = canvas.screen(p2);
  const double rr = canvas.scale(radius);
  svg += fmt::format(
      "<path class=\"wall\" data-eps=\"{}\" d=\"M {} {} A {} {} 0 0 {} {} {}\" fill=\"none\" "
      "stroke=\"{}\" stroke-width=\"1\"/>\n",
      w.eps, num(s1.x), num(s1.y), num(rr), num(rr), sweep, num(s2.x), num(s2.y),
      w.eps > 0 ? "#1f4e9c" : "#b03a2e");
  // Label at the arc point nearest the origin.
  const double dist = n / c - radius;
  const Vec2 mid = canvas.screen({dist * a / n, dist * b / n});
  svg += fmt::format(
      "<text class=\"wall-label\" x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\">{}</text>\n",
      num(mid.x), num(mid.y), w.c <= 3 ? 10 : 7, escape(w.label()));
}

void draw_point(std::string& svg, const Canvas& canvas, const ChamberPoint& p,
                const std::string& label, bool image) {
  const Vec2 s = canvas.screen(poincare_of(p));
  if (image) {
    svg += fmt::format(
        "<circle class=\"point\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"black\"/>\n", num(s.x), num(s.y));
  } else {
    svg += fmt::format(
        "<circle class=\"point\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n",
        num(s.x), num(s.y));
  }
  svg += fmt::format("<text class=\"point-label\" x=\"{}\" y=\"{}\" font-size=\"11\">{}</text>\n",
                     num(s.x + 6), num(s.y - 6), escape(label));
}

void draw_path(std::string& svg, const Canvas& canvas, const ChamberPoint& from,
               const ChamberPoint& to, const std::vector<SegmentCrossing>& crossings) {
  const Vec2 k0 = klein_of(from);
  const Vec2 k1 = klein_of(to);
  constexpr int kSamples = 96;
  std::string points;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = static_cast<double>(i) / kSamples;
    const Vec2 s = canvas.screen(klein_to_poincare({k0.x + t * (k1.x - k0.x), k0.y + t * (k1.y - k0.y)}));
    if (i) points += ' ';
    points += num(s.x) + "," + num(s.y);
  }
  svg += fmt::format(
      "<polyline class=\"path\" points=\"{}\" fill=\"none\" stroke=\"#555555\" "
      "stroke-dasharray=\"4 2\"/>\n",
      points);
  for (const auto& c : crossings) {
    const double t = c.t.get_d();
    const Vec2 s = canvas.screen(klein_to_poincare({k0.x + t * (k1.x - k0.x), k0.y + t * (k1.y - k0.y)}));
    const int doubled = kGluingMultiplicity * c.wall.eps * c.direction;
    svg += fmt::format(
        "<circle class=\"crossing\" cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"{}\"><title>{} {:+d}</title></circle>\n",
        num(s.x), num(s.y), doubled > 0 ? "#2e8b57" : "#c0392b", escape(c.wall.label()), doubled);
  }
}

} // namespace

FigureSpec FigureSpec::standard() {
  FigureSpec spec;
  spec.wall_c_max = 13;
  spec.points = {{"(0,0)", Rational(0), Rational(0)}, {"(-1/2,-1/2)", Rational(-1, 2), Rational(-1, 2)}};
  spec.words = {{sigma_minus(), sigma_plus()}};
  return spec;
}

std::string render_figure(const FigureSpec& spec) {
  std::vector<ChamberPoint> lifted;
  for (const auto& p : spec.points) lifted.push_back(poincare_to_hyperboloid(p.u, p.v));

  const Canvas canvas(spec);
  std::string svg;
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
      spec.width, spec.height, spec.width, spec.height);
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += fmt::format(
      "<circle class=\"boundary\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
      num(spec.width / 2.0), num(spec.height / 2.0), spec.disk_radius);

  for (const auto& w : enumerate_walls(spec.wall_c_max, spec.orientation)) draw_wall(svg, canvas, w);

  CrossingOptions options;
  options.orientation = spec.orientation;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    draw_point(svg, canvas, lifted[i], spec.points[i].label, false);
    for (std::size_t j = 0; j < spec.words.size(); ++j) {
      const ChamberPoint image = act(compose_word(spec.words[j]), lifted[i]);
      if (image == lifted[i]) continue;
      const std::string suffix = spec.words.size() == 1 ? "'" : "'" + std::to_string(j + 1);
      draw_path(svg, canvas, lifted[i], image, segment_crossings_oracle(lifted[i], image, options));
      draw_point(svg, canvas, image, spec.points[i].label + suffix, true);
    }
  }
  svg += "</svg>\n";
  return svg;
}

} // namespace wallcross
