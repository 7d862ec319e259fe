#include "colorful/svg.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace colorful {

namespace {

using P = std::array<double, 3>;

P unit(const Ray& r) {
  P p{r.vec()(0).convert_to<double>(), r.vec()(1).convert_to<double>(), r.vec()(2).convert_to<double>()};
  const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  for (double& c : p) c /= n;
  return p;
}

// Fixed oblique camera so that no coordinate axis points at the viewer.
struct Camera {
  P right{0.7071067811865476, -0.7071067811865476, 0.0};
  P up{0.4082482904638631, 0.4082482904638631, -0.8164965809277261};
  P toward{0.5773502691896258, 0.5773502691896258, 0.5773502691896258};

  static double dot(const P& a, const P& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
};

P slerp(const P& a, const P& b, double t) {
  const double omega = std::acos(std::fmax(-1.0, std::fmin(1.0, Camera::dot(a, b))));
  if (omega < 1e-12) return a;
  const double s = std::sin(omega);
  const double wa = std::sin((1 - t) * omega) / s, wb = std::sin(t * omega) / s;
  return {wa * a[0] + wb * b[0], wa * a[1] + wb * b[1], wa * a[2] + wb * b[2]};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

std::string render_svg(const SphereDrawing& d, const std::optional<CrossingWitness>& crossing,
                       const SvgOptions& opts) {
  const Camera cam;
  const double half = opts.size / 2.0, radius = half * 0.85;
  auto sx = [&](const P& p) { return half + radius * Camera::dot(p, cam.right); };
  auto sy = [&](const P& p) { return half - radius * Camera::dot(p, cam.up); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size << "\" height=\"" << opts.size
      << "\" viewBox=\"0 0 " << opts.size << ' ' << opts.size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<circle cx=\"" << fmt(half) << "\" cy=\"" << fmt(half) << "\" r=\"" << fmt(radius)
      << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";

  std::array<P, 3> blue, red;
  for (std::size_t k = 0; k < 3; ++k) {
    blue[k] = unit(d.blue[k]);
    red[k] = unit(d.red[k]);
  }
  auto highlighted = [&](const Arc& a) { return crossing && (crossing->first == a || crossing->second == a); };

  for (const Arc& arc : d.arcs()) {
    const bool hot = highlighted(arc);
    const std::string colour = hot ? "#e67e00" : "#444";
    const std::string width = hot ? "3" : "1.2";
    // One polyline per run of samples on the same hemisphere.
    std::vector<std::pair<bool, std::vector<P>>> runs;
    for (std::size_t s = 0; s <= opts.samples_per_arc; ++s) {
      const P p = slerp(blue[arc.blue], red[arc.red], double(s) / double(opts.samples_per_arc));
      const bool front = Camera::dot(p, cam.toward) >= 0;
      if (runs.empty() || runs.back().first != front) {
        if (!runs.empty()) runs.back().second.push_back(p);
        runs.push_back({front, {}});
      }
      runs.back().second.push_back(p);
    }
    for (const auto& [front, pts] : runs) {
      out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << width << '"';
      if (!front) out << " stroke-dasharray=\"4 3\" opacity=\"0.6\"";
      out << " points=\"";
      for (const P& p : pts) out << fmt(sx(p)) << ',' << fmt(sy(p)) << ' ';
      out << "\"/>\n";
    }
    const P mid = slerp(blue[arc.blue], red[arc.red], 0.5);
    out << "<text x=\"" << fmt(sx(mid) + 4) << "\" y=\"" << fmt(sy(mid) - 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << colour << "\">" << arc.label() << "</text>\n";
  }

  auto vertex = [&](const P& p, const char* fill, const std::string& name) {
    const bool front = Camera::dot(p, cam.toward) >= 0;
    out << "<circle cx=\"" << fmt(sx(p)) << "\" cy=\"" << fmt(sy(p)) << "\" r=\"6\" fill=\"" << fill << '"'
        << (front ? "" : " fill-opacity=\"0.45\"") << " stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(sx(p) + 8) << "\" y=\"" << fmt(sy(p) + 14)
        << "\" font-family=\"sans-serif\" font-size=\"13\" font-weight=\"bold\">" << name << "</text>\n";
  };
  static const std::array<const char*, 3> blue_names{"A", "B", "C"}, red_names{"U", "V", "W"};
  for (std::size_t k = 0; k < 3; ++k) {
    vertex(blue[k], "#2060d0", blue_names[k]);
    vertex(red[k], "#d02020", red_names[k]);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace colorful
