#include "distgraph/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "distgraph/error.hpp"
#include "distgraph/oracle.hpp"
#include "distgraph/rays.hpp"

namespace distgraph {

namespace {

constexpr double kRayLift = 1e-5;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Frame {
  Box box;
  int size;
  double scale() const { return size / (2 * box.half_width); }
  double x(Complex z) const {
    return (z.real() - box.center.real() + box.half_width) * scale();
  }
  double y(Complex z) const {
    return (box.center.imag() + box.half_width - z.imag()) * scale();
  }
  bool inside(Complex z) const {
    const Complex d = z - box.center;
    return std::abs(d.real()) <= box.half_width &&
           std::abs(d.imag()) <= box.half_width;
  }
};

std::string svg_open(int size) {
  const auto s = std::to_string(size);
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         s + "\" height=\"" + s + "\" viewBox=\"0 0 " + s + " " + s + "\">\n";
}

PortraitAnalysis analysis_with_escape(const ComplexPolynomial& p,
                                      const DynamicsConfig& cfg) {
  auto a = analyze_polynomial(p, cfg);
  if (a.records.empty())
    throw Error(ErrorCode::NoEscapingCritical,
                "no escaping critical point to render");
  return a;
}

Frame frame_for(const ComplexPolynomial& p, const PortraitAnalysis& a,
                int resolution, const DynamicsConfig& cfg) {
  std::vector<Complex> keep;
  for (const auto& r : a.records) keep.push_back(r.point);
  const double m = p.degree();
  return Frame{fit_box(p, m * m * a.top_level, keep, cfg), resolution};
}

// Marching squares on pixel centers; segments are chained into polylines
// through the grid edges they cross.
std::vector<std::vector<Complex>> contour(const GridField& f, double level) {
  const int n = f.resolution();
  auto edge_id = [n](int ix, int iy, bool vertical) {
    return (static_cast<long long>(iy) * n + ix) * 2 + (vertical ? 1 : 0);
  };
  auto crossing = [&](int x0, int y0, int x1, int y1) {
    const double a = f.at(x0, y0), b = f.at(x1, y1);
    const double t = (level - a) / (b - a);
    return f.pixel_center(x0, y0) +
           t * (f.pixel_center(x1, y1) - f.pixel_center(x0, y0));
  };
  std::map<long long, Complex> points;
  std::map<long long, std::vector<long long>> links;
  for (int iy = 0; iy + 1 < n; ++iy)
    for (int ix = 0; ix + 1 < n; ++ix) {
      const std::array<double, 4> v{f.at(ix, iy), f.at(ix + 1, iy),
                                     f.at(ix + 1, iy + 1), f.at(ix, iy + 1)};
      int mask = 0;
      for (int c = 0; c < 4; ++c)
        if (v[c] >= level) mask |= 1 << c;
      if (mask == 0 || mask == 15) continue;
      // Edges: 0 bottom, 1 right, 2 top, 3 left.
      const std::array<long long, 4> ids{
          edge_id(ix, iy, false), edge_id(ix + 1, iy, true),
          edge_id(ix, iy + 1, false), edge_id(ix, iy, true)};
      auto point = [&](int e) {
        if (!points.count(ids[e])) {
          switch (e) {
            case 0: points[ids[e]] = crossing(ix, iy, ix + 1, iy); break;
            case 1: points[ids[e]] = crossing(ix + 1, iy, ix + 1, iy + 1); break;
            case 2: points[ids[e]] = crossing(ix, iy + 1, ix + 1, iy + 1); break;
            default: points[ids[e]] = crossing(ix, iy, ix, iy + 1); break;
          }
        }
      };
      auto link = [&](int a, int b) {
        point(a);
        point(b);
        links[ids[a]].push_back(ids[b]);
        links[ids[b]].push_back(ids[a]);
      };
      std::vector<int> cut;
      for (int e = 0; e < 4; ++e) {
        const bool lo = mask >> e & 1, hi = mask >> ((e + 1) % 4) & 1;
        if (lo != hi) cut.push_back(e);
      }
      if (cut.size() == 2) {
        link(cut[0], cut[1]);
      } else {
        // Saddle: the cell-center average decides which corners connect.
        const double center = (v[0] + v[1] + v[2] + v[3]) / 4;
        const bool joined = (center >= level) == static_cast<bool>(mask & 1);
        if (joined) {
          link(0, 1);
          link(2, 3);
        } else {
          link(3, 0);
          link(1, 2);
        }
      }
    }
  std::vector<std::vector<Complex>> lines;
  std::map<long long, bool> used;
  for (const auto& [start, _] : links) {
    if (used[start]) continue;
    std::vector<Complex> line{points[start]};
    used[start] = true;
    long long prev = -1, at = start;
    for (;;) {
      long long next = -1;
      for (long long cand : links[at])
        if (cand != prev && !used[cand]) {
          next = cand;
          break;
        }
      if (next < 0) break;
      line.push_back(points[next]);
      used[next] = true;
      prev = at;
      at = next;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

std::string render_equipotentials(const ComplexPolynomial& p,
                                  const RenderOptions& opt,
                                  const DynamicsConfig& cfg) {
  const auto a = analysis_with_escape(p, cfg);
  const Frame frame = frame_for(p, a, opt.resolution, cfg);
  const auto field = green_grid(p, frame.box, opt.resolution, cfg, {}, opt.workers);
  const double m = p.degree();
  std::vector<double> levels{m * m * a.top_level, m * a.top_level};
  for (const auto& r : a.records) levels.push_back(r.level.value);

  std::ostringstream os;
  os << svg_open(opt.resolution);
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t l = 0; l < levels.size(); ++l) {
    os << "<path fill=\"none\" stroke=\"" << (l < 2 ? "#1f4e79" : "#b03a2e")
       << "\" stroke-width=\"1\" data-level=\"" << fmt(levels[l]) << "\" d=\"";
    for (const auto& line : contour(field, levels[l])) {
      for (std::size_t q = 0; q < line.size(); ++q)
        os << (q ? " L" : "M") << fmt(frame.x(line[q])) << ' '
           << fmt(frame.y(line[q]));
      os << " Z ";
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_rays(const ComplexPolynomial& p, const RenderOptions& opt,
                        const DynamicsConfig& cfg) {
  const auto a = analysis_with_escape(p, cfg);
  const Frame frame = frame_for(p, a, opt.resolution, cfg);
  std::ostringstream os;
  os << svg_open(opt.resolution);
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& r : a.records) {
    for (const auto& theta : r.co_angles) {
      auto path =
          trace_ray_path(p, theta, r.level.value * (1 + kRayLift), cfg);
      path.push_back(r.point);
      os << "<polyline fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1\" "
            "data-angle=\""
         << theta.to_string() << "\" points=\"";
      bool first = true;
      for (const auto& z : path) {
        if (!frame.inside(z)) continue;
        os << (first ? "" : " ") << fmt(frame.x(z)) << ',' << fmt(frame.y(z));
        first = false;
      }
      os << "\"/>\n";
    }
    os << "<circle cx=\"" << fmt(frame.x(r.point)) << "\" cy=\""
       << fmt(frame.y(r.point)) << "\" r=\"3\" fill=\"#b03a2e\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_regions_svg(const ComponentMap& map) {
  static constexpr const char* kPalette[] = {
      "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
      "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
  std::ostringstream os;
  os << svg_open(map.resolution);
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // One rect per horizontal run of equal labels, top row first.
  for (int iy = map.resolution - 1; iy >= 0; --iy) {
    const int row = map.resolution - 1 - iy;
    for (int ix = 0; ix < map.resolution;) {
      const int id = map.label_at(ix, iy);
      int end = ix + 1;
      while (end < map.resolution && map.label_at(end, iy) == id) ++end;
      if (id != ComponentMap::kBackground)
        os << "<rect x=\"" << ix << "\" y=\"" << row << "\" width=\""
           << end - ix << "\" height=\"1\" fill=\"" << kPalette[id % 10]
           << "\"/>\n";
      ix = end;
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace distgraph
