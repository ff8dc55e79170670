#pragma once

#include <iosfwd>
#include <vector>

#include "distgraph/grid.hpp"

namespace distgraph {

// Half-open level interval [lo, hi).
struct Band {
  double lo = 0;
  double hi = 0;
  bool contains(double g) const { return g >= lo && g < hi; }
};

// Band of depth k: [m^(1-k) G*, m^(2-k) G*). Depth 0 is the fundamental
// ring between the first two images of the top critical level.
Band depth_band(int degree, double top_level, int depth);

struct ComponentMap {
  static constexpr int kBackground = -1;

  int depth = 0;
  Band band;
  Box box;
  int resolution = 0;
  std::vector<int> labels;  // row-major, kBackground outside the band
  int region_count = 0;
  int boundary_count = 0;

  int label_at(int ix, int iy) const {
    return labels[static_cast<std::size_t>(iy) * resolution + ix];
  }
  double pixel_size() const { return 2 * box.half_width / resolution; }
};

// Regions (4-connected, after a one-pixel erosion) and complement
// components (8-connected, after erosion) of the band on the field.
// Throws ResolutionTooCoarse when erosion loses a whole piece of the band
// or of its complement.
ComponentMap label_band(const GridField& field, Band band, int depth = 0);

// label_band on depth_band(p.degree(), G*, k). Throws Precondition if no
// critical point escapes.
ComponentMap band_components(const ComplexPolynomial& p, int k,
                             const GridField& field,
                             const DynamicsConfig& cfg = {});

// Component id at z. Throws OutsideBand for points off the box or on a
// background pixel and NearBoundary within 2 pixels of another label.
int component_of(Complex z, const ComponentMap& map);

void write_component_csv(std::ostream& os, const ComponentMap& map);
std::string component_summary_json(const ComponentMap& map);

}  // namespace distgraph
