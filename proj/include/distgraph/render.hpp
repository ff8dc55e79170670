#pragma once

#include <string>

#include "distgraph/components.hpp"
#include "distgraph/dynamics.hpp"

namespace distgraph {

struct RenderOptions {
  int resolution = 512;
  unsigned workers = 0;
};

// Closed polylines of the levels m G* and m^2 G* and of every escaping
// critical level, one <path> per level.
std::string render_equipotentials(const ComplexPolynomial& p,
                                  const RenderOptions& opt = {},
                                  const DynamicsConfig& cfg = {});

// Co-angle rays of every escaping critical point, traced down to it.
std::string render_rays(const ComplexPolynomial& p,
                        const RenderOptions& opt = {},
                        const DynamicsConfig& cfg = {});

// Band components of the given depth, one colour per region.
std::string render_regions_svg(const ComponentMap& map);

}  // namespace distgraph
