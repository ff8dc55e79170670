#include "distgraph/components.hpp"

#include <cmath>
#include <deque>
#include <ostream>

#include <json.hpp>

#include "distgraph/dynamics.hpp"
#include "distgraph/error.hpp"

namespace distgraph {

namespace {

constexpr int kNearPixels = 2;

struct Offsets {
  int dx, dy;
};
constexpr Offsets kFour[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
constexpr Offsets kEight[] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                              {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};

template <std::size_t N>
std::vector<char> erode(const std::vector<char>& mask, int res,
                        const Offsets (&nbrs)[N], bool outside_value) {
  std::vector<char> out(mask.size(), 0);
  for (int iy = 0; iy < res; ++iy)
    for (int ix = 0; ix < res; ++ix) {
      const std::size_t at = static_cast<std::size_t>(iy) * res + ix;
      if (!mask[at]) continue;
      bool keep = true;
      for (const auto& o : nbrs) {
        const int x = ix + o.dx, y = iy + o.dy;
        const bool inside = x >= 0 && y >= 0 && x < res && y < res;
        const bool v = inside ? mask[static_cast<std::size_t>(y) * res + x]
                              : outside_value;
        if (!v) {
          keep = false;
          break;
        }
      }
      out[at] = keep;
    }
  return out;
}

// Connected components of mask; returns the count and fills ids.
template <std::size_t N>
int flood(const std::vector<char>& mask, int res, const Offsets (&nbrs)[N],
          std::vector<int>& ids) {
  ids.assign(mask.size(), ComponentMap::kBackground);
  int count = 0;
  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < mask.size(); ++seed) {
    if (!mask[seed] || ids[seed] != ComponentMap::kBackground) continue;
    ids[seed] = count;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t at = stack.back();
      stack.pop_back();
      const int ix = static_cast<int>(at % res), iy = static_cast<int>(at / res);
      for (const auto& o : nbrs) {
        const int x = ix + o.dx, y = iy + o.dy;
        if (x < 0 || y < 0 || x >= res || y >= res) continue;
        const std::size_t nb = static_cast<std::size_t>(y) * res + x;
        if (mask[nb] && ids[nb] == ComponentMap::kBackground) {
          ids[nb] = count;
          stack.push_back(nb);
        }
      }
    }
    ++count;
  }
  return count;
}

// Every raw component must keep at least one eroded pixel.
void require_survivors(const std::vector<int>& raw_ids, int raw_count,
                       const std::vector<char>& eroded, const std::string& what) {
  std::vector<char> seen(raw_count, 0);
  for (std::size_t i = 0; i < raw_ids.size(); ++i)
    if (eroded[i] && raw_ids[i] >= 0) seen[raw_ids[i]] = 1;
  for (char s : seen)
    if (!s)
      throw Error(ErrorCode::ResolutionTooCoarse,
                  what + " thinner than 3 pixels");
}

}  // namespace

Band depth_band(int degree, double top_level, int depth) {
  const double m = degree;
  return Band{top_level * std::pow(m, 1 - depth),
              top_level * std::pow(m, 2 - depth)};
}

ComponentMap label_band(const GridField& field, Band band, int depth) {
  const int res = field.resolution();
  const std::size_t size = static_cast<std::size_t>(res) * res;
  std::vector<char> mask(size), complement(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double g = field.values()[i];
    mask[i] = g != GridField::kNonEscaping && band.contains(g);
    complement[i] = !mask[i];
  }

  ComponentMap map;
  map.depth = depth;
  map.band = band;
  map.box = field.box();
  map.resolution = res;

  // Regions: label the eroded band, then spread labels back over the
  // pixels removed by erosion.
  const auto core = erode(mask, res, kFour, false);
  std::vector<int> raw_ids;
  const int raw_regions = flood(mask, res, kFour, raw_ids);
  const std::string where = " of band [" + std::to_string(band.lo) + ", " +
                            std::to_string(band.hi) + ")";
  require_survivors(raw_ids, raw_regions, core, "a region" + where + " is");
  map.region_count = flood(core, res, kFour, map.labels);

  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < size; ++i)
    if (map.labels[i] != ComponentMap::kBackground) queue.push_back(i);
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    const int ix = static_cast<int>(at % res), iy = static_cast<int>(at / res);
    for (const auto& o : kFour) {
      const int x = ix + o.dx, y = iy + o.dy;
      if (x < 0 || y < 0 || x >= res || y >= res) continue;
      const std::size_t nb = static_cast<std::size_t>(y) * res + x;
      if (mask[nb] && map.labels[nb] == ComponentMap::kBackground) {
        map.labels[nb] = map.labels[at];
        queue.push_back(nb);
      }
    }
  }

  // Complement pieces, with the region outside the box counted as part of
  // whatever touches the box edge.
  const auto gaps = erode(complement, res, kEight, true);
  std::vector<int> gap_ids;
  const int raw_gaps = flood(complement, res, kEight, gap_ids);
  require_survivors(gap_ids, raw_gaps, gaps, "a gap" + where + " is");
  std::vector<int> eroded_gap_ids;
  map.boundary_count = flood(gaps, res, kEight, eroded_gap_ids);
  return map;
}

ComponentMap band_components(const ComplexPolynomial& p, int k,
                             const GridField& field,
                             const DynamicsConfig& cfg) {
  if (k < 0) throw Error(ErrorCode::Precondition, "depth must be >= 0");
  const auto analysis = analyze_polynomial(p, cfg);
  if (analysis.records.empty())
    throw Error(ErrorCode::Precondition, "no escaping critical point");
  return label_band(field, depth_band(p.degree(), analysis.top_level, k), k);
}

int component_of(Complex z, const ComponentMap& map) {
  const double h = map.pixel_size();
  const Complex rel =
      z - map.box.center + Complex(map.box.half_width, map.box.half_width);
  const double fx = std::floor(rel.real() / h), fy = std::floor(rel.imag() / h);
  if (fx < 0 || fy < 0 || fx >= map.resolution || fy >= map.resolution)
    throw Error(ErrorCode::OutsideBand, "point outside the grid box");
  const int ix = static_cast<int>(fx), iy = static_cast<int>(fy);
  const int id = map.label_at(ix, iy);
  if (id == ComponentMap::kBackground)
    throw Error(ErrorCode::OutsideBand, "point not in the band");
  for (int dy = -kNearPixels; dy <= kNearPixels; ++dy)
    for (int dx = -kNearPixels; dx <= kNearPixels; ++dx) {
      const int x = ix + dx, y = iy + dy;
      if (x < 0 || y < 0 || x >= map.resolution || y >= map.resolution ||
          map.label_at(x, y) != id)
        throw Error(ErrorCode::NearBoundary,
                    "point within 2 pixels of a component boundary");
    }
  return id;
}

void write_component_csv(std::ostream& os, const ComponentMap& map) {
  // Top row first so the matrix reads like the picture.
  for (int iy = map.resolution - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < map.resolution; ++ix) {
      if (ix) os << ',';
      os << map.label_at(ix, iy);
    }
    os << "\r\n";
  }
}

std::string component_summary_json(const ComponentMap& map) {
  nlohmann::ordered_json j;
  j["depth"] = map.depth;
  j["regions"] = map.region_count;
  j["boundaries"] = map.boundary_count;
  return j.dump();
}

}  // namespace distgraph
