#include "distgraph/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>

#include <json.hpp>

#include "distgraph/error.hpp"
#include "distgraph/rays.hpp"

namespace distgraph {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kArrivalLift = 1e-5;  // relative lift above c_j for arrivals
constexpr double kSampleRadii[] = {8, 12, 16, 24, 32};  // in pixels
constexpr int kRefinementStride = 4;
constexpr double kTimelineSnap = 1e-9;

int band_of(double t) {
  const double nearest = std::round(t);
  const double up = std::abs(t - nearest) < kTimelineSnap ? nearest : std::ceil(t);
  return static_cast<int>(up) + 1;
}

std::vector<Complex> escaping_points(const PortraitAnalysis& a) {
  std::vector<Complex> pts;
  for (const auto& r : a.records) pts.push_back(r.point);
  return pts;
}

template <class F>
ComponentMap with_doubling(int resolution, F&& build) {
  try {
    return build(resolution);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ResolutionTooCoarse) throw;
  }
  return build(2 * resolution);
}

// Position of a record in the certificate's graph.
const CriticalLabel* label_for(const InvariantCertificate& cert,
                               const CriticalSpec& spec) {
  const CriticalLabel* best = nullptr;
  double best_gap = 1e-6;
  for (const auto& pt : cert.graph.points()) {
    if (pt.label.depth() != spec.depth ||
        pt.label.local_degree() != spec.local_degree)
      continue;
    const double gap = std::abs(pt.position - spec.level_frac);
    if (gap <= best_gap) {
      best_gap = gap;
      best = &pt.label;
    }
  }
  return best;
}

int arc_starting_at(const ArcPartition& partition, const Angle& start) {
  const auto& b = partition.boundaries();
  for (std::size_t q = 0; q < b.size(); ++q)
    if (angles_coincide(b[q], start)) return static_cast<int>(q) + 1;
  return 0;
}

double ccw_turn(double from, double to) {
  double d = std::fmod(to - from, kTwoPi);
  if (d < 0) d += kTwoPi;
  return d;
}

// Like component_of, but background pixels nearby do not count: only two
// different labels within 2 pixels make the reading ambiguous.
int component_near(Complex z, const ComponentMap& map) {
  const double h = map.pixel_size();
  const Complex rel =
      z - map.box.center + Complex(map.box.half_width, map.box.half_width);
  const int ix = static_cast<int>(std::floor(rel.real() / h));
  const int iy = static_cast<int>(std::floor(rel.imag() / h));
  int id = ComponentMap::kBackground;
  for (int dy = -2; dy <= 2; ++dy)
    for (int dx = -2; dx <= 2; ++dx) {
      const int x = ix + dx, y = iy + dy;
      if (x < 0 || y < 0 || x >= map.resolution || y >= map.resolution)
        throw Error(ErrorCode::OutsideBand, "point at the edge of the grid");
      const int here = map.label_at(x, y);
      if (here == ComponentMap::kBackground) continue;
      if (id != ComponentMap::kBackground && here != id)
        throw Error(ErrorCode::NearBoundary,
                    "point within 2 pixels of two components");
      id = here;
    }
  if (id == ComponentMap::kBackground)
    throw Error(ErrorCode::OutsideBand, "point not in the band");
  return id;
}

EntryCheck read_entry(const ComplexPolynomial& p, const PortraitAnalysis& a,
                      std::size_t i, std::size_t j, int resolution,
                      const DynamicsConfig& cfg, unsigned workers) {
  EntryCheck check;
  check.critical = i;
  check.shallower = j;
  const auto& ri = a.records[i];
  const auto& rj = a.records[j];
  const auto& spec_j = a.portrait.criticals[j];
  const int m = p.degree();

  Complex w = ri.point;
  for (int s = iterations_to_ring(ri.timeline, rj.timeline); s > 0; --s) w = p(w);
  const double level = rj.level.value;
  const Complex cj = rj.point;

  const std::vector<Complex> keep{cj, w};
  const auto map = with_doubling(resolution, [&](int res) {
    const Box box = fit_box(p, level, keep, cfg);
    const auto field = green_grid(p, box, res, cfg, keep, workers);
    return label_band(field, Band{level / m, level});
  });

  int w_id = -1;
  try {
    w_id = component_near(w, map);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NearBoundary && e.code() != ErrorCode::OutsideBand)
      throw;
    check.note = "image point unresolved: " + std::string(e.what());
    return check;
  }

  // Arrival directions of the co-angle rays, in ascending angle order.
  std::vector<Angle> co = rj.co_angles;
  std::sort(co.begin(), co.end(), angle_less);
  std::vector<double> beta;
  for (const auto& theta : co) {
    const Complex end = trace_ray(p, theta, level * (1 + kArrivalLift), cfg);
    beta.push_back(std::arg(end - cj));
  }
  // The ccw order of arrivals around c_j must repeat the ccw order of the
  // angles, otherwise the sectors cannot be matched to arcs.
  const std::size_t d = co.size();
  double total = 0;
  for (std::size_t q = 0; q < d; ++q) total += ccw_turn(beta[q], beta[(q + 1) % d]);
  if (d > 1 && std::abs(total - kTwoPi) > 1e-6) {
    check.status = EntryCheck::Status::Mismatch;
    check.note = "ray arrivals around critical " + std::to_string(j) +
                 " are out of cyclic order";
    return check;
  }

  // Sector q lies between the arrivals of co[q] and co[q+1]; it opens into
  // the lobe of the arc (co[q], co[q+1]).
  std::vector<int> sector_id(d, -1);
  for (std::size_t q = 0; q < d; ++q) {
    const double from = beta[q];
    const double span = d == 1 ? kTwoPi : ccw_turn(from, beta[(q + 1) % d]);
    const double mid = from + span / 2;
    for (double r : kSampleRadii) {
      const Complex z = cj + r * map.pixel_size() * std::polar(1.0, mid);
      try {
        sector_id[q] = component_of(z, map);
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NearBoundary &&
            e.code() != ErrorCode::OutsideBand)
          throw;
      }
    }
  }
  std::set<int> distinct;
  for (int id : sector_id) {
    if (id < 0) {
      check.note = "a lobe sample of critical " + std::to_string(j) +
                   " is unresolved";
      return check;
    }
    distinct.insert(id);
  }
  if (distinct.size() != d) {
    check.note = "lobes of critical " + std::to_string(j) +
                 " are not separated on the grid";
    return check;
  }
  std::size_t sector = d;
  for (std::size_t q = 0; q < d; ++q)
    if (sector_id[q] == w_id) sector = q;
  if (sector == d) {
    check.note = "image point lies in a component not adjacent to critical " +
                 std::to_string(j);
    return check;
  }

  const Angle& start = co[sector];
  const Angle& end = co[(sector + 1) % d];
  const auto ccw = arc_partition(
      spec_j,
      trunk_reference(a.portrait.base_angle, m, spec_j.depth, Orientation::Ccw),
      Orientation::Ccw);
  const auto cw = arc_partition(
      spec_j,
      trunk_reference(a.portrait.base_angle, m, spec_j.depth, Orientation::Cw),
      Orientation::Cw);
  check.oracle_ccw = arc_starting_at(ccw, start);
  check.oracle_cw = arc_starting_at(cw, end);
  if (check.oracle_ccw == 0 || check.oracle_cw == 0)
    check.note = "sector boundary does not match a co-angle";
  return check;
}

// Each region of the finer map must land in a single region of the coarser
// one under p.
void check_refinement(const ComplexPolynomial& p, const ComponentMap& fine,
                      const ComponentMap& coarse,
                      std::vector<std::string>& failures) {
  std::map<int, std::set<int>> images;
  const double h = fine.pixel_size();
  const Complex origin =
      fine.box.center - Complex(fine.box.half_width, fine.box.half_width);
  for (int iy = 0; iy < fine.resolution; iy += kRefinementStride)
    for (int ix = 0; ix < fine.resolution; ix += kRefinementStride) {
      const int id = fine.label_at(ix, iy);
      if (id == ComponentMap::kBackground) continue;
      const Complex z = origin + Complex((ix + 0.5) * h, (iy + 0.5) * h);
      try {
        images[id].insert(component_of(p(z), coarse));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NearBoundary &&
            e.code() != ErrorCode::OutsideBand)
          throw;
      }
    }
  for (const auto& [id, targets] : images)
    if (targets.size() > 1)
      failures.push_back("depth " + std::to_string(fine.depth) + " region " +
                         std::to_string(id) + " maps into " +
                         std::to_string(targets.size()) + " regions of depth " +
                         std::to_string(coarse.depth));
}

}  // namespace

ComponentMap depth_components(const ComplexPolynomial& p,
                              const PortraitAnalysis& analysis, int depth,
                              int resolution, const DynamicsConfig& cfg,
                              unsigned workers) {
  if (analysis.records.empty())
    throw Error(ErrorCode::Precondition, "no escaping critical point");
  if (depth < 0) throw Error(ErrorCode::Precondition, "depth must be >= 0");
  const Band band = depth_band(p.degree(), analysis.top_level, depth);
  const auto keep = escaping_points(analysis);
  return with_doubling(resolution, [&](int res) {
    const Box box = fit_box(p, band.hi, keep, cfg);
    const auto field = green_grid(p, box, res, cfg, keep, workers);
    return label_band(field, band, depth);
  });
}

int ConsistencyReport::conclusive_entries() const {
  return static_cast<int>(std::count_if(
      entries.begin(), entries.end(), [](const EntryCheck& e) {
        return e.status != EntryCheck::Status::Inconclusive;
      }));
}

ConsistencyReport consistency_report(const ComplexPolynomial& p,
                                     const InvariantCertificate& cert,
                                     int depth, const OracleOptions& opt,
                                     const DynamicsConfig& cfg) {
  if (opt.resolution < kMinResolution)
    throw Error(ErrorCode::Precondition, "resolution must be >= 64");
  if (depth < 0) throw Error(ErrorCode::Precondition, "depth must be >= 0");
  ConsistencyReport report;
  report.depth = depth;
  const auto analysis = analyze_polynomial(p, cfg);
  auto& failures = report.failures;

  if (cert.degree != p.degree())
    failures.push_back("certificate degree " + std::to_string(cert.degree) +
                       " differs from polynomial degree " +
                       std::to_string(p.degree()));
  if (cert.graph.size() != analysis.records.size())
    failures.push_back("certificate has " + std::to_string(cert.graph.size()) +
                       " labels for " + std::to_string(analysis.records.size()) +
                       " escaping critical points");
  if (analysis.records.empty() || !failures.empty()) return report;

  // Band counts against the ring and boundary-growth pattern.
  std::vector<std::optional<ComponentMap>> maps;
  std::optional<DepthCounts> previous;
  for (int k = 0; k <= depth; ++k) {
    const std::string where = "depth " + std::to_string(k);
    try {
      maps.emplace_back(depth_components(p, analysis, k, opt.resolution, cfg,
                                         opt.workers));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResolutionTooCoarse) throw;
      maps.emplace_back(std::nullopt);
      report.counts.push_back({k, 0, 0, 2 * opt.resolution, false});
      continue;
    }
    const auto& map = *maps.back();
    report.counts.push_back({k, map.region_count, map.boundary_count,
                             map.resolution, true});
    if (k == 0 && (map.region_count != 1 || map.boundary_count != 2))
      failures.push_back(where + " is not a single ring");
    if (k == 1) {
      const int expected = analysis.records.front().local_degree + 1;
      if (map.region_count != 1 || map.boundary_count != expected)
        failures.push_back(where + " expected 1 region with " +
                           std::to_string(expected) + " boundary curves");
    }
    if (previous && map.region_count < previous->regions)
      failures.push_back(where + " has fewer regions than depth " +
                         std::to_string(previous->depth));
    if (k > 0 && maps[k - 1]) check_refinement(p, map, *maps[k - 1], failures);
    if (opt.check_stability) {
      const auto twice = depth_components(p, analysis, k, 2 * map.resolution,
                                          cfg, opt.workers);
      if (twice.region_count != map.region_count ||
          twice.boundary_count != map.boundary_count)
        throw Error(ErrorCode::ResolutionTooCoarse,
                    where + " counts change when the resolution doubles");
    }
    previous = report.counts.back();
  }
  maps.clear();

  // Compound-number entries of every critical point in bands 1..depth.
  for (std::size_t i = 0; i < analysis.records.size(); ++i) {
    if (band_of(analysis.records[i].timeline) > depth) continue;
    const auto& spec = analysis.portrait.criticals[i];
    const CriticalLabel* label = label_for(cert, spec);
    if (!label) {
      failures.push_back("no certificate label for critical " +
                         std::to_string(i));
      continue;
    }
    const auto& first = label->first().entries();
    const auto& second = label->second().entries();
    if (first.size() != i + 1 || second.size() != i + 1) {
      failures.push_back("compound numbers of critical " + std::to_string(i) +
                         " have the wrong length");
      continue;
    }
    std::vector<EntryCheck> checks;
    for (std::size_t j = 0; j < i; ++j) {
      auto c = read_entry(p, analysis, i, j, opt.resolution, cfg, opt.workers);
      if (c.status == EntryCheck::Status::Inconclusive && c.oracle_ccw == 0)
        c = read_entry(p, analysis, i, j, 2 * opt.resolution, cfg, opt.workers);
      checks.push_back(c);
    }
    // The pair is unordered: the grid readings must fit one of the two
    // ways of assigning orientations to it.
    auto fits = [&](const std::vector<int>& ccw, const std::vector<int>& cw) {
      for (const auto& c : checks) {
        if (c.oracle_ccw == 0 || c.oracle_cw == 0) continue;
        if (ccw[c.shallower] != c.oracle_ccw || cw[c.shallower] != c.oracle_cw)
          return false;
      }
      return true;
    };
    const bool ok = fits(first, second) || fits(second, first);
    for (auto& c : checks) {
      if (c.oracle_ccw != 0 && c.oracle_cw != 0)
        c.status = ok ? EntryCheck::Status::Match : EntryCheck::Status::Mismatch;
      else if (c.status == EntryCheck::Status::Mismatch)
        failures.push_back("critical " + std::to_string(i) + ": " + c.note);
      report.entries.push_back(c);
    }
    if (!ok)
      failures.push_back(
          "critical " + std::to_string(i) + " at depth " +
          std::to_string(band_of(analysis.records[i].timeline)) +
          ": flood fill disagrees with its compound numbers");
  }
  return report;
}

void require_consistent(const ConsistencyReport& report) {
  if (!report.consistent())
    throw Error(ErrorCode::InconsistentCombinatorics, report.failures.front());
}

InvariantCertificate corrupt_certificate(const InvariantCertificate& cert) {
  auto points = cert.graph.points();
  for (auto it = points.rbegin(); it != points.rend(); ++it) {
    const auto& label = it->label;
    if (label.first().size() < 2) continue;
    auto entries = label.first().entries();
    entries.front() = entries.front() == 1 ? 2 : entries.front() - 1;
    it->label = CriticalLabel(label.local_degree(), label.depth(),
                              ComponentNumber(std::move(entries)),
                              label.second());
    return InvariantCertificate{cert.degree, DistinguishingGraph(points)};
  }
  throw Error(ErrorCode::Precondition, "certificate has no entry to corrupt");
}

std::string report_to_json(const ConsistencyReport& report) {
  nlohmann::ordered_json j;
  j["depth"] = report.depth;
  j["consistent"] = report.consistent();
  auto counts = nlohmann::ordered_json::array();
  for (const auto& c : report.counts)
    counts.push_back({{"depth", c.depth},
                      {"regions", c.regions},
                      {"boundaries", c.boundaries},
                      {"resolution", c.resolution},
                      {"resolved", c.resolved}});
  j["counts"] = counts;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    const char* status = e.status == EntryCheck::Status::Match      ? "match"
                         : e.status == EntryCheck::Status::Mismatch ? "mismatch"
                                                                    : "inconclusive";
    nlohmann::ordered_json entry{{"critical", e.critical},
                                 {"shallower", e.shallower},
                                 {"ccw", e.oracle_ccw},
                                 {"cw", e.oracle_cw},
                                 {"status", status}};
    if (!e.note.empty()) entry["note"] = e.note;
    entries.push_back(entry);
  }
  j["entries"] = entries;
  j["failures"] = report.failures;
  return j.dump(2);
}

}  // namespace distgraph
