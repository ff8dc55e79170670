#include "distgraph/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "distgraph/error.hpp"

namespace distgraph {

namespace {

constexpr double kTimelineEps = 1e-9;

std::int64_t checked_power(std::int64_t m, int n) {
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / m)
      throw Error(ErrorCode::DepthExceeded, "m^(n+1) overflows");
    r *= m;
  }
  return r;
}

bool is_genericity_message(const std::string& s) {
  return s.rfind("genericity", 0) == 0;
}

}  // namespace

ValidationReport portrait_validate(const CriticalPortrait& p) {
  ValidationReport report;
  auto fail = [&](const std::string& s) { report.violations.push_back(s); };
  const int m = p.degree;
  if (m < 2) {
    fail("degree must be >= 2");
    return report;
  }
  int branching = 0;
  for (std::size_t i = 0; i < p.criticals.size(); ++i) {
    const auto& c = p.criticals[i];
    std::ostringstream where;
    where << "critical " << i << ": ";
    if (c.local_degree < 2) fail(where.str() + "local degree < 2");
    if (c.depth < 0) fail(where.str() + "negative depth");
    if (!(c.level_frac >= 0.0 && c.level_frac < 1.0))
      fail(where.str() + "level fraction outside [0,1)");
    if (static_cast<int>(c.co_angles.size()) != c.local_degree)
      fail(where.str() + "expected " + std::to_string(c.local_degree) +
           " co-angles, got " + std::to_string(c.co_angles.size()));
    for (std::size_t a = 0; a < c.co_angles.size(); ++a) {
      for (std::size_t b = a + 1; b < c.co_angles.size(); ++b) {
        if (angles_coincide(c.co_angles[a], c.co_angles[b]))
          fail(where.str() + "repeated co-angle");
        else if (!is_multiple_of(c.co_angles[b] - c.co_angles[a], m))
          fail(where.str() + "co-angle spacing " +
               (c.co_angles[b] - c.co_angles[a]).to_string() +
               " is not a multiple of 1/" + std::to_string(m));
      }
    }
    branching += c.local_degree - 1;
    if (i > 0) {
      const auto& prev = p.criticals[i - 1];
      if (prev.depth == c.depth && prev.level_frac == c.level_frac)
        fail("genericity violated: criticals " + std::to_string(i - 1) +
             " and " + std::to_string(i) + " share fiber (" +
             std::to_string(c.depth) + ", " + std::to_string(c.level_frac) +
             ")");
      else if (c.timeline() < prev.timeline())
        fail(where.str() + "criticals not sorted by timeline");
    }
  }
  if (branching > m - 1)
    fail("branching bound exceeded: sum(d-1) = " + std::to_string(branching) +
         " > " + std::to_string(m - 1));
  // Critical points less than one fiber apart: the rays crashing at the
  // deeper one cannot separate the co-angles of the shallower one.
  for (std::size_t i = 0; report.ok() && i < p.criticals.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const auto& ci = p.criticals[i];
      const auto& cj = p.criticals[j];
      if (ci.timeline() - cj.timeline() >= 1.0 || cj.co_angles.empty()) continue;
      const auto part = arc_partition(cj, cj.co_angles[0], Orientation::Ccw);
      std::set<int> arcs;
      for (const auto& theta : ci.co_angles) {
        try {
          arcs.insert(locate_in_partition(part, theta));
        } catch (const Error&) {
        }
      }
      if (arcs.size() > 1)
        fail("co-angles of critical " + std::to_string(i) +
             " cross those of critical " + std::to_string(j));
    }
  if (!p.criticals.empty()) {
    const auto& first = p.criticals.front();
    if (first.depth != 0 || first.level_frac != 0.0)
      fail("first critical not at (0, 0)");
    for (const auto& theta : first.co_angles)
      if (!angles_coincide(theta.times_power(m, 1), p.base_angle))
        fail("base angle inconsistency: " + std::to_string(m) + " * " +
             theta.to_string() + " != " + p.base_angle.to_string());
  }
  return report;
}

ArcPartition::ArcPartition(std::vector<Angle> ordered_boundaries,
                           Orientation orientation)
    : boundaries_(std::move(ordered_boundaries)), orientation_(orientation) {
  if (boundaries_.empty())
    throw Error(ErrorCode::EmptySpec, "partition needs at least one co-angle");
}

Angle walk_distance(const Angle& a, const Angle& b, Orientation o) {
  return o == Orientation::Ccw ? ccw_distance(a, b) : ccw_distance(b, a);
}

ArcPartition arc_partition(const CriticalSpec& spec, const Angle& reference,
                           Orientation orientation) {
  if (spec.co_angles.empty())
    throw Error(ErrorCode::EmptySpec, "critical spec has no co-angles");
  auto distance = [&](const Angle& from, const Angle& to) {
    if (angles_coincide(from, to)) return 0.0;
    return walk_distance(from, to, orientation).value();
  };
  std::size_t entry = 0;
  for (std::size_t i = 1; i < spec.co_angles.size(); ++i) {
    const double di = distance(reference, spec.co_angles[i]);
    const double de = distance(reference, spec.co_angles[entry]);
    if (di < de || (di == de && angle_less(spec.co_angles[i],
                                           spec.co_angles[entry])))
      entry = i;
  }
  std::vector<Angle> ordered = spec.co_angles;
  const Angle e = spec.co_angles[entry];
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const Angle& a, const Angle& b) {
                     return distance(e, a) < distance(e, b);
                   });
  return ArcPartition(std::move(ordered), orientation);
}

int locate_in_partition(const ArcPartition& partition, const Angle& angle,
                        bool resolve_exact_hits) {
  const auto& bounds = partition.boundaries();
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (!angles_coincide(bounds[i], angle)) continue;
    if (resolve_exact_hits && angle.exact() && bounds[i].exact())
      return static_cast<int>(i) + 1;
    throw Error(ErrorCode::OnBoundary,
                "angle " + angle.to_string() + " lies on co-angle " +
                    bounds[i].to_string());
  }
  const Angle& e = bounds.front();
  const Angle target = walk_distance(e, angle, partition.orientation());
  int index = 0;
  for (const auto& b : bounds) {
    const Angle db = walk_distance(e, b, partition.orientation());
    if (angle_less(db, target)) ++index;
  }
  return index;
}

Angle trunk_reference(const Angle& base_angle, int degree, int depth,
                      Orientation orientation) {
  const std::int64_t big_m = checked_power(degree, depth + 1);
  // Preimages are (alpha + k) / M; the walk distance from alpha to the k-th
  // one is (k - (M - 1) alpha) / M taken mod 1.
  std::int64_t k = 0;
  if (base_angle.exact()) {
    const __int128 num = static_cast<__int128>(big_m - 1) * base_angle.num();
    const std::int64_t q = base_angle.den();
    const auto fl = static_cast<std::int64_t>(num / q);
    const bool divisible = num % q == 0;
    k = orientation == Orientation::Ccw ? (divisible ? fl : fl + 1) : fl;
    k %= big_m;
    const __int128 p = static_cast<__int128>(base_angle.num()) +
                       static_cast<__int128>(k) * q;
    const __int128 den = static_cast<__int128>(q) * big_m;
    if (den <= std::numeric_limits<std::int64_t>::max())
      return Angle::rational(static_cast<std::int64_t>(p),
                             static_cast<std::int64_t>(den));
    return Angle::real(static_cast<double>(p) / static_cast<double>(den));
  }
  const double x = static_cast<double>(big_m - 1) * base_angle.value();
  const double nearest = std::round(x);
  double kk;
  if (std::abs(x - nearest) < kAngleEps * static_cast<double>(big_m))
    kk = nearest;
  else
    kk = orientation == Orientation::Ccw ? std::ceil(x) : std::floor(x);
  k = static_cast<std::int64_t>(kk) % big_m;
  return Angle::real((base_angle.value() + static_cast<double>(k)) /
                     static_cast<double>(big_m));
}

int iterations_to_ring(double t_i, double t_j) {
  const double gap = t_i - t_j;
  if (gap <= kTimelineEps)
    throw Error(ErrorCode::GenericityViolation,
                "critical timelines not strictly increasing");
  const double nearest = std::round(gap);
  const double up = std::abs(gap - nearest) < kTimelineEps ? nearest
                                                           : std::ceil(gap);
  return static_cast<int>(up) - 1;
}

ComponentNumber component_number(const CriticalPortrait& p, std::size_t i,
                                 Orientation orientation) {
  if (i >= p.criticals.size())
    throw Error(ErrorCode::Precondition, "critical index out of range");
  const auto& target = p.criticals[i];
  if (target.co_angles.empty())
    throw Error(ErrorCode::EmptySpec, "critical spec has no co-angles");
  std::vector<int> entries;
  for (std::size_t j = 0; j < i; ++j) {
    const auto& shallower = p.criticals[j];
    const int s = iterations_to_ring(target.timeline(), shallower.timeline());
    const Angle reference =
        trunk_reference(p.base_angle, p.degree, shallower.depth, orientation);
    const auto partition = arc_partition(shallower, reference, orientation);
    // All co-angles of one critical point lie in a single arc; a co-angle
    // sitting on a boundary (crashed ray) carries no information.
    int arc = 0;
    for (const auto& theta : target.co_angles) {
      int here = 0;
      try {
        here = locate_in_partition(partition, theta.times_power(p.degree, s));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::OnBoundary) throw;
        continue;
      }
      if (arc != 0 && here != arc)
        throw Error(ErrorCode::InvalidPortrait,
                    "co-angles of critical " + std::to_string(i) +
                        " fall in different arcs of critical " +
                        std::to_string(j));
      arc = here;
    }
    if (arc == 0) {
      // Exact portraits resolve a boundary hit by attachment convention.
      const Angle representative = *std::min_element(
          target.co_angles.begin(), target.co_angles.end(), angle_less);
      arc = locate_in_partition(
          partition, representative.times_power(p.degree, s), true);
    }
    if (arc == 0)
      throw Error(ErrorCode::OnBoundary,
                  "every co-angle of critical " + std::to_string(i) +
                      " lies on a boundary of critical " + std::to_string(j));
    entries.push_back(arc);
  }
  entries.push_back(1);
  return ComponentNumber(std::move(entries));
}

InvariantCertificate build_certificate(const CriticalPortrait& p,
                                       Orientation primary) {
  const auto report = portrait_validate(p);
  if (!report.ok()) {
    for (const auto& v : report.violations)
      if (is_genericity_message(v))
        throw Error(ErrorCode::GenericityViolation, v);
    throw Error(ErrorCode::InvalidPortrait, report.violations.front());
  }
  std::vector<LabelledPoint> points;
  for (std::size_t i = 0; i < p.criticals.size(); ++i) {
    const auto& c = p.criticals[i];
    points.push_back(LabelledPoint{
        c.level_frac,
        CriticalLabel(c.local_degree, c.depth,
                      component_number(p, i, primary),
                      component_number(p, i, opposite(primary)))});
  }
  return InvariantCertificate{p.degree, DistinguishingGraph(std::move(points))};
}

}  // namespace distgraph
