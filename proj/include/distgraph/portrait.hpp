#pragma once

#include <cstddef>
#include <vector>

#include "distgraph/angle.hpp"
#include "distgraph/graph.hpp"

namespace distgraph {

enum class Orientation { Ccw, Cw };

inline Orientation opposite(Orientation o) {
  return o == Orientation::Ccw ? Orientation::Cw : Orientation::Ccw;
}

// Symbolic data of one escaping critical point.
struct CriticalSpec {
  int local_degree = 2;
  int depth = 0;         // n, integer part of the timeline coordinate
  double level_frac = 0;  // y', fractional part in [0, 1)
  // External angles of the d rays that crash together at the point.
  std::vector<Angle> co_angles;

  double timeline() const { return depth + level_frac; }
};

struct CriticalPortrait {
  int degree = 2;
  Angle base_angle;  // angle of the first critical value
  std::vector<CriticalSpec> criticals;  // ascending by timeline
};

ValidationReport portrait_validate(const CriticalPortrait& p);

// The circle minus a critical point's co-angles, arcs numbered 1..d in the
// walk direction starting at the entry co-angle.
class ArcPartition {
 public:
  ArcPartition(std::vector<Angle> ordered_boundaries, Orientation orientation);

  Orientation orientation() const noexcept { return orientation_; }
  std::size_t arc_count() const noexcept { return boundaries_.size(); }
  // boundaries()[0] is the entry co-angle; arc k runs from boundaries()[k-1]
  // to the next boundary in the walk direction.
  const std::vector<Angle>& boundaries() const noexcept { return boundaries_; }

 private:
  std::vector<Angle> boundaries_;
  Orientation orientation_;
};

// Distance walked from a to b in the given orientation, in [0, 1).
Angle walk_distance(const Angle& a, const Angle& b, Orientation o);

// Throws EmptySpec when the spec has no co-angles.
ArcPartition arc_partition(const CriticalSpec& spec, const Angle& reference,
                           Orientation orientation);

// Index (1-based) of the arc containing angle. An angle on a boundary
// raises OnBoundary, except that exact hits on exact boundaries are given
// to the arc starting there when resolve_exact_hits is set.
int locate_in_partition(const ArcPartition& partition, const Angle& angle,
                        bool resolve_exact_hits = false);

// Start of the numbering walk at depth n: the preimage of the base angle
// under t -> m^(n+1) t nearest to it in the walk direction.
Angle trunk_reference(const Angle& base_angle, int degree, int depth,
                      Orientation orientation);

// Forward iterations that carry critical i into the ring just below
// critical j's fiber: ceil(t_i - t_j) - 1.
int iterations_to_ring(double t_i, double t_j);

ComponentNumber component_number(const CriticalPortrait& p, std::size_t i,
                                 Orientation orientation);

InvariantCertificate build_certificate(
    const CriticalPortrait& p, Orientation primary = Orientation::Ccw);

}  // namespace distgraph
