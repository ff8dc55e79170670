#pragma once

#include <vector>

#include "distgraph/graph.hpp"
#include "distgraph/green.hpp"
#include "distgraph/polynomial.hpp"
#include "distgraph/portrait.hpp"
#include "distgraph/rays.hpp"

namespace distgraph {

struct CriticalStatus {
  CriticalPoint critical;
  bool escaping = false;
  GreenEstimate level;  // meaningful only when escaping
};

// Escape status and Green level of every critical point.
std::vector<CriticalStatus> critical_census(const ComplexPolynomial& p,
                                            const DynamicsConfig& cfg = {});

struct CriticalOrbitRecord {
  Complex point;
  int local_degree = 2;
  GreenEstimate level;
  double timeline = 0;       // 0 for the highest escaping critical point
  Angle value_angle;         // external angle of the critical value
  std::vector<Angle> co_angles;
};

struct PortraitAnalysis {
  CriticalPortrait portrait;
  std::vector<CriticalOrbitRecord> records;  // parallel to criticals
  double top_level = 0;                      // G* (0 when nothing escapes)
};

// Escaping critical data in portrait order. Bounded critical orbits are
// dropped; a polynomial with none escaping yields an empty portrait.
// Throws GenericityViolation, BranchAmbiguity, RootFindingDiverged,
// IllConditioned.
PortraitAnalysis analyze_polynomial(const ComplexPolynomial& p,
                                    const DynamicsConfig& cfg = {});

CriticalPortrait portrait_of(const ComplexPolynomial& p,
                             const DynamicsConfig& cfg = {});

InvariantCertificate invariant_of(const ComplexPolynomial& p,
                                  const DynamicsConfig& cfg = {},
                                  Orientation primary = Orientation::Ccw);

bool polys_equivalent(const ComplexPolynomial& p, const ComplexPolynomial& q,
                      const DynamicsConfig& cfg = {});

}  // namespace distgraph
