#pragma once

#include <vector>

#include "distgraph/angle.hpp"
#include "distgraph/polynomial.hpp"

namespace distgraph {

struct RayOptions {
  int steps_per_halving = 8;  // potential samples per halving of G
  int newton_iterations = 60;
};

// Point of the external ray of the given angle at potential level.
// Throws BranchAmbiguity if Newton's method fails along the way.
Complex trace_ray(const ComplexPolynomial& p, const Angle& angle,
                  double potential, const DynamicsConfig& cfg = {},
                  const RayOptions& opt = {});

// Every sample of the same walk, from the outer level down to potential.
std::vector<Complex> trace_ray_path(const ComplexPolynomial& p,
                                    const Angle& angle, double potential,
                                    const DynamicsConfig& cfg = {},
                                    const RayOptions& opt = {});

// Angle of the ray through z, found by pulling the Boettcher angle of a far
// orbit point back one step at a time and keeping the preimage whose ray
// lands on the orbit point. Throws NonEscaping, BranchAmbiguity.
Angle landing_angle(const ComplexPolynomial& p, Complex z,
                    const DynamicsConfig& cfg = {});

}  // namespace distgraph
