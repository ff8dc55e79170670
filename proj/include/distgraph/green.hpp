#pragma once

#include "distgraph/polynomial.hpp"

namespace distgraph {

struct GreenEstimate {
  double value = 0;        // G(z), natural-log units
  double error_bound = 0;  // bound on |value - G(z)|
  int iterations_used = 0;
};

// Escape-rate potential G(z) = lim m^-k log|p^k(z)|, including the
// log|a_m|/(m-1) normalization. Throws NonEscaping for bounded orbits.
GreenEstimate green(const ComplexPolynomial& p, Complex z, double tol,
                    const DynamicsConfig& cfg = {});

// Whether the orbit of z leaves the escape disk within cfg.max_iter steps.
bool escapes(const ComplexPolynomial& p, Complex z,
             const DynamicsConfig& cfg = {});

// External angle in turns from the principal-branch telescoping
// arg(z_k) / m^k. Consistent with angle m-tupling along every orbit; agrees
// with the Boettcher angle near infinity. Throws NonEscaping and
// BranchAmbiguity.
double external_angle(const ComplexPolynomial& p, Complex z, double tol,
                      const DynamicsConfig& cfg = {});

// log phi(w), phi the Boettcher coordinate tangent to lambda*w at infinity
// (lambda^(m-1) = a_m, principal root). Requires |w| >= escape radius.
// Real part is G(w); imaginary part is 2*pi*angle (not reduced).
Complex log_bottcher(const ComplexPolynomial& p, Complex w, double tol,
                     const DynamicsConfig& cfg = {});

// Inverse of log_bottcher near infinity: w with log phi(w) = target.
// Requires Re(target) large enough that the solution lies outside the
// escape radius; throws Precondition otherwise.
Complex inverse_bottcher(const ComplexPolynomial& p, Complex target,
                         const DynamicsConfig& cfg = {});

// Potential level above which inverse_bottcher is guaranteed to work.
double outer_potential(const ComplexPolynomial& p,
                       const DynamicsConfig& cfg = {});

}  // namespace distgraph
