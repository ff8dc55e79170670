#include "distgraph/rays.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "distgraph/error.hpp"
#include "distgraph/green.hpp"

namespace distgraph {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// p^n(z) and its derivative.
std::pair<Complex, Complex> iterate_with_derivative(const ComplexPolynomial& p,
                                                    Complex z, int n) {
  Complex d = 1;
  for (int i = 0; i < n; ++i) {
    const auto [v, dv] = p.value_and_derivative(z);
    d *= dv;
    z = v;
  }
  return {z, d};
}

Complex solve_iterate(const ComplexPolynomial& p, Complex guess, int n,
                      Complex target, const RayOptions& opt) {
  Complex z = guess;
  auto [fz, dz] = iterate_with_derivative(p, z, n);
  double residual = std::abs(fz - target);
  const double scale = std::max(1.0, std::abs(target));
  for (int it = 0; it < opt.newton_iterations; ++it) {
    if (residual <= 1e-14 * scale) break;
    if (dz == Complex(0)) break;
    Complex step = (fz - target) / dz;
    bool improved = false;
    for (int damp = 0; damp < 30; ++damp) {
      const Complex trial = z - step;
      const auto [ft, dt] = iterate_with_derivative(p, trial, n);
      const double r = std::abs(ft - target);
      if (std::isfinite(r) && r < residual) {
        z = trial;
        fz = ft;
        dz = dt;
        residual = r;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  if (!(residual <= 1e-8 * scale))
    throw Error(ErrorCode::BranchAmbiguity,
                "ray tracing lost the ray (Newton residual " +
                    std::to_string(residual / scale) + ")");
  return z;
}

}  // namespace

std::vector<Complex> trace_ray_path(const ComplexPolynomial& p,
                                    const Angle& angle, double potential,
                                    const DynamicsConfig& cfg,
                                    const RayOptions& opt) {
  if (!(potential > 0))
    throw Error(ErrorCode::Precondition, "ray potential must be positive");
  const int m = p.degree();
  const double outer = outer_potential(p, cfg);
  auto bottcher_point = [&](double g, int n) {
    const double lifted = g * std::pow(static_cast<double>(m), n);
    const double turns = angle.times_power(m, n).value();
    return inverse_bottcher(p, Complex(lifted, kTwoPi * turns), cfg);
  };
  std::vector<Complex> path;
  if (potential >= outer) {
    path.push_back(bottcher_point(potential, 0));
    return path;
  }
  double g = outer;
  Complex z = bottcher_point(g, 0);
  path.push_back(z);
  const double q = std::pow(2.0, -1.0 / opt.steps_per_halving);
  while (g > potential) {
    g = std::max(g * q, potential);
    int n = 0;
    while (g * std::pow(static_cast<double>(m), n) < outer) ++n;
    z = solve_iterate(p, z, n, bottcher_point(g, n), opt);
    path.push_back(z);
  }
  return path;
}

Complex trace_ray(const ComplexPolynomial& p, const Angle& angle,
                  double potential, const DynamicsConfig& cfg,
                  const RayOptions& opt) {
  return trace_ray_path(p, angle, potential, cfg, opt).back();
}

Angle landing_angle(const ComplexPolynomial& p, Complex z,
                    const DynamicsConfig& cfg) {
  const int m = p.degree();
  const double radius = p.escape_radius(cfg.esc_radius_factor);
  std::vector<Complex> orbit{z};
  while (std::abs(orbit.back()) < radius) {
    if (static_cast<int>(orbit.size()) > cfg.max_iter)
      throw Error(ErrorCode::NonEscaping, "orbit does not escape");
    orbit.push_back(p(orbit.back()));
  }
  double turns = log_bottcher(p, orbit.back(), 1e-16, cfg).imag() / kTwoPi;
  Angle theta = Angle::real(turns);
  for (int k = static_cast<int>(orbit.size()) - 2; k >= 0; --k) {
    const Complex target = orbit[k];
    const double level = green(p, target, 1e-15, cfg).value;
    double best = std::numeric_limits<double>::infinity();
    double runner_up = best;
    Angle chosen;
    for (int j = 0; j < m; ++j) {
      const Angle candidate =
          Angle::real((theta.value() + static_cast<double>(j)) / m);
      double dist;
      try {
        dist = std::abs(trace_ray(p, candidate, level, cfg) - target);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BranchAmbiguity) throw;
        continue;  // a ray crashing on a critical point cannot be the one
      }
      if (dist < best) {
        runner_up = best;
        best = dist;
        chosen = candidate;
      } else if (dist < runner_up) {
        runner_up = dist;
      }
    }
    const double scale = std::max(1.0, std::abs(target));
    if (!(best <= 1e-6 * scale) || !(runner_up > 100 * best))
      throw Error(ErrorCode::BranchAmbiguity,
                  "no unique preimage ray lands on the orbit point");
    theta = chosen;
  }
  return theta;
}

}  // namespace distgraph
