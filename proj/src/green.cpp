#include "distgraph/green.hpp"

#include <cmath>
#include <numbers>

#include "distgraph/error.hpp"

namespace distgraph {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

Complex log_lambda(const ComplexPolynomial& p) {
  return std::log(p.leading()) / static_cast<double>(p.degree() - 1);
}

// Magnitude beyond which one more step could overflow a double.
double overflow_guard(int m) { return std::exp(600.0 / m); }

// Walks the orbit until it leaves the escape disk; returns the step count.
int steps_to_escape(const ComplexPolynomial& p, Complex& z,
                    const DynamicsConfig& cfg) {
  const double radius = p.escape_radius(cfg.esc_radius_factor);
  int k = 0;
  while (std::abs(z) < radius) {
    if (k >= cfg.max_iter)
      throw Error(ErrorCode::NonEscaping,
                  "orbit stays within the escape radius after " +
                      std::to_string(cfg.max_iter) + " iterations");
    z = p(z);
    ++k;
  }
  return k;
}

struct Tail {
  Complex sum;   // sum_j log(ratio_j) / m^(j+1)
  double bound;  // bound on the omitted remainder
  int steps;
};

// Telescoping sum from a point outside the escape radius.
Tail outer_tail(const ComplexPolynomial& p, Complex w, double tol) {
  const int m = p.degree();
  const double c = p.lower_norm() / std::abs(p.leading());
  Tail t{0, 0, 0};
  double weight = 1.0 / m;
  // |log ratio| <= 2c/|w| and |w| at least doubles per step.
  auto remainder = [&](Complex at) { return 4.0 * c / std::abs(at) * weight; };
  while (c > 0 && remainder(w) > tol && std::abs(w) < overflow_guard(m)) {
    t.sum += std::log(p.leading_ratio(w)) * weight;
    w = p(w);
    weight /= m;
    ++t.steps;
  }
  t.bound = c > 0 ? remainder(w) : 0.0;
  return t;
}

}  // namespace

bool escapes(const ComplexPolynomial& p, Complex z, const DynamicsConfig& cfg) {
  try {
    steps_to_escape(p, z, cfg);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NonEscaping) return false;
    throw;
  }
}

Complex log_bottcher(const ComplexPolynomial& p, Complex w, double tol,
                     const DynamicsConfig& cfg) {
  if (std::abs(w) < p.escape_radius(cfg.esc_radius_factor))
    throw Error(ErrorCode::Precondition,
                "log_bottcher needs a point outside the escape radius");
  const auto tail = outer_tail(p, w, tol);
  return log_lambda(p) + std::log(w) + tail.sum;
}

GreenEstimate green(const ComplexPolynomial& p, Complex z, double tol,
                    const DynamicsConfig& cfg) {
  if (!(tol > 0)) throw Error(ErrorCode::Precondition, "tolerance must be > 0");
  const int m = p.degree();
  const int k = steps_to_escape(p, z, cfg);
  const double shrink = std::pow(static_cast<double>(m), -k);
  const auto tail = outer_tail(p, z, tol / shrink);
  GreenEstimate g;
  g.value = (log_lambda(p).real() + std::log(std::abs(z)) + tail.sum.real()) *
            shrink;
  g.error_bound = tail.bound * shrink;
  g.iterations_used = k + tail.steps;
  return g;
}

double external_angle(const ComplexPolynomial& p, Complex z, double tol,
                      const DynamicsConfig& cfg) {
  const int m = p.degree();
  const double radius = p.escape_radius(cfg.esc_radius_factor);
  // arg lambda + arg z + sum_k arg(ratio_k) / m^(k+1), principal branches.
  Complex probe = z;
  steps_to_escape(p, probe, cfg);
  if (z == Complex(0))
    throw Error(ErrorCode::BranchAmbiguity, "argument of 0 is undefined");
  double acc = std::arg(z);
  double weight = 1.0 / m;
  int k = 0;
  while (std::abs(z) < radius) {
    if (k >= cfg.max_iter)
      throw Error(ErrorCode::NonEscaping, "orbit does not escape");
    const Complex ratio = p.leading_ratio(z);
    const double step = std::arg(ratio);
    if (std::abs(step) >= std::numbers::pi / 2 || !std::isfinite(step))
      throw Error(ErrorCode::BranchAmbiguity,
                  "per-step argument correction too large at iteration " +
                      std::to_string(k));
    acc += step * weight;
    z = p(z);
    if (z == Complex(0))
      throw Error(ErrorCode::BranchAmbiguity, "orbit passes through 0");
    weight /= m;
    ++k;
  }
  const auto tail = outer_tail(p, z, tol * kTwoPi / (weight * m));
  acc += tail.sum.imag() * weight * m;
  acc += log_lambda(p).imag();
  double turns = acc / kTwoPi;
  turns -= std::floor(turns);
  if (turns >= 1.0) turns = 0.0;
  return turns;
}

double outer_potential(const ComplexPolynomial& p, const DynamicsConfig& cfg) {
  // G(w) >= log|lambda w| - log 2 for |w| >= R; one extra unit of margin.
  const double radius = p.escape_radius(cfg.esc_radius_factor);
  return log_lambda(p).real() + std::log(4.0 * radius) + 1.0;
}

Complex inverse_bottcher(const ComplexPolynomial& p, Complex target,
                         const DynamicsConfig& cfg) {
  const double radius = p.escape_radius(cfg.esc_radius_factor);
  const Complex ll = log_lambda(p);
  Complex w = std::exp(target - ll);
  for (int iter = 0; iter < 100; ++iter) {
    if (std::abs(w) < radius)
      throw Error(ErrorCode::Precondition,
                  "inverse Boettcher target too close to the Julia set");
    const auto tail = outer_tail(p, w, 1e-17);
    // Keep the imaginary part on the branch of the target.
    const Complex next = std::exp(target - ll - tail.sum);
    const bool done = std::abs(next - w) <= 1e-15 * std::abs(w);
    w = next;
    if (done) break;
  }
  return w;
}

}  // namespace distgraph
