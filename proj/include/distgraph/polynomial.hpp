#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace distgraph {

using Complex = std::complex<double>;

// Tunable numerics shared by the dynamics and oracle layers.
struct DynamicsConfig {
  double tol_green = 1e-12;
  double tol_angle = 1e-9;
  int max_iter = 10000;
  double esc_radius_factor = 2.0;
};

class ComplexPolynomial {
 public:
  // Coefficients ascending by power; trailing zeros are trimmed.
  // Throws Precondition unless the degree is at least 2.
  explicit ComplexPolynomial(std::vector<Complex> coefficients);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coefficients() const noexcept { return coeffs_; }
  Complex leading() const noexcept { return coeffs_.back(); }

  Complex operator()(Complex z) const;
  // p(z) and p'(z) in one Horner pass.
  std::pair<Complex, Complex> value_and_derivative(Complex z) const;
  // p(z) / (a_m z^m), evaluated without forming z^m.
  Complex leading_ratio(Complex z) const;

  // Sum of |a_i| over i < m.
  double lower_norm() const;

  // Radius beyond which |p(z)| >= 2|z| and |ratio - 1| <= 1/factor.
  double escape_radius(double factor = 2.0) const;

  // phi o p o phi^-1 for phi(z) = scale * z + shift.
  ComplexPolynomial affine_conjugate(Complex scale, Complex shift) const;

 private:
  std::vector<Complex> coeffs_;
};

// Coefficients of the derivative of a coefficient vector.
std::vector<Complex> derivative(std::span<const Complex> coeffs);

// All roots of a polynomial of degree >= 1 (Aberth iteration with Newton
// polishing). Throws RootFindingDiverged.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

struct CriticalPoint {
  Complex point;
  int local_degree;  // 1 + multiplicity as a root of p'
};

// Roots of p' with multiple roots merged. A cluster counts as one point when
// its diameter is within the root-finding noise of a multiple root; distinct
// roots closer than cluster_radius throw IllConditioned.
std::vector<CriticalPoint> critical_points(const ComplexPolynomial& p,
                                           double cluster_radius = 1e-6);

}  // namespace distgraph
