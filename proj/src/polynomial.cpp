#include "distgraph/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "distgraph/error.hpp"

namespace distgraph {

namespace {

Complex horner(std::span<const Complex> c, Complex z) {
  Complex r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

double scale_at(std::span<const Complex> c, Complex z) {
  double s = 0;
  const double r = std::max(1.0, std::abs(z));
  double rp = 1;
  for (const auto& a : c) {
    s += std::abs(a) * rp;
    rp *= r;
  }
  return s;
}

std::vector<Complex> trimmed(std::vector<Complex> c) {
  while (c.size() > 1 && c.back() == Complex(0)) c.pop_back();
  return c;
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coefficients)
    : coeffs_(trimmed(std::move(coefficients))) {
  if (coeffs_.size() < 3)
    throw Error(ErrorCode::Precondition, "polynomial degree must be >= 2");
  for (const auto& a : coeffs_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw Error(ErrorCode::Precondition, "non-finite coefficient");
}

Complex ComplexPolynomial::operator()(Complex z) const {
  return horner(coeffs_, z);
}

std::pair<Complex, Complex> ComplexPolynomial::value_and_derivative(
    Complex z) const {
  Complex v = 0, dv = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    dv = dv * z + v;
    v = v * z + *it;
  }
  return {v, dv};
}

Complex ComplexPolynomial::leading_ratio(Complex z) const {
  // 1 + sum_{i<m} (a_i / a_m) z^(i-m), Horner in 1/z.
  const Complex w = 1.0 / z;
  Complex r = 0;
  const int m = degree();
  for (int i = 0; i < m; ++i) r = r * w + coeffs_[i] / coeffs_[m];
  // r now holds sum_i (a_i/a_m) w^(m-1-i); one more factor of w.
  return 1.0 + r * w;
}

double ComplexPolynomial::lower_norm() const {
  double s = 0;
  for (int i = 0; i < degree(); ++i) s += std::abs(coeffs_[i]);
  return s;
}

double ComplexPolynomial::escape_radius(double factor) const {
  const double lead = std::abs(leading());
  const double by_lower = factor * lower_norm() / lead;
  const double by_lead = std::pow(4.0 / lead, 1.0 / (degree() - 1));
  return std::max({2.0, by_lower, by_lead});
}

ComplexPolynomial ComplexPolynomial::affine_conjugate(Complex scale,
                                                      Complex shift) const {
  if (scale == Complex(0))
    throw Error(ErrorCode::Precondition, "affine scale must be non-zero");
  // p(alpha w + beta), built by Horner over polynomials in w.
  const Complex alpha = 1.0 / scale;
  const Complex beta = -shift / scale;
  std::vector<Complex> acc{coeffs_.back()};
  for (int i = degree() - 1; i >= 0; --i) {
    std::vector<Complex> next(acc.size() + 1, Complex(0));
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += acc[k] * beta;
      next[k + 1] += acc[k] * alpha;
    }
    next[0] += coeffs_[i];
    acc = std::move(next);
  }
  for (auto& c : acc) c *= scale;
  acc[0] += shift;
  return ComplexPolynomial(std::move(acc));
}

std::vector<Complex> derivative(std::span<const Complex> coeffs) {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    d.push_back(coeffs[i] * static_cast<double>(i));
  if (d.empty()) d.push_back(0);
  return d;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  while (c.size() > 1 && c.back() == Complex(0)) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) throw Error(ErrorCode::Precondition, "constant polynomial");
  if (n == 1) return {-c[0] / c[1]};

  // Cauchy bound for the initial circle.
  double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i] / c[n]));
  bound = 1 + bound;
  const auto dc = derivative(c);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k)
    z[k] = std::polar(0.5 * bound, 2 * std::numbers::pi * (k + 0.25) / n + 0.4);

  bool converged = false;
  for (int iter = 0; iter < 2000 && !converged; ++iter) {
    converged = true;
    for (int k = 0; k < n; ++k) {
      const Complex v = horner(c, z[k]);
      if (v == Complex(0)) continue;
      const Complex ratio = v / horner(dc, z[k]);
      Complex repel = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) repel += 1.0 / (z[k] - z[j]);
      const Complex step = ratio / (1.0 - ratio * repel);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      if (std::abs(step) > 1e-15 * std::max(1.0, std::abs(z[k])))
        converged = false;
    }
  }
  for (const auto& r : z)
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
      throw Error(ErrorCode::RootFindingDiverged, "non-finite root estimate");
  // Multiple roots converge linearly; a residual test replaces the step test.
  for (const auto& r : z) {
    if (std::abs(horner(c, r)) > 1e-6 * scale_at(c, r))
      throw Error(ErrorCode::RootFindingDiverged, "root residual too large");
  }
  return z;
}

namespace {

// Groups of roots linked transitively within radius.
std::vector<std::vector<Complex>> link_roots(const std::vector<Complex>& roots,
                                             double radius) {
  std::vector<bool> used(roots.size(), false);
  std::vector<std::vector<Complex>> groups;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::vector<Complex> group{roots[i]};
    used[i] = true;
    for (std::size_t pass = 0; pass < group.size(); ++pass)
      for (std::size_t j = 0; j < roots.size(); ++j)
        if (!used[j] && std::abs(roots[j] - group[pass]) <= radius) {
          used[j] = true;
          group.push_back(roots[j]);
        }
    groups.push_back(std::move(group));
  }
  return groups;
}

double diameter(const std::vector<Complex>& g) {
  double d = 0;
  for (const auto& a : g)
    for (const auto& b : g) d = std::max(d, std::abs(a - b));
  return d;
}

// A k-fold root comes out of double-precision root finding as a cluster of
// diameter about eps^(1/k); twenty times that is still one point.
double multiple_root_noise(int k, Complex center) {
  return 20 * std::pow(std::numeric_limits<double>::epsilon(), 1.0 / k) *
         std::max(1.0, std::abs(center));
}

Complex mean(const std::vector<Complex>& g) {
  Complex c = 0;
  for (const auto& r : g) c += r;
  return c / static_cast<double>(g.size());
}

// Splits a group into multiple roots, refining the link radius until every
// piece is either one point or a cluster too tight to be distinct roots.
void resolve_group(const std::vector<Complex>& group, double radius,
                   double cluster_radius, std::vector<CriticalPoint>& out) {
  const int k = static_cast<int>(group.size());
  const Complex center = mean(group);
  if (k == 1 || diameter(group) <= multiple_root_noise(k, center)) {
    out.push_back({center, k + 1});
    return;
  }
  if (radius <= cluster_radius)
    throw Error(ErrorCode::IllConditioned,
                "distinct critical points closer than the cluster radius");
  const double finer = std::max(radius / 10, cluster_radius);
  for (const auto& piece : link_roots(group, finer))
    resolve_group(piece, finer, cluster_radius, out);
}

}  // namespace

std::vector<CriticalPoint> critical_points(const ComplexPolynomial& p,
                                           double cluster_radius) {
  const auto dp = derivative(p.coefficients());
  const auto roots = polynomial_roots(dp);
  double spread = 1;
  for (const auto& r : roots) spread = std::max(spread, std::abs(r));
  const double coarse = std::max(1e-2 * spread, cluster_radius);

  std::vector<CriticalPoint> out;
  for (const auto& group : link_roots(roots, coarse))
    resolve_group(group, coarse, cluster_radius, out);
  for (auto& c : out) {
    // A root of p' of multiplicity k is a simple root of p^(k); polish there.
    auto lower = p.coefficients();
    for (int j = 0; j < c.local_degree - 1; ++j) lower = derivative(lower);
    const auto upper = derivative(lower);
    for (int k = 0; k < 4; ++k) {
      const Complex d = horner(upper, c.point);
      if (d == Complex(0)) break;
      c.point -= horner(lower, c.point) / d;
    }
    if (std::abs(horner(dp, c.point)) > 1e-9 * scale_at(dp, c.point))
      throw Error(ErrorCode::RootFindingDiverged,
                  "critical point residual above tolerance");
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.point.real() != b.point.real()) return a.point.real() < b.point.real();
    return a.point.imag() < b.point.imag();
  });
  return out;
}

}  // namespace distgraph
