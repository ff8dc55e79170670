#include "distgraph/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "distgraph/error.hpp"

namespace distgraph {

namespace {

constexpr double kGridTol = 1e-8;

// Real-valued version of green() with the per-polynomial constants hoisted
// out of the pixel loop.
class PixelGreen {
 public:
  PixelGreen(const ComplexPolynomial& p, const DynamicsConfig& cfg)
      : p_(p),
        m_(p.degree()),
        radius_(p.escape_radius(cfg.esc_radius_factor)),
        c_(p.lower_norm() / std::abs(p.leading())),
        log_lambda_(std::log(std::abs(p.leading())) / (p.degree() - 1)),
        guard_(std::exp(600.0 / p.degree())),
        max_iter_(cfg.max_iter) {}

  double operator()(Complex z) const {
    double shrink = 1;
    for (int k = 0; std::norm(z) < radius_ * radius_; ++k) {
      if (k >= max_iter_) return GridField::kNonEscaping;
      z = p_(z);
      shrink /= m_;
    }
    double sum = 0, weight = 1.0 / m_;
    const double tol = kGridTol / shrink;
    for (Complex w = z; c_ > 0 && 4 * c_ / std::abs(w) * weight > tol &&
                        std::abs(w) < guard_;
         w = p_(w), weight /= m_)
      sum += 0.5 * std::log(std::norm(p_.leading_ratio(w))) * weight;
    return (log_lambda_ + std::log(std::abs(z)) + sum) * shrink;
  }

 private:
  const ComplexPolynomial& p_;
  int m_;
  double radius_, c_, log_lambda_, guard_;
  int max_iter_;
};

std::vector<double> evaluate_rows(const ComplexPolynomial& p, const Box& box,
                                  int resolution, const DynamicsConfig& cfg,
                                  unsigned workers) {
  std::vector<double> values(static_cast<std::size_t>(resolution) * resolution);
  const double h = 2 * box.half_width / resolution;
  const Complex origin = box.center - Complex(box.half_width, box.half_width);
  // Each row is written by exactly one worker, so the result does not
  // depend on the worker count.
  const PixelGreen pixel(p, cfg);
  std::atomic<int> next_row{0};
  auto work = [&] {
    for (int iy = next_row++; iy < resolution; iy = next_row++) {
      for (int ix = 0; ix < resolution; ++ix) {
        const Complex z = origin + Complex((ix + 0.5) * h, (iy + 0.5) * h);
        values[static_cast<std::size_t>(iy) * resolution + ix] =
            pixel(z);
      }
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return values;
}

}  // namespace

GridField::GridField(Box box, int resolution, std::vector<double> values)
    : box_(box), resolution_(resolution), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(resolution) * resolution)
    throw Error(ErrorCode::Precondition, "grid value count mismatch");
}

Complex GridField::pixel_center(int ix, int iy) const {
  const double h = pixel_size();
  return box_.center - Complex(box_.half_width, box_.half_width) +
         Complex((ix + 0.5) * h, (iy + 0.5) * h);
}

std::optional<std::pair<int, int>> GridField::pixel_of(Complex z) const {
  const Complex rel = z - box_.center + Complex(box_.half_width, box_.half_width);
  const double h = pixel_size();
  const double fx = std::floor(rel.real() / h);
  const double fy = std::floor(rel.imag() / h);
  if (fx < 0 || fy < 0 || fx >= resolution_ || fy >= resolution_)
    return std::nullopt;
  return std::make_pair(static_cast<int>(fx), static_cast<int>(fy));
}

GridField green_grid(const ComplexPolynomial& p, const Box& box,
                     int resolution, const DynamicsConfig& cfg,
                     std::span<const Complex> must_contain, unsigned workers) {
  if (resolution < kMinResolution)
    throw Error(ErrorCode::Precondition, "grid resolution must be >= 64");
  if (!(box.half_width > 0))
    throw Error(ErrorCode::Precondition, "grid box must have positive size");
  for (const auto& z : must_contain) {
    const Complex d = z - box.center;
    if (std::abs(d.real()) > box.half_width ||
        std::abs(d.imag()) > box.half_width)
      throw Error(ErrorCode::Precondition,
                  "grid box does not contain a required point");
  }
  return GridField(box, resolution,
                   evaluate_rows(p, box, resolution, cfg, workers));
}

Box fit_box(const ComplexPolynomial& p, double level,
            std::span<const Complex> include, const DynamicsConfig& cfg) {
  // Outside this radius G(z) >= log|lambda z| - log 2 > level.
  const double lead = std::abs(p.leading());
  const double log_lambda = std::log(lead) / (p.degree() - 1);
  const double radius =
      1.01 * std::max(p.escape_radius(cfg.esc_radius_factor),
                      2.0 * std::exp(level - log_lambda));
  Box search{Complex(0), radius};
  for (const auto& z : include)
    search.half_width = std::max(
        search.half_width,
        1.01 * std::max(std::abs(z.real()), std::abs(z.imag())));

  constexpr int kSamples = 384;
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  // Two passes: a coarse search, then a refinement over the first hull.
  for (int pass = 0; pass < 2; ++pass) {
    const auto field = green_grid(p, search, kSamples, cfg);
    bool found = false;
    for (int iy = 0; iy < kSamples; ++iy)
      for (int ix = 0; ix < kSamples; ++ix) {
        const double g = field.at(ix, iy);
        if (g > level) continue;
        const Complex z = field.pixel_center(ix, iy);
        if (!found) {
          lo_x = hi_x = z.real();
          lo_y = hi_y = z.imag();
          found = true;
        }
        lo_x = std::min(lo_x, z.real());
        hi_x = std::max(hi_x, z.real());
        lo_y = std::min(lo_y, z.imag());
        hi_y = std::max(hi_y, z.imag());
      }
    for (const auto& z : include) {
      if (!found) {
        lo_x = hi_x = z.real();
        lo_y = hi_y = z.imag();
        found = true;
      }
      lo_x = std::min(lo_x, z.real());
      hi_x = std::max(hi_x, z.real());
      lo_y = std::min(lo_y, z.imag());
      hi_y = std::max(hi_y, z.imag());
    }
    if (!found)
      throw Error(ErrorCode::Precondition, "sublevel set not found on grid");
    const double pad = 2 * field.pixel_size();
    const Complex center(0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y));
    const double half =
        0.5 * std::max(hi_x - lo_x, hi_y - lo_y) + pad;
    search = Box{center, half};
  }
  search.half_width *= 1.1;
  return search;
}

}  // namespace distgraph
