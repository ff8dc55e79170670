#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "distgraph/polynomial.hpp"

namespace distgraph {

// Axis-aligned square of the plane.
struct Box {
  Complex center;
  double half_width = 1;
};

// Per-pixel Green values over a square box; pixel (0, 0) is the lower-left
// corner, rows run upward in imaginary part.
class GridField {
 public:
  static constexpr double kNonEscaping = -1.0;

  GridField(Box box, int resolution, std::vector<double> values);

  const Box& box() const noexcept { return box_; }
  int resolution() const noexcept { return resolution_; }
  double pixel_size() const noexcept { return 2 * box_.half_width / resolution_; }
  double at(int ix, int iy) const { return values_[index(ix, iy)]; }
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * resolution_ + ix;
  }
  Complex pixel_center(int ix, int iy) const;
  // Pixel containing z, if inside the box.
  std::optional<std::pair<int, int>> pixel_of(Complex z) const;
  std::span<const double> values() const noexcept { return values_; }

 private:
  Box box_;
  int resolution_;
  std::vector<double> values_;
};

inline constexpr int kMinResolution = 64;

// Green value of every pixel center (tolerance 1e-8), rows evaluated in
// parallel. Throws Precondition when resolution < 64 or when a point of
// must_contain lies outside the box.
GridField green_grid(const ComplexPolynomial& p, const Box& box,
                     int resolution, const DynamicsConfig& cfg = {},
                     std::span<const Complex> must_contain = {},
                     unsigned workers = 0);

// Square box around {G <= level} and the given points, with 10% margin.
Box fit_box(const ComplexPolynomial& p, double level,
            std::span<const Complex> include = {},
            const DynamicsConfig& cfg = {});

}  // namespace distgraph
