#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace distgraph {

// Tolerance for every angular comparison on inexact angles.
inline constexpr double kAngleEps = 1e-6;

// A point of the circle R/Z, either an exact rational p/q or a double.
class Angle {
 public:
  Angle() = default;
  // Reduced into [0, 1). Throws Precondition for q <= 0.
  static Angle rational(std::int64_t p, std::int64_t q);
  static Angle real(double turns);
  // Accepts "p/q" (exact) or a decimal literal.
  static Angle parse(const std::string& text);

  bool exact() const noexcept { return exact_; }
  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return value_; }

  // m^s * angle mod 1.
  Angle times_power(std::int64_t m, int s) const;
  Angle operator+(const Angle& other) const;
  Angle operator-() const;
  Angle operator-(const Angle& other) const { return *this + (-other); }

  std::string to_string() const;

 private:
  bool exact_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double value_ = 0.0;
};

// Counterclockwise distance from a to b, in [0, 1).
Angle ccw_distance(const Angle& a, const Angle& b);

// Exact equality for two exact angles, circular distance < eps otherwise.
bool angles_coincide(const Angle& a, const Angle& b, double eps = kAngleEps);

// Strict ordering of [0,1) representatives; exact when both are exact.
bool angle_less(const Angle& a, const Angle& b);

// Whether x is (within eps) an integer multiple of 1/m.
bool is_multiple_of(const Angle& x, std::int64_t m, double eps = kAngleEps);

std::ostream& operator<<(std::ostream& os, const Angle& a);

}  // namespace distgraph
