#include "distgraph/angle.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

#include "distgraph/error.hpp"

namespace distgraph {

namespace {

using i128 = __int128;

double wrap(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;
  return r;
}

std::int64_t mod_pow(std::int64_t base, int exp, std::int64_t mod) {
  i128 result = 1 % mod;
  i128 b = ((base % mod) + mod) % mod;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
  }
  return static_cast<std::int64_t>(result);
}

}  // namespace

Angle Angle::rational(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw Error(ErrorCode::Precondition, "angle denominator <= 0");
  Angle a;
  a.exact_ = true;
  std::int64_t r = p % q;
  if (r < 0) r += q;
  const std::int64_t g = std::gcd(r, q);
  a.num_ = r / g;
  a.den_ = q / g;
  a.value_ = static_cast<double>(a.num_) / static_cast<double>(a.den_);
  return a;
}

Angle Angle::real(double turns) {
  Angle a;
  a.exact_ = false;
  a.value_ = wrap(turns);
  return a;
}

Angle Angle::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t used = 0;
      const auto p = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument(text);
      const auto rest = text.substr(slash + 1);
      const auto q = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(text);
      return rational(p, q);
    }
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return real(v);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::Parse, "bad angle literal '" + text + "'");
  }
}

Angle Angle::times_power(std::int64_t m, int s) const {
  if (exact_) {
    const std::int64_t factor = mod_pow(m, s, den_);
    const i128 k = static_cast<i128>(num_) * factor % den_;
    return rational(static_cast<std::int64_t>(k), den_);
  }
  // Reduce after every multiplication to keep the fractional bits.
  double v = value_;
  for (int i = 0; i < s; ++i) v = wrap(v * static_cast<double>(m));
  return real(v);
}

Angle Angle::operator+(const Angle& other) const {
  if (exact_ && other.exact_) {
    const std::int64_t g = std::gcd(den_, other.den_);
    const i128 lcm = static_cast<i128>(den_ / g) * other.den_;
    if (lcm <= static_cast<i128>(INT64_MAX)) {
      const i128 n = static_cast<i128>(num_) * (lcm / den_) +
                     static_cast<i128>(other.num_) * (lcm / other.den_);
      return rational(static_cast<std::int64_t>(n % lcm),
                      static_cast<std::int64_t>(lcm));
    }
  }
  return real(value_ + other.value_);
}

Angle Angle::operator-() const {
  if (exact_) return rational(-num_, den_);
  return real(-value_);
}

std::string Angle::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

Angle ccw_distance(const Angle& a, const Angle& b) { return b - a; }

bool angles_coincide(const Angle& a, const Angle& b, double eps) {
  if (a.exact() && b.exact()) return a.num() == b.num() && a.den() == b.den();
  const double d = ccw_distance(a, b).value();
  return d < eps || d > 1.0 - eps;
}

bool angle_less(const Angle& a, const Angle& b) {
  if (a.exact() && b.exact())
    return static_cast<i128>(a.num()) * b.den() <
           static_cast<i128>(b.num()) * a.den();
  return a.value() < b.value();
}

bool is_multiple_of(const Angle& x, std::int64_t m, double eps) {
  if (x.exact()) return (x.den() == 1) || (m % x.den() == 0);
  const double scaled = x.value() * static_cast<double>(m);
  return std::abs(scaled - std::round(scaled)) < eps * static_cast<double>(m);
}

std::ostream& operator<<(std::ostream& os, const Angle& a) {
  if (a.exact()) return os << a.num() << '/' << a.den();
  return os << a.value();
}

}  // namespace distgraph
