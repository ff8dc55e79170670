#include "distgraph/fraction.hpp"

#include <limits>
#include <ostream>
#include <string>

#include "distgraph/error.hpp"

namespace distgraph {

namespace {

using u128 = unsigned __int128;

std::uint64_t checked_power(std::uint64_t m, int n) {
  std::uint64_t result = 1;
  for (int i = 0; i < n; ++i) {
    if (m != 0 && result > std::numeric_limits<std::uint64_t>::max() / m)
      throw Error(ErrorCode::DepthExceeded,
                  "m^n overflows 64 bits for m=" + std::to_string(m) +
                      ", n=" + std::to_string(n));
    result *= m;
  }
  return result;
}

void require_same_base(const PreimageFraction& a, const PreimageFraction& b) {
  if (a.base() != b.base())
    throw Error(ErrorCode::MixedBase, "fractions use different bases " +
                                          std::to_string(a.base()) + " and " +
                                          std::to_string(b.base()));
}

// Numerator of f over a denominator that is a multiple of f's own.
std::uint64_t scaled_index(const PreimageFraction& f, std::uint64_t den) {
  return f.index() * (den / f.denominator());
}

}  // namespace

PreimageFraction::PreimageFraction(std::uint64_t k, std::uint64_t m, int n)
    : k_(k), m_(m), n_(n), den_(1) {
  if (m < 1) throw Error(ErrorCode::BadBase, "base must be >= 1");
  if (n < 0 || n > kMaxFractionDepth)
    throw Error(ErrorCode::DepthExceeded,
                "depth " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxFractionDepth) + "]");
  den_ = checked_power(m, n);
  if (k >= den_)
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(k) + " not below " +
                    std::to_string(den_));
}

PreimageFraction frac_make(std::int64_t k, std::int64_t m, int n) {
  if (m < 1) throw Error(ErrorCode::BadBase, "base must be >= 1");
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "negative index");
  return PreimageFraction(static_cast<std::uint64_t>(k),
                          static_cast<std::uint64_t>(m), n);
}

bool frac_eq(const PreimageFraction& a, const PreimageFraction& b) {
  require_same_base(a, b);
  return static_cast<u128>(a.index()) * b.denominator() ==
         static_cast<u128>(b.index()) * a.denominator();
}

bool cyclic_between(const PreimageFraction& a, const PreimageFraction& b,
                    const PreimageFraction& c) {
  require_same_base(a, b);
  require_same_base(a, c);
  if (frac_eq(a, b) || frac_eq(a, c) || frac_eq(b, c))
    throw Error(ErrorCode::DegenerateTriple, "two arguments coincide");
  // Same base, so the largest denominator is a multiple of the others.
  std::uint64_t den = a.denominator();
  if (b.denominator() > den) den = b.denominator();
  if (c.denominator() > den) den = c.denominator();
  const std::uint64_t ka = scaled_index(a, den);
  const auto ccw_distance = [&](const PreimageFraction& f) {
    const std::uint64_t kf = scaled_index(f, den);
    return kf >= ka ? kf - ka : den - (ka - kf);
  };
  return ccw_distance(b) < ccw_distance(c);
}

PreimageFraction frac_rotate(const PreimageFraction& a,
                             const PreimageFraction& b) {
  require_same_base(a, b);
  const PreimageFraction& deeper = a.depth() >= b.depth() ? a : b;
  const std::uint64_t den = deeper.denominator();
  const u128 sum =
      static_cast<u128>(scaled_index(a, den)) + scaled_index(b, den);
  return PreimageFraction(static_cast<std::uint64_t>(sum % den), a.base(),
                          deeper.depth());
}

std::ostream& operator<<(std::ostream& os, const PreimageFraction& f) {
  return os << f.index() << '/' << f.denominator();
}

}  // namespace distgraph
