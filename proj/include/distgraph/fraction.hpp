#pragma once

#include <cstdint>
#include <iosfwd>

namespace distgraph {

// Deepest iteration depth accepted when building preimage fractions.
inline constexpr int kMaxFractionDepth = 64;

// Cyclic position k/m^n of a point among the m^n co-preimages
// f^{-n}(f^n(x)) on its neutral fiber; 0/1 is x itself.
class PreimageFraction {
 public:
  // Throws IndexOutOfRange, BadBase or DepthExceeded.
  PreimageFraction(std::uint64_t k, std::uint64_t m, int n);

  std::uint64_t index() const noexcept { return k_; }
  std::uint64_t base() const noexcept { return m_; }
  int depth() const noexcept { return n_; }
  // m^n, overflow-checked at construction.
  std::uint64_t denominator() const noexcept { return den_; }

  double value() const noexcept {
    return static_cast<double>(k_) / static_cast<double>(den_);
  }

 private:
  std::uint64_t k_;
  std::uint64_t m_;
  int n_;
  std::uint64_t den_;
};

PreimageFraction frac_make(std::int64_t k, std::int64_t m, int n);

// Exact equality of k/m^n values. Throws MixedBase for different m.
bool frac_eq(const PreimageFraction& a, const PreimageFraction& b);

// True iff, walking counterclockwise (increasing value mod 1) from a, b is
// met strictly before c. Throws MixedBase, DegenerateTriple.
bool cyclic_between(const PreimageFraction& a, const PreimageFraction& b,
                    const PreimageFraction& c);

// (a + b) mod 1 at the deeper of the two depths.
PreimageFraction frac_rotate(const PreimageFraction& a,
                             const PreimageFraction& b);

std::ostream& operator<<(std::ostream& os, const PreimageFraction& f);

}  // namespace distgraph
