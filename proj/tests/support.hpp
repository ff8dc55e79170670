#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "distgraph/dynamics.hpp"
#include "distgraph/error.hpp"
#include "distgraph/graph.hpp"
#include "distgraph/portrait.hpp"

namespace support {

using distgraph::Complex;
using distgraph::ErrorCode;

template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const distgraph::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline distgraph::ComponentNumber random_number(std::mt19937_64& rng,
                                                std::size_t len, int max_entry) {
  std::uniform_int_distribution<int> entry(1, max_entry);
  std::vector<int> v(len);
  for (auto& x : v) x = entry(rng);
  return distgraph::ComponentNumber(v);
}

inline distgraph::CriticalLabel random_label(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(2, 3), n(0, 2), len(1, 3);
  const auto l = static_cast<std::size_t>(len(rng));
  return distgraph::CriticalLabel(d(rng), n(rng), random_number(rng, l, 2),
                                  random_number(rng, l, 2));
}

// Valid graph: anchor at 0 plus a few labelled points at distinct positions.
inline distgraph::DistinguishingGraph random_graph(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 3), d(2, 3);
  std::uniform_real_distribution<double> pos(0.01, 0.99);
  const int extra = count(rng);
  if (extra == 0 && rng() % 4 == 0) return {};
  std::vector<distgraph::LabelledPoint> pts{{0.0, distgraph::anchor_label(d(rng))}};
  for (int i = 0; i < extra; ++i) pts.push_back({pos(rng), random_label(rng)});
  return distgraph::DistinguishingGraph(pts);
}

// Monic cubic z^3 + a z + b with both critical points escaping at distinct
// levels, drawn until one qualifies.
inline distgraph::ComplexPolynomial random_escaping_cubic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-4, 4);
  for (;;) {
    const Complex a(u(rng), u(rng)), b(u(rng), u(rng));
    distgraph::ComplexPolynomial p({b, a, 0, 1});
    try {
      const auto census = distgraph::critical_census(p);
      if (census.size() != 2 || !census[0].escaping || !census[1].escaping)
        continue;
      const double g0 = census[0].level.value, g1 = census[1].level.value;
      if (std::abs(std::log(g0 / g1)) < 1e-3) continue;
      (void)distgraph::invariant_of(p);
      return p;
    } catch (const distgraph::Error&) {
      continue;
    }
  }
}

inline Complex random_unit_scale(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r(0.3, 3.0), t(0, 6.283185307179586);
  return std::polar(r(rng), t(rng));
}

}  // namespace support

namespace support {

// Symbolic portrait with random co-angles; each critical's co-angles are d
// of the m preimages of a random image angle.
inline distgraph::CriticalPortrait random_portrait(std::mt19937_64& rng) {
  using namespace distgraph;
  std::uniform_real_distribution<double> unit(0, 1), gap(0.05, 1.3);
  CriticalPortrait p;
  p.degree = 2 + static_cast<int>(rng() % 3);
  int budget = p.degree - 1;
  double t = 0;
  bool first = true;
  while (budget > 0) {
    const int d = 2 + static_cast<int>(rng() % budget);
    budget -= d - 1;
    const double image = unit(rng);
    if (first) p.base_angle = Angle::real(image);
    std::vector<int> slots(p.degree);
    for (int j = 0; j < p.degree; ++j) slots[j] = j;
    std::shuffle(slots.begin(), slots.end(), rng);
    CriticalSpec c;
    c.local_degree = d;
    c.depth = static_cast<int>(std::floor(t));
    c.level_frac = t - c.depth;
    for (int j = 0; j < d; ++j)
      c.co_angles.push_back(Angle::real((image + slots[j]) / p.degree));
    p.criticals.push_back(c);
    t += gap(rng);
    first = false;
    if (rng() % 3 == 0) break;
  }
  return p;
}

// Redraws until the portrait is realizable and clear of arc boundaries.
inline distgraph::CriticalPortrait random_valid_portrait(std::mt19937_64& rng) {
  for (;;) {
    auto p = random_portrait(rng);
    try {
      distgraph::build_certificate(p);
      return p;
    } catch (const distgraph::Error&) {
    }
  }
}

}  // namespace support
