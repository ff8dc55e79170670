#include "distgraph/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "distgraph/error.hpp"

namespace distgraph {

namespace {

constexpr double kTimelineTie = 1e-9;
// Rays attributed to a critical point are traced to just above its level.
constexpr double kLevelLift = 1e-5;
// Relative distance below which two landing rays count as coincident.
constexpr double kRayTie = 1e-6;

std::vector<Angle> crashing_angles(const ComplexPolynomial& p,
                                   const CriticalOrbitRecord& rec,
                                   const DynamicsConfig& cfg) {
  const int m = p.degree();
  const double level = rec.level.value * (1 + kLevelLift);
  std::vector<std::pair<double, Angle>> candidates;
  for (int j = 0; j < m; ++j) {
    const Angle a =
        Angle::real((rec.value_angle.value() + static_cast<double>(j)) / m);
    double dist = std::numeric_limits<double>::infinity();
    try {
      dist = std::abs(trace_ray(p, a, level, cfg) - rec.point);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BranchAmbiguity) throw;
    }
    candidates.emplace_back(dist, a);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  const auto d = static_cast<std::size_t>(rec.local_degree);
  if (candidates.size() < d || !std::isfinite(candidates[d - 1].first))
    throw Error(ErrorCode::BranchAmbiguity, "fewer landing rays than d");

  // Rays that crashed on a shallower critical point continue along a shared
  // gradient line, so several candidates can land at the same spot.
  const double cut = candidates[d - 1].first;
  const auto tied = [&](double dist) {
    return std::abs(dist - cut) <= kRayTie * std::max(cut, 1e-300);
  };
  std::vector<Angle> sure;
  std::vector<Angle> tie;
  std::size_t beyond = 0;
  for (const auto& [dist, a] : candidates) {
    if (tied(dist)) tie.push_back(a);
    else if (dist < cut) sure.push_back(a);
    else break;
    ++beyond;
  }
  if (beyond < candidates.size() &&
      !(cut * 4 < candidates[beyond].first))
    throw Error(ErrorCode::BranchAmbiguity,
                "rays landing at a critical point are not well separated");
  const Angle anchor = sure.empty() ? rec.value_angle : sure.front();
  std::stable_sort(tie.begin(), tie.end(), [&](const Angle& x, const Angle& y) {
    return angle_less(ccw_distance(anchor, x), ccw_distance(anchor, y));
  });
  std::vector<Angle> angles = sure;
  for (std::size_t i = 0; angles.size() < d; ++i) angles.push_back(tie[i]);
  std::sort(angles.begin(), angles.end(), angle_less);
  return angles;
}

}  // namespace

std::vector<CriticalStatus> critical_census(const ComplexPolynomial& p,
                                            const DynamicsConfig& cfg) {
  std::vector<CriticalStatus> out;
  for (const auto& c : critical_points(p)) {
    CriticalStatus s{c, false, {}};
    try {
      s.level = green(p, c.point, cfg.tol_green, cfg);
      s.escaping = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonEscaping) throw;
    }
    out.push_back(s);
  }
  return out;
}

PortraitAnalysis analyze_polynomial(const ComplexPolynomial& p,
                                    const DynamicsConfig& cfg) {
  const int m = p.degree();
  PortraitAnalysis result;
  result.portrait.degree = m;
  result.portrait.base_angle = Angle::real(0);

  std::vector<CriticalOrbitRecord> records;
  for (const auto& s : critical_census(p, cfg)) {
    if (!s.escaping) continue;
    CriticalOrbitRecord r;
    r.point = s.critical.point;
    r.local_degree = s.critical.local_degree;
    r.level = s.level;
    records.push_back(r);
  }
  if (records.empty()) return result;

  // Highest level first; decreasing G is increasing timeline.
  std::stable_sort(records.begin(), records.end(), [](const auto& a,
                                                      const auto& b) {
    return a.level.value > b.level.value;
  });
  const double top = records.front().level.value;
  result.top_level = top;
  for (auto& r : records)
    r.timeline = (std::log(top) - std::log(r.level.value)) / std::log(m);
  records.front().timeline = 0;
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].timeline - records[i - 1].timeline <= kTimelineTie) {
      std::ostringstream os;
      os.precision(17);
      os << "genericity violated: critical points " << records[i - 1].point
         << " and " << records[i].point << " share Green level "
         << records[i].level.value;
      throw Error(ErrorCode::GenericityViolation, os.str());
    }
  }

  for (auto& r : records) {
    r.value_angle = landing_angle(p, p(r.point), cfg);
    r.co_angles = crashing_angles(p, r, cfg);
  }

  result.portrait.base_angle = records.front().value_angle;
  for (const auto& r : records) {
    CriticalSpec spec;
    spec.local_degree = r.local_degree;
    double whole = std::round(r.timeline);
    if (std::abs(r.timeline - whole) >= kTimelineTie)
      whole = std::floor(r.timeline);
    spec.depth = static_cast<int>(whole);
    spec.level_frac = std::max(0.0, r.timeline - whole);
    if (spec.level_frac >= 1.0) spec.level_frac = 0.0;
    spec.co_angles = r.co_angles;
    result.portrait.criticals.push_back(std::move(spec));
  }
  result.records = std::move(records);
  return result;
}

CriticalPortrait portrait_of(const ComplexPolynomial& p,
                             const DynamicsConfig& cfg) {
  return analyze_polynomial(p, cfg).portrait;
}

InvariantCertificate invariant_of(const ComplexPolynomial& p,
                                  const DynamicsConfig& cfg,
                                  Orientation primary) {
  return build_certificate(portrait_of(p, cfg), primary);
}

bool polys_equivalent(const ComplexPolynomial& p, const ComplexPolynomial& q,
                      const DynamicsConfig& cfg) {
  return certificates_equivalent(invariant_of(p, cfg), invariant_of(q, cfg));
}

}  // namespace distgraph
