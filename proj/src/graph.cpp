#include "distgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "distgraph/error.hpp"

namespace distgraph {

ComponentNumber::ComponentNumber(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw Error(ErrorCode::Precondition, "component number must be non-empty");
  for (int e : entries_)
    if (e < 1)
      throw Error(ErrorCode::Precondition,
                  "component number entries must be >= 1");
}

CriticalLabel::CriticalLabel(int local_degree, int depth, ComponentNumber first,
                             ComponentNumber second)
    : d_(local_degree), n_(depth), pair_(std::move(first), std::move(second)) {
  if (d_ < 2) throw Error(ErrorCode::Precondition, "local degree must be >= 2");
  if (n_ < 0) throw Error(ErrorCode::Precondition, "depth must be >= 0");
  if (pair_.second < pair_.first) std::swap(pair_.first, pair_.second);
}

bool label_eq(const CriticalLabel& a, const CriticalLabel& b) { return a == b; }

CriticalLabel anchor_label(int local_degree) {
  return CriticalLabel(local_degree, 0, ComponentNumber({1}),
                       ComponentNumber({1}));
}

namespace {

bool point_less(const LabelledPoint& a, const LabelledPoint& b) {
  if (a.position != b.position) return a.position < b.position;
  return a.label.depth() < b.label.depth();
}

bool is_anchor_pair(const CriticalLabel& l) {
  const ComponentNumber one({1});
  return l.first() == one && l.second() == one;
}

}  // namespace

DistinguishingGraph::DistinguishingGraph(std::vector<LabelledPoint> points)
    : points_(std::move(points)) {
  std::stable_sort(points_.begin(), points_.end(), point_less);
}

ValidationReport graph_validate(const DistinguishingGraph& g) {
  ValidationReport report;
  const auto& pts = g.points();
  if (pts.empty()) return report;

  for (const auto& p : pts) {
    if (!(p.position >= 0.0 && p.position < 1.0)) {
      std::ostringstream os;
      os << "position " << p.position << " out of range [0,1)";
      report.violations.push_back(os.str());
    }
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const auto& a = pts[i - 1];
    const auto& b = pts[i];
    if (a.position == b.position && a.label.depth() == b.label.depth()) {
      std::ostringstream os;
      os << "duplicate (position, n) = (" << a.position << ", "
         << a.label.depth() << ")";
      report.violations.push_back(os.str());
    } else if (a.position != b.position &&
               std::abs(a.position - b.position) < kPositionCollision) {
      std::ostringstream os;
      os << "AmbiguousOrder: positions " << a.position << " and "
         << b.position << " closer than " << kPositionCollision;
      report.warnings.push_back(os.str());
    }
  }

  const auto anchor = std::find_if(pts.begin(), pts.end(), [](const auto& p) {
    return p.position == 0.0 && p.label.depth() == 0;
  });
  const bool zero_used = std::any_of(
      pts.begin(), pts.end(), [](const auto& p) { return p.position == 0.0; });
  if (!zero_used) {
    report.violations.push_back("0 unlabelled");
  } else if (anchor == pts.end() || !is_anchor_pair(anchor->label)) {
    report.violations.push_back("label at 0 is not (d, 0, {1}{1})");
  }
  return report;
}

std::vector<CriticalLabel> canonical_sequence(const DistinguishingGraph& g) {
  const auto report = graph_validate(g);
  if (!report.ok())
    throw Error(ErrorCode::InvalidGraph, report.violations.front());
  std::vector<CriticalLabel> labels;
  labels.reserve(g.size());
  for (const auto& p : g.points()) labels.push_back(p.label);
  return labels;
}

bool graphs_equivalent(const DistinguishingGraph& a,
                       const DistinguishingGraph& b) {
  // Self-homeomorphisms of [0,1) fix 0 and preserve order, so only the
  // ordered label sequence survives.
  return canonical_sequence(a) == canonical_sequence(b);
}

ValidationReport certificate_validate(const InvariantCertificate& c) {
  auto report = graph_validate(c.graph);
  if (c.degree < 2)
    report.violations.push_back("degree must be >= 2");
  int branching = 0;
  for (const auto& p : c.graph.points()) branching += p.label.local_degree() - 1;
  if (branching > c.degree - 1)
    report.violations.push_back("total branching exceeds degree - 1");
  return report;
}

std::optional<Difference> certificate_difference(
    const InvariantCertificate& a, const InvariantCertificate& b) {
  for (const auto* c : {&a, &b}) {
    const auto report = certificate_validate(*c);
    if (!report.ok())
      throw Error(ErrorCode::InvalidCertificate, report.violations.front());
  }
  if (a.degree != b.degree) return Difference{Difference::Kind::Degree};
  const auto sa = canonical_sequence(a.graph);
  const auto sb = canonical_sequence(b.graph);
  if (sa.size() != sb.size()) return Difference{Difference::Kind::Length};
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (!label_eq(sa[i], sb[i])) return Difference{Difference::Kind::Label, i};
  return std::nullopt;
}

bool certificates_equivalent(const InvariantCertificate& a,
                             const InvariantCertificate& b) {
  return !certificate_difference(a, b).has_value();
}

std::ostream& operator<<(std::ostream& os, const ComponentNumber& c) {
  os << '{';
  for (std::size_t i = 0; i < c.entries().size(); ++i)
    os << (i ? "," : "") << c.entries()[i];
  return os << '}';
}

std::ostream& operator<<(std::ostream& os, const CriticalLabel& l) {
  return os << '(' << l.local_degree() << ',' << l.depth() << ',' << l.first()
            << l.second() << ')';
}

}  // namespace distgraph
