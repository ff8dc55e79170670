#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace distgraph {

// Compound number {k1, ..., kl} of a preimage component of the
// fundamental neighborhood: one entry per subdividing critical fiber.
class ComponentNumber {
 public:
  // Throws Precondition if empty or any entry < 1.
  explicit ComponentNumber(std::vector<int> entries);

  const std::vector<int>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  friend auto operator<=>(const ComponentNumber&,
                          const ComponentNumber&) = default;

 private:
  std::vector<int> entries_;
};

// (d, n, {C, C'}) attached to a projected critical point. The pair is
// unordered; it is stored with the lexicographically smaller number first.
class CriticalLabel {
 public:
  CriticalLabel(int local_degree, int depth, ComponentNumber first,
                ComponentNumber second);

  int local_degree() const noexcept { return d_; }
  int depth() const noexcept { return n_; }
  const ComponentNumber& first() const noexcept { return pair_.first; }
  const ComponentNumber& second() const noexcept { return pair_.second; }

  friend bool operator==(const CriticalLabel&, const CriticalLabel&) = default;

 private:
  int d_;
  int n_;
  std::pair<ComponentNumber, ComponentNumber> pair_;
};

bool label_eq(const CriticalLabel& a, const CriticalLabel& b);

// The label every non-empty graph carries at 0: (d, 0, {1}{1}).
CriticalLabel anchor_label(int local_degree);

struct LabelledPoint {
  double position;  // fractional timeline coordinate in [0, 1)
  CriticalLabel label;
};

// Labelled points of [0, 1), kept sorted by (position, depth).
class DistinguishingGraph {
 public:
  DistinguishingGraph() = default;
  explicit DistinguishingGraph(std::vector<LabelledPoint> points);

  const std::vector<LabelledPoint>& points() const noexcept { return points_; }
  bool empty() const noexcept { return points_.empty(); }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  std::vector<LabelledPoint> points_;
};

// Positions closer than this are reported as an ordering hazard.
inline constexpr double kPositionCollision = 1e-9;

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport graph_validate(const DistinguishingGraph& g);

// Labels in ascending (position, depth) order. Throws InvalidGraph.
std::vector<CriticalLabel> canonical_sequence(const DistinguishingGraph& g);

// Equivalence under increasing self-homeomorphisms of [0, 1).
bool graphs_equivalent(const DistinguishingGraph& a,
                       const DistinguishingGraph& b);

struct InvariantCertificate {
  int degree = 2;
  DistinguishingGraph graph;
};

ValidationReport certificate_validate(const InvariantCertificate& c);

bool certificates_equivalent(const InvariantCertificate& a,
                             const InvariantCertificate& b);

// Why two certificates differ, or nullopt when they are equivalent.
struct Difference {
  enum class Kind { Degree, Length, Label };
  Kind kind;
  std::size_t index = 0;  // first differing label for Kind::Label
};

std::optional<Difference> certificate_difference(const InvariantCertificate& a,
                                                 const InvariantCertificate& b);

std::ostream& operator<<(std::ostream& os, const ComponentNumber& c);
std::ostream& operator<<(std::ostream& os, const CriticalLabel& l);

}  // namespace distgraph
