#pragma once

#include <string>
#include <vector>

#include "distgraph/components.hpp"
#include "distgraph/dynamics.hpp"

namespace distgraph {

inline constexpr int kDefaultResolution = 1024;

struct OracleOptions {
  int resolution = kDefaultResolution;
  bool check_stability = false;  // recount every depth at twice the resolution
  unsigned workers = 0;          // 0: one per hardware thread
};

struct DepthCounts {
  int depth = 0;
  int regions = 0;
  int boundaries = 0;
  int resolution = 0;  // after any automatic doubling
  bool resolved = true;  // false: too fine for the grid even after doubling
};

// Counts of one depth band, on a box fitted to its upper level. Doubles the
// resolution once on ResolutionTooCoarse before giving up.
ComponentMap depth_components(const ComplexPolynomial& p,
                              const PortraitAnalysis& analysis, int depth,
                              int resolution, const DynamicsConfig& cfg = {},
                              unsigned workers = 0);

// Flood-fill reading of one compound-number entry: the lobe of critical j
// that holds the forward image of critical i in the ring below c_j.
struct EntryCheck {
  enum class Status { Match, Mismatch, Inconclusive };
  std::size_t critical = 0;
  std::size_t shallower = 0;
  int oracle_ccw = 0;  // arc index read off the grid, 0 when unknown
  int oracle_cw = 0;
  Status status = Status::Inconclusive;
  std::string note;
};

struct ConsistencyReport {
  int depth = 0;
  std::vector<DepthCounts> counts;
  std::vector<EntryCheck> entries;
  std::vector<std::string> failures;

  bool consistent() const { return failures.empty(); }
  int conclusive_entries() const;
};

// Checks the certificate's compound numbers against flood fills for every
// escaping critical point in depth bands 1..depth, plus the band counts of
// depths 0..depth against the ring and boundary-growth pattern and the
// refinement of each band into the one above. A depth whose band stays too
// fine for the grid is reported unresolved and left out of the count checks;
// an unresolved entry band throws ResolutionTooCoarse.
ConsistencyReport consistency_report(const ComplexPolynomial& p,
                                     const InvariantCertificate& cert,
                                     int depth, const OracleOptions& opt = {},
                                     const DynamicsConfig& cfg = {});

// Throws InconsistentCombinatorics naming the first failure.
void require_consistent(const ConsistencyReport& report);

// A copy of cert with one compound-number entry changed, for negative
// controls. Throws Precondition when the graph has no entry to corrupt.
InvariantCertificate corrupt_certificate(const InvariantCertificate& cert);

std::string report_to_json(const ConsistencyReport& report);

}  // namespace distgraph
