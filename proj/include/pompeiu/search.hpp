#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "pompeiu/geometry.hpp"
#include "pompeiu/linsys.hpp"

namespace pompeiu {

// Witness-search instance: forcing f(target) = 0 for every f annihilated by
// the weighted copy equations.  The weight sum must be nonzero; otherwise
// every constant function survives and no certificate can exist.
class Problem {
 public:
  Problem(std::size_t dimension, std::vector<Point> base,
          std::vector<ComplexElem> weights, Point target,
          FieldDescriptor descriptor);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Point>& base() const { return base_; }
  const std::vector<ComplexElem>& weights() const { return weights_; }
  const Point& target() const { return target_; }
  const FieldDescriptor& descriptor() const { return descriptor_; }

 private:
  std::size_t dimension_;
  std::vector<Point> base_;
  std::vector<ComplexElem> weights_;
  Point target_;
  FieldDescriptor descriptor_;
};

struct SearchBudget {
  std::size_t max_placements = 64;
  std::size_t max_points = 256;
  std::size_t rotation_pool_size = 12;
};

struct WitnessStats {
  std::size_t witness_size = 0;
  std::size_t placement_count = 0;  // rows cited by the certificate
  std::size_t placements_explored = 0;
};

struct ExhaustedReport {
  std::size_t placements_explored = 0;
  std::size_t points_interned = 0;
  bool saturated = false;  // enumeration closed before the budget did
};

// Either a verified certificate (with the realized placements and the point
// store behind its ids) or an explicitly inconclusive exhaustion report.
struct SearchOutcome {
  std::optional<ForcingCertificate> certificate;
  WitnessStats stats;
  ExhaustedReport exhausted;
  std::vector<Placement> placements;  // index == row provenance
  std::vector<SparseRow> rows;
  PointStore store;

  bool found() const { return certificate.has_value(); }
};

// Deterministic rotation supply: identity, gamma(1), gamma(2), ... embedded in
// coordinate planes; for quadratic towers, tangent-half-angle unit vectors
// with surd parameters sqrt(d)/j; then Cayley rotations with small integer
// parameters.  Deduplicated and truncated to `size`.
std::vector<RotationMatrix> rotation_pool(const FieldDescriptor& desc,
                                          std::size_t k, std::size_t size);

SearchOutcome witness_search(const Problem& problem, const SearchBudget& budget);

// Greedily drops cited rows in ascending provenance order while the remainder
// still forces the target; the result verifies and cites no more rows.
ForcingCertificate minimize_witness(const std::vector<SparseRow>& rows,
                                    const ForcingCertificate& cert);

}  // namespace pompeiu
