#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pompeiu/field.hpp"

namespace pompeiu {

using VarId = std::size_t;
using RowLabel = std::size_t;  // placement id or equation label

// Sparse homogeneous equation sum(coeff * x_id) = 0; ids strictly increasing,
// no zero coefficients stored.
struct SparseRow {
  std::vector<std::pair<VarId, ComplexElem>> terms;
  RowLabel provenance = 0;
};

// Builds a row from unsorted/duplicated terms: merges equal ids, drops zeros.
SparseRow make_row(std::vector<std::pair<VarId, ComplexElem>> terms,
                   RowLabel provenance);

enum class AddRowResult { kReducedToZero, kNewPivot };

// Multipliers proving the unit row at `target` is an exact combination of the
// cited original rows; any f satisfying those equations has f(target) = 0.
struct ForcingCertificate {
  VarId target = 0;
  std::vector<std::pair<RowLabel, ComplexElem>> multipliers;
  std::vector<VarId> witness_points;  // sorted ids of all cited rows
};

// Incremental exact echelon form over ComplexElem.  Every reduced row carries
// its expression as a combination of original rows, so membership queries
// read certificates straight off the ledger.  Pivot = lowest id, first-come
// row wins ties.
class EliminationState {
 public:
  AddRowResult add_row(const SparseRow& row);

  std::optional<ForcingCertificate> forcing_certificate(VarId target) const;

  // Ledger soundness check: reduced row == recorded combination of originals.
  bool ledger_consistent() const;

  std::size_t rank() const { return reduced_.size(); }

 private:
  struct ReducedRow {
    std::vector<std::pair<VarId, ComplexElem>> terms;  // pivot coeff 1
    std::map<RowLabel, ComplexElem> combination;
  };

  std::vector<ReducedRow> reduced_;
  std::map<VarId, std::size_t> pivot_of_;
  std::vector<SparseRow> originals_;
};

// Independent re-check: recomputes sum(lambda * row) from scratch and compares
// with the unit row at the target.  Shares no state with EliminationState.
bool verify_certificate(const std::vector<SparseRow>& rows,
                        const ForcingCertificate& cert,
                        std::string* diagnostic = nullptr);

// det of the s x s matrix (z_j^k), k = 1..s, via the closed product form
// (prod z_j) * prod_{i<j} (z_j - z_i).  Entries must be distinct and nonzero.
template <typename Scalar>
Scalar vandermonde_det(const std::vector<Scalar>& z) {
  if (z.empty()) throw UsageError("vandermonde_det of empty list");
  Scalar det = 1;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (z[j].is_zero()) throw UsageError("vandermonde_det: zero entry");
    for (std::size_t i = 0; i < j; ++i) {
      if (z[i] == z[j]) throw UsageError("vandermonde_det: repeated entry");
      det = det * (z[j] - z[i]);
    }
    det = det * z[j];
  }
  return det;
}

// General affine system (rows with right-hand sides) for infeasible cores.
struct GenSystem {
  std::vector<std::pair<SparseRow, ComplexElem>> rows;
};

// Deletion-minimal infeasible row subset (indices into the system).
struct InfeasibleCore {
  std::vector<std::size_t> row_indices;
};

// Exact feasibility of the subsystem given by `subset` (all rows if empty
// optional semantics are not needed: pass every index).
bool subsystem_feasible(const GenSystem& sys,
                        const std::vector<std::size_t>& subset);

// nullopt if feasible, else a deletion-minimal core (greedy deletion filter
// in ascending row-index order).
std::optional<InfeasibleCore> infeasible_core(const GenSystem& sys);

// Lattice tuple for the simple-similarity demo.
using LatticePoint = std::vector<long long>;

// Generates the rows sum_j c_j * x_{b + kappa * a_j} = 0 over the given
// translation and dilation ranges and searches them for a forcing certificate
// at `target`.  Returns the certificate together with the generated rows and
// the lattice points behind each variable id.
struct Prop1Result {
  std::optional<ForcingCertificate> certificate;
  std::vector<SparseRow> rows;
  std::vector<LatticePoint> points;  // id -> lattice point
};

Prop1Result prop1_force(const std::vector<LatticePoint>& base,
                        const std::vector<ComplexElem>& weights,
                        const LatticePoint& target,
                        const std::vector<LatticePoint>& translations,
                        const std::vector<long long>& dilations);

}  // namespace pompeiu
