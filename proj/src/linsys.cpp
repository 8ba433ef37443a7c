#include "pompeiu/linsys.hpp"

#include <algorithm>
#include <set>

namespace pompeiu {

namespace {

using TermMap = std::map<VarId, ComplexElem>;

TermMap to_map(const std::vector<std::pair<VarId, ComplexElem>>& terms) {
  TermMap m;
  for (const auto& [id, c] : terms) {
    auto [it, fresh] = m.emplace(id, c);
    if (!fresh) it->second += c;
  }
  for (auto it = m.begin(); it != m.end();)
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
  return m;
}

std::vector<std::pair<VarId, ComplexElem>> to_terms(const TermMap& m) {
  return {m.begin(), m.end()};
}

void axpy(TermMap& acc, const ComplexElem& factor,
          const std::vector<std::pair<VarId, ComplexElem>>& row) {
  if (factor.is_zero()) return;
  for (const auto& [id, c] : row) {
    auto [it, fresh] = acc.emplace(id, factor * c);
    if (!fresh) it->second += factor * c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

SparseRow make_row(std::vector<std::pair<VarId, ComplexElem>> terms,
                   RowLabel provenance) {
  return SparseRow{to_terms(to_map(terms)), provenance};
}

AddRowResult EliminationState::add_row(const SparseRow& row) {
  for (const auto& o : originals_)
    if (o.provenance == row.provenance)
      throw UsageError("duplicate row provenance label");
  originals_.push_back(row);

  TermMap terms = to_map(row.terms);
  std::map<RowLabel, ComplexElem> comb{{row.provenance, ComplexElem(1)}};
  // Reduced rows introduce only ids above their pivot, so an ascending sweep
  // eliminates every pivot id.
  for (;;) {
    auto hit = terms.end();
    for (auto it = terms.begin(); it != terms.end(); ++it) {
      if (pivot_of_.count(it->first)) {
        hit = it;
        break;
      }
    }
    if (hit == terms.end()) break;
    const ReducedRow& red = reduced_[pivot_of_.at(hit->first)];
    ComplexElem factor = -hit->second;
    axpy(terms, factor, red.terms);
    for (const auto& [label, lam] : red.combination) {
      auto [it, fresh] = comb.emplace(label, factor * lam);
      if (!fresh) it->second += factor * lam;
    }
  }
  if (terms.empty()) return AddRowResult::kReducedToZero;

  // Normalize so the pivot (lowest id) carries coefficient 1.
  ComplexElem inv = terms.begin()->second.inverse();
  ReducedRow red;
  for (const auto& [id, c] : terms) red.terms.emplace_back(id, inv * c);
  for (const auto& [label, lam] : comb) {
    ComplexElem scaled = inv * lam;
    if (!scaled.is_zero()) red.combination.emplace(label, scaled);
  }
  pivot_of_.emplace(red.terms.front().first, reduced_.size());
  reduced_.push_back(std::move(red));
  return AddRowResult::kNewPivot;
}

std::optional<ForcingCertificate> EliminationState::forcing_certificate(
    VarId target) const {
  TermMap rem{{target, ComplexElem(1)}};
  std::map<RowLabel, ComplexElem> comb;
  for (;;) {
    auto hit = rem.end();
    for (auto it = rem.begin(); it != rem.end(); ++it) {
      if (pivot_of_.count(it->first)) {
        hit = it;
        break;
      }
    }
    if (hit == rem.end()) break;
    const ReducedRow& red = reduced_[pivot_of_.at(hit->first)];
    ComplexElem factor = hit->second;
    axpy(rem, -factor, red.terms);
    for (const auto& [label, lam] : red.combination) {
      auto [it, fresh] = comb.emplace(label, factor * lam);
      if (!fresh) it->second += factor * lam;
    }
  }
  if (!rem.empty()) return std::nullopt;

  ForcingCertificate cert;
  cert.target = target;
  std::set<VarId> witness;
  for (const auto& [label, lam] : comb) {
    if (lam.is_zero()) continue;
    cert.multipliers.emplace_back(label, lam);
    for (const auto& o : originals_) {
      if (o.provenance != label) continue;
      for (const auto& [id, c] : o.terms) witness.insert(id);
    }
  }
  cert.witness_points.assign(witness.begin(), witness.end());
  return cert;
}

bool EliminationState::ledger_consistent() const {
  for (const auto& red : reduced_) {
    TermMap acc;
    for (const auto& [label, lam] : red.combination) {
      const SparseRow* orig = nullptr;
      for (const auto& o : originals_)
        if (o.provenance == label) orig = &o;
      if (!orig) return false;
      axpy(acc, lam, orig->terms);
    }
    if (to_terms(acc) != red.terms) return false;
  }
  return true;
}

bool verify_certificate(const std::vector<SparseRow>& rows,
                        const ForcingCertificate& cert,
                        std::string* diagnostic) {
  std::map<RowLabel, const SparseRow*> by_label;
  for (const auto& r : rows) by_label.emplace(r.provenance, &r);

  TermMap acc;
  std::set<VarId> cited_ids;
  for (const auto& [label, lam] : cert.multipliers) {
    auto it = by_label.find(label);
    if (it == by_label.end()) {
      if (diagnostic) *diagnostic = "certificate cites unknown row provenance";
      return false;
    }
    axpy(acc, lam, it->second->terms);
    if (!lam.is_zero())
      for (const auto& [id, c] : it->second->terms) cited_ids.insert(id);
  }
  if (acc.size() != 1 || acc.begin()->first != cert.target ||
      acc.begin()->second != ComplexElem(1)) {
    if (diagnostic)
      *diagnostic = "multiplier combination is not the unit row at the target";
    return false;
  }
  for (VarId id : cited_ids) {
    if (!std::binary_search(cert.witness_points.begin(),
                            cert.witness_points.end(), id)) {
      if (diagnostic) *diagnostic = "witness point list misses a cited id";
      return false;
    }
  }
  return true;
}

bool subsystem_feasible(const GenSystem& sys,
                        const std::vector<std::size_t>& subset) {
  // Exact elimination on augmented rows; infeasible iff some combination
  // yields 0 = nonzero.
  struct AugRow {
    TermMap terms;
    ComplexElem rhs;
  };
  std::map<VarId, AugRow> pivots;
  for (std::size_t idx : subset) {
    const auto& [row, rhs] = sys.rows.at(idx);
    AugRow cur{to_map(row.terms), rhs};
    for (;;) {
      auto hit = cur.terms.end();
      for (auto it = cur.terms.begin(); it != cur.terms.end(); ++it) {
        if (pivots.count(it->first)) {
          hit = it;
          break;
        }
      }
      if (hit == cur.terms.end()) break;
      const AugRow& red = pivots.at(hit->first);
      ComplexElem factor = -hit->second;
      axpy(cur.terms, factor, to_terms(red.terms));
      cur.rhs += factor * red.rhs;
    }
    if (cur.terms.empty()) {
      if (!cur.rhs.is_zero()) return false;
      continue;
    }
    ComplexElem inv = cur.terms.begin()->second.inverse();
    AugRow norm;
    for (auto& [id, c] : cur.terms) norm.terms.emplace(id, inv * c);
    norm.rhs = inv * cur.rhs;
    pivots.emplace(norm.terms.begin()->first, std::move(norm));
  }
  return true;
}

std::optional<InfeasibleCore> infeasible_core(const GenSystem& sys) {
  std::vector<std::size_t> all(sys.rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (subsystem_feasible(sys, all)) return std::nullopt;

  // Deletion filter in ascending row-index order.
  std::vector<std::size_t> core = all;
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    std::vector<std::size_t> trial;
    for (std::size_t idx : core)
      if (idx != i) trial.push_back(idx);
    if (trial.size() < core.size() && !subsystem_feasible(sys, trial))
      core = std::move(trial);
  }
  return InfeasibleCore{std::move(core)};
}

Prop1Result prop1_force(const std::vector<LatticePoint>& base,
                        const std::vector<ComplexElem>& weights,
                        const LatticePoint& target,
                        const std::vector<LatticePoint>& translations,
                        const std::vector<long long>& dilations) {
  if (base.empty() || base.size() != weights.size())
    throw UsageError("prop1_force: base/weight size mismatch");
  if (translations.empty() || dilations.empty())
    throw UsageError("prop1_force: empty ranges");

  std::map<LatticePoint, VarId> ids;
  Prop1Result out;
  auto intern = [&](const LatticePoint& p) {
    auto [it, fresh] = ids.emplace(p, out.points.size());
    if (fresh) out.points.push_back(p);
    return it->second;
  };
  const VarId target_id = intern(target);

  EliminationState state;
  RowLabel label = 0;
  for (const auto& b : translations) {
    for (long long kappa : dilations) {
      std::vector<std::pair<VarId, ComplexElem>> terms;
      for (std::size_t j = 0; j < base.size(); ++j) {
        LatticePoint img(b.size());
        for (std::size_t i = 0; i < b.size(); ++i)
          img[i] = b[i] + kappa * base[j].at(i);
        terms.emplace_back(intern(img), weights[j]);
      }
      SparseRow row = make_row(std::move(terms), label++);
      out.rows.push_back(row);
      state.add_row(row);
    }
  }
  out.certificate = state.forcing_certificate(target_id);
  return out;
}

}  // namespace pompeiu
