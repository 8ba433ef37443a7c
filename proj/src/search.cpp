#include "pompeiu/search.hpp"

#include <deque>
#include <set>
#include <tuple>

namespace pompeiu {

Problem::Problem(std::size_t dimension, std::vector<Point> base,
                 std::vector<ComplexElem> weights, Point target,
                 FieldDescriptor descriptor)
    : dimension_(dimension),
      base_(std::move(base)),
      weights_(std::move(weights)),
      target_(std::move(target)),
      descriptor_(descriptor) {
  if (base_.empty()) throw UsageError("problem needs at least one base point");
  if (base_.size() != weights_.size())
    throw UsageError("one weight per base point required");
  for (const auto& p : base_)
    if (p.dimension() != dimension_)
      throw UsageError("base point dimension mismatch");
  if (target_.dimension() != dimension_)
    throw UsageError("target dimension mismatch");
  ComplexElem sum = 0;
  for (const auto& c : weights_) sum += c;
  if (sum.is_zero())
    throw UsageError(
        "weight sum must be nonzero: with sum zero every constant function "
        "satisfies all copy equations and nothing can be forced");
}

std::vector<RotationMatrix> rotation_pool(const FieldDescriptor& desc,
                                          std::size_t k, std::size_t size) {
  if (size < 1) throw UsageError("rotation_pool needs size >= 1");
  if (k < 2) throw UsageError("rotation_pool needs dimension >= 2");

  std::vector<RotationMatrix> pool;
  std::set<RotationMatrix> seen;
  auto push = [&](const RotationMatrix& q) {
    if (pool.size() < size && seen.insert(q).second) pool.push_back(q);
  };
  auto push_planar = [&](const FieldElem& re, const FieldElem& im) {
    if (k == 2) {
      push(RotationMatrix::from_unit_entries(re, im));
      return;
    }
    for (std::size_t i = 0; i < k && pool.size() < size; ++i) {
      for (std::size_t j = i + 1; j < k && pool.size() < size; ++j) {
        std::vector<std::vector<FieldElem>> e(
            k, std::vector<FieldElem>(k, FieldElem(0)));
        for (std::size_t r = 0; r < k; ++r) e[r][r] = 1;
        e[i][i] = re;
        e[i][j] = -im;
        e[j][i] = im;
        e[j][j] = re;
        push(RotationMatrix(std::move(e)));
      }
    }
  };

  push(RotationMatrix::identity(k));
  for (long m = 1; m <= 3 && pool.size() < size; ++m) {
    UnitComplex g = gamma(m);
    push_planar(FieldElem(g.re), FieldElem(g.im));
  }
  if (!desc.is_rational()) {
    // Surd tangent parameters sqrt(d)/j reach rotations the rational gammas
    // cannot, e.g. the 60-degree rotation over Q(sqrt 3).
    for (long j = 1; j <= 4 && pool.size() < size; ++j) {
      FieldElem t(BigRational(0), make_rational(1, j), desc.d);
      auto [re, im] = halfangle_unit(t);
      push_planar(re, im);
    }
  }
  const std::size_t slots = k * (k - 1) / 2;
  for (long m = 1; m <= 3 && pool.size() < size; ++m) {
    for (std::size_t s = 0; s < slots && pool.size() < size; ++s) {
      std::vector<BigRational> upper(slots, BigRational(0));
      upper[s] = m;
      push(cayley_rotation(k, upper));
    }
  }
  for (long m = 4; pool.size() < size; ++m) {
    UnitComplex g = gamma(m);
    push_planar(FieldElem(g.re), FieldElem(g.im));
  }
  return pool;
}

namespace {

struct MotionLess {
  bool operator()(const RigidMotion& a, const RigidMotion& b) const {
    if (!(a.rotation == b.rotation)) return a.rotation < b.rotation;
    return a.translation < b.translation;
  }
};

}  // namespace

SearchOutcome witness_search(const Problem& problem,
                             const SearchBudget& budget) {
  SearchOutcome out;
  const std::vector<Point>& base = problem.base();
  const std::size_t n = base.size();
  const PointId target_id = out.store.intern(problem.target());

  const std::vector<RotationMatrix> pool = rotation_pool(
      problem.descriptor(), problem.dimension(), budget.rotation_pool_size);

  EliminationState state;
  std::set<RigidMotion, MotionLess> realized;

  // Candidate streams, breadth-first on point creation order.
  std::deque<std::pair<PointId, std::size_t>> anchor_queue;  // (point, rot idx)
  std::deque<std::tuple<PointId, PointId, std::size_t, std::size_t>>
      pair_queue;  // (p, q, j1, j2)

  std::size_t points_queued = 0;
  auto enqueue_new_points = [&] {
    for (; points_queued < out.store.size(); ++points_queued) {
      const PointId pid = points_queued;
      for (std::size_t r = 0; r < pool.size(); ++r)
        anchor_queue.emplace_back(pid, r);
      if (problem.dimension() != 2 || n < 2) continue;
      for (PointId other = 0; other < pid; ++other) {
        for (std::size_t j1 = 0; j1 < n; ++j1) {
          for (std::size_t j2 = 0; j2 < n; ++j2) {
            if (j1 == j2) continue;
            pair_queue.emplace_back(other, pid, j1, j2);
            pair_queue.emplace_back(pid, other, j1, j2);
          }
        }
      }
    }
  };
  enqueue_new_points();

  bool budget_hit = false;
  bool found = false;
  // Realizes one placement, streams its row, queries the certificate.
  auto try_motion = [&](const RigidMotion& motion) {
    if (!realized.insert(motion).second) return;  // already realized
    if (out.placements.size() >= budget.max_placements) {
      budget_hit = true;
      return;
    }
    const RowLabel label = out.placements.size();
    Placement pl = realize_placement(base, motion, out.store);
    std::vector<std::pair<VarId, ComplexElem>> terms;
    for (std::size_t j = 0; j < n; ++j)
      terms.emplace_back(pl.image_ids[j], problem.weights()[j]);
    SparseRow row = make_row(std::move(terms), label);
    out.placements.push_back(std::move(pl));
    out.rows.push_back(row);
    state.add_row(row);
    enqueue_new_points();
    if (out.store.size() > budget.max_points) budget_hit = true;
    if (auto cert = state.forcing_certificate(target_id)) {
      out.certificate = std::move(cert);
      found = true;
    }
  };

  while (!found && !budget_hit &&
         (!anchor_queue.empty() || !pair_queue.empty())) {
    if (!anchor_queue.empty()) {
      auto [pid, ridx] = anchor_queue.front();
      anchor_queue.pop_front();
      const RotationMatrix& q = pool[ridx];
      RigidMotion motion{q, out.store.point(pid) - q.apply(base[0])};
      try_motion(motion);
    }
    if (found || budget_hit) break;
    if (!pair_queue.empty()) {
      auto [pid, qid, j1, j2] = pair_queue.front();
      pair_queue.pop_front();
      auto motion = anchored_motion_2d(base, j1, j2, out.store.point(pid),
                                       out.store.point(qid));
      if (motion) try_motion(*motion);
    }
  }

  out.exhausted.placements_explored = out.placements.size();
  out.exhausted.points_interned = out.store.size();
  out.exhausted.saturated =
      !found && !budget_hit && anchor_queue.empty() && pair_queue.empty();
  out.stats.placements_explored = out.placements.size();

  if (found) {
    if (!verify_certificate(out.rows, *out.certificate))
      throw std::logic_error("witness_search produced a non-verifying certificate");
    out.certificate = minimize_witness(out.rows, *out.certificate);
    out.stats.witness_size = out.certificate->witness_points.size();
    out.stats.placement_count = out.certificate->multipliers.size();
  }
  return out;
}

ForcingCertificate minimize_witness(const std::vector<SparseRow>& rows,
                                    const ForcingCertificate& cert) {
  if (!verify_certificate(rows, cert))
    throw UsageError("minimize_witness: input certificate does not verify");

  std::set<RowLabel> kept;
  for (const auto& [label, lam] : cert.multipliers)
    if (!lam.is_zero()) kept.insert(label);

  auto solve_with = [&](const std::set<RowLabel>& labels)
      -> std::optional<ForcingCertificate> {
    EliminationState state;
    for (const auto& r : rows)
      if (labels.count(r.provenance)) state.add_row(r);
    return state.forcing_certificate(cert.target);
  };

  ForcingCertificate best = cert;
  for (RowLabel label : std::set<RowLabel>(kept)) {
    std::set<RowLabel> trial = kept;
    trial.erase(label);
    if (auto smaller = solve_with(trial)) {
      kept = std::move(trial);
      best = std::move(*smaller);
    }
  }
  if (!verify_certificate(rows, best))
    throw std::logic_error("minimize_witness produced a non-verifying certificate");
  return best;
}

}  // namespace pompeiu
