#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "pompeiu/search.hpp"

using namespace pompeiu;

namespace {

Point pq(long xn, long xd, long yn, long yd) {
  return Point{{FieldElem(make_rational(xn, xd)), FieldElem(make_rational(yn, yd))}};
}

Problem unit_pair_problem(long d) {
  return Problem(2, {pq(0, 1, 0, 1), pq(1, 1, 0, 1)},
                 {ComplexElem(1), ComplexElem(1)}, pq(0, 1, 0, 1),
                 d == 0 ? FieldDescriptor{0} : make_descriptor(d));
}

ComplexElem multiplier_of(const ForcingCertificate& cert, RowLabel prov) {
  for (const auto& [label, lambda] : cert.multipliers)
    if (label == prov) return lambda;
  return ComplexElem(0);
}

}  // namespace

TEST_CASE("problem construction rejects zero weight sums") {
  CHECK_THROWS_WITH_AS(
      Problem(2, {pq(0, 1, 0, 1), pq(1, 1, 0, 1)},
              {ComplexElem(1), ComplexElem(-1)}, pq(0, 1, 0, 1),
              FieldDescriptor{0}),
      doctest::Contains("constant"), UsageError);
  CHECK_THROWS_AS(Problem(2, {}, {}, pq(0, 1, 0, 1), FieldDescriptor{0}),
                  UsageError);
  CHECK_THROWS_AS(Problem(3, {pq(0, 1, 0, 1)}, {ComplexElem(1)},
                          pq(0, 1, 0, 1), FieldDescriptor{0}),
                  UsageError);
}

TEST_CASE("rotation_pool enumeration order") {
  FieldDescriptor q{0};
  auto tiny = rotation_pool(q, 2, 1);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0] == RotationMatrix::identity(2));

  auto three = rotation_pool(q, 2, 3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == RotationMatrix::identity(2));
  CHECK(three[1] == RotationMatrix::from_unit(gamma(1L)));
  CHECK(three[2] == RotationMatrix::from_unit(gamma(2L)));

  auto solid = rotation_pool(q, 3, 8);
  CHECK(solid[0] == RotationMatrix::identity(3));
  std::set<RotationMatrix> seen(solid.begin(), solid.end());
  CHECK(seen.size() == solid.size());
  // The pool embeds gamma(1) in every coordinate plane with the
  // complex-multiplication orientation (the transpose of the row layout
  // embed_planar_rotation uses).
  CHECK(seen.count(embed_planar_rotation(gamma(1L), 0, 1, 3).transpose()) == 1);
  CHECK(seen.count(embed_planar_rotation(gamma(1L), 0, 2, 3).transpose()) == 1);
  CHECK(seen.count(embed_planar_rotation(gamma(1L), 1, 2, 3).transpose()) == 1);
}

TEST_CASE("rotation_pool over a quadratic tower includes surd rotations") {
  auto pool = rotation_pool(make_descriptor(3), 2, 12);
  bool has_surd = false;
  for (const RotationMatrix& q : pool)
    for (const auto& row : q.entries())
      for (const FieldElem& e : row)
        if (!e.is_rational_value()) has_surd = true;
  CHECK(has_surd);
}

TEST_CASE("witness_search finds the unit-triangle certificate") {
  SearchOutcome outcome = witness_search(unit_pair_problem(3), SearchBudget{});
  REQUIRE(outcome.found());
  const ForcingCertificate& cert = *outcome.certificate;
  CHECK(cert.target == 0);
  CHECK(cert.witness_points.size() == 3);
  CHECK(cert.multipliers.size() == 3);
  CHECK(outcome.stats.witness_size == 3);
  CHECK(outcome.stats.placement_count == 3);
  CHECK(verify_certificate(outcome.rows, cert));
  // The three multipliers are +-1/2 with product -1/8 (two pluses, one minus).
  ComplexElem product(1);
  for (const auto& [prov, lam] : cert.multipliers) {
    CHECK((lam == ComplexElem(FieldElem(make_rational(1, 2))) ||
           lam == ComplexElem(FieldElem(make_rational(-1, 2)))));
    product *= lam;
  }
  CHECK(product == ComplexElem(FieldElem(make_rational(-1, 8))));
  // Every witness point is the image of a cited placement row.
  for (const auto& [prov, lam] : cert.multipliers) {
    for (PointId id : outcome.placements.at(prov).image_ids)
      CHECK(std::binary_search(cert.witness_points.begin(),
                               cert.witness_points.end(), id));
  }
}

TEST_CASE("witness_search singleton base needs one identity placement") {
  Problem problem(2, {pq(0, 1, 0, 1)}, {ComplexElem(1)}, pq(0, 1, 0, 1),
                  FieldDescriptor{0});
  SearchOutcome outcome = witness_search(problem, SearchBudget{});
  REQUIRE(outcome.found());
  CHECK(outcome.certificate->multipliers.size() == 1);
  CHECK(multiplier_of(*outcome.certificate, 0) == ComplexElem(1));
  CHECK(outcome.certificate->witness_points == std::vector<VarId>{0});
}

TEST_CASE("witness_search over Q with a tiny budget is inconclusive") {
  SearchBudget tiny;
  tiny.max_placements = 6;
  tiny.max_points = 12;
  tiny.rotation_pool_size = 3;
  SearchOutcome outcome = witness_search(unit_pair_problem(0), tiny);
  CHECK_FALSE(outcome.found());
  CHECK(outcome.exhausted.placements_explored > 0);
}

TEST_CASE("witness_search is deterministic and budget-monotone") {
  SearchOutcome a = witness_search(unit_pair_problem(3), SearchBudget{});
  SearchOutcome b = witness_search(unit_pair_problem(3), SearchBudget{});
  REQUIRE(a.found());
  REQUIRE(b.found());
  CHECK(a.certificate->multipliers == b.certificate->multipliers);
  CHECK(a.certificate->witness_points == b.certificate->witness_points);
  CHECK(a.stats.placements_explored == b.stats.placements_explored);

  SearchBudget bigger;
  bigger.max_placements = 128;
  bigger.max_points = 512;
  bigger.rotation_pool_size = 12;
  SearchOutcome c = witness_search(unit_pair_problem(3), bigger);
  REQUIRE(c.found());
  CHECK(c.certificate->witness_points == a.certificate->witness_points);
}

TEST_CASE("minimize_witness drops redundant rows and verifies") {
  auto cq = [](long n, long d) {
    return ComplexElem(FieldElem(make_rational(n, d)));
  };
  std::vector<SparseRow> rows = {
      make_row({{0, cq(1, 1)}, {1, cq(1, 1)}}, 0),
      make_row({{0, cq(1, 1)}, {1, cq(1, 1)}}, 1),  // duplicate edge
      make_row({{1, cq(1, 1)}, {2, cq(1, 1)}}, 2),
      make_row({{2, cq(1, 1)}, {0, cq(1, 1)}}, 3),
  };
  ForcingCertificate fat;
  fat.target = 0;
  fat.multipliers = {{0, cq(1, 4)}, {1, cq(1, 4)}, {2, cq(-1, 2)}, {3, cq(1, 2)}};
  fat.witness_points = {0, 1, 2};
  REQUIRE(verify_certificate(rows, fat));

  ForcingCertificate slim = minimize_witness(rows, fat);
  CHECK(slim.multipliers.size() == 3);
  CHECK(verify_certificate(rows, slim));
  // Exhaustive oracle: no 2-row subset of the triangle forces the target.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      EliminationState state;
      state.add_row(rows[i]);
      state.add_row(rows[j]);
      CHECK_FALSE(state.forcing_certificate(0).has_value());
    }
  }
  // Already-minimal input passes through unchanged.
  CHECK(minimize_witness(rows, slim).multipliers == slim.multipliers);

  ForcingCertificate bogus = fat;
  bogus.multipliers[0].second = cq(7, 1);
  CHECK_THROWS_AS(minimize_witness(rows, bogus), UsageError);
}
