#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pompeiu/rational.hpp"

namespace pompeiu {

// Finite fragment of the family of congruent copies, as pure incidences:
// each copy lists the n distinct point ids it visits.
struct CopySystem {
  std::size_t point_count = 0;
  std::vector<std::vector<std::size_t>> copies;

  std::size_t tuple_size() const {
    return copies.empty() ? 0 : copies.front().size();
  }
  void validate() const;  // throws UsageError on malformed instances
};

struct Coloring {
  std::vector<std::size_t> colors;  // values in 0..d-1, one per point
};

struct Transversal {
  std::vector<std::size_t> members;  // sorted point ids
};

// A d-coloring where every copy carries exactly n/d points of each color, or
// nullopt when the finite fragment obstructs one.  Backtracking over points
// in id order, colors ascending, per-copy quota propagation; point 0 is
// pinned to color 0.
std::optional<Coloring> color_search(const CopySystem& sys, std::size_t d);

// A point set meeting every copy in exactly m points, or nullopt.
// Branches on the undecided point of lowest id, membership first.
std::optional<Transversal> transversal_search(const CopySystem& sys,
                                              std::size_t m);

// |S ∩ {sign·1 + t, …, sign·n + t}| where S is the union of [0,1) + n·Z,
// membership decided exactly over rationals.
long steinhaus_1d_count(long n, const BigRational& t, int sign);

// Floating-point gallery: a root lambda of g(z) = sum_j exp(a_j z) found by
// Newton iteration from a deterministic grid, plus the largest normalized
// copy-sum residual over sampled translations.  This is the one module that
// leaves exact arithmetic.
struct ExpCounterexampleReport {
  std::complex<double> lambda;
  double max_residual = 0.0;
  bool converged = false;
  std::string note;
};

ExpCounterexampleReport exp_counterexample_1d(const std::vector<BigRational>& a,
                                              double tolerance,
                                              std::size_t samples);

// Residual of a given lambda: max over the sampled translations t of
// |sum_j exp(lambda (t + a_j))| / |exp(lambda t)|.
double exp_copy_residual(const std::vector<double>& a,
                         std::complex<double> lambda, std::size_t samples);

}  // namespace pompeiu
