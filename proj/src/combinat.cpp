#include "pompeiu/combinat.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pompeiu/field.hpp"

namespace pompeiu {

void CopySystem::validate() const {
  const std::size_t n = tuple_size();
  for (const auto& copy : copies) {
    if (copy.size() != n)
      throw UsageError("copy system: copies of unequal tuple size");
    std::set<std::size_t> distinct(copy.begin(), copy.end());
    if (distinct.size() != copy.size())
      throw UsageError("copy system: copy with repeated point id");
    for (std::size_t id : copy)
      if (id >= point_count)
        throw UsageError("copy system: point id out of range");
  }
}

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

struct ColorSearcher {
  const CopySystem& sys;
  std::size_t d;
  std::size_t quota;
  std::vector<std::size_t> colors;
  // counts[copy][color]
  std::vector<std::vector<std::size_t>> counts;
  std::vector<std::size_t> assigned_in_copy;
  std::vector<std::vector<std::size_t>> copies_of_point;

  bool feasible_after(std::size_t copy_idx) const {
    const auto& cnt = counts[copy_idx];
    const std::size_t n = sys.copies[copy_idx].size();
    std::size_t remaining = n - assigned_in_copy[copy_idx];
    std::size_t deficit = 0;
    for (std::size_t c = 0; c < d; ++c) {
      if (cnt[c] > quota) return false;
      deficit += quota - cnt[c];
    }
    return deficit == remaining;
  }

  void unassign(std::size_t point, std::size_t color,
                std::size_t touched_upto) {
    for (std::size_t i = 0; i < touched_upto; ++i) {
      std::size_t ci = copies_of_point[point][i];
      --counts[ci][color];
      --assigned_in_copy[ci];
    }
    colors[point] = kUnassigned;
  }

  bool try_assign(std::size_t point, std::size_t color) {
    colors[point] = color;
    for (std::size_t i = 0; i < copies_of_point[point].size(); ++i) {
      std::size_t ci = copies_of_point[point][i];
      ++counts[ci][color];
      ++assigned_in_copy[ci];
      if (!feasible_after(ci)) {
        unassign(point, color, i + 1);
        return false;
      }
    }
    return true;
  }

  bool solve(std::size_t point) {
    if (point == sys.point_count) return true;
    // Color-permutation symmetry break: point 0 only ever gets color 0.
    const std::size_t last_color = point == 0 ? 0 : d - 1;
    for (std::size_t c = 0; c <= last_color; ++c) {
      if (try_assign(point, c)) {
        if (solve(point + 1)) return true;
        unassign(point, c, copies_of_point[point].size());
      }
    }
    return false;
  }
};

}  // namespace

std::optional<Coloring> color_search(const CopySystem& sys, std::size_t d) {
  sys.validate();
  const std::size_t n = sys.tuple_size();
  if (d < 2) throw UsageError("color_search needs d >= 2");
  if (n == 0 || n % d != 0)
    throw UsageError("color_search needs d dividing the tuple size");

  ColorSearcher s{sys, d, n / d, {}, {}, {}, {}};
  s.colors.assign(sys.point_count, kUnassigned);
  s.counts.assign(sys.copies.size(), std::vector<std::size_t>(d, 0));
  s.assigned_in_copy.assign(sys.copies.size(), 0);
  s.copies_of_point.assign(sys.point_count, {});
  for (std::size_t ci = 0; ci < sys.copies.size(); ++ci)
    for (std::size_t id : sys.copies[ci]) s.copies_of_point[id].push_back(ci);

  if (sys.point_count == 0) return Coloring{{}};
  if (!s.solve(0)) return std::nullopt;
  return Coloring{std::move(s.colors)};
}

namespace {

enum class Membership : unsigned char { kUndecided, kIn, kOut };

struct TransversalSearcher {
  const CopySystem& sys;
  std::size_t m;
  std::vector<Membership> status;
  std::vector<std::size_t> in_count;
  std::vector<std::size_t> out_count;
  std::vector<std::vector<std::size_t>> copies_of_point;

  struct Trail {
    std::vector<std::size_t> decided;  // points set during one branch
  };

  bool set_point(std::size_t point, Membership val, Trail& trail) {
    if (status[point] != Membership::kUndecided) return status[point] == val;
    status[point] = val;
    trail.decided.push_back(point);
    // Count the point into all of its copies before any early exit, so undo
    // (which decrements every copy of every trailed point) stays balanced.
    for (std::size_t ci : copies_of_point[point]) {
      if (val == Membership::kIn)
        ++in_count[ci];
      else
        ++out_count[ci];
    }
    for (std::size_t ci : copies_of_point[point]) {
      const std::size_t n = sys.copies[ci].size();
      if (in_count[ci] > m || out_count[ci] > n - m) return false;
      // Pinned quota: force the rest of the copy.
      if (in_count[ci] == m) {
        for (std::size_t id : sys.copies[ci]) {
          if (status[id] == Membership::kUndecided &&
              !set_point(id, Membership::kOut, trail))
            return false;
        }
      }
      if (out_count[ci] == n - m) {
        for (std::size_t id : sys.copies[ci]) {
          if (status[id] == Membership::kUndecided &&
              !set_point(id, Membership::kIn, trail))
            return false;
        }
      }
    }
    return true;
  }

  void undo(const Trail& trail) {
    for (std::size_t point : trail.decided) {
      Membership val = status[point];
      for (std::size_t ci : copies_of_point[point]) {
        if (val == Membership::kIn)
          --in_count[ci];
        else
          --out_count[ci];
      }
      status[point] = Membership::kUndecided;
    }
  }

  bool solve() {
    std::size_t point = 0;
    while (point < sys.point_count &&
           status[point] != Membership::kUndecided)
      ++point;
    if (point == sys.point_count) return true;
    for (Membership val : {Membership::kIn, Membership::kOut}) {
      Trail trail;
      if (set_point(point, val, trail) && solve()) return true;
      undo(trail);
    }
    return false;
  }
};

}  // namespace

std::optional<Transversal> transversal_search(const CopySystem& sys,
                                              std::size_t m) {
  sys.validate();
  const std::size_t n = sys.tuple_size();
  if (m < 1 || m >= n)
    throw UsageError("transversal_search needs 1 <= m < tuple size");

  TransversalSearcher s{sys, m, {}, {}, {}, {}};
  s.status.assign(sys.point_count, Membership::kUndecided);
  s.in_count.assign(sys.copies.size(), 0);
  s.out_count.assign(sys.copies.size(), 0);
  s.copies_of_point.assign(sys.point_count, {});
  for (std::size_t ci = 0; ci < sys.copies.size(); ++ci)
    for (std::size_t id : sys.copies[ci]) s.copies_of_point[id].push_back(ci);

  if (!s.solve()) return std::nullopt;
  Transversal t;
  for (std::size_t id = 0; id < sys.point_count; ++id)
    if (s.status[id] == Membership::kIn) t.members.push_back(id);
  return t;
}

long steinhaus_1d_count(long n, const BigRational& t, int sign) {
  if (n < 1) throw UsageError("steinhaus_1d_count needs n >= 1");
  long count = 0;
  for (long j = 1; j <= n; ++j) {
    BigRational x = BigRational(sign * j) + t;
    // x in S  iff  x - n*floor(x/n) lies in [0,1).
    BigInt fl = floor_div(rat_num(x), rat_den(x) * n);
    BigRational frac = x - BigRational(fl * n);
    if (frac >= 0 && frac < 1) ++count;
  }
  return count;
}

double exp_copy_residual(const std::vector<double>& a,
                         std::complex<double> lambda, std::size_t samples) {
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const double t = -5.0 + 10.0 * static_cast<double>(s) /
                                static_cast<double>(samples ? samples : 1);
    std::complex<double> sum = 0.0;
    for (double aj : a) sum += std::exp(lambda * (t + aj));
    worst = std::max(worst, std::abs(sum) / std::abs(std::exp(lambda * t)));
  }
  return worst;
}

ExpCounterexampleReport exp_counterexample_1d(const std::vector<BigRational>& a,
                                              double tolerance,
                                              std::size_t samples) {
  if (a.size() < 2) throw UsageError("exp_counterexample_1d needs n >= 2");
  std::vector<double> av;
  av.reserve(a.size());
  for (const auto& r : a)
    av.push_back(static_cast<double>(rat_num(r)) /
                 static_cast<double>(rat_den(r)));

  // Newton runs on the shifted sum G(z) = sum exp((a_j - a_min) z), which has
  // the same roots as g but a constant term, so |G| cannot drift to zero as
  // Re(z) -> -inf without an actual root.
  const double a_min = *std::min_element(av.begin(), av.end());
  std::vector<double> shifted;
  for (double aj : av) shifted.push_back(aj - a_min);
  auto g = [&](std::complex<double> z) {
    std::complex<double> sum = 0.0;
    for (double bj : shifted) sum += std::exp(bj * z);
    return sum;
  };
  auto dg = [&](std::complex<double> z) {
    std::complex<double> sum = 0.0;
    for (double bj : shifted) sum += bj * std::exp(bj * z);
    return sum;
  };

  ExpCounterexampleReport report;
  report.note =
      "the real exponent exp(2*pi*x/n) does not annihilate copies of "
      "{1,...,n}; the verified counterexample is the imaginary exponent "
      "exp(2*pi*i*x/n)";

  const double spread = *std::max_element(av.begin(), av.end()) -
                        *std::min_element(av.begin(), av.end());
  const double pi = std::acos(-1.0);
  // Deterministic grid of Newton starts over a strip of nonreal candidates.
  for (int re_step = 0; re_step <= 4 && !report.converged; ++re_step) {
    for (int im_step = 1; im_step <= 40 && !report.converged; ++im_step) {
      std::complex<double> z(-1.0 + 0.5 * re_step,
                             im_step * pi / (2.0 * std::max(spread, 1.0)));
      bool ok = false;
      for (int iter = 0; iter < 80; ++iter) {
        std::complex<double> gz = g(z);
        if (std::abs(gz) < tolerance) {
          ok = true;
          break;
        }
        std::complex<double> dz = dg(z);
        if (std::abs(dz) < 1e-300) break;
        z -= gz / dz;
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
      }
      if (!ok || std::abs(z.imag()) < 1e-9) continue;  // real roots never occur
      report.lambda = z;
      report.max_residual = exp_copy_residual(av, z, samples);
      report.converged = report.max_residual < tolerance * 1e3;
    }
  }
  return report;
}

}  // namespace pompeiu
