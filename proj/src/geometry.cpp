#include "pompeiu/geometry.hpp"

namespace pompeiu {

Point operator+(const Point& p, const Point& q) {
  if (p.dimension() != q.dimension())
    throw UsageError("point dimension mismatch");
  Point r;
  r.coords.reserve(p.dimension());
  for (std::size_t i = 0; i < p.dimension(); ++i)
    r.coords.push_back(p.coords[i] + q.coords[i]);
  return r;
}

Point operator-(const Point& p, const Point& q) {
  if (p.dimension() != q.dimension())
    throw UsageError("point dimension mismatch");
  Point r;
  r.coords.reserve(p.dimension());
  for (std::size_t i = 0; i < p.dimension(); ++i)
    r.coords.push_back(p.coords[i] - q.coords[i]);
  return r;
}

FieldElem squared_distance(const Point& p, const Point& q) {
  Point diff = p - q;
  FieldElem acc = 0;
  for (const auto& c : diff.coords) acc += c * c;
  return acc;
}

UnitComplex::UnitComplex(BigRational re_, BigRational im_)
    : re(std::move(re_)), im(std::move(im_)) {
  if (re * re + im * im != 1)
    throw UsageError("unit complex requires re^2 + im^2 = 1 exactly");
}

UnitComplex gamma(long k) {
  if (k < 1) throw UsageError("gamma requires k >= 1");
  const BigInt kk = k;
  const BigInt den = 1 + kk * kk;
  return UnitComplex(make_rational(1 - kk * kk, den), make_rational(2 * kk, den));
}

std::pair<FieldElem, FieldElem> halfangle_unit(const FieldElem& t) {
  FieldElem den = FieldElem(1) + t * t;
  if (den.is_zero()) throw UsageError("halfangle parameter with 1 + t^2 = 0");
  FieldElem inv = den.inverse();
  return {(FieldElem(1) - t * t) * inv, (FieldElem(2) * t) * inv};
}

FieldElem exact_determinant(const std::vector<std::vector<FieldElem>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<FieldElem>> a = m;
  FieldElem det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return FieldElem(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    FieldElem inv = a[col][col].inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col].is_zero()) continue;
      FieldElem f = a[row][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  return det;
}

RotationMatrix::RotationMatrix(std::vector<std::vector<FieldElem>> entries)
    : entries_(std::move(entries)) {
  const std::size_t k = entries_.size();
  if (k == 0) throw UsageError("empty rotation matrix");
  for (const auto& row : entries_)
    if (row.size() != k) throw UsageError("rotation matrix must be square");
  // Q^T Q = I, checked exactly.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      FieldElem dot = 0;
      for (std::size_t r = 0; r < k; ++r) dot += entries_[r][i] * entries_[r][j];
      if (dot != FieldElem(i == j ? 1 : 0))
        throw UsageError("rotation matrix is not orthogonal");
    }
  }
  if (exact_determinant(entries_) != FieldElem(1))
    throw UsageError("rotation matrix must have determinant +1");
}

RotationMatrix RotationMatrix::identity(std::size_t k) {
  std::vector<std::vector<FieldElem>> e(k, std::vector<FieldElem>(k, FieldElem(0)));
  for (std::size_t i = 0; i < k; ++i) e[i][i] = 1;
  return RotationMatrix(std::move(e));
}

RotationMatrix RotationMatrix::from_unit(const UnitComplex& u) {
  return from_unit_entries(FieldElem(u.re), FieldElem(u.im));
}

RotationMatrix RotationMatrix::from_unit_entries(const FieldElem& re,
                                                 const FieldElem& im) {
  return RotationMatrix({{re, -im}, {im, re}});
}

Point RotationMatrix::apply(const Point& p) const {
  if (p.dimension() != dimension())
    throw UsageError("rotation/point dimension mismatch");
  Point r;
  r.coords.resize(dimension(), FieldElem(0));
  for (std::size_t i = 0; i < dimension(); ++i)
    for (std::size_t j = 0; j < dimension(); ++j)
      r.coords[i] += entries_[i][j] * p.coords[j];
  return r;
}

RotationMatrix RotationMatrix::transpose() const {
  const std::size_t k = dimension();
  std::vector<std::vector<FieldElem>> e(k, std::vector<FieldElem>(k, FieldElem(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) e[j][i] = entries_[i][j];
  return RotationMatrix(std::move(e));
}

RotationMatrix cayley_rotation(std::size_t k,
                               const std::vector<BigRational>& upper) {
  if (upper.size() != k * (k - 1) / 2)
    throw UsageError("cayley_rotation expects k(k-1)/2 parameters");
  std::vector<std::vector<FieldElem>> a(k, std::vector<FieldElem>(k, FieldElem(0)));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      a[i][j] = FieldElem(upper[idx]);
      a[j][i] = -a[i][j];
      ++idx;
    }
  }
  // Solve (I - A) Q = (I + A) column by column by exact elimination.
  std::vector<std::vector<FieldElem>> lhs(k, std::vector<FieldElem>(k)),
      rhs(k, std::vector<FieldElem>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      lhs[i][j] = FieldElem(i == j ? 1 : 0) - a[i][j];
      rhs[i][j] = FieldElem(i == j ? 1 : 0) + a[i][j];
    }
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && lhs[piv][col].is_zero()) ++piv;
    if (piv == k) throw UsageError("cayley_rotation: singular I - A");
    std::swap(lhs[piv], lhs[col]);
    std::swap(rhs[piv], rhs[col]);
    FieldElem inv = lhs[col][col].inverse();
    for (std::size_t j = 0; j < k; ++j) {
      lhs[col][j] *= inv;
      rhs[col][j] *= inv;
    }
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || lhs[row][col].is_zero()) continue;
      FieldElem f = lhs[row][col];
      for (std::size_t j = 0; j < k; ++j) {
        lhs[row][j] -= f * lhs[col][j];
        rhs[row][j] -= f * rhs[col][j];
      }
    }
  }
  return RotationMatrix(std::move(rhs));
}

RotationMatrix embed_planar_rotation(const UnitComplex& u, std::size_t i,
                                     std::size_t j, std::size_t k) {
  if (!(i < j && j < k)) throw UsageError("embed_planar_rotation: need i < j < k");
  std::vector<std::vector<FieldElem>> e(k, std::vector<FieldElem>(k, FieldElem(0)));
  for (std::size_t r = 0; r < k; ++r) e[r][r] = 1;
  e[i][i] = FieldElem(u.re);
  e[i][j] = FieldElem(u.im);
  e[j][i] = -FieldElem(u.im);
  e[j][j] = FieldElem(u.re);
  return RotationMatrix(std::move(e));
}

Point RigidMotion::apply(const Point& p) const {
  return rotation.apply(p) + translation;
}

Point apply_motion(const RigidMotion& m, const Point& p) { return m.apply(p); }

PointId PointStore::intern(const Point& p) {
  auto it = index_.find(p);
  if (it != index_.end()) return it->second;
  const PointId id = points_.size();
  index_.emplace(p, id);
  points_.push_back(p);
  return id;
}

std::optional<PointId> PointStore::find(const Point& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Placement realize_placement(const std::vector<Point>& base,
                            const RigidMotion& m, PointStore& store) {
  Placement pl{m, {}};
  pl.image_ids.reserve(base.size());
  for (const auto& a : base) pl.image_ids.push_back(store.intern(m.apply(a)));
  return pl;
}

std::optional<RigidMotion> anchored_motion_2d(const std::vector<Point>& base,
                                              std::size_t j1, std::size_t j2,
                                              const Point& p, const Point& q) {
  if (j1 == j2) throw UsageError("anchored_motion_2d: j1 == j2");
  if (base.at(j1).dimension() != 2)
    throw UsageError("anchored_motion_2d is planar only");
  const Point u = base[j2] - base[j1];
  FieldElem norm = u.coords[0] * u.coords[0] + u.coords[1] * u.coords[1];
  if (norm.is_zero()) throw UsageError("anchored_motion_2d: coincident anchors");
  if (squared_distance(p, q) != squared_distance(base[j1], base[j2]))
    return std::nullopt;
  const Point w = q - p;
  // Rotation [[c,-s],[s,c]] with c u1 - s u2 = w1, s u1 + c u2 = w2.
  FieldElem inv = norm.inverse();
  FieldElem c = (u.coords[0] * w.coords[0] + u.coords[1] * w.coords[1]) * inv;
  FieldElem s = (u.coords[0] * w.coords[1] - u.coords[1] * w.coords[0]) * inv;
  RotationMatrix rot = RotationMatrix::from_unit_entries(c, s);
  Point t = p - rot.apply(base[j1]);
  return RigidMotion{std::move(rot), std::move(t)};
}

}  // namespace pompeiu
