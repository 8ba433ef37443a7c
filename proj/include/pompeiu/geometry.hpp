#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pompeiu/field.hpp"

namespace pompeiu {

// Exact point of the ambient space, coordinates in one field tower.
struct Point {
  std::vector<FieldElem> coords;

  std::size_t dimension() const { return coords.size(); }
  bool operator==(const Point& o) const { return coords == o.coords; }
  bool operator<(const Point& o) const { return coords < o.coords; }

  friend Point operator+(const Point& p, const Point& q);
  friend Point operator-(const Point& p, const Point& q);
};

// Exact squared Euclidean distance.
FieldElem squared_distance(const Point& p, const Point& q);

// Rational point of the unit circle: re^2 + im^2 = 1 exactly.
struct UnitComplex {
  BigRational re;
  BigRational im;

  UnitComplex(BigRational re_, BigRational im_);
  bool operator==(const UnitComplex&) const = default;
  bool operator<(const UnitComplex& o) const {
    return re < o.re || (re == o.re && im < o.im);
  }
};

// ((1-k^2) + 2k i)/(1+k^2), the rational unit-circle point for parameter k.
UnitComplex gamma(long k);

// Unit vector ((1-t^2)/(1+t^2), 2t/(1+t^2)) for a field tangent parameter t;
// entries live in t's tower.  Feeds the quad-field rotation pool.
std::pair<FieldElem, FieldElem> halfangle_unit(const FieldElem& t);

// Exact special orthogonal matrix: Q^T Q = I, det Q = +1, checked on
// construction.
class RotationMatrix {
 public:
  explicit RotationMatrix(std::vector<std::vector<FieldElem>> entries);

  static RotationMatrix identity(std::size_t k);
  // Complex-multiplication form [[re,-im],[im,re]] acting on the plane.
  static RotationMatrix from_unit(const UnitComplex& u);
  static RotationMatrix from_unit_entries(const FieldElem& re,
                                          const FieldElem& im);

  std::size_t dimension() const { return entries_.size(); }
  const FieldElem& at(std::size_t i, std::size_t j) const {
    return entries_[i][j];
  }
  const std::vector<std::vector<FieldElem>>& entries() const {
    return entries_;
  }

  Point apply(const Point& p) const;
  RotationMatrix transpose() const;

  bool operator==(const RotationMatrix& o) const {
    return entries_ == o.entries_;
  }
  bool operator<(const RotationMatrix& o) const {
    return entries_ < o.entries_;
  }

 private:
  std::vector<std::vector<FieldElem>> entries_;
};

FieldElem exact_determinant(const std::vector<std::vector<FieldElem>>& m);

// Cayley transform (I-A)^-1 (I+A) of the skew-symmetric matrix with the given
// strictly-upper-triangle parameters in row-major order (k(k-1)/2 values).
RotationMatrix cayley_rotation(std::size_t k,
                               const std::vector<BigRational>& upper);

// Identity except rows/columns i,j carrying (re, im; -im, re).
RotationMatrix embed_planar_rotation(const UnitComplex& u, std::size_t i,
                                     std::size_t j, std::size_t k);

// x -> Q x + t.
struct RigidMotion {
  RotationMatrix rotation;
  Point translation;

  Point apply(const Point& p) const;
  bool operator==(const RigidMotion& o) const {
    return rotation == o.rotation && translation == o.translation;
  }
};

using PointId = std::size_t;

// Exact interning: identical coordinates map to one id, ids dense in
// insertion order.  No tolerance anywhere.
class PointStore {
 public:
  PointId intern(const Point& p);
  std::optional<PointId> find(const Point& p) const;
  const Point& point(PointId id) const { return points_.at(id); }
  std::size_t size() const { return points_.size(); }

 private:
  std::map<Point, PointId> index_;
  std::vector<Point> points_;
};

// A realized congruent copy of the base tuple: motion plus interned images.
struct Placement {
  RigidMotion motion;
  std::vector<PointId> image_ids;
};

Point apply_motion(const RigidMotion& m, const Point& p);

Placement realize_placement(const std::vector<Point>& base,
                            const RigidMotion& m, PointStore& store);

// The unique orientation-preserving planar motion with phi(base[j1]) = p and
// phi(base[j2]) = q, if the squared distances match exactly and the induced
// rotation stays in the field tower; otherwise nullopt.
std::optional<RigidMotion> anchored_motion_2d(const std::vector<Point>& base,
                                              std::size_t j1, std::size_t j2,
                                              const Point& p, const Point& q);

}  // namespace pompeiu
