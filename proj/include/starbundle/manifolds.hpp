#pragma once

#include <functional>
#include <memory>
#include <string>

#include "starbundle/lie_core.hpp"

namespace starbundle {

/// An embedded manifold in R^N given by residual-valued constraint and
/// tangency maps. The catalog instances are the unit circle, the unit
/// sphere, and the affine plane {z = 1} in homogeneous coordinates.
class ManifoldDescriptor {
public:
  using ConstraintFn = std::function<double(const Vector&)>;
  using TangencyFn = std::function<double(const Vector&, const Vector&)>;

  ManifoldDescriptor(std::string name, int ambient_dim, Vector base_point,
                     ConstraintFn constraint, TangencyFn tangency)
      : name_(std::move(name)),
        ambient_dim_(ambient_dim),
        base_point_(std::move(base_point)),
        constraint_(std::move(constraint)),
        tangency_(std::move(tangency)) {}

  const std::string& name() const { return name_; }
  int ambient_dim() const { return ambient_dim_; }
  const Vector& base_point() const { return base_point_; }
  double constraint_residual(const Vector& x) const { return constraint_(x); }
  double tangency_residual(const Vector& x, const Vector& v) const {
    return tangency_(x, v);
  }

private:
  std::string name_;
  int ambient_dim_;
  Vector base_point_;
  ConstraintFn constraint_;
  TangencyFn tangency_;
};

using ManifoldPtr = std::shared_ptr<const ManifoldDescriptor>;

ManifoldPtr make_unit_circle();      // S^1 in R^2, base point (1, 0)
ManifoldPtr make_unit_sphere();      // S^2 in R^3, base point (0, 0, 1)
ManifoldPtr make_euclidean_plane();  // {z = 1} in R^3, base point (0, 0, 1)

/// Point of the manifold; construction enforces the constraint.
class EmbeddedManifoldPoint {
public:
  EmbeddedManifoldPoint(ManifoldPtr manifold, Vector coords);

  const ManifoldPtr& manifold() const { return manifold_; }
  const Vector& coords() const { return coords_; }

private:
  ManifoldPtr manifold_;
  Vector coords_;
};

/// Tangent vector at a point; construction enforces tangency.
class EmbeddedTangentVector {
public:
  EmbeddedTangentVector(EmbeddedManifoldPoint base, Vector vec);
  static EmbeddedTangentVector zero(const ManifoldPtr& manifold,
                                    const Vector& at);

  const EmbeddedManifoldPoint& base() const { return base_; }
  const Vector& vec() const { return vec_; }

  double distance(const EmbeddedTangentVector& other) const {
    return (base_.coords() - other.base_.coords()).norm() +
           (vec_ - other.vec_).norm();
  }

private:
  EmbeddedManifoldPoint base_;
  Vector vec_;
};

}  // namespace starbundle
